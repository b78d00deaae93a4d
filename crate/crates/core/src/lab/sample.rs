//! Seeded samples of closed interval sets for the line suites.

use rand::Rng;

use crate::carrier::{q, Bound, IntervalSet};
use crate::ring::RingTag;

/// A random member of the ring: up to three closed pieces with integer endpoints in `[-6, 6]`,
/// the outer ones possibly rays.
pub fn random_closed_set<R: Rng>(rng: &mut R, tag: RingTag) -> IntervalSet {
    loop {
        let mut cuts: Vec<i64> = (0..rng.gen_range(1..=6)).map(|_| rng.gen_range(-6..=6)).collect();
        cuts.sort();
        cuts.dedup();
        let mut set = IntervalSet::empty();
        for pair in cuts.chunks(2) {
            let piece = match pair {
                [a, b] => IntervalSet::closed(q(*a), q(*b)),
                [a] => IntervalSet::point(q(*a)),
                _ => unreachable!(),
            };
            set = set.union(&piece);
        }
        if rng.gen_bool(0.3) {
            let lo = cuts.first().copied().unwrap_or(0) - 1;
            set = set.union(&IntervalSet::closed(Bound::NegInf, q(lo)));
        }
        if rng.gen_bool(0.3) {
            let hi = cuts.last().copied().unwrap_or(0) + 1;
            set = set.union(&IntervalSet::closed(q(hi), Bound::PosInf));
        }
        if tag.contains(&set) {
            return set;
        }
    }
}

/// Disjoint pairs of ring members.
pub fn disjoint_pairs<R: Rng>(rng: &mut R, tag: RingTag, count: usize) -> Vec<(IntervalSet, IntervalSet)> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = random_closed_set(rng, tag);
        let b = random_closed_set(rng, tag);
        if a.is_disjoint(&b) {
            out.push((a, b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_stay_in_the_ring() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for tag in RingTag::ALL {
            for _ in 0..50 {
                let a = random_closed_set(&mut rng, tag);
                assert!(tag.contains(&a), "{a} in {tag}");
            }
        }
        let pairs = disjoint_pairs(&mut rng, RingTag::RomClosed, 20);
        assert!(pairs.iter().all(|(a, b)| a.is_disjoint(b)));
    }
}
