//! All complete rings of subsets of a small carrier.

use crate::gts::enumerate_topologies;
use crate::ring::FiniteRing;

use super::LabError;

pub const MAX_RING_ATOMS: usize = 4;

/// Complete rings on `{0..n}`, sorted by their member lists. They are exactly the closed-set
/// families of the topologies on `n` points.
pub fn enumerate_complete_rings(n: usize) -> Result<Vec<FiniteRing>, LabError> {
    if n > MAX_RING_ATOMS {
        return Err(LabError::BoundExceeded { n, max: MAX_RING_ATOMS });
    }
    let mut rings: Vec<FiniteRing> = enumerate_topologies(n)
        .into_iter()
        .map(|opens| {
            FiniteRing::new(n, opens.iter().map(|u| u.complement(n))).expect("closed sets of a topology form a ring")
        })
        .collect();
    rings.sort_by(|a, b| a.members().cmp(b.members()));
    Ok(rings)
}

/// Every map from `{0..from}` to `{0..to}`, as tables.
pub fn all_tables(from: usize, to: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..from {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..to).map(move |y| {
                    let mut t = t.clone();
                    t.push(y);
                    t
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::AtomSet;

    /// Brute force: every family of subsets containing the empty set and the carrier and
    /// closed under pairwise unions and intersections.
    fn brute(n: usize) -> Vec<Vec<AtomSet>> {
        let inner: Vec<AtomSet> = AtomSet::all(n).filter(|s| !s.is_empty() && *s != AtomSet::full(n)).collect();
        let mut out = Vec::new();
        for code in 0u64..(1 << inner.len()) {
            let mut fam = vec![AtomSet::EMPTY, AtomSet::full(n)];
            fam.extend(inner.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &s)| s));
            fam.sort();
            fam.dedup();
            let closed = fam.iter().all(|&a| {
                fam.iter().all(|&b| fam.binary_search(&a.union(b)).is_ok() && fam.binary_search(&a.intersect(b)).is_ok())
            });
            if closed {
                out.push(fam);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn counts_and_oracle() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_complete_rings(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
        for n in 1..=3 {
            let ours: Vec<Vec<AtomSet>> = enumerate_complete_rings(n).unwrap().iter().map(|r| r.members().to_vec()).collect();
            assert_eq!(ours, brute(n));
        }
        assert_eq!(enumerate_complete_rings(5).unwrap_err(), LabError::BoundExceeded { n: 5, max: 4 });
    }

    #[test]
    fn table_count() {
        assert_eq!(all_tables(3, 2).len(), 8);
        assert_eq!(all_tables(0, 2), vec![Vec::<usize>::new()]);
    }
}
