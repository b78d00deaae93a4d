//! Rings of sets and the base predicates used for Wallman theory.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::carrier::{q, qf, AtomSet, Bound, Interval, IntervalSet, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("family is not closed under {op}: {a} and {b}")]
    NotARing { op: &'static str, a: AtomSet, b: AtomSet },
    #[error("set {0} lies outside the carrier")]
    OutsideCarrier(AtomSet),
    #[error("unknown ring tag `{0}`; expected RomClosed, C0Rom or BoundedRom")]
    UnknownTag(String),
}

/// Finite unions of closed rational intervals, rays and points, in three flavours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingTag {
    /// Every closed interval set, plus the empty set and the line.
    RomClosed,
    /// Closed interval sets that are bounded or unbounded in both directions.
    C0Rom,
    /// Bounded closed interval sets. Does not contain the line.
    BoundedRom,
}

impl RingTag {
    pub const ALL: [RingTag; 3] = [RingTag::RomClosed, RingTag::C0Rom, RingTag::BoundedRom];

    pub fn name(self) -> &'static str {
        match self {
            RingTag::RomClosed => "RomClosed",
            RingTag::C0Rom => "C0Rom",
            RingTag::BoundedRom => "BoundedRom",
        }
    }

    pub fn parse(s: &str) -> Result<Self, RingError> {
        RingTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| RingError::UnknownTag(s.to_string()))
    }

    pub fn contains(self, a: &IntervalSet) -> bool {
        if !a.is_closed() {
            return false;
        }
        match self {
            RingTag::RomClosed => true,
            RingTag::C0Rom => a.is_bounded() || (a.unbounded_below() && a.unbounded_above()),
            RingTag::BoundedRom => a.is_bounded(),
        }
    }

    pub fn is_complete(self) -> bool {
        self.contains(&IntervalSet::empty()) && self.contains(&IntervalSet::full())
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An explicit ring on a finite carrier `{0..n}`, members sorted by bit pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    n: usize,
    members: Vec<AtomSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingOfSets {
    Finite(FiniteRing),
    Interval(RingTag),
}

/// Why a family fails to be a Wallman base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WallmanFailure<S> {
    NotClosedBase { closed: S, point: usize },
    /// Clause (i): not a ring.
    NotRing { a: S, b: S },
    /// Clause (ii): no member separates `point` from `set`.
    Separation { set: S, point: usize },
    /// Clause (iii): disjoint members that cannot be screened.
    Screening { a1: S, a2: S },
}

/// A failure of disjunctivity: no member contains `point` while missing `set`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjunctiveFailure {
    pub set: AtomSet,
    pub point: usize,
}

/// Closes a family under pairwise union and intersection.
pub fn close_lattice(seed: impl IntoIterator<Item = AtomSet>) -> Vec<AtomSet> {
    let mut set: BTreeSet<AtomSet> = seed.into_iter().collect();
    let mut frontier: Vec<AtomSet> = set.iter().copied().collect();
    while let Some(a) = frontier.pop() {
        let snapshot: Vec<AtomSet> = set.iter().copied().collect();
        for b in snapshot {
            for c in [a.union(b), a.intersect(b)] {
                if set.insert(c) {
                    frontier.push(c);
                }
            }
        }
    }
    set.into_iter().collect()
}

impl FiniteRing {
    /// Wraps an explicit family, checking ring closure.
    pub fn new(n: usize, members: impl IntoIterator<Item = AtomSet>) -> Result<Self, RingError> {
        let full = AtomSet::full(n);
        let members: BTreeSet<AtomSet> = members.into_iter().collect();
        for &m in &members {
            if !m.is_subset_of(full) {
                return Err(RingError::OutsideCarrier(m));
            }
        }
        let v: Vec<AtomSet> = members.into_iter().collect();
        for (i, &a) in v.iter().enumerate() {
            for &b in &v[i + 1..] {
                if v.binary_search(&a.union(b)).is_err() {
                    return Err(RingError::NotARing { op: "union", a, b });
                }
                if v.binary_search(&a.intersect(b)).is_err() {
                    return Err(RingError::NotARing { op: "intersection", a, b });
                }
            }
        }
        Ok(FiniteRing { n, members: v })
    }

    /// Least ring containing the generators, plus the empty set and the carrier when `complete`.
    pub fn generate(n: usize, generators: impl IntoIterator<Item = AtomSet>, complete: bool) -> Self {
        let mut seed: Vec<AtomSet> = generators.into_iter().collect();
        if complete {
            seed.push(AtomSet::EMPTY);
            seed.push(AtomSet::full(n));
        }
        FiniteRing { n, members: close_lattice(seed) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> AtomSet {
        AtomSet::full(self.n)
    }

    pub fn members(&self) -> &[AtomSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: AtomSet) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.contains(AtomSet::EMPTY) && self.contains(self.full())
    }

    /// Closed sets of the topology whose subbase is the complements of the members.
    pub fn reference_closed_sets(&self) -> Vec<AtomSet> {
        let mut seed = self.members.clone();
        seed.push(AtomSet::EMPTY);
        seed.push(self.full());
        close_lattice(seed)
    }

    pub fn is_disjunctive(&self) -> Result<(), DisjunctiveFailure> {
        for x in 0..self.n {
            let targets = self.members.iter().copied().chain((0..self.n).map(AtomSet::singleton));
            for a in targets {
                if a.contains(x) {
                    continue;
                }
                if !self.members.iter().any(|c| c.contains(x) && c.is_disjoint(a)) {
                    return Err(DisjunctiveFailure { set: a, point: x });
                }
            }
        }
        Ok(())
    }

    /// Closed-base condition with respect to the reference topology.
    pub fn closed_base_failure(&self) -> Option<(AtomSet, usize)> {
        for a in self.reference_closed_sets() {
            for x in 0..self.n {
                if a.contains(x) {
                    continue;
                }
                if !self.members.iter().any(|c| !c.contains(x) && a.is_subset_of(*c)) {
                    return Some((a, x));
                }
            }
        }
        None
    }

    pub fn is_closed_base(&self) -> bool {
        self.closed_base_failure().is_none()
    }

    pub fn is_complete_closed_base(&self) -> bool {
        self.is_complete() && self.is_closed_base()
    }

    /// Closed base whose members separate any two distinct points.
    pub fn is_t1_closed_base(&self) -> bool {
        self.is_closed_base()
            && (0..self.n).all(|x| {
                (0..self.n).all(|y| {
                    x == y || self.members.iter().any(|c| c.contains(x) && !c.contains(y))
                })
            })
    }

    pub fn wallman_failure(&self) -> Option<WallmanFailure<AtomSet>> {
        if let Some((closed, point)) = self.closed_base_failure() {
            return Some(WallmanFailure::NotClosedBase { closed, point });
        }
        for (i, &a) in self.members.iter().enumerate() {
            for &b in &self.members[i + 1..] {
                if !self.contains(a.union(b)) || !self.contains(a.intersect(b)) {
                    return Some(WallmanFailure::NotRing { a, b });
                }
            }
        }
        let closed = self.reference_closed_sets();
        for x in 0..self.n {
            let targets = (0..self.n).map(AtomSet::singleton).chain(closed.iter().copied());
            for a in targets {
                if a.contains(x) {
                    continue;
                }
                if !self.members.iter().any(|c| c.contains(x) && c.is_disjoint(a)) {
                    return Some(WallmanFailure::Separation { set: a, point: x });
                }
            }
        }
        let full = self.full();
        for &a1 in &self.members {
            for &a2 in &self.members {
                if !a1.is_disjoint(a2) {
                    continue;
                }
                let screened = self.members.iter().any(|&c1| {
                    c1.is_disjoint(a1)
                        && self.members.iter().any(|&c2| c2.is_disjoint(a2) && c1.union(c2) == full)
                });
                if !screened {
                    return Some(WallmanFailure::Screening { a1, a2 });
                }
            }
        }
        None
    }

    pub fn is_wallman_base(&self) -> bool {
        self.wallman_failure().is_none()
    }

    /// Nonempty members with no nonempty proper sub-member.
    pub fn minimal_nonempty(&self) -> Vec<AtomSet> {
        self.members
            .iter()
            .copied()
            .filter(|m| !m.is_empty())
            .filter(|&m| !self.members.iter().any(|&o| !o.is_empty() && o != m && o.is_subset_of(m)))
            .collect()
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// A small positive rational below half the distance from `x` to the closed set `a`, capped at 1.
pub fn gap_radius(a: &IntervalSet, x: &Q) -> Q {
    let mut r = q(1);
    for e in a.endpoints() {
        let d = if &e > x { &e - x } else { x - &e };
        let half = d * qf(1, 2);
        if half < r {
            r = half;
        }
    }
    r
}

/// Disjoint open neighbourhoods of two disjoint closed interval sets, split at gap midpoints.
pub fn split_regions(a1: &IntervalSet, a2: &IntervalSet) -> (IntervalSet, IntervalSet) {
    let mut comps: Vec<(&Interval, u8)> =
        a1.parts().iter().map(|c| (c, 1)).chain(a2.parts().iter().map(|c| (c, 2))).collect();
    comps.sort_by(|x, y| x.0.lo.cmp(&y.0.lo));
    let mut cuts: Vec<Q> = Vec::new();
    let mut labels: Vec<u8> = Vec::new();
    for (i, (c, l)) in comps.iter().enumerate() {
        if i == 0 {
            labels.push(*l);
            continue;
        }
        let (p, pl) = comps[i - 1];
        if pl != *l {
            let hi = p.hi.finite().expect("disjoint closed sets have finite inner ends").clone();
            let lo = c.lo.finite().expect("disjoint closed sets have finite inner ends").clone();
            cuts.push((hi + lo) * qf(1, 2));
            labels.push(*l);
        }
    }
    let mut n1 = Vec::new();
    let mut n2 = Vec::new();
    for (k, &l) in labels.iter().enumerate() {
        let lo = if k == 0 { Bound::NegInf } else { Bound::Finite(cuts[k - 1].clone()) };
        let hi = if k == cuts.len() { Bound::PosInf } else { Bound::Finite(cuts[k].clone()) };
        let region = Interval::open(lo, hi);
        if l == 1 { n1.push(region) } else { n2.push(region) }
    }
    if labels.is_empty() {
        return (IntervalSet::empty(), IntervalSet::full());
    }
    let n1 = IntervalSet::normalize(n1).expect("regions");
    let n2 = IntervalSet::normalize(n2).expect("regions");
    if a1.is_empty() {
        return (IntervalSet::empty(), IntervalSet::full());
    }
    if a2.is_empty() {
        return (IntervalSet::full(), IntervalSet::empty());
    }
    (n1, n2)
}

/// Shrinks an open neighbourhood of a bounded set to a bounded one.
pub fn bounded_window(n: &IntervalSet, a: &IntervalSet) -> IntervalSet {
    match (a.lowest(), a.highest()) {
        (Some(l), Some(h)) => match (l.lo.finite(), h.hi.finite()) {
            (Some(lo), Some(hi)) => n.intersect(&IntervalSet::open(lo - q(1), hi + q(1))),
            _ => n.clone(),
        },
        _ => IntervalSet::empty(),
    }
}

impl RingTag {
    /// A bounded closed interval around `x` missing the closed set `a`.
    pub fn separating_member(self, a: &IntervalSet, x: &Q) -> Option<IntervalSet> {
        if a.contains_point(x) {
            return None;
        }
        let r = gap_radius(a, x);
        let c = IntervalSet::closed(x - &r, x + &r);
        debug_assert!(c.is_disjoint(a));
        Some(c)
    }

    /// A member containing the closed set `a` and missing `x`.
    pub fn closed_base_member(self, a: &IntervalSet, x: &Q) -> Option<IntervalSet> {
        if a.contains_point(x) {
            return None;
        }
        match self {
            RingTag::BoundedRom => self.contains(a).then(|| a.clone()),
            _ => {
                let r = gap_radius(a, x);
                Some(IntervalSet::open(x - &r, x + &r).complement())
            }
        }
    }

    /// Screening pair `(C1, C2)` with `C1 ∪ C2 = X` and `Ai ∩ Ci = ∅`.
    pub fn screen(self, a1: &IntervalSet, a2: &IntervalSet) -> Option<(IntervalSet, IntervalSet)> {
        if !a1.is_disjoint(a2) || !self.contains(a1) || !self.contains(a2) {
            return None;
        }
        let (n1, n2) = split_regions(a1, a2);
        let (c1, c2) = if a1.is_bounded() {
            let w = bounded_window(&n1, a1);
            (w.complement(), w.closure())
        } else if a2.is_bounded() {
            let w = bounded_window(&n2, a2);
            (w.closure(), w.complement())
        } else {
            (n1.complement(), n1.closure())
        };
        (self.contains(&c1) && self.contains(&c2)).then_some((c1, c2))
    }

    /// Wallman base on the line. Clauses (i) and (ii) hold by the witness procedures above;
    /// clause (iii) fails only when the line itself is missing.
    pub fn wallman_failure(self) -> Option<WallmanFailure<IntervalSet>> {
        let (a1, a2) = (IntervalSet::point(q(0)), IntervalSet::point(q(1)));
        match self.screen(&a1, &a2) {
            Some(_) => None,
            None => Some(WallmanFailure::Screening { a1, a2 }),
        }
    }
}

impl RingOfSets {
    pub fn is_complete(&self) -> bool {
        match self {
            RingOfSets::Finite(r) => r.is_complete(),
            RingOfSets::Interval(t) => t.is_complete(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::parse_interval_set as iv;

    fn s(bits: u64) -> AtomSet {
        AtomSet(bits)
    }

    #[test]
    fn generate_two_singletons() {
        let r = FiniteRing::generate(3, [s(0b001), s(0b010)], true);
        assert_eq!(r.members(), &[s(0), s(1), s(2), s(3), s(7)]);
        assert_eq!(FiniteRing::generate(2, [], true).members(), &[s(0), s(3)]);
        assert_eq!(FiniteRing::generate(2, [s(3)], false).members(), &[s(3)]);
    }

    #[test]
    fn completeness() {
        assert!(FiniteRing::generate(2, [], true).is_complete());
        assert!(!RingTag::BoundedRom.is_complete());
        assert!(RingTag::RomClosed.is_complete());
        assert!(RingTag::C0Rom.is_complete());
    }

    #[test]
    fn disjunctive_examples() {
        let power = FiniteRing::new(2, AtomSet::all(2)).unwrap();
        assert!(power.is_disjunctive().is_ok());
        let trivial = FiniteRing::generate(2, [], true);
        assert_eq!(trivial.is_disjunctive(), Err(DisjunctiveFailure { set: s(0b10), point: 0 }));
    }

    #[test]
    fn closed_base_and_wallman() {
        let r = FiniteRing::new(2, [s(0), s(1), s(3)]).unwrap();
        assert!(r.is_closed_base());
        assert_eq!(r.wallman_failure(), Some(WallmanFailure::Separation { set: s(1), point: 1 }));
        let power = FiniteRing::new(3, AtomSet::all(3)).unwrap();
        assert!(power.is_wallman_base());
    }

    #[test]
    fn not_a_ring() {
        assert!(matches!(FiniteRing::new(2, [s(1), s(2)]), Err(RingError::NotARing { .. })));
    }

    #[test]
    fn interval_tags() {
        assert!(RingTag::C0Rom.contains(&iv("[0,1]").unwrap()));
        assert!(!RingTag::C0Rom.contains(&iv("[0,inf)").unwrap()));
        assert!(RingTag::C0Rom.contains(&iv("(-inf,-1] u [1,inf)").unwrap()));
        assert!(!RingTag::RomClosed.contains(&iv("(0,1]").unwrap()));
        assert!(RingTag::RomClosed.wallman_failure().is_none());
        assert!(RingTag::C0Rom.wallman_failure().is_none());
        assert!(RingTag::BoundedRom.wallman_failure().is_some());
    }

    #[test]
    fn gap_split() {
        let (w1, w2) = split_regions(&iv("(-inf,0]").unwrap(), &iv("[1,inf)").unwrap());
        assert_eq!(w1, iv("(-inf,1/2)").unwrap());
        assert_eq!(w2, iv("(1/2,inf)").unwrap());
    }

    #[test]
    fn c0_screen_keeps_members_in_ring() {
        let (c1, c2) = RingTag::C0Rom.screen(&iv("[0,1]").unwrap(), &iv("[2,3]").unwrap()).unwrap();
        assert!(RingTag::C0Rom.contains(&c1) && RingTag::C0Rom.contains(&c2));
        assert!(c1.union(&c2).is_full());
    }
}
