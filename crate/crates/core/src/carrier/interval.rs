//! Exact interval sets over the rational line.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use super::CarrierError;

pub type Q = BigRational;

/// Shorthand for an integer rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// An interval endpoint: a rational or one of the two infinity markers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bound {
    NegInf,
    Finite(Q),
    PosInf,
}

impl Bound {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            Bound::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Bound::Finite(_))
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        use Bound::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl From<Q> for Bound {
    fn from(v: Q) -> Self {
        Bound::Finite(v)
    }
}

impl From<i64> for Bound {
    fn from(v: i64) -> Self {
        Bound::Finite(q(v))
    }
}

/// A single nonempty interval with inclusion flags.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Bound,
    pub lo_closed: bool,
    pub hi: Bound,
    pub hi_closed: bool,
}

impl Interval {
    /// Builds an interval, rejecting empty, inverted and half-open degenerate forms.
    pub fn new(
        lo: impl Into<Bound>,
        lo_closed: bool,
        hi: impl Into<Bound>,
        hi_closed: bool,
    ) -> Result<Self, CarrierError> {
        let lo = lo.into();
        let hi = hi.into();
        let iv = Interval { lo, lo_closed, hi, hi_closed };
        iv.validate()?;
        Ok(iv)
    }

    pub fn closed(lo: impl Into<Bound>, hi: impl Into<Bound>) -> Self {
        let lo = lo.into();
        let hi = hi.into();
        let lc = lo.is_finite();
        let hc = hi.is_finite();
        Self::new(lo, lc, hi, hc).expect("closed interval")
    }

    pub fn open(lo: impl Into<Bound>, hi: impl Into<Bound>) -> Self {
        Self::new(lo, false, hi, false).expect("open interval")
    }

    pub fn point(v: Q) -> Self {
        Interval { lo: Bound::Finite(v.clone()), lo_closed: true, hi: Bound::Finite(v), hi_closed: true }
    }

    pub fn full() -> Self {
        Interval { lo: Bound::NegInf, lo_closed: false, hi: Bound::PosInf, hi_closed: false }
    }

    fn validate(&self) -> Result<(), CarrierError> {
        let bad = |why: &str| Err(CarrierError::MalformedInterval(format!("{self}: {why}")));
        if matches!(self.lo, Bound::PosInf) || matches!(self.hi, Bound::NegInf) {
            return bad("infinite endpoint on the wrong side");
        }
        if (!self.lo.is_finite() && self.lo_closed) || (!self.hi.is_finite() && self.hi_closed) {
            return bad("infinite endpoints are exclusive");
        }
        match self.lo.cmp(&self.hi) {
            Ordering::Greater => bad("lower endpoint exceeds upper"),
            Ordering::Equal if !(self.lo_closed && self.hi_closed) => bad("degenerate interval must be closed"),
            _ => Ok(()),
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, p: &Q) -> bool {
        let above = match &self.lo {
            Bound::NegInf => true,
            Bound::Finite(l) => if self.lo_closed { p >= l } else { p > l },
            Bound::PosInf => false,
        };
        let below = match &self.hi {
            Bound::PosInf => true,
            Bound::Finite(h) => if self.hi_closed { p <= h } else { p < h },
            Bound::NegInf => false,
        };
        above && below
    }

    fn intersect(&self, other: &Interval) -> Option<Interval> {
        let (lo, lo_closed) = match cmp_lower(self, other) {
            Ordering::Less => (other.lo.clone(), other.lo_closed),
            _ => (self.lo.clone(), self.lo_closed),
        };
        let (hi, hi_closed) = match cmp_upper(self, other) {
            Ordering::Greater => (other.hi.clone(), other.hi_closed),
            _ => (self.hi.clone(), self.hi_closed),
        };
        let iv = Interval { lo, lo_closed, hi, hi_closed };
        iv.validate().ok().map(|_| iv)
    }
}

/// Order lower ends: a closed lower bound starts before an open one at the same value.
fn cmp_lower(a: &Interval, b: &Interval) -> Ordering {
    a.lo.cmp(&b.lo).then((!a.lo_closed).cmp(&!b.lo_closed))
}

/// Order upper ends: a closed upper bound ends after an open one at the same value.
fn cmp_upper(a: &Interval, b: &Interval) -> Ordering {
    a.hi.cmp(&b.hi).then(a.hi_closed.cmp(&b.hi_closed))
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => write!(f, "-inf"),
            Bound::PosInf => write!(f, "inf"),
            Bound::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return write!(f, "{{{}}}", self.lo);
        }
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{},{}{r}", self.lo, self.hi)
    }
}

/// Normalized finite union of intervals: sorted, pairwise disjoint, no two mergeable.
///
/// Structural equality coincides with set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    parts: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { parts: Vec::new() }
    }

    pub fn full() -> Self {
        IntervalSet { parts: vec![Interval::full()] }
    }

    pub fn point(v: Q) -> Self {
        IntervalSet { parts: vec![Interval::point(v)] }
    }

    pub fn from_interval(iv: Interval) -> Self {
        IntervalSet { parts: vec![iv] }
    }

    pub fn closed(lo: impl Into<Bound>, hi: impl Into<Bound>) -> Self {
        Self::from_interval(Interval::closed(lo, hi))
    }

    pub fn open(lo: impl Into<Bound>, hi: impl Into<Bound>) -> Self {
        Self::from_interval(Interval::open(lo, hi))
    }

    /// Canonicalizes a raw list of intervals.
    pub fn normalize(raw: Vec<Interval>) -> Result<Self, CarrierError> {
        for iv in &raw {
            iv.validate()?;
        }
        Ok(Self::merge(raw))
    }

    fn merge(mut raw: Vec<Interval>) -> Self {
        raw.sort_by(cmp_lower);
        let mut out: Vec<Interval> = Vec::with_capacity(raw.len());
        for iv in raw {
            if let Some(cur) = out.last_mut() {
                let touches = match iv.lo.cmp(&cur.hi) {
                    Ordering::Less => true,
                    Ordering::Equal => iv.lo_closed || cur.hi_closed,
                    Ordering::Greater => false,
                };
                if touches {
                    if cmp_upper(&iv, cur) == Ordering::Greater {
                        cur.hi = iv.hi;
                        cur.hi_closed = iv.hi_closed;
                    }
                    continue;
                }
            }
            out.push(iv);
        }
        IntervalSet { parts: out }
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut raw = self.parts.clone();
        raw.extend(other.parts.iter().cloned());
        Self::merge(raw)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut raw = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                if let Some(c) = a.intersect(b) {
                    raw.push(c);
                }
            }
        }
        Self::merge(raw)
    }

    pub fn complement(&self) -> Self {
        let mut out = Vec::new();
        let mut lo = Bound::NegInf;
        let mut lo_closed = false;
        for iv in &self.parts {
            let gap = Interval { lo: lo.clone(), lo_closed, hi: iv.lo.clone(), hi_closed: !iv.lo_closed };
            if gap.validate().is_ok() {
                out.push(gap);
            }
            lo = iv.hi.clone();
            lo_closed = !iv.hi_closed;
        }
        let tail = Interval { lo, lo_closed, hi: Bound::PosInf, hi_closed: false };
        if tail.validate().is_ok() {
            out.push(tail);
        }
        IntervalSet { parts: out }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersect(&other.complement())
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.difference(other).union(&other.difference(self))
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.parts.len() == 1 && self.parts[0] == Interval::full()
    }

    pub fn is_bounded(&self) -> bool {
        match (self.parts.first(), self.parts.last()) {
            (Some(a), Some(b)) => a.lo.is_finite() && b.hi.is_finite(),
            _ => true,
        }
    }

    pub fn unbounded_below(&self) -> bool {
        self.parts.first().is_some_and(|iv| iv.lo == Bound::NegInf)
    }

    pub fn unbounded_above(&self) -> bool {
        self.parts.last().is_some_and(|iv| iv.hi == Bound::PosInf)
    }

    pub fn component_count(&self) -> usize {
        self.parts.len()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersect(other).is_empty()
    }

    pub fn contains_point(&self, p: &Q) -> bool {
        self.parts.iter().any(|iv| iv.contains(p))
    }

    /// True when every component is closed (finite endpoints included).
    pub fn is_closed(&self) -> bool {
        self.parts.iter().all(|iv| (iv.lo_closed || !iv.lo.is_finite()) && (iv.hi_closed || !iv.hi.is_finite()))
    }

    /// True when every component is open.
    pub fn is_open(&self) -> bool {
        self.complement().is_closed()
    }

    /// Topological closure in the usual order topology.
    pub fn closure(&self) -> Self {
        let raw = self
            .parts
            .iter()
            .map(|iv| Interval {
                lo: iv.lo.clone(),
                lo_closed: iv.lo.is_finite(),
                hi: iv.hi.clone(),
                hi_closed: iv.hi.is_finite(),
            })
            .collect();
        Self::merge(raw)
    }

    /// Topological interior in the usual order topology.
    pub fn interior(&self) -> Self {
        self.complement().closure().complement()
    }

    /// All finite endpoints, sorted and deduplicated.
    pub fn endpoints(&self) -> Vec<Q> {
        let mut v: Vec<Q> = self
            .parts
            .iter()
            .flat_map(|iv| [iv.lo.finite().cloned(), iv.hi.finite().cloned()])
            .flatten()
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Probe points that decide equality of sets whose endpoints lie in `cuts`:
    /// every cut, midpoints between consecutive cuts and one point beyond each end.
    pub fn probes(cuts: &[Q]) -> Vec<Q> {
        let mut cuts = cuts.to_vec();
        cuts.sort();
        cuts.dedup();
        if cuts.is_empty() {
            return vec![Q::zero()];
        }
        let half = qf(1, 2);
        let mut out = vec![&cuts[0] - Q::one()];
        for w in cuts.windows(2) {
            out.push(w[0].clone());
            out.push((&w[0] + &w[1]) * &half);
        }
        out.push(cuts[cuts.len() - 1].clone());
        out.push(&cuts[cuts.len() - 1] + Q::one());
        out
    }

    pub fn lowest(&self) -> Option<&Interval> {
        self.parts.first()
    }

    pub fn highest(&self) -> Option<&Interval> {
        self.parts.last()
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, iv) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: i64, lc: bool, hi: i64, hc: bool) -> Interval {
        Interval::new(lo, lc, hi, hc).unwrap()
    }

    #[test]
    fn boundary_excluded_stays_split() {
        let s = IntervalSet::normalize(vec![iv(0, false, 1, false), iv(1, false, 2, false)]).unwrap();
        assert_eq!(s.component_count(), 2);
    }

    #[test]
    fn adjacency_merges() {
        let s = IntervalSet::normalize(vec![iv(0, false, 1, true), iv(1, true, 2, false)]).unwrap();
        assert_eq!(s, IntervalSet::open(0, 2));
        let t = IntervalSet::normalize(vec![iv(0, false, 1, true), iv(1, false, 2, false)]).unwrap();
        assert_eq!(t, IntervalSet::open(0, 2));
    }

    #[test]
    fn degenerate_point() {
        let s = IntervalSet::normalize(vec![iv(3, true, 3, true)]).unwrap();
        assert_eq!(s, IntervalSet::point(q(3)));
        assert!(Interval::new(3, true, 3, false).is_err());
        assert!(Interval::new(2, true, 1, true).is_err());
        assert!(Interval::new(Bound::NegInf, true, 1, true).is_err());
    }

    #[test]
    fn complement_of_ray() {
        let s = IntervalSet::open(Bound::NegInf, 0);
        assert_eq!(s.complement(), IntervalSet::closed(0, Bound::PosInf));
        assert!(IntervalSet::empty().complement().is_full());
        assert!(IntervalSet::full().complement().is_empty());
    }

    #[test]
    fn symmetric_difference_example() {
        let a = IntervalSet::closed(-1, 1);
        let b = IntervalSet::closed(0, 2);
        let d = a.symmetric_difference(&b);
        let want = IntervalSet::normalize(vec![iv(-1, true, 0, false), iv(1, false, 2, true)]).unwrap();
        assert_eq!(d, want);
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn bounded_and_closure() {
        assert!(!IntervalSet::closed(Bound::NegInf, 0).is_bounded());
        assert!(IntervalSet::closed(-1, 0).is_bounded());
        assert_eq!(IntervalSet::open(0, 1).closure(), IntervalSet::closed(0, 1));
        assert_eq!(IntervalSet::closed(0, 1).interior(), IntervalSet::open(0, 1));
        assert!(IntervalSet::point(q(0)).interior().is_empty());
    }
}
