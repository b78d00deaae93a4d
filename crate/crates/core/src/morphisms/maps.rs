//! Point tables and piecewise linear maps on the rational line.

use std::fmt;

use num::{Signed, Zero};

use crate::carrier::{q, AtomSet, Bound, Interval, IntervalSet, Q};
use crate::gts::End;

use super::MorphismError;

/// A map between finite carriers given by its table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMap {
    table: Vec<usize>,
    codomain: usize,
}

impl FiniteMap {
    pub fn new(table: Vec<usize>, codomain: usize) -> Result<Self, MorphismError> {
        if let Some(&y) = table.iter().find(|&&y| y >= codomain) {
            return Err(MorphismError::InvalidMap(format!("image {y} outside a codomain of {codomain} atoms")));
        }
        Ok(FiniteMap { table, codomain })
    }

    pub fn identity(n: usize) -> Self {
        FiniteMap { table: (0..n).collect(), codomain: n }
    }

    pub fn constant(n: usize, codomain: usize, y: usize) -> Result<Self, MorphismError> {
        Self::new(vec![y; n], codomain)
    }

    pub fn domain(&self) -> usize {
        self.table.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn preimage(&self, s: AtomSet) -> AtomSet {
        AtomSet::from_atoms((0..self.table.len()).filter(|&x| s.contains(self.table[x])))
    }

    pub fn image(&self, s: AtomSet) -> AtomSet {
        AtomSet::from_atoms(s.atoms().map(|x| self.table[x]))
    }

    pub fn is_injective(&self) -> bool {
        let img = self.image(AtomSet::full(self.table.len()));
        img.len() == self.table.len()
    }
}

/// One affine piece `x ↦ slope·x + intercept` on its domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Piece {
    pub domain: Interval,
    pub slope: Q,
    pub intercept: Q,
}

impl Piece {
    pub fn eval(&self, x: &Q) -> Q {
        &self.slope * x + &self.intercept
    }

    fn preimage_interval(&self, t: &Interval) -> IntervalSet {
        let dom = IntervalSet::from_interval(self.domain.clone());
        if self.slope.is_zero() {
            return if t.contains(&self.intercept) { dom } else { IntervalSet::empty() };
        }
        let inv = |b: &Bound| match b {
            Bound::Finite(v) => Bound::Finite((v - &self.intercept) / &self.slope),
            other => other.clone(),
        };
        let flip = |b: Bound| match b {
            Bound::NegInf => Bound::PosInf,
            Bound::PosInf => Bound::NegInf,
            f => f,
        };
        let (lo, lc, hi, hc) = if self.slope.is_positive() {
            (inv(&t.lo), t.lo_closed, inv(&t.hi), t.hi_closed)
        } else {
            (flip(inv(&t.hi)), t.hi_closed, flip(inv(&t.lo)), t.lo_closed)
        };
        let raw = IntervalSet::from_interval(Interval::new(lo, lc, hi, hc).expect("affine image of an interval"));
        raw.intersect(&dom)
    }
}

/// A map of the line that is affine on finitely many intervals. Continuity at the breakpoints
/// is not assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlMap {
    pieces: Vec<Piece>,
}

impl PlMap {
    /// Pieces must be listed left to right and partition the line.
    pub fn new(pieces: Vec<Piece>) -> Result<Self, MorphismError> {
        let bad = |why: String| Err(MorphismError::InvalidMap(why));
        let Some(first) = pieces.first() else { return bad("no pieces".into()) };
        if first.domain.lo != Bound::NegInf || pieces.last().expect("nonempty").domain.hi != Bound::PosInf {
            return bad("pieces do not reach both ends".into());
        }
        for w in pieces.windows(2) {
            let (a, b) = (&w[0].domain, &w[1].domain);
            if a.hi != b.lo || a.hi_closed == b.lo_closed {
                return bad(format!("{a} and {b} do not abut"));
            }
        }
        Ok(PlMap { pieces })
    }

    pub fn affine(slope: Q, intercept: Q) -> Self {
        PlMap { pieces: vec![Piece { domain: Interval::full(), slope, intercept }] }
    }

    pub fn identity() -> Self {
        Self::affine(q(1), q(0))
    }

    pub fn constant(c: Q) -> Self {
        Self::affine(q(0), c)
    }

    /// `0` up to `a`, `1` from `b` on, linear in between.
    pub fn ramp(a: Q, b: Q) -> Result<Self, MorphismError> {
        Self::between(a, b, q(0), q(1))
    }

    /// `1` up to `a`, `0` from `b` on, linear in between.
    pub fn ramp_down(a: Q, b: Q) -> Result<Self, MorphismError> {
        Self::between(a, b, q(1), q(0))
    }

    fn between(a: Q, b: Q, va: Q, vb: Q) -> Result<Self, MorphismError> {
        if a >= b {
            return Err(MorphismError::InvalidMap(format!("ramp from {a} to {b}")));
        }
        let slope = (&vb - &va) / (&b - &a);
        let intercept = &va - &slope * &a;
        Self::new(vec![
            Piece { domain: Interval::new(Bound::NegInf, false, a.clone(), false).expect("ray"), slope: q(0), intercept: va },
            Piece { domain: Interval::closed(a, b.clone()), slope, intercept },
            Piece { domain: Interval::new(b, false, Bound::PosInf, false).expect("ray"), slope: q(0), intercept: vb },
        ])
    }

    /// `min(1, max(0, x))`.
    pub fn clamp01() -> Self {
        Self::ramp(q(0), q(1)).expect("0 < 1")
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn breakpoints(&self) -> Vec<Q> {
        self.pieces.iter().skip(1).filter_map(|p| p.domain.lo.finite().cloned()).collect()
    }

    fn piece_at(&self, x: &Q) -> &Piece {
        self.pieces.iter().find(|p| p.domain.contains(x)).expect("pieces partition the line")
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.piece_at(x).eval(x)
    }

    pub fn preimage(&self, s: &IntervalSet) -> IntervalSet {
        let mut out = IntervalSet::empty();
        for p in &self.pieces {
            for t in s.parts() {
                out = out.union(&p.preimage_interval(t));
            }
        }
        out
    }

    /// The first breakpoint where a one-sided limit differs from the value, with that limit.
    pub fn discontinuity(&self) -> Option<(Q, Q)> {
        for w in self.pieces.windows(2) {
            let b = w[0].domain.hi.finite().expect("inner breakpoint").clone();
            let v = self.eval(&b);
            for lim in [w[0].eval(&b), w[1].eval(&b)] {
                if lim != v {
                    return Some((b, lim));
                }
            }
        }
        None
    }

    /// The constant value toward an end, or `None` when the map is unbounded there.
    pub fn limit_toward(&self, e: End) -> Option<Q> {
        let p = match e {
            End::Minus => self.pieces.first(),
            End::Plus => self.pieces.last(),
        }
        .expect("nonempty");
        p.slope.is_zero().then(|| p.intercept.clone())
    }

    /// Which end the values run off to toward an end of the domain, if they are unbounded.
    pub fn escapes_toward(&self, e: End) -> Option<End> {
        let p = match e {
            End::Minus => self.pieces.first(),
            End::Plus => self.pieces.last(),
        }
        .expect("nonempty");
        if p.slope.is_zero() {
            return None;
        }
        let up = p.slope.is_positive() == (e == End::Plus);
        Some(if up { End::Plus } else { End::Minus })
    }

    /// Whether the map is bounded on a set with finitely many components.
    pub fn is_bounded_on(&self, s: &IntervalSet) -> bool {
        (!s.unbounded_below() || self.limit_toward(End::Minus).is_some())
            && (!s.unbounded_above() || self.limit_toward(End::Plus).is_some())
    }

    /// Values at breakpoints and the one-sided limits there.
    pub fn critical_values(&self) -> Vec<Q> {
        let mut v = Vec::new();
        for w in self.pieces.windows(2) {
            let b = w[0].domain.hi.finite().expect("inner breakpoint").clone();
            v.extend([w[0].eval(&b), w[1].eval(&b)]);
        }
        for e in [End::Minus, End::Plus] {
            v.extend(self.limit_toward(e));
        }
        v.sort();
        v.dedup();
        v
    }

    /// The image of a closed bounded window under a map continuous on it.
    pub fn image_bounds(&self, a: &Q, b: &Q) -> (Q, Q) {
        let mut pts = vec![self.eval(a), self.eval(b)];
        for c in self.breakpoints() {
            if &c > a && &c < b {
                pts.push(self.eval(&c));
                for p in &self.pieces {
                    pts.push(p.eval(&c));
                }
            }
        }
        let lo = pts.iter().min().expect("nonempty").clone();
        let hi = pts.iter().max().expect("nonempty").clone();
        (lo, hi)
    }
}

impl fmt::Display for PlMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pieces.iter().map(|p| format!("{}: {}*x+{}", p.domain, p.slope, p.intercept)).collect();
        write!(f, "pl[{}]", parts.join("; "))
    }
}

impl fmt::Display for FiniteMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.table.iter().enumerate().map(|(x, y)| format!("{x}->{y}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A map given either on a finite carrier or on the line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GtsMap {
    Finite(FiniteMap),
    /// A finite carrier sent into the line, one rational per atom.
    Values(Vec<Q>),
    PiecewiseLinear(PlMap),
}

impl fmt::Display for GtsMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GtsMap::Finite(m) => write!(f, "{m}"),
            GtsMap::Values(v) => {
                let parts: Vec<String> = v.iter().enumerate().map(|(x, y)| format!("{x}->{y}")).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
            GtsMap::PiecewiseLinear(p) => write!(f, "{p}"),
        }
    }
}
