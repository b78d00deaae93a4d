//! Generalized topologies on the rational line and on closed windows of it.

use std::fmt;

use num::{One, Signed, Zero};

use crate::carrier::{Bound, Interval, IntervalSet, Q};
use crate::ring::{bounded_window, split_regions, RingTag};

use super::{Adverb, GtsError};

/// Which opens and which admissible families a line model carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineKind {
    /// Finite unions of open rational intervals, essentially finite families.
    Rom,
    /// Bounded opens and opens with bounded complement, essentially finite families.
    C0,
    /// Rom opens with every family of opens admissible.
    RomTopological,
}

impl LineKind {
    pub fn name(self) -> &'static str {
        match self {
            LineKind::Rom => "rom",
            LineKind::C0 => "c0",
            LineKind::RomTopological => "rom-top",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "rom" | "rom-line" => Some(LineKind::Rom),
            "c0" | "c0-line" => Some(LineKind::C0),
            "rom-top" | "rom-topological" => Some(LineKind::RomTopological),
            _ => None,
        }
    }
}

/// One end of the line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Minus,
    Plus,
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            End::Minus => "-inf",
            End::Plus => "+inf",
        })
    }
}

/// An endpoint moving affinely in the chain index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ChainEnd {
    Infinite,
    Affine { base: Q, slope: Q, closed: bool },
}

impl ChainEnd {
    pub fn affine(base: Q, slope: Q) -> Self {
        ChainEnd::Affine { base, slope, closed: false }
    }

    fn at(&self, n: u64, lower: bool) -> (Bound, bool) {
        match self {
            ChainEnd::Infinite => (if lower { Bound::NegInf } else { Bound::PosInf }, false),
            ChainEnd::Affine { base, slope, closed } => (Bound::Finite(base + slope * Q::from_integer(n.into())), *closed),
        }
    }

    fn grows(&self) -> bool {
        matches!(self, ChainEnd::Affine { slope, .. } if !slope.is_zero())
    }
}

/// The monotone chain `U_n = (lo(n), hi(n))`, `n ≥ start`, with affine endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineChain {
    lo: ChainEnd,
    hi: ChainEnd,
    start: u64,
}

impl AffineChain {
    /// Lower slope must be ≤ 0 and upper slope ≥ 0 so the chain increases.
    pub fn new(lo: ChainEnd, hi: ChainEnd, start: u64) -> Result<Self, GtsError> {
        let bad = |e: &ChainEnd, sign: i8| match e {
            ChainEnd::Affine { slope, .. } => (sign < 0 && slope.is_positive()) || (sign > 0 && slope.is_negative()),
            ChainEnd::Infinite => false,
        };
        if bad(&lo, -1) || bad(&hi, 1) {
            return Err(GtsError::NotACover);
        }
        let c = AffineChain { lo, hi, start };
        if c.member(start).is_empty() {
            return Err(GtsError::NotACover);
        }
        Ok(c)
    }

    /// The chain `(-n, n)`, `n ≥ 1`.
    pub fn symmetric() -> Self {
        AffineChain::new(ChainEnd::affine(Q::zero(), -Q::one()), ChainEnd::affine(Q::zero(), Q::one()), 1).expect("valid")
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn member(&self, n: u64) -> IntervalSet {
        let (lo, lc) = self.lo.at(n, true);
        let (hi, hc) = self.hi.at(n, false);
        if lo > hi || (lo == hi && !(lc && hc)) {
            return IntervalSet::empty();
        }
        Interval::new(lo, lc, hi, hc).map(IntervalSet::from_interval).unwrap_or_else(|_| IntervalSet::empty())
    }

    /// The exact union of the chain.
    pub fn union(&self) -> IntervalSet {
        let lo = if self.lo.grows() { (Bound::NegInf, false) } else { self.lo.at(self.start, true) };
        let hi = if self.hi.grows() { (Bound::PosInf, false) } else { self.hi.at(self.start, false) };
        Interval::new(lo.0, lo.1, hi.0, hi.1).map(IntervalSet::from_interval).unwrap_or_else(|_| IntervalSet::empty())
    }

    /// Strictly increasing chains are never essentially finite: no member reaches the union.
    pub fn is_essentially_finite(&self) -> bool {
        !self.lo.grows() && !self.hi.grows()
    }

    /// Ends toward which the chain grows without bound.
    pub fn growing_ends(&self) -> Vec<End> {
        let mut v = Vec::new();
        if self.lo.grows() {
            v.push(End::Minus);
        }
        if self.hi.grows() {
            v.push(End::Plus);
        }
        v
    }

    /// Least index whose member contains the bounded-toward-growing-ends target.
    fn covering_index(&self, target: &IntervalSet) -> Option<u64> {
        let mut n = self.start;
        if let (ChainEnd::Affine { base, slope, .. }, Some(low)) = (&self.lo, target.lowest()) {
            if let (true, Some(t)) = (slope.is_negative(), low.lo.finite()) {
                let need = ((base - t) / (-slope)).floor().to_integer() + 1;
                n = n.max(u64::try_from(need).unwrap_or(0));
            }
        }
        if let (ChainEnd::Affine { base, slope, .. }, Some(high)) = (&self.hi, target.highest()) {
            if let (true, Some(t)) = (slope.is_positive(), high.hi.finite()) {
                let need = ((t - base) / slope).floor().to_integer() + 1;
                n = n.max(u64::try_from(need).unwrap_or(0));
            }
        }
        target.is_subset_of(&self.member(n)).then_some(n)
    }
}

impl fmt::Display for AffineChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |e: &ChainEnd, inf: &str| match e {
            ChainEnd::Infinite => inf.to_string(),
            ChainEnd::Affine { base, slope, .. } => format!("{base}+{slope}n"),
        };
        let open = match &self.lo {
            ChainEnd::Affine { closed: true, .. } => '[',
            _ => '(',
        };
        let close = match &self.hi {
            ChainEnd::Affine { closed: true, .. } => ']',
            _ => ')',
        };
        write!(f, "{open}{},{}{close} n>={}", side(&self.lo, "-inf"), side(&self.hi, "inf"), self.start)
    }
}

/// A family of line subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineFamily {
    Explicit(Vec<IntervalSet>),
    Chain(AffineChain),
}

impl LineFamily {
    pub fn union(&self) -> IntervalSet {
        match self {
            LineFamily::Explicit(v) => v.iter().fold(IntervalSet::empty(), |a, b| a.union(b)),
            LineFamily::Chain(c) => c.union(),
        }
    }

    pub fn is_essentially_finite(&self) -> bool {
        match self {
            LineFamily::Explicit(_) => true,
            LineFamily::Chain(c) => c.is_essentially_finite(),
        }
    }
}

/// Proof that a chain has no finite subcover of a target: the target is unbounded toward an
/// end while every member is bounded there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoFiniteSubcoverCertificate {
    pub chain: AffineChain,
    pub target: IntervalSet,
    pub end: End,
}

impl NoFiniteSubcoverCertificate {
    pub fn confirm(&self) -> bool {
        let unbounded = match self.end {
            End::Minus => self.target.unbounded_below(),
            End::Plus => self.target.unbounded_above(),
        };
        // members increase, so any finite subfamily lies in one member
        unbounded && self.chain.growing_ends().contains(&self.end)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Compactness {
    FiniteSubcover(Vec<IntervalSet>),
    NoFiniteSubcover(NoFiniteSubcoverCertificate),
}

/// Compactness under the three adverbs for the whole carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompactnessFlags {
    pub topological: bool,
    pub absolute: bool,
    pub admissible: bool,
}

/// The topology of a line model, available only symbolically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicTopology {
    pub window: Option<(Q, Q)>,
}

impl fmt::Display for SymbolicTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.window {
            None => write!(f, "natural topology on the line (arbitrary unions of rational open intervals)"),
            Some((a, b)) => write!(f, "natural topology on [{a},{b}]"),
        }
    }
}

/// A line model, optionally restricted to a closed window `[a, b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGts {
    kind: LineKind,
    window: Option<(Q, Q)>,
}

impl LineGts {
    pub fn new(kind: LineKind) -> Self {
        LineGts { kind, window: None }
    }

    pub fn rom() -> Self {
        Self::new(LineKind::Rom)
    }

    pub fn c0() -> Self {
        Self::new(LineKind::C0)
    }

    pub fn rom_topological() -> Self {
        Self::new(LineKind::RomTopological)
    }

    /// The unit interval with the rom structure.
    pub fn i_rom() -> Self {
        LineGts { kind: LineKind::Rom, window: Some((Q::zero(), Q::one())) }
    }

    /// The model restricted to `[a, b]`.
    pub fn windowed(kind: LineKind, a: Q, b: Q) -> Result<Self, GtsError> {
        if a >= b {
            return Err(GtsError::UnsupportedSubspace(format!("[{a},{b}] is degenerate")));
        }
        Ok(LineGts { kind, window: Some((a, b)) })
    }

    pub fn kind(&self) -> LineKind {
        self.kind
    }

    pub fn window(&self) -> Option<&(Q, Q)> {
        self.window.as_ref()
    }

    pub fn carrier(&self) -> IntervalSet {
        match &self.window {
            None => IntervalSet::full(),
            Some((a, b)) => IntervalSet::closed(a.clone(), b.clone()),
        }
    }

    pub fn is_open(&self, s: &IntervalSet) -> bool {
        let x = self.carrier();
        if !s.is_subset_of(&x) {
            return false;
        }
        let ambient = s.union(&x.complement());
        if !ambient.is_open() {
            return false;
        }
        match self.kind {
            LineKind::Rom | LineKind::RomTopological => true,
            LineKind::C0 => self.window.is_some() || s.is_bounded() || s.complement().is_bounded(),
        }
    }

    /// Open in the topologization.
    pub fn is_weakly_open(&self, s: &IntervalSet) -> bool {
        let x = self.carrier();
        s.is_subset_of(&x) && s.union(&x.complement()).is_open()
    }

    pub fn is_closed(&self, s: &IntervalSet) -> bool {
        let x = self.carrier();
        s.is_subset_of(&x) && self.is_open(&x.difference(s))
    }

    /// The ring of closed sets on the whole line.
    pub fn closed_ring(&self) -> Option<RingTag> {
        match (self.kind, &self.window) {
            (LineKind::Rom | LineKind::RomTopological, None) => Some(RingTag::RomClosed),
            (LineKind::C0, None) => Some(RingTag::C0Rom),
            _ => None,
        }
    }

    pub fn is_small(&self) -> bool {
        self.kind != LineKind::RomTopological
    }

    /// A family of opens that is admissible but not essentially finite, when one exists.
    pub fn smallness_witness(&self) -> Option<AffineChain> {
        (!self.is_small() && self.window.is_none()).then(AffineChain::symmetric)
    }

    pub fn smallify(&self) -> LineGts {
        let kind = if self.kind == LineKind::RomTopological { LineKind::Rom } else { self.kind };
        LineGts { kind, window: self.window.clone() }
    }

    pub fn is_topological(&self) -> bool {
        self.kind == LineKind::RomTopological
    }

    pub fn topologize(&self) -> SymbolicTopology {
        SymbolicTopology { window: self.window.clone() }
    }

    /// Explicit enumeration of the topology is impossible on the line.
    pub fn topology_members(&self) -> Result<Vec<IntervalSet>, GtsError> {
        Err(GtsError::LineTopologizeSymbolicOnly)
    }

    pub fn is_admissible(&self, fam: &LineFamily) -> bool {
        let opens = match fam {
            LineFamily::Explicit(v) => v.iter().all(|u| self.is_open(u)),
            LineFamily::Chain(c) => self.is_open(&c.member(c.start())) && self.is_open(&c.union()) && {
                // every member is an open interval, open in the small kinds iff bounded or co-bounded
                self.kind != LineKind::C0 || c.union().is_bounded()
            },
        };
        opens && (self.is_topological() || fam.is_essentially_finite())
    }

    pub fn is_weakly_t1(&self) -> bool {
        true
    }

    pub fn is_weakly_hausdorff(&self) -> bool {
        true
    }

    /// Disjoint opens around two disjoint closed sets.
    pub fn separate_closed(&self, a: &IntervalSet, b: &IntervalSet) -> Option<(IntervalSet, IntervalSet)> {
        if !self.is_closed(a) || !self.is_closed(b) || !a.is_disjoint(b) {
            return None;
        }
        let x = self.carrier();
        let (n1, n2) = split_regions(a, b);
        let (w1, w2) = match self.kind {
            LineKind::C0 if self.window.is_none() => {
                if a.is_bounded() {
                    let w = bounded_window(&n1, a);
                    let c = w.closure().complement();
                    (w, c)
                } else {
                    let w = bounded_window(&n2, b);
                    let c = w.closure().complement();
                    (c, w)
                }
            }
            _ => (n1, n2),
        };
        let (w1, w2) = (w1.intersect(&x), w2.intersect(&x));
        debug_assert!(self.is_open(&w1) && self.is_open(&w2));
        (a.is_subset_of(&w1) && b.is_subset_of(&w2) && w1.is_disjoint(&w2)).then_some((w1, w2))
    }

    /// Weak normality is certified by the separation procedure, which never fails on closed pairs.
    pub fn is_weakly_normal(&self) -> bool {
        true
    }

    pub fn compactness_flags(&self) -> CompactnessFlags {
        let bounded = self.window.is_some();
        CompactnessFlags { topological: bounded, absolute: bounded, admissible: bounded || self.is_small() }
    }

    /// Finite subcover of `target` from `cover` (members are traced onto the carrier),
    /// or a certificate that none exists.
    pub fn compactness(&self, target: &IntervalSet, cover: &LineFamily, adverb: Adverb) -> Result<Compactness, GtsError> {
        let x = self.carrier();
        if !target.is_subset_of(&x) {
            return Err(GtsError::NotACover);
        }
        let cover = match cover {
            LineFamily::Explicit(v) => LineFamily::Explicit(v.iter().map(|u| u.intersect(&x)).collect()),
            LineFamily::Chain(c) if self.window.is_some() => {
                let mut v = Vec::new();
                let mut n = c.start();
                // a bounded window is reached by some member or the chain never covers it
                while v.len() < 4096 {
                    let m = c.member(n).intersect(&x);
                    let done = x.is_subset_of(&m);
                    v.push(m);
                    if done {
                        break;
                    }
                    n += 1;
                }
                LineFamily::Explicit(v)
            }
            other => other.clone(),
        };
        match adverb {
            Adverb::Topological => {
                let ok = match &cover {
                    LineFamily::Explicit(v) => v.iter().all(|u| self.is_weakly_open(u)),
                    LineFamily::Chain(c) => self.is_weakly_open(&c.member(c.start())),
                };
                if !ok {
                    return Err(GtsError::NotOpen("member not weakly open".into()));
                }
            }
            Adverb::Absolute => {
                let bad = match &cover {
                    LineFamily::Explicit(v) => v.iter().find(|u| !self.is_open(u)).cloned(),
                    LineFamily::Chain(c) => {
                        let m = c.member(c.start());
                        (!self.is_open(&m)).then_some(m)
                    }
                };
                if let Some(u) = bad {
                    return Err(GtsError::NotOpen(u.to_string()));
                }
            }
            Adverb::Admissible => {
                if !self.is_admissible(&cover) {
                    return Err(GtsError::NotAdmissible);
                }
            }
        }
        if !target.is_subset_of(&cover.union()) {
            return Err(GtsError::NotACover);
        }
        match cover {
            LineFamily::Explicit(v) => Ok(Compactness::FiniteSubcover(greedy_subcover(target, v))),
            LineFamily::Chain(chain) => {
                for end in chain.growing_ends() {
                    let cert = NoFiniteSubcoverCertificate { chain: chain.clone(), target: target.clone(), end };
                    if cert.confirm() {
                        return Ok(Compactness::NoFiniteSubcover(cert));
                    }
                }
                let n = chain.covering_index(target).expect("bounded target inside the union is reached");
                Ok(Compactness::FiniteSubcover(vec![chain.member(n)]))
            }
        }
    }

    /// Trace subspace on a closed interval.
    pub fn trace_subspace(&self, y: &IntervalSet) -> Result<LineGts, GtsError> {
        if y.is_full() && self.window.is_none() {
            return Ok(self.clone());
        }
        let window = closed_window(y).ok_or_else(|| GtsError::UnsupportedSubspace(y.to_string()))?;
        if !y.is_subset_of(&self.carrier()) {
            return Err(GtsError::UnsupportedSubspace(y.to_string()));
        }
        // on a bounded window the bounded opens of the c0 line already trace every relative open
        let kind = if self.kind == LineKind::C0 { LineKind::Rom } else { self.kind };
        Ok(LineGts { kind, window: Some(window) })
    }

    /// Closed intervals are strict: traced essentially finite families stay essentially finite
    /// and traced opens are the relatively open sets, so nothing new is generated.
    pub fn is_strict_subset(&self, y: &IntervalSet) -> Result<bool, GtsError> {
        self.trace_subspace(y).map(|_| true)
    }
}

fn closed_window(y: &IntervalSet) -> Option<(Q, Q)> {
    match y.parts() {
        [iv] if iv.lo_closed && iv.hi_closed => Some((iv.lo.finite()?.clone(), iv.hi.finite()?.clone())),
        _ => None,
    }
}

/// Drops members while the rest still covers the target.
pub fn greedy_subcover(target: &IntervalSet, mut v: Vec<IntervalSet>) -> Vec<IntervalSet> {
    v.retain(|u| !u.intersect(target).is_empty());
    let mut i = 0;
    while i < v.len() {
        let rest = v
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(IntervalSet::empty(), |a, (_, b)| a.union(b));
        if target.is_subset_of(&rest) {
            v.remove(i);
        } else {
            i += 1;
        }
    }
    v
}

impl fmt::Display for LineGts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.window {
            None => write!(f, "{}-line", self.kind.name()),
            Some((a, b)) => write!(f, "{} on [{a},{b}]", self.kind.name()),
        }
    }
}
