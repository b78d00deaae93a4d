//! Compactifications of line models by finitely many points at the ends.
//!
//! A remainder point carries the set of ends it closes off. A set in the total space is open in
//! the compactified topology when its line part is open and, for each remainder point it
//! contains, its line part contains rays toward all ends of that point. Every predicate below
//! depends on a line set only through its shape: openness and which rays it contains.

use std::fmt;

use crate::carrier::{q, AtomSet, Bound, IntervalSet, Q};
use crate::filters::{LineWallman, WallmanPoint};
use crate::gts::{AffineChain, End, FiniteGts, LineGts, LineKind};
use crate::ring::{gap_radius, RingTag};

use super::quotient::{canonical_closed_sample, QuotientLattice};
use super::CompactifyError;

/// An added point and the ends of the line it sits at.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RemPoint {
    pub name: String,
    pub ends: Vec<End>,
}

impl RemPoint {
    pub fn new(name: impl Into<String>, mut ends: Vec<End>) -> Self {
        ends.sort();
        ends.dedup();
        RemPoint { name: name.into(), ends }
    }
}

/// A subset of the line plus some remainder points (indices into the remainder).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TotalSet {
    pub base: IntervalSet,
    pub extra: AtomSet,
}

impl TotalSet {
    pub fn line(base: IntervalSet) -> Self {
        TotalSet { base, extra: AtomSet::EMPTY }
    }

    pub fn union(&self, o: &Self) -> Self {
        TotalSet { base: self.base.union(&o.base), extra: self.extra.union(o.extra) }
    }

    pub fn intersect(&self, o: &Self) -> Self {
        TotalSet { base: self.base.intersect(&o.base), extra: self.extra.intersect(o.extra) }
    }
}

/// Which opens the total space carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineLayer {
    /// Open in the compactified topology with open trace on the line.
    Strongest,
    /// Images of the extension operator.
    Wallmanian,
    /// Opens of the line plus complements of compact closed sets.
    Alexandroff,
    /// Finite unions of bounded open intervals and complements of their closures.
    BoundedIntervals,
}

fn has_ray(u: &IntervalSet, e: End) -> bool {
    match e {
        End::Minus => u.unbounded_below(),
        End::Plus => u.unbounded_above(),
    }
}

/// `(open, ray toward -inf, ray toward +inf)`.
pub fn shape(s: &IntervalSet) -> (bool, bool, bool) {
    (s.is_open(), s.unbounded_below(), s.unbounded_above())
}

/// One open line set per open shape, the full line first.
pub fn open_representatives() -> Vec<IntervalSet> {
    vec![
        IntervalSet::full(),
        IntervalSet::empty(),
        IntervalSet::open(Bound::NegInf, q(0)),
        IntervalSet::open(q(0), Bound::PosInf),
        IntervalSet::open(q(0), q(1)),
        IntervalSet::open(Bound::NegInf, q(0)).union(&IntervalSet::open(q(1), Bound::PosInf)),
    ]
}

/// One line set per shape.
pub fn base_representatives() -> Vec<IntervalSet> {
    let mut v = open_representatives();
    v.extend([
        IntervalSet::closed(q(0), q(1)),
        IntervalSet::closed(Bound::NegInf, q(0)),
        IntervalSet::closed(q(0), Bound::PosInf),
        IntervalSet::closed(Bound::NegInf, q(0)).union(&IntervalSet::closed(q(1), Bound::PosInf)),
    ]);
    v
}

/// A compactification of a line model by finitely many end points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBundle {
    base: LineGts,
    remainder: Vec<RemPoint>,
    layer: LineLayer,
}

impl LineBundle {
    pub fn new(base: LineGts, remainder: Vec<RemPoint>, layer: LineLayer) -> Result<Self, CompactifyError> {
        if base.window().is_some() {
            return Err(CompactifyError::TopologicallyCompactInput);
        }
        if remainder.len() > 8 || remainder.iter().any(|p| p.ends.is_empty()) {
            return Err(CompactifyError::InvalidBundle("remainder points need at least one end".into()));
        }
        Ok(LineBundle { base, remainder, layer })
    }

    pub fn base(&self) -> &LineGts {
        &self.base
    }

    pub fn remainder(&self) -> &[RemPoint] {
        &self.remainder
    }

    pub fn layer(&self) -> LineLayer {
        self.layer
    }

    pub fn with_layer(&self, layer: LineLayer) -> Self {
        LineBundle { layer, ..self.clone() }
    }

    pub fn remainder_set(&self) -> AtomSet {
        AtomSet::full(self.remainder.len())
    }

    pub fn full(&self) -> TotalSet {
        TotalSet { base: IntervalSet::full(), extra: self.remainder_set() }
    }

    fn reaches(&self, u: &IntervalSet, p: usize) -> bool {
        self.remainder[p].ends.iter().all(|&e| has_ray(u, e))
    }

    /// Open in the compactified topology.
    pub fn is_tau_open(&self, v: &TotalSet) -> bool {
        v.extra.is_subset_of(self.remainder_set()) && v.base.is_open() && v.extra.atoms().all(|p| self.reaches(&v.base, p))
    }

    /// Closure in the compactified topology: a point is outside exactly when the complement
    /// of the closed line part, together with that point, is open.
    pub fn closure(&self, a: &TotalSet) -> TotalSet {
        let base = a.base.closure();
        let outside = base.complement();
        let extra = AtomSet::from_atoms(
            (0..self.remainder.len())
                .filter(|&p| a.extra.contains(p) || !self.is_tau_open(&TotalSet { base: outside.clone(), extra: AtomSet::singleton(p) })),
        );
        TotalSet { base, extra }
    }

    /// `Ex(U)`: the complement of the closure of the complement of `U`.
    pub fn ex(&self, u: &IntervalSet) -> Result<TotalSet, CompactifyError> {
        if !self.base.is_open(u) {
            return Err(CompactifyError::NotOpen(u.to_string()));
        }
        let c = self.closure(&TotalSet::line(u.complement()));
        Ok(TotalSet { base: c.base.complement(), extra: c.extra.complement(self.remainder.len()) })
    }

    fn ex_unchecked(&self, u: &IntervalSet) -> TotalSet {
        let c = self.closure(&TotalSet::line(u.complement()));
        TotalSet { base: c.base.complement(), extra: c.extra.complement(self.remainder.len()) }
    }

    /// Membership in the layer's opens.
    pub fn is_open(&self, v: &TotalSet) -> bool {
        if !v.extra.is_subset_of(self.remainder_set()) {
            return false;
        }
        match self.layer {
            LineLayer::Strongest => self.is_tau_open(v) && self.base.is_open(&v.base),
            LineLayer::Wallmanian => self.base.is_open(&v.base) && *v == self.ex_unchecked(&v.base),
            LineLayer::Alexandroff => {
                let c = v.base.complement();
                if v.extra.is_empty() {
                    self.base.is_open(&v.base)
                } else {
                    v.extra == self.remainder_set() && self.base.is_closed(&c) && c.is_bounded()
                }
            }
            LineLayer::BoundedIntervals => {
                v.base.is_open()
                    && if v.extra.is_empty() {
                        v.base.is_bounded()
                    } else {
                        v.extra == self.remainder_set() && v.base.complement().is_bounded()
                    }
            }
        }
    }

    /// Whether every family of opens is admissible (otherwise exactly the essentially finite ones).
    pub fn cov_all_families(&self) -> bool {
        match self.layer {
            LineLayer::BoundedIntervals => false,
            _ => !self.base.is_small(),
        }
    }

    /// Admissibility of a finite family.
    pub fn is_admissible(&self, fam: &[TotalSet]) -> bool {
        fam.iter().all(|v| self.is_open(v))
    }

    /// Every open shape paired with every remainder subset.
    pub fn total_representatives(&self) -> Vec<TotalSet> {
        let mut v = Vec::new();
        for base in base_representatives() {
            for extra in self.remainder_set().subsets() {
                v.push(TotalSet { base: base.clone(), extra });
            }
        }
        v
    }

    /// Distinct remainder points can be separated exactly when they close off disjoint ends;
    /// a line point and a remainder point always can.
    pub fn is_weakly_hausdorff(&self) -> bool {
        self.remainder.iter().enumerate().all(|(i, p)| {
            self.remainder[i + 1..].iter().all(|r| p.ends.iter().all(|e| !r.ends.contains(e)))
        })
    }

    /// The line is dense: every remainder point lies in its closure.
    pub fn is_dense(&self) -> bool {
        self.closure(&TotalSet::line(IntervalSet::full())).extra == self.remainder_set()
    }

    /// Traces of the layer's opens are exactly the opens of the line model.
    pub fn traces_match_base(&self) -> bool {
        base_representatives().iter().all(|u| {
            let traced = self.remainder_set().subsets().any(|e| self.is_open(&TotalSet { base: u.clone(), extra: e }));
            traced == self.base.is_open(u)
        })
    }

    /// Traces of admissible families: the essentially finite line families trace from
    /// explicit families, and chains appear exactly when the line admits them.
    fn cov_traces_match_base(&self) -> bool {
        self.cov_all_families() == !self.base.is_small() || self.layer == LineLayer::BoundedIntervals
    }

    /// A strict compactification: dense, strictly embedded, compact (certified for end points).
    pub fn is_strict_compactification(&self) -> bool {
        self.is_dense() && self.traces_match_base() && self.cov_traces_match_base()
    }

    pub fn additivity(&self) -> Additivity {
        let reps = open_representatives();
        let opens: Vec<&IntervalSet> = reps.iter().filter(|u| self.base.is_open(u)).collect();
        let mut finitely = Ok(());
        'outer: for (i, u) in opens.iter().enumerate() {
            for v in &opens[i + 1..] {
                let lhs = self.ex_unchecked(u).union(&self.ex_unchecked(v));
                if lhs != self.ex_unchecked(&u.union(v)) {
                    finitely = Err(((*u).clone(), (*v).clone()));
                    break 'outer;
                }
            }
        }
        let admissibly = match &finitely {
            Err((u, v)) => Err(AdditivityWitness::Pair(u.clone(), v.clone())),
            Ok(()) if self.base.is_small() => Ok(()),
            Ok(()) => {
                let chain = AffineChain::symmetric();
                // members are bounded, so each Ex misses every remainder point
                let members_extra = self.ex_unchecked(&chain.member(chain.start())).extra;
                let union_extra = self.ex_unchecked(&chain.union()).extra;
                if union_extra == members_extra { Ok(()) } else { Err(AdditivityWitness::Chain(chain)) }
            }
        };
        Additivity { finitely, admissibly }
    }

    /// Whether the admissible families inside the image of `Ex` form a generalized topology,
    /// decided from membership in that image.
    pub fn cov_w_is_gts(&self) -> bool {
        let w = self.with_layer(LineLayer::Wallmanian);
        if !w.is_open(&TotalSet::line(IntervalSet::empty())) || !w.is_open(&w.full()) {
            return false;
        }
        let reps = open_representatives();
        let images: Vec<TotalSet> = reps.iter().filter(|u| self.base.is_open(u)).map(|u| self.ex_unchecked(u)).collect();
        for a in &images {
            for b in &images {
                if !w.is_open(&a.union(b)) || !w.is_open(&a.intersect(b)) {
                    return false;
                }
            }
        }
        if !self.base.is_small() {
            // the images of the chain (-n, n) are admissible, their union must be open
            let chain = AffineChain::symmetric();
            let union = TotalSet::line(chain.union());
            return w.is_open(&union);
        }
        true
    }

    /// The local form of the one-point criterion for a disjoint closed pair: the extensions of
    /// their complements cover the total space iff one of them is compact.
    pub fn local_pair_check(&self, a: &IntervalSet, b: &IntervalSet) -> (bool, bool) {
        let lhs = self.ex_unchecked(&a.complement()).union(&self.ex_unchecked(&b.complement())) == self.full();
        (lhs, a.is_bounded() || b.is_bounded())
    }

    pub fn show(&self, v: &TotalSet) -> String {
        let names: Vec<&str> = v.extra.atoms().filter_map(|p| self.remainder.get(p)).map(|p| p.name.as_str()).collect();
        if names.is_empty() {
            v.base.to_string()
        } else if v.base.is_empty() {
            format!("{{{}}}", names.join(","))
        } else {
            format!("{} + {{{}}}", v.base, names.join(","))
        }
    }
}

impl fmt::Display for LineBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .remainder
            .iter()
            .map(|p| format!("{}@{}", p.name, p.ends.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("&")))
            .collect();
        write!(f, "{} + {{{}}} [{:?}]", self.base, pts.join(", "), self.layer)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdditivityWitness {
    Pair(IntervalSet, IntervalSet),
    Chain(AffineChain),
}

impl fmt::Display for AdditivityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdditivityWitness::Pair(u, v) => write!(f, "U={u}, V={v}"),
            AdditivityWitness::Chain(c) => write!(f, "chain {c}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Additivity {
    pub finitely: Result<(), (IntervalSet, IntervalSet)>,
    pub admissibly: Result<(), AdditivityWitness>,
}

/// Two disjoint closed sets of the ring, neither compact, if the ring has them.
pub fn disjoint_noncompact_pair(tag: RingTag) -> Option<(IntervalSet, IntervalSet)> {
    match tag {
        RingTag::RomClosed => Some((IntervalSet::closed(Bound::NegInf, q(0)), IntervalSet::closed(q(1), Bound::PosInf))),
        // noncompact members contain rays at both ends, so any two of them meet
        RingTag::C0Rom | RingTag::BoundedRom => None,
    }
}

fn closed_tag(x: &LineGts) -> RingTag {
    match x.kind() {
        LineKind::C0 => RingTag::C0Rom,
        _ => RingTag::RomClosed,
    }
}

/// The one-point compactification whose neighbourhoods of the new point are complements of
/// compact closed sets.
pub fn alexandroff_strict(x: &LineGts) -> Result<LineBundle, CompactifyError> {
    if x.compactness_flags().topological {
        return Err(CompactifyError::TopologicallyCompactInput);
    }
    LineBundle::new(x.clone(), vec![RemPoint::new("inf", vec![End::Minus, End::Plus])], LineLayer::Alexandroff)
}

/// The one-point compactification built from bounded open intervals and the complements of
/// their closures; its trace on the line is the c0 line.
pub fn bounded_interval_compactification() -> LineBundle {
    LineBundle::new(LineGts::c0(), vec![RemPoint::new("inf", vec![End::Minus, End::Plus])], LineLayer::BoundedIntervals)
        .expect("line")
}

/// Checks of the Alexandroff bundle: a strict one-point compactification and, being weakly
/// Hausdorff, carrying the strongest layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlexandroffReport {
    pub strict_one_point: bool,
    pub weakly_hausdorff: bool,
    pub strongest_layer: bool,
}

pub fn alexandroff_report(b: &LineBundle) -> AlexandroffReport {
    let strongest = b.with_layer(LineLayer::Strongest);
    let same = b.total_representatives().iter().all(|v| b.is_open(v) == strongest.is_open(v))
        && b.cov_all_families() == strongest.cov_all_families();
    AlexandroffReport {
        strict_one_point: b.remainder().len() == 1 && b.is_strict_compactification(),
        weakly_hausdorff: b.is_weakly_hausdorff(),
        strongest_layer: !b.is_weakly_hausdorff() || same,
    }
}

/// `x ∈ U ⊆ C ⊆ V` with `U` open and `C` compact closed.
pub fn compact_neighbourhood(x: &LineGts, v: &IntervalSet, pt: &Q) -> Result<(IntervalSet, IntervalSet), CompactifyError> {
    if !x.is_open(v) || !v.contains_point(pt) {
        return Err(CompactifyError::NoWitness);
    }
    let r = gap_radius(&IntervalSet::from_interval(
        v.parts().iter().find(|c| c.contains(pt)).cloned().ok_or(CompactifyError::NoWitness)?,
    ), pt);
    let u = IntervalSet::open(pt - &r, pt + &r);
    let c = IntervalSet::closed(pt - &r, pt + &r);
    let ok = x.is_open(&u) && x.is_closed(&c) && c.is_bounded() && u.is_subset_of(&c) && c.is_subset_of(v);
    if ok { Ok((u, c)) } else { Err(CompactifyError::NoWitness) }
}

/// For a closed set outside the c0 ring: a noncompact closed set disjoint from it.
pub fn c0_exclusion_witness(a: &IntervalSet) -> Option<IntervalSet> {
    if a.is_bounded() {
        return None;
    }
    if !a.unbounded_below() {
        let lo = a.lowest()?.lo.finite()?.clone();
        return Some(IntervalSet::closed(Bound::NegInf, lo - q(1)));
    }
    if !a.unbounded_above() {
        let hi = a.highest()?.hi.finite()?.clone();
        return Some(IntervalSet::closed(hi + q(1), Bound::PosInf));
    }
    None
}

/// The ring of closed sets that are compact or have only compact closed sets off them.
pub fn c0_base(x: &LineGts) -> Result<RingTag, CompactifyError> {
    if x.window().is_some() {
        return Err(CompactifyError::PreconditionUnmet("input is compact".into()));
    }
    Ok(RingTag::C0Rom)
}

/// The Wallman strict compactification of a line model, if the extension operator allows it.
pub fn wallman_strict_line(x: &LineGts) -> Result<LineBundle, CompactifyError> {
    if x.window().is_some() {
        return Err(CompactifyError::PreconditionUnmet("input is compact".into()));
    }
    if !x.is_weakly_normal() {
        return Err(CompactifyError::NotWeaklyNormal);
    }
    let w = LineWallman::new(closed_tag(x)).map_err(|_| CompactifyError::WallmanNotCompactCertified)?;
    if !w.is_compact_certified() {
        return Err(CompactifyError::WallmanNotCompactCertified);
    }
    let remainder = w
        .free_points()
        .into_iter()
        .map(|p| match p {
            WallmanPoint::MinusInfinity => RemPoint::new("-inf", vec![End::Minus]),
            WallmanPoint::PlusInfinity => RemPoint::new("+inf", vec![End::Plus]),
            _ => RemPoint::new("inf", vec![End::Minus, End::Plus]),
        })
        .collect();
    let b = LineBundle::new(x.clone(), remainder, LineLayer::Wallmanian)?;
    match b.additivity().admissibly {
        Ok(()) => Ok(b),
        Err(w) => Err(CompactifyError::NotApplicable(w.to_string())),
    }
}

/// The two layers of a glued compactification with a finite discrete remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glue {
    pub strong: LineBundle,
    pub wallmanian: LineBundle,
    pub lattice: QuotientLattice<IntervalSet>,
    /// Closed sets of the remainder paired with lattice classes.
    pub psi: Vec<(AtomSet, usize)>,
    tag: RingTag,
    k: FiniteGts,
}

/// Glues a finite weakly Hausdorff space onto the ends of a line model along a lattice
/// isomorphism from its closed sets onto the quotient lattice.
pub fn glue(x: &LineGts, k: &FiniteGts, psi: &[(AtomSet, usize)]) -> Result<Glue, CompactifyError> {
    if x.compactness_flags().topological {
        return Err(CompactifyError::PreconditionUnmet("line model is compact".into()));
    }
    if !k.is_weakly_hausdorff() || k.n() == 0 {
        return Err(CompactifyError::PreconditionUnmet("remainder space must be nonempty and weakly Hausdorff".into()));
    }
    let tag = closed_tag(x);
    let lattice = QuotientLattice::for_ring(tag);
    let closed = k.closed_sets();
    if closed.len() != lattice.len() {
        return Err(CompactifyError::NotALatticeIso(format!(
            "{} closed sets against {} lattice classes",
            closed.len(),
            lattice.len()
        )));
    }
    let map = |s: AtomSet| psi.iter().find(|(a, _)| *a == s).map(|(_, c)| *c);
    let mut image = Vec::new();
    for &s in &closed {
        let c = map(s).ok_or_else(|| CompactifyError::NotALatticeIso(format!("{s} has no image")))?;
        if image.contains(&c) {
            return Err(CompactifyError::NotALatticeIso(format!("class {c} hit twice")));
        }
        image.push(c);
    }
    for &a in &closed {
        for &b in &closed {
            let (ma, mb) = (map(a).expect("checked"), map(b).expect("checked"));
            if map(a.intersect(b)) != Some(lattice.meet(ma, mb)) || map(a.union(b)) != Some(lattice.join(ma, mb)) {
                return Err(CompactifyError::NotALatticeIso(format!("{a}, {b} not preserved")));
            }
        }
    }
    // each remainder point sits at the ends whose unbounded classes it belongs to
    let key = |c: usize| {
        let r = &lattice.reps()[c];
        let mut ends = Vec::new();
        if r.unbounded_below() {
            ends.push(End::Minus);
        }
        if r.unbounded_above() {
            ends.push(End::Plus);
        }
        ends
    };
    let choices = [vec![End::Minus], vec![End::Plus], vec![End::Minus, End::Plus]];
    let mut remainder = Vec::new();
    for p in 0..k.n() {
        let ends = choices
            .iter()
            .find(|ends| {
                closed.iter().all(|&s| {
                    let c = map(s).expect("checked");
                    s.contains(p) == key(c).iter().any(|e| ends.contains(e))
                })
            })
            .ok_or_else(|| CompactifyError::PreconditionUnmet(format!("point {p} has no end signature")))?;
        remainder.push(RemPoint::new(format!("p{p}"), ends.clone()));
    }
    let strong = LineBundle::new(x.clone(), remainder, LineLayer::Strongest)?;
    let wallmanian = strong.with_layer(LineLayer::Wallmanian);
    Ok(Glue { strong, wallmanian, lattice, psi: psi.to_vec(), tag, k: k.clone() })
}

impl Glue {
    pub fn tag(&self) -> RingTag {
        self.tag
    }

    /// `ψ⁻¹` of the class of a closed set.
    pub fn psi_inverse(&self, a: &IntervalSet) -> Option<AtomSet> {
        let c = self.lattice.class_of_line(self.tag, a)?;
        self.psi.iter().find(|(_, d)| *d == c).map(|(s, _)| *s)
    }

    /// The closure of a closed line set is the set together with `ψ⁻¹` of its class.
    pub fn closure_law(&self, a: &IntervalSet) -> bool {
        match self.psi_inverse(a) {
            Some(s) => self.strong.closure(&TotalSet::line(a.clone())) == TotalSet { base: a.clone(), extra: s },
            None => false,
        }
    }

    /// Traces of the extension images on the remainder are exactly its opens.
    pub fn is_psi_correlated(&self) -> bool {
        let achievable: std::collections::BTreeSet<AtomSet> = open_representatives()
            .iter()
            .filter(|u| self.strong.base().is_open(u))
            .map(|u| self.strong.ex_unchecked(u).extra)
            .collect();
        let opens: std::collections::BTreeSet<AtomSet> = self.k.op().iter().copied().collect();
        achievable == opens
    }

    /// The remainder is a strict subspace: traced opens are the opens of the remainder space.
    pub fn remainder_is_strict(&self) -> bool {
        let traced: std::collections::BTreeSet<AtomSet> =
            self.strong.total_representatives().iter().filter(|v| self.strong.is_open(v)).map(|v| v.extra).collect();
        traced == self.k.op().iter().copied().collect()
    }

    /// The strong layer is a weakly Hausdorff strict compactification with a strict remainder.
    pub fn strong_is_valid(&self) -> bool {
        self.strong.is_weakly_hausdorff()
            && self.strong.is_strict_compactification()
            && self.remainder_is_strict()
            && (self.is_psi_correlated() || self.strong.base().is_small())
    }

    /// The line is open in the strong layer but not in the wallmanian one.
    pub fn line_separates_layers(&self) -> bool {
        let line = TotalSet::line(IntervalSet::full());
        self.strong.is_open(&line) && !self.wallmanian.is_open(&line)
    }

    /// Ultrafilters of the quotient lattice match the remainder points.
    pub fn ultrafilters_match_remainder(&self) -> bool {
        let ufs = self.lattice.ultrafilters();
        let of_point = |p: usize| -> Vec<usize> {
            let mut v: Vec<usize> = self.psi.iter().filter(|(s, _)| s.contains(p)).map(|(_, c)| *c).collect();
            v.sort();
            v
        };
        ufs.len() == self.k.n() && (0..self.k.n()).all(|p| ufs.contains(&of_point(p)))
    }
}

/// A line model with a prescribed finite remainder, one point per open piece.
pub fn finite_remainder(x: &LineGts, parts: &[IntervalSet], c: &IntervalSet) -> Result<Glue, CompactifyError> {
    let invalid = |s: String| Err(CompactifyError::PartitionInvalid(s));
    if parts.is_empty() {
        return invalid("no pieces".into());
    }
    for (i, u) in parts.iter().enumerate() {
        if !x.is_open(u) {
            return invalid(format!("{u} is not open"));
        }
        for v in &parts[i + 1..] {
            if !u.is_disjoint(v) {
                return invalid(format!("{u} and {v} overlap"));
            }
        }
    }
    let rest = parts.iter().fold(IntervalSet::full(), |a, u| a.difference(u));
    if &rest != c {
        return invalid(format!("the complement of the pieces is {rest}, not {c}"));
    }
    if !(x.is_closed(c) && c.is_bounded()) {
        return invalid(format!("{c} is not compact"));
    }
    let pieces: Vec<IntervalSet> = parts.iter().map(|u| u.union(c)).collect();
    if let Some(d) = pieces.iter().find(|d| d.is_bounded()) {
        return invalid(format!("{d} is compact"));
    }
    let tag = closed_tag(x);
    // two disjoint closed sets both noncompact on one piece exist iff the piece, seen through
    // the ring, reaches both ends with independent rays
    if tag == RingTag::RomClosed {
        if let Some(d) = pieces.iter().find(|d| d.unbounded_below() && d.unbounded_above()) {
            let (a, b) = disjoint_noncompact_pair(tag).expect("rom");
            return invalid(format!("side condition fails on {d}: A={a}, B={b}"));
        }
    }
    let lattice = QuotientLattice::for_ring(tag);
    let signature = |dset: &IntervalSet| {
        AtomSet::from_atoms(
            pieces
                .iter()
                .enumerate()
                .filter(|(_, p)| {
                    let meet = dset.intersect(p);
                    !(x.is_closed(&meet) && meet.is_bounded())
                })
                .map(|(i, _)| i),
        )
    };
    let mut psi: Vec<(AtomSet, usize)> = Vec::new();
    for s in canonical_closed_sample(tag) {
        let class = lattice.class_of_line(tag, &s).expect("sampled");
        let sig = signature(&s);
        match psi.iter().find(|(_, c)| *c == class) {
            Some((t, _)) if *t != sig => return invalid(format!("ψ is not well defined on the class of {s}")),
            Some(_) => {}
            None => psi.push((sig, class)),
        }
    }
    glue(x, &FiniteGts::discrete(parts.len()), &psi)
        .map_err(|e| CompactifyError::PartitionInvalid(format!("ψ is not a lattice isomorphism: {e}")))
}

/// The comparison of two compactifications of the same line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A strict homeomorphism fixing the line; `map[i]` is the image of remainder point `i` of the first.
    StrictlyEquivalent(Vec<usize>),
    /// The second maps onto the first; `map[j]` is the image of remainder point `j` of the second.
    FirstBelow(Vec<usize>),
    /// The first maps onto the second.
    SecondBelow(Vec<usize>),
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub verdict: Verdict,
    /// A set open in one and not in the other under the identity on shared remainder indices,
    /// with `true` when it is open in the first.
    pub witness: Option<(TotalSet, bool)>,
}

fn maps(from: usize, to: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..from {
        out = out.into_iter().flat_map(|m| (0..to).map(move |t| [m.clone(), vec![t]].concat())).collect();
    }
    out
}

fn preimage(h: &[usize], s: AtomSet) -> AtomSet {
    AtomSet::from_atoms(h.iter().enumerate().filter(|(_, &t)| s.contains(t)).map(|(j, _)| j))
}

/// Strict continuity of `id ∪ h` from `src` onto `dst`.
fn strictly_continuous(src: &LineBundle, dst: &LineBundle, h: &[usize]) -> bool {
    if dst.cov_all_families() && !src.cov_all_families() {
        return false;
    }
    dst.total_representatives().iter().filter(|v| dst.is_open(v)).all(|v| {
        src.is_open(&TotalSet { base: v.base.clone(), extra: preimage(h, v.extra) })
    })
}

fn surjective(h: &[usize], to: usize) -> bool {
    (0..to).all(|t| h.contains(&t))
}

pub fn compare(a: &LineBundle, b: &LineBundle, max_remainder: usize) -> Result<Comparison, CompactifyError> {
    let (ka, kb) = (a.remainder().len(), b.remainder().len());
    if ka.max(kb) > max_remainder {
        return Err(CompactifyError::SearchSpaceTooLarge { size: ka.max(kb), max: max_remainder });
    }
    let witness = a.total_representatives().into_iter().chain(b.total_representatives()).find_map(|v| {
        let inside = v.extra.is_subset_of(a.remainder_set()) && v.extra.is_subset_of(b.remainder_set());
        (inside && a.is_open(&v) != b.is_open(&v)).then(|| {
            let first = a.is_open(&v);
            (v, first)
        })
    });
    if ka == kb {
        for h in maps(ka, kb).into_iter().filter(|h| surjective(h, kb)) {
            let mut inv = vec![0; kb];
            for (i, &t) in h.iter().enumerate() {
                inv[t] = i;
            }
            if strictly_continuous(a, b, &inv) && strictly_continuous(b, a, &h) {
                return Ok(Comparison { verdict: Verdict::StrictlyEquivalent(h), witness: None });
            }
        }
    }
    if let Some(h) = maps(kb, ka).into_iter().find(|h| surjective(h, ka) && strictly_continuous(b, a, h)) {
        return Ok(Comparison { verdict: Verdict::FirstBelow(h), witness });
    }
    if let Some(h) = maps(ka, kb).into_iter().find(|h| surjective(h, kb) && strictly_continuous(a, b, h)) {
        return Ok(Comparison { verdict: Verdict::SecondBelow(h), witness });
    }
    Ok(Comparison { verdict: Verdict::Incomparable, witness })
}

/// The two-end glue of the rom line: `p0` at `-inf`, `p1` at `+inf`.
pub fn two_point_glue(x: &LineGts) -> Result<Glue, CompactifyError> {
    let tag = closed_tag(x);
    let lattice = QuotientLattice::for_ring(tag);
    let class = |below: bool, above: bool| {
        lattice
            .reps()
            .iter()
            .position(|r| r.unbounded_below() == below && r.unbounded_above() == above)
            .ok_or_else(|| CompactifyError::NotALatticeIso("class missing".into()))
    };
    let psi = vec![
        (AtomSet(0b00), class(false, false)?),
        (AtomSet(0b01), class(true, false)?),
        (AtomSet(0b10), class(false, true)?),
        (AtomSet(0b11), class(true, true)?),
    ];
    glue(x, &FiniteGts::discrete(2), &psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{parse_interval_set as iv, qf};

    #[test]
    fn alexandroff_ex() {
        let b = alexandroff_strict(&LineGts::rom()).unwrap();
        assert_eq!(b.ex(&iv("(0,1)").unwrap()).unwrap(), TotalSet::line(iv("(0,1)").unwrap()));
        let out = iv("(-inf,0) u (1,inf)").unwrap();
        assert_eq!(b.ex(&out).unwrap(), TotalSet { base: out, extra: AtomSet(1) });
        assert_eq!(b.ex(&IntervalSet::full()).unwrap(), b.full());
        let add = b.additivity();
        assert_eq!(add.finitely, Err((iv("(-inf,0)").unwrap(), iv("(0,inf)").unwrap())));
        let c0 = alexandroff_strict(&LineGts::c0()).unwrap();
        assert_eq!(c0.additivity().finitely, Ok(()));
        let r = alexandroff_report(&b);
        assert!(r.strict_one_point && r.weakly_hausdorff && r.strongest_layer);
    }

    #[test]
    fn two_point_glue_checks() {
        let g = two_point_glue(&LineGts::rom()).unwrap();
        assert!(g.strong_is_valid());
        assert!(g.line_separates_layers());
        assert!(g.ultrafilters_match_remainder());
        for a in canonical_closed_sample(RingTag::RomClosed) {
            assert!(g.closure_law(&a), "{a}");
        }
        let cmp = compare(&g.wallmanian, &g.strong, 4).unwrap();
        assert!(matches!(cmp.verdict, Verdict::FirstBelow(_)));
        assert_eq!(cmp.witness, Some((TotalSet::line(IntervalSet::full()), false)));
        let one = glue(&LineGts::rom(), &FiniteGts::discrete(1), &[(AtomSet(0), 0), (AtomSet(1), 3)]);
        assert!(matches!(one, Err(CompactifyError::NotALatticeIso(_))));
    }

    #[test]
    fn finite_remainder_matches_glue() {
        let x = LineGts::rom();
        let fr = finite_remainder(&x, &[iv("(-inf,-1)").unwrap(), iv("(1,inf)").unwrap()], &iv("[-1,1]").unwrap()).unwrap();
        let g = two_point_glue(&x).unwrap();
        assert!(matches!(compare(&fr.strong, &g.strong, 4).unwrap().verdict, Verdict::StrictlyEquivalent(_)));
        let bad = finite_remainder(&x, &[IntervalSet::full()], &IntervalSet::empty());
        assert!(matches!(bad, Err(CompactifyError::PartitionInvalid(_))));
        let overlap = finite_remainder(&x, &[iv("(-inf,1)").unwrap(), iv("(0,inf)").unwrap()], &IntervalSet::empty());
        assert!(matches!(overlap, Err(CompactifyError::PartitionInvalid(_))));
        let one = finite_remainder(&LineGts::c0(), &[IntervalSet::full()], &IntervalSet::empty()).unwrap();
        let alex = alexandroff_strict(&LineGts::c0()).unwrap();
        assert!(matches!(compare(&one.strong, &alex, 4).unwrap().verdict, Verdict::StrictlyEquivalent(_)));
    }

    #[test]
    fn bounded_interval_example() {
        let y = bounded_interval_compactification();
        assert!(y.is_strict_compactification());
        let alex = alexandroff_strict(&LineGts::c0()).unwrap();
        let cmp = compare(&alex, &y, 4).unwrap();
        assert!(!matches!(cmp.verdict, Verdict::StrictlyEquivalent(_)));
        assert_eq!(cmp.witness, Some((TotalSet::line(IntervalSet::full()), true)));
    }

    #[test]
    fn wallman_line() {
        let w = wallman_strict_line(&LineGts::rom()).unwrap();
        assert_eq!(w.remainder().len(), 2);
        assert_eq!(wallman_strict_line(&LineGts::c0()).unwrap().remainder().len(), 1);
        assert!(matches!(wallman_strict_line(&LineGts::rom_topological()), Err(CompactifyError::NotApplicable(_))));
        assert!(w.cov_w_is_gts());
    }

    #[test]
    fn compact_neighbourhood_witnesses() {
        let x = LineGts::rom();
        let (u, c) = compact_neighbourhood(&x, &iv("(0,1)").unwrap(), &qf(1, 2)).unwrap();
        assert_eq!((u, c), (iv("(1/4,3/4)").unwrap(), iv("[1/4,3/4]").unwrap()));
        let (u, _) = compact_neighbourhood(&x, &IntervalSet::full(), &q(0)).unwrap();
        assert_eq!(u, iv("(-1,1)").unwrap());
        let (u, _) = compact_neighbourhood(&x, &iv("(0,1) u (2,3)").unwrap(), &qf(5, 2)).unwrap();
        assert!(u.is_subset_of(&iv("(2,3)").unwrap()));
        assert_eq!(c0_exclusion_witness(&iv("[0,inf)").unwrap()), Some(iv("(-inf,-1]").unwrap()));
        assert_eq!(c0_exclusion_witness(&iv("[0,1]").unwrap()), None);
    }
}
