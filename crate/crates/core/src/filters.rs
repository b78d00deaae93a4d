//! Filters and ultrafilters in rings, Wallman spaces and the canonical map into them.

use std::fmt;

use thiserror::Error;

use crate::carrier::{q, AtomSet, Bound, IntervalSet, Q};
use crate::gts::{End, FiniteGts};
use crate::ring::{FiniteRing, RingTag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FilterError {
    #[error("ring has no nonempty member")]
    EmptyRing,
    #[error("{0} is not in the ring")]
    NotInRing(String),
    #[error("generators have empty intersection")]
    NotAFilter,
    #[error("fixed family at atom {0} is not maximal")]
    NotMaximal(usize),
}

/// A maximal filter, named by how it arises.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WallmanPoint {
    /// `{A : m ⊆ A}` for a minimal nonempty member `m`.
    PrincipalAt(AtomSet),
    /// `{A : q ∈ A}`.
    Fixed(Q),
    /// Sets unbounded below.
    MinusInfinity,
    /// Sets unbounded above.
    PlusInfinity,
    /// Sets unbounded in both directions (the single free point of the c0 ring).
    Free,
}

impl fmt::Display for WallmanPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WallmanPoint::PrincipalAt(m) => write!(f, "at{m}"),
            WallmanPoint::Fixed(q) => write!(f, "fixed({q})"),
            WallmanPoint::MinusInfinity => write!(f, "-inf"),
            WallmanPoint::PlusInfinity => write!(f, "+inf"),
            WallmanPoint::Free => write!(f, "free"),
        }
    }
}

/// A filter in a finite ring given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterInRing {
    generators: Vec<AtomSet>,
}

impl FilterInRing {
    pub fn new(ring: &FiniteRing, generators: Vec<AtomSet>) -> Result<Self, FilterError> {
        if let Some(g) = generators.iter().find(|g| !ring.contains(**g)) {
            return Err(FilterError::NotInRing(g.to_string()));
        }
        let f = FilterInRing { generators };
        if f.meet(ring).is_empty() {
            return Err(FilterError::NotAFilter);
        }
        Ok(f)
    }

    fn meet(&self, ring: &FiniteRing) -> AtomSet {
        self.generators.iter().fold(ring.full(), |a, &b| a.intersect(b))
    }

    /// Every ring member above some finite intersection of generators.
    pub fn members(&self, ring: &FiniteRing) -> Vec<AtomSet> {
        let m = self.meet(ring);
        ring.members().iter().copied().filter(|a| m.is_subset_of(*a)).collect()
    }
}

/// Two members of the completion whose intersection falls outside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotAFilterReport<S> {
    pub a1: S,
    pub a2: S,
}

/// `M = {A ∈ C : A meets every member of F}`, returned when it is closed under intersection.
pub fn maximal_completion(ring: &FiniteRing, f: &FilterInRing) -> Result<Vec<AtomSet>, NotAFilterReport<AtomSet>> {
    let fm = f.members(ring);
    let m: Vec<AtomSet> = ring.members().iter().copied().filter(|a| fm.iter().all(|b| !a.is_disjoint(*b))).collect();
    for (i, &a1) in m.iter().enumerate() {
        for &a2 in &m[i + 1..] {
            if !m.contains(&a1.intersect(a2)) {
                return Err(NotAFilterReport { a1, a2 });
            }
        }
    }
    Ok(m)
}

/// One ultrafilter per minimal nonempty member.
pub fn enumerate_ultrafilters(ring: &FiniteRing) -> Result<Vec<WallmanPoint>, FilterError> {
    let mins = ring.minimal_nonempty();
    if mins.is_empty() {
        return Err(FilterError::EmptyRing);
    }
    Ok(mins.into_iter().map(WallmanPoint::PrincipalAt).collect())
}

/// The Wallman space of a finite ring: ultrafilters with closed base `[A]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallmanSpace {
    n_carrier: usize,
    points: Vec<AtomSet>,
    classes: Vec<AtomSet>,
}

impl WallmanSpace {
    pub fn new(ring: &FiniteRing) -> Result<Self, FilterError> {
        let points = ring.minimal_nonempty();
        if points.is_empty() {
            return Err(FilterError::EmptyRing);
        }
        let mut w = WallmanSpace { n_carrier: ring.n(), points, classes: Vec::new() };
        let mut classes: Vec<AtomSet> = ring.members().iter().map(|&a| w.class_unchecked(a)).collect();
        classes.push(AtomSet::EMPTY);
        classes.push(AtomSet::full(w.points.len()));
        classes.sort();
        classes.dedup();
        w.classes = classes;
        Ok(w)
    }

    pub fn points(&self) -> &[AtomSet] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn class_unchecked(&self, a: AtomSet) -> AtomSet {
        AtomSet::from_atoms(self.points.iter().enumerate().filter(|(_, m)| m.is_subset_of(a)).map(|(i, _)| i))
    }

    /// `[A]`: the ultrafilters containing `A`, as a subset of the point indices.
    pub fn class(&self, ring: &FiniteRing, a: AtomSet) -> Result<AtomSet, FilterError> {
        if !ring.contains(a) {
            return Err(FilterError::NotInRing(a.to_string()));
        }
        Ok(self.class_unchecked(a))
    }

    /// The closed base `{[A]}` together with ∅ and the whole space.
    pub fn closed_base(&self) -> &[AtomSet] {
        &self.classes
    }

    /// The Wallman space as the small gts of its closed base.
    pub fn gts(&self) -> FiniteGts {
        let ring = FiniteRing::new(self.points.len(), self.classes.iter().copied()).expect("classes form a ring");
        FiniteGts::from_ring(&ring).expect("complete")
    }

    /// Index of the ultrafilter fixed at atom `x`, or why there is none.
    pub fn embed(&self, ring: &FiniteRing, x: usize) -> Result<usize, FilterError> {
        let fixed = ring.members().iter().filter(|a| a.contains(x)).fold(ring.full(), |m, &a| m.intersect(a));
        self.points.iter().position(|&m| m == fixed).ok_or(FilterError::NotMaximal(x))
    }

    /// Two atoms sharing an image. Atoms without an image are ignored.
    pub fn injectivity_failure(&self, ring: &FiniteRing) -> Option<(usize, usize)> {
        let img: Vec<Option<usize>> = (0..self.n_carrier).map(|x| self.embed(ring, x).ok()).collect();
        for x in 0..self.n_carrier {
            for y in x + 1..self.n_carrier {
                if img[x].is_some() && img[x] == img[y] {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// The image of the carrier is dense in the Wallman topology.
    pub fn image_is_dense(&self, ring: &FiniteRing) -> bool {
        let img = AtomSet::from_atoms((0..self.n_carrier).filter_map(|x| self.embed(ring, x).ok()));
        self.gts().closure(img) == AtomSet::full(self.points.len())
    }
}

/// `w(x)` on a finite ring.
pub fn w_embedding(ring: &FiniteRing, x: usize) -> Result<WallmanPoint, FilterError> {
    let w = WallmanSpace::new(ring)?;
    let i = w.embed(ring, x)?;
    Ok(WallmanPoint::PrincipalAt(w.points[i]))
}

/// `w(q)` on an interval ring: the ultrafilter fixed at a rational.
pub fn w_embedding_line(_tag: RingTag, x: Q) -> WallmanPoint {
    WallmanPoint::Fixed(x)
}

/// Generators of a filter in an interval ring: explicit members plus the tails toward some
/// ends (for one end the rays `[n, ∞)`, for both ends their unions).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LineFilterGens {
    pub explicit: Vec<IntervalSet>,
    pub toward: Vec<End>,
}

impl LineFilterGens {
    pub fn fixed(x: Q) -> Self {
        LineFilterGens { explicit: vec![IntervalSet::point(x)], toward: vec![] }
    }

    pub fn tail(end: End) -> Self {
        LineFilterGens { explicit: vec![], toward: vec![end] }
    }
}

fn unbounded_toward(a: &IntervalSet, e: End) -> bool {
    match e {
        End::Minus => a.unbounded_below(),
        End::Plus => a.unbounded_above(),
    }
}

/// Maximal completion in an interval ring, decided on interval structure.
pub fn maximal_completion_line(
    tag: RingTag,
    gens: &LineFilterGens,
) -> Result<Result<WallmanPoint, NotAFilterReport<IntervalSet>>, FilterError> {
    for g in &gens.explicit {
        if !tag.contains(g) {
            return Err(FilterError::NotInRing(g.to_string()));
        }
    }
    if !gens.toward.is_empty() && tag == RingTag::BoundedRom {
        return Err(FilterError::NotInRing("tail ray".into()));
    }
    let g = gens.explicit.iter().fold(IntervalSet::full(), |a, b| a.intersect(b));
    let mut toward = gens.toward.clone();
    toward.sort();
    toward.dedup();
    if toward.is_empty() {
        if g.is_empty() {
            return Err(FilterError::NotAFilter);
        }
        let pts = sample_points(&g);
        return Ok(match pts.as_slice() {
            [p] => Ok(WallmanPoint::Fixed(p.clone())),
            _ => Err(NotAFilterReport { a1: IntervalSet::point(pts[0].clone()), a2: IntervalSet::point(pts[1].clone()) }),
        });
    }
    // the filter is proper iff G meets every tail
    let reaches: Vec<End> = toward.iter().copied().filter(|&e| unbounded_toward(&g, e)).collect();
    if reaches.is_empty() {
        return Err(FilterError::NotAFilter);
    }
    let both_sided = toward.len() == 2;
    Ok(match (tag, both_sided, reaches.as_slice()) {
        (RingTag::C0Rom, _, _) => Ok(WallmanPoint::Free),
        (_, true, [_, _]) => Err(NotAFilterReport { a1: IntervalSet::closed(Bound::NegInf, q(0)), a2: IntervalSet::closed(q(0), Bound::PosInf) }),
        (_, _, [End::Minus]) => Ok(WallmanPoint::MinusInfinity),
        _ => Ok(WallmanPoint::PlusInfinity),
    })
}

/// At most two points of a nonempty set, two whenever it has two.
fn sample_points(g: &IntervalSet) -> Vec<Q> {
    let mut pts: Vec<Q> = g.endpoints().into_iter().filter(|p| g.contains_point(p)).collect();
    for p in IntervalSet::probes(&g.endpoints()) {
        if g.contains_point(&p) && !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts.truncate(2);
    pts
}

/// Whether an ultrafilter of an interval ring contains `a`.
pub fn line_point_in_class(p: &WallmanPoint, a: &IntervalSet) -> bool {
    match p {
        WallmanPoint::Fixed(q) => a.contains_point(q),
        WallmanPoint::MinusInfinity => a.unbounded_below(),
        WallmanPoint::PlusInfinity => a.unbounded_above(),
        WallmanPoint::Free => a.unbounded_below() || a.unbounded_above(),
        WallmanPoint::PrincipalAt(_) => false,
    }
}

/// Kinds of points of the Wallman space of an interval ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointClass {
    /// Ultrafilters fixed at rationals.
    FixedRational,
    /// Ultrafilters fixed at irrational reals; they exist but are never represented.
    FixedIrrational,
    End(WallmanPoint),
}

/// The Wallman space of an interval ring, handled through its closed base only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineWallman {
    tag: RingTag,
    classes: Vec<PointClass>,
}

impl LineWallman {
    /// Classifies the points: each free class is certified by completing its canonical filter.
    pub fn new(tag: RingTag) -> Result<Self, FilterError> {
        let mut classes = vec![PointClass::FixedRational, PointClass::FixedIrrational];
        let certify = |g: LineFilterGens| maximal_completion_line(tag, &g).ok().and_then(Result::ok);
        match certify(LineFilterGens::fixed(q(0))) {
            Some(WallmanPoint::Fixed(_)) => {}
            _ => return Err(FilterError::NotAFilter),
        }
        let mut ends: Vec<WallmanPoint> = Vec::new();
        for e in [End::Minus, End::Plus] {
            if let Some(p) = certify(LineFilterGens::tail(e)) {
                if !ends.contains(&p) {
                    ends.push(p);
                }
            }
        }
        classes.extend(ends.into_iter().map(PointClass::End));
        Ok(LineWallman { tag, classes })
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn classes(&self) -> &[PointClass] {
        &self.classes
    }

    /// Free points: ultrafilters with empty intersection.
    pub fn free_points(&self) -> Vec<WallmanPoint> {
        self.classes
            .iter()
            .filter_map(|c| match c {
                PointClass::End(p) => Some(p.clone()),
                _ => None,
            })
            .collect()
    }

    /// Compactness of the Wallman topology: every filter of the shipped rings extends to one
    /// of the classified ultrafilters, so the flag is certified rather than computed.
    pub fn is_compact_certified(&self) -> bool {
        self.tag.is_complete()
    }

    /// Decides `[A] ⊆ [B]` through the lattice: on a disjunctive ring it is `A ⊆ B`.
    pub fn class_subset(&self, a: &IntervalSet, b: &IntervalSet) -> bool {
        a.is_subset_of(b)
    }

    /// `[A] = ∅` iff `A = ∅`.
    pub fn class_is_empty(&self, a: &IntervalSet) -> bool {
        a.is_empty()
    }

    /// Representable points that a closed class contains, at the given rational probes.
    pub fn class_points(&self, a: &IntervalSet, probes: &[Q]) -> Vec<WallmanPoint> {
        let mut pts: Vec<WallmanPoint> = probes.iter().cloned().map(WallmanPoint::Fixed).collect();
        pts.extend(self.free_points());
        pts.into_iter().filter(|p| line_point_in_class(p, a)).collect()
    }
}
