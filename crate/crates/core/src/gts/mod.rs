//! Generalized topologies on finite carriers and on the rational line.

pub mod axioms;
pub mod line;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::carrier::AtomSet;
use crate::ring::{close_lattice, FiniteRing};

pub use axioms::{Rule, Violation};
pub use line::{AffineChain, ChainEnd, Compactness, End, LineFamily, LineGts, LineKind, NoFiniteSubcoverCertificate};

/// Which covers a compactness question ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Adverb {
    /// Covers by weakly open sets (opens of the topologization).
    Topological,
    /// Covers by open sets.
    Absolute,
    /// Admissible covers.
    Admissible,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GtsError {
    #[error("explicit families need a carrier of at most {max} atoms, got {n}")]
    ExplicitTooLarge { n: usize, max: usize },
    #[error("ring is not complete")]
    IncompleteRing,
    #[error("not a topology: {0}")]
    NotATopology(String),
    #[error("the line topology is only available symbolically")]
    LineTopologizeSymbolicOnly,
    #[error("family does not cover the target")]
    NotACover,
    #[error("family is not admissible")]
    NotAdmissible,
    #[error("member {0} is not open for this adverb")]
    NotOpen(String),
    #[error("unsupported subspace: {0}")]
    UnsupportedSubspace(String),
}

/// Largest carrier on which families are stored as bit masks over subsets.
pub const MAX_EXPLICIT: usize = 6;

/// A family of subsets of a carrier with at most six atoms: bit `m` is set when the subset
/// with mask `m` is a member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Family(pub u64);

impl Family {
    pub const EMPTY: Family = Family(0);

    pub fn from_sets(sets: impl IntoIterator<Item = AtomSet>) -> Self {
        Family(sets.into_iter().fold(0, |f, s| f | (1u64 << s.0)))
    }

    pub fn members(self) -> impl Iterator<Item = AtomSet> {
        (0..64u64).filter(move |i| self.0 >> i & 1 == 1).map(AtomSet)
    }

    pub fn contains(self, s: AtomSet) -> bool {
        self.0 >> s.0 & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union_set(self) -> AtomSet {
        self.members().fold(AtomSet::EMPTY, AtomSet::union)
    }

    pub fn insert(self, s: AtomSet) -> Self {
        Family(self.0 | 1u64 << s.0)
    }

    pub fn remove(self, s: AtomSet) -> Self {
        Family(self.0 & !(1u64 << s.0))
    }

    pub fn is_subfamily_of(self, o: Family) -> bool {
        self.0 & !o.0 == 0
    }

    /// The family of traces `{U ∩ y}`.
    pub fn trace(self, y: AtomSet) -> Self {
        Family::from_sets(self.members().map(|u| u.intersect(y)))
    }

    /// Every subfamily.
    pub fn subfamilies(self) -> impl Iterator<Item = Family> {
        AtomSet(self.0).subsets().map(|s| Family(s.0))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, m) in self.members().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}

/// How the admissible families are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CovBackend {
    /// An explicit list of families; needs at most [`MAX_EXPLICIT`] atoms.
    Explicit(BTreeSet<Family>),
    /// Essentially finite families of opens (the small space of a complete ring).
    EssFin,
    /// Every family of opens (a topological gts).
    AllFamilies,
}

/// A gts on the finite carrier `{0..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGts {
    n: usize,
    op: Vec<AtomSet>,
    cov: CovBackend,
}

impl FiniteGts {
    /// The small gts induced by a complete ring: its members are the closed sets.
    pub fn from_ring(ring: &FiniteRing) -> Result<Self, GtsError> {
        if !ring.is_complete() {
            return Err(GtsError::IncompleteRing);
        }
        let n = ring.n();
        let mut op: Vec<AtomSet> = ring.members().iter().map(|c| c.complement(n)).collect();
        op.sort();
        Ok(FiniteGts { n, op, cov: CovBackend::EssFin })
    }

    /// A topological gts with the given opens, which must form a topology.
    pub fn topological(n: usize, opens: impl IntoIterator<Item = AtomSet>) -> Result<Self, GtsError> {
        let op: BTreeSet<AtomSet> = opens.into_iter().collect();
        let op: Vec<AtomSet> = op.into_iter().collect();
        if let Some(why) = topology_failure(n, &op) {
            return Err(GtsError::NotATopology(why));
        }
        Ok(FiniteGts { n, op, cov: CovBackend::AllFamilies })
    }

    /// A candidate with explicit admissible families. Opens are the members of the families.
    /// The axioms are not checked here; see [`FiniteGts::check_axioms`].
    pub fn explicit(n: usize, cov: impl IntoIterator<Item = Family>) -> Result<Self, GtsError> {
        if n > MAX_EXPLICIT {
            return Err(GtsError::ExplicitTooLarge { n, max: MAX_EXPLICIT });
        }
        let cov: BTreeSet<Family> = cov.into_iter().collect();
        let op: BTreeSet<AtomSet> = cov.iter().flat_map(|f| f.members()).collect();
        Ok(FiniteGts { n, op: op.into_iter().collect(), cov: CovBackend::Explicit(cov) })
    }

    pub fn discrete(n: usize) -> Self {
        FiniteGts { n, op: AtomSet::all(n).collect(), cov: CovBackend::AllFamilies }
    }

    pub fn indiscrete(n: usize) -> Self {
        let mut op = vec![AtomSet::EMPTY, AtomSet::full(n)];
        op.dedup();
        FiniteGts { n, op, cov: CovBackend::AllFamilies }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> AtomSet {
        AtomSet::full(self.n)
    }

    pub fn op(&self) -> &[AtomSet] {
        &self.op
    }

    pub fn cov(&self) -> &CovBackend {
        &self.cov
    }

    pub fn is_open(&self, s: AtomSet) -> bool {
        self.op.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: AtomSet) -> bool {
        self.is_open(s.complement(self.n))
    }

    /// Closed sets, sorted by bit pattern.
    pub fn closed_sets(&self) -> Vec<AtomSet> {
        let mut v: Vec<AtomSet> = self.op.iter().map(|u| u.complement(self.n)).collect();
        v.sort();
        v
    }

    /// The closed sets as a ring.
    pub fn closed_ring(&self) -> FiniteRing {
        FiniteRing::new(self.n, self.closed_sets()).unwrap_or_else(|_| FiniteRing::generate(self.n, self.closed_sets(), false))
    }

    pub fn op_family(&self) -> Family {
        assert!(self.n <= MAX_EXPLICIT);
        Family::from_sets(self.op.iter().copied())
    }

    /// Whether a family is admissible.
    pub fn is_admissible(&self, fam: Family) -> bool {
        match &self.cov {
            CovBackend::Explicit(c) => c.contains(&fam),
            // every family on a finite carrier is essentially finite
            CovBackend::EssFin | CovBackend::AllFamilies => fam.members().all(|u| self.is_open(u)),
        }
    }

    pub fn is_admissible_sets(&self, fam: &[AtomSet]) -> bool {
        match &self.cov {
            CovBackend::Explicit(_) => self.is_admissible(Family::from_sets(fam.iter().copied())),
            _ => fam.iter().all(|&u| self.is_open(u)),
        }
    }

    /// Explicit admissible families (expanded for implicit backends).
    pub fn cov_families(&self) -> BTreeSet<Family> {
        match &self.cov {
            CovBackend::Explicit(c) => c.clone(),
            _ => self.op_family().subfamilies().collect(),
        }
    }

    /// Same opens, admissible families replaced by the essentially finite ones.
    pub fn smallify(&self) -> FiniteGts {
        FiniteGts { n: self.n, op: self.op.clone(), cov: CovBackend::EssFin }
    }

    /// Small when the admissible families are exactly the essentially finite families of opens,
    /// which on a finite carrier means every family of opens.
    pub fn is_small(&self) -> bool {
        match &self.cov {
            CovBackend::EssFin | CovBackend::AllFamilies => true,
            CovBackend::Explicit(c) => {
                self.n <= MAX_EXPLICIT && self.op_family().subfamilies().all(|f| c.contains(&f))
                    && c.iter().all(|f| f.members().all(|u| self.is_open(u)))
            }
        }
    }

    /// Topological when every family of opens is admissible.
    pub fn is_topological(&self) -> bool {
        self.is_small()
    }

    /// Opens of the topologization.
    pub fn topology(&self) -> Vec<AtomSet> {
        let mut seed = self.op.clone();
        seed.push(AtomSet::EMPTY);
        seed.push(self.full());
        close_lattice(seed)
    }

    pub fn topologize(&self) -> FiniteGts {
        FiniteGts { n: self.n, op: self.topology(), cov: CovBackend::AllFamilies }
    }

    /// Opens become the topology; admissible families are regenerated from the old ones
    /// together with the essentially finite families of the new opens.
    pub fn partial_topologize(&self) -> FiniteGts {
        let tau = self.topology();
        if self.is_topological() {
            return self.topologize();
        }
        if self.n <= MAX_EXPLICIT {
            let mut seed: Vec<Family> = self.cov_families().into_iter().collect();
            seed.push(Family::from_sets(tau.iter().copied()));
            return axioms::generate(self.n, &seed);
        }
        FiniteGts { n: self.n, op: tau, cov: CovBackend::AllFamilies }
    }

    /// Smallest open superset, if one exists (it always does once opens are ∩-closed).
    pub fn smallest_open_superset(&self, s: AtomSet) -> Option<AtomSet> {
        let mut best: Option<AtomSet> = None;
        for &u in &self.op {
            if s.is_subset_of(u) {
                best = Some(best.map_or(u, |b| b.intersect(u)));
            }
        }
        best.filter(|b| self.is_open(*b))
    }

    /// Closure in the topologization.
    pub fn closure(&self, s: AtomSet) -> AtomSet {
        self.topology()
            .iter()
            .map(|u| u.complement(self.n))
            .filter(|c| s.is_subset_of(*c))
            .fold(self.full(), AtomSet::intersect)
    }

    pub fn is_weakly_t1(&self) -> bool {
        let tau = self.topology();
        (0..self.n).all(|x| (0..self.n).all(|y| x == y || tau.iter().any(|u| u.contains(x) && !u.contains(y))))
    }

    pub fn is_weakly_hausdorff(&self) -> bool {
        let tau = self.topology();
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                x == y
                    || tau.iter().any(|u| {
                        u.contains(x) && tau.iter().any(|v| v.contains(y) && u.is_disjoint(*v))
                    })
            })
        })
    }

    /// Disjoint opens around two sets, if any.
    pub fn separate(&self, a1: AtomSet, a2: AtomSet) -> Option<(AtomSet, AtomSet)> {
        for &w1 in &self.op {
            if !a1.is_subset_of(w1) {
                continue;
            }
            for &w2 in &self.op {
                if a2.is_subset_of(w2) && w1.is_disjoint(w2) {
                    return Some((w1, w2));
                }
            }
        }
        None
    }

    /// Weak normality: singletons and closed sets, pairwise disjoint, have disjoint open
    /// neighbourhoods. On failure returns the offending pair.
    pub fn weak_normality_failure(&self) -> Option<(AtomSet, AtomSet)> {
        let mut sides: Vec<AtomSet> = (0..self.n).map(AtomSet::singleton).collect();
        for c in self.closed_sets() {
            if !sides.contains(&c) {
                sides.push(c);
            }
        }
        for &a1 in &sides {
            for &a2 in &sides {
                if a1.is_disjoint(a2) && self.separate(a1, a2).is_none() {
                    return Some((a1, a2));
                }
            }
        }
        None
    }

    pub fn is_weakly_normal(&self) -> bool {
        self.weak_normality_failure().is_none()
    }

    /// Regular topologization: closed sets and outside points have disjoint neighbourhoods.
    pub fn is_weakly_regular(&self) -> bool {
        let tau = FiniteGts { n: self.n, op: self.topology(), cov: CovBackend::AllFamilies };
        tau.closed_sets().iter().all(|&c| {
            (0..self.n).all(|x| c.contains(x) || tau.separate(AtomSet::singleton(x), c).is_some())
        })
    }

    /// Trace subspace on `y`: opens `U ∩ y`, families `U ∩₁ y`.
    pub fn trace_subspace(&self, y: AtomSet) -> FiniteGts {
        let (m, relabel) = relabel(y);
        let op: BTreeSet<AtomSet> = self.op.iter().map(|u| relabel(u.intersect(y))).collect();
        let cov = match &self.cov {
            CovBackend::Explicit(c) => CovBackend::Explicit(
                c.iter().map(|f| Family::from_sets(f.members().map(|u| relabel(u.intersect(y))))).collect(),
            ),
            other => other.clone(),
        };
        FiniteGts { n: m, op: op.into_iter().collect(), cov }
    }

    /// Subspace generated from the traces.
    pub fn generated_subspace(&self, y: AtomSet) -> FiniteGts {
        let t = self.trace_subspace(y);
        // traces of a topological gts already form one
        if t.n > MAX_EXPLICIT || !matches!(t.cov, CovBackend::Explicit(_)) {
            return t.topologize();
        }
        axioms::generate(t.n, &t.cov_families().into_iter().collect::<Vec<_>>())
    }

    /// Strict when the traced families already form a generalized topology.
    pub fn is_strict_subset(&self, y: AtomSet) -> bool {
        let t = self.trace_subspace(y);
        let g = self.generated_subspace(y);
        t.op == g.op && t.cov_families() == g.cov_families()
    }

    /// Same gts up to backend: equal opens and equal admissible families.
    pub fn same_as(&self, other: &FiniteGts) -> bool {
        if self.n != other.n || self.op != other.op {
            return false;
        }
        match (&self.cov, &other.cov) {
            (CovBackend::Explicit(_), _) | (_, CovBackend::Explicit(_)) => {
                self.cov_families() == other.cov_families()
            }
            _ => true,
        }
    }

    /// Finite subcover under an adverb; every finite gts is compact under all three.
    pub fn compactness(&self, target: AtomSet, cover: &[AtomSet], adverb: Adverb) -> Result<Vec<AtomSet>, GtsError> {
        match adverb {
            Adverb::Topological => {}
            Adverb::Absolute => {
                if let Some(u) = cover.iter().find(|u| !self.is_open(**u)) {
                    return Err(GtsError::NotOpen(u.to_string()));
                }
            }
            Adverb::Admissible => {
                if !self.is_admissible_sets(cover) {
                    return Err(GtsError::NotAdmissible);
                }
            }
        }
        self.finite_subcover(target, cover)
    }

    /// Finite subcover of `target` from a weakly open family.
    pub fn finite_subcover(&self, target: AtomSet, cover: &[AtomSet]) -> Result<Vec<AtomSet>, GtsError> {
        let tau = self.topology();
        for u in cover {
            if !tau.contains(u) {
                return Err(GtsError::NotOpen(u.to_string()));
            }
        }
        let all = cover.iter().fold(AtomSet::EMPTY, |a, &b| a.union(b));
        if !target.is_subset_of(all) {
            return Err(GtsError::NotACover);
        }
        let mut chosen: Vec<AtomSet> = cover.to_vec();
        let mut i = 0;
        while i < chosen.len() {
            let rest = chosen.iter().enumerate().filter(|(j, _)| *j != i).fold(AtomSet::EMPTY, |a, (_, &b)| a.union(b));
            if target.is_subset_of(rest) {
                chosen.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(chosen)
    }
}

/// Maps the atoms of `y` onto `0..|y|`.
pub fn relabel(y: AtomSet) -> (usize, impl Fn(AtomSet) -> AtomSet) {
    let atoms: Vec<usize> = y.atoms().collect();
    let m = atoms.len();
    (m, move |s: AtomSet| AtomSet::from_atoms(atoms.iter().enumerate().filter(|(_, &a)| s.contains(a)).map(|(i, _)| i)))
}

/// Why a family of subsets is not a topology, if it is not.
pub fn topology_failure(n: usize, op: &[AtomSet]) -> Option<String> {
    let has = |s: AtomSet| op.binary_search(&s).is_ok();
    if !has(AtomSet::EMPTY) {
        return Some("missing the empty set".into());
    }
    if !has(AtomSet::full(n)) {
        return Some("missing the carrier".into());
    }
    for (i, &a) in op.iter().enumerate() {
        if !a.is_subset_of(AtomSet::full(n)) {
            return Some(format!("{a} is outside the carrier"));
        }
        for &b in &op[i + 1..] {
            if !has(a.union(b)) {
                return Some(format!("{a} ∪ {b} missing"));
            }
            if !has(a.intersect(b)) {
                return Some(format!("{a} ∩ {b} missing"));
            }
        }
    }
    None
}

/// A gts on either backend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Space {
    Finite(FiniteGts),
    Line(LineGts),
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Finite(g) => write!(f, "{g}"),
            Space::Line(l) => write!(f, "{l}"),
        }
    }
}

/// Every topology on `{0..n}`, each as a sorted list of opens. Grows from the indiscrete
/// topology by adjoining one set at a time.
pub fn enumerate_topologies(n: usize) -> Vec<Vec<AtomSet>> {
    assert!(n <= 6, "too many topologies to enumerate");
    let start = FiniteGts::indiscrete(n).op().to_vec();
    let mut seen: BTreeSet<Vec<AtomSet>> = BTreeSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while let Some(t) = frontier.pop() {
        for s in AtomSet::all(n) {
            if t.binary_search(&s).is_ok() {
                continue;
            }
            let mut seed = t.clone();
            seed.push(s);
            let next = close_lattice(seed);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

impl fmt::Display for FiniteGts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gts on {} atoms, opens {{", self.n)?;
        for (i, u) in self.op.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, "}}")
    }
}
