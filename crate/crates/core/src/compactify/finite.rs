//! Compactifications of finite spaces by finitely many extra atoms.
//!
//! The base occupies atoms `0..n`, the remainder `n..n+k`. Every finite space is compact in
//! all three senses, so only density and the embedding are checked.

use std::collections::BTreeSet;

use crate::carrier::AtomSet;
use crate::filters::WallmanSpace;
use crate::gts::{enumerate_topologies, topology_failure, FiniteGts, Family, MAX_EXPLICIT};

use super::line::Verdict;
use super::CompactifyError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBundle {
    base: FiniteGts,
    k: usize,
    tau: Vec<AtomSet>,
}

impl FiniteBundle {
    /// A topology on `n + k` atoms whose trace on the first `n` is the topology of `base`
    /// and in which the base is dense.
    pub fn new(base: FiniteGts, k: usize, tau: impl IntoIterator<Item = AtomSet>) -> Result<Self, CompactifyError> {
        let total = base.n() + k;
        if total > 16 {
            return Err(CompactifyError::SearchSpaceTooLarge { size: total, max: 16 });
        }
        let tau: Vec<AtomSet> = tau.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if let Some(why) = topology_failure(total, &tau) {
            return Err(CompactifyError::InvalidBundle(why));
        }
        let b = FiniteBundle { base, k, tau };
        let traces: Vec<AtomSet> = b.tau.iter().map(|u| u.intersect(b.base_mask())).collect::<BTreeSet<_>>().into_iter().collect();
        if traces != b.base.topology() {
            return Err(CompactifyError::InvalidBundle("trace differs from the base topology".into()));
        }
        if b.closure(b.base_mask()) != b.full() {
            return Err(CompactifyError::InvalidBundle("base is not dense".into()));
        }
        Ok(b)
    }

    pub fn base(&self) -> &FiniteGts {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn total(&self) -> usize {
        self.base.n() + self.k
    }

    pub fn tau(&self) -> &[AtomSet] {
        &self.tau
    }

    pub fn base_mask(&self) -> AtomSet {
        AtomSet::full(self.base.n())
    }

    pub fn remainder_mask(&self) -> AtomSet {
        self.full().difference(self.base_mask())
    }

    pub fn full(&self) -> AtomSet {
        AtomSet::full(self.total())
    }

    pub fn closure(&self, s: AtomSet) -> AtomSet {
        self.tau
            .iter()
            .map(|u| u.complement(self.total()))
            .filter(|c| s.is_subset_of(*c))
            .fold(self.full(), AtomSet::intersect)
    }

    pub fn ex(&self, u: AtomSet) -> Result<AtomSet, CompactifyError> {
        if !self.base.is_open(u) {
            return Err(CompactifyError::NotOpen(u.to_string()));
        }
        Ok(self.ex_unchecked(u))
    }

    fn ex_unchecked(&self, u: AtomSet) -> AtomSet {
        self.closure(self.base_mask().difference(u)).complement(self.total())
    }

    /// Opens of the compactified topology whose trace is open in the base.
    pub fn op_strongest(&self) -> Vec<AtomSet> {
        self.tau.iter().copied().filter(|u| self.base.is_open(u.intersect(self.base_mask()))).collect()
    }

    /// The image of `Ex`.
    pub fn op_w(&self) -> Vec<AtomSet> {
        let s: BTreeSet<AtomSet> = self.base.op().iter().map(|&u| self.ex_unchecked(u)).collect();
        s.into_iter().collect()
    }

    pub fn finitely_additive(&self) -> Result<(), (AtomSet, AtomSet)> {
        let op = self.base.op();
        for (i, &u) in op.iter().enumerate() {
            for &v in &op[i + 1..] {
                if self.ex_unchecked(u).union(self.ex_unchecked(v)) != self.ex_unchecked(u.union(v)) {
                    return Err((u, v));
                }
            }
        }
        Ok(())
    }

    /// `Ex` of the union of an admissible family is the union of the `Ex`, checked family by
    /// family while the opens are few.
    pub fn admissibly_additive(&self) -> Result<(), Vec<AtomSet>> {
        let op = self.base.op();
        if op.len() > 12 || self.base.n() > MAX_EXPLICIT {
            return self.finitely_additive().map_err(|(u, v)| vec![u, v]);
        }
        for mask in 0u32..(1 << op.len()) {
            let fam: Vec<AtomSet> = (0..op.len()).filter(|i| mask >> i & 1 == 1).map(|i| op[i]).collect();
            if !self.base.is_admissible_sets(&fam) {
                continue;
            }
            let union = fam.iter().fold(AtomSet::EMPTY, |a, &b| a.union(b));
            let exs = fam.iter().fold(AtomSet::EMPTY, |a, &b| a.union(self.ex_unchecked(b)));
            if self.ex_unchecked(union) != exs {
                return Err(fam);
            }
        }
        Ok(())
    }

    /// Whether the image of `Ex`, with all its families admissible, is a generalized topology.
    pub fn cov_w_is_gts(&self) -> bool {
        let op = self.op_w();
        let by_rules = topology_failure(self.total(), &op).is_none();
        if self.total() <= MAX_EXPLICIT && op.len() <= 16 {
            let fam = Family::from_sets(op.iter().copied());
            let g = FiniteGts::explicit(self.total(), fam.subfamilies()).expect("small");
            let by_axioms = g.check_axioms().is_ok();
            debug_assert_eq!(by_rules, by_axioms);
            return by_axioms;
        }
        by_rules
    }

    pub fn is_hausdorff(&self) -> bool {
        let t = self.total();
        (0..t).all(|x| {
            (0..t).all(|y| {
                x == y
                    || self.tau.iter().any(|u| {
                        u.contains(x) && self.tau.iter().any(|v| v.contains(y) && u.is_disjoint(*v))
                    })
            })
        })
    }

    /// The strongest layer as a gts on all atoms.
    pub fn strongest_gts(&self) -> FiniteGts {
        let mut op = self.op_strongest();
        op.push(AtomSet::EMPTY);
        FiniteGts::topological(self.total(), op.clone())
            .unwrap_or_else(|_| FiniteGts::topological(self.total(), crate::ring::close_lattice(op)).expect("closed"))
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..k {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

fn all_maps(from: usize, to: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..from {
        out = out.into_iter().flat_map(|m: Vec<usize>| (0..to).map(move |t| [m.clone(), vec![t]].concat())).collect();
    }
    out
}

fn extend(n: usize, h: &[usize]) -> impl Fn(AtomSet) -> AtomSet + '_ {
    // preimage under the identity on the base and `h` on the remainder
    move |s: AtomSet| {
        let base = s.intersect(AtomSet::full(n));
        let rem = AtomSet::from_atoms(h.iter().enumerate().filter(|(_, &t)| s.contains(n + t)).map(|(j, _)| n + j));
        base.union(rem)
    }
}

fn continuous(src: &FiniteBundle, dst: &FiniteBundle, h: &[usize]) -> bool {
    let pre = extend(src.base.n(), h);
    dst.tau.iter().all(|&v| src.tau.binary_search(&pre(v)).is_ok())
}

/// Compares two compactifications of the same finite base.
pub fn compare_finite(a: &FiniteBundle, b: &FiniteBundle, max: usize) -> Result<Verdict, CompactifyError> {
    if a.base.n() != b.base.n() || a.base.topology() != b.base.topology() {
        return Err(CompactifyError::PreconditionUnmet("different bases".into()));
    }
    if a.k.max(b.k) > max {
        return Err(CompactifyError::SearchSpaceTooLarge { size: a.k.max(b.k), max });
    }
    if a.k == b.k {
        for p in permutations(a.k) {
            let mut inv = vec![0; a.k];
            for (i, &t) in p.iter().enumerate() {
                inv[t] = i;
            }
            if continuous(a, b, &inv) && continuous(b, a, &p) {
                return Ok(Verdict::StrictlyEquivalent(p));
            }
        }
    }
    let onto = |h: &Vec<usize>, to: usize| (0..to).all(|t| h.contains(&t));
    if let Some(h) = all_maps(b.k, a.k).into_iter().find(|h| onto(h, a.k) && continuous(b, a, h)) {
        return Ok(Verdict::FirstBelow(h));
    }
    if let Some(h) = all_maps(a.k, b.k).into_iter().find(|h| onto(h, b.k) && continuous(a, b, h)) {
        return Ok(Verdict::SecondBelow(h));
    }
    Ok(Verdict::Incomparable)
}

/// Every compactification of `base` by `k` atoms, up to nothing (labelled).
pub fn enumerate_bundles(base: &FiniteGts, k: usize) -> Vec<FiniteBundle> {
    enumerate_topologies(base.n() + k)
        .into_iter()
        .filter_map(|t| FiniteBundle::new(base.clone(), k, t).ok())
        .collect()
}

/// The Wallman compactification of a finite T1 space, which adds nothing.
pub fn wallman_bundle(x: &FiniteGts) -> Result<FiniteBundle, CompactifyError> {
    if !x.is_weakly_normal() {
        return Err(CompactifyError::NotWeaklyNormal);
    }
    let ring = x.closed_ring();
    let w = WallmanSpace::new(&ring).map_err(|_| CompactifyError::WallmanNotCompactCertified)?;
    if w.injectivity_failure(&ring).is_some() {
        return Err(CompactifyError::PreconditionUnmet("points are not separated by closed sets".into()));
    }
    let image = AtomSet::from_atoms((0..x.n()).filter_map(|i| w.embed(&ring, i).ok()));
    let k = w.len() - image.len();
    if k != 0 {
        return Err(CompactifyError::InvalidBundle("free ultrafilters on a finite ring".into()));
    }
    FiniteBundle::new(x.clone(), 0, x.topology())
}
