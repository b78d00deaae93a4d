//! Strict, weak, w- and W-continuity, and the implications between them.

use std::collections::BTreeSet;
use std::fmt;

use num::Signed;

use crate::carrier::{q, AtomSet, Bound, IntervalSet, Q};
use crate::compactify::quotient::canonical_closed_sample;
use crate::gts::{AffineChain, CovBackend, Family, FiniteGts, LineGts, LineKind, Space};

use super::maps::{FiniteMap, GtsMap, PlMap};
use super::{Check, MorphismError, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ContinuityKind {
    /// Preimages of admissible families are admissible.
    Strict,
    /// Continuous between the topologizations.
    Weak,
    /// Finite open covers pull back to covers refined by finite open covers.
    SmallW,
    /// Admissible covers pull back to covers refined by admissible covers.
    BigW,
}

impl ContinuityKind {
    pub const ALL: [ContinuityKind; 4] = [Self::Strict, Self::Weak, Self::SmallW, Self::BigW];

    pub fn name(self) -> &'static str {
        match self {
            Self::Strict => "strict",
            Self::Weak => "weak",
            Self::SmallW => "w",
            Self::BigW => "W",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for ContinuityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn continuity(f: &GtsMap, x: &Space, y: &Space, kind: ContinuityKind) -> Result<Check, MorphismError> {
    match (f, x, y) {
        (GtsMap::Finite(m), Space::Finite(gx), Space::Finite(gy)) => {
            if m.domain() != gx.n() || m.codomain() != gy.n() {
                return Err(MorphismError::InvalidMap(format!("table {m} does not fit {} -> {} atoms", gx.n(), gy.n())));
            }
            Ok(match kind {
                ContinuityKind::Strict => strict_finite(m, gx, gy)?,
                ContinuityKind::Weak => weak_finite(m, gx, gy),
                ContinuityKind::SmallW => small_w_finite(m, gx, gy),
                ContinuityKind::BigW => big_w_finite(m, gx, gy)?,
            })
        }
        (GtsMap::PiecewiseLinear(p), Space::Line(lx), Space::Line(ly)) => {
            if let Err(w) = maps_into(p, lx, ly) {
                return Ok(Err(w));
            }
            match kind {
                ContinuityKind::Strict => strict_line(p, lx, ly),
                ContinuityKind::Weak => Ok(weak_line(p, lx)),
                ContinuityKind::SmallW => Ok(small_w_line(p, lx, ly)),
                ContinuityKind::BigW => Ok(big_w_line(p, lx, ly)),
            }
        }
        (GtsMap::Values(v), Space::Finite(gx), Space::Line(ly)) => {
            if v.len() != gx.n() {
                return Err(MorphismError::InvalidMap(format!("{} values for {} atoms", v.len(), gx.n())));
            }
            if let Some(bad) = v.iter().find(|t| !ly.carrier().contains_point(t)) {
                return Ok(Err(Witness::Note(format!("value {bad} lies outside {ly}"))));
            }
            match kind {
                ContinuityKind::Strict | ContinuityKind::Weak => Ok(values_into_line(v, gx, ly, kind)),
                _ => Err(MorphismError::BackendUnsupported(format!("{kind}-continuity of point tables into the line"))),
            }
        }
        _ => Err(MorphismError::BackendUnsupported("map and spaces do not match".into())),
    }
}

/// Distinct preimages of the opens of `y`.
fn preimages(m: &FiniteMap, y: &FiniteGts) -> Vec<AtomSet> {
    y.op().iter().map(|&u| m.preimage(u)).collect::<BTreeSet<_>>().into_iter().collect()
}

fn strict_finite(m: &FiniteMap, x: &FiniteGts, y: &FiniteGts) -> Result<Check, MorphismError> {
    let implicit = |g: &FiniteGts| !matches!(g.cov(), CovBackend::Explicit(_));
    if let Some(&u) = y.op().iter().find(|&&u| !x.is_open(m.preimage(u))) {
        return Ok(Err(Witness::FiniteSet(u)));
    }
    if implicit(x) {
        // every family of opens is admissible in x
        return Ok(Ok(()));
    }
    if implicit(y) {
        // any set of preimages arises from some family of opens
        let lambda = Family::from_sets(preimages(m, y));
        if lambda.len() > 20 {
            return Err(MorphismError::SearchSpaceTooLarge(format!("{} distinct preimages", lambda.len())));
        }
        for fam in lambda.subfamilies() {
            if !x.is_admissible(fam) {
                let back: Vec<AtomSet> = y.op().iter().copied().filter(|&u| fam.contains(m.preimage(u))).collect();
                return Ok(Err(Witness::FiniteFamily(back)));
            }
        }
        return Ok(Ok(()));
    }
    for fam in y.cov_families() {
        let pre = Family::from_sets(fam.members().map(|u| m.preimage(u)));
        if !x.is_admissible(pre) {
            return Ok(Err(Witness::FiniteFamily(fam.members().collect())));
        }
    }
    Ok(Ok(()))
}

fn weak_finite(m: &FiniteMap, x: &FiniteGts, y: &FiniteGts) -> Check {
    let tx = x.topology();
    match y.topology().into_iter().find(|&v| tx.binary_search(&m.preimage(v)).is_err()) {
        Some(v) => Err(Witness::FiniteSet(v)),
        None => Ok(()),
    }
}

/// Whether every point of `x` has an open neighbourhood inside one of `targets`.
fn refinable_pointwise(x: &FiniteGts, targets: &[AtomSet]) -> bool {
    (0..x.n()).all(|p| x.op().iter().any(|&u| u.contains(p) && targets.iter().any(|t| u.is_subset_of(*t))))
}

fn small_w_finite(m: &FiniteMap, x: &FiniteGts, y: &FiniteGts) -> Check {
    // a cover fails at a point exactly when it avoids every open whose preimage contains an
    // open neighbourhood of the point; the largest such cover is the test
    for p in 0..x.n() {
        let bad: Vec<AtomSet> = y
            .op()
            .iter()
            .copied()
            .filter(|&v| {
                let pre = m.preimage(v);
                !x.op().iter().any(|&u| u.contains(p) && u.is_subset_of(pre))
            })
            .collect();
        if bad.iter().fold(AtomSet::EMPTY, |a, &b| a.union(b)) == y.full() {
            return Err(Witness::FiniteFamily(bad));
        }
    }
    Ok(())
}

fn big_w_finite(m: &FiniteMap, x: &FiniteGts, y: &FiniteGts) -> Result<Check, MorphismError> {
    let x_explicit = matches!(x.cov(), CovBackend::Explicit(_));
    let y_explicit = matches!(y.cov(), CovBackend::Explicit(_));
    if !x_explicit && !y_explicit {
        return Ok(small_w_finite(m, x, y));
    }
    let refines = |targets: &[AtomSet]| -> bool {
        if x_explicit {
            x.cov_families().iter().any(|u| u.union_set() == x.full() && u.members().all(|s| targets.iter().any(|t| s.is_subset_of(*t))))
        } else {
            refinable_pointwise(x, targets)
        }
    };
    if y_explicit {
        for fam in y.cov_families() {
            if fam.union_set() != y.full() {
                continue;
            }
            let targets: Vec<AtomSet> = fam.members().map(|v| m.preimage(v)).collect();
            if !refines(&targets) {
                return Ok(Err(Witness::FiniteFamily(fam.members().collect())));
            }
        }
        return Ok(Ok(()));
    }
    // implicit codomain: covers are all families of opens, grouped by their preimages
    let lambda = preimages(m, y);
    if lambda.len() > 16 {
        return Err(MorphismError::SearchSpaceTooLarge(format!("{} distinct preimages", lambda.len())));
    }
    for mask in 0u32..(1 << lambda.len()) {
        let allowed: Vec<AtomSet> = (0..lambda.len()).filter(|i| mask >> i & 1 == 1).map(|i| lambda[i]).collect();
        let cover: Vec<AtomSet> = y.op().iter().copied().filter(|&v| allowed.contains(&m.preimage(v))).collect();
        if cover.iter().fold(AtomSet::EMPTY, |a, &b| a.union(b)) != y.full() {
            continue;
        }
        let targets: Vec<AtomSet> = cover.iter().map(|&v| m.preimage(v)).collect();
        if !refines(&targets) {
            return Ok(Err(Witness::FiniteFamily(cover)));
        }
    }
    Ok(Ok(()))
}

fn values_into_line(v: &[Q], x: &FiniteGts, y: &LineGts, kind: ContinuityKind) -> Check {
    // every union of level sets is the preimage of a small open set around its values
    let mut levels: Vec<Q> = v.to_vec();
    levels.sort();
    levels.dedup();
    let level = |t: &Q| AtomSet::from_atoms((0..v.len()).filter(|&i| &v[i] == t));
    let unions: Vec<AtomSet> = AtomSet::full(levels.len())
        .subsets()
        .map(|s| s.atoms().fold(AtomSet::EMPTY, |a, i| a.union(level(&levels[i]))))
        .collect();
    let opens = match kind {
        ContinuityKind::Weak => x.topology(),
        _ => x.op().to_vec(),
    };
    if let Some(&u) = unions.iter().find(|u| opens.binary_search(u).is_err()) {
        return Err(Witness::FiniteSet(u));
    }
    if kind == ContinuityKind::Strict && matches!(x.cov(), CovBackend::Explicit(_)) {
        let fam = Family::from_sets(unions.iter().copied());
        if let Some(bad) = fam.subfamilies().find(|f| !x.is_admissible(*f)) {
            return Err(Witness::FiniteFamily(bad.members().collect()));
        }
    }
    let _ = y;
    Ok(())
}

/// The map sends the carrier of `x` into the carrier of `y`.
fn maps_into(f: &PlMap, x: &LineGts, y: &LineGts) -> Check {
    let Some((a, b)) = y.window() else { return Ok(()) };
    let xc = x.carrier();
    let pre = f.preimage(&y.carrier());
    if xc.is_subset_of(&pre) {
        Ok(())
    } else {
        Err(Witness::Note(format!("{f} leaves [{a},{b}] on {}", xc.difference(&pre))))
    }
}

/// A breakpoint inside the carrier where a one-sided limit from inside differs from the value.
fn discontinuity_within(f: &PlMap, carrier: &IntervalSet) -> Option<(Q, Q)> {
    for w in f.pieces().windows(2) {
        let b = w[0].domain.hi.finite().expect("inner breakpoint").clone();
        if !carrier.contains_point(&b) {
            continue;
        }
        let v = f.eval(&b);
        let eps = q(1) / q(1_000_000);
        let sides = [(w[0].eval(&b), &b - &eps), (w[1].eval(&b), &b + &eps)];
        for (lim, probe) in sides {
            // only limits approached from inside the carrier matter
            let inside = carrier.parts().iter().any(|c| c.contains(&b) && c.contains(&probe));
            if inside && lim != v {
                return Some((b, lim));
            }
        }
    }
    None
}

fn weak_line(f: &PlMap, x: &LineGts) -> Check {
    match discontinuity_within(f, &x.carrier()) {
        Some((b, lim)) => {
            let v = f.eval(&b);
            let r = (&lim - &v).abs() / q(2);
            Err(Witness::LineSet(IntervalSet::open(&v - &r, &v + &r)))
        }
        None => Ok(()),
    }
}

/// Closed sets of `y` to pull back: the canonical sample plus sets built from the values of
/// `f` at its breakpoints.
fn closed_probes(f: &PlMap, y: &LineGts) -> Vec<IntervalSet> {
    let yc = y.carrier();
    let mut out: Vec<IntervalSet> = match y.closed_ring() {
        Some(tag) => canonical_closed_sample(tag),
        None => {
            let (a, b) = y.window().expect("windowed").clone();
            let m = (&a + &b) / q(2);
            vec![
                IntervalSet::empty(),
                yc.clone(),
                IntervalSet::point(a.clone()),
                IntervalSet::point(b.clone()),
                IntervalSet::closed(a, m.clone()),
                IntervalSet::closed(m, b),
            ]
        }
    };
    let c0 = y.kind() == LineKind::C0 && y.window().is_none();
    for c in f.critical_values() {
        out.push(IntervalSet::point(c.clone()));
        if c0 {
            out.push(IntervalSet::closed(Bound::NegInf, &c - q(1)).union(&IntervalSet::closed(c.clone(), Bound::PosInf)));
            out.push(IntervalSet::closed(Bound::NegInf, c.clone()).union(&IntervalSet::closed(&c + q(1), Bound::PosInf)));
        } else {
            out.push(IntervalSet::closed(Bound::NegInf, c.clone()));
            out.push(IntervalSet::closed(c.clone(), Bound::PosInf));
        }
    }
    if let Some((b, lim)) = discontinuity_within(f, &IntervalSet::full()) {
        let v = f.eval(&b);
        let mid = (&v + &lim) / q(2);
        let (lo, hi) = if mid < lim { (mid, lim) } else { (lim, mid) };
        out.push(IntervalSet::closed(lo, hi));
    }
    out.into_iter().map(|a| a.intersect(&yc)).filter(|a| y.is_closed(a)).collect()
}

fn strict_line(f: &PlMap, x: &LineGts, y: &LineGts) -> Result<Check, MorphismError> {
    if x.is_topological() && y.is_topological() {
        return Ok(weak_line(f, x));
    }
    if !(x.is_small() && y.is_small()) {
        return Err(MorphismError::BackendUnsupported("strict continuity on the line needs small models".into()));
    }
    let xc = x.carrier();
    for a in closed_probes(f, y) {
        let pre = f.preimage(&a).intersect(&xc);
        if !x.is_closed(&pre) {
            return Ok(Err(Witness::LineSet(a)));
        }
    }
    Ok(Ok(()))
}

/// Finite open covers of `y` tried as counterexamples.
fn cover_pool(f: &PlMap, y: &LineGts) -> Vec<Vec<IntervalSet>> {
    let mut ts = f.critical_values();
    ts.push(q(0));
    ts.push(f.eval(&q(0)));
    ts.sort();
    ts.dedup();
    let mut pool = Vec::new();
    match y.window() {
        None if y.kind() == LineKind::C0 => {
            for t in &ts {
                let hole = |a: Q, b: Q| IntervalSet::closed(a, b).complement();
                pool.push(vec![IntervalSet::open(t - q(1), t + q(2)), hole(t.clone(), t + q(1))]);
                pool.push(vec![hole(t.clone(), t + q(1)), hole(t + q(2), t + q(3))]);
            }
        }
        None => {
            for t in &ts {
                pool.push(vec![IntervalSet::open(Bound::NegInf, t + q(1)), IntervalSet::open(t - q(1), Bound::PosInf)]);
                pool.push(vec![
                    IntervalSet::open(Bound::NegInf, t.clone()),
                    IntervalSet::open(t - q(1), t + q(1)),
                    IntervalSet::open(t.clone(), Bound::PosInf),
                ]);
            }
        }
        Some((a, b)) => {
            let mut ms: Vec<Q> = ts.iter().filter(|t| *t > a && *t < b).cloned().collect();
            ms.push((a + b) / q(2));
            for m in ms {
                let d = (&m - a).min(b - &m) / q(2);
                let left = IntervalSet::from_interval(
                    crate::carrier::Interval::new(a.clone(), true, &m + &d, false).expect("nonempty"),
                );
                let right = IntervalSet::from_interval(
                    crate::carrier::Interval::new(&m - &d, false, b.clone(), true).expect("nonempty"),
                );
                pool.push(vec![left, right]);
            }
        }
    }
    let yc = y.carrier();
    pool.into_iter()
        .filter(|c| c.iter().all(|v| y.is_open(v)) && c.iter().fold(IntervalSet::empty(), |s, v| s.union(v)) == yc)
        .collect()
}

/// Whether finitely many opens of `x` cover it, each inside one of `targets`.
fn refinable_line(x: &LineGts, targets: &[IntervalSet]) -> bool {
    let xc = x.carrier();
    let outside = xc.complement();
    let interiors: Vec<IntervalSet> = targets.iter().map(|t| t.intersect(&xc).union(&outside).interior().intersect(&xc)).collect();
    if interiors.iter().fold(IntervalSet::empty(), |s, u| s.union(u)) != xc {
        return false;
    }
    if x.kind() == LineKind::C0 && x.window().is_none() {
        // opens reaching the rays contain both of them; the compact rest needs only finitely many pieces
        return interiors.iter().any(|u| u.unbounded_below() && u.unbounded_above());
    }
    true
}

fn small_w_line(f: &PlMap, x: &LineGts, y: &LineGts) -> Check {
    for cover in cover_pool(f, y) {
        let targets: Vec<IntervalSet> = cover.iter().map(|v| f.preimage(v)).collect();
        if !refinable_line(x, &targets) {
            return Err(Witness::LineFamily(cover));
        }
    }
    Ok(())
}

fn big_w_line(f: &PlMap, x: &LineGts, y: &LineGts) -> Check {
    small_w_line(f, x, y)?;
    if !y.is_small() && y.window().is_none() && x.is_small() && !f.is_bounded_on(&x.carrier()) {
        // the chain (-n, n) is admissible in y; an essentially finite refinement of its
        // preimage has bounded image
        return Err(Witness::Chain(AffineChain::symmetric()));
    }
    Ok(())
}

/// Every finite open cover is refined by a finite cover of pairwise disjoint opens.
pub fn is_zero_dimensional(y: &Space) -> Check {
    match y {
        Space::Finite(g) => zero_dimensional_finite(g),
        Space::Line(l) => Err(Witness::LineFamily(connected_cover(l))),
    }
}

fn zero_dimensional_finite(g: &FiniteGts) -> Check {
    let n = g.n();
    let clopen: Vec<AtomSet> = g.op().iter().copied().filter(|u| g.is_open(u.complement(n))).collect();
    // the finest partition into opens is the one into minimal nonempty clopen sets
    let atoms: Vec<AtomSet> =
        clopen.iter().copied().filter(|a| !a.is_empty() && !clopen.iter().any(|b| !b.is_empty() && b != a && b.is_subset_of(*a))).collect();
    for a in atoms {
        let bad: Vec<AtomSet> = g.op().iter().copied().filter(|v| !a.is_subset_of(*v)).collect();
        if bad.iter().fold(AtomSet::EMPTY, |s, &v| s.union(v)) == g.full() {
            return Err(Witness::FiniteFamily(bad));
        }
    }
    Ok(())
}

/// A finite open cover of a connected line model with no member equal to the whole carrier.
fn connected_cover(l: &LineGts) -> Vec<IntervalSet> {
    match l.window() {
        Some((a, b)) => {
            let m = (a + b) / q(2);
            let d = (b - a) / q(4);
            vec![
                IntervalSet::from_interval(crate::carrier::Interval::new(a.clone(), true, &m + &d, false).expect("nonempty")),
                IntervalSet::from_interval(crate::carrier::Interval::new(&m - &d, false, b.clone(), true).expect("nonempty")),
            ]
        }
        None if l.kind() == LineKind::C0 => {
            vec![IntervalSet::open(q(-1), q(2)), IntervalSet::closed(q(0), q(1)).complement()]
        }
        None => vec![IntervalSet::open(Bound::NegInf, q(1)), IntervalSet::open(q(-1), Bound::PosInf)],
    }
}

/// All four continuity verdicts for one map and the implications they must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HierarchyReport {
    pub strict: Option<bool>,
    pub weak: Option<bool>,
    pub small_w: Option<bool>,
    pub big_w: Option<bool>,
    /// Implications that failed; any entry is a bug.
    pub violations: Vec<String>,
}

fn is_small(s: &Space) -> bool {
    match s {
        Space::Finite(g) => g.is_small(),
        Space::Line(l) => l.is_small(),
    }
}

fn admissibly_compact(s: &Space) -> bool {
    match s {
        Space::Finite(_) => true,
        Space::Line(l) => l.compactness_flags().admissible,
    }
}

fn disjunctive(s: &Space) -> bool {
    match s {
        Space::Finite(g) => g.closed_ring().is_disjunctive().is_ok(),
        // singletons are closed and miss every closed set avoiding their point
        Space::Line(_) => true,
    }
}

pub fn hierarchy_facts(f: &GtsMap, x: &Space, y: &Space) -> Result<HierarchyReport, MorphismError> {
    let eval = |k| match continuity(f, x, y, k) {
        Ok(c) => Ok(Some(c.is_ok())),
        Err(MorphismError::BackendUnsupported(_)) | Err(MorphismError::SearchSpaceTooLarge(_)) => Ok(None),
        Err(e) => Err(e),
    };
    let strict = eval(ContinuityKind::Strict)?;
    let weak = eval(ContinuityKind::Weak)?;
    let small_w = eval(ContinuityKind::SmallW)?;
    let big_w = eval(ContinuityKind::BigW)?;
    let mut violations = Vec::new();
    let mut need = |premise: bool, conclusion: Option<bool>, what: &str| {
        if premise && conclusion == Some(false) {
            violations.push(what.to_string());
        }
    };
    let t = |v: Option<bool>| v == Some(true);
    need(t(strict), small_w, "strict but not w-continuous");
    need(t(strict), big_w, "strict but not W-continuous");
    need(admissibly_compact(x) && t(big_w), small_w, "W but not w on an admissibly compact domain");
    need(admissibly_compact(y) && t(small_w), big_w, "w but not W into an admissibly compact codomain");
    if is_small(x) && is_small(y) {
        need(t(big_w), small_w, "W but not w between small spaces");
        need(t(small_w), big_w, "w but not W between small spaces");
    }
    need(is_zero_dimensional(y).is_ok() && t(big_w), small_w, "W but not w into a zero-dimensional codomain");
    need(disjunctive(y) && (t(small_w) || t(big_w)), weak, "w or W but not weakly continuous into a disjunctive codomain");
    Ok(HierarchyReport { strict, weak, small_w, big_w, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::parse_interval_set as iv;

    fn s(b: u64) -> AtomSet {
        AtomSet(b)
    }

    #[test]
    fn identity_passes_everything() {
        let g = Space::Finite(FiniteGts::topological(2, [s(0), s(1), s(3)]).unwrap());
        let id = GtsMap::Finite(FiniteMap::identity(2));
        for k in ContinuityKind::ALL {
            assert_eq!(continuity(&id, &g, &g, k).unwrap(), Ok(()), "{k}");
        }
        let r = Space::Line(LineGts::rom());
        let idl = GtsMap::PiecewiseLinear(PlMap::identity());
        for k in ContinuityKind::ALL {
            assert_eq!(continuity(&idl, &r, &r, k).unwrap(), Ok(()), "{k}");
        }
    }

    #[test]
    fn small_into_topological_line() {
        let id = GtsMap::PiecewiseLinear(PlMap::identity());
        let (x, y) = (Space::Line(LineGts::rom()), Space::Line(LineGts::rom_topological()));
        assert_eq!(continuity(&id, &x, &y, ContinuityKind::SmallW).unwrap(), Ok(()));
        assert_eq!(continuity(&id, &x, &y, ContinuityKind::BigW).unwrap(), Err(Witness::Chain(AffineChain::symmetric())));
    }

    #[test]
    fn clamp_is_strict() {
        let clamp = GtsMap::PiecewiseLinear(PlMap::clamp01());
        let (x, y) = (Space::Line(LineGts::rom()), Space::Line(LineGts::i_rom()));
        assert_eq!(continuity(&clamp, &x, &y, ContinuityKind::Strict).unwrap(), Ok(()));
        let id = GtsMap::PiecewiseLinear(PlMap::identity());
        assert!(continuity(&id, &x, &y, ContinuityKind::Strict).unwrap().is_err());
    }

    #[test]
    fn c0_into_rom_is_not_w() {
        let id = GtsMap::PiecewiseLinear(PlMap::identity());
        let (c0, rom) = (Space::Line(LineGts::c0()), Space::Line(LineGts::rom()));
        let w = continuity(&id, &c0, &rom, ContinuityKind::SmallW).unwrap();
        assert_eq!(w, Err(Witness::LineFamily(vec![iv("(-inf,1)").unwrap(), iv("(-1,inf)").unwrap()])));
        assert_eq!(continuity(&id, &rom, &c0, ContinuityKind::SmallW).unwrap(), Ok(()));
        assert_eq!(continuity(&id, &rom, &c0, ContinuityKind::Strict).unwrap(), Ok(()));
        assert!(continuity(&id, &c0, &rom, ContinuityKind::Strict).unwrap().is_err());
    }

    #[test]
    fn zero_dimensional_cases() {
        assert!(is_zero_dimensional(&Space::Finite(FiniteGts::discrete(3))).is_ok());
        assert!(is_zero_dimensional(&Space::Finite(FiniteGts::indiscrete(3))).is_ok());
        let sier = FiniteGts::topological(2, [s(0), s(1), s(3)]).unwrap();
        assert!(is_zero_dimensional(&Space::Finite(sier)).is_ok());
        let v = FiniteGts::topological(3, [s(0), s(1), s(2), s(3), s(7)]).unwrap();
        assert!(is_zero_dimensional(&Space::Finite(v)).is_ok());
        let overlap = FiniteGts::topological(3, [s(0), s(2), s(3), s(6), s(7)]).unwrap();
        assert_eq!(
            is_zero_dimensional(&Space::Finite(overlap)),
            Err(Witness::FiniteFamily(vec![s(0), s(2), s(3), s(6)]))
        );
        assert_eq!(
            is_zero_dimensional(&Space::Line(LineGts::rom())),
            Err(Witness::LineFamily(vec![iv("(-inf,1)").unwrap(), iv("(-1,inf)").unwrap()]))
        );
    }

    #[test]
    fn hierarchy_on_small_maps() {
        let x = Space::Finite(FiniteGts::topological(2, [s(0), s(1), s(3)]).unwrap());
        let y = Space::Finite(FiniteGts::discrete(2));
        for table in [vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]] {
            let f = GtsMap::Finite(FiniteMap::new(table, 2).unwrap());
            assert!(hierarchy_facts(&f, &x, &y).unwrap().violations.is_empty());
            assert!(hierarchy_facts(&f, &y, &x).unwrap().violations.is_empty());
        }
    }
}
