//! Products of finite gtses, evaluation maps into them and projection checks.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::carrier::AtomSet;
use crate::carrier::finite::MAX_ATOMS;
use crate::gts::axioms::{generate, generate_opens};
use crate::gts::{enumerate_topologies, relabel, Family, FiniteGts, Space, MAX_EXPLICIT};
use crate::morphisms::{continuity, Check, ContinuityKind, FiniteMap, GtsMap, Witness};

/// Above this many points products are generated from opens instead of literal families.
const LITERAL_ATOMS: usize = 4;

/// Largest product carrier built by default.
pub const DEFAULT_BOUND: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("a product needs at least one factor")]
    NoFactors,
    #[error("product carrier has {size} points, bound is {max}")]
    CarrierBoundExceeded { size: usize, max: usize },
    #[error("invalid map: {0}")]
    InvalidMap(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductMode {
    Gts,
    /// The partial topologization of the plain product.
    GtsPt,
}

#[derive(Clone, Debug)]
pub struct ProductSpec {
    pub factors: Vec<FiniteGts>,
    pub mode: ProductMode,
    pub bound: usize,
}

impl ProductSpec {
    pub fn new(factors: Vec<FiniteGts>, mode: ProductMode) -> Self {
        ProductSpec { factors, mode, bound: DEFAULT_BOUND }
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }
}

/// Points of a product carrier are numbered in mixed radix, first factor fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    factors: Vec<FiniteGts>,
    mode: ProductMode,
    gts: FiniteGts,
}

fn checked_size(sizes: &[usize], bound: usize) -> Result<usize, ProductError> {
    let mut size = 1usize;
    for &s in sizes {
        size = size.saturating_mul(s);
    }
    let max = bound.min(MAX_ATOMS);
    if size > max {
        return Err(ProductError::CarrierBoundExceeded { size, max });
    }
    Ok(size)
}

/// Preimage of `u ⊆ factor j` under the `j`-th projection.
fn cylinder(sizes: &[usize], j: usize, u: AtomSet) -> AtomSet {
    let total: usize = sizes.iter().product();
    let stride: usize = sizes[..j].iter().product();
    AtomSet::from_atoms((0..total).filter(|&p| u.contains((p / stride) % sizes[j])))
}

pub fn product(spec: &ProductSpec) -> Result<Product, ProductError> {
    if spec.factors.is_empty() {
        return Err(ProductError::NoFactors);
    }
    let sizes: Vec<usize> = spec.factors.iter().map(FiniteGts::n).collect();
    let n = checked_size(&sizes, spec.bound)?;
    let gts = if n <= LITERAL_ATOMS {
        // the literal generation from the pulled back admissible families
        let seed: Vec<Family> = spec
            .factors
            .iter()
            .enumerate()
            .flat_map(|(j, g)| {
                let sizes = &sizes;
                g.cov_families()
                    .into_iter()
                    .map(move |f| Family::from_sets(f.members().map(|u| cylinder(sizes, j, u))))
            })
            .collect();
        generate(n, &seed)
    } else {
        let seed: Vec<AtomSet> = spec
            .factors
            .iter()
            .enumerate()
            .flat_map(|(j, g)| g.op().iter().map(|&u| cylinder(&sizes, j, u)).collect::<Vec<_>>())
            .collect();
        generate_opens(n, seed)
    };
    let gts = match spec.mode {
        ProductMode::Gts => gts,
        ProductMode::GtsPt => gts.partial_topologize(),
    };
    Ok(Product { factors: spec.factors.clone(), mode: spec.mode, gts })
}

impl Product {
    pub fn gts(&self) -> &FiniteGts {
        &self.gts
    }

    pub fn factors(&self) -> &[FiniteGts] {
        &self.factors
    }

    pub fn mode(&self) -> ProductMode {
        self.mode
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.factors.iter().map(FiniteGts::n).collect()
    }

    pub fn n(&self) -> usize {
        self.gts.n()
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        let mut stride = 1;
        let mut p = 0;
        for (c, g) in coords.iter().zip(&self.factors) {
            p += c * stride;
            stride *= g.n();
        }
        p
    }

    pub fn coords(&self, mut p: usize) -> Vec<usize> {
        self.factors
            .iter()
            .map(|g| {
                let c = p % g.n();
                p /= g.n();
                c
            })
            .collect()
    }

    pub fn projection(&self, j: usize) -> FiniteMap {
        let table = (0..self.n()).map(|p| self.coords(p)[j]).collect();
        FiniteMap::new(table, self.factors[j].n()).expect("coordinates are in range")
    }

    pub fn cylinder(&self, j: usize, u: AtomSet) -> AtomSet {
        cylinder(&self.sizes(), j, u)
    }

    /// The box with the given sides.
    pub fn rectangle(&self, sides: &[AtomSet]) -> AtomSet {
        sides.iter().enumerate().fold(self.gts.full(), |acc, (j, &u)| acc.intersect(self.cylinder(j, u)))
    }

    /// Whether the topologization of the product is the product of the factor topologies:
    /// a set is open there iff it contains the box of smallest neighbourhoods of each point.
    pub fn topologization_is_tychonoff(&self) -> bool {
        let taus: Vec<FiniteGts> = self.factors.iter().map(FiniteGts::topologize).collect();
        let nbhd: Vec<AtomSet> = (0..self.n())
            .map(|p| {
                let sides: Vec<AtomSet> = self
                    .coords(p)
                    .into_iter()
                    .zip(&taus)
                    .map(|(c, t)| t.smallest_open_superset(AtomSet::singleton(c)).expect("topology"))
                    .collect();
                self.rectangle(&sides)
            })
            .collect();
        let expected: Vec<AtomSet> =
            AtomSet::all(self.n()).filter(|w| w.atoms().all(|p| nbhd[p].is_subset_of(*w))).collect();
        self.gts.topology() == expected
    }
}

/// A weakly closed set of `X × Y` whose projection to `Y` is not weakly closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionFailure {
    pub probe: FiniteGts,
    pub closed: AtomSet,
    pub image: AtomSet,
}

/// Probes every gts on at most `probe_bound` atoms (capped at 3) and checks that weakly closed
/// subsets of `X × Y` project onto weakly closed subsets of `Y`. `corrupt` sees each product
/// before it is probed; tests use it to break the construction on purpose.
pub fn projection_failure_with(
    x: &FiniteGts,
    probe_bound: usize,
    corrupt: &(dyn Fn(&Product) -> FiniteGts + Sync),
) -> Result<Option<ProjectionFailure>, ProductError> {
    let probes: Vec<FiniteGts> = (1..=probe_bound.min(3))
        .flat_map(|m| enumerate_topologies(m).into_iter().map(move |op| FiniteGts::topological(m, op).expect("enumerated topology")))
        .collect();
    probes
        .into_par_iter()
        .map(|y| {
            let spec = ProductSpec::new(vec![x.clone(), y.clone()], ProductMode::Gts).with_bound(MAX_ATOMS);
            let p = product(&spec)?;
            let g = corrupt(&p);
            let pi = p.projection(1);
            let ty = y.topologize();
            for c in g.topologize().closed_sets() {
                let image = pi.image(c);
                if !ty.is_closed(image) {
                    return Ok(Some(ProjectionFailure { probe: y.clone(), closed: c, image }));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>, ProductError>>()
        .map(|v| v.into_iter().flatten().next())
}

pub fn projection_closedness(x: &FiniteGts, probe_bound: usize) -> bool {
    matches!(projection_failure_with(x, probe_bound, &|p: &Product| p.gts().clone()), Ok(None))
}

/// Injective, strictly continuous, and every admissible family of `x` is sent to an admissible
/// family of the subspace generated on the image.
pub fn is_embedding(m: &FiniteMap, x: &FiniteGts, y: &FiniteGts) -> Result<Check, ProductError> {
    if !m.is_injective() {
        return Ok(Err(Witness::Note("not injective".into())));
    }
    let strict = continuity(&GtsMap::Finite(m.clone()), &Space::Finite(x.clone()), &Space::Finite(y.clone()), ContinuityKind::Strict)
        .map_err(|e| ProductError::InvalidMap(e.to_string()))?;
    if let Err(w) = strict {
        return Ok(Err(w));
    }
    let img = m.image(x.full());
    let sub = y.generated_subspace(img);
    let (_, to_sub) = relabel(img);
    let push = |u: AtomSet| to_sub(m.image(u));
    if let Some(&u) = x.op().iter().find(|&&u| !sub.is_open(push(u))) {
        return Ok(Err(Witness::FiniteSet(u)));
    }
    if matches!(x.cov(), crate::gts::CovBackend::Explicit(_)) {
        for fam in x.cov_families() {
            if !sub.is_admissible_sets(&fam.members().map(push).collect::<Vec<_>>()) {
                return Ok(Err(Witness::FiniteFamily(fam.members().collect())));
            }
        }
    }
    Ok(Ok(()))
}

/// The evaluation map of a family of maps together with its verdicts.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub map: FiniteMap,
    pub product: Product,
    pub strictly_continuous: Check,
    pub embedding: Check,
    /// Every member is strictly continuous and at least one is an embedding.
    pub hypothesis: bool,
}

pub fn evaluation_embedding(x: &FiniteGts, family: &[(FiniteMap, FiniteGts)]) -> Result<Evaluation, ProductError> {
    if family.is_empty() {
        return Err(ProductError::NoFactors);
    }
    for (m, y) in family {
        if m.domain() != x.n() || m.codomain() != y.n() {
            return Err(ProductError::InvalidMap(format!(
                "map {:?} does not go from {} to {} atoms",
                m.table(),
                x.n(),
                y.n()
            )));
        }
    }
    let factors: Vec<FiniteGts> = family.iter().map(|(_, y)| y.clone()).collect();
    let product = product(&ProductSpec::new(factors, ProductMode::Gts).with_bound(MAX_ATOMS))?;
    let table: Vec<usize> = (0..x.n())
        .map(|p| product.index(&family.iter().map(|(m, _)| m.apply(p)).collect::<Vec<_>>()))
        .collect();
    let map = FiniteMap::new(table, product.n()).map_err(|e| ProductError::InvalidMap(e.to_string()))?;
    let xs = Space::Finite(x.clone());
    let strictly_continuous = continuity(&GtsMap::Finite(map.clone()), &xs, &Space::Finite(product.gts().clone()), ContinuityKind::Strict)
        .map_err(|e| ProductError::InvalidMap(e.to_string()))?;
    let mut hypothesis = true;
    let mut some_embedding = false;
    for (m, y) in family {
        let c = continuity(&GtsMap::Finite(m.clone()), &xs, &Space::Finite(y.clone()), ContinuityKind::Strict)
            .map_err(|e| ProductError::InvalidMap(e.to_string()))?;
        hypothesis &= c.is_ok();
        some_embedding |= is_embedding(m, x, y)?.is_ok();
    }
    let embedding = is_embedding(&map, x, product.gts())?;
    Ok(Evaluation { map, product, strictly_continuous, embedding, hypothesis: hypothesis && some_embedding })
}

/// Product of the subspaces on `sides` against the subspace of the product on their box.
pub fn subspace_product_agrees(factors: &[FiniteGts], sides: &[AtomSet]) -> Result<bool, ProductError> {
    let whole = product(&ProductSpec::new(factors.to_vec(), ProductMode::Gts).with_bound(MAX_ATOMS))?;
    let subs: Vec<FiniteGts> = factors.iter().zip(sides).map(|(g, &a)| g.generated_subspace(a)).collect();
    let small = product(&ProductSpec::new(subs, ProductMode::Gts).with_bound(MAX_ATOMS))?;
    let inside = whole.gts().generated_subspace(whole.rectangle(sides));
    Ok(small.gts().same_as(&inside) || same_families(small.gts(), &inside))
}

/// Compares by admissible families when the backends differ but the carrier is small.
fn same_families(a: &FiniteGts, b: &FiniteGts) -> bool {
    a.n() == b.n() && a.op() == b.op() && (a.n() > MAX_EXPLICIT || a.cov_families() == b.cov_families())
}

/// Traces every family on `a` and renumbers `a` as `0..|a|`.
pub fn trace_families(psi: &[Family], a: AtomSet) -> Vec<Family> {
    let (_, to_a) = relabel(a);
    psi.iter().map(|f| Family::from_sets(f.members().map(|u| to_a(u.intersect(a))))).collect()
}

/// `U ↦ U × Y` on every member, with `X × Y` numbered as in [`Product`].
pub fn cylinder_families(psi: &[Family], nx: usize, ny: usize) -> Vec<Family> {
    let sizes = [nx, ny];
    psi.iter().map(|f| Family::from_sets(f.members().map(|u| cylinder(&sizes, 0, u)))).collect()
}

/// Generating then tracing agrees with tracing then generating.
pub fn trace_generation_commutes(n: usize, psi: &[Family], a: AtomSet) -> bool {
    let m = a.len();
    let outer: Vec<Family> = generate(n, psi).cov_families().into_iter().collect();
    let lhs = generate(m, &trace_families(&outer, a));
    let rhs = generate(m, &trace_families(psi, a));
    lhs.cov_families() == rhs.cov_families()
}

/// Generating commutes with `× Y`, and the cylinder families of a generated gts are already
/// a generalized topology.
pub fn cylinder_generation_commutes(nx: usize, ny: usize, psi: &[Family]) -> bool {
    let gen_x: Vec<Family> = generate(nx, psi).cov_families().into_iter().collect();
    let middle: BTreeSet<Family> = cylinder_families(&gen_x, nx, ny).into_iter().collect();
    let lhs = generate(nx * ny, &cylinder_families(&gen_x, nx, ny)).cov_families();
    let rhs = generate(nx * ny, &cylinder_families(psi, nx, ny)).cov_families();
    lhs == middle && middle == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(b: u64) -> AtomSet {
        AtomSet(b)
    }

    fn sierpinski() -> FiniteGts {
        FiniteGts::topological(2, [s(0), s(1), s(3)]).unwrap()
    }

    #[test]
    fn singleton_factor_and_discrete_square() {
        let p = product(&ProductSpec::new(vec![sierpinski()], ProductMode::Gts)).unwrap();
        assert!(p.gts().same_as(&sierpinski()));
        let d = product(&ProductSpec::new(vec![FiniteGts::discrete(2); 2], ProductMode::Gts)).unwrap();
        assert!(d.gts().is_topological());
        assert_eq!(d.gts().op(), FiniteGts::discrete(4).op());
        assert!(d.topologization_is_tychonoff());
    }

    #[test]
    fn bound_and_coordinates() {
        let spec = ProductSpec::new(vec![FiniteGts::discrete(3); 3], ProductMode::Gts);
        assert_eq!(product(&spec).unwrap_err(), ProductError::CarrierBoundExceeded { size: 27, max: 16 });
        let p = product(&ProductSpec::new(vec![FiniteGts::discrete(2), FiniteGts::discrete(3)], ProductMode::GtsPt)).unwrap();
        for i in 0..6 {
            assert_eq!(p.index(&p.coords(i)), i);
        }
        assert_eq!(p.projection(1).table(), &[0, 0, 1, 1, 2, 2]);
    }

    #[test]
    fn sierpinski_square_is_tychonoff() {
        let p = product(&ProductSpec::new(vec![sierpinski(), sierpinski()], ProductMode::Gts)).unwrap();
        assert!(p.topologization_is_tychonoff());
        // opens of the square: down-sets of the order with 1 above 0 in each coordinate
        assert_eq!(p.gts().op().len(), 6);
    }

    #[test]
    fn projections_are_closed_and_faults_are_caught() {
        assert!(projection_closedness(&sierpinski(), 2));
        assert!(projection_closedness(&FiniteGts::discrete(1), 3));
        let discretize = |p: &Product| FiniteGts::discrete(p.n());
        let f = projection_failure_with(&FiniteGts::discrete(1), 2, &discretize).unwrap().expect("fault shows");
        assert!(!f.probe.topologize().is_closed(f.image));
    }

    #[test]
    fn evaluation_cases() {
        let x = sierpinski();
        let id = (FiniteMap::identity(2), x.clone());
        let e = evaluation_embedding(&x, std::slice::from_ref(&id)).unwrap();
        assert_eq!(e.embedding, Ok(()));
        let k = (FiniteMap::constant(2, 3, 1).unwrap(), FiniteGts::discrete(3));
        let e = evaluation_embedding(&x, &[id, k.clone()]).unwrap();
        assert!(e.hypothesis && e.strictly_continuous.is_ok() && e.embedding.is_ok());
        let e = evaluation_embedding(&x, &[k.clone(), k]).unwrap();
        assert!(!e.map.is_injective() && e.embedding.is_err());
    }

    #[test]
    fn generation_identities() {
        let psi = [Family::from_sets([s(1), s(6)]), Family::from_sets([s(3)])];
        assert!(trace_generation_commutes(3, &psi, s(0b101)));
        assert!(cylinder_generation_commutes(3, 2, &psi));
        assert!(subspace_product_agrees(&[sierpinski(), FiniteGts::discrete(3)], &[s(2), s(5)]).unwrap());
    }
}
