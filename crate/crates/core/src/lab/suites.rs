//! Theorem suites: exhaustive or sampled comparisons of two independently computed sides.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::carrier::AtomSet;
use crate::compactify::finite::{compare_finite, enumerate_bundles, wallman_bundle};
use crate::compactify::line::disjoint_noncompact_pair;
use crate::compactify::{alexandroff_strict, FiniteBundle, Verdict};
use crate::gts::{enumerate_topologies, FiniteGts, LineGts, Space};
use crate::morphisms::extension::wallman_extension_exists;
use crate::morphisms::{continuity, ContinuityKind, FiniteMap, GtsMap};
use crate::products::{product, ProductMode, ProductSpec};
use crate::ring::{FiniteRing, RingTag};

use super::document::{CarrierDecl, Document, GtsBody, GtsDecl, MapDecl, RingDecl};
use super::enumerate::{all_tables, enumerate_complete_rings};
use super::sample::disjoint_pairs;
use super::LabError;

/// Registered suites with a one-line description.
pub const SUITES: [(&str, &str); 7] = [
    ("prop-1.8", "weak normality of the induced gts against the Wallman base predicate"),
    ("prop-2.5", "disjunctive rings against T1 closed bases"),
    ("prop-5.12", "cov_w a generalized topology against admissible additivity of Ex"),
    ("thm-5.16", "finite additivity with a Hausdorff wallmanian base against Wallman equivalence"),
    ("prop-7.12", "finite additivity of one-point bundles against disjoint closed pairs"),
    ("thm-8.10", "Wallman extension against w-continuity"),
    ("prop-4.9", "products of discrete gtses are discrete and topological"),
];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_size: usize,
    pub jobs: usize,
    pub seed: u64,
    /// Flips the verdict of the first instance, to exercise the failure path.
    pub inject_fault: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_size: 3, jobs: 0, seed: 0, inject_fault: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub key: String,
    pub detail: String,
    /// A standalone document reproducing the instance, when it is finite.
    pub document: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub id: String,
    pub instances: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// One compared instance: `lhs == rhs` is the expected outcome.
struct Outcome {
    key: String,
    lhs: bool,
    rhs: bool,
    detail: String,
    document: Option<String>,
}

type Job = Box<dyn Fn() -> Outcome + Send + Sync>;

pub fn run_suite(id: &str, config: &SuiteConfig) -> Result<SuiteReport, LabError> {
    let jobs: Vec<Job> = match id {
        "prop-1.8" => ring_jobs(config, |r| {
            let g = FiniteGts::from_ring(r).expect("complete");
            (g.is_weakly_normal(), r.is_wallman_base(), "weakly normal vs Wallman base")
        })?,
        "prop-2.5" => ring_jobs(config, |r| {
            (r.is_disjunctive().is_ok(), r.is_t1_closed_base(), "disjunctive vs T1 closed base")
        })?,
        "prop-5.12" => bundle_jobs(config, false, |b| {
            (b.cov_w_is_gts(), b.admissibly_additive().is_ok(), "cov_w gts vs admissibly additive".into())
        }),
        "thm-5.16" => bundle_jobs(config, true, |b| {
            let lhs = b.finitely_additive().is_ok() && wallmanian_base_is_hausdorff(b);
            let rhs = b.base().is_weakly_normal()
                && wallman_bundle(b.base())
                    .ok()
                    .and_then(|w| compare_finite(b, &w, 4).ok())
                    .is_some_and(|v| matches!(v, Verdict::StrictlyEquivalent(_)));
            (lhs, rhs, "additive with Hausdorff base vs Wallman equivalent".into())
        }),
        "prop-7.12" => one_point_jobs(config),
        "thm-8.10" => extension_jobs(config),
        "prop-4.9" => product_jobs(config),
        other => return Err(LabError::UnknownSuite(other.into())),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| LabError::Invalid(e.to_string()))?;
    let mut outcomes: Vec<(usize, Outcome)> =
        pool.install(|| jobs.par_iter().enumerate().map(|(i, j)| (i, j())).collect());
    if config.inject_fault {
        if let Some((_, o)) = outcomes.first_mut() {
            o.lhs = !o.lhs;
            o.detail = format!("{} (fault injected)", o.detail);
        }
    }
    outcomes.sort_by(|a, b| a.1.key.cmp(&b.1.key).then(a.0.cmp(&b.0)));
    let instances = outcomes.len();
    let counterexamples = outcomes
        .into_iter()
        .filter(|(_, o)| o.lhs != o.rhs)
        .map(|(_, o)| Counterexample {
            key: o.key,
            detail: format!("{}: {} vs {}", o.detail, o.lhs, o.rhs),
            document: o.document,
        })
        .collect();
    Ok(SuiteReport { id: id.into(), instances, counterexamples })
}

fn atom_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn show(n: usize, s: AtomSet) -> String {
    let names: Vec<String> = s.atoms().map(|i| format!("x{i}")).collect();
    debug_assert!(s.is_subset_of(AtomSet::full(n)));
    format!("{{{}}}", names.join(","))
}

fn ring_document(r: &FiniteRing) -> String {
    let doc = Document {
        carriers: vec![CarrierDecl { name: "X".into(), atoms: atom_names(r.n()) }],
        rings: vec![RingDecl { name: "C".into(), carrier: "X".into(), members: r.members().iter().map(|&m| show(r.n(), m)).collect() }],
        spaces: vec![GtsDecl { name: "G".into(), body: GtsBody::Small { ring: "C".into() } }],
        ..Document::default()
    };
    doc.print().unwrap_or_default()
}

fn topology_decl(name: &str, carrier: &str, g: &FiniteGts) -> GtsDecl {
    GtsDecl {
        name: name.into(),
        body: GtsBody::Topological { carrier: carrier.into(), opens: g.topology().iter().map(|&u| show(g.n(), u)).collect() },
    }
}

fn ring_jobs(
    config: &SuiteConfig,
    f: impl Fn(&FiniteRing) -> (bool, bool, &'static str) + Send + Sync + Clone + 'static,
) -> Result<Vec<Job>, LabError> {
    let mut jobs: Vec<Job> = Vec::new();
    for n in 1..=config.max_size {
        for r in enumerate_complete_rings(n)? {
            let f = f.clone();
            jobs.push(Box::new(move || {
                let (lhs, rhs, what) = f(&r);
                let key = format!("n{}/{:?}", r.n(), r.members().iter().map(|m| m.bits()).collect::<Vec<_>>());
                Outcome { key, lhs, rhs, detail: what.into(), document: Some(ring_document(&r)) }
            }));
        }
    }
    Ok(jobs)
}

fn wallmanian_base_is_hausdorff(b: &FiniteBundle) -> bool {
    let mut seed = b.op_w();
    seed.push(AtomSet::EMPTY);
    seed.push(b.full());
    let generated = crate::gts::axioms::generate_opens(b.total(), seed);
    generated.is_weakly_hausdorff()
}

/// Bundles over every topology on `n` points with `k` added points, `n + k ≤ 4`, `n ≤ max_size`.
fn bundle_jobs(
    config: &SuiteConfig,
    hausdorff_only: bool,
    f: impl Fn(&FiniteBundle) -> (bool, bool, String) + Send + Sync + Clone + 'static,
) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for n in 1..=config.max_size.min(4) {
        for opens in enumerate_topologies(n) {
            let base = FiniteGts::topological(n, opens).expect("enumerated");
            for k in 0..=(4 - n).min(2) {
                for b in enumerate_bundles(&base, k) {
                    if hausdorff_only && !b.is_hausdorff() {
                        continue;
                    }
                    let f = f.clone();
                    jobs.push(Box::new(move || {
                        let (lhs, rhs, detail) = f(&b);
                        let key = format!(
                            "n{}k{}/{:?}",
                            b.base().n(),
                            b.k(),
                            b.tau().iter().map(|u| u.bits()).collect::<Vec<_>>()
                        );
                        let total = FiniteGts::topological(b.total(), b.tau().to_vec()).expect("bundle topology");
                        let doc = Document {
                            carriers: vec![CarrierDecl { name: "T".into(), atoms: atom_names(b.total()) }],
                            spaces: vec![topology_decl("total", "T", &total)],
                            ..Document::default()
                        };
                        Outcome { key, lhs, rhs, detail, document: doc.print().ok() }
                    }));
                }
            }
        }
    }
    jobs
}

fn one_point_jobs(config: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for (line, tag) in [(LineGts::rom(), RingTag::RomClosed), (LineGts::c0(), RingTag::C0Rom)] {
        let b = alexandroff_strict(&line).expect("line is not compact");
        let global = b.clone();
        jobs.push(Box::new(move || Outcome {
            key: format!("{tag}/global"),
            lhs: global.additivity().finitely.is_ok(),
            rhs: disjoint_noncompact_pair(tag).is_none(),
            detail: "finitely additive vs no disjoint noncompact pair".into(),
            document: None,
        }));
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for (i, (a, c)) in disjoint_pairs(&mut rng, tag, 60).into_iter().enumerate() {
            let b = b.clone();
            jobs.push(Box::new(move || {
                let (lhs, rhs) = b.local_pair_check(&a, &c);
                Outcome {
                    key: format!("{tag}/pair{i:03}"),
                    lhs,
                    rhs,
                    detail: format!("extensions of complements of {a} and {c} cover vs one is compact"),
                    document: None,
                }
            }));
        }
    }
    jobs
}

fn extension_jobs(config: &SuiteConfig) -> Vec<Job> {
    let spaces: Vec<FiniteGts> = (1..=config.max_size.min(3))
        .flat_map(|n| enumerate_topologies(n).into_iter().map(move |op| FiniteGts::topological(n, op).expect("enumerated")))
        .filter(FiniteGts::is_weakly_normal)
        .collect();
    let mut jobs: Vec<Job> = Vec::new();
    for (i, x) in spaces.iter().enumerate() {
        for (j, y) in spaces.iter().enumerate() {
            for table in all_tables(x.n(), y.n()) {
                let (x, y) = (x.clone(), y.clone());
                jobs.push(Box::new(move || {
                    let m = FiniteMap::new(table.clone(), y.n()).expect("in range");
                    let lhs = wallman_extension_exists(&m, &x, &y).unwrap_or(false);
                    let rhs = continuity(&GtsMap::Finite(m), &Space::Finite(x.clone()), &Space::Finite(y.clone()), ContinuityKind::SmallW)
                        .map(|c| c.is_ok())
                        .unwrap_or(true);
                    let doc = Document {
                        carriers: vec![
                            CarrierDecl { name: "X".into(), atoms: atom_names(x.n()) },
                            CarrierDecl { name: "Y".into(), atoms: atom_names(y.n()) },
                        ],
                        spaces: vec![topology_decl("GX", "X", &x), topology_decl("GY", "Y", &y)],
                        maps: vec![MapDecl {
                            name: "f".into(),
                            from: "GX".into(),
                            to: "GY".into(),
                            table: Some(table.iter().map(|&t| format!("x{t}")).collect()),
                            values: None,
                            pieces: None,
                        }],
                        ..Document::default()
                    };
                    Outcome {
                        key: format!("x{i:02}/y{j:02}/{table:?}"),
                        lhs,
                        rhs,
                        detail: "extension exists vs w-continuous".into(),
                        document: doc.print().ok(),
                    }
                }));
            }
        }
    }
    jobs
}

fn product_jobs(config: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for a in 1..=config.max_size.min(3) {
        for b in 1..=config.max_size.min(3) {
            jobs.push(Box::new(move || {
                let spec = ProductSpec::new(vec![FiniteGts::discrete(a), FiniteGts::discrete(b)], ProductMode::Gts);
                let lhs = product(&spec).map(|p| p.gts().is_topological() && p.gts().op().len() == 1 << (a * b)).unwrap_or(false);
                Outcome {
                    key: format!("{a}x{b}"),
                    lhs,
                    rhs: true,
                    detail: "product is discrete topological".into(),
                    document: None,
                }
            }));
        }
    }
    jobs
}
