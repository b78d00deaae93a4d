//! The twelve acceptance criteria, one pass/fail line each. Runs without the test harness so
//! the lines always reach the output; exits nonzero if any criterion fails.
//!
//! Set `GTS_EXTENDED=1` to enumerate carriers of size 4 where the criteria allow it.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gts_lab::carrier::{parse_interval_set as iv, q, qf, AtomSet, IntervalSet, Q};
use gts_lab::compactify::finite::enumerate_bundles;
use gts_lab::compactify::line::{alexandroff_report, bounded_interval_compactification};
use gts_lab::compactify::quotient::QuotientLattice;
use gts_lab::compactify::{alexandroff_strict, compare, finite_remainder, two_point_glue, TotalSet, Verdict};
use gts_lab::filters::{enumerate_ultrafilters, LineWallman, WallmanPoint, WallmanSpace};
use gts_lab::gts::axioms::generate;
use gts_lab::gts::{enumerate_topologies, Adverb, AffineChain, Compactness, Family, FiniteGts, GtsError, LineFamily, LineGts, Space};
use gts_lab::lab::sample::random_closed_set;
use gts_lab::lab::{check_document, enumerate_complete_rings, run_suite, Document, SuiteConfig};
use gts_lab::morphisms::{continuity, hierarchy_facts, wallman_extension, ContinuityKind, Extension, FiniteMap, GtsMap, PlMap};
use gts_lab::products::{
    cylinder_generation_commutes, evaluation_embedding, product, subspace_product_agrees, trace_generation_commutes,
    ProductMode, ProductSpec,
};
use gts_lab::ring::{FiniteRing, RingTag};

/// Time limits stated by the criteria.
const RING_SUITE_LIMIT: Duration = Duration::from_secs(60);
const GLUE_LIMIT: Duration = Duration::from_secs(10);
const EXTENSION_LIMIT: Duration = Duration::from_secs(300);

/// Sample sizes stated by the criteria.
const LINE_LATTICE_PAIRS: usize = 200;
const LINE_ADDITIVITY_PAIRS: usize = 50;
const CLOSURE_LAW_SAMPLES: usize = 100;
const RANDOM_COVERS: usize = 100;
const RANDOM_PRODUCT_INSTANCES: usize = 50;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn extended() -> bool {
    std::env::var("GTS_EXTENDED").is_ok_and(|v| v == "1")
}

fn ring_bound() -> usize {
    if extended() {
        4
    } else {
        3
    }
}

fn all_rings(max: usize) -> Vec<FiniteRing> {
    (1..=max).flat_map(|n| enumerate_complete_rings(n).expect("within bound")).collect()
}

fn topologies(n: usize) -> Vec<FiniteGts> {
    enumerate_topologies(n).into_iter().map(|op| FiniteGts::topological(n, op).expect("enumerated")).collect()
}

fn bits(s: AtomSet) -> u64 {
    s.bits()
}

fn full(n: usize) -> u64 {
    (1u64 << n) - 1
}

// ---------------------------------------------------------------------------------------------
// Oracles written from the definitions, on raw bitmasks.

/// Closed-set ring -> weakly normal induced gts: disjoint sets that are singletons or closed
/// sit in disjoint complements of members.
fn oracle_weakly_normal(n: usize, ring: &[u64]) -> bool {
    let opens: Vec<u64> = ring.iter().map(|c| full(n) & !c).collect();
    let targets: Vec<u64> = ring.iter().copied().chain((0..n).map(|i| 1u64 << i)).collect();
    targets.iter().all(|&a1| {
        targets.iter().all(|&a2| {
            a1 & a2 != 0 || opens.iter().any(|&w1| a1 & !w1 == 0 && opens.iter().any(|&w2| a2 & !w2 == 0 && w1 & w2 == 0))
        })
    })
}

/// Wallman base of the topology whose closed sets are the ring itself (the ring is complete
/// and finite, so it is its own closed-set lattice and trivially a closed base).
fn oracle_wallman_base(n: usize, ring: &[u64]) -> bool {
    let is_ring = ring.iter().all(|&a| ring.iter().all(|&b| ring.contains(&(a | b)) && ring.contains(&(a & b))));
    let targets: Vec<u64> = ring.iter().copied().chain((0..n).map(|i| 1u64 << i)).collect();
    let separating = (0..n).all(|x| {
        targets.iter().all(|&a| a >> x & 1 == 1 || ring.iter().any(|&c| c >> x & 1 == 1 && c & a == 0))
    });
    let screening = ring.iter().all(|&a1| {
        ring.iter().all(|&a2| {
            a1 & a2 != 0 || ring.iter().any(|&c1| c1 & a1 == 0 && ring.iter().any(|&c2| c2 & a2 == 0 && c1 | c2 == full(n)))
        })
    });
    is_ring && separating && screening
}

fn oracle_disjunctive(n: usize, ring: &[u64]) -> bool {
    (0..n).all(|x| {
        ring.iter().copied().chain((0..n).map(|i| 1u64 << i)).all(|a| a >> x & 1 == 1 || ring.iter().any(|&c| c >> x & 1 == 1 && c & a == 0))
    })
}

/// T1 closed base of the topologization: a closed base whose members separate distinct points.
fn oracle_t1_base(n: usize, ring: &[u64]) -> bool {
    let closed_base = ring.iter().all(|&a| (0..n).all(|x| a >> x & 1 == 1 || ring.iter().any(|&c| c >> x & 1 == 0 && a & !c == 0)));
    closed_base && (0..n).all(|x| (0..n).all(|y| x == y || ring.iter().any(|&c| c >> x & 1 == 1 && c >> y & 1 == 0)))
}

/// Maximal filters of a finite ring by brute force over all subfamilies.
fn oracle_ultrafilters(ring: &[u64]) -> Vec<BTreeSet<u64>> {
    let k = ring.len();
    let mut filters: Vec<BTreeSet<u64>> = Vec::new();
    for mask in 1u64..(1 << k) {
        let fam: BTreeSet<u64> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| ring[i]).collect();
        let proper = !fam.contains(&0);
        let meets = fam.iter().all(|&a| fam.iter().all(|&b| fam.contains(&(a & b))));
        let upward = fam.iter().all(|&a| ring.iter().all(|&b| a & !b != 0 || fam.contains(&b)));
        if proper && meets && upward {
            filters.push(fam);
        }
    }
    filters.iter().filter(|f| !filters.iter().any(|g| g.len() > f.len() && f.is_subset(g))).cloned().collect()
}

fn line_point_oracle(p: &WallmanPoint, a: &IntervalSet) -> bool {
    match p {
        WallmanPoint::Fixed(x) => a.contains_point(x),
        WallmanPoint::MinusInfinity => a.unbounded_below(),
        WallmanPoint::PlusInfinity => a.unbounded_above(),
        WallmanPoint::Free => a.unbounded_below() || a.unbounded_above(),
        WallmanPoint::PrincipalAt(_) => false,
    }
}

/// `Ex(U) = T \ cl(X \ U)` computed from the bundle topology; the base `X` is the first `n` atoms.
fn oracle_ex(tau: &[AtomSet], total: usize, n: usize, u: u64) -> u64 {
    let outside = full(n) & !u;
    let closure = tau.iter().map(|&v| full(total) & !bits(v)).filter(|c| outside & !c == 0).fold(full(total), |a, c| a & c);
    full(total) & !closure
}

/// Product topology from boxes: a set is open iff it is a union of boxes `U x V` inside it.
fn oracle_product_opens(x: &FiniteGts, y: &FiniteGts) -> Vec<AtomSet> {
    let (nx, ny) = (x.n(), y.n());
    let cell = |i: usize, j: usize| 1u64 << (i + nx * j);
    let boxes: Vec<u64> = x
        .topology()
        .iter()
        .flat_map(|&u| {
            y.topology().into_iter().map(move |v| {
                let mut b = 0;
                for i in u.atoms() {
                    for j in v.atoms() {
                        b |= cell(i, j);
                    }
                }
                b
            })
        })
        .collect();
    let mut opens: Vec<AtomSet> = (0..1u64 << (nx * ny))
        .filter(|&w| boxes.iter().filter(|&&b| b & !w == 0).fold(0, |a, &b| a | b) == w)
        .map(AtomSet)
        .collect();
    opens.sort();
    opens
}

// ---------------------------------------------------------------------------------------------

fn c1_ring_normality() -> Outcome {
    let max = ring_bound();
    let start = Instant::now();
    let report = run_suite("prop-1.8", &SuiteConfig { max_size: max, ..SuiteConfig::default() }).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(report.passed(), || format!("{} discrepancies, first {:?}", report.counterexamples.len(), report.counterexamples[0]))?;
    ensure(max > 3 || elapsed <= RING_SUITE_LIMIT, || format!("took {elapsed:?}"))?;
    for r in all_rings(max) {
        let raw: Vec<u64> = r.members().iter().map(|&m| bits(m)).collect();
        let lib = FiniteGts::from_ring(&r).unwrap().is_weakly_normal();
        ensure(lib == oracle_weakly_normal(r.n(), &raw), || format!("weak normality oracle disagrees on {r}"))?;
        ensure(r.is_wallman_base() == oracle_wallman_base(r.n(), &raw), || format!("Wallman base oracle disagrees on {r}"))?;
    }
    Ok(format!("{} rings up to {max} atoms, 0 discrepancies, {elapsed:.2?}", report.instances))
}

fn c2_disjunctive() -> Outcome {
    let max = ring_bound();
    let report = run_suite("prop-2.5", &SuiteConfig { max_size: max, ..SuiteConfig::default() }).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{:?}", report.counterexamples.first()))?;
    for r in all_rings(max) {
        let raw: Vec<u64> = r.members().iter().map(|&m| bits(m)).collect();
        ensure(r.is_disjunctive().is_ok() == oracle_disjunctive(r.n(), &raw), || format!("disjunctive oracle on {r}"))?;
        ensure(r.is_t1_closed_base() == oracle_t1_base(r.n(), &raw), || format!("T1 base oracle on {r}"))?;
    }
    Ok(format!("{} rings, 0 discrepancies", report.instances))
}

fn c3_ultrafilters() -> Outcome {
    let rings = all_rings(3);
    for r in &rings {
        let raw: Vec<u64> = r.members().iter().map(|&m| bits(m)).collect();
        let mut ours: Vec<u64> = enumerate_ultrafilters(r)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|p| match p {
                WallmanPoint::PrincipalAt(m) => bits(m),
                other => panic!("finite ring produced {other}"),
            })
            .collect();
        // an ultrafilter of a finite ring is principal at the meet of its members
        let mut theirs: Vec<u64> = oracle_ultrafilters(&raw).iter().map(|f| f.iter().fold(full(r.n()), |a, &b| a & b)).collect();
        ours.sort();
        theirs.sort();
        ensure(ours == theirs, || format!("{r}: {ours:?} vs {theirs:?}"))?;
    }
    Ok(format!("{} rings up to 3 atoms match the brute-force maximal filters", rings.len()))
}

fn c4_lattice_laws() -> Outcome {
    let rings = all_rings(ring_bound());
    let mut pairs = 0usize;
    for r in &rings {
        let w = WallmanSpace::new(r).map_err(|e| e.to_string())?;
        let raw: Vec<u64> = r.members().iter().map(|&m| bits(m)).collect();
        let ufs = oracle_ultrafilters(&raw);
        let oracle_class = |a: u64| -> BTreeSet<usize> { (0..ufs.len()).filter(|&i| ufs[i].contains(&a)).collect() };
        for &a in r.members() {
            for &b in r.members() {
                pairs += 1;
                let c = |s| w.class(r, s).unwrap();
                ensure(c(a.intersect(b)) == c(a).intersect(c(b)), || format!("[A∩B] on {r}: {a} {b}"))?;
                ensure(c(a.union(b)) == c(a).union(c(b)), || format!("[A∪B] on {r}: {a} {b}"))?;
                let (oa, ob) = (oracle_class(bits(a)), oracle_class(bits(b)));
                ensure(oracle_class(bits(a) & bits(b)) == oa.intersection(&ob).copied().collect(), || format!("oracle ∩ {a} {b}"))?;
                ensure(oracle_class(bits(a) | bits(b)) == oa.union(&ob).copied().collect(), || format!("oracle ∪ {a} {b}"))?;
                ensure(c(a).len() == oa.len(), || format!("class sizes differ on {a}"))?;
            }
        }
    }
    let lw = LineWallman::new(RingTag::RomClosed).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..LINE_LATTICE_PAIRS {
        let (a, b) = (random_closed_set(&mut rng, RingTag::RomClosed), random_closed_set(&mut rng, RingTag::RomClosed));
        let cuts: Vec<Q> = a.endpoints().into_iter().chain(b.endpoints()).collect();
        let probes = IntervalSet::probes(&cuts);
        let class = |s: &IntervalSet| -> BTreeSet<WallmanPoint> { lw.class_points(s, &probes).into_iter().collect() };
        let (ca, cb) = (class(&a), class(&b));
        ensure(class(&a.intersect(&b)) == ca.intersection(&cb).cloned().collect(), || format!("[A∩B] for {a}, {b}"))?;
        ensure(class(&a.union(&b)) == ca.union(&cb).cloned().collect(), || format!("[A∪B] for {a}, {b}"))?;
        for p in probes.iter().cloned().map(WallmanPoint::Fixed).chain(lw.free_points()) {
            ensure(ca.contains(&p) == line_point_oracle(&p, &a), || format!("membership of {p} in [{a}]"))?;
        }
    }
    Ok(format!("{pairs} finite pairs on {} rings, {LINE_LATTICE_PAIRS} RomClosed pairs, 0 violations", rings.len()))
}

fn c5_additivity() -> Outcome {
    let cfg = SuiteConfig { max_size: 3, ..SuiteConfig::default() };
    let r512 = run_suite("prop-5.12", &cfg).map_err(|e| e.to_string())?;
    ensure(r512.passed(), || format!("prop-5.12: {:?}", r512.counterexamples.first()))?;
    let mut bundles = 0;
    for n in 1..=3 {
        for base in topologies(n) {
            for k in 0..=(4 - n).min(2) {
                for b in enumerate_bundles(&base, k) {
                    bundles += 1;
                    let t = b.total();
                    let op_w: BTreeSet<u64> = base.op().iter().map(|&u| oracle_ex(b.tau(), t, n, bits(u))).collect();
                    let closed = op_w.contains(&0)
                        && op_w.contains(&full(t))
                        && op_w.iter().all(|&u| op_w.iter().all(|&v| op_w.contains(&(u | v)) && op_w.contains(&(u & v))));
                    let additive = base.op().iter().all(|&u| {
                        base.op().iter().all(|&v| {
                            oracle_ex(b.tau(), t, n, bits(u) | bits(v)) == oracle_ex(b.tau(), t, n, bits(u)) | oracle_ex(b.tau(), t, n, bits(v))
                        })
                    });
                    ensure(b.cov_w_is_gts() == closed, || format!("cov_w oracle on n={n} k={k} {:?}", b.tau()))?;
                    ensure(b.admissibly_additive().is_ok() == additive, || format!("additivity oracle on {:?}", b.tau()))?;
                    ensure(closed == additive, || format!("equivalence fails on {:?}", b.tau()))?;
                }
            }
        }
    }
    let cfg = SuiteConfig { seed: 12, ..cfg };
    let r712 = run_suite("prop-7.12", &cfg).map_err(|e| e.to_string())?;
    ensure(r712.passed(), || format!("prop-7.12: {:?}", r712.counterexamples.first()))?;
    ensure(r712.instances >= 2 * LINE_ADDITIVITY_PAIRS, || format!("only {} line instances", r712.instances))?;
    let rom = alexandroff_strict(&LineGts::rom()).map_err(|e| e.to_string())?;
    ensure(rom.additivity().finitely == Err((iv("(-inf,0)").unwrap(), iv("(0,inf)").unwrap())), || {
        format!("rom-line witness {:?}", rom.additivity().finitely)
    })?;
    let c0 = alexandroff_strict(&LineGts::c0()).map_err(|e| e.to_string())?;
    ensure(c0.additivity().finitely.is_ok(), || "c0 Alexandroff bundle is not finitely additive".into())?;
    Ok(format!("{bundles} finite bundles, {} line instances, rom witness (-inf,0)/(0,inf), c0 additive", r712.instances))
}

fn c6_two_point() -> Outcome {
    let start = Instant::now();
    let lattice = QuotientLattice::for_ring(RingTag::RomClosed);
    ensure(lattice.len() == 4, || format!("{} classes", lattice.len()))?;
    let g = two_point_glue(&LineGts::rom()).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..CLOSURE_LAW_SAMPLES {
        let a = random_closed_set(&mut rng, RingTag::RomClosed);
        ensure(g.closure_law(&a), || format!("closure law fails on {a}"))?;
    }
    let line = TotalSet::line(IntervalSet::full());
    ensure(g.strong.is_open(&line), || "the line is not open in the strong layer".into())?;
    ensure(!g.wallmanian.is_open(&line), || "the line is open in the wallmanian layer".into())?;
    let cmp = compare(&g.wallmanian, &g.strong, 4).map_err(|e| e.to_string())?;
    ensure(matches!(cmp.verdict, Verdict::FirstBelow(_)), || format!("verdict {:?}", cmp.verdict))?;
    let elapsed = start.elapsed();
    ensure(elapsed <= GLUE_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("4 classes, closure law on {CLOSURE_LAW_SAMPLES} sets, wallmanian below strong, {elapsed:.2?}"))
}

fn c7_alexandroff() -> Outcome {
    let rom = alexandroff_strict(&LineGts::rom()).map_err(|e| e.to_string())?;
    let r = alexandroff_report(&rom);
    ensure(r.strict_one_point && r.weakly_hausdorff && r.strongest_layer, || format!("{r:?}"))?;
    let x = LineGts::rom();
    let fr = finite_remainder(&x, &[iv("(-inf,-1)").unwrap(), iv("(1,inf)").unwrap()], &iv("[-1,1]").unwrap())
        .map_err(|e| e.to_string())?;
    let glued = two_point_glue(&x).map_err(|e| e.to_string())?;
    let v = compare(&fr.strong, &glued.strong, 4).map_err(|e| e.to_string())?.verdict;
    ensure(matches!(v, Verdict::StrictlyEquivalent(_)), || format!("finite remainder vs glue: {v:?}"))?;
    let y = bounded_interval_compactification();
    ensure(y.is_strict_compactification(), || "bounded-interval bundle is not a strict compactification".into())?;
    let alex = alexandroff_strict(y.base()).map_err(|e| e.to_string())?;
    let cmp = compare(&alex, &y, 4).map_err(|e| e.to_string())?;
    ensure(!matches!(cmp.verdict, Verdict::StrictlyEquivalent(_)), || "bounded-interval bundle is equivalent".into())?;
    ensure(cmp.witness == Some((TotalSet::line(IntervalSet::full()), true)), || format!("witness {:?}", cmp.witness))?;
    ensure(!y.is_open(&TotalSet::line(IntervalSet::full())), || "R is open in Y".into())?;
    Ok("one-point checks hold, finite remainder = glue, bounded-interval bundle differs: R not open in Y".into())
}

fn random_cover(rng: &mut ChaCha8Rng) -> Vec<IntervalSet> {
    // a chain of overlapping open intervals across [0,1] plus distractors
    let k = rng.gen_range(1..6);
    let mut cuts: Vec<Q> = (0..k).map(|_| qf(rng.gen_range(1..64), 64)).collect();
    cuts.push(q(0));
    cuts.push(q(1));
    cuts.sort();
    cuts.dedup();
    let eps = qf(1, 128);
    let mut cover: Vec<IntervalSet> =
        cuts.windows(2).map(|w| IntervalSet::open(&w[0] - &eps, &w[1] + &eps)).collect();
    for _ in 0..rng.gen_range(0..4) {
        let a = qf(rng.gen_range(-8..72), 64);
        let b = &a + qf(rng.gen_range(1..32), 64);
        cover.push(IntervalSet::open(a, b));
    }
    cover
}

fn c8_compactness() -> Outcome {
    let i = LineGts::i_rom();
    let target = i.carrier();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..RANDOM_COVERS {
        let cover = random_cover(&mut rng);
        match i.compactness(&target, &LineFamily::Explicit(cover.clone()), Adverb::Admissible) {
            Ok(Compactness::FiniteSubcover(sub)) => {
                let traced: Vec<IntervalSet> = cover.iter().map(|u| u.intersect(&target)).collect();
                ensure(sub.iter().all(|s| traced.contains(s)), || format!("subcover {sub:?} leaves the cover"))?;
                let union = sub.iter().fold(IntervalSet::empty(), |a, b| a.union(b));
                ensure(target.is_subset_of(&union), || format!("subcover {sub:?} misses part of [0,1]"))?;
            }
            other => return Err(format!("cover {cover:?}: {other:?}")),
        }
    }
    let x = LineGts::rom();
    let chain = LineFamily::Chain(AffineChain::symmetric());
    match x.compactness(&x.carrier(), &chain, Adverb::Absolute) {
        Ok(Compactness::NoFiniteSubcover(cert)) => ensure(cert.confirm(), || "certificate does not confirm".into())?,
        other => return Err(format!("absolute adverb gave {other:?}")),
    }
    ensure(x.compactness(&x.carrier(), &chain, Adverb::Admissible) == Err(GtsError::NotAdmissible), || {
        "admissible adverb accepted the chain".into()
    })?;
    Ok(format!("{RANDOM_COVERS} covers of the unit interval reduced, chain split certified"))
}

fn weakly_normal_spaces() -> Vec<FiniteGts> {
    (1..=3).flat_map(topologies).filter(FiniteGts::is_weakly_normal).collect()
}

fn all_tables(from: usize, to: usize) -> Vec<Vec<usize>> {
    (0..to.pow(from as u32))
        .map(|mut c| {
            (0..from)
                .map(|_| {
                    let d = c % to;
                    c /= to;
                    d
                })
                .collect()
        })
        .collect()
}

fn c9_extension() -> Outcome {
    let start = Instant::now();
    let report = run_suite("thm-8.10", &SuiteConfig { max_size: 3, ..SuiteConfig::default() }).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{:?}", report.counterexamples.first()))?;
    // the extension side once more through the general entry point
    let spaces = weakly_normal_spaces();
    let mut maps = 0;
    for x in &spaces {
        for y in &spaces {
            for t in all_tables(x.n(), y.n()) {
                maps += 1;
                let f = GtsMap::Finite(FiniteMap::new(t, y.n()).unwrap());
                let (sx, sy) = (Space::Finite(x.clone()), Space::Finite(y.clone()));
                let ext = !matches!(wallman_extension(&f, &sx, &sy).map_err(|e| e.to_string())?, Extension::NoExtension(_));
                let w = continuity(&f, &sx, &sy, ContinuityKind::SmallW).map_err(|e| e.to_string())?.is_ok();
                ensure(ext == w, || format!("{f} from {x} to {y}: extension {ext}, w-continuous {w}"))?;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= EXTENSION_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{} suite instances, {maps} maps rechecked, 0 discrepancies, {elapsed:.2?}", report.instances))
}

fn c10_hierarchy() -> Outcome {
    let spaces = weakly_normal_spaces();
    let mut checked = 0;
    for x in &spaces {
        for y in &spaces {
            for t in all_tables(x.n(), y.n()) {
                let f = GtsMap::Finite(FiniteMap::new(t, y.n()).unwrap());
                let h = hierarchy_facts(&f, &Space::Finite(x.clone()), &Space::Finite(y.clone())).map_err(|e| e.to_string())?;
                ensure(h.violations.is_empty(), || format!("{f}: {:?}", h.violations))?;
                checked += 1;
            }
        }
    }
    let id = GtsMap::PiecewiseLinear(PlMap::identity());
    let (rom, rom_all) = (Space::Line(LineGts::rom()), Space::Line(LineGts::rom_topological()));
    let w = continuity(&id, &rom, &rom_all, ContinuityKind::SmallW).map_err(|e| e.to_string())?;
    let big = continuity(&id, &rom, &rom_all, ContinuityKind::BigW).map_err(|e| e.to_string())?;
    ensure(w.is_ok() && big.is_err(), || format!("small-into-all-families identity: w {w:?}, W {big:?}"))?;
    let h = hierarchy_facts(&id, &rom, &rom_all).map_err(|e| e.to_string())?;
    ensure(h.violations.is_empty(), || format!("{:?}", h.violations))?;
    let c0 = Space::Line(LineGts::c0());
    let strict = continuity(&id, &rom, &c0, ContinuityKind::Strict).map_err(|e| e.to_string())?;
    ensure(strict.is_ok(), || format!("rom to c0 identity: {strict:?}"))?;
    let back = wallman_extension(&id, &c0, &rom).map_err(|e| e.to_string())?;
    ensure(matches!(back, Extension::NoExtension(_)), || format!("c0 to rom identity extends: {back:?}"))?;
    Ok(format!("{checked} finite maps, w-but-not-W identity, c0/rom identity pair"))
}

fn random_topology(rng: &mut ChaCha8Rng, n: usize) -> FiniteGts {
    let all = enumerate_topologies(n);
    FiniteGts::topological(n, all[rng.gen_range(0..all.len())].clone()).unwrap()
}

fn random_space(rng: &mut ChaCha8Rng, max: usize) -> FiniteGts {
    let n = rng.gen_range(1..=max);
    random_topology(rng, n)
}

fn random_families(rng: &mut ChaCha8Rng, n: usize) -> Vec<Family> {
    (0..rng.gen_range(1..4))
        .map(|_| Family::from_sets((0..rng.gen_range(1..3)).map(|_| AtomSet(rng.gen_range(0..1u64 << n)))))
        .collect()
}

fn c11_products() -> Outcome {
    let report = run_suite("prop-4.9", &SuiteConfig { max_size: 3, ..SuiteConfig::default() }).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{:?}", report.counterexamples.first()))?;
    for a in 1..=3 {
        for b in 1..=3 {
            let p = product(&ProductSpec::new(vec![FiniteGts::discrete(a), FiniteGts::discrete(b)], ProductMode::Gts)).map_err(|e| e.to_string())?;
            let g = p.gts();
            ensure(g.is_topological() && (0..a * b).all(|i| g.is_open(AtomSet::singleton(i))), || format!("{a}x{b} not discrete"))?;
        }
    }
    // topologization commutes with products: all pairs up to 3x3, then sampled 4x4
    let mut products = 0;
    let small: Vec<FiniteGts> = (1..=3).flat_map(topologies).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut pairs: Vec<(FiniteGts, FiniteGts)> =
        small.iter().flat_map(|x| small.iter().map(move |y| (x.clone(), y.clone()))).collect();
    pairs.extend((0..RANDOM_PRODUCT_INSTANCES).map(|_| (random_topology(&mut rng, 4), random_topology(&mut rng, 4))));
    for (x, y) in &pairs {
        for mode in [ProductMode::Gts, ProductMode::GtsPt] {
            let p = product(&ProductSpec::new(vec![x.clone(), y.clone()], mode)).map_err(|e| e.to_string())?;
            ensure(p.topologization_is_tychonoff(), || format!("{x} x {y} ({mode:?})"))?;
            ensure(p.gts().topology() == oracle_product_opens(x, y), || format!("box oracle on {x} x {y}"))?;
            products += 1;
        }
    }
    for _ in 0..RANDOM_PRODUCT_INSTANCES {
        let n = rng.gen_range(1..=3);
        let psi = random_families(&mut rng, n);
        let a = AtomSet(rng.gen_range(1..1u64 << n));
        ensure(trace_generation_commutes(n, &psi, a), || format!("trace generation on {psi:?} at {a}"))?;
        let (nx, ny) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let psi = random_families(&mut rng, nx);
        ensure(cylinder_generation_commutes(nx, ny, &psi), || format!("cylinder generation on {psi:?}"))?;
        let (x, y) = (random_space(&mut rng, 3), random_space(&mut rng, 3));
        let sides = [AtomSet(rng.gen_range(1..1u64 << x.n())), AtomSet(rng.gen_range(1..1u64 << y.n()))];
        ensure(subspace_product_agrees(&[x.clone(), y.clone()], &sides).map_err(|e| e.to_string())?, || {
            format!("subspace product on {x} x {y} at {sides:?}")
        })?;
    }
    let mut hypotheses = 0;
    for _ in 0..RANDOM_PRODUCT_INSTANCES * 4 {
        let x = random_space(&mut rng, 3);
        let family: Vec<(FiniteMap, FiniteGts)> = (0..rng.gen_range(1..=2))
            .map(|_| {
                let y = random_space(&mut rng, 3);
                let t = (0..x.n()).map(|_| rng.gen_range(0..y.n())).collect();
                (FiniteMap::new(t, y.n()).unwrap(), y)
            })
            .collect();
        let e = evaluation_embedding(&x, &family).map_err(|e| e.to_string())?;
        let members_strict = family.iter().all(|(m, y)| {
            continuity(&GtsMap::Finite(m.clone()), &Space::Finite(x.clone()), &Space::Finite(y.clone()), ContinuityKind::Strict)
                .is_ok_and(|c| c.is_ok())
        });
        ensure(e.strictly_continuous.is_ok() == members_strict, || format!("evaluation continuity on {x}"))?;
        if e.hypothesis {
            hypotheses += 1;
            ensure(e.embedding.is_ok(), || format!("hypothesis holds but no embedding on {x}: {:?}", e.embedding))?;
        }
    }
    ensure(hypotheses > 0, || "no instance met the embedding hypothesis".into())?;
    Ok(format!("{products} products, {RANDOM_PRODUCT_INSTANCES} generation/subspace instances, {hypotheses} embeddings under the hypothesis"))
}

fn explicit_document(n: usize, families: &[Family]) -> String {
    let atoms: Vec<String> = (0..n).map(|i| format!("\"a{i}\"")).collect();
    let show = |s: AtomSet| format!("\"{{{}}}\"", s.atoms().map(|i| format!("a{i}")).collect::<Vec<_>>().join(","));
    let fams: Vec<String> = families.iter().map(|f| format!("[{}]", f.members().map(show).collect::<Vec<_>>().join(", "))).collect();
    format!(
        "[[carrier]]\nname = \"X\"\natoms = [{}]\n\n[[gts]]\nname = \"G\"\nkind = \"explicit\"\ncarrier = \"X\"\nfamilies = [{}]\n",
        atoms.join(", "),
        fams.join(", ")
    )
}

fn c12_axiom_engine() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let (mut generated, mut rejected, mut accepted) = (0, 0, 0);
    for _ in 0..300 {
        let n = rng.gen_range(1..=3);
        let seed = random_families(&mut rng, n);
        let g = generate(n, &seed);
        ensure(g.check_axioms().is_ok(), || format!("generated from {seed:?}: {:?}", g.check_axioms()))?;
        ensure(g.smallify().check_axioms().is_ok(), || format!("smallified from {seed:?}"))?;
        generated += 1;
        // a document with either the generated families or the raw seed
        let fams: Vec<Family> = if rng.gen_bool(0.5) { g.cov_families().into_iter().collect() } else { seed.clone() };
        let doc = Document::parse(&explicit_document(n, &fams)).map_err(|e| e.to_string())?;
        let report = check_document(&doc).map_err(|e| e.to_string())?;
        let candidate = FiniteGts::explicit(n, fams.iter().copied()).unwrap();
        let fixed_point = generate(n, &fams).cov_families() == candidate.cov_families();
        match report.rejections.as_slice() {
            [] => {
                ensure(fixed_point, || format!("accepted {fams:?} which generation enlarges"))?;
                accepted += 1;
            }
            [r] => {
                ensure(r.violation.confirm(&candidate, None), || format!("witness {} does not confirm", r.violation))?;
                ensure(!fixed_point, || format!("rejected {fams:?} which is closed under generation"))?;
                rejected += 1;
            }
            more => return Err(format!("{} rejections for one object", more.len())),
        }
    }
    ensure(rejected > 0 && accepted > 0, || format!("unbalanced sample: {accepted} accepted, {rejected} rejected"))?;
    Ok(format!("{generated} generated gtses pass, documents: {accepted} accepted, {rejected} rejected with witnesses"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("ring normality equivalence", c1_ring_normality),
        ("disjunctivity equivalence", c2_disjunctive),
        ("ultrafilter oracle", c3_ultrafilters),
        ("Wallman lattice laws", c4_lattice_laws),
        ("additivity equivalences", c5_additivity),
        ("two-point compactification", c6_two_point),
        ("Alexandroff reproduction", c7_alexandroff),
        ("compactness adverbs", c8_compactness),
        ("extension theorem", c9_extension),
        ("continuity hierarchy", c10_hierarchy),
        ("products", c11_products),
        ("axiom engine self-consistency", c12_axiom_engine),
    ];
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let (mut failed, mut ran) = (0, 0);
    for (i, (name, f)) in criteria.iter().enumerate() {
        if filter.as_ref().is_some_and(|flt| !name.contains(flt.as_str())) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS {name}: {msg} ({:.2?})", i + 1, start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{ran} passed", ran - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
