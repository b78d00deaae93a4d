//! Randomized invariants across the modules.

use proptest::prelude::*;

use gts_lab::carrier::{parse_interval_set, qf, AtomSet, Bound, Interval, IntervalSet, Q};
use gts_lab::compactify::finite::enumerate_bundles;
use gts_lab::filters::{enumerate_ultrafilters, maximal_completion, FilterInRing};
use gts_lab::gts::axioms::generate;
use gts_lab::gts::{enumerate_topologies, Family, FiniteGts, Space};
use gts_lab::lab::Document;
use gts_lab::morphisms::{hierarchy_facts, FiniteMap, GtsMap};
use gts_lab::ring::FiniteRing;

fn bound() -> impl Strategy<Value = Q> {
    (-12i64..12, prop_oneof![Just(1i64), Just(2), Just(3)]).prop_map(|(n, d)| qf(n, d))
}

fn interval() -> impl Strategy<Value = Option<Interval>> {
    (bound(), bound(), any::<bool>(), any::<bool>(), 0u8..6).prop_map(|(a, b, lc, hc, ray)| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let lo: Bound = if ray == 0 { Bound::NegInf } else { lo.into() };
        let hi: Bound = if ray == 1 { Bound::PosInf } else { hi.into() };
        Interval::new(lo.clone(), lc && lo.is_finite(), hi.clone(), hc && hi.is_finite()).ok()
    })
}

fn interval_set() -> impl Strategy<Value = IntervalSet> {
    prop::collection::vec(interval(), 0..4)
        .prop_map(|v| IntervalSet::normalize(v.into_iter().flatten().collect()).expect("validated"))
}

fn topology(max: usize) -> impl Strategy<Value = FiniteGts> {
    (1..=max).prop_flat_map(|n| {
        let all = enumerate_topologies(n);
        (0..all.len()).prop_map(move |i| FiniteGts::topological(n, all[i].clone()).unwrap())
    })
}

fn ring(max: usize) -> impl Strategy<Value = FiniteRing> {
    (1..=max).prop_flat_map(|n| {
        (prop::collection::vec(0..1u64 << n, 0..5), any::<bool>())
            .prop_map(move |(g, complete)| FiniteRing::generate(n, g.into_iter().map(AtomSet), complete))
    })
}

fn families(n: usize) -> impl Strategy<Value = Vec<Family>> {
    prop::collection::vec(prop::collection::vec(0..1u64 << n, 1..3), 1..4)
        .prop_map(|v| v.into_iter().map(|f| Family::from_sets(f.into_iter().map(AtomSet))).collect())
}

fn agree_on_probes(a: &IntervalSet, b: &IntervalSet) -> bool {
    let cuts: Vec<Q> = a.endpoints().into_iter().chain(b.endpoints()).collect();
    IntervalSet::probes(&cuts).iter().all(|p| a.contains_point(p) == b.contains_point(p))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(128) })]

    #[test]
    fn boolean_laws_on_the_line(a in interval_set(), b in interval_set(), c in interval_set()) {
        prop_assert_eq!(a.union(&b).complement(), a.complement().intersect(&b.complement()));
        prop_assert_eq!(a.intersect(&b).complement(), a.complement().union(&b.complement()));
        prop_assert_eq!(a.intersect(&b.union(&c)), a.intersect(&b).union(&a.intersect(&c)));
        prop_assert_eq!(a.union(&b.intersect(&c)), a.union(&b).intersect(&a.union(&c)));
        prop_assert_eq!(a.complement().complement(), a.clone());
    }

    #[test]
    fn normal_form_is_canonical(a in interval_set(), b in interval_set()) {
        let again = IntervalSet::normalize(a.parts().to_vec()).unwrap();
        prop_assert_eq!(&again, &a);
        prop_assert_eq!(parse_interval_set(&a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(a == b, agree_on_probes(&a, &b));
        prop_assert!(a.union(&b).component_count() <= a.component_count() + b.component_count());
    }

    #[test]
    fn base_implications(r in ring(4)) {
        if r.is_wallman_base() {
            prop_assert!(r.is_complete_closed_base());
        }
        if r.is_complete_closed_base() {
            prop_assert!(r.is_closed_base());
        }
        if r.is_complete_closed_base() {
            prop_assert_eq!(r.is_disjunctive().is_ok(), r.is_t1_closed_base());
        }
    }

    #[test]
    fn induced_gts_round_trip(r in ring(4)) {
        prop_assume!(r.is_complete());
        let g = FiniteGts::from_ring(&r).unwrap();
        let back = g.closed_ring();
        prop_assert_eq!(back.members(), r.members());
        prop_assert_eq!(g.is_weakly_normal(), r.is_wallman_base());
    }

    #[test]
    fn closed_sets_form_a_complete_base(g in topology(4)) {
        let c = g.closed_ring();
        prop_assert!(c.is_complete_closed_base());
        // finite carriers are compact, so weakly Hausdorff forces weak normality
        if g.is_weakly_hausdorff() {
            prop_assert!(g.is_weakly_normal());
        }
    }

    #[test]
    fn ultrafilters_are_minimal_members(r in ring(4), pick in any::<prop::sample::Index>()) {
        prop_assume!(r.is_complete());
        let ufs = enumerate_ultrafilters(&r).unwrap();
        prop_assert_eq!(ufs.len(), r.minimal_nonempty().len());
        let nonempty: Vec<AtomSet> = r.members().iter().copied().filter(|m| !m.is_empty()).collect();
        prop_assume!(!nonempty.is_empty());
        let g = nonempty[pick.index(nonempty.len())];
        let f = FilterInRing::new(&r, vec![g]).unwrap();
        if let Ok(m) = maximal_completion(&r, &f) {
            let fm = f.members(&r);
            prop_assert!(fm.iter().all(|a| m.contains(a)));
            for a in r.members() {
                if !m.contains(a) {
                    prop_assert!(m.iter().any(|b| a.is_disjoint(*b)));
                }
            }
        }
    }

    #[test]
    fn ex_preserves_traces(base in topology(2), k in 0usize..=2) {
        for b in enumerate_bundles(&base, k) {
            let mask = b.base_mask();
            let ops: Vec<AtomSet> = b.base().op().to_vec();
            for &u in &ops {
                let e = b.ex(u).unwrap();
                prop_assert_eq!(e.intersect(mask), u);
                // the largest open of the bundle with that trace
                for &v in b.tau() {
                    if v.intersect(mask) == u {
                        prop_assert!(v.is_subset_of(e));
                    }
                }
                for &w in &ops {
                    if u.is_subset_of(w) {
                        prop_assert!(e.is_subset_of(b.ex(w).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn continuity_implications(x in topology(3), y in topology(3), seed in any::<u64>()) {
        let table: Vec<usize> = (0..x.n()).map(|i| (seed >> (4 * i)) as usize % y.n()).collect();
        let f = GtsMap::Finite(FiniteMap::new(table, y.n()).unwrap());
        let h = hierarchy_facts(&f, &Space::Finite(x), &Space::Finite(y)).unwrap();
        prop_assert!(h.violations.is_empty(), "{:?}", h.violations);
    }

    #[test]
    fn generation_satisfies_the_axioms(n in 1usize..=3, seed in families(3)) {
        let seed: Vec<Family> = seed.into_iter().map(|f| Family::from_sets(f.members().map(|s| s.intersect(AtomSet::full(n))))).collect();
        let g = generate(n, &seed);
        prop_assert!(g.check_axioms().is_ok());
        prop_assert!(g.smallify().check_axioms().is_ok());
        prop_assert_eq!(generate(n, &g.cov_families().into_iter().collect::<Vec<_>>()).cov_families(), g.cov_families());
    }

    #[test]
    fn documents_round_trip(g in topology(3), fams in families(3)) {
        let n = g.n();
        let name = |s: AtomSet| format!("\"{{{}}}\"", s.intersect(AtomSet::full(n)).atoms().map(|i| format!("p{i}")).collect::<Vec<_>>().join(","));
        let atoms: Vec<String> = (0..n).map(|i| format!("\"p{i}\"")).collect();
        let opens: Vec<String> = g.op().iter().map(|&u| name(u)).collect();
        let fams: Vec<String> = fams.iter().map(|f| format!("[{}]", f.members().map(name).collect::<Vec<_>>().join(","))).collect();
        let text = format!(
            "[[carrier]]\nname = \"X\"\natoms = [{}]\n[[gts]]\nname = \"T\"\nkind = \"topological\"\ncarrier = \"X\"\nopens = [{}]\n[[gts]]\nname = \"E\"\nkind = \"explicit\"\ncarrier = \"X\"\nfamilies = [{}]\n",
            atoms.join(","), opens.join(","), fams.join(",")
        );
        let doc = Document::parse(&text).unwrap();
        let printed = doc.print().unwrap();
        let reparsed = Document::parse(&printed).unwrap();
        prop_assert_eq!(reparsed.print().unwrap(), printed.clone());
        prop_assert_eq!(reparsed, doc.canonical().unwrap());
    }
}
