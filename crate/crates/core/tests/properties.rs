use proptest::prelude::*;

use serre::circulant::CirculantGraph;
use serre::classify::{
    classify_circulant, is_s2, reisner_scan, s2_orbit_scan, terai_scan, ClassifyOptions, SerreLevel,
};
use serre::homology::FieldSpec;
use serre::theorems::{verify_theorem, SweepConfig, TheoremId};
use serre::SimplicialComplex;

fn circulant() -> impl Strategy<Value = CirculantGraph> {
    (3usize..=12)
        .prop_flat_map(|n| (Just(n), proptest::collection::btree_set(1..=n / 2, 1..=(n / 2).max(1))))
        .prop_map(|(n, gens)| CirculantGraph::new(n, gens).unwrap())
}

fn ind(g: &CirculantGraph) -> SimplicialComplex {
    SimplicialComplex::independence_complex(g.graph())
}

fn chars() -> Vec<FieldSpec> {
    [0, 2, 3, 5].map(|k| FieldSpec::new(k).unwrap()).to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_scan_matches_full_scan(g in circulant()) {
        let delta = ind(&g);
        prop_assert_eq!(s2_orbit_scan(&delta, g.n()).unwrap().holds, is_s2(&delta).unwrap().holds);
    }

    #[test]
    fn connectivity_and_homological_s2_agree(g in circulant()) {
        let delta = ind(&g);
        let conn = is_s2(&delta).unwrap().holds;
        for v in terai_scan(&delta, SerreLevel::new(2).unwrap(), &chars(), None).unwrap() {
            prop_assert_eq!(v.holds, conn);
        }
    }

    #[test]
    fn s2_is_closed_under_joins(a in circulant(), b in circulant()) {
        let (da, db) = (ind(&a), ind(&b));
        let joined = da.disjoint_join(&db).unwrap();
        let both = is_s2(&da).unwrap().holds && is_s2(&db).unwrap().holds;
        prop_assert_eq!(is_s2(&joined).unwrap().holds, both);
    }

    #[test]
    fn factorized_reisner_scan_matches_raw(a in circulant(), b in circulant()) {
        let joined = ind(&a).disjoint_join(&ind(&b)).unwrap();
        if joined.n_vertices() <= 18 {
            let fast = reisner_scan(&joined, &chars(), None, true).unwrap();
            let raw = reisner_scan(&joined, &chars(), None, false).unwrap();
            let holds = |vs: &[serre::classify::Verdict]| vs.iter().map(|v| v.holds).collect::<Vec<_>>();
            prop_assert_eq!(holds(&fast.cohen_macaulay), holds(&raw.cohen_macaulay));
            prop_assert_eq!(holds(&fast.buchsbaum), holds(&raw.buchsbaum));
        }
    }

    #[test]
    fn witnesses_recheck_and_hierarchy_holds(g in circulant()) {
        let r = classify_circulant(&g, &ClassifyOptions::default()).unwrap();
        let delta = ind(&g);
        for w in &r.witnesses {
            prop_assert!(w.recheck(&delta, Some(g.graph())).unwrap(), "{:?}", w);
        }
        prop_assert!(r.hierarchy_violations().is_empty(), "{:?}", r.hierarchy_violations());
    }

    #[test]
    fn symmetric_and_raw_classification_agree(g in circulant()) {
        let fast = classify_circulant(&g, &ClassifyOptions::default()).unwrap();
        let raw = classify_circulant(&g, &ClassifyOptions::raw()).unwrap();
        prop_assert_eq!(fast.s2, raw.s2);
        prop_assert_eq!(&fast.sr, &raw.sr);
        prop_assert_eq!(&fast.cohen_macaulay, &raw.cohen_macaulay);
        prop_assert_eq!(&fast.buchsbaum, &raw.buchsbaum);
        prop_assert_eq!(fast.shellable, raw.shellable);
        prop_assert_eq!(fast.vertex_decomposable, raw.vertex_decomposable);
    }
}

#[test]
fn sweeps_are_independent_of_thread_count() {
    for t in [TheoremId::S2OmitOne, TheoremId::JoinS2, TheoremId::UnionNotBuchsbaum] {
        let one = verify_theorem(t, &SweepConfig { jobs: 1, max_n: Some(10), ..SweepConfig::default() }).unwrap();
        let four = verify_theorem(t, &SweepConfig { jobs: 4, max_n: Some(10), ..SweepConfig::default() }).unwrap();
        assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap());
    }
}

#[test]
fn equivalence_sweep_passes() {
    let r = verify_theorem(TheoremId::EquivUpperInterval, &SweepConfig::default()).unwrap();
    assert!(r.passed());
    assert_eq!(r.instances_checked, 144);
}

#[test]
fn pair_sweeps_pass() {
    for t in [TheoremId::JoinS2, TheoremId::DisjointUnionS2, TheoremId::UnionNotBuchsbaum] {
        let r = verify_theorem(t, &SweepConfig::default()).unwrap();
        assert!(r.passed(), "{t}: {:?}", r.mismatches.first());
    }
}
