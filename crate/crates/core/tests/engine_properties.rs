use num_bigint::BigInt;
use proptest::prelude::*;

use wildcolor::corpus::{random_multigraphs, simple_graphs};
use wildcolor::{
    chi_wildcard, compute_chi, count_bruteforce, count_subset_expansion, independence_weighted_sum,
    simplify, BruteForceBudget, ChiEngine, ColoringParams, EngineConfig, Focus, MultiGraph, SubsetBudget,
};

fn multigraph(max_n: u32, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((1..=n, 1..=n), 0..=max_m)
            .prop_map(move |pairs| MultiGraph::new(n, pairs).unwrap())
    })
}

#[test]
fn every_configuration_gives_the_same_polynomial() {
    let configs = EngineConfig::all();
    assert_eq!(configs.len(), 16);
    for g in random_multigraphs(120, 6, 9, 17) {
        let reference = compute_chi(&g, EngineConfig::default());
        for cfg in &configs {
            assert_eq!(compute_chi(&g, *cfg), reference, "config {cfg:?} on {g:?}");
        }
    }
}

#[test]
fn first_edge_choice_does_not_matter() {
    for g in random_multigraphs(150, 6, 6, 23) {
        let mut engine = ChiEngine::default();
        let reference = engine.chi(&g);
        for &e in g.edges() {
            assert_eq!(engine.deletion_contraction_at(&g, e).unwrap(), reference, "edge {e} of {g:?}");
        }
    }
}

#[test]
fn recursion_depth_is_bounded() {
    for g in random_multigraphs(100, 7, 10, 31) {
        for cfg in EngineConfig::all() {
            let mut engine = ChiEngine::new(cfg);
            engine.chi(&g);
            assert!(engine.stats().max_depth <= g.edge_count() + g.vertex_count() as usize);
        }
    }
}

#[test]
fn wildcard_rules_match_on_all_small_simple_graphs() {
    let mut engine = ChiEngine::default();
    for g in simple_graphs(5) {
        let expected = engine.chi(&g).subs_x(1);
        for v in g.vertices() {
            assert_eq!(chi_wildcard(&g, Focus::Vertex(v), &mut engine).unwrap(), expected);
        }
        for &e in g.edges() {
            assert_eq!(chi_wildcard(&g, Focus::Edge(e), &mut engine).unwrap(), expected);
        }
    }
}

#[test]
fn independence_sum_on_small_simple_graphs() {
    let mut engine = ChiEngine::default();
    for g in simple_graphs(5) {
        let chi = engine.chi(&g);
        for l in 0..4u32 {
            assert_eq!(chi.eval(1, l.into()), independence_weighted_sum(&g, l));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn oracles_agree_with_symbolic_chi(g in multigraph(6, 8), k in 0u32..=3, l in 0u32..=3) {
        prop_assume!(k + l >= 1);
        let p = ColoringParams::new(k, l);
        let chi = compute_chi(&g, EngineConfig::default()).eval(k.into(), l.into());
        prop_assert_eq!(&chi, &count_bruteforce(&g, p, BruteForceBudget::default()).unwrap());
        prop_assert_eq!(&chi, &count_subset_expansion(&g, p, SubsetBudget::default()).unwrap());
    }

    #[test]
    fn simplify_preserves_chi(g in multigraph(6, 9)) {
        let s = simplify(&g);
        prop_assert!(s.residual.is_simple());
        let cfg = EngineConfig::default();
        prop_assert_eq!(&s.multiplier * &compute_chi(&s.residual, cfg), compute_chi(&g, cfg));
    }

    #[test]
    fn wildcard_rules_match_on_multigraphs(g in multigraph(6, 8)) {
        let mut engine = ChiEngine::default();
        let expected = engine.chi(&g).subs_x(1);
        let s = simplify(&g);
        for v in g.vertices().filter(|&v| s.label_map[v as usize - 1].is_some()) {
            prop_assert_eq!(chi_wildcard(&g, Focus::Vertex(v), &mut engine).unwrap(), expected.clone());
        }
        for &e in g.edges().iter().filter(|e| {
            let (u, v) = e.endpoints();
            !e.is_loop() && s.label_map[u as usize - 1].is_some() && s.label_map[v as usize - 1].is_some()
        }) {
            prop_assert_eq!(chi_wildcard(&g, Focus::Edge(e), &mut engine).unwrap(), expected.clone());
        }
    }

    #[test]
    fn chi_is_multiplicative_over_disjoint_union(a in multigraph(4, 5), b in multigraph(4, 5)) {
        let shift = a.vertex_count();
        let pairs = a.edges().iter().map(|e| e.endpoints())
            .chain(b.edges().iter().map(|e| { let (u, v) = e.endpoints(); (u + shift, v + shift) }));
        let union = MultiGraph::new(shift + b.vertex_count(), pairs).unwrap();
        let cfg = EngineConfig::default();
        prop_assert_eq!(compute_chi(&union, cfg), &compute_chi(&a, cfg) * &compute_chi(&b, cfg));
    }
}

#[test]
fn bruteforce_handles_degenerate_parameters() {
    let g = MultiGraph::new(3, [(1, 2)]).unwrap();
    let zero = ColoringParams::new(0, 0);
    assert_eq!(count_bruteforce(&g, zero, BruteForceBudget::default()).unwrap(), BigInt::from(0));
    assert_eq!(count_subset_expansion(&g, zero, SubsetBudget::default()).unwrap(), BigInt::from(0));
    assert_eq!(compute_chi(&g, EngineConfig::default()).eval(0, 0), BigInt::from(0));
}
