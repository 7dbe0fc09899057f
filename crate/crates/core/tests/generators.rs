use stsafe::testkit::{generate, FamilyKind, FamilySpec};
use stsafe::{
    bridge_decomposition, compact_max_safe_walks, expand_solution, minimal_walk_breakers, parse_graph, write_edge_list,
};

#[test]
fn quadratic_solution_grows_quadratically() {
    for h in [2usize, 4, 8, 16, 32] {
        let g = generate(&FamilySpec::new(FamilyKind::QuadraticSolution, 2 * h, 0)).unwrap();
        let dec = bridge_decomposition(&g.graph, g.source, g.target).unwrap();
        let stairs = minimal_walk_breakers(&g.graph, &dec, |_| true);
        let cs = compact_max_safe_walks(&stairs, &dec);
        assert_eq!(stairs.len(), h);
        assert_eq!(cs.intervals().len(), h + 1);
        assert!(cs.intervals().iter().all(|iv| iv.len() == h));
        // the compact form stays linear while the walks add up to h(h+1) bridges
        assert!(cs.bridges().len() <= 2 * h);
        let walks = expand_solution(&cs, &dec);
        let bridges_in_walks: usize = walks
            .iter()
            .map(|w| w.edges().iter().filter(|e| dec.bridges().contains(e)).count())
            .sum();
        assert_eq!(bridges_in_walks, h * (h + 1));
    }
}

#[test]
fn generators_are_deterministic() {
    for kind in FamilyKind::ALL {
        let size = if kind == FamilyKind::QuadraticSolution { 8 } else { 7 };
        let a = generate(&FamilySpec::new(kind, size, 42)).unwrap();
        let b = generate(&FamilySpec::new(kind, size, 42)).unwrap();
        assert_eq!(a.graph, b.graph, "{kind}");
        let text = write_edge_list(&a.graph);
        assert_eq!(write_edge_list(&parse_graph(&text).unwrap()), text, "{kind}");
        assert!(bridge_decomposition(&a.graph, a.source, a.target).is_ok(), "{kind}");
    }
}

#[test]
fn chain_bridges_are_all_edges() {
    let g = generate(&FamilySpec::new(FamilyKind::Chain, 50, 0)).unwrap();
    let dec = bridge_decomposition(&g.graph, g.source, g.target).unwrap();
    assert_eq!(dec.len(), 50);
    assert_eq!(g.graph.node_count(), 51);
}

#[test]
fn odd_quadratic_solution_is_rejected() {
    assert!(generate(&FamilySpec::new(FamilyKind::QuadraticSolution, 7, 0)).is_err());
}

#[test]
fn family_names_parse() {
    for kind in FamilyKind::ALL {
        assert_eq!(kind.name().parse::<FamilyKind>().unwrap(), kind);
    }
}
