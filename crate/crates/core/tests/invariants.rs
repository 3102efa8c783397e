//! Cross-module properties checked against the oracles in `common`.

mod common;

use std::collections::BTreeSet;

use common::{brute_colorings, coloring_ok};
use hypercolor::gadgets::*;
use hypercolor::hypergraph::PartialSubhypergraph;
use hypercolor::solver::{first_coloring, level_nodes};
use hypercolor::{solve, verify, Coloring, EdgeSpec, Hypergraph, Mode, Repr, SolveOutcome, Universe, VertexLabel};
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (1usize..=8).prop_flat_map(|n| {
        let edge = btree_set(0..n, 0..=n).prop_map(|s| s.into_iter().collect::<Vec<_>>());
        (Just(n), vec(edge, 0..=6))
    })
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Proper), Just(Mode::Strong), Just(Mode::ConflictFree)]
}

fn standalone(sub: &PartialSubhypergraph, window: usize) -> Hypergraph {
    sub.to_hypergraph(window).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn partial_subhypergraph_is_elementwise_intersection((n, edges) in graph(), vs in btree_set(0usize..8, 0..8)) {
        let h = Hypergraph::from_sets(n, &edges).unwrap();
        let sub = h.partial_subhypergraph(&vs);
        prop_assert_eq!(sub.edges.len(), edges.len());
        for (e, r) in edges.iter().zip(&sub.edges) {
            let brute: Vec<usize> = e.iter().copied().filter(|v| vs.contains(v)).collect();
            prop_assert_eq!(&r.members, &brute);
        }
    }

    #[test]
    fn restriction_levels_are_nested((n, edges) in graph(), level in 0usize..6) {
        let h = Hypergraph::from_sets(n, &edges).unwrap();
        let (m, small) = h.restriction_level(level).unwrap();
        let (m2, big) = h.restriction_level(level + 1).unwrap();
        prop_assert!(m < m2);
        prop_assert!(small.edge_indices.is_subset(&big.edge_indices));
        prop_assert!(small.edge_indices.iter().all(|&i| i < level));
        // a partial hypergraph is its own partial subhypergraph
        let sub = small.as_subhypergraph(&h);
        for r in &sub.edges {
            prop_assert_eq!(&r.members, &edges[r.index]);
        }
    }

    #[test]
    fn tail_edges_hold_exactly_the_tail(j in 0usize..20, k in 0usize..40) {
        let h = Hypergraph::new(Universe::Naturals, Repr::SeqOfCharFns, vec![EdgeSpec::TailFrom(j)]).unwrap();
        prop_assert_eq!(h.edge_contains(0, k).unwrap(), k >= j);
    }

    #[test]
    fn coloring_restriction_is_stable((n, edges) in graph(), colors in vec(0usize..3, 8), mode in mode(), level in 0usize..6) {
        let h = Hypergraph::from_sets(n, &edges).unwrap();
        let c = Coloring::finite(3, colors[..n].to_vec()).unwrap();
        let holds = |level| {
            let (_, ph) = h.restriction_level(level).unwrap();
            verify(&standalone(&ph.as_subhypergraph(&h), n), &c, mode).unwrap().is_ok()
        };
        if holds(level + 1) {
            prop_assert!(holds(level));
        }
    }

    #[test]
    fn level_nodes_form_a_tree((n, edges) in graph(), k in 1usize..=3, mode in mode(), level in 0usize..5) {
        let h = Hypergraph::from_sets(n, &edges).unwrap();
        let lower: BTreeSet<Vec<usize>> = level_nodes(&h, k, mode, level).unwrap().into_iter().map(|x| x.sigma).collect();
        let upper = level_nodes(&h, k, mode, level + 1).unwrap();
        let len = lower.iter().next().map(Vec::len);
        for node in &upper {
            if let Some(len) = len {
                prop_assert!(lower.contains(&node.sigma[..len]));
            }
        }
        if lower.is_empty() {
            prop_assert!(upper.is_empty());
        }
    }

    #[test]
    fn finite_graphs_with_every_level_are_colored((n, edges) in graph(), k in 1usize..=3, mode in mode()) {
        let h = Hypergraph::from_sets(n, &edges).unwrap();
        let every_level = (0..=edges.len()).all(|l| !level_nodes(&h, k, mode, l).unwrap().is_empty());
        let outcome = solve(&h, k, mode, 64).unwrap();
        prop_assert_eq!(every_level, matches!(outcome, SolveOutcome::Colored { .. }));
        if let SolveOutcome::Uncolorable { level, .. } = outcome {
            prop_assert!(level_nodes(&h, k, mode, level).unwrap().is_empty());
            prop_assert!(level_nodes(&h, k, mode, level + 1).unwrap().is_empty());
            if level > 0 {
                prop_assert!(!level_nodes(&h, k, mode, level - 1).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn k_extension_preserves_two_colorability((n, edges) in graph(), k in 3usize..=4) {
        let h = Hypergraph::from_sets(n, &edges).unwrap();
        let lifted = k_extension(&h, k).unwrap();
        let two = !brute_colorings(n, &edges, 2, Mode::Proper).is_empty();
        let many = first_coloring(&lifted, k, Mode::Proper).unwrap();
        prop_assert_eq!(two, many.is_some());
        let solved = solve(&lifted, k, Mode::Proper, 1000).unwrap();
        prop_assert_eq!(two, matches!(solved, SolveOutcome::Colored { .. }));
        if let Some(c) = many {
            let members: Vec<Vec<usize>> = lifted.edges().iter().map(|e| e.members().unwrap()).collect();
            let colors: Vec<usize> = (0..lifted.window().unwrap()).map(|v| c.color_at(v).unwrap()).collect();
            prop_assert!(coloring_ok(&colors, &members, Mode::Proper));
        }
    }

    #[test]
    fn range_edges_decode_long_injections(values in btree_set(0usize..200, 0..=50), seed in any::<u64>()) {
        let mut values: Vec<usize> = values.into_iter().collect();
        // a seeded shuffle keeps the order arbitrary
        let mut s = seed;
        for i in (1..values.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            values.swap(i, (s >> 33) as usize % (i + 1));
        }
        let g = Injection::new(values.clone()).unwrap();
        let edges = edge_set(&range_edge_gadget(&g));
        let decoded: BTreeSet<usize> = (0..=200).filter(|&m| range_edge_decode(&edges, m)).collect();
        prop_assert_eq!(decoded, values.into_iter().collect::<BTreeSet<_>>());
    }

    #[test]
    fn charfn_tables_vanish_past_their_bound(values in btree_set(0usize..40, 0..=20)) {
        let g = Injection::new(values.into_iter().collect()).unwrap();
        let h = range_charfn_gadget(&g, 41);
        for e in h.edges() {
            let EdgeSpec::CharFn(t) = e else { panic!("charfn gadget lists a finite edge") };
            let bound = t.bound().unwrap();
            prop_assert!((bound..bound + 50).all(|v| !t.get(v)));
        }
    }
}

#[test]
fn parity_pins_exactly_the_missing_rows() {
    for values in common::all_injections(3, 6) {
        let f = Injection::new(values.clone()).unwrap();
        let w = ParityWindow::covering(&f, 5);
        let h = parity_gadget(&f, &w).unwrap();
        for n in 0..5 {
            let top = h.code_of(&VertexLabel::Chain { row: n, col: 0 }).unwrap();
            let odd = h.code_of(&VertexLabel::Backbone(2 * n + 1)).unwrap();
            let s: Vec<Vec<usize>> = h
                .edges()
                .iter()
                .map(|e| e.members().unwrap())
                .filter(|m| m.contains(&top) && m.contains(&odd))
                .collect();
            assert_eq!(s.len(), 1, "one s edge for row {n} of {values:?}");
            let expected = if values.contains(&n) { 3 } else { 2 };
            assert_eq!(s[0].len(), expected, "row {n} of {values:?}");
        }
    }
}
