//! The nested tail hypergraph `E_j = {k : k >= j}`.

use std::collections::BTreeSet;

use crate::coloring::Coloring;
use crate::hypergraph::{EdgeSpec, Hypergraph, Repr, Universe, VertexId};

/// Tail edges `E_j` for `j < window`, over the naturals.
pub fn matryoshka(window: usize) -> Hypergraph {
    let edges = (0..window).map(EdgeSpec::TailFrom).collect();
    Hypergraph::new(Universe::Naturals, Repr::SeqOfCharFns, edges).expect("tails over the naturals are valid")
}

/// Colors the largest vertex of `vs` red (1) and every smaller vertex blue
/// (0). Every tail meets `vs` in a set whose largest element is that vertex,
/// so each nonempty restriction sees red exactly once.
pub fn matryoshka_local_coloring(vs: &BTreeSet<VertexId>) -> Coloring {
    let colors = match vs.last() {
        Some(&top) => (0..=top).map(|v| usize::from(v == top)).collect(),
        None => Vec::new(),
    };
    Coloring::finite(2, colors).expect("two colors")
}
