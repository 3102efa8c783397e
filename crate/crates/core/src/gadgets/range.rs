//! Range of an injection from edge representations.
//!
//! `range_edge_gadget` lists `{0, g(n)+1}` as a sequence; knowing the set of
//! edges is knowing the range. `range_charfn_gadget` builds characteristic
//! functions whose listed members reveal the range.

use std::collections::BTreeSet;

use super::{GadgetError, Injection};
use crate::hypergraph::{CharTable, EdgeSpec, Hypergraph, Repr, Universe, VertexId};

/// Edges `e_n = {0, g(n)+1}` for `n < d`, over the naturals.
pub fn range_edge_gadget(g: &Injection) -> Hypergraph {
    let edges = g.values().iter().map(|&v| EdgeSpec::finite([0, v + 1])).collect();
    Hypergraph::new(Universe::Naturals, Repr::SeqOfCodes, edges).expect("pairs over the naturals are valid")
}

/// The finite edges of `h` as a set of vertex lists. Edges without listable
/// members are skipped.
pub fn edge_set(h: &Hypergraph) -> BTreeSet<Vec<VertexId>> {
    h.edges().iter().filter_map(|e| e.members()).collect()
}

/// `m` is in the range iff `{0, m+1}` is an edge.
pub fn range_edge_decode(edges: &BTreeSet<Vec<VertexId>>, m: usize) -> bool {
    edges.contains(&vec![0, m + 1])
}

/// Edges `e_i` for `i < edge_count`, with `e_i(n) = 1` iff `n` is `2i` or
/// `2i+2`, or `n = 2j+1` with `g(j) = i`.
///
/// Each table runs to `max(2i+3, 2d+1)`, past every vertex it can contain.
pub fn range_charfn_gadget(g: &Injection, edge_count: usize) -> Hypergraph {
    let d = g.len();
    let edges = (0..edge_count)
        .map(|i| {
            let bound = (2 * i + 3).max(2 * d + 1);
            let table = (0..bound)
                .map(|n| {
                    if n % 2 == 0 {
                        n == 2 * i || n == 2 * i + 2
                    } else {
                        g.get(n / 2) == Some(i)
                    }
                })
                .collect();
            EdgeSpec::CharFn(CharTable::bounded(table, bound).expect("table fits its bound"))
        })
        .collect();
    Hypergraph::new(Universe::Naturals, Repr::SeqOfCharFns, edges).expect("bounded tables are valid")
}

/// Scans the listed codes for the first one holding `2y` and `2y+2`; `y` is
/// in the range iff that code has a third member.
pub fn range_charfn_decode(codes: &[Vec<VertexId>], y: usize) -> Result<bool, GadgetError> {
    let (lo, hi) = (2 * y, 2 * y + 2);
    codes
        .iter()
        .find(|s| s.contains(&lo) && s.contains(&hi))
        .map(|s| s.len() > 2)
        .ok_or(GadgetError::NotFound { lo, hi })
}
