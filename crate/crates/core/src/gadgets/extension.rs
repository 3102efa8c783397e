//! Lifting 2-color gadgets to `k` colors.

use super::GadgetError;
use crate::hypergraph::{CharTable, EdgeSpec, Hypergraph, Repr, Universe};
use crate::labels::VertexLabel;

/// Adds `k - 2` fresh vertices after the window, joined to each other and to
/// every original vertex by 2-edges. The result has a proper `k`-coloring
/// iff `h` has a proper 2-coloring.
///
/// `h` needs a window universe, or finite edges over the naturals (the
/// window is then `1 + max vertex`).
pub fn k_extension(h: &Hypergraph, k: usize) -> Result<Hypergraph, GadgetError> {
    if k < 2 {
        return Err(GadgetError::TooFewColors(k));
    }
    let n = match h.window() {
        Some(n) => n,
        None => h.finite_extent().ok_or(GadgetError::NotFinite)?,
    };
    let fresh = k - 2;
    let pair = |a, b| match h.repr() {
        Repr::SeqOfCharFns => EdgeSpec::CharFn(CharTable::of_set(&[a, b])),
        _ => EdgeSpec::finite([a, b]),
    };
    let mut edges = h.edges().to_vec();
    for w in n..n + fresh {
        for x in n..w {
            edges.push(pair(x, w));
        }
        for v in 0..n {
            edges.push(pair(v, w));
        }
    }
    let g = Hypergraph::new(Universe::Window(n + fresh), h.repr(), edges)?;
    Ok(match h.labels() {
        Some(labels) => {
            let mut labels = labels.to_vec();
            labels.extend((0..fresh).map(VertexLabel::Fresh));
            g.with_labels(labels)?
        }
        None => g,
    })
}
