//! Separating the ranges of two injections with disjoint ranges from strong
//! colorings.
//!
//! The triple gadget has vertices `u_i` (code `2i`) and `v_k` (code `2k+1`)
//! and edges `{u_i, u_j, v_k}` whenever `i, j < k` and `f`, `g` reach `i`, `j`
//! below `k`. The pair gadget has vertices `v_n` (code `n`) and edges
//! `{v_{f(a)}, v_{g(b)}}` indexed by the Cantor code of `(a, b)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{code, require, GadgetError, Injection};
use crate::coloring::{Coloring, Mode};
use crate::hypergraph::{EdgeSpec, Hypergraph, Repr, Universe, VertexId};
use crate::labels::VertexLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Separation {
    Triple,
    Pair,
}

/// `(a+b)(a+b+1)/2 + b`.
pub fn cantor_pair(a: usize, b: usize) -> usize {
    (a + b) * (a + b + 1) / 2 + b
}

pub fn cantor_unpair(i: usize) -> (usize, usize) {
    let mut w = 0;
    while (w + 1) * (w + 2) / 2 <= i {
        w += 1;
    }
    let b = i - w * (w + 1) / 2;
    (w - b, b)
}

fn disjoint(f: &Injection, g: &Injection) -> Result<(), GadgetError> {
    match f.range().intersection(&g.range()).next() {
        Some(&n) => Err(GadgetError::RangesIntersect(n)),
        None => Ok(()),
    }
}

/// Number of indices that lets every value of `f` and `g` reach an edge of
/// the triple gadget.
pub fn triple_window(f: &Injection, g: &Injection) -> usize {
    let top = [f.max_value(), g.max_value(), f.len().checked_sub(1), g.len().checked_sub(1)]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0);
    top + 2
}

/// Triples `{u_i, u_j, v_k}` for `k < window`, as a set of codes.
pub fn triple_separation_gadget(f: &Injection, g: &Injection, window: usize) -> Result<Hypergraph, GadgetError> {
    disjoint(f, g)?;
    let mut edges = Vec::new();
    for k in 0..window {
        let from_f = f.values()[..k.min(f.len())].iter().filter(|&&i| i < k);
        for &i in from_f {
            for &j in g.values()[..k.min(g.len())].iter().filter(|&&j| j < k) {
                edges.push(EdgeSpec::finite([2 * i, 2 * j, 2 * k + 1]));
            }
        }
    }
    let labels = (0..2 * window)
        .map(|c| if c % 2 == 0 { VertexLabel::Upper(c / 2) } else { VertexLabel::Lower(c / 2) })
        .collect();
    Ok(Hypergraph::new(Universe::Window(2 * window), Repr::SetOfCodes, edges)?.with_labels(labels)?)
}

/// Strong 3-coloring of the part of the triple gadget inside `vertices`:
/// with `j` the largest `v`-index present, `u_i` gets 0 if `f` reaches `i`
/// below `j`, 1 if `g` does, and everything else gets 2.
pub fn triple_local_coloring(
    f: &Injection,
    g: &Injection,
    window: usize,
    vertices: &BTreeSet<VertexId>,
) -> Result<Coloring, GadgetError> {
    disjoint(f, g)?;
    let j_n = vertices.iter().filter(|&&c| c % 2 == 1).map(|c| c / 2).max().unwrap_or(0);
    let reached = |h: &Injection, i: usize| h.values()[..j_n.min(h.len())].contains(&i);
    let colors = (0..2 * window)
        .map(|c| match c % 2 {
            0 if reached(f, c / 2) => 0,
            0 if reached(g, c / 2) => 1,
            _ => 2,
        })
        .collect();
    Ok(Coloring::finite(3, colors)?)
}

/// Edge indices that cover every pair of arguments of `f` and `g`.
pub fn pair_window(f: &Injection, g: &Injection) -> usize {
    match (f.len(), g.len()) {
        (0, _) | (_, 0) => 0,
        (a, b) => cantor_pair(a - 1, b - 1) + 1,
    }
}

/// Edges `e_i = {v_{f(a)}, v_{g(b)}}` for `i = <a, b> < index_bound` with `a`,
/// `b` in the domains, in index order.
pub fn pair_separation_gadget(f: &Injection, g: &Injection, index_bound: usize) -> Result<Hypergraph, GadgetError> {
    disjoint(f, g)?;
    let size = f.max_value().into_iter().chain(g.max_value()).max().map_or(0, |m| m + 1);
    let edges = (0..index_bound)
        .filter_map(|i| {
            let (a, b) = cantor_unpair(i);
            Some(EdgeSpec::finite([f.get(a)?, g.get(b)?]))
        })
        .collect();
    let labels = (0..size).map(VertexLabel::Lower).collect();
    Ok(Hypergraph::new(Universe::Window(size), Repr::SeqOfCodes, edges)?.with_labels(labels)?)
}

/// Strong 2-coloring of the pair edges with index below `b`: `v_{f(t)}` for
/// `t < b` gets 0, every other vertex of `0..size` gets 1.
pub fn pair_local_coloring(f: &Injection, size: usize, b: usize) -> Result<Coloring, GadgetError> {
    let zero: BTreeSet<usize> = f.values()[..b.min(f.len())].iter().copied().collect();
    Ok(Coloring::finite(2, (0..size).map(|n| usize::from(!zero.contains(&n))).collect())?)
}

/// The set of indices whose vertex shares a color with some `f`-vertex.
/// `c` must be strong on `h`. The result contains every value of `f` inside
/// the gadget and, for disjoint ranges, no value of `g`.
pub fn separation_decode(
    h: &Hypergraph,
    c: &Coloring,
    f: &Injection,
    which: Separation,
) -> Result<BTreeSet<usize>, GadgetError> {
    require(h, c, Mode::Strong)?;
    let label = |n| match which {
        Separation::Triple => VertexLabel::Upper(n),
        Separation::Pair => VertexLabel::Lower(n),
    };
    let mut palette = BTreeSet::new();
    for &n in f.values() {
        if let Ok(v) = code(h, &label(n)) {
            palette.insert(c.color_at(v)?);
        }
    }
    let labels = h.labels().ok_or(GadgetError::Unlabelled)?;
    let mut s = BTreeSet::new();
    for (v, l) in labels.iter().enumerate() {
        let n = match (which, l) {
            (Separation::Triple, VertexLabel::Upper(n)) | (Separation::Pair, VertexLabel::Lower(n)) => *n,
            _ => continue,
        };
        if palette.contains(&c.color_at(v)?) {
            s.insert(n);
        }
    }
    Ok(s)
}
