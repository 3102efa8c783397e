//! Range of an injection from proper 2-colorings.
//!
//! Vertices are a backbone `b_m` and chains `v_{n,j}`. Edges:
//!
//! * `p_{n,i} = {v_{n,i}, v_{n,i+1}}` alternate colors along each chain;
//! * `q_m = {b_m, b_{m+1}}` alternate colors along the backbone;
//! * `r_t = {b_{2t}, v_{f(t),2t}}` flips chain `f(t)` against the backbone;
//! * `s_n = {v_{n,0}, b_{2n+1}} ∪ {b_{2i} : f(i) = n}` pins chain `n` when
//!   `n` is not in the range.
//!
//! With `b_0` colored 0, `v_{n,0}` is colored 1 exactly when `n` is in the
//! range.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{code, require, GadgetError, Injection};
use crate::coloring::{Coloring, Mode};
use crate::hypergraph::{CharTable, EdgeSpec, Hypergraph, Repr, Universe, VertexId};
use crate::labels::VertexLabel;

/// Finite part of the parity gadget: backbone `b_0..=b_backbone` and chains
/// `v_{n,0..=chain}` for `n < rows`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityWindow {
    pub rows: usize,
    pub backbone: usize,
    pub chain: usize,
}

impl ParityWindow {
    /// The smallest window that decodes rows `0..rows` for `f`: backbone up
    /// to `max(2 rows + 1, 2d)` and chains up to `2d`.
    pub fn covering(f: &Injection, rows: usize) -> Self {
        let d = f.len();
        ParityWindow { rows, backbone: (2 * rows + 1).max(2 * d), chain: 2 * d }
    }

    fn check(&self, f: &Injection) -> Result<(), GadgetError> {
        let need = ParityWindow::covering(f, self.rows);
        if self.backbone < need.backbone {
            return Err(GadgetError::WindowTooSmall { needed: need.backbone, got: self.backbone });
        }
        if self.chain < need.chain {
            return Err(GadgetError::WindowTooSmall { needed: need.chain, got: self.chain });
        }
        Ok(())
    }

    pub fn backbone_code(&self, m: usize) -> VertexId {
        m
    }

    pub fn chain_code(&self, n: usize, j: usize) -> VertexId {
        self.backbone + 1 + n * (self.chain + 1) + j
    }

    pub fn size(&self) -> usize {
        self.backbone + 1 + self.rows * (self.chain + 1)
    }

    fn labels(&self) -> Vec<VertexLabel> {
        let mut labels: Vec<VertexLabel> = (0..=self.backbone).map(VertexLabel::Backbone).collect();
        for row in 0..self.rows {
            labels.extend((0..=self.chain).map(|col| VertexLabel::Chain { row, col }));
        }
        labels
    }
}

fn charfn(members: &[VertexId]) -> EdgeSpec {
    EdgeSpec::CharFn(CharTable::of_set(members))
}

/// Every `p`, `q`, `r` and `s` edge whose vertices all lie in the window.
pub fn parity_gadget(f: &Injection, w: &ParityWindow) -> Result<Hypergraph, GadgetError> {
    w.check(f)?;
    let b = |m| w.backbone_code(m);
    let v = |n, j| w.chain_code(n, j);
    let mut edges = Vec::new();
    for m in 0..w.backbone {
        edges.push(charfn(&[b(m), b(m + 1)]));
    }
    for n in 0..w.rows {
        for i in 0..w.chain {
            edges.push(charfn(&[v(n, i), v(n, i + 1)]));
        }
        let mut s = vec![b(2 * n + 1), v(n, 0)];
        if let Some(t) = f.preimage(n) {
            s.push(b(2 * t));
        }
        s.sort_unstable();
        edges.push(charfn(&s));
    }
    for (t, &n) in f.values().iter().enumerate() {
        if n < w.rows {
            edges.push(charfn(&[b(2 * t), v(n, 2 * t)]));
        }
    }
    Ok(Hypergraph::new(Universe::Window(w.size()), Repr::SeqOfCharFns, edges)?.with_labels(w.labels())?)
}

/// A 2-coloring that is proper on the restriction of every edge to
/// `vertices`: `b_m` gets `m mod 2`, and chain `n` gets `j mod 2`, shifted by
/// one when some `b_{2t}` with `f(t) = n` is among `vertices`.
pub fn parity_local_coloring(
    f: &Injection,
    w: &ParityWindow,
    vertices: &BTreeSet<VertexId>,
) -> Result<Coloring, GadgetError> {
    w.check(f)?;
    let mut colors: Vec<usize> = (0..=w.backbone).map(|m| m % 2).collect();
    for n in 0..w.rows {
        let flipped = f.preimage(n).is_some_and(|t| vertices.contains(&w.backbone_code(2 * t)));
        colors.extend((0..=w.chain).map(|j| (j + usize::from(flipped)) % 2));
    }
    Ok(Coloring::finite(2, colors)?)
}

/// `{n < rows : v_{n,0} is colored 1}` after recoloring so `b_0` is 0.
/// `c` must be a proper 2-coloring of the gadget `h`.
pub fn parity_decode(h: &Hypergraph, c: &Coloring, rows: usize) -> Result<BTreeSet<usize>, GadgetError> {
    if c.k() != 2 {
        return Err(GadgetError::NotTwoColors(c.k()));
    }
    require(h, c, Mode::Proper)?;
    let flip = c.color_at(code(h, &VertexLabel::Backbone(0))?)?;
    let mut range = BTreeSet::new();
    for n in 0..rows {
        let v = code(h, &VertexLabel::Chain { row: n, col: 0 })?;
        if c.color_at(v)? ^ flip == 1 {
            range.insert(n);
        }
    }
    Ok(range)
}
