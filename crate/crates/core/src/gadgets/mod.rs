//! Hypergraph gadgets: each turns an injection or a tree into a hypergraph
//! whose colorings encode a property of the input, together with a local
//! coloring witness and a decoder that reads the property back.

mod extension;
mod matryoshka;
mod parity;
mod range;
mod separation;
mod tree;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{verify, Coloring, ColoringError, Mode, VerifyError, WitnessReport};
use crate::hypergraph::{Hypergraph, HypergraphError, VertexId};
use crate::labels::VertexLabel;

pub use extension::k_extension;
pub use matryoshka::{matryoshka, matryoshka_local_coloring};
pub use parity::{parity_decode, parity_gadget, parity_local_coloring, ParityWindow};
pub use range::{edge_set, range_charfn_decode, range_charfn_gadget, range_edge_decode, range_edge_gadget};
pub use separation::{
    cantor_pair, cantor_unpair, pair_local_coloring, pair_separation_gadget, pair_window, separation_decode,
    triple_local_coloring, triple_separation_gadget, triple_window, Separation,
};
pub use tree::{coloring_to_path, leaf_transform, path_to_coloring, tree_gadget, Branch, LeafSet, TreeSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("injection repeats the value {0}")]
    DuplicateValue(usize),
    #[error("the ranges of the two injections share {0}")]
    RangesIntersect(usize),
    #[error("window too small: need {needed}, got {got}")]
    WindowTooSmall { needed: usize, got: usize },
    #[error("no code contains both {lo} and {hi}")]
    NotFound { lo: usize, hi: usize },
    #[error("coloring fails {mode} on edge {edge}")]
    ColoringRejected { mode: Mode, edge: usize },
    #[error("coloring uses {0} colors; two are needed")]
    NotTwoColors(usize),
    #[error("hypergraph has no vertex labelled {0}")]
    MissingLabel(VertexLabel),
    #[error("hypergraph carries no label table")]
    Unlabelled,
    #[error("no red child below {0:?}")]
    ExtractionStuck(Vec<usize>),
    #[error("tree has no designated branch {0}")]
    BranchNotDesignated(usize),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("k must be at least 2, got {0}")]
    TooFewColors(usize),
    #[error("hypergraph has an edge without listable members")]
    NotFinite,
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// A finite injection `{0..d-1} -> N`, listed by its values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Injection {
    values: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Injection {
    type Error = GadgetError;

    fn try_from(values: Vec<usize>) -> Result<Self, Self::Error> {
        Injection::new(values)
    }
}

impl From<Injection> for Vec<usize> {
    fn from(f: Injection) -> Self {
        f.values
    }
}

impl Injection {
    pub fn new(values: Vec<usize>) -> Result<Self, GadgetError> {
        let mut seen = BTreeSet::new();
        for &v in &values {
            if !seen.insert(v) {
                return Err(GadgetError::DuplicateValue(v));
            }
        }
        Ok(Injection { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Domain size `d`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, t: usize) -> Option<usize> {
        self.values.get(t).copied()
    }

    pub fn range(&self) -> BTreeSet<usize> {
        self.values.iter().copied().collect()
    }

    /// The `t` with `f(t) = n`, if any.
    pub fn preimage(&self, n: usize) -> Option<usize> {
        self.values.iter().position(|&v| v == n)
    }

    pub fn max_value(&self) -> Option<usize> {
        self.values.iter().copied().max()
    }
}

/// Fails unless `c` satisfies `mode` on every edge of `h`.
fn require(h: &Hypergraph, c: &Coloring, mode: Mode) -> Result<(), GadgetError> {
    match verify(h, c, mode)? {
        WitnessReport::Ok => Ok(()),
        WitnessReport::FailingEdge { index } => Err(GadgetError::ColoringRejected { mode, edge: index }),
    }
}

fn code(h: &Hypergraph, label: &VertexLabel) -> Result<VertexId, GadgetError> {
    if h.labels().is_none() {
        return Err(GadgetError::Unlabelled);
    }
    h.code_of(label).ok_or_else(|| GadgetError::MissingLabel(label.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn injections_reject_repeats() {
        assert_eq!(Injection::new(vec![3, 1, 3]), Err(GadgetError::DuplicateValue(3)));
        let f = Injection::new(vec![4, 2]).unwrap();
        assert_eq!(f.preimage(2), Some(1));
        assert_eq!(f.preimage(3), None);
        assert_eq!(serde_json::to_string(&f).unwrap(), "[4,2]");
        assert!(serde_json::from_str::<Injection>("[1,1]").is_err());
    }
}
