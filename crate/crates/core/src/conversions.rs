//! Changes of edge representation.
//!
//! Sets of codes become sequences of codes, and sequences of codes become
//! sequences of characteristic functions, without any search. The other two
//! directions need an unbounded search in general; here they are bounded:
//! membership of a code in a sequence's range is only answered up to a
//! bound, and characteristic functions are only listed when a support bound
//! is known.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{CharTable, EdgeSpec, Hypergraph, HypergraphError, Repr, VertexId};

/// Integer code of a finite edge.
pub type EdgeCode = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConversionError {
    #[error("default code {0} is not an edge code of the set")]
    DefaultNotInSet(EdgeCode),
    #[error("code {code} lies outside the code window of {window}")]
    CodeOutsideWindow { code: EdgeCode, window: EdgeCode },
    #[error("characteristic function {0} has no support bound")]
    MissingBound(usize),
    #[error("vertex {0} does not fit in a 64-bit edge code")]
    CodeOverflow(VertexId),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// Canonical code `sum 2^v` of a finite vertex set.
pub fn encode_edge(vs: &[VertexId]) -> Result<EdgeCode, ConversionError> {
    let mut code: EdgeCode = 0;
    for &v in vs {
        if v >= 64 {
            return Err(ConversionError::CodeOverflow(v));
        }
        code |= 1 << v;
    }
    Ok(code)
}

pub fn decode_edge(code: EdgeCode) -> Vec<VertexId> {
    (0..64).filter(|v| code >> v & 1 == 1).collect()
}

/// Lists a set of edge codes as the sequence `n -> (n if n in E else e0)`
/// over the code window `0..window`. The range of the result is `E`.
pub fn set_to_seq(
    codes: &BTreeSet<EdgeCode>,
    default: EdgeCode,
    window: EdgeCode,
) -> Result<Vec<EdgeCode>, ConversionError> {
    if !codes.contains(&default) {
        return Err(ConversionError::DefaultNotInSet(default));
    }
    if let Some(&code) = codes.iter().find(|&&c| c >= window) {
        return Err(ConversionError::CodeOutsideWindow { code, window });
    }
    Ok((0..window).map(|n| if codes.contains(&n) { n } else { default }).collect())
}

/// Tabulates each finite edge as a characteristic function with support
/// bound `1 + max vertex`.
pub fn seq_to_charfns(seq: &[Vec<VertexId>]) -> Vec<EdgeSpec> {
    seq.iter().map(|e| EdgeSpec::CharFn(CharTable::of_set(e))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundedAnswer {
    /// The code is the `i`-th entry of the sequence, with `i` least.
    Yes(usize),
    NoWithinBound(usize),
}

/// Searches the first `bound` entries of `seq` for the edge `e` (as a set).
/// Bounds past the end of the sequence are clipped to its length.
pub fn seq_to_set_bounded(seq: &[Vec<VertexId>], e: &[VertexId], bound: usize) -> BoundedAnswer {
    let target: BTreeSet<VertexId> = e.iter().copied().collect();
    let bound = bound.min(seq.len());
    seq[..bound]
        .iter()
        .position(|s| s.iter().copied().collect::<BTreeSet<_>>() == target)
        .map_or(BoundedAnswer::NoWithinBound(bound), BoundedAnswer::Yes)
}

/// Lists every characteristic function below its bound. `bounds[i]`, when
/// given, overrides the stored bound of `fns[i]`.
pub fn charfns_to_codes(fns: &[EdgeSpec], bounds: &[Option<usize>]) -> Result<Vec<Vec<VertexId>>, ConversionError> {
    fns.iter()
        .enumerate()
        .map(|(i, e)| {
            let supplied = bounds.get(i).copied().flatten();
            match e {
                EdgeSpec::Finite(vs) => Ok(vs.clone()),
                EdgeSpec::CharFn(t) => {
                    let b = supplied.or(t.bound()).ok_or(ConversionError::MissingBound(i))?;
                    Ok(t.members_below(b))
                }
                EdgeSpec::TailFrom(_) => Err(ConversionError::MissingBound(i)),
            }
        })
        .collect()
}

/// The same hypergraph with every edge given as a finite vertex list, in
/// order.
pub fn to_code_sequence(h: &Hypergraph) -> Result<Hypergraph, ConversionError> {
    let codes = charfns_to_codes(h.edges(), &[])?;
    let g = Hypergraph::new(h.universe(), Repr::SeqOfCodes, codes.into_iter().map(EdgeSpec::Finite).collect())?;
    Ok(match h.labels() {
        Some(labels) => g.with_labels(labels.to_vec())?,
        None => g,
    })
}

/// The same hypergraph with every finite edge tabulated as a bounded
/// characteristic function.
pub fn to_charfn_sequence(h: &Hypergraph) -> Result<Hypergraph, ConversionError> {
    let edges = h
        .edges()
        .iter()
        .map(|e| match e {
            EdgeSpec::Finite(vs) => EdgeSpec::CharFn(CharTable::of_set(vs)),
            other => other.clone(),
        })
        .collect();
    let g = Hypergraph::new(h.universe(), Repr::SeqOfCharFns, edges)?;
    Ok(match h.labels() {
        Some(labels) => g.with_labels(labels.to_vec())?,
        None => g,
    })
}
