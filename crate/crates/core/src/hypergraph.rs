//! Hypergraphs under three edge representations.
//!
//! Edges are either explicit finite vertex lists, tabulated characteristic
//! functions (optionally carrying a support bound), or tails `{k : k >= j}`.
//! A [`Hypergraph`] couples an edge list with a vertex universe and the
//! representation tag the edges were presented under.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::labels::VertexLabel;

pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("edge index {index} out of range ({len} edges)")]
    EdgeIndexOutOfRange { index: usize, len: usize },
    #[error("vertex {vertex} lies outside the window of {window} vertices")]
    VertexOutsideUniverse { vertex: VertexId, window: usize },
    #[error("edge {0} is not contained in the chosen vertex set")]
    EdgeNotContained(usize),
    #[error("edge {0} is not a finite edge with computable members")]
    NonFiniteEdge(usize),
    #[error("finite edge {0} is not strictly increasing")]
    UnsortedEdge(usize),
    #[error("edge {0} repeats an earlier edge, which a set of codes cannot do")]
    DuplicateEdge(usize),
    #[error("edge {index} does not fit the {repr:?} representation")]
    ReprMismatch { index: usize, repr: Repr },
    #[error("characteristic function reports member {vertex} at or above its support bound {bound}")]
    BoundViolated { vertex: VertexId, bound: usize },
    #[error("tail edge {0} needs the universe of all naturals")]
    TailInWindow(usize),
    #[error("label table has {labels} entries but the window has {window} vertices")]
    LabelCount { labels: usize, window: usize },
}

/// A tabulated characteristic function. Values past the end of the table
/// read as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharTable {
    table: Vec<bool>,
    bound: Option<usize>,
}

impl CharTable {
    /// A table known to vanish at and above `bound`.
    pub fn bounded(table: Vec<bool>, bound: usize) -> Result<Self, HypergraphError> {
        if let Some(v) = table.iter().enumerate().skip(bound).find(|(_, b)| **b).map(|(v, _)| v) {
            return Err(HypergraphError::BoundViolated { vertex: v, bound });
        }
        Ok(CharTable { table, bound: Some(bound) })
    }

    /// A table with no declared support bound: only pointwise queries are allowed.
    pub fn unbounded(table: Vec<bool>) -> Self {
        CharTable { table, bound: None }
    }

    /// The bounded table of a finite vertex set, with bound `1 + max`.
    pub fn of_set(members: &[VertexId]) -> Self {
        let bound = members.iter().max().map_or(0, |m| m + 1);
        let mut table = vec![false; bound];
        for &v in members {
            table[v] = true;
        }
        CharTable { table, bound: Some(bound) }
    }

    pub fn get(&self, v: VertexId) -> bool {
        self.table.get(v).copied().unwrap_or(false)
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    /// Members below `bound`, for any caller-supplied bound.
    pub fn members_below(&self, bound: usize) -> Vec<VertexId> {
        (0..bound.min(self.table.len())).filter(|&v| self.table[v]).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawEdge", into = "RawEdge")]
pub enum EdgeSpec {
    /// Strictly increasing vertex list.
    Finite(Vec<VertexId>),
    CharFn(CharTable),
    /// `{k : k >= j}`.
    TailFrom(VertexId),
}

impl EdgeSpec {
    /// Builds a finite edge from any vertex collection, sorting and deduplicating.
    pub fn finite<I: IntoIterator<Item = VertexId>>(vs: I) -> Self {
        let set: BTreeSet<VertexId> = vs.into_iter().collect();
        EdgeSpec::Finite(set.into_iter().collect())
    }

    pub fn contains(&self, v: VertexId) -> bool {
        match self {
            EdgeSpec::Finite(vs) => vs.binary_search(&v).is_ok(),
            EdgeSpec::CharFn(t) => t.get(v),
            EdgeSpec::TailFrom(j) => v >= *j,
        }
    }

    /// All members, when they can be listed: finite edges and bounded
    /// characteristic functions.
    pub fn members(&self) -> Option<Vec<VertexId>> {
        match self {
            EdgeSpec::Finite(vs) => Some(vs.clone()),
            EdgeSpec::CharFn(t) => t.bound().map(|b| t.members_below(b)),
            EdgeSpec::TailFrom(_) => None,
        }
    }

    /// Pointwise intersection with a finite vertex set.
    pub fn intersect(&self, vs: &BTreeSet<VertexId>) -> Vec<VertexId> {
        vs.iter().copied().filter(|&v| self.contains(v)).collect()
    }

    fn is_sorted_strict(&self) -> bool {
        match self {
            EdgeSpec::Finite(vs) => vs.windows(2).all(|w| w[0] < w[1]),
            _ => true,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum RawEdge {
    Finite(Vec<VertexId>),
    Tail(VertexId),
    Charfn {
        table: Vec<u8>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bound: Option<usize>,
    },
}

impl TryFrom<RawEdge> for EdgeSpec {
    type Error = String;

    fn try_from(raw: RawEdge) -> Result<Self, String> {
        Ok(match raw {
            RawEdge::Finite(vs) => {
                let e = EdgeSpec::Finite(vs);
                if !e.is_sorted_strict() {
                    return Err("finite edge must be strictly increasing".into());
                }
                e
            }
            RawEdge::Tail(j) => EdgeSpec::TailFrom(j),
            RawEdge::Charfn { table, bound } => {
                if let Some(bad) = table.iter().find(|b| **b > 1) {
                    return Err(format!("characteristic table entry {bad} is not a bit"));
                }
                let bits: Vec<bool> = table.into_iter().map(|b| b == 1).collect();
                match bound {
                    Some(b) => EdgeSpec::CharFn(CharTable::bounded(bits, b).map_err(|e| e.to_string())?),
                    None => EdgeSpec::CharFn(CharTable::unbounded(bits)),
                }
            }
        })
    }
}

impl From<EdgeSpec> for RawEdge {
    fn from(e: EdgeSpec) -> Self {
        match e {
            EdgeSpec::Finite(vs) => RawEdge::Finite(vs),
            EdgeSpec::TailFrom(j) => RawEdge::Tail(j),
            EdgeSpec::CharFn(t) => RawEdge::Charfn {
                table: t.table.iter().map(|&b| b as u8).collect(),
                bound: t.bound,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Universe {
    /// Vertices `0..n`.
    #[serde(rename = "window")]
    Window(usize),
    #[serde(rename = "naturals")]
    Naturals,
}

impl Universe {
    pub fn contains(&self, v: VertexId) -> bool {
        match self {
            Universe::Window(n) => v < *n,
            Universe::Naturals => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Repr {
    #[serde(rename = "set")]
    SetOfCodes,
    #[serde(rename = "seq")]
    SeqOfCodes,
    #[serde(rename = "charfn")]
    SeqOfCharFns,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    universe: Universe,
    repr: Repr,
    edges: Vec<EdgeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<VertexLabel>>,
}

#[derive(Deserialize)]
struct RawHypergraph {
    universe: Universe,
    repr: Repr,
    edges: Vec<EdgeSpec>,
    #[serde(default)]
    labels: Option<Vec<VertexLabel>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = HypergraphError;

    fn try_from(raw: RawHypergraph) -> Result<Self, Self::Error> {
        let h = Hypergraph::new(raw.universe, raw.repr, raw.edges)?;
        match raw.labels {
            Some(labels) => h.with_labels(labels),
            None => Ok(h),
        }
    }
}

impl Hypergraph {
    pub fn new(universe: Universe, repr: Repr, edges: Vec<EdgeSpec>) -> Result<Self, HypergraphError> {
        let mut seen = BTreeSet::new();
        for (index, e) in edges.iter().enumerate() {
            if !e.is_sorted_strict() {
                return Err(HypergraphError::UnsortedEdge(index));
            }
            let fits = matches!(
                (repr, e),
                (Repr::SetOfCodes | Repr::SeqOfCodes, EdgeSpec::Finite(_))
                    | (Repr::SeqOfCharFns, EdgeSpec::CharFn(_) | EdgeSpec::TailFrom(_))
            );
            if !fits {
                return Err(HypergraphError::ReprMismatch { index, repr });
            }
            if let Universe::Window(window) = universe {
                match e {
                    EdgeSpec::TailFrom(_) => return Err(HypergraphError::TailInWindow(index)),
                    EdgeSpec::Finite(vs) => {
                        if let Some(&vertex) = vs.iter().find(|&&v| v >= window) {
                            return Err(HypergraphError::VertexOutsideUniverse { vertex, window });
                        }
                    }
                    EdgeSpec::CharFn(t) => {
                        if let Some(vertex) = t.members_below(t.table.len()).into_iter().find(|&v| v >= window) {
                            return Err(HypergraphError::VertexOutsideUniverse { vertex, window });
                        }
                    }
                }
            }
            if repr == Repr::SetOfCodes && !seen.insert(e.clone().members()) {
                return Err(HypergraphError::DuplicateEdge(index));
            }
        }
        Ok(Hypergraph { universe, repr, edges, labels: None })
    }

    /// Finite edges over the window `0..window`, as a sequence of codes.
    pub fn from_sets(window: usize, sets: &[Vec<VertexId>]) -> Result<Self, HypergraphError> {
        let edges = sets.iter().map(|s| EdgeSpec::finite(s.iter().copied())).collect();
        Hypergraph::new(Universe::Window(window), Repr::SeqOfCodes, edges)
    }

    /// Attaches a label table; requires a window universe of matching size.
    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self, HypergraphError> {
        let window = match self.universe {
            Universe::Window(n) => n,
            Universe::Naturals => 0,
        };
        if labels.len() != window {
            return Err(HypergraphError::LabelCount { labels: labels.len(), window });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn repr(&self) -> Repr {
        self.repr
    }

    pub fn edges(&self) -> &[EdgeSpec] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<&EdgeSpec, HypergraphError> {
        self.edges
            .get(index)
            .ok_or(HypergraphError::EdgeIndexOutOfRange { index, len: self.edges.len() })
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    /// Code of a labelled vertex.
    pub fn code_of(&self, label: &VertexLabel) -> Option<VertexId> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Label-to-code lookup table.
    pub fn label_index(&self) -> BTreeMap<VertexLabel, VertexId> {
        self.labels
            .iter()
            .flatten()
            .enumerate()
            .map(|(code, l)| (l.clone(), code))
            .collect()
    }

    /// Size of the vertex window, if the universe is finite.
    pub fn window(&self) -> Option<usize> {
        match self.universe {
            Universe::Window(n) => Some(n),
            Universe::Naturals => None,
        }
    }

    /// The smallest `n` such that every edge lies inside `0..n`, when every
    /// edge has listable members.
    pub fn finite_extent(&self) -> Option<usize> {
        if let Some(n) = self.window() {
            if self.edges.iter().all(|e| e.members().is_some()) {
                return Some(n);
            }
            return None;
        }
        let mut extent = 0;
        for e in &self.edges {
            let m = e.members()?;
            extent = extent.max(m.last().map_or(0, |v| v + 1));
        }
        Some(extent)
    }

    pub fn edge_contains(&self, edge_index: usize, v: VertexId) -> Result<bool, HypergraphError> {
        let e = self.edge(edge_index)?;
        if let Universe::Window(window) = self.universe {
            if v >= window {
                return Err(HypergraphError::VertexOutsideUniverse { vertex: v, window });
            }
        }
        Ok(e.contains(v))
    }

    pub fn partial_hypergraph(
        &self,
        vs: &BTreeSet<VertexId>,
        idxs: &BTreeSet<usize>,
    ) -> Result<PartialHypergraph, HypergraphError> {
        for &i in idxs {
            let members = self.edge(i)?.members().ok_or(HypergraphError::NonFiniteEdge(i))?;
            if !members.iter().all(|v| vs.contains(v)) {
                return Err(HypergraphError::EdgeNotContained(i));
            }
        }
        Ok(PartialHypergraph { vertices: vs.clone(), edge_indices: idxs.clone() })
    }

    /// Every edge intersected with `vs`, in edge order. Empty intersections
    /// are kept.
    pub fn partial_subhypergraph(&self, vs: &BTreeSet<VertexId>) -> PartialSubhypergraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(index, e)| RestrictedEdge { index, members: e.intersect(vs) })
            .collect();
        PartialSubhypergraph { vertices: vs.clone(), edges }
    }

    /// `m_0, ..., m_n`: each `m_i` is the least integer above `m_{i-1}`
    /// bounding every vertex of the first `i` edges, with `m_0 = 0`.
    pub fn restriction_bounds(&self, n: usize) -> Result<Vec<usize>, HypergraphError> {
        let mut bounds = Vec::with_capacity(n + 1);
        bounds.push(0);
        for i in 1..=n {
            let prev = bounds[i - 1];
            let top = match self.edges.get(i - 1) {
                Some(e) => e.members().ok_or(HypergraphError::NonFiniteEdge(i - 1))?.last().copied(),
                None => None,
            };
            bounds.push(top.map_or(prev + 1, |t| t.max(prev + 1)));
        }
        Ok(bounds)
    }

    /// `(m_n, H_n)` where `H_n` has vertices `0..=m_n` and the first `n` edges.
    pub fn restriction_level(&self, n: usize) -> Result<(usize, PartialHypergraph), HypergraphError> {
        let m = *self.restriction_bounds(n)?.last().expect("bounds start with m_0");
        let vertices = (0..=m).collect();
        let idxs = (0..n.min(self.edges.len())).collect();
        let ph = self.partial_hypergraph(&vertices, &idxs)?;
        Ok((m, ph))
    }
}

/// Whole parent edges inside a chosen vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialHypergraph {
    pub vertices: BTreeSet<VertexId>,
    pub edge_indices: BTreeSet<usize>,
}

impl PartialHypergraph {
    /// The same substructure viewed as a partial subhypergraph: each selected
    /// edge is its own intersection with the vertex set.
    pub fn as_subhypergraph(&self, parent: &Hypergraph) -> PartialSubhypergraph {
        let edges = self
            .edge_indices
            .iter()
            .map(|&index| RestrictedEdge { index, members: parent.edges[index].intersect(&self.vertices) })
            .collect();
        PartialSubhypergraph { vertices: self.vertices.clone(), edges }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedEdge {
    /// Index of the parent edge.
    pub index: usize,
    pub members: Vec<VertexId>,
}

impl RestrictedEdge {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Parent edges intersected with a chosen vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialSubhypergraph {
    pub vertices: BTreeSet<VertexId>,
    pub edges: Vec<RestrictedEdge>,
}

impl PartialSubhypergraph {
    pub fn drop_empty(mut self) -> Self {
        self.edges.retain(|e| !e.is_empty());
        self
    }

    /// A standalone finite hypergraph over `0..window` carrying the
    /// restricted edges in order.
    pub fn to_hypergraph(&self, window: usize) -> Result<Hypergraph, HypergraphError> {
        let edges = self.edges.iter().map(|e| EdgeSpec::Finite(e.members.clone())).collect();
        Hypergraph::new(Universe::Window(window), Repr::SeqOfCodes, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    fn matryoshka(n: usize) -> Hypergraph {
        Hypergraph::new(Universe::Naturals, Repr::SeqOfCharFns, (0..n).map(EdgeSpec::TailFrom).collect()).unwrap()
    }

    #[test]
    fn membership_across_variants() {
        let h = Hypergraph::new(Universe::Naturals, Repr::SeqOfCodes, vec![EdgeSpec::Finite(vec![1, 3])]).unwrap();
        assert!(h.edge_contains(0, 3).unwrap());
        assert!(!h.edge_contains(0, 2).unwrap());

        let m = matryoshka(6);
        assert!(!m.edge_contains(5, 4).unwrap());
        assert!(m.edge_contains(5, 5).unwrap());

        let chi = Hypergraph::new(
            Universe::Naturals,
            Repr::SeqOfCharFns,
            vec![EdgeSpec::CharFn(CharTable::of_set(&[2, 7]))],
        )
        .unwrap();
        assert!(chi.edge_contains(0, 7).unwrap());
        assert!(!chi.edge_contains(0, 6).unwrap());
    }

    #[test]
    fn membership_errors() {
        let h = Hypergraph::from_sets(4, &[vec![0, 1]]).unwrap();
        assert_eq!(h.edge_contains(1, 0), Err(HypergraphError::EdgeIndexOutOfRange { index: 1, len: 1 }));
        assert_eq!(h.edge_contains(0, 4), Err(HypergraphError::VertexOutsideUniverse { vertex: 4, window: 4 }));
    }

    #[test]
    fn construction_checks() {
        assert_eq!(
            Hypergraph::new(Universe::Window(3), Repr::SeqOfCodes, vec![EdgeSpec::Finite(vec![2, 1])]),
            Err(HypergraphError::UnsortedEdge(0))
        );
        assert_eq!(
            Hypergraph::new(Universe::Window(3), Repr::SeqOfCodes, vec![EdgeSpec::Finite(vec![1, 3])]),
            Err(HypergraphError::VertexOutsideUniverse { vertex: 3, window: 3 })
        );
        assert_eq!(
            Hypergraph::new(Universe::Naturals, Repr::SeqOfCodes, vec![EdgeSpec::TailFrom(0)]),
            Err(HypergraphError::ReprMismatch { index: 0, repr: Repr::SeqOfCodes })
        );
        let twice = vec![EdgeSpec::Finite(vec![0, 1]), EdgeSpec::Finite(vec![0, 1])];
        assert!(Hypergraph::new(Universe::Window(2), Repr::SeqOfCodes, twice.clone()).is_ok());
        assert_eq!(
            Hypergraph::new(Universe::Window(2), Repr::SetOfCodes, twice),
            Err(HypergraphError::DuplicateEdge(1))
        );
        assert_eq!(
            CharTable::bounded(vec![false, false, true], 2),
            Err(HypergraphError::BoundViolated { vertex: 2, bound: 2 })
        );
    }

    #[test]
    fn partial_hypergraph_examples() {
        let h = Hypergraph::from_sets(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        let ph = h.partial_hypergraph(&set(&[0, 1]), &set(&[0])).unwrap();
        assert_eq!(ph, PartialHypergraph { vertices: set(&[0, 1]), edge_indices: set(&[0]) });
        assert_eq!(h.partial_hypergraph(&set(&[0, 1]), &set(&[1])), Err(HypergraphError::EdgeNotContained(1)));
        assert_eq!(
            matryoshka(3).partial_hypergraph(&set(&[0, 1]), &set(&[0])),
            Err(HypergraphError::NonFiniteEdge(0))
        );
    }

    #[test]
    fn partial_subhypergraph_examples() {
        let m = matryoshka(11);
        let sub = m.partial_subhypergraph(&set(&[3, 5, 9]));
        assert_eq!(sub.edges.len(), 11);
        assert_eq!(sub.edges[0].members, vec![3, 5, 9]);
        assert_eq!(sub.edges[4].members, vec![5, 9]);
        assert_eq!(sub.edges[6].members, vec![9]);
        assert!(sub.edges[10].is_empty());

        let h = Hypergraph::from_sets(6, &[vec![0, 1]]).unwrap();
        let same = h.partial_subhypergraph(&set(&[0, 1]));
        assert_eq!(same.edges, vec![RestrictedEdge { index: 0, members: vec![0, 1] }]);
        let disjoint = h.partial_subhypergraph(&set(&[5]));
        assert!(disjoint.edges[0].is_empty());
        assert!(disjoint.drop_empty().edges.is_empty());
    }

    #[test]
    fn restriction_level_examples() {
        let h = Hypergraph::new(Universe::Naturals, Repr::SeqOfCodes, vec![EdgeSpec::Finite(vec![1, 3])]).unwrap();
        let (m, h1) = h.restriction_level(1).unwrap();
        assert_eq!(m, 3);
        assert_eq!(h1.vertices, set(&[0, 1, 2, 3]));
        assert_eq!(h1.edge_indices, set(&[0]));

        let h = Hypergraph::new(Universe::Naturals, Repr::SeqOfCodes, vec![EdgeSpec::Finite(vec![0])]).unwrap();
        let (m, h0) = h.restriction_level(0).unwrap();
        assert_eq!(m, 0);
        assert_eq!(h0.vertices, set(&[0]));
        assert!(h0.edge_indices.is_empty());

        let h = Hypergraph::new(
            Universe::Naturals,
            Repr::SeqOfCodes,
            vec![EdgeSpec::Finite(vec![1, 3]), EdgeSpec::Finite(vec![2])],
        )
        .unwrap();
        assert_eq!(h.restriction_level(2).unwrap().0, 4);
    }

    #[test]
    fn json_shape() {
        let h = Hypergraph::new(
            Universe::Naturals,
            Repr::SeqOfCharFns,
            vec![EdgeSpec::TailFrom(2), EdgeSpec::CharFn(CharTable::of_set(&[1]))],
        )
        .unwrap();
        let text = serde_json::to_string(&h).unwrap();
        assert_eq!(
            text,
            r#"{"universe":"naturals","repr":"charfn","edges":[{"tail":2},{"charfn":{"table":[0,1],"bound":2}}]}"#
        );
        let back: Hypergraph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, h);

        let w: Hypergraph = serde_json::from_str(r#"{"universe":{"window":3},"repr":"set","edges":[{"finite":[0,2]}]}"#).unwrap();
        assert_eq!(w.window(), Some(3));
        assert!(serde_json::from_str::<Hypergraph>(r#"{"universe":{"window":3},"repr":"set","edges":[{"finite":[2,0]}]}"#).is_err());
        assert!(serde_json::from_str::<Hypergraph>(r#"{"universe":"naturals","repr":"charfn","edges":[{"charfn":{"table":[0,2]}}]}"#).is_err());
    }
}
