//! Trees, the path gadget and the leaf transform.
//!
//! A [`TreeSpec`] is a finite prefix-closed node set plus finitely many
//! infinite branches. A branch is a stem followed by a filler symbol
//! repeated forever; at every point of the branch the same finite set of
//! relative decorations hangs off it. Combs are the case of filler 0 and no
//! decorations. The extra generality makes the class closed under the leaf
//! transform.
//!
//! The gadget for `T` has anchors `a_0, a_1, b_0, b_1, s`, two vertices
//! `σ_0, σ_1` per nonempty node, and edges
//!
//! * `(a_0, a_1)`, `(a_1, s)`, `(b_0, b_1)`, `(b_1, s)`;
//! * `(σ_0, σ_1)` for each node and `(σ_1, s)` for each leaf;
//! * `E_σ = {σ_1} ∪ {τ_0 : τ child of σ}` for each non-leaf;
//! * `E_0 = {a_0, b_0} ∪ {σ_0 : |σ| = 1}`.
//!
//! It has a proper 2-coloring iff `T` has an infinite path. Infinite trees
//! are cut at a depth and only whole edges are kept.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{code, require, GadgetError};
use crate::coloring::{Coloring, Mode};
use crate::hypergraph::{EdgeSpec, Hypergraph, Repr, Universe, VertexId};
use crate::labels::{Anchor, VertexLabel};

pub type Node = Vec<usize>;

const BLUE: usize = 0;
const RED: usize = 1;
const ANCHORS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub stem: Node,
    #[serde(default)]
    pub filler: usize,
    /// Nonempty sequences, closed under nonempty prefixes, none starting
    /// with `filler`.
    #[serde(default)]
    pub decorations: BTreeSet<Node>,
}

impl Branch {
    pub fn comb(stem: Node) -> Self {
        Branch { stem, filler: 0, decorations: BTreeSet::new() }
    }

    /// Whether `sigma` is `stem ⌢ filler^m ⌢ d` with `d` empty or a
    /// decoration.
    fn covers(&self, sigma: &[usize]) -> bool {
        let Some(rest) = sigma.strip_prefix(self.stem.as_slice()) else {
            return false;
        };
        let skip = rest.iter().take_while(|&&x| x == self.filler).count();
        let tail = &rest[skip..];
        tail.is_empty() || self.decorations.contains(tail)
    }

    /// Whether `sigma` is `stem ⌢ filler^m`, an initial segment of the branch
    /// itself at or below the stem.
    fn on_path(&self, sigma: &[usize]) -> bool {
        sigma.strip_prefix(self.stem.as_slice()).is_some_and(|rest| rest.iter().all(|&x| x == self.filler))
    }

    /// The branch's node of length `len`.
    pub fn node_at(&self, len: usize) -> Node {
        let mut sigma: Node = self.stem.iter().copied().take(len).collect();
        sigma.resize(len, self.filler);
        sigma
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTree", into = "RawTree")]
pub struct TreeSpec {
    nodes: BTreeSet<Node>,
    branches: Vec<Branch>,
    alphabet: usize,
}

#[derive(Serialize, Deserialize)]
struct RawTree {
    nodes: Vec<Node>,
    #[serde(default)]
    branches: Vec<Branch>,
}

impl TryFrom<RawTree> for TreeSpec {
    type Error = GadgetError;

    fn try_from(raw: RawTree) -> Result<Self, Self::Error> {
        TreeSpec::new(raw.nodes, raw.branches)
    }
}

impl From<TreeSpec> for RawTree {
    fn from(t: TreeSpec) -> Self {
        RawTree { nodes: t.nodes.into_iter().filter(|n| !n.is_empty()).collect(), branches: t.branches }
    }
}

impl TreeSpec {
    /// Checks prefix closure of `nodes` (the root is implicit), that each stem
    /// is a node and that decorations are well formed.
    pub fn new<I: IntoIterator<Item = Node>>(nodes: I, branches: Vec<Branch>) -> Result<Self, GadgetError> {
        let mut set: BTreeSet<Node> = nodes.into_iter().collect();
        set.insert(Vec::new());
        for n in &set {
            if let Some((_, parent)) = n.split_last() {
                if !set.contains(parent) {
                    return Err(GadgetError::InvalidTree(format!("{n:?} has no parent")));
                }
            }
        }
        for b in &branches {
            if !set.contains(&b.stem) {
                return Err(GadgetError::InvalidTree(format!("stem {:?} is not a node", b.stem)));
            }
            for d in &b.decorations {
                match d.split_last() {
                    None => return Err(GadgetError::InvalidTree("empty decoration".into())),
                    Some(_) if d[0] == b.filler => {
                        return Err(GadgetError::InvalidTree(format!("decoration {d:?} starts with the filler")))
                    }
                    Some((_, parent)) if !parent.is_empty() && !b.decorations.contains(parent) => {
                        return Err(GadgetError::InvalidTree(format!("decoration {d:?} has no parent")))
                    }
                    _ => {}
                }
            }
        }
        let alphabet = set
            .iter()
            .flatten()
            .chain(branches.iter().flat_map(|b| b.stem.iter().chain(b.decorations.iter().flatten())))
            .copied()
            .chain(branches.iter().map(|b| b.filler))
            .max()
            .map_or(0, |m| m + 1);
        Ok(TreeSpec { nodes: set, branches, alphabet })
    }

    /// The finite tree generated by `nodes` and all their prefixes.
    pub fn closure<I: IntoIterator<Item = Node>>(nodes: I) -> Self {
        let mut set = BTreeSet::new();
        for n in nodes {
            for len in 0..=n.len() {
                set.insert(n[..len].to_vec());
            }
        }
        TreeSpec::new(set, Vec::new()).expect("prefix closure is a tree")
    }

    /// A comb: the finite tree generated by `nodes` with each stem extended by
    /// zeros forever.
    pub fn comb<I: IntoIterator<Item = Node>>(nodes: I, stems: Vec<Node>) -> Self {
        let finite = TreeSpec::closure(nodes.into_iter().chain(stems.iter().cloned()));
        TreeSpec::new(finite.nodes, stems.into_iter().map(Branch::comb).collect()).expect("stems are nodes")
    }

    /// The finitely listed nodes, root included.
    pub fn finite_nodes(&self) -> &BTreeSet<Node> {
        &self.nodes
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn contains(&self, sigma: &[usize]) -> bool {
        self.nodes.contains(sigma) || self.branches.iter().any(|b| b.covers(sigma))
    }

    pub fn children(&self, sigma: &[usize]) -> Vec<Node> {
        if !self.contains(sigma) {
            return Vec::new();
        }
        (0..self.alphabet)
            .map(|n| {
                let mut tau = sigma.to_vec();
                tau.push(n);
                tau
            })
            .filter(|tau| self.contains(tau))
            .collect()
    }

    pub fn is_leaf(&self, sigma: &[usize]) -> bool {
        self.contains(sigma) && self.children(sigma).is_empty()
    }

    /// Whether `sigma` lies on one of the infinite branches.
    pub fn on_branch(&self, sigma: &[usize]) -> bool {
        self.branches.iter().any(|b| b.node_at(sigma.len()) == sigma)
    }

    /// Every node of length at most `depth`, in (length, lexicographic) order.
    pub fn nodes_to_depth(&self, depth: usize) -> Vec<Node> {
        let mut out = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        for _ in 0..depth {
            let next: Vec<Node> = frontier.iter().flat_map(|s| self.children(s)).collect();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Whether the listed data describes a tree with no infinite path.
    pub fn is_well_founded(&self) -> bool {
        self.branches.is_empty()
    }
}

/// Vertex numbering of a depth-cut gadget.
struct Layout {
    nodes: Vec<Node>,
}

impl Layout {
    fn new(t: &TreeSpec, depth: usize) -> Self {
        Layout { nodes: t.nodes_to_depth(depth).into_iter().filter(|n| !n.is_empty()).collect() }
    }

    fn anchor(a: Anchor) -> VertexId {
        a as VertexId
    }

    fn side(&self, sigma: &[usize], side: usize) -> VertexId {
        let rank = self
            .nodes
            .binary_search_by(|n| (n.len(), n.as_slice()).cmp(&(sigma.len(), sigma)))
            .expect("node inside the layout");
        ANCHORS + 2 * rank + side
    }

    fn size(&self) -> usize {
        ANCHORS + 2 * self.nodes.len()
    }

    fn labels(&self) -> Vec<VertexLabel> {
        let mut labels: Vec<VertexLabel> =
            [Anchor::A0, Anchor::A1, Anchor::B0, Anchor::B1, Anchor::S].map(VertexLabel::Anchor).to_vec();
        for n in &self.nodes {
            labels.push(VertexLabel::Tree { node: n.clone(), side: 0 });
            labels.push(VertexLabel::Tree { node: n.clone(), side: 1 });
        }
        labels
    }
}

/// The gadget of `t` cut to nodes of length at most `depth`. Edges that
/// would reach below the cut (`E_σ` for `|σ| = depth`, and `E_0` at depth 0
/// when the root has children) are left out.
pub fn tree_gadget(t: &TreeSpec, depth: usize) -> Hypergraph {
    use Anchor::*;
    let layout = Layout::new(t, depth);
    let a = Layout::anchor;
    let mut edges = vec![
        EdgeSpec::finite([a(A0), a(A1)]),
        EdgeSpec::finite([a(A1), a(S)]),
        EdgeSpec::finite([a(B0), a(B1)]),
        EdgeSpec::finite([a(B1), a(S)]),
    ];
    for sigma in &layout.nodes {
        edges.push(EdgeSpec::finite([layout.side(sigma, 0), layout.side(sigma, 1)]));
        let children = t.children(sigma);
        if children.is_empty() {
            edges.push(EdgeSpec::finite([layout.side(sigma, 1), a(S)]));
        } else if sigma.len() < depth {
            let tops = children.iter().map(|tau| layout.side(tau, 0));
            edges.push(EdgeSpec::finite(tops.chain([layout.side(sigma, 1)])));
        }
    }
    let roots = t.children(&[]);
    if depth > 0 || roots.is_empty() {
        let tops = roots.iter().map(|tau| layout.side(tau, 0));
        edges.push(EdgeSpec::finite(tops.chain([a(A0), a(B0)])));
    }
    Hypergraph::new(Universe::Window(layout.size()), Repr::SeqOfCodes, edges)
        .and_then(|h| h.with_labels(layout.labels()))
        .expect("gadget codes lie in the window")
}

/// The coloring of the depth-cut gadget that follows branch `branch`:
/// `s, a_0, b_0` blue, `a_1, b_1` red, and `σ_0` red, `σ_1` blue exactly for
/// nodes on the branch (the other nodes take the opposite colors). Red is 1,
/// blue is 0.
pub fn path_to_coloring(t: &TreeSpec, branch: usize, depth: usize) -> Result<Coloring, GadgetError> {
    let b = t.branches().get(branch).ok_or(GadgetError::BranchNotDesignated(branch))?;
    let layout = Layout::new(t, depth);
    let mut colors = vec![BLUE, RED, BLUE, RED, BLUE];
    for sigma in &layout.nodes {
        if b.on_path(sigma) || b.stem.starts_with(sigma) {
            colors.extend([RED, BLUE]);
        } else {
            colors.extend([BLUE, RED]);
        }
    }
    Ok(Coloring::finite(2, colors)?)
}

/// Reads a path of length `depth` off a proper 2-coloring of a tree gadget:
/// after recoloring so `s` is blue, take the least length-1 node with `σ_0`
/// red, then repeatedly the least child with `τ_0` red.
pub fn coloring_to_path(h: &Hypergraph, c: &Coloring, depth: usize) -> Result<Vec<Node>, GadgetError> {
    if c.k() != 2 {
        return Err(GadgetError::NotTwoColors(c.k()));
    }
    require(h, c, Mode::Proper)?;
    let flip = c.color_at(code(h, &VertexLabel::Anchor(Anchor::S))?)?;
    let labels = h.labels().ok_or(GadgetError::Unlabelled)?;
    let mut tops: Vec<(Node, VertexId)> = labels
        .iter()
        .enumerate()
        .filter_map(|(v, l)| match l {
            VertexLabel::Tree { node, side: 0 } => Some((node.clone(), v)),
            _ => None,
        })
        .collect();
    tops.sort();
    let mut path: Vec<Node> = Vec::new();
    let mut current: Node = Vec::new();
    while path.len() < depth {
        let mut next = None;
        for (tau, v) in &tops {
            let is_child = tau.len() == current.len() + 1 && tau.starts_with(&current);
            if is_child && c.color_at(*v)? ^ flip == RED {
                next = Some(tau.clone());
                break;
            }
        }
        let tau = next.ok_or_else(|| GadgetError::ExtractionStuck(current.clone()))?;
        path.push(tau.clone());
        current = tau;
    }
    Ok(path)
}

/// The leaf set `{shift(σ) ⌢ 0 : σ ∈ T}` of a transformed tree, where
/// `shift` adds one to every entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafSet {
    source: TreeSpec,
}

impl LeafSet {
    pub fn contains(&self, tau: &[usize]) -> bool {
        match tau.split_last() {
            Some((0, body)) => body.iter().all(|&x| x > 0) && self.source.contains(&unshift(body)),
            _ => false,
        }
    }

    /// Members of length at most `depth`, in (length, lexicographic) order.
    pub fn up_to(&self, depth: usize) -> Vec<Node> {
        if depth == 0 {
            return Vec::new();
        }
        let mut out: Vec<Node> = self
            .source
            .nodes_to_depth(depth - 1)
            .iter()
            .map(|s| {
                let mut tau = shift(s);
                tau.push(0);
                tau
            })
            .collect();
        out.sort_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
        out
    }
}

fn shift(sigma: &[usize]) -> Node {
    sigma.iter().map(|x| x + 1).collect()
}

fn unshift(sigma: &[usize]) -> Node {
    sigma.iter().map(|x| x - 1).collect()
}

/// `T̂ = {shift(σ), shift(σ) ⌢ 0 : σ ∈ T}` with its leaf set. Every node of
/// `T` becomes a non-leaf, so the leaves of `T̂` are known without search,
/// and the infinite paths of `T̂` are the shifts of those of `T`.
pub fn leaf_transform(t: &TreeSpec) -> (TreeSpec, LeafSet) {
    let mut nodes = BTreeSet::new();
    for sigma in t.finite_nodes() {
        let up = shift(sigma);
        let mut leaf = up.clone();
        leaf.push(0);
        nodes.insert(up);
        nodes.insert(leaf);
    }
    let branches = t
        .branches()
        .iter()
        .map(|b| {
            let mut decorations: BTreeSet<Node> = [vec![0]].into_iter().collect();
            for d in &b.decorations {
                let up = shift(d);
                let mut leaf = up.clone();
                leaf.push(0);
                decorations.insert(up);
                decorations.insert(leaf);
            }
            Branch { stem: shift(&b.stem), filler: b.filler + 1, decorations }
        })
        .collect();
    let hat = TreeSpec::new(nodes, branches).expect("shifted tree is prefix closed");
    (hat, LeafSet { source: t.clone() })
}
