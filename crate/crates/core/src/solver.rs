//! Level-by-level search through the tree of partial colorings.
//!
//! A node at level `n` is a color sequence that colors the `n`-th finite
//! approximation of the hypergraph in the requested mode. Two geometries
//! are supported:
//!
//! * restriction levels, for finite edges: level `n` colors vertices
//!   `0..=m_n` under the first `n` edges (see
//!   [`Hypergraph::restriction_bounds`]);
//! * square truncation, for strong colorings of characteristic-function
//!   edges: level `n` colors vertices `0..n` under the first `n` edges
//!   restricted to `0..n`.
//!
//! The search is depth-first with smallest-color-first branching, so results
//! are reproducible.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, Coloring, Mode};
use crate::hypergraph::{Hypergraph, HypergraphError, Repr, Universe, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("{mode} search is not available for the {repr:?} representation")]
    RepresentationMismatch { mode: Mode, repr: Repr },
    #[error("at least one color is needed")]
    NoColors,
    #[error("exhaustive enumeration needs every edge to have listable members")]
    NotFinite,
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringTreeNode {
    pub sigma: Vec<Color>,
    pub level: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveOutcome {
    /// A coloring of every vertex in the window satisfying the mode on
    /// every edge.
    Colored { coloring: Coloring },
    /// Level `level` has no node: every sequence of that level's length
    /// fails. `level` is the least such level and `explored` counts the
    /// partial assignments visited before the search gave up.
    Uncolorable { level: usize, explored: u64 },
    /// Every level up to `level` has a node, but edges remain beyond it.
    /// `partial` is the first node found at that level.
    DepthExhausted { level: usize, partial: Coloring },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Geometry {
    Restriction,
    Square,
}

/// Geometry used for a given representation and mode, or an error if the
/// pair is unsupported.
pub fn geometry_for(h: &Hypergraph, mode: Mode) -> Result<Geometry, SolveError> {
    match (h.repr(), mode) {
        (Repr::SetOfCodes | Repr::SeqOfCodes, _) => Ok(Geometry::Restriction),
        (Repr::SeqOfCharFns, Mode::Strong) => Ok(Geometry::Square),
        (repr, mode) => Err(SolveError::RepresentationMismatch { mode, repr }),
    }
}

/// Lengths per level and the vertex sets to test once each position is
/// assigned.
struct Plan {
    lens: Vec<usize>,
    checks: Vec<Vec<Vec<VertexId>>>,
}

impl Plan {
    fn build(h: &Hypergraph, geometry: Geometry, levels: usize) -> Result<Plan, SolveError> {
        match geometry {
            Geometry::Restriction => {
                let bounds = h.restriction_bounds(levels)?;
                let lens: Vec<usize> = bounds.iter().map(|m| m + 1).collect();
                let mut checks = vec![Vec::new(); lens[levels]];
                for n in 1..=levels.min(h.edges().len()) {
                    let members = h.edges()[n - 1].members().ok_or(HypergraphError::NonFiniteEdge(n - 1))?;
                    let first_new = lens[n - 1];
                    let at = members.last().map_or(first_new, |&top| top.max(first_new));
                    checks[at].push(members);
                }
                Ok(Plan { lens, checks })
            }
            Geometry::Square => {
                let lens: Vec<usize> = (0..=levels).collect();
                let edges = h.edges();
                let mut checks = vec![Vec::new(); levels];
                for (p, slot) in checks.iter_mut().enumerate() {
                    for (i, e) in edges.iter().enumerate().take(p + 1) {
                        if i == p || e.contains(p) {
                            slot.push((0..=p).filter(|&v| e.contains(v)).collect());
                        }
                    }
                }
                Ok(Plan { lens, checks })
            }
        }
    }

    /// One level covering the whole window; every edge is tested at its
    /// largest vertex. The flag reports whether some edge is empty.
    fn exhaustive(h: &Hypergraph) -> Result<(Plan, bool), SolveError> {
        let window = h.finite_extent().ok_or(SolveError::NotFinite)?;
        let mut checks = vec![Vec::new(); window];
        let mut has_empty = false;
        for e in h.edges() {
            let members = e.members().ok_or(SolveError::NotFinite)?;
            match members.last() {
                Some(&top) => checks[top].push(members),
                None => has_empty = true,
            }
        }
        Ok((Plan { lens: vec![window], checks }, has_empty))
    }
}

struct Search<'a> {
    k: usize,
    mode: Mode,
    plan: &'a Plan,
    sigma: Vec<Color>,
    deepest_level: Option<usize>,
    explored: u64,
    scratch: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(k: usize, mode: Mode, plan: &'a Plan) -> Self {
        Search { k, mode, plan, sigma: Vec::new(), deepest_level: None, explored: 0, scratch: vec![0; k] }
    }

    fn passes(&mut self, members: &[VertexId]) -> bool {
        for c in self.scratch.iter_mut() {
            *c = 0;
        }
        for &v in members {
            self.scratch[self.sigma[v]] += 1;
        }
        let mut distinct = 0;
        let mut unique = false;
        let mut repeated = false;
        for &n in &self.scratch {
            if n > 0 {
                distinct += 1;
            }
            unique |= n == 1;
            repeated |= n > 1;
        }
        match self.mode {
            Mode::Proper => members.len() <= 1 || distinct >= 2,
            Mode::Strong => !repeated,
            Mode::ConflictFree => unique,
        }
    }

    fn note_levels(&mut self) {
        let len = self.sigma.len();
        for (n, &l) in self.plan.lens.iter().enumerate() {
            if l == len && self.deepest_level.is_none_or(|d| d < n) {
                self.deepest_level = Some(n);
            }
        }
    }

    /// Visits every sequence of full length that passes all checks, in
    /// lexicographic order, until `visit` breaks.
    fn run<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Color]) -> ControlFlow<()>,
    {
        match self.descend(visit) {
            Flow::Stop => ControlFlow::Break(()),
            Flow::Done { .. } => ControlFlow::Continue(()),
        }
    }

    /// Depth-first search with conflict-directed backjumping: when a subtree
    /// fails for reasons that do not involve the current position, the
    /// remaining colors there are skipped. Only subtrees without a full
    /// sequence are skipped, and every shorter level length on the current
    /// path has already been reached, so the visiting order and the deepest
    /// level are those of plain backtracking.
    fn descend<F>(&mut self, visit: &mut F) -> Flow
    where
        F: FnMut(&[Color]) -> ControlFlow<()>,
    {
        self.note_levels();
        let target = *self.plan.lens.last().expect("plan has a level");
        let p = self.sigma.len();
        if p == target {
            return match visit(&self.sigma) {
                ControlFlow::Break(()) => Flow::Stop,
                ControlFlow::Continue(()) => Flow::Done { blame: None },
            };
        }
        let plan = self.plan;
        let mut blame = Some(BTreeSet::new());
        for color in 0..self.k {
            self.explored += 1;
            self.sigma.push(color);
            let failed = plan.checks[p].iter().find(|members| !self.passes(members));
            let below = match failed {
                Some(members) => Some(members.iter().copied().collect::<BTreeSet<_>>()),
                None => match self.descend(visit) {
                    Flow::Stop => return Flow::Stop,
                    Flow::Done { blame } => blame,
                },
            };
            self.sigma.pop();
            match below {
                Some(mut culprits) => {
                    if !culprits.remove(&p) {
                        // Every color at `p` fails the same way.
                        return Flow::Done { blame: Some(culprits) };
                    }
                    if let Some(b) = blame.as_mut() {
                        b.extend(culprits);
                    }
                }
                None => blame = None,
            }
        }
        Flow::Done { blame }
    }
}

enum Flow {
    /// The visitor asked to stop.
    Stop,
    /// The subtree is finished. `blame` lists the earlier positions whose
    /// colors caused every failure in it, or is `None` when the subtree
    /// produced a sequence.
    Done { blame: Option<BTreeSet<VertexId>> },
}

fn search_levels(h: &Hypergraph, mode: Mode, max_level: usize) -> Result<(Geometry, usize, bool), SolveError> {
    let geometry = geometry_for(h, mode)?;
    let edges = h.edges();
    let cover = match geometry {
        Geometry::Restriction => Some(edges.len()),
        Geometry::Square => edges
            .iter()
            .map(|e| e.members().map(|m| m.last().map_or(0, |v| v + 1)))
            .collect::<Option<Vec<_>>>()
            .map(|tops| tops.into_iter().max().unwrap_or(0).max(edges.len())),
    };
    Ok(match cover {
        Some(c) if c <= max_level => (geometry, c, true),
        _ => (geometry, max_level, false),
    })
}

/// All nodes of the coloring tree at level `n`, in lexicographic order.
pub fn level_nodes(h: &Hypergraph, k: usize, mode: Mode, n: usize) -> Result<Vec<ColoringTreeNode>, SolveError> {
    let geometry = geometry_for(h, mode)?;
    let plan = Plan::build(h, geometry, n)?;
    let mut search = Search::new(k, mode, &plan);
    let mut nodes = Vec::new();
    let _ = search.run(&mut |sigma| {
        nodes.push(ColoringTreeNode { sigma: sigma.to_vec(), level: n });
        ControlFlow::Continue(())
    });
    Ok(nodes)
}

fn fit_to_window(h: &Hypergraph, mut sigma: Vec<Color>) -> Vec<Color> {
    if let Universe::Window(n) = h.universe() {
        sigma.resize(n, 0);
    }
    sigma
}

pub fn solve(h: &Hypergraph, k: usize, mode: Mode, max_level: usize) -> Result<SolveOutcome, SolveError> {
    if k == 0 {
        return Err(SolveError::NoColors);
    }
    let (geometry, levels, complete) = search_levels(h, mode, max_level)?;
    let plan = Plan::build(h, geometry, levels)?;
    let mut search = Search::new(k, mode, &plan);
    let mut found = None;
    let _ = search.run(&mut |sigma| {
        found = Some(sigma.to_vec());
        ControlFlow::Break(())
    });
    Ok(match found {
        Some(sigma) if complete => {
            let coloring = Coloring::finite(k, fit_to_window(h, sigma)).expect("colors below k");
            SolveOutcome::Colored { coloring }
        }
        Some(sigma) => SolveOutcome::DepthExhausted {
            level: levels,
            partial: Coloring::finite(k, sigma).expect("colors below k"),
        },
        None => SolveOutcome::Uncolorable {
            level: search.deepest_level.map_or(0, |d| d + 1),
            explored: search.explored,
        },
    })
}

/// Every `k`-coloring of a finite hypergraph satisfying `mode` on all
/// edges, in lexicographic order. The window is the universe window, or
/// `1 + max vertex` over the naturals.
pub fn all_colorings(h: &Hypergraph, k: usize, mode: Mode) -> Result<Vec<Coloring>, SolveError> {
    let (plan, has_empty) = Plan::exhaustive(h)?;
    let mut out = Vec::new();
    if has_empty && !mode.accepts(&[]) {
        return Ok(out);
    }
    let mut search = Search::new(k, mode, &plan);
    let _ = search.run(&mut |sigma| {
        out.push(Coloring::finite(k, sigma.to_vec()).expect("colors below k"));
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// First coloring of [`all_colorings`], without enumerating the rest.
pub fn first_coloring(h: &Hypergraph, k: usize, mode: Mode) -> Result<Option<Coloring>, SolveError> {
    let (plan, has_empty) = Plan::exhaustive(h)?;
    if has_empty && !mode.accepts(&[]) {
        return Ok(None);
    }
    let mut search = Search::new(k, mode, &plan);
    let mut found = None;
    let _ = search.run(&mut |sigma| {
        found = Some(Coloring::finite(k, sigma.to_vec()).expect("colors below k"));
        ControlFlow::Break(())
    });
    Ok(found)
}
