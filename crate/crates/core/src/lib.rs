//! Colorings of hypergraphs with finite and infinite edges.
//!
//! * [`hypergraph`]: edges as finite sets, characteristic functions or tails,
//!   and the partial structures cut out of them.
//! * [`coloring`]: eventually periodic colorings and the proper, strong and
//!   conflict-free checks.
//! * [`solver`]: depth-first search through levels of partial colorings.
//! * [`conversions`]: changes of edge representation.
//! * [`gadgets`]: hypergraphs that encode ranges of injections and paths
//!   through trees in their colorings, with matching decoders.
//! * [`principles`]: eventually repeating tails and the stable pair coloring
//!   behind them.

pub mod coloring;
pub mod conversions;
pub mod gadgets;
pub mod hypergraph;
pub mod labels;
pub mod principles;
pub mod solver;

pub use coloring::{verify, Color, Coloring, Mode, WitnessReport};
pub use hypergraph::{CharTable, EdgeSpec, Hypergraph, Repr, Universe, VertexId};
pub use labels::{Anchor, VertexLabel};
pub use solver::{solve, SolveOutcome};
