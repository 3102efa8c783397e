use std::fmt;

use serde::{Deserialize, Serialize};

/// Symbolic name of a gadget vertex.
///
/// Gadgets number their vertices `0..n` and keep a table mapping each
/// integer code back to the label it stands for, so decoders can work on
/// serialized instances.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexLabel {
    /// One of the five fixed vertices `a_0, a_1, b_0, b_1, s` of the tree gadget.
    Anchor(Anchor),
    /// `σ_side` for a nonempty tree node `σ`.
    Tree { node: Vec<usize>, side: u8 },
    /// Backbone vertex `b_m` of the parity gadget.
    Backbone(usize),
    /// Chain vertex `v_{row,col}` of the parity gadget.
    Chain { row: usize, col: usize },
    /// `u_i` of the triple separation gadget.
    Upper(usize),
    /// `v_i` of the separation gadgets.
    Lower(usize),
    /// Clique vertex added when lifting a 2-color gadget to `k` colors.
    Fresh(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Anchor {
    A0,
    A1,
    B0,
    B1,
    S,
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Anchor(a) => {
                let name = match a {
                    Anchor::A0 => "a_0",
                    Anchor::A1 => "a_1",
                    Anchor::B0 => "b_0",
                    Anchor::B1 => "b_1",
                    Anchor::S => "s",
                };
                f.write_str(name)
            }
            VertexLabel::Tree { node, side } => {
                write!(f, "<")?;
                for (i, x) in node.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ">_{side}")
            }
            VertexLabel::Backbone(m) => write!(f, "b_{m}"),
            VertexLabel::Chain { row, col } => write!(f, "v_{row},{col}"),
            VertexLabel::Upper(i) => write!(f, "u_{i}"),
            VertexLabel::Lower(i) => write!(f, "v_{i}"),
            VertexLabel::Fresh(i) => write!(f, "w_{i}"),
        }
    }
}
