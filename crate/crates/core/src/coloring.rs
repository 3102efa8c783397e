//! Finite and eventually periodic vertex colorings, and exact checks for
//! proper, strong and conflict-free colorings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{EdgeSpec, Hypergraph, VertexId};

pub type Color = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("color {color} is not below k = {k}")]
    ColorOutOfRange { color: Color, k: usize },
    #[error("vertex {0} is outside the domain of the coloring")]
    OutOfDomain(VertexId),
    #[error("edge has no support bound, so its members cannot be listed")]
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("edge {0} cannot be profiled: it has no support bound")]
    Unbounded(usize),
    #[error("edge {edge} reaches vertex {vertex}, outside the coloring's domain")]
    OutOfDomain { edge: usize, vertex: VertexId },
}

/// A map from vertices to `{0..k-1}` given by a finite prefix followed by a
/// repeating block. An empty block means the coloring is finite, with domain
/// `0..prefix.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    k: usize,
    prefix: Vec<Color>,
    period: Vec<Color>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: usize,
    prefix: Vec<Color>,
    #[serde(default)]
    period: Vec<Color>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = ColoringError;

    fn try_from(raw: RawColoring) -> Result<Self, ColoringError> {
        Coloring::new(raw.k, raw.prefix, raw.period)
    }
}

impl Coloring {
    pub fn new(k: usize, prefix: Vec<Color>, period: Vec<Color>) -> Result<Self, ColoringError> {
        if let Some(&color) = prefix.iter().chain(&period).find(|&&c| c >= k) {
            return Err(ColoringError::ColorOutOfRange { color, k });
        }
        Ok(Coloring { k, prefix, period })
    }

    pub fn finite(k: usize, colors: Vec<Color>) -> Result<Self, ColoringError> {
        Coloring::new(k, colors, Vec::new())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn prefix(&self) -> &[Color] {
        &self.prefix
    }

    pub fn period(&self) -> &[Color] {
        &self.period
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Number of colored vertices of a finite coloring.
    pub fn domain_len(&self) -> Option<usize> {
        self.is_finite().then_some(self.prefix.len())
    }

    pub fn color_at(&self, v: VertexId) -> Result<Color, ColoringError> {
        if let Some(&c) = self.prefix.get(v) {
            return Ok(c);
        }
        if self.period.is_empty() {
            return Err(ColoringError::OutOfDomain(v));
        }
        Ok(self.period[(v - self.prefix.len()) % self.period.len()])
    }

    /// Colors that occur in the repeating block, hence infinitely often.
    pub fn recurring_colors(&self) -> Vec<bool> {
        let mut seen = vec![false; self.k];
        for &c in &self.period {
            seen[c] = true;
        }
        seen
    }

    /// Swaps colors 0 and 1 (requires `k >= 2`).
    pub fn swap_first_two(&self) -> Coloring {
        let flip = |c: &Color| match *c {
            0 => 1,
            1 => 0,
            other => other,
        };
        Coloring {
            k: self.k,
            prefix: self.prefix.iter().map(flip).collect(),
            period: self.period.iter().map(flip).collect(),
        }
    }

    pub fn edge_profile(&self, e: &EdgeSpec) -> Result<EdgeColorProfile, ColoringError> {
        let mut counts: BTreeMap<Color, Multiplicity> = BTreeMap::new();
        let mut bump = |c: Color| {
            let slot = counts.entry(c).or_insert(Multiplicity::Finite(0));
            if let Multiplicity::Finite(n) = slot {
                *n += 1;
            }
        };
        match e {
            EdgeSpec::Finite(_) | EdgeSpec::CharFn(_) => {
                let members = e.members().ok_or(ColoringError::Unbounded)?;
                for v in members {
                    bump(self.color_at(v)?);
                }
            }
            EdgeSpec::TailFrom(j) => {
                if self.period.is_empty() {
                    return Err(ColoringError::OutOfDomain(self.prefix.len().max(*j)));
                }
                let recurring = self.recurring_colors();
                for &c in self.prefix.iter().skip(*j) {
                    if !recurring[c] {
                        bump(c);
                    }
                }
                for &c in &self.period {
                    counts.insert(c, Multiplicity::Infinite);
                }
            }
        }
        Ok(EdgeColorProfile { counts })
    }

    pub fn is_proper(&self, e: &EdgeSpec) -> Result<bool, ColoringError> {
        self.edge_profile(e).map(|p| p.is_proper())
    }

    pub fn is_strong(&self, e: &EdgeSpec) -> Result<bool, ColoringError> {
        self.edge_profile(e).map(|p| p.is_strong())
    }

    pub fn is_conflict_free(&self, e: &EdgeSpec) -> Result<bool, ColoringError> {
        self.edge_profile(e).map(|p| p.is_conflict_free())
    }

    pub fn satisfies(&self, e: &EdgeSpec, mode: Mode) -> Result<bool, ColoringError> {
        self.edge_profile(e).map(|p| p.satisfies(mode))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Multiplicity {
    Finite(usize),
    Infinite,
}

/// Per-color occurrence counts within one edge. Colors that do not occur
/// are absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColorProfile {
    counts: BTreeMap<Color, Multiplicity>,
}

impl EdgeColorProfile {
    pub fn count(&self, c: Color) -> Multiplicity {
        self.counts.get(&c).copied().unwrap_or(Multiplicity::Finite(0))
    }

    pub fn counts(&self) -> &BTreeMap<Color, Multiplicity> {
        &self.counts
    }

    fn at_most_one_vertex(&self) -> bool {
        let mut total = 0;
        for m in self.counts.values() {
            match m {
                Multiplicity::Finite(n) => total += n,
                Multiplicity::Infinite => return false,
            }
        }
        total <= 1
    }

    pub fn is_proper(&self) -> bool {
        self.at_most_one_vertex() || self.counts.len() >= 2
    }

    pub fn is_strong(&self) -> bool {
        self.counts.values().all(|m| *m == Multiplicity::Finite(1))
    }

    /// Empty edges have no uniquely colored vertex, so they are never
    /// conflict-free.
    pub fn is_conflict_free(&self) -> bool {
        self.counts.values().any(|m| *m == Multiplicity::Finite(1))
    }

    pub fn satisfies(&self, mode: Mode) -> bool {
        match mode {
            Mode::Proper => self.is_proper(),
            Mode::Strong => self.is_strong(),
            Mode::ConflictFree => self.is_conflict_free(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Proper,
    Strong,
    ConflictFree,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Proper, Mode::Strong, Mode::ConflictFree];

    /// The per-edge test on a multiset of colors given as a slice.
    pub fn accepts(&self, colors: &[Color]) -> bool {
        let mut counts: BTreeMap<Color, usize> = BTreeMap::new();
        for &c in colors {
            *counts.entry(c).or_default() += 1;
        }
        match self {
            Mode::Proper => colors.len() <= 1 || counts.len() >= 2,
            Mode::Strong => counts.values().all(|&n| n == 1),
            Mode::ConflictFree => counts.values().any(|&n| n == 1),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Proper => "proper",
            Mode::Strong => "strong",
            Mode::ConflictFree => "conflict_free",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "proper" => Ok(Mode::Proper),
            "strong" => Ok(Mode::Strong),
            "conflict_free" | "conflict-free" | "cf" => Ok(Mode::ConflictFree),
            other => Err(format!("unknown coloring mode `{other}`")),
        }
    }
}

/// Outcome of checking a whole hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessReport {
    Ok,
    /// The first edge, in edge order, that violates the mode.
    FailingEdge { index: usize },
}

impl WitnessReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, WitnessReport::Ok)
    }
}

pub fn verify(h: &Hypergraph, c: &Coloring, mode: Mode) -> Result<WitnessReport, VerifyError> {
    for (index, e) in h.edges().iter().enumerate() {
        let profile = c.edge_profile(e).map_err(|err| match err {
            ColoringError::OutOfDomain(vertex) => VerifyError::OutOfDomain { edge: index, vertex },
            _ => VerifyError::Unbounded(index),
        })?;
        if !profile.satisfies(mode) {
            return Ok(WitnessReport::FailingEdge { index });
        }
    }
    Ok(WitnessReport::Ok)
}
