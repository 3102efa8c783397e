//! Eventually repeating tails, and the route to it through a stable pair
//! coloring.
//!
//! For a coloring `f` of the naturals, an ERT bound is a `b` such that every
//! color occurring at some `x >= b` occurs again at another `y >= b`. For an
//! eventually periodic `f` the least bound is computed exactly.
//!
//! The pair coloring `g(a, b)` is 1 iff some color occurs exactly once in
//! `f` on `[a, b)`. A large 1-monochromatic set for `g` cannot exist (the
//! halving argument below), and a 0-monochromatic set starting at `x` marks
//! `x` as an ERT bound.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, Coloring, ColoringError};
use crate::hypergraph::EdgeSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrincipleError {
    #[error("coloring has an empty period, so it is not defined on every natural")]
    NotTotal,
    #[error("interval [{a}, {b}) is empty")]
    EmptyInterval { a: usize, b: usize },
    #[error("no {color}-monochromatic set of size {size} in [0, {window})")]
    WindowTooSmall { window: usize, size: usize, color: u8 },
    #[error("block must have {expected} increasing elements")]
    MalformedBlock { expected: usize },
    #[error("pair sets need at least two elements")]
    SizeTooSmall,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

fn total(f: &Coloring) -> Result<(), PrincipleError> {
    if f.is_finite() {
        Err(PrincipleError::NotTotal)
    } else {
        Ok(())
    }
}

/// Number of times each color occurs in the tail from `b`: `None` for
/// infinitely many.
fn tail_counts(f: &Coloring, b: usize) -> Vec<Option<usize>> {
    let recurring = f.recurring_colors();
    let mut counts: Vec<Option<usize>> = recurring.iter().map(|&r| if r { None } else { Some(0) }).collect();
    for &c in f.prefix().iter().skip(b) {
        if let Some(n) = counts[c].as_mut() {
            *n += 1;
        }
    }
    counts
}

fn is_ert_bound(f: &Coloring, b: usize) -> bool {
    tail_counts(f, b).iter().all(|n| *n != Some(1))
}

/// The least ERT bound of a total eventually periodic coloring.
pub fn ert_witness(f: &Coloring) -> Result<usize, PrincipleError> {
    total(f)?;
    Ok((0..=f.prefix().len()).find(|&b| is_ert_bound(f, b)).expect("the periodic part repeats"))
}

/// The least `b` past which every color occurs infinitely often: one past
/// the last prefix position holding a color absent from the period.
pub fn ect_witness(f: &Coloring) -> Result<usize, PrincipleError> {
    total(f)?;
    let recurring = f.recurring_colors();
    Ok(f.prefix().iter().rposition(|&c| !recurring[c]).map_or(0, |x| x + 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeRow {
    pub b: usize,
    /// Whether `f` is conflict-free on the tail edge `E_b`.
    pub tail_conflict_free: bool,
    /// Whether every color occurring from `b` on occurs at least twice.
    pub ert_bound: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeReport {
    pub rows: Vec<BridgeRow>,
    pub ert_witness: usize,
    pub all_agree: bool,
}

/// For each `b < window`, compares conflict-freeness of `f` on `E_b` with
/// `b` being an ERT bound. They always disagree in truth value: `b` is a
/// bound exactly when `E_b` has no uniquely occurring color.
pub fn cf_ert_bridge(f: &Coloring, window: usize) -> Result<BridgeReport, PrincipleError> {
    total(f)?;
    let rows: Vec<BridgeRow> = (0..window)
        .map(|b| {
            let tail_conflict_free = f.is_conflict_free(&EdgeSpec::TailFrom(b))?;
            let ert_bound = is_ert_bound(f, b);
            Ok(BridgeRow { b, tail_conflict_free, ert_bound, agrees: tail_conflict_free != ert_bound })
        })
        .collect::<Result<_, ColoringError>>()?;
    let all_agree = rows.iter().all(|r| r.agrees);
    Ok(BridgeReport { rows, ert_witness: ert_witness(f)?, all_agree })
}

/// `g(a, b)`: 1 iff some color occurs exactly once in `f` on `[a, b)`.
pub fn srt_g(f: &Coloring, a: usize, b: usize) -> Result<u8, PrincipleError> {
    if a >= b {
        return Err(PrincipleError::EmptyInterval { a, b });
    }
    let mut counts = vec![0usize; f.k()];
    for x in a..b {
        counts[f.color_at(x)?] += 1;
    }
    Ok(u8::from(counts.contains(&1)))
}

/// `g(a, x)` for `x` in `a+1..=end`, computed incrementally.
fn g_row(f: &Coloring, a: usize, end: usize) -> Result<Vec<u8>, PrincipleError> {
    let mut counts = vec![0usize; f.k()];
    let mut singles = 0usize;
    let mut row = Vec::with_capacity(end.saturating_sub(a));
    for x in a..end {
        let c = f.color_at(x)?;
        counts[c] += 1;
        match counts[c] {
            1 => singles += 1,
            2 => singles -= 1,
            _ => {}
        }
        row.push(u8::from(singles > 0));
    }
    Ok(row)
}

/// Number of `x` in `(a, horizon]` with `g(a, x) != g(a, x+1)`. At most `2k`
/// for a `k`-coloring: each color's count passes 1 once on the way up.
pub fn stability_bound_check(f: &Coloring, a: usize, horizon: usize) -> Result<usize, PrincipleError> {
    if horizon <= a {
        return Ok(0);
    }
    let row = g_row(f, a, horizon + 1)?;
    Ok(row.windows(2).filter(|w| w[0] != w[1]).count())
}

/// `g` on every pair of `[0, window)`.
fn g_table(f: &Coloring, window: usize) -> Result<Vec<Vec<u8>>, PrincipleError> {
    let mut table = vec![vec![0u8; window]; window];
    for a in 0..window {
        for (i, v) in g_row(f, a, window - 1)?.into_iter().enumerate() {
            table[a][a + 1 + i] = v;
        }
    }
    Ok(table)
}

struct CliqueSearch<'a> {
    table: &'a [Vec<u8>],
    color: u8,
    size: usize,
    min_last: usize,
    chosen: Vec<usize>,
}

impl CliqueSearch<'_> {
    /// Depth-first in increasing order, so the first hit is lexicographically
    /// least.
    fn extend(&mut self, candidates: &[usize]) -> bool {
        if self.chosen.len() == self.size {
            return self.chosen.last().is_some_and(|&x| x >= self.min_last);
        }
        let need = self.size - self.chosen.len();
        for (i, &x) in candidates.iter().enumerate() {
            if candidates.len() - i < need {
                return false;
            }
            if need == 1 && x < self.min_last {
                continue;
            }
            let next: Vec<usize> =
                candidates[i + 1..].iter().copied().filter(|&y| self.table[x][y] == self.color).collect();
            self.chosen.push(x);
            if self.extend(&next) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

fn mono_set_from(
    f: &Coloring,
    window: usize,
    size: usize,
    color: u8,
    min_last: usize,
) -> Result<Option<Vec<usize>>, PrincipleError> {
    if size < 2 {
        return Err(PrincipleError::SizeTooSmall);
    }
    let table = g_table(f, window)?;
    let mut search = CliqueSearch { table: &table, color, size, min_last, chosen: Vec::new() };
    let all: Vec<usize> = (0..window).collect();
    Ok(search.extend(&all).then_some(search.chosen))
}

/// The lexicographically first subset of `[0, window)` of the given size
/// on which `g` is constantly `color`, if any.
pub fn mono_set_search(f: &Coloring, window: usize, size: usize, color: u8) -> Result<Option<Vec<usize>>, PrincipleError> {
    mono_set_from(f, window, size, color, 0)
}

/// `3 * 2^(k-1)`, the size at which no set is 1-monochromatic for `g`.
pub fn refutation_size(k: usize) -> usize {
    3 << k.saturating_sub(1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalvingChain {
    /// `H_0 ⊃ H_1 ⊃ ...`, each block half the size of the previous one.
    pub blocks: Vec<Vec<usize>>,
    /// The color occurring exactly once on the span of each block but the
    /// last; it is absent from the next block's span.
    pub excluded: Vec<Color>,
    /// Endpoints of the last block; `g` is 0 on them.
    pub pair: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Halving {
    /// The halving ran down to three elements.
    Chain(HalvingChain),
    /// A block with more than three elements already has `g = 0` on its
    /// endpoints; `blocks` is the chain up to it.
    CounterExample { pair: (usize, usize), blocks: Vec<Vec<usize>> },
}

impl Halving {
    /// A pair from the input set on which `g` is 0.
    pub fn pair(&self) -> (usize, usize) {
        match self {
            Halving::Chain(c) => c.pair,
            Halving::CounterExample { pair, .. } => *pair,
        }
    }
}

/// The color occurring exactly once on `[a, b)`, with its position; the
/// least such color.
fn unique_color(f: &Coloring, a: usize, b: usize) -> Result<Option<(Color, usize)>, PrincipleError> {
    let mut seen: BTreeMap<Color, (usize, usize)> = BTreeMap::new();
    for x in a..b {
        let e = seen.entry(f.color_at(x)?).or_insert((0, x));
        e.0 += 1;
    }
    Ok(seen.into_iter().find(|(_, (n, _))| *n == 1).map(|(c, (_, x))| (c, x)))
}

/// Runs the halving argument against `h0`, a set of `3 * 2^(k-1)`
/// increasing naturals. Each round finds a color occurring once on the span
/// of the current block and keeps half the block on one side of it (the
/// left when both sides fit), so the span loses that color. With at most
/// `k` colors, three elements with a one-colored span remain.
pub fn halving_refute(f: &Coloring, h0: &[usize]) -> Result<Halving, PrincipleError> {
    let n = refutation_size(f.k());
    if h0.len() != n || h0.windows(2).any(|w| w[0] >= w[1]) {
        return Err(PrincipleError::MalformedBlock { expected: n });
    }
    let mut blocks = vec![h0.to_vec()];
    let mut excluded = Vec::new();
    loop {
        let block = blocks.last().expect("chain starts with h0");
        let (first, last) = (block[0], block[block.len() - 1]);
        let found = unique_color(f, first, last)?;
        match found {
            None if block.len() == 3 => {
                return Ok(Halving::Chain(HalvingChain { blocks, excluded, pair: (first, last) }))
            }
            None => return Ok(Halving::CounterExample { pair: (first, last), blocks }),
            Some((color, pos)) => {
                // `pos` lies in the interval [block[m], block[m+1]).
                let m = block.partition_point(|&x| x <= pos) - 1;
                let half = block.len() / 2;
                let next = if m + 1 >= half {
                    block[..half].to_vec()
                } else {
                    block[m + 1..m + 1 + half].to_vec()
                };
                if half < 3 {
                    // Only reachable if `f` used more than `k` colors.
                    return Err(PrincipleError::MalformedBlock { expected: n });
                }
                excluded.push(color);
                blocks.push(next);
            }
        }
    }
}

/// An ERT bound read off a 0-monochromatic set for `g` of size
/// `3 * 2^(k-1)` inside `[0, window)`: its least element. The set must end
/// at or past the prefix, so that the positions after it are periodic.
pub fn ert_via_srt(f: &Coloring, window: usize) -> Result<usize, PrincipleError> {
    total(f)?;
    let size = refutation_size(f.k());
    mono_set_from(f, window, size, 0, f.prefix().len())?
        .map(|set| set[0])
        .ok_or(PrincipleError::WindowTooSmall { window, size, color: 0 })
}
