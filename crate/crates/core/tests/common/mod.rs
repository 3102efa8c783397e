//! Oracles and corpus generators shared by the integration tests. Nothing
//! here calls into the library's search or decoding code.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use hypercolor::gadgets::Injection;
use hypercolor::{Coloring, Mode};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The mode condition on the colors of one edge, counted directly.
pub fn edge_ok(colors: &[usize], mode: Mode) -> bool {
    let count = |c: usize| colors.iter().filter(|&&x| x == c).count();
    match mode {
        Mode::Proper => colors.len() <= 1 || colors.iter().any(|&c| c != colors[0]),
        Mode::Strong => colors.iter().all(|&c| count(c) == 1),
        Mode::ConflictFree => colors.iter().any(|&c| count(c) == 1),
    }
}

pub fn coloring_ok(colors: &[usize], edges: &[Vec<usize>], mode: Mode) -> bool {
    let mut cs = Vec::new();
    edges.iter().all(|e| {
        cs.clear();
        cs.extend(e.iter().map(|&v| colors[v]));
        edge_ok(&cs, mode)
    })
}

/// Every coloring of `0..n` with `k` colors satisfying `mode` on all
/// edges, in lexicographic order, by plain enumeration of all `k^n`.
pub fn brute_colorings(n: usize, edges: &[Vec<usize>], k: usize, mode: Mode) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut colors = vec![0; n];
    loop {
        if coloring_ok(&colors, edges, mode) {
            out.push(colors.clone());
        }
        // odometer, last position fastest
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
        }
    }
}

pub fn brute_count(n: usize, edges: &[Vec<usize>], k: usize, mode: Mode) -> (usize, Option<Vec<usize>>) {
    let all = brute_colorings(n, edges, k, mode);
    (all.len(), all.into_iter().next())
}

/// A random injection with domain at most `max_domain` and values at most
/// `max_value`.
pub fn random_injection(r: &mut ChaCha8Rng, max_domain: usize, max_value: usize) -> Injection {
    let d = r.gen_range(0..=max_domain.min(max_value + 1));
    let mut pool: Vec<usize> = (0..=max_value).collect();
    pool.shuffle(r);
    pool.truncate(d);
    Injection::new(pool).expect("distinct values")
}

/// Two random injections with disjoint ranges.
pub fn random_disjoint_pair(r: &mut ChaCha8Rng, max_domain: usize, max_value: usize) -> (Injection, Injection) {
    let mut pool: Vec<usize> = (0..=max_value).collect();
    pool.shuffle(r);
    let df = r.gen_range(0..=max_domain.min(pool.len()));
    let dg = r.gen_range(0..=max_domain.min(pool.len() - df));
    let f = pool[..df].to_vec();
    let g = pool[df..df + dg].to_vec();
    (Injection::new(f).unwrap(), Injection::new(g).unwrap())
}

/// Every injection with domain at most `max_domain` and values below
/// `values`.
pub fn all_injections(max_domain: usize, values: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_domain {
        let mut next = Vec::new();
        for f in &layer {
            for v in 0..values {
                if !f.contains(&v) {
                    let mut g: Vec<usize> = f.clone();
                    g.push(v);
                    next.push(g);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Every finite tree (root included) with at most `max_nodes` non-root
/// nodes whose children are labelled from `0..alphabet`. With `contiguous`
/// a node's children are exactly `0..c` for some `c`, which gives every
/// ordered tree shape once.
pub fn all_trees(max_nodes: usize, alphabet: usize, contiguous: bool) -> Vec<BTreeSet<Vec<usize>>> {
    fn grow(
        queue: &mut VecDeque<Vec<usize>>,
        chosen: &mut BTreeSet<Vec<usize>>,
        budget: usize,
        alphabet: usize,
        contiguous: bool,
        out: &mut Vec<BTreeSet<Vec<usize>>>,
    ) {
        let Some(next) = queue.pop_front() else {
            out.push(chosen.clone());
            return;
        };
        let (&last, parent) = next.split_last().expect("candidates are nonempty");
        let sibling_missing = contiguous && last > 0 && {
            let mut s = parent.to_vec();
            s.push(last - 1);
            !chosen.contains(&s)
        };
        // leave it out
        grow(queue, chosen, budget, alphabet, contiguous, out);
        if budget > 0 && !sibling_missing {
            chosen.insert(next.clone());
            let added = alphabet;
            for a in 0..alphabet {
                let mut c = next.clone();
                c.push(a);
                queue.push_back(c);
            }
            grow(queue, chosen, budget - 1, alphabet, contiguous, out);
            for _ in 0..added {
                queue.pop_back();
            }
            chosen.remove(&next);
        }
        queue.push_front(next);
    }
    let mut out = Vec::new();
    let mut queue: VecDeque<Vec<usize>> = (0..alphabet).map(|a| vec![a]).collect();
    let mut chosen: BTreeSet<Vec<usize>> = [Vec::new()].into_iter().collect();
    grow(&mut queue, &mut chosen, max_nodes, alphabet, contiguous, &mut out);
    out
}

/// Every sequence of length `len` over `0..k`.
fn sequences(len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..k).map(move |c| {
                    let mut s = s.clone();
                    s.push(c);
                    s
                })
            })
            .collect();
    }
    out
}

/// Every eventually periodic `k`-coloring given by a prefix of length at
/// most `max_prefix` and a nonempty period of length at most `max_period`.
pub fn periodic_corpus(max_prefix: usize, max_period: usize, k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let periods: Vec<Vec<usize>> = (1..=max_period).flat_map(|q| sequences(q, k)).collect();
    let mut out = Vec::new();
    for p in 0..=max_prefix {
        for prefix in sequences(p, k) {
            for period in &periods {
                out.push((prefix.clone(), period.clone()));
            }
        }
    }
    out
}

/// Colors of positions `0..n` of an eventually periodic sequence.
pub fn unroll(prefix: &[usize], period: &[usize], n: usize) -> Vec<usize> {
    (0..n)
        .map(|x| if x < prefix.len() { prefix[x] } else { period[(x - prefix.len()) % period.len()] })
        .collect()
}

/// Occurrences of each color in `seq`; colors are below 16.
fn tally(seq: &[usize]) -> [usize; 16] {
    let mut counts = [0; 16];
    for &c in seq {
        counts[c] += 1;
    }
    counts
}

/// An eventually periodic sequence written out far enough to answer tail
/// questions for every start up to `max_b`.
pub struct Unrolled {
    seq: Vec<usize>,
    prefix: usize,
    period: usize,
}

impl Unrolled {
    pub fn new(prefix: &[usize], period: &[usize], max_b: usize) -> Self {
        let len = max_b.max(prefix.len()) + 2 * period.len();
        Unrolled { seq: unroll(prefix, period, len), prefix: prefix.len(), period: period.len() }
    }

    /// Positions `b..` up to two whole periods past `max(b, |prefix|)`, where
    /// every recurring color already shows twice.
    fn tail(&self, b: usize) -> &[usize] {
        &self.seq[b..b.max(self.prefix) + 2 * self.period]
    }

    /// Whether some color occurs exactly once at positions `>= b`.
    pub fn tail_has_unique(&self, b: usize) -> bool {
        tally(self.tail(b)).contains(&1)
    }

    /// Whether every `x >= b` has some `y >= b`, `y != x`, of the same
    /// color.
    pub fn is_ert_bound(&self, b: usize) -> bool {
        let tail = self.tail(b);
        let counts = tally(tail);
        tail.iter().all(|&c| counts[c] >= 2)
    }

    /// Least ERT bound, searching `b <= |prefix|`.
    pub fn least_ert_bound(&self) -> usize {
        (0..=self.prefix).find(|&b| self.is_ert_bound(b)).expect("|prefix| is a bound")
    }
}

/// `g(a, b)` by direct counting.
pub fn pair_color(seq: &[usize], a: usize, b: usize) -> u8 {
    u8::from(tally(&seq[a..b]).contains(&1))
}

pub fn coloring(k: usize, prefix: &[usize], period: &[usize]) -> Coloring {
    Coloring::new(k, prefix.to_vec(), period.to_vec()).expect("colors below k")
}

/// A random increasing subset of `0..window` of the given size.
pub fn random_subset(r: &mut ChaCha8Rng, window: usize, size: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..window).collect();
    all.shuffle(r);
    all.truncate(size);
    all.sort_unstable();
    all
}
