//! # `hypercolor`
//!
//! Generates gadget hypergraphs, searches for and checks colorings, decodes
//! gadget colorings and evaluates the tail principles. Every command prints
//! one JSON report on stdout; diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 a negative answer (uncolorable, failing edge),
//! 2 search ran out of room (depth or window), 3 bad input or usage.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use hypercolor::conversions::charfns_to_codes;
use hypercolor::gadgets::{
    coloring_to_path, edge_set, k_extension, matryoshka, pair_separation_gadget, pair_window, parity_decode,
    parity_gadget, range_charfn_decode, range_charfn_gadget, range_edge_decode, range_edge_gadget,
    separation_decode, tree_gadget, triple_separation_gadget, triple_window, Branch, Injection,
    ParityWindow, Separation, TreeSpec,
};
use hypercolor::principles::{
    cf_ert_bridge, ect_witness, ert_via_srt, ert_witness, halving_refute, Halving, mono_set_search, refutation_size,
    PrincipleError,
};
use hypercolor::solver::solve;
use hypercolor::{verify, Coloring, Hypergraph, Mode, SolveOutcome, WitnessReport};

#[derive(Parser)]
#[command(name = "hypercolor", version, about = "Hypergraph coloring workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a gadget hypergraph.
    Gen {
        gadget: Gadget,
        #[command(flatten)]
        params: GadgetParams,
        /// Lift to this many colors by adding a joined clique.
        #[arg(long)]
        k: Option<usize>,
        /// Write the hypergraph here and print a report; otherwise print
        /// the hypergraph itself.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a coloring level by level.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        #[arg(long, default_value_t = 64)]
        max_level: usize,
    },
    /// Check a coloring against every edge.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// A coloring, or a solve report holding one.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
    },
    /// Read the encoded property back from a gadget (and a coloring).
    Decode {
        gadget: Gadget,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[command(flatten)]
        params: GadgetParams,
        /// Value to test (range-edges, range-charfns).
        #[arg(long)]
        query: Option<usize>,
    },
    /// Tail principles on an eventually periodic coloring.
    Principles {
        which: Principle,
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Inline prefix, comma separated.
        #[arg(long)]
        prefix: Option<String>,
        /// Inline period, comma separated.
        #[arg(long)]
        period: Option<String>,
        /// Colors for an inline coloring; defaults to one more than the
        /// largest color used.
        #[arg(long)]
        colors: Option<usize>,
        #[arg(long, default_value_t = 12)]
        window: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Gadget {
    RangeEdges,
    RangeCharfns,
    Parity,
    TripleSep,
    PairSep,
    Tree,
    Matryoshka,
}

#[derive(Clone, Copy, ValueEnum)]
enum Principle {
    Ert,
    Ect,
    Bridge,
    SrtDemo,
}

#[derive(clap::Args)]
struct GadgetParams {
    /// Injection values, comma separated.
    #[arg(long)]
    inj: Option<String>,
    /// Injection as a JSON list.
    #[arg(long)]
    inj_file: Option<PathBuf>,
    /// Second injection for the separation gadgets.
    #[arg(long)]
    other: Option<String>,
    #[arg(long)]
    other_file: Option<PathBuf>,
    /// Tree nodes, `;` between nodes and `,` inside a node.
    #[arg(long)]
    nodes: Option<String>,
    /// Stem of a comb branch; repeatable.
    #[arg(long)]
    branch: Vec<String>,
    /// Tree as JSON.
    #[arg(long)]
    tree_file: Option<PathBuf>,
    /// Window size: tail count, separation index bound, or parity rows.
    #[arg(long)]
    window: Option<usize>,
    /// Edge count for range-charfns.
    #[arg(long)]
    edges: Option<usize>,
    /// Cut depth for trees.
    #[arg(long)]
    depth: Option<usize>,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

fn parse_list(s: &str) -> anyhow::Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().with_context(|| format!("`{t}` is not a natural number")))
        .collect()
}

#[derive(Serialize)]
struct RunReport<T: Serialize> {
    command: Vec<String>,
    inputs: BTreeMap<String, String>,
    outcome: T,
    wall_time_ms: f64,
}

struct Run {
    started: Instant,
    inputs: BTreeMap<String, String>,
}

impl Run {
    fn read(&mut self, path: &Path) -> anyhow::Result<String> {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.inputs.insert(path.display().to_string(), hex::encode(Sha256::digest(&bytes)));
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
    }

    fn json<T: serde::de::DeserializeOwned>(&mut self, path: &Path) -> anyhow::Result<T> {
        let text = self.read(path)?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    fn hypergraph(&mut self, path: &Path) -> anyhow::Result<Hypergraph> {
        self.json(path)
    }

    /// A bare coloring, or the coloring inside a solve report.
    fn coloring(&mut self, path: &Path) -> anyhow::Result<Coloring> {
        let value: Value = self.json(path)?;
        let value = match value.pointer("/outcome/colored/coloring") {
            Some(inner) => inner.clone(),
            None => value,
        };
        serde_json::from_value(value).with_context(|| format!("{} holds no coloring", path.display()))
    }

    fn inline_or_file(
        &mut self,
        name: &str,
        inline: &Option<String>,
        file: &Option<PathBuf>,
    ) -> anyhow::Result<Option<Injection>> {
        let values = match (inline, file) {
            (Some(s), Some(_)) => {
                eprintln!("warning: both --{name} and --{name}-file given; using --{name}");
                parse_list(s)?
            }
            (Some(s), None) => parse_list(s)?,
            (None, Some(path)) => self.json(path)?,
            (None, None) => return Ok(None),
        };
        Ok(Some(Injection::new(values)?))
    }

    fn injection(&mut self, p: &GadgetParams) -> anyhow::Result<Injection> {
        self.inline_or_file("inj", &p.inj, &p.inj_file)?.ok_or_else(|| anyhow!("--inj or --inj-file is required"))
    }

    fn other(&mut self, p: &GadgetParams) -> anyhow::Result<Injection> {
        self.inline_or_file("other", &p.other, &p.other_file)?
            .ok_or_else(|| anyhow!("--other or --other-file is required"))
    }

    fn tree(&mut self, p: &GadgetParams) -> anyhow::Result<TreeSpec> {
        let inline = p.nodes.is_some() || !p.branch.is_empty();
        if inline {
            if p.tree_file.is_some() {
                eprintln!("warning: both inline tree flags and --tree-file given; using the inline tree");
            }
            let nodes = p
                .nodes
                .as_deref()
                .unwrap_or("")
                .split(';')
                .filter(|n| !n.trim().is_empty())
                .map(parse_list)
                .collect::<anyhow::Result<Vec<_>>>()?;
            let stems = p.branch.iter().map(|s| parse_list(s)).collect::<anyhow::Result<Vec<_>>>()?;
            let finite = TreeSpec::closure(nodes.into_iter().chain(stems.iter().cloned()));
            let branches = stems.into_iter().map(Branch::comb).collect();
            return Ok(TreeSpec::new(finite.finite_nodes().iter().cloned(), branches)?);
        }
        match &p.tree_file {
            Some(path) => self.json(path),
            None => bail!("a tree needs --nodes/--branch or --tree-file"),
        }
    }

    fn finish<T: Serialize>(self, outcome: T) -> anyhow::Result<()> {
        let report = RunReport {
            command: std::env::args().skip(1).collect(),
            inputs: self.inputs,
            outcome,
            wall_time_ms: self.started.elapsed().as_secs_f64() * 1e3,
        };
        println!("{}", serde_json::to_string(&report)?);
        Ok(())
    }
}

fn default_depth(t: &TreeSpec) -> usize {
    t.finite_nodes().iter().map(Vec::len).max().unwrap_or(0) + 1
}

fn generate(run: &mut Run, gadget: Gadget, p: &GadgetParams) -> anyhow::Result<Hypergraph> {
    Ok(match gadget {
        Gadget::RangeEdges => range_edge_gadget(&run.injection(p)?),
        Gadget::RangeCharfns => {
            let f = run.injection(p)?;
            let edges = p.edges.unwrap_or_else(|| f.max_value().map_or(0, |m| m + 1));
            range_charfn_gadget(&f, edges)
        }
        Gadget::Parity => {
            let f = run.injection(p)?;
            let rows = p.window.unwrap_or_else(|| f.max_value().map_or(0, |m| m + 1));
            parity_gadget(&f, &ParityWindow::covering(&f, rows))?
        }
        Gadget::TripleSep => {
            let (f, g) = (run.injection(p)?, run.other(p)?);
            triple_separation_gadget(&f, &g, p.window.unwrap_or_else(|| triple_window(&f, &g)))?
        }
        Gadget::PairSep => {
            let (f, g) = (run.injection(p)?, run.other(p)?);
            pair_separation_gadget(&f, &g, p.window.unwrap_or_else(|| pair_window(&f, &g)))?
        }
        Gadget::Tree => {
            let t = run.tree(p)?;
            tree_gadget(&t, p.depth.unwrap_or_else(|| default_depth(&t)))
        }
        Gadget::Matryoshka => matryoshka(p.window.ok_or_else(|| anyhow!("matryoshka needs --window"))?),
    })
}

#[derive(Serialize)]
struct Generated {
    written: String,
    vertices: Option<usize>,
    edges: usize,
}

#[derive(Serialize)]
struct SrtDemo {
    size: usize,
    one_monochromatic: Option<Vec<usize>>,
    halving: Halving,
    ert_bound: usize,
}

/// Exit code of a run that reached a report.
type Code = u8;

fn run(cli: Cli) -> anyhow::Result<Code> {
    let mut run = Run { started: Instant::now(), inputs: BTreeMap::new() };
    match cli.command {
        Command::Gen { gadget, params, k, out } => {
            let mut h = generate(&mut run, gadget, &params)?;
            if let Some(k) = k {
                h = k_extension(&h, k)?;
            }
            match out {
                Some(path) => {
                    fs::write(&path, serde_json::to_string(&h)?).with_context(|| format!("writing {}", path.display()))?;
                    let written = path.display().to_string();
                    run.finish(Generated { written, vertices: h.window(), edges: h.edges().len() })?;
                }
                None => println!("{}", serde_json::to_string(&h)?),
            }
            Ok(0)
        }
        Command::Solve { input, k, mode, max_level } => {
            let h = run.hypergraph(&input)?;
            let outcome = solve(&h, k, mode, max_level)?;
            let code = match outcome {
                SolveOutcome::Colored { .. } => 0,
                SolveOutcome::Uncolorable { .. } => 1,
                SolveOutcome::DepthExhausted { .. } => 2,
            };
            run.finish(outcome)?;
            Ok(code)
        }
        Command::Verify { input, coloring, mode } => {
            let h = run.hypergraph(&input)?;
            let c = run.coloring(&coloring)?;
            let report = verify(&h, &c, mode)?;
            let code = match report {
                WitnessReport::Ok => 0,
                WitnessReport::FailingEdge { .. } => 1,
            };
            run.finish(report)?;
            Ok(code)
        }
        Command::Decode { gadget, input, mut coloring, params, query } => {
            let h = run.hypergraph(&input)?;
            let mut coloring = |run: &mut Run| -> anyhow::Result<Coloring> {
                let path = coloring.take().ok_or_else(|| anyhow!("this decoder needs --coloring"))?;
                run.coloring(&path)
            };
            let query = || query.ok_or_else(|| anyhow!("this decoder needs --query"));
            match gadget {
                Gadget::RangeEdges => {
                    let answer = range_edge_decode(&edge_set(&h), query()?);
                    run.finish(answer)?;
                }
                Gadget::RangeCharfns => {
                    let codes = charfns_to_codes(h.edges(), &[])?;
                    let answer = range_charfn_decode(&codes, query()?)?;
                    run.finish(answer)?;
                }
                Gadget::Parity => {
                    let c = coloring(&mut run)?;
                    let rows = match params.window {
                        Some(rows) => rows,
                        None => h.labels().map_or(0, |ls| {
                            ls.iter()
                                .filter_map(|l| match l {
                                    hypercolor::VertexLabel::Chain { row, .. } => Some(row + 1),
                                    _ => None,
                                })
                                .max()
                                .unwrap_or(0)
                        }),
                    };
                    let set = parity_decode(&h, &c, rows)?;
                    run.finish(set)?;
                }
                Gadget::TripleSep | Gadget::PairSep => {
                    let which = match gadget {
                        Gadget::TripleSep => Separation::Triple,
                        _ => Separation::Pair,
                    };
                    let f = run.injection(&params)?;
                    let c = coloring(&mut run)?;
                    let set = separation_decode(&h, &c, &f, which)?;
                    run.finish(set)?;
                }
                Gadget::Tree => {
                    let c = coloring(&mut run)?;
                    let depth = params.depth.ok_or_else(|| anyhow!("tree decoding needs --depth"))?;
                    let path = coloring_to_path(&h, &c, depth)?;
                    run.finish(path)?;
                }
                Gadget::Matryoshka => bail!("the matryoshka graph has no decoder"),
            }
            Ok(0)
        }
        Command::Principles { which, coloring, prefix, period, colors, window } => {
            let f = match (&prefix, &period, &coloring) {
                (None, None, Some(path)) => run.coloring(path)?,
                (None, None, None) => bail!("give --coloring or --prefix/--period"),
                _ => {
                    if coloring.is_some() {
                        eprintln!("warning: both an inline coloring and --coloring given; using the inline one");
                    }
                    let prefix = parse_list(prefix.as_deref().unwrap_or(""))?;
                    let period = parse_list(period.as_deref().unwrap_or(""))?;
                    let k = colors.unwrap_or_else(|| prefix.iter().chain(&period).max().map_or(1, |m| m + 1));
                    Coloring::new(k, prefix, period)?
                }
            };
            match which {
                Principle::Ert => run.finish(ert_witness(&f)?)?,
                Principle::Ect => run.finish(ect_witness(&f)?)?,
                Principle::Bridge => run.finish(cf_ert_bridge(&f, window)?)?,
                Principle::SrtDemo => {
                    let size = refutation_size(f.k());
                    if window < size {
                        return Err(PrincipleError::WindowTooSmall { window, size, color: 1 }.into());
                    }
                    let one_monochromatic = mono_set_search(&f, window, size, 1)?;
                    let h0: Vec<usize> = (0..size).collect();
                    let halving = halving_refute(&f, &h0)?;
                    let ert_bound = ert_via_srt(&f, window)?;
                    run.finish(SrtDemo { size, one_monochromatic, halving, ert_bound })?;
                }
            }
            Ok(0)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> Code {
    match err.downcast_ref::<PrincipleError>() {
        Some(PrincipleError::WindowTooSmall { .. }) => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
