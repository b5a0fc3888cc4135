use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sylv_core::cocharge::cochseq_bst;
use sylv_core::graph::{component, neighbors, ComponentGraph, Limits};
use sylv_core::monoid::{element_of, equivalent, rewrite_equivalent};
use sylv_core::pathsynth::shift_path_trees;
use sylv_core::{Bst, Error, Evaluation, Word};

mod suites;

/// Sylvester monoid and cyclic shift graph toolkit.
#[derive(Debug, Parser)]
#[command(name = "sylv", version)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct RunConfig {
    /// Alphabet rank n (symbols 1..=n). Inferred from the input when omitted.
    #[arg(short = 'n', long = "rank", visible_alias = "n", global = true, value_parser = clap::value_parser!(u32).range(1..))]
    rank: Option<u32>,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[arg(long, default_value_t = sylv_core::trees::DEFAULT_MAX_READINGS, global = true, value_parser = positive)]
    max_readings: usize,

    #[arg(long, default_value_t = sylv_core::graph::DEFAULT_MAX_VERTICES, global = true, value_parser = positive)]
    max_vertices: usize,

    /// Visited-word budget for the rewriting closure.
    #[arg(long, default_value_t = sylv_core::monoid::DEFAULT_REWRITE_BUDGET, global = true, value_parser = positive)]
    budget: usize,

    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true, value_parser = positive)]
    jobs: Option<usize>,

    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

impl RunConfig {
    fn limits(&self) -> Limits {
        Limits {
            max_readings: self.max_readings,
            max_vertices: self.max_vertices,
            rewrite_budget: self.budget,
        }
    }

    /// Rank for commands taking words: explicit, or the largest symbol seen.
    fn rank_for(&self, words: &[&Word]) -> u32 {
        self.rank
            .unwrap_or_else(|| words.iter().map(|w| w.max_symbol()).max().unwrap_or(1).max(1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Tsv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Insert a word right-to-left into a binary search tree.
    Tree {
        word: String,
        /// Sideways ASCII drawing instead of the serialized form.
        #[arg(long)]
        ascii: bool,
    },
    /// All readings of the tree of a word.
    Readings { word: String },
    /// Cocharge sequence of a standard word.
    Cochseq {
        word: String,
        /// Recompute over every reading of the tree and require agreement.
        #[arg(long)]
        all_readings: bool,
    },
    /// Decide whether two words represent the same element.
    Equiv {
        u: String,
        v: String,
        /// Decide by rewriting closure instead of insertion.
        #[arg(long)]
        rewrite: bool,
    },
    /// Cyclic shift neighbours of an element, with witnesses.
    Neighbors { word: String },
    /// Build the cyclic shift graph of one evaluation class.
    Component(ClassArgs),
    /// Exact diameter of an evaluation class.
    Diameter(ClassArgs),
    /// Cyclic shift distance between two elements.
    Distance { u: String, v: String },
    /// Certified n-step cyclic shift path between two standard trees.
    Path {
        from: String,
        to: String,
        /// Drop repeated consecutive trees from the text transcript.
        #[arg(long)]
        compress: bool,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(value_enum)]
        suite: suites::Suite,
        /// Maximum word length (oracle, connectivity).
        #[arg(long)]
        maxlen: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct ClassArgs {
    /// Evaluation as comma-separated multiplicities, e.g. 2,1,0,1.
    #[arg(long, conflicts_with = "standard")]
    eval: Option<String>,
    /// Use the class of standard elements (1,1,...,1) of the given rank.
    #[arg(long)]
    standard: bool,
    /// Label DOT vertices with full tree serializations.
    #[arg(long)]
    full_trees: bool,
}

/// Failures mapped to exit codes.
enum Failure {
    Input(String),
    Cap(String),
    Verification(String),
    Internal(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            Error::Disconnected { ref parts } => {
                let mut msg = e.to_string();
                for (i, p) in parts.iter().enumerate() {
                    let _ = write!(msg, "\n  part {}: {}", i + 1, p.join(" "));
                }
                Failure::Verification(msg)
            }
            e if e.is_input_error() => Failure::Input(e.to_string()),
            e => Failure::Internal(e.to_string()),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Verification(_) => 4,
            Failure::Internal(_) | Failure::Io(_) => 5,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) => format!("input error: {m}"),
            Failure::Cap(m) => format!("limit reached: {m}"),
            Failure::Verification(m) => format!("verification failed: {m}"),
            Failure::Internal(m) => format!("internal error: {m}"),
            Failure::Io(e) => format!("i/o error: {e}"),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn parse_word(s: &str) -> Result<Word, Failure> {
    s.parse().map_err(Failure::from)
}

/// Accepts a word or a serialized tree.
fn parse_tree(s: &str) -> Result<Bst, Failure> {
    if s.contains('(') || s == "_" {
        s.parse().map_err(Failure::from)
    } else {
        Ok(Bst::from_word(&parse_word(s)?))
    }
}

fn json_string(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::Input(format!("--format {format:?} is not available for {command}").to_lowercase())
}

fn run(cli: &Cli) -> CmdResult {
    let cfg = &cli.config;
    match &cli.command {
        Command::Tree { word, ascii } => {
            let w = parse_word(word)?;
            let rank = cfg.rank_for(&[&w]);
            let e = element_of(&w, rank)?;
            let t = e.tree();
            Ok(match cfg.format {
                Format::Text if *ascii => t.to_ascii(),
                Format::Text | Format::Tsv => format!("{t}\n"),
                Format::Dot => t.to_dot(),
                Format::Json => json_string(&json!({
                    "word": w,
                    "rank": rank,
                    "tree": t,
                    "canonical_reading": t.canonical_reading(),
                })),
            })
        }
        Command::Readings { word } => {
            let t = parse_tree(word)?;
            let readings = t.readings(cfg.max_readings)?;
            Ok(match cfg.format {
                Format::Json => json_string(&json!(readings)),
                Format::Dot => return Err(unsupported(cfg.format, "readings")),
                _ => readings.iter().map(|r| format!("{r}\n")).collect(),
            })
        }
        Command::Cochseq { word, all_readings } => {
            let t = parse_tree(word)?;
            let seq = if word.contains('(') {
                cochseq_bst(&t, *all_readings)?
            } else {
                let w = parse_word(word)?;
                let seq = sylv_core::cochseq_word(&w)?;
                if *all_readings {
                    cochseq_bst(&t, true)?;
                }
                seq
            };
            Ok(match cfg.format {
                Format::Json => json_string(&json!(seq.labels())),
                Format::Dot => return Err(unsupported(cfg.format, "cochseq")),
                _ => format!("{seq}\n"),
            })
        }
        Command::Equiv { u, v, rewrite } => {
            let (u, v) = (parse_word(u)?, parse_word(v)?);
            let rank = cfg.rank_for(&[&u, &v]);
            let answer = if *rewrite {
                rewrite_equivalent(&u, &v, rank, cfg.budget)?
            } else {
                equivalent(&u, &v, rank)?
            };
            Ok(match cfg.format {
                Format::Json => json_string(&json!({ "u": u, "v": v, "equivalent": answer })),
                _ => format!("{answer}\n"),
            })
        }
        Command::Neighbors { word } => {
            let t = parse_tree(word)?;
            let rank = cfg.rank.unwrap_or_else(|| t.max_label().unwrap_or(1).max(1));
            let e = sylv_core::SylvElement::from_tree(t, rank)?;
            let ns = neighbors(&e, cfg.max_readings)?;
            Ok(match cfg.format {
                Format::Json => json_string(&json!(ns
                    .iter()
                    .map(|(n, w)| json!({ "tree": n.tree(), "x": w.x, "y": w.y }))
                    .collect::<Vec<_>>())),
                Format::Dot => {
                    let mut out = String::from("graph neighbors {\n");
                    let _ = writeln!(out, "  s [label=\"{}\"];", e.canonical_reading());
                    for (i, (n, _)) in ns.iter().enumerate() {
                        if n == &e {
                            continue;
                        }
                        let _ = writeln!(out, "  t{i} [label=\"{}\"];\n  s -- t{i};", n.canonical_reading());
                    }
                    out.push_str("}\n");
                    out
                }
                _ => {
                    let mut out = String::new();
                    for (n, w) in &ns {
                        let _ = writeln!(out, "{}\t{}\t{}", n.tree(), show(&w.x), show(&w.y));
                    }
                    out
                }
            })
        }
        Command::Component(args) => {
            let g = build_class(cfg, args)?;
            Ok(match cfg.format {
                Format::Dot => g.to_dot(args.full_trees),
                Format::Tsv => format!("{}\n{}\n", ComponentGraph::TSV_HEADER, g.tsv_row()),
                Format::Json => json_string(&json!({
                    "evaluation": g.evaluation().counts(),
                    "vertices": g.vertices(),
                    "edges": g.edges().map(|(s, t, w)| json!({
                        "from": s, "to": t, "x": w.x, "y": w.y,
                    })).collect::<Vec<_>>(),
                    "connected": g.is_connected(),
                })),
                Format::Text => format!(
                    "evaluation {}\nvertices {}\nedges {}\nconnected {}\n",
                    g.evaluation(),
                    g.vertex_count(),
                    g.edge_count(),
                    g.is_connected()
                ),
            })
        }
        Command::Diameter(args) => {
            let g = build_class(cfg, args)?;
            let d = g.diameter()?;
            Ok(match cfg.format {
                Format::Tsv => format!("{}\n{}\n", ComponentGraph::TSV_HEADER, g.tsv_row()),
                Format::Json => json_string(&json!({
                    "evaluation": g.evaluation().counts(),
                    "vertices": g.vertex_count(),
                    "diameter": d.value,
                    "from": d.from,
                    "to": d.to,
                })),
                Format::Dot => return Err(unsupported(cfg.format, "diameter")),
                Format::Text => format!("{}\nfrom {}\nto {}\n", d.value, d.from, d.to),
            })
        }
        Command::Distance { u, v } => {
            let (s, t) = (parse_tree(u)?, parse_tree(v)?);
            let rank = cfg.rank.unwrap_or_else(|| {
                s.max_label().unwrap_or(1).max(t.max_label().unwrap_or(1)).max(1)
            });
            let es = sylv_core::SylvElement::from_tree(s.clone(), rank)?;
            let et = sylv_core::SylvElement::from_tree(t.clone(), rank)?;
            if es.evaluation() != et.evaluation() {
                return Err(Failure::Input(format!(
                    "{} and {} have different evaluations",
                    es.evaluation(),
                    et.evaluation()
                )));
            }
            let g = component(&es.evaluation(), &cfg.limits())?;
            let d = g.distance(&s, &t)?;
            Ok(match cfg.format {
                Format::Json => json_string(&json!({ "from": s, "to": t, "distance": d })),
                _ => format!("{d}\n"),
            })
        }
        Command::Path { from, to, compress } => {
            let (t, u) = (parse_tree(from)?, parse_tree(to)?);
            let cert = shift_path_trees(&t, &u)?;
            cert.verify(&t, &u)?;
            Ok(match cfg.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&cert).expect("certificate");
                    s.push('\n');
                    s
                }
                Format::Dot | Format::Tsv => return Err(unsupported(cfg.format, "path")),
                Format::Text if *compress => cert
                    .compressed()
                    .iter()
                    .map(|t| format!("{}\t{}\n", t.canonical_reading(), t))
                    .collect(),
                Format::Text => cert.transcript(),
            })
        }
        Command::Verify { suite, maxlen } => {
            let report = suites::run(*suite, cfg.rank, *maxlen, &cfg.limits())?;
            let text = report.render();
            if report.passed() {
                Ok(text)
            } else {
                print_out(cfg, &text)?;
                Err(Failure::Verification(
                    report.counterexample().unwrap_or_default(),
                ))
            }
        }
    }
}

fn show(w: &Word) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        w.to_string()
    }
}

fn build_class(cfg: &RunConfig, args: &ClassArgs) -> Result<ComponentGraph, Failure> {
    let eval = match (&args.eval, args.standard) {
        (Some(e), _) => {
            let e: Evaluation = e.parse()?;
            if let Some(n) = cfg.rank {
                if n != e.rank() {
                    return Err(Failure::Input(format!(
                        "--eval has {} entries but rank is {n}",
                        e.rank()
                    )));
                }
            }
            e
        }
        (None, true) => {
            let n = cfg
                .rank
                .ok_or_else(|| Failure::Input("--standard needs -n/--rank".into()))?;
            Evaluation::standard(n)
        }
        (None, false) => return Err(Failure::Input("give --eval or --standard".into())),
    };
    eprintln!("building class {eval} ...");
    let g = component(&eval, &cfg.limits())?;
    eprintln!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    Ok(g)
}

fn print_out(cfg: &RunConfig, text: &str) -> Result<(), Failure> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(Failure::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.config.jobs {
        // Only fails if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let result = run(&cli).and_then(|text| print_out(&cli.config, &text));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("sylv: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
