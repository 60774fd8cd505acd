//! `pivot`: apply and normalize pivot/loop-complementation words, convert
//! between graphs and set systems, check the exchange axiom, enumerate
//! orbits, and run the built-in verification suites.
//!
//! Exit codes: 0 ok, 1 undefined operation or suite failure, 2 parse
//! error, 3 non-graphic set system.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pivot_core::text;
use pivot_core::verify::{run_all, VerifyConfig};
use pivot_core::word::{OpKind, Word};
use pivot_core::{Error, Graph, Ground, OrbitGraph, OrbitOptions};

#[derive(Parser)]
#[command(name = "pivot", version, about = "Pivot and loop complementation on graphs and set systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a word of operations to a graph or a set system
    Apply {
        /// Graph input file
        #[arg(long, value_name = "FILE", conflicts_with = "ss", required_unless_present = "ss")]
        graph: Option<PathBuf>,
        /// Set-system input file
        #[arg(long, value_name = "FILE")]
        ss: Option<PathBuf>,
        /// The word, e.g. `*{p,q,r} +{s} !{p} loc{q} edge{r,s}`
        #[arg(long)]
        word: String,
        /// Loop-free semantics: the input must have no loops and the word
        /// may only use loc/edge tokens
        #[arg(long, requires = "graph")]
        simple: bool,
        /// Output file (defaults to stdout)
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Print the canonical `+{X} *{Y} +{Z}` form of a word
    Normalize {
        /// The word to normalize
        #[arg(long)]
        word: String,
        /// Ground-set labels, whitespace- or comma-separated
        #[arg(long)]
        vertices: String,
    },
    /// Convert a graph to its induced set system, or a set system back to
    /// the graph that induces it
    Convert {
        #[arg(long, value_name = "FILE", conflicts_with = "ss", required_unless_present = "ss")]
        graph: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        ss: Option<PathBuf>,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check properties of a set system
    Check {
        #[arg(long, value_name = "FILE")]
        ss: PathBuf,
        /// Check the symmetric exchange axiom
        #[arg(long = "delta-matroid")]
        delta_matroid: bool,
    },
    /// Enumerate the orbit of a graph under its elementary pivots
    Orbit {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        /// Also close under single-vertex loop complementation
        #[arg(long)]
        full: bool,
        /// Write the orbit as DOT to this file
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Label transitions for every applicable pivot, not only the
        /// elementary ones
        #[arg(long)]
        all_pivots: bool,
        /// Abort when the orbit exceeds this many nodes
        #[arg(long, default_value_t = 1 << 20)]
        node_cap: usize,
    },
    /// Run the built-in verification suites
    Verify {
        /// Suite selection (only `small` exists)
        #[arg(long, default_value = "small")]
        suite: String,
        /// Exhaustive enumeration bound (1..=4)
        #[arg(long = "max-n", default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=4))]
        max_n: u8,
        /// Seed for the randomized suites
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::UnknownVertex { .. }
        | Error::DuplicateDeclaration { .. }
        | Error::DuplicateLabel { .. }
        | Error::TooManyVertices { .. } => 2,
        Error::NotGraphic { .. } => 3,
        _ => 1,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::new(exit_code_for(&e), e.to_string())
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("cannot read {}: {e}", path.display())))
}

/// Everything is buffered and written in one go; a failing command never
/// emits partial output.
fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new(1, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_vertices(list: &str) -> Result<Ground, Failure> {
    let labels: Vec<&str> = list
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .collect();
    Ok(Ground::new(labels)?)
}

fn step_failure(step: usize, token: &pivot_core::OpToken, cause: Error) -> Failure {
    Failure::new(
        1,
        Error::StepFailed {
            step,
            token: token.to_string(),
            source: Box::new(cause),
        }
        .to_string(),
    )
}

fn cmd_apply(
    graph: Option<&PathBuf>,
    ss: Option<&PathBuf>,
    word_text: &str,
    simple: bool,
    output: Option<&PathBuf>,
) -> Result<(), Failure> {
    if let Some(path) = graph {
        let g = text::parse_graph(&read_file(path)?)?;
        let word = Word::parse(g.ground(), word_text)?;
        if simple {
            if !g.is_simple() {
                return Err(Failure::new(2, "simple mode requires a loop-free graph"));
            }
            let mut s = g.strip_loops();
            for (step, token) in word.tokens().iter().enumerate() {
                let labels: Vec<&str> = token.args().members().collect();
                let next = match token.kind() {
                    OpKind::Local => s.local_complement(labels[0]),
                    OpKind::Edge => s.edge_complement(labels[0], labels[1]),
                    _ => Err(Error::Parse {
                        offset: 0,
                        message: "only loc/edge tokens exist in simple mode".to_string(),
                    }),
                };
                s = next.map_err(|e| step_failure(step, token, e))?;
            }
            return emit(output, &text::render_graph(&s.inject()));
        }
        let result = word.apply_to_graph(&g)?;
        emit(output, &text::render_graph(&result))
    } else {
        let path = ss.expect("clap guarantees one input");
        let m = text::parse_set_system(&read_file(path)?)?;
        let word = Word::parse(m.ground(), word_text)?;
        let result = word.apply_to_set_system(&m);
        emit(output, &text::render_set_system(&result))
    }
}

fn cmd_normalize(word_text: &str, vertices: &str) -> Result<(), Failure> {
    let ground = parse_vertices(vertices)?;
    let word = Word::parse(&ground, word_text)?;
    println!("{}", word.normal_form());
    Ok(())
}

fn cmd_convert(
    graph: Option<&PathBuf>,
    ss: Option<&PathBuf>,
    output: Option<&PathBuf>,
) -> Result<(), Failure> {
    if let Some(path) = graph {
        let g = text::parse_graph(&read_file(path)?)?;
        let m = g.induced_set_system()?;
        emit(output, &text::render_set_system(&m))
    } else {
        let path = ss.expect("clap guarantees one input");
        let m = text::parse_set_system(&read_file(path)?)?;
        let g = Graph::from_set_system(&m)?;
        emit(output, &text::render_graph(&g))
    }
}

fn cmd_check(ss_path: &Path, delta_matroid: bool) -> Result<(), Failure> {
    if !delta_matroid {
        return Err(Failure::new(2, "nothing to check; pass --delta-matroid"));
    }
    let m = text::parse_set_system(&read_file(ss_path)?)?;
    match m.delta_matroid_check() {
        pivot_core::DeltaMatroidCheck::DeltaMatroid => println!("delta-matroid"),
        pivot_core::DeltaMatroidCheck::EmptyFamily => {
            println!("not a delta-matroid; empty family");
        }
        pivot_core::DeltaMatroidCheck::ExchangeFailure { x_set, y_set, x } => {
            println!("not a delta-matroid; witness X={x_set} Y={y_set} x={x}");
        }
    }
    Ok(())
}

fn cmd_orbit(
    graph_path: &Path,
    full: bool,
    dot: Option<&PathBuf>,
    all_pivots: bool,
    node_cap: usize,
) -> Result<(), Failure> {
    let g = text::parse_graph(&read_file(graph_path)?)?;
    let opts = OrbitOptions {
        node_cap,
        all_pivots,
    };
    let orbit = if full {
        OrbitGraph::full_orbit(&g, &opts)?
    } else {
        OrbitGraph::pivot_orbit(&g, &opts)?
    };
    if let Some(path) = dot {
        fs::write(path, orbit.to_dot())
            .map_err(|e| Failure::new(1, format!("cannot write {}: {e}", path.display())))?;
    }
    print!("{}", orbit.summary());
    Ok(())
}

fn cmd_verify(suite: &str, max_n: u8, seed: u64) -> Result<(), Failure> {
    if suite != "small" {
        return Err(Failure::new(2, format!("unknown suite `{suite}`")));
    }
    let cfg = VerifyConfig {
        max_n: max_n as usize,
        seed,
    };
    let outcomes = run_all(&cfg);
    let mut failed = 0;
    for o in &outcomes {
        if o.passed {
            println!("ok   {} ({})", o.name, o.detail);
        } else {
            failed += 1;
            println!("FAIL {}: {}", o.name, o.detail);
        }
    }
    println!(
        "{} suites: {} passed, {} failed",
        outcomes.len(),
        outcomes.len() - failed,
        failed
    );
    if failed > 0 {
        return Err(Failure::new(1, format!("{failed} suite(s) failed")));
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Apply {
            graph,
            ss,
            word,
            simple,
            output,
        } => cmd_apply(graph.as_ref(), ss.as_ref(), &word, simple, output.as_ref()),
        Command::Normalize { word, vertices } => cmd_normalize(&word, &vertices),
        Command::Convert { graph, ss, output } => {
            cmd_convert(graph.as_ref(), ss.as_ref(), output.as_ref())
        }
        Command::Check { ss, delta_matroid } => cmd_check(&ss, delta_matroid),
        Command::Orbit {
            graph,
            full,
            dot,
            all_pivots,
            node_cap,
        } => cmd_orbit(&graph, full, dot.as_ref(), all_pivots, node_cap),
        Command::Verify { suite, max_n, seed } => cmd_verify(&suite, max_n, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
