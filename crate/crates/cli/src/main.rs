use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use thetabar::enumerate::BUILTIN_MAX_N;
use thetabar::{
    classify, closure_classes, emit_graph6, parse_graph6, realize_theta_bar, theta_bar_classes_distance_free,
    triviality, verify_corpus, CorpusSource, CorpusSpec, EdgePartition, EdgeRelation, Graph, PairList, Pattern,
    SuiteOptions, Which,
};

/// Θ and Θ̄ edge relations, their closures, and graph-class recognition.
#[derive(Parser)]
#[command(name = "thetabar", version)]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the relation graph: one related pair of edge ids per line.
    Relation {
        /// Host graph in graph6.
        graph: String,
        #[arg(long, default_value = "thetabar")]
        which: Which,
        /// Emit DOT with `uv` vertex labels.
        #[arg(long, conflicts_with = "graph6")]
        dot: bool,
        /// Emit the relation graph as graph6.
        #[arg(long)]
        graph6: bool,
    },
    /// Classes of the transitive closure, as JSON.
    Classes {
        graph: String,
        #[arg(long, default_value = "thetabar")]
        which: Which,
        /// Compute Θ̄* from the multipartite structure, without distances.
        #[arg(long)]
        fast: bool,
        /// With --fast, skip the cross-check against the closure.
        #[arg(long, requires = "fast")]
        no_verify: bool,
    },
    /// Recognition report as JSON.
    Classify { graph: String },
    /// Reconstruct a graph from its Θ̄ relation graph.
    Realize {
        /// Relation graph as graph6 or as a JSON pair list
        /// `{"vertices": m, "pairs": [[i, j], ...]}`; `-` reads stdin.
        input: String,
    },
    /// Run the property suite over a corpus; exits 1 if any claim fails.
    Verify {
        /// Largest vertex count (built-in corpus: at most 8, default 7).
        #[arg(long)]
        max_n: Option<usize>,
        /// graph6 file to use instead of the built-in enumeration.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value_t = 5)]
        max_counterexamples: usize,
    },
    /// Print a graph in graph6.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Complete multipartite graph from comma-separated part sizes.
    Multipartite { parts: String },
    /// Cartesian product; operands are graph6 or names such as K3, P4, C5, S3, paw.
    Product { left: String, right: String },
    Join { left: String, right: String },
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    /// Star with `n` leaves.
    Star { n: usize },
    Pattern { name: Pattern },
}

fn read_graph(text: &str) -> Result<Graph> {
    parse_graph6(text.trim()).with_context(|| format!("invalid graph6 input {:?}", text.trim()))
}

/// `K7`, `P4`, `C5`, `S3`, a pattern name, or graph6.
fn operand(text: &str) -> Result<Graph> {
    let (head, digits) = text.split_at(text.len().min(1));
    if let Ok(n) = digits.parse::<usize>() {
        match head {
            "K" => return Ok(Graph::complete(n)),
            "P" => return Ok(Graph::path(n)),
            "C" => return Ok(Graph::cycle(n)?),
            "S" => return Ok(Graph::star(n)),
            _ => {}
        }
    }
    if let Ok(p) = text.parse::<Pattern>() {
        return Ok(p.graph());
    }
    read_graph(text)
}

fn print_json(value: &impl serde::Serialize, pretty: bool) -> Result<()> {
    let mut out = io::stdout().lock();
    if pretty {
        serde_json::to_writer_pretty(&mut out, value)?;
    } else {
        serde_json::to_writer(&mut out, value)?;
    }
    writeln!(out)?;
    Ok(())
}

fn partition_json(g: &Graph, p: &EdgePartition) -> serde_json::Value {
    let classes = p.classes();
    let edges: Vec<Vec<(usize, usize)>> = classes.iter().map(|c| c.iter().map(|&e| g.edge(e)).collect()).collect();
    json!({
        "class_count": p.class_count(),
        "class_sizes": p.class_sizes(),
        "classes": classes,
        "class_edges": edges,
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Relation { graph, which, dot, graph6 } => {
            let g = read_graph(&graph)?;
            let r = EdgeRelation::of_graph(&g, which);
            let mut out = io::stdout().lock();
            if dot {
                write!(out, "{}", r.to_dot())?;
            } else if graph6 {
                writeln!(out, "{}", emit_graph6(r.graph()))?;
            } else {
                for &(e, f) in r.pairs() {
                    writeln!(out, "{e} {f}")?;
                }
            }
        }
        Command::Classes { graph, which, fast, no_verify } => {
            let g = read_graph(&graph)?;
            if fast && which != Which::ThetaBar {
                bail!("--fast is only available for --which thetabar");
            }
            let (p, method, verified) = if fast {
                let p = theta_bar_classes_distance_free(&g);
                let verified = (!no_verify)
                    .then(|| p.same_partition(&closure_classes(&EdgeRelation::of_graph(&g, Which::ThetaBar))));
                (p, "distance-free", verified)
            } else {
                (closure_classes(&EdgeRelation::of_graph(&g, which)), "closure", None)
            };
            let r = EdgeRelation::of_graph(&g, which);
            let mut value = json!({
                "schema": 1,
                "graph6": emit_graph6(&g),
                "which": which,
                "method": method,
                "m": g.m(),
                "triviality": triviality(&r, &p),
                "closed": r.is_closed(),
                "verified": verified,
            });
            value.as_object_mut().unwrap().extend(partition_json(&g, &p).as_object().unwrap().clone());
            print_json(&value, pretty)?;
            if verified == Some(false) {
                eprintln!("error: distance-free classes disagree with the closure");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Classify { graph } => print_json(&classify(&read_graph(&graph)?), pretty)?,
        Command::Realize { input } => {
            let text = if input == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).context("reading stdin")?;
                s
            } else {
                input
            };
            let w = if text.trim_start().starts_with('{') {
                PairList::parse(&text)?.to_graph()?
            } else {
                read_graph(&text)?
            };
            print_json(&realize_theta_bar(&w), pretty)?;
        }
        Command::Verify { max_n, corpus, all, threads, max_counterexamples } => {
            let source = match corpus {
                Some(path) => CorpusSource::Graph6File(path),
                None => CorpusSource::Builtin,
            };
            let n_max = match (&source, max_n) {
                (_, Some(n)) => n,
                (CorpusSource::Builtin, None) => 7,
                (CorpusSource::Graph6File(_), None) => usize::MAX,
            };
            if source == CorpusSource::Builtin && n_max > BUILTIN_MAX_N {
                bail!("the built-in corpus stops at {BUILTIN_MAX_N} vertices; pass --corpus FILE for larger graphs");
            }
            let spec = CorpusSpec { n_max, connected_only: !all, source };
            let report = verify_corpus(&spec, &SuiteOptions { threads, max_counterexamples })?;
            print_json(&report, pretty)?;
            for c in &report.claims {
                let status = if c.passed { "pass" } else { "FAIL" };
                eprintln!("{status} {:<44} checked {:>6}  vacuous {:>6}  failures {}", c.id, c.checked, c.vacuous, c.failures);
            }
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Generate { family } => {
            let g = match family {
                Family::Multipartite { parts } => {
                    let sizes = parts
                        .split(',')
                        .map(|s| s.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .with_context(|| format!("invalid part sizes {parts:?}"))?;
                    Graph::complete_multipartite(&sizes)?
                }
                Family::Product { left, right } => Graph::cartesian_product(&operand(&left)?, &operand(&right)?),
                Family::Join { left, right } => Graph::join(&operand(&left)?, &operand(&right)?),
                Family::Complete { n } => Graph::complete(n),
                Family::Path { n } => Graph::path(n),
                Family::Cycle { n } => Graph::cycle(n)?,
                Family::Star { n } => Graph::star(n),
                Family::Pattern { name } => name.graph(),
            };
            println!("{}", emit_graph6(&g));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        let kind = c
            .downcast_ref::<io::Error>()
            .map(io::Error::kind)
            .or_else(|| c.downcast_ref::<serde_json::Error>().and_then(serde_json::Error::io_error_kind));
        kind == Some(io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
