//! `predist`: decide from a graph's spectrum and distance structure whether
//! its distance-D matrix is a polynomial in the adjacency (or Laplacian)
//! matrix, and whether the graph is distance-regular.

mod report;
mod selftest;

use clap::{Parser, Subcommand, ValueEnum};
use predist::analyze::{analyze_graph, KindSelect};
use predist::characterize::{census_scan, CensusFilter};
use predist::graph::{parse_edge_list, parse_graph6};
use predist::spectral::SpectrumKind;
use predist::{Error, Graph, Tolerances};
use report::Report;
use std::io::{BufRead, Read};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "predist", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph end to end and print a report.
    Analyze {
        /// Input format.
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Which matrix to analyze.
        #[arg(long, value_enum, default_value_t = Kind::Both)]
        kind: Kind,
        /// Eigenvalue grouping tolerance (relative to the spectral radius).
        #[arg(long, default_value_t = 1e-9)]
        tol_group: f64,
        /// Relative tolerance for the scalar equality HM = target.
        #[arg(long, default_value_t = 1e-6)]
        tol_eq: f64,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Path to the input file, or `-` for standard input.
        input: String,
    },
    /// Scan a file of graph6 lines for graphs attaining the gate equality.
    Census {
        #[arg(long, value_enum, default_value_t = CensusKind::Adjacency)]
        kind: CensusKind,
        /// Keep all equality graphs, or only those with D < d.
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// Worker threads; 0 uses all cores. Output order is independent of
        /// the worker count.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol_group: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol_eq: f64,
        /// Path to the graph6 file, or `-` for standard input.
        input: String,
    },
    /// Run the invariant suite over the built-in corpus.
    Selftest {
        #[arg(long, default_value_t = 1e-9)]
        tol_group: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol_eq: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Adjacency,
    Laplacian,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusKind {
    Adjacency,
    Laplacian,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    /// Every graph attaining the equality.
    All,
    /// Only equality graphs with more distinct eigenvalues than the
    /// diameter requires (D < d).
    #[value(name = "d-gt-D", alias = "d-gt-d")]
    DGtD,
}

const EXIT_IO: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_DISCONNECTED: u8 = 4;
const EXIT_IRREGULAR: u8 = 5;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Io { .. } => EXIT_IO,
        Error::Graph6 { .. } | Error::EdgeList { .. } => EXIT_PARSE,
        Error::NotConnected | Error::DisconnectedSpectrum { .. } => EXIT_DISCONNECTED,
        Error::IrregularAdjacency { .. } => EXIT_IRREGULAR,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Analyze {
            format,
            kind,
            tol_group,
            tol_eq,
            json,
            input,
        } => {
            let tol = Tolerances::default()
                .with_grouping(tol_group)
                .with_equality(tol_eq);
            let text = read_input(&input)?;
            let graph = parse_input(&text, format)?;
            let select = match kind {
                Kind::Adjacency => KindSelect::Adjacency,
                Kind::Laplacian => KindSelect::Laplacian,
                Kind::Both => KindSelect::Both,
            };
            let analysis = analyze_graph(&graph, select, &tol)?;
            let report = Report::build(graph.n(), graph.edge_count(), &analysis, &tol);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(())
        }
        Command::Census {
            kind,
            filter,
            workers,
            tol_group,
            tol_eq,
            input,
        } => {
            let tol = Tolerances::default()
                .with_grouping(tol_group)
                .with_equality(tol_eq);
            let kind = match kind {
                CensusKind::Adjacency => SpectrumKind::Adjacency,
                CensusKind::Laplacian => SpectrumKind::Laplacian,
            };
            let filter = match filter {
                Filter::All => CensusFilter::All,
                Filter::DGtD => CensusFilter::DiameterBelowD,
            };
            let outcome = if input == "-" {
                let stdin = std::io::stdin();
                census_scan(stdin.lock().lines(), kind, filter, &tol, workers)?
            } else {
                let file = std::fs::File::open(&input).map_err(|source| Error::Io {
                    line: 0,
                    source,
                })?;
                census_scan(
                    std::io::BufReader::new(file).lines(),
                    kind,
                    filter,
                    &tol,
                    workers,
                )?
            };
            for hit in &outcome.hits {
                println!("{}", serde_json::to_string(hit).expect("hit serializes"));
            }
            let s = &outcome.summary;
            eprintln!(
                "census: scanned {} graphs, {} hits, skipped: {}",
                s.scanned,
                s.hits,
                if s.skipped.is_empty() {
                    "none".to_string()
                } else {
                    s.skipped
                        .iter()
                        .map(|(reason, count)| format!("{reason} x{count}"))
                        .collect::<Vec<_>>()
                        .join(", ")
                }
            );
            Ok(())
        }
        Command::Selftest { tol_group, tol_eq } => {
            let tol = Tolerances::default()
                .with_grouping(tol_group)
                .with_equality(tol_eq);
            if selftest::run(&tol) {
                Ok(())
            } else {
                Err(Error::Inconsistent("selftest failures above".into()))
            }
        }
    }
}

fn read_input(input: &str) -> Result<String, Error> {
    let mut text = String::new();
    if input == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| Error::Io { line: 0, source })?;
    } else {
        text = std::fs::read_to_string(input).map_err(|source| Error::Io { line: 0, source })?;
    }
    Ok(text)
}

fn parse_input(text: &str, format: Format) -> Result<Graph, Error> {
    match format {
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Error::Graph6 {
                    offset: 0,
                    reason: "no graph6 line in input".into(),
                })?;
            parse_graph6(line)
        }
        Format::Edgelist => parse_edge_list(text),
    }
}
