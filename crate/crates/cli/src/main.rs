use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use isobar::certificate::{self, Decision};
use isobar::connectivity::{self, DEFAULT_CUT_CEILING};
use isobar::construction::{grinberg_map, grinberg_triangulation, ConstructionParams};
use isobar::hamilton::{self, HamiltonianCycle};
use isobar::isobaric::EXHAUSTIVE_CEILING;
use isobar::{dot, fixtures, format, three_h, Error, PlanarMap};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "isobar",
    version,
    about = "Face weights, Hamiltonian cycles and non-Hamiltonicity certificates for planar maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where a command reads its map from. Standard input when neither is given.
#[derive(Args)]
struct Input {
    /// Map file in planarmap format.
    #[arg(value_name = "FILE", conflicts_with = "input")]
    path: Option<PathBuf>,
    /// Map file in planarmap format.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

impl Input {
    fn read_map(&self) -> anyhow::Result<PlanarMap> {
        let text = match self.path.as_ref().or(self.input.as_ref()) {
            Some(p) if p != Path::new("-") => read_file(p)?,
            _ => {
                let mut text = String::new();
                io::stdin().read_to_string(&mut text).context("reading standard input")?;
                text
            }
        };
        Ok(format::parse_map(&text)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the layered triangulation or its cubic dual.
    Gen {
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        beta: u64,
        /// Emit the cubic dual instead of the triangulation.
        #[arg(long)]
        dual: bool,
    },
    /// Emit a built-in map.
    Fixture {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(fixtures::NAMES))]
        name: String,
    },
    /// Look for a non-Hamiltonicity certificate.
    Check {
        /// Skip the residue shortcuts and examine every isobaric partition.
        #[arg(long)]
        exhaustive: bool,
        /// Largest face count examined exhaustively.
        #[arg(long, default_value_t = EXHAUSTIVE_CEILING)]
        ceiling: usize,
        /// Also write the certificate document to this file.
        #[arg(long, value_name = "FILE")]
        write_certificate: Option<PathBuf>,
        #[command(flatten)]
        input: Input,
    },
    /// Search for Hamiltonian cycles.
    Hamilton {
        /// Print every cycle, one per line.
        #[arg(long, conflicts_with = "count")]
        all: bool,
        /// Print the number of cycles.
        #[arg(long)]
        count: bool,
        /// Maximum number of search node expansions.
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        input: Input,
    },
    /// Quasi-connectivity and the minimum nontrivial cuts.
    Qconn {
        /// Largest cut size considered.
        #[arg(long, default_value_t = DEFAULT_CUT_CEILING)]
        ceiling: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Emit the dual map.
    Dual {
        #[command(flatten)]
        input: Input,
    },
    /// Search for three Hamiltonian cycles made of pairs of edge colours.
    Threeh {
        /// Maximum number of search node expansions.
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        input: Input,
    },
    /// Check a certificate document against a map.
    Verify {
        #[arg(long, value_name = "FILE")]
        certificate: PathBuf,
        #[command(flatten)]
        input: Input,
    },
    /// Render the map for Graphviz.
    Export {
        #[arg(long, value_enum)]
        format: ExportFormat,
        /// Draw the boundary of this face in bold.
        #[arg(long, value_name = "ID", conflicts_with = "highlight_cycle")]
        highlight_face: Option<usize>,
        /// Draw this cycle (a file with one vertex list) in bold.
        #[arg(long, value_name = "FILE")]
        highlight_cycle: Option<PathBuf>,
        #[command(flatten)]
        input: Input,
    },
}

/// Report text plus exit status.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: 0 }
    }

    fn negative(text: String) -> Self {
        Report { text, code: EXIT_NEGATIVE }
    }
}

fn read_file(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn cycle_line(cycle: &HamiltonianCycle) -> String {
    let parts: Vec<String> = cycle.vertices().iter().map(usize::to_string).collect();
    parts.join(" ") + "\n"
}

fn run(command: Command) -> anyhow::Result<Report> {
    match command {
        Command::Gen { alpha, beta, dual } => {
            let params = ConstructionParams::new(alpha, beta)?;
            let map = if dual { grinberg_map(params)? } else { grinberg_triangulation(params)? };
            Ok(Report::ok(format::write_map(&map)))
        }
        Command::Fixture { name } => Ok(Report::ok(format::write_map(&fixtures::fixture(&name)?))),
        Command::Check { exhaustive, ceiling, write_certificate, input } => {
            let map = input.read_map()?;
            let decision = if exhaustive {
                certificate::exhaustive(&map, ceiling)?
            } else {
                certificate::decide(&map, ceiling)?
            };
            match decision {
                Decision::NonHamiltonian(cert) => {
                    if let Some(path) = write_certificate {
                        fs::write(&path, certificate::write_certificate(&cert))
                            .with_context(|| format!("writing {}", path.display()))?;
                    }
                    Ok(Report::ok(cert.summary() + "\n"))
                }
                Decision::Hamiltonian(cycle) => {
                    Ok(Report::negative(format!("hamiltonian: {}", cycle_line(&cycle))))
                }
            }
        }
        Command::Hamilton { all, count, budget, input } => {
            let map = input.read_map()?;
            let report = hamilton::search(&map, budget, !(all || count))?;
            if count {
                return Ok(Report::ok(format!("{}\n", report.cycles.len())));
            }
            if report.cycles.is_empty() {
                return Ok(Report::negative("none\n".into()));
            }
            Ok(Report::ok(report.cycles.iter().map(cycle_line).collect()))
        }
        Command::Qconn { ceiling, input } => {
            let map = input.read_map()?;
            let qc = connectivity::quasi_connectivity(&map, ceiling)?;
            let Some(q) = qc.q else {
                return Ok(Report::negative("q=none\n".into()));
            };
            let mut text = format!("q={q}\n");
            for cut in &qc.minimal_cuts {
                let edges: Vec<String> = cut.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                writeln!(text, "{}", edges.join(" "))?;
            }
            Ok(Report::ok(text))
        }
        Command::Dual { input } => Ok(Report::ok(format::write_map(&input.read_map()?.dual()?))),
        Command::Threeh { budget, input } => {
            let map = input.read_map()?;
            let Some(fact) = three_h::find_3h_factorization(&map, budget)? else {
                return Ok(Report::negative("none\n".into()));
            };
            let mut text = String::new();
            for ((u, v), c) in &fact.edge_colors {
                writeln!(text, "edge {u} {v} color {c}")?;
            }
            for (f, c) in fact.face_colors.iter().enumerate() {
                writeln!(text, "face {f} color {c}")?;
            }
            let [s0, s1, s2, s3] = fact.sigma;
            writeln!(text, "sigma {s0} {s1} {s2} {s3}")?;
            Ok(Report::ok(text))
        }
        Command::Verify { certificate: path, input } => {
            let cert = certificate::parse_certificate(&read_file(&path)?)?;
            let map = input.read_map()?;
            if certificate::check_certificate(&map, &cert) {
                Ok(Report::ok(format!("valid {}\n", cert.kind())))
            } else {
                Ok(Report::negative(format!("invalid {}\n", cert.kind())))
            }
        }
        Command::Export { format: ExportFormat::Dot, highlight_face, highlight_cycle, input } => {
            let map = input.read_map()?;
            let highlight = match (highlight_face, highlight_cycle) {
                (Some(id), _) => {
                    if id >= map.face_count() {
                        bail!(Error::InvalidParams(format!("face {id} out of range")));
                    }
                    Some(dot::face_edges(&map, id))
                }
                (None, Some(path)) => {
                    let text = read_file(&path)?;
                    let seq = text
                        .split_whitespace()
                        .map(|t| {
                            t.parse::<usize>()
                                .map_err(|_| anyhow!("bad vertex id `{t}` in {}", path.display()))
                        })
                        .collect::<anyhow::Result<Vec<usize>>>()?;
                    map.cycle_edges(&seq)?;
                    let n = seq.len();
                    Some((0..n).map(|k| (seq[k], seq[(k + 1) % n])).collect())
                }
                (None, None) => None,
            };
            Ok(Report::ok(dot::export_dot(&map, highlight.as_deref())))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::BudgetExhausted { .. } | Error::CeilingExceeded { .. } | Error::CutCeilingReached { .. },
        ) => EXIT_LIMIT,
        _ => EXIT_USAGE,
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(value) = std::env::var("ISOBAR_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| anyhow!("ISOBAR_THREADS must be a positive integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(cli.command));
    match result {
        Ok(report) => {
            let mut out = io::stdout().lock();
            if out.write_all(report.text.as_bytes()).and_then(|()| out.flush()).is_err() {
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(report.code)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
