use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use kleshchev::abacus::{self, AbacusMove, MoveKind};
use kleshchev::bipartition::{crystal_graph, is_kleshchev_recursive};
use kleshchev::fock::{expand_optimal, f_apply, parse_residue_word, FockVector};
use kleshchev::order::{enumerate_bipartitions, is_restricted};
use kleshchev::sequences::optimal_sequence;
use kleshchev::verify::verify_conjecture;
use kleshchev::{Bipartition, Params, Partition};

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY_FAIL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kleshchev",
    version,
    about = "Kleshchev/restricted bipartition toolkit"
)]
struct Cli {
    /// Quantum characteristic (>= 2).
    #[arg(long)]
    e: u32,

    /// Charge of the first component (0 <= m < e).
    #[arg(long)]
    m: u32,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker threads for the verifier (default: all cores).
    #[arg(long)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a bipartition is Kleshchev (exit 0 = true, 1 = false).
    IsKleshchev {
        #[arg(allow_hyphen_values = true)]
        bipartition: String,
        #[arg(long, value_enum, default_value_t = Method::Akt)]
        method: Method,
    },
    /// Test whether a bipartition is restricted (exit 0 = true, 1 = false).
    IsRestricted {
        #[arg(allow_hyphen_values = true)]
        bipartition: String,
    },
    /// Iterate the charge-m up operation to its e-core fixed point.
    Roof {
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Iterate the charge-0 down operation to its e-core fixed point.
    Base {
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Charge shift of an e-core.
    Tau {
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Display the beta window of a partition at a given charge.
    Abacus {
        #[arg(allow_hyphen_values = true)]
        partition: String,
        #[arg(long, default_value_t = 0)]
        charge: i64,
        #[arg(long)]
        window: Option<usize>,
    },
    /// Optimal sequence of a Kleshchev bipartition.
    OptimalSeq {
        #[arg(allow_hyphen_values = true)]
        bipartition: String,
    },
    /// Fock-space expansion of a Kleshchev bipartition, or of an explicit
    /// residue word applied to the empty bipartition.
    FockExpand {
        #[arg(allow_hyphen_values = true)]
        bipartition: Option<String>,
        #[arg(long, conflicts_with = "bipartition")]
        word: Option<String>,
    },
    /// Crystal graph of Kleshchev bipartitions up to a maximal rank.
    CrystalGraph {
        #[arg(long)]
        max_rank: u32,
    },
    /// List all bipartitions of a given rank.
    Enumerate { n: u32 },
    /// Exhaustively compare the restricted and Kleshchev oracles.
    Verify {
        #[arg(long)]
        max_rank: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Akt,
    Recursive,
}

fn move_json(record: &AbacusMove) -> serde_json::Value {
    let (kind, p, q) = match record.kind {
        MoveKind::Up => ("up", record.extremum, record.added_bead),
        MoveKind::Down => ("down", record.extremum, record.removed_bead),
    };
    json!({
        "kind": kind,
        "p": p,
        "q": q,
        "U": record.candidates,
        "V_or_W": record.window,
    })
}

fn core_trace_output(
    input: &Partition,
    steps: &[AbacusMove],
    result: &Partition,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let steps: Vec<serde_json::Value> = steps.iter().map(move_json).collect();
            serde_json::to_string_pretty(&json!({
                "input": input.to_string(),
                "steps": steps,
                "result": result.to_string(),
            }))
            .expect("serializable")
        }
        _ => result.to_string(),
    }
}

fn fock_output(vector: &FockVector, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&vector.to_json()).expect("serializable"),
        _ => {
            let lines: Vec<String> = vector
                .terms()
                .map(|(bp, poly)| format!("{bp}: {poly}"))
                .collect();
            lines.join("\n")
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Box<dyn std::error::Error>> {
    let params = Params::new(cli.e, cli.m)?;
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()?;
    }

    let mut exit = 0u8;
    let output = match &cli.command {
        Command::IsKleshchev {
            bipartition,
            method,
        } => {
            let bp: Bipartition = bipartition.parse()?;
            let verdict = match method {
                Method::Akt => abacus::akt_is_kleshchev(&bp, params),
                Method::Recursive => is_kleshchev_recursive(&bp, params),
            };
            if !verdict {
                exit = EXIT_FALSE;
            }
            verdict.to_string()
        }
        Command::IsRestricted { bipartition } => {
            let bp: Bipartition = bipartition.parse()?;
            let verdict = is_restricted(&bp, params)?;
            if !verdict {
                exit = EXIT_FALSE;
            }
            verdict.to_string()
        }
        Command::Roof { partition } => {
            let lam: Partition = partition.parse()?;
            let (core, steps) = abacus::roof_trace(&lam, params)?;
            core_trace_output(&lam, &steps, &core, cli.format)
        }
        Command::Base { partition } => {
            let lam: Partition = partition.parse()?;
            let (core, steps) = abacus::base_trace(&lam, params.e())?;
            core_trace_output(&lam, &steps, &core, cli.format)
        }
        Command::Tau { partition } => {
            let core: Partition = partition.parse()?;
            let (result, data) = abacus::tau_trace(&core, params)?;
            match cli.format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "input": core.to_string(),
                    "runner_maxima": data.runner_maxima,
                    "added_beads": data.added_beads,
                    "result": result.to_string(),
                }))?,
                _ => result.to_string(),
            }
        }
        Command::Abacus {
            partition,
            charge,
            window,
        } => {
            let lam: Partition = partition.parse()?;
            let len = window.unwrap_or_else(|| lam.default_window_len(params.e()));
            let beta = lam.beta_set(*charge, len)?;
            match cli.format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "partition": lam.to_string(),
                    "charge": beta.charge(),
                    "window": beta.window(),
                    "tail_bound": beta.tail_bound(),
                }))?,
                _ => format!(
                    "charge {}: {:?} (tail <= {})",
                    beta.charge(),
                    beta.window(),
                    beta.tail_bound()
                ),
            }
        }
        Command::OptimalSeq { bipartition } => {
            let bp: Bipartition = bipartition.parse()?;
            let seq = optimal_sequence(&bp, params)?;
            match cli.format {
                Format::Json => serde_json::to_string_pretty(&seq.blocks)?,
                _ => seq
                    .word()
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            }
        }
        Command::FockExpand { bipartition, word } => {
            let vector = match (bipartition, word) {
                (Some(text), None) => expand_optimal(&text.parse()?, params)?,
                (None, Some(text)) => {
                    let mut vector = FockVector::basis(Bipartition::empty());
                    for i in parse_residue_word(text, params)? {
                        vector = f_apply(i, &vector, params)?;
                    }
                    vector
                }
                _ => {
                    eprintln!("fock-expand needs a bipartition or --word");
                    return Ok(EXIT_USAGE);
                }
            };
            fock_output(&vector, cli.format)
        }
        Command::CrystalGraph { max_rank } => {
            let graph = crystal_graph(params, *max_rank);
            match cli.format {
                Format::Json => serde_json::to_string_pretty(&graph)?,
                _ => graph.to_dot(),
            }
        }
        Command::Enumerate { n } => {
            let shapes = enumerate_bipartitions(*n);
            match cli.format {
                Format::Json => serde_json::to_string_pretty(
                    &shapes.iter().map(|bp| bp.to_string()).collect::<Vec<_>>(),
                )?,
                _ => shapes
                    .iter()
                    .map(|bp| bp.to_string())
                    .collect::<Vec<_>>()
                    .join("\n"),
            }
        }
        Command::Verify { max_rank } => {
            let report = verify_conjecture(params, *max_rank);
            if !report.passed() {
                exit = EXIT_VERIFY_FAIL;
            }
            match cli.format {
                Format::Json => serde_json::to_string_pretty(&report)?,
                _ => {
                    let mut lines = Vec::new();
                    for rank in &report.ranks {
                        lines.push(format!(
                            "rank {}: akt={} recursive={} restricted={} discrepancies={} prop42_failures={}",
                            rank.n,
                            rank.kleshchev_akt,
                            rank.kleshchev_recursive,
                            rank.restricted,
                            rank.discrepancies.len(),
                            rank.prop42_failures.len(),
                        ));
                    }
                    lines.push(format!("verdict: {}", report.verdict));
                    lines.join("\n")
                }
            }
        }
    };
    emit(&cli.out, &output)?;
    Ok(exit)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
