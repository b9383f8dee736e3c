//! Command-line front end.
//!
//! Exit codes: 0 success / SAT / valid, 1 UNSAT / negative certificate,
//! 2 usage error, 3 invalid input, 4 check failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use hcolor::bipartite::{is_bipartite, BipartiteWitness};
use hcolor::interpolate::SplitInstance;
use hcolor::php::{bench_php, to_csv, BenchError};
use hcolor::proof::{check_refutation, ResolutionProof};
use hcolor::refute::{pipeline, refute, refute_edgeless};
use hcolor::saturate::{saturate, DEFAULT_VAR_BUDGET};
use hcolor::solver::{dpll_solve, SolveResult};
use hcolor::{encode, gen_php, interpolate, CnfInstance, Graph};

#[derive(Parser)]
#[command(name = "hcolor", version, about = "H-coloring encodings, certificates and proofs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write CNF(G, H) as DIMACS.
    Encode {
        g: String,
        h: String,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Decide G -> H for bipartite H and print the certificate.
    Decide {
        g: String,
        h: String,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Emit a resolution refutation of CNF(G, H) as a trace.
    Refute {
        g: String,
        h: String,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Check a trace as a refutation of a DIMACS file.
    Check { cnf: PathBuf, trace: PathBuf },
    /// Extract an interpolating circuit.
    Interpolate {
        cnf: PathBuf,
        split: PathBuf,
        trace: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Write the pigeonhole formula PHP^m_n as DIMACS.
    Php {
        m: usize,
        n: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Run DPLL on PHP^{n+1}_n for n in FROM..=TO and print CSV.
    Bench {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Stop after the first row finishing past this many seconds.
        #[arg(long)]
        budget_secs: Option<u64>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Run DPLL (or resolution saturation) on a DIMACS file.
    Oracle {
        cnf: PathBuf,
        #[arg(long)]
        saturate: bool,
        /// Write the saturation refutation here.
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Check(String),
}

type Outcome = Result<u8, Failure>;

fn input<E: std::fmt::Display>(context: &str) -> impl Fn(E) -> Failure + '_ {
    move |e| Failure::Input(format!("{context}: {e}"))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(input(&path.display().to_string()))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(input(&p.display().to_string())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// A graph argument is a file path if one exists, otherwise a built-in name.
fn load_graph(arg: &str) -> Result<Graph, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        Graph::parse(&read(path)?).map_err(input(arg))
    } else {
        Graph::by_name(arg).map_err(input(arg))
    }
}

fn load_cnf(path: &Path) -> Result<CnfInstance, Failure> {
    CnfInstance::parse_dimacs(&read(path)?).map_err(input(&path.display().to_string()))
}

fn load_trace(path: &Path, cnf: &CnfInstance) -> Result<ResolutionProof, Failure> {
    ResolutionProof::parse_trace(&read(path)?, cnf).map_err(input(&path.display().to_string()))
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Encode { g, h, o } => {
            let (cnf, _) = encode(&load_graph(&g)?, &load_graph(&h)?).map_err(input("encode"))?;
            emit(&o, &cnf.to_dimacs())?;
            Ok(0)
        }
        Command::Decide { g, h, o } => {
            let cert = pipeline(&load_graph(&g)?, &load_graph(&h)?).map_err(input("decide"))?;
            let kind = if cert.is_positive() { "POSITIVE" } else { "NEGATIVE" };
            println!("{kind}");
            emit(&o, &cert.to_text())?;
            Ok(if cert.is_positive() { 0 } else { 1 })
        }
        Command::Refute { g, h, o } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let proof = match (is_bipartite(&g), is_bipartite(&h)) {
                (_, BipartiteWitness::OddWalk(_)) => {
                    return Err(Failure::Input("target is not bipartite".into()))
                }
                (BipartiteWitness::OddWalk(walk), BipartiteWitness::Bipartite(split)) => {
                    refute(&g, &h, &walk, &split).map_err(input("refute"))?
                }
                _ if h.is_edgeless() && !g.is_edgeless() => {
                    refute_edgeless(&g, &h, g.edges()[0]).map_err(input("refute"))?
                }
                _ => {
                    return Err(Failure::Input(
                        "instance is colorable; no refutation exists (see `decide`)".into(),
                    ))
                }
            };
            emit(&o, &proof.to_trace())?;
            Ok(0)
        }
        Command::Check { cnf, trace } => {
            let cnf = load_cnf(&cnf)?;
            let proof = load_trace(&trace, &cnf)?;
            match check_refutation(&cnf, &proof) {
                Ok(report) => {
                    println!("VALID {} steps ({} derived)", report.steps, report.derived);
                    for id in report.tautologies {
                        eprintln!("warning: step {id} is tautological");
                    }
                    Ok(0)
                }
                Err(e) => Err(Failure::Check(format!("INVALID {e}"))),
            }
        }
        Command::Interpolate { cnf, split, trace, o } => {
            let cnf = load_cnf(&cnf)?;
            let proof = load_trace(&trace, &cnf)?;
            let split = SplitInstance::parse_split(&read(&split)?, cnf).map_err(input("split"))?;
            let circuit = interpolate(&split, &proof).map_err(|e| match e {
                hcolor::interpolate::InterpolationError::NotARefutation(c) => {
                    Failure::Check(format!("INVALID {c}"))
                }
                other => Failure::Input(other.to_string()),
            })?;
            emit(&o, &circuit.to_text())?;
            Ok(0)
        }
        Command::Php { m, n, o } => {
            if m == 0 || n == 0 {
                return Err(Failure::Input("pigeons and holes must be positive".into()));
            }
            emit(&o, &gen_php(m, n).to_dimacs())?;
            Ok(0)
        }
        Command::Bench { from, to, budget_secs, o } => {
            let budget = budget_secs.map(Duration::from_secs);
            match bench_php(from, to, budget) {
                Ok(rows) => {
                    emit(&o, &to_csv(&rows))?;
                    Ok(0)
                }
                Err(BenchError::BudgetExceeded { n, rows }) => {
                    emit(&o, &to_csv(&rows))?;
                    eprintln!("budget exhausted before n = {n}");
                    Ok(0)
                }
                Err(e) => Err(Failure::Input(e.to_string())),
            }
        }
        Command::Oracle { cnf, saturate: false, .. } => {
            let cnf = load_cnf(&cnf)?;
            let (result, stats) = dpll_solve(&cnf);
            let verdict = if result.is_sat() { "SAT" } else { "UNSAT" };
            println!("result,decisions,conflicts,propagations,time_ms");
            println!(
                "{verdict},{},{},{},{:.3}",
                stats.decisions, stats.conflicts, stats.propagations, stats.time_ms
            );
            if let SolveResult::Sat(a) = result {
                let lits: Vec<String> = (1..a.len())
                    .map(|v| if a[v] { v.to_string() } else { format!("-{v}") })
                    .collect();
                println!("v {} 0", lits.join(" "));
                Ok(0)
            } else {
                Ok(1)
            }
        }
        Command::Oracle { cnf, saturate: true, o } => {
            let cnf = load_cnf(&cnf)?;
            match saturate(&cnf, DEFAULT_VAR_BUDGET).map_err(input("saturate"))? {
                Some(proof) => {
                    println!("UNSAT");
                    if o.is_some() {
                        emit(&o, &proof.to_trace())?;
                    } else {
                        print!("{}", proof.to_trace());
                    }
                    Ok(1)
                }
                None => {
                    println!("SAT");
                    Ok(0)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Check(msg)) => {
            println!("{msg}");
            ExitCode::from(4)
        }
    }
}
