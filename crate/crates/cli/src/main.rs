//! `qcumulant`: moment and cumulant tables of the q-semicircular and free
//! Poisson laws, and the verification suite.

mod table;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qcumulant::freepoisson::{poisson_cumulants_log, poisson_cumulants_tutte, poisson_moments};
use qcumulant::graphs::{Multigraph, TutteEngine, TutteEvaluator};
use qcumulant::qsemicircular::{
    cumulants_log, cumulants_tutte, free_cumulants_recursion, moments_cf,
};
use qcumulant::verify::{verify_with, VerifyConfig};
use qcumulant::IntPoly;

use table::{render_report, Format, GraphValue, Row, Table, Value};

/// Above these sizes a command still runs but may take minutes or more.
const SAFE_MATCHING_N: usize = 12;
const SAFE_LATTICE_N: usize = 10;

#[derive(Parser, Debug)]
#[command(
    name = "qcumulant",
    version,
    about = "Exact cumulants of the q-semicircular and free Poisson laws"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Law to tabulate.
    #[arg(long, value_enum, global = true, default_value_t = Law::Qsemicircular)]
    law: Law,

    /// Largest n (number of points) to compute.
    #[arg(long, global = true, default_value_t = 8)]
    max_n: usize,

    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Substitute this integer for q (or λ) before printing.
    #[arg(long, global = true, allow_negative_numbers = true)]
    eval_at: Option<i64>,

    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, env = "QCUMULANT_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,

    /// Seed of the random graph population used by `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Moments m_n.
    Moments,
    /// Classical cumulants k_n and, for the q-semicircular law, k̃_n.
    Cumulants,
    /// Free cumulants c_n.
    FreeCumulants,
    /// Moments and cumulants of the free Poisson law.
    Poisson,
    /// Cumulants through Tutte polynomials of crossing graphs, or T(1,q) of one graph.
    Tutte {
        /// JSON graph {"n":..,"edges":[[u,v],..]}; `-` reads standard input.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Check every identity and report one row per identity and size.
    Verify {
        /// Largest n for lattice-sum identities; defaults to min(max-n, 8).
        #[arg(long)]
        lattice_max_n: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Law {
    Qsemicircular,
    Freepoisson,
}

/// A failed run: exit code plus message for standard error.
struct Failure(u8, String);

impl From<qcumulant::Error> for Failure {
    fn from(e: qcumulant::Error) -> Self {
        Failure(2, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
        {
            eprintln!("qcumulant: cannot set thread count: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(Failure(code, msg)) => {
            eprintln!("qcumulant: {msg}");
            ExitCode::from(code)
        }
    }
}

fn warn_above(n: usize, safe: usize, what: &str) {
    if n > safe {
        eprintln!("qcumulant: warning: {what} above n = {safe} may take a long time");
    }
}

fn variable(law: Law) -> &'static str {
    match law {
        Law::Qsemicircular => "q",
        Law::Freepoisson => "lambda",
    }
}

fn law_name(law: Law) -> &'static str {
    match law {
        Law::Qsemicircular => "qsemicircular",
        Law::Freepoisson => "freepoisson",
    }
}

/// Rows `n` of a table; q-semicircular tables skip odd `n`, which are zero.
fn indices(law: Law, from: usize, max_n: usize) -> Vec<usize> {
    (from..=max_n)
        .filter(|n| law == Law::Freepoisson || n % 2 == 0)
        .collect()
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let (law, max_n, at) = (cli.law, cli.max_n, cli.eval_at);
    let v = |p: &IntPoly| Some(Value::new(p, at));
    let table = |law: Law, rows: Vec<Row>| Table {
        law: law_name(law),
        variable: variable(law),
        eval_at: at,
        rows,
    };
    let rows = match &cli.command {
        Command::Moments => {
            let m: Vec<IntPoly> = match law {
                Law::Qsemicircular => moments_cf(max_n).as_slice().to_vec(),
                Law::Freepoisson => poisson_moments(max_n).as_slice().to_vec(),
            };
            let rows = indices(law, 0, max_n)
                .into_iter()
                .map(|n| Row {
                    n,
                    m: v(&m[n]),
                    ..Row::default()
                })
                .collect();
            (law, rows)
        }
        Command::Cumulants => {
            let rows = match law {
                Law::Qsemicircular => {
                    let t = cumulants_log(max_n)?;
                    indices(law, 1, max_n)
                        .into_iter()
                        .map(|n| Row {
                            n,
                            k: v(t.k(n)),
                            k_tilde: v(t.k_tilde(n)),
                            ..Row::default()
                        })
                        .collect()
                }
                Law::Freepoisson => {
                    let k = poisson_cumulants_log(max_n)?;
                    (1..=max_n)
                        .map(|n| Row {
                            n,
                            k: v(&k[n]),
                            ..Row::default()
                        })
                        .collect()
                }
            };
            (law, rows)
        }
        Command::FreeCumulants => {
            let rows = match law {
                Law::Qsemicircular => {
                    let c = free_cumulants_recursion(max_n)?;
                    indices(law, 1, max_n)
                        .into_iter()
                        .map(|n| Row {
                            n,
                            c: v(&c[n]),
                            ..Row::default()
                        })
                        .collect()
                }
                // all free cumulants of the free Poisson law equal λ
                Law::Freepoisson => (1..=max_n)
                    .map(|n| Row {
                        n,
                        c: v(&IntPoly::x()),
                        ..Row::default()
                    })
                    .collect(),
            };
            (law, rows)
        }
        Command::Poisson => {
            let m = poisson_moments(max_n);
            let k = poisson_cumulants_log(max_n)?;
            let rows = (1..=max_n)
                .map(|n| Row {
                    n,
                    m: v(m.get(n)),
                    k: v(&k[n]),
                    ..Row::default()
                })
                .collect();
            (Law::Freepoisson, rows)
        }
        Command::Tutte { graph: Some(path) } => {
            let g = read_graph(path)?;
            let t = TutteEngine::new()
                .tutte_1q(&g)
                .map_err(|e| Failure(2, e.to_string()))?;
            let out = GraphValue {
                graph: g,
                eval_at: at,
                tutte_1q: Value::new(&t, at),
            };
            return Ok((out.render(cli.format), 0));
        }
        Command::Tutte { graph: None } => {
            let rows = match law {
                Law::Qsemicircular => {
                    warn_above(max_n, SAFE_MATCHING_N, "the Tutte route");
                    let k = cumulants_tutte(max_n)?;
                    indices(law, 1, max_n)
                        .into_iter()
                        .map(|n| Row {
                            n,
                            k_tilde: v(&k[n]),
                            ..Row::default()
                        })
                        .collect()
                }
                Law::Freepoisson => {
                    warn_above(max_n, SAFE_LATTICE_N, "the Tutte route");
                    let k = poisson_cumulants_tutte(max_n)?;
                    (1..=max_n)
                        .map(|n| Row {
                            n,
                            k: v(&k[n]),
                            ..Row::default()
                        })
                        .collect()
                }
            };
            (law, rows)
        }
        Command::Verify { lattice_max_n } => {
            let mut config = VerifyConfig::new(max_n, cli.seed);
            if let Some(l) = lattice_max_n {
                config.lattice_max_n = *l;
            }
            warn_above(config.max_n, SAFE_MATCHING_N, "matching identities");
            warn_above(config.lattice_max_n, SAFE_LATTICE_N, "lattice identities");
            if at.is_some() {
                eprintln!("qcumulant: warning: --eval-at is ignored by verify");
            }
            let report = verify_with(&config, &TutteEngine::new())?;
            let code = if report.passed { 0 } else { 1 };
            for r in report.failures() {
                eprintln!("qcumulant: {r}");
            }
            return Ok((render_report(&report, cli.format), code));
        }
    };
    let (law, rows) = rows;
    Ok((table(law, rows).render(cli.format), 0))
}

fn read_graph(path: &PathBuf) -> Result<Multigraph, Failure> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| text = s)
    };
    read.map_err(|e| Failure(2, format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}
