//! `dp3`: coefficient tables, conjecture audits and numerical comparisons.
//!
//! Exit codes: 0 pass, 1 audit or evaluation failure, 2 usage error.

mod config;
mod numeric;
mod suites;

use clap::{Parser, Subcommand};
use config::{Command, Format, FormArg, RunConfig, Suite};
use dp3::coeffs::{decompose, write_table, CoeffTable};
use serde_json::json;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

/// Thread count for `verify --suite all`; suites run concurrently but print in order.
const THREADS_VAR: &str = "DP3_THREADS";

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Audit(String),
    Run(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "dp3", version, about = "Odd holomorphic solutions of the degenerate third Painleve equation")]
struct Cli {
    /// Write the run configuration as JSON to this file.
    #[arg(long, global = true)]
    save_config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Compute u_2, ..., u_2N with the structural report.
    Coeffs {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run conjecture audits.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Audit depth in n; each suite has its own default.
        #[arg(long)]
        n: Option<usize>,
        /// Secondary depth: k range for genfun-a, junior residue depth for residues.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the solution at one point.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Purely imaginary a = i alpha.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the solution with its large-tau asymptotics on [t1, t2].
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 5.0)]
        t1: f64,
        #[arg(long, default_value_t = 40.0)]
        t2: f64,
        #[arg(long, default_value_t = 351)]
        samples: usize,
        #[arg(long, value_enum, default_value = "natural")]
        form: FormArg,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rerun a saved configuration.
    Replay { config: PathBuf },
}

fn to_config(cmd: Cmd) -> Result<RunConfig, Failure> {
    Ok(match cmd {
        Cmd::Coeffs { n, format, out } => RunConfig { command: Command::Coeffs { n, format }, tol: None, out },
        Cmd::Verify { suite, n, depth, out } => RunConfig { command: Command::Verify { suite, n, depth }, tol: None, out },
        Cmd::Eval { a, alpha, b, tau, tol, out } => {
            let a = numeric::a_from(a.as_deref(), alpha.as_deref())?;
            RunConfig { command: Command::Eval { a, b, tau }, tol, out }
        }
        Cmd::Compare { a, alpha, b, t1, t2, samples, form, tol, format, out } => {
            let a = numeric::a_from(a.as_deref(), alpha.as_deref())?;
            RunConfig { command: Command::Compare { a, b, t1, t2, samples, form, format }, tol, out }
        }
        Cmd::Replay { config } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Failure::Usage(format!("{}: {e}", config.display())))?;
            serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", config.display())))?
        }
    })
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn run(cfg: &RunConfig) -> Result<(), Failure> {
    let mut out = sink(cfg.out.as_deref())?;
    let result = match &cfg.command {
        Command::Coeffs { n, format } => coeffs(*n, *format, &mut out),
        Command::Verify { suite, n, depth } => verify(*suite, *n, *depth, &mut out),
        Command::Eval { a, b, tau } => numeric::eval(a, b, tau, cfg.tol, &mut out),
        Command::Compare { a, b, t1, t2, samples, form, format } => {
            let args = numeric::CompareArgs {
                a,
                b,
                t1: *t1,
                t2: *t2,
                samples: *samples,
                form: *form,
                format: *format,
                tol: cfg.tol,
            };
            numeric::compare(&args, &mut out, &mut io::stderr())
        }
    };
    out.flush()?;
    result
}

fn coeffs<W: Write>(n: usize, format: Format, out: &mut W) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let table = CoeffTable::build(n);
    match format {
        Format::Text => write_table(&table, &mut *out)?,
        Format::Csv => {
            writeln!(out, "n,m,denominator,numerator")?;
            for (i, u) in table.entries().iter().enumerate() {
                let den: Vec<String> = u.den.iter().map(|(k, e)| format!("{k}^{e}")).collect();
                let num: Vec<String> = u.num.coeffs().iter().map(|c| c.to_string()).collect();
                let m = u.num.degree().unwrap_or(0);
                writeln!(out, "{},{m},{},{}", i + 1, den.join(" "), num.join(" "))?;
            }
        }
        Format::Json => {
            let entries: Vec<_> = table
                .entries()
                .iter()
                .enumerate()
                .map(|(i, u)| {
                    let d = decompose(&table, i + 1);
                    json!({
                        "n": i + 1,
                        "m": d.m,
                        "denominator": u.den.iter().map(|(k, e)| json!([k, e])).collect::<Vec<_>>(),
                        "numerator": u.num.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "matches_prediction": d.matches_prediction,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&json!({ "n_max": n, "entries": entries }))?)?;
        }
    }
    let checks = suites::run(Suite::Structure, n, None, &table_for_structure(&table, n));
    let structural: Vec<_> = checks.iter().skip(1).take(2).collect();
    match structural.iter().find(|c| !c.passed) {
        Some(c) => Err(Failure::Audit(format!("{}: first failure at {}", c.label, c.detail))),
        None => {
            eprintln!("structure: denominators, degrees and positivity as predicted for n <= {n}");
            Ok(())
        }
    }
}

/// The structure suite needs n >= 14 for its printed items; `coeffs` only
/// reports the sweeping checks, so a short table is padded.
fn table_for_structure(table: &CoeffTable, n: usize) -> CoeffTable {
    let mut t = table.clone();
    t.extend_to(suites::table_size(Suite::Structure, n));
    t
}

fn threads() -> Result<usize, Failure> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(1),
        Ok(v) => v
            .parse::<usize>()
            .ok()
            .filter(|&t| t >= 1)
            .ok_or_else(|| Failure::Usage(format!("{THREADS_VAR} must be a positive integer, got '{v}'"))),
    }
}

fn verify<W: Write>(suite: Suite, n: Option<usize>, depth: Option<usize>, out: &mut W) -> Result<(), Failure> {
    let members = suite.members();
    let depths: Vec<usize> = members.iter().map(|&s| n.unwrap_or_else(|| suites::default_n(s))).collect();
    let size = members.iter().zip(&depths).map(|(&s, &d)| suites::table_size(s, d)).max().unwrap_or(1);
    let start = Instant::now();
    let table = CoeffTable::build(size);
    let threads = threads()?;
    let mut results: Vec<Option<(Vec<suites::Check>, f64)>> = vec![None; members.len()];
    let jobs: Vec<(usize, Suite, usize)> = members.iter().zip(&depths).enumerate().map(|(i, (&s, &d))| (i, s, d)).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .chunks(jobs.len().div_ceil(threads))
            .map(|chunk| {
                let table = &table;
                scope.spawn(move || {
                    chunk
                        .iter()
                        .map(|&(i, s, d)| {
                            let t = Instant::now();
                            (i, suites::run(s, d, depth, table), t.elapsed().as_secs_f64())
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, c, t) in h.join().expect("suite thread panicked") {
                results[i] = Some((c, t));
            }
        }
    });
    let (mut passed, mut total) = (0, 0);
    for ((s, d), r) in members.iter().zip(&depths).zip(results) {
        let (checks, _) = r.expect("every suite ran");
        writeln!(out, "# suite {} (n = {d})", s.name())?;
        for c in &checks {
            total += 1;
            if c.passed {
                passed += 1;
                writeln!(out, "PASS {} [{}]", c.label, c.detail)?;
            } else {
                writeln!(out, "FAIL {}: {}", c.label, c.detail)?;
            }
        }
    }
    writeln!(out, "{passed}/{total} checks passed")?;
    eprintln!("verify finished in {:.1} s (table n <= {size})", start.elapsed().as_secs_f64());
    if passed == total {
        Ok(())
    } else {
        Err(Failure::Audit(format!("{} checks failed", total - passed)))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = to_config(cli.cmd).and_then(|cfg| {
        if let Some(p) = &cli.save_config {
            let text = serde_json::to_string_pretty(&cfg)?;
            std::fs::write(p, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
        }
        run(&cfg)
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Audit(m)) => {
            eprintln!("audit failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Run(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
