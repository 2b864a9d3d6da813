use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hall_littlewood::bt_word_action;
use lr_engine::{extremal_lr, pieri_column, Expr, LrError, Side};
use serde_json::{json, Value};
use shapes::{gen_lr_coefficient, kostka_foulkes, lr_coefficient, GenPartition, Partition};
use thiserror::Error;

use crate::output::render_table;
use crate::suites::{run_suite, SuiteConfig, SUITES};

/// Result of one invocation: exit code and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("parse error at {token:?}: {msg}")]
    Parse { token: String, msg: String },
    #[error("{0}")]
    Level(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Level(_) => 3,
            CliError::Other(_) => 1,
        }
    }
}

impl From<LrError> for CliError {
    fn from(e: LrError) -> Self {
        match e {
            LrError::Parse { token, msg } => CliError::Parse { token, msg },
            LrError::MixedLevel | LrError::NegativeLevel(_) => CliError::Level(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "crystal-lr", version, about = "Extremal crystal LR rules, Grothendieck ring actions and verification suites")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Worker threads; CRYSTAL_LR_THREADS takes precedence.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Index margin added around default windows.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u32))]
    margin: u32,
    /// Truncation order in t.
    #[arg(long = "T", global = true)]
    t: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c^lambda_{mu nu}.
    Lr { lambda: String, mu: String, nu: String },
    /// LR coefficient for generalized partitions, l(lambda) = l(mu) + l(nu).
    Genlr {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
        #[arg(allow_hyphen_values = true)]
        nu: String,
    },
    /// Kostka-Foulkes polynomial K_{lambda mu}(t).
    KostkaFoulkes {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// Decompose a tensor expression such as "B(1,0) * Bmn(1;) * Bcol(2)".
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Highest-weight window "lo,hi".
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Pieri rule for B(Lambda_lambda) x B_(1^a), or its dual with --dual.
    Pieri {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        a: usize,
        #[arg(long)]
        dual: bool,
    },
    /// (B_{mu,nu} x B(Lambda_lambda)) x (B_{sigma,tau} x B(Lambda_rho)).
    ExtremalLr {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, default_value = "")]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
        #[arg(long, default_value = "")]
        sigma: String,
        #[arg(long, default_value = "")]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Hall-Littlewood vertex operators b_{mu_1} ... b_{mu_n} applied to 1.
    HlAct {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        /// Smaller grids.
        #[arg(long)]
        quick: bool,
    },
}

fn ints(s: &str) -> Result<Vec<i64>, CliError> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    if t.is_empty() || t == "0" {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim().parse::<i64>().map_err(|_| CliError::Parse { token: x.trim().to_string(), msg: "not an integer".into() })
        })
        .collect()
}

fn partition(s: &str) -> Result<Partition, CliError> {
    Partition::from_i64(&ints(s)?).map_err(|e| CliError::Parse { token: s.to_string(), msg: e.to_string() })
}

fn gen_partition(s: &str) -> Result<GenPartition, CliError> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let v: Result<Vec<i64>, CliError> = if t.is_empty() {
        Ok(Vec::new())
    } else {
        t.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| CliError::Parse { token: x.trim().to_string(), msg: "not an integer".into() }))
            .collect()
    };
    GenPartition::new(v?).map_err(|e| CliError::Parse { token: s.to_string(), msg: e.to_string() })
}

fn window(s: &Option<String>, default: (i64, i64)) -> Result<(i64, i64), CliError> {
    let Some(s) = s else { return Ok(default) };
    let v = ints(s)?;
    match v.as_slice() {
        [lo, hi] if lo <= hi => Ok((*lo, *hi)),
        _ => Err(CliError::Parse { token: s.clone(), msg: "expected lo,hi with lo <= hi".into() }),
    }
}

struct Emitted {
    value: Value,
    code: i32,
    diagnostics: String,
}

fn ok(value: Value) -> Result<Emitted, CliError> {
    Ok(Emitted { value, code: 0, diagnostics: String::new() })
}

fn execute(cli: &Cli) -> Result<Emitted, CliError> {
    let margin = cli.margin as i64;
    match &cli.command {
        Command::Lr { lambda, mu, nu } => {
            let c = lr_coefficient(&partition(lambda)?, &partition(mu)?, &partition(nu)?);
            ok(json!({ "c": c }))
        }
        Command::Genlr { lambda, mu, nu } => {
            let c = gen_lr_coefficient(&gen_partition(lambda)?, &gen_partition(mu)?, &gen_partition(nu)?)
                .map_err(|e| CliError::Other(e.to_string()))?;
            ok(json!({ "c": c }))
        }
        Command::KostkaFoulkes { lambda, mu } => {
            let k = kostka_foulkes(&gen_partition(lambda)?, &gen_partition(mu)?).map_err(|e| CliError::Other(e.to_string()))?;
            ok(json!({ "tpoly": k }))
        }
        Command::Decompose { expr, window: w } => {
            let e: Expr = expr.parse()?;
            let entries = e.hw_entries();
            let slack = e.boxes() as i64 + margin;
            let lo = entries.iter().copied().min().unwrap_or(0) - slack;
            let hi = entries.iter().copied().max().unwrap_or(0) + slack;
            let (lo, hi) = window(w, (lo, hi))?;
            let d = e.decompose(lo, hi)?;
            Ok(Emitted { value: serde_json::to_value(&d).unwrap(), code: 0, diagnostics: format!("window [{lo},{hi}]\n") })
        }
        Command::Pieri { lambda, a, dual } => {
            let side = if *dual { Side::Dual } else { Side::B };
            ok(serde_json::to_value(pieri_column(&gen_partition(lambda)?, *a, side)).unwrap())
        }
        Command::ExtremalLr { lambda, mu, nu, rho, sigma, tau, window: w } => {
            let (lam, rho) = (gen_partition(lambda)?, gen_partition(rho)?);
            let (mu, nu, sigma, tau) = (partition(mu)?, partition(nu)?, partition(sigma)?, partition(tau)?);
            let all: Vec<i64> = lam.parts().iter().chain(rho.parts()).copied().collect();
            let lo = all.iter().copied().min().unwrap_or(0) - tau.size() as i64 - margin;
            let hi = all.iter().copied().max().unwrap_or(0) + sigma.size() as i64 + margin;
            let (lo, hi) = window(w, (lo, hi))?;
            let d = extremal_lr(&lam, &mu, &nu, &rho, &sigma, &tau, lo, hi);
            Ok(Emitted { value: serde_json::to_value(&d).unwrap(), code: 0, diagnostics: format!("window [{lo},{hi}]\n") })
        }
        Command::HlAct { mu } => {
            let mu = gen_partition(mu)?;
            let n = mu.len();
            let base = mu.last().unwrap_or(0).min(0);
            let exact = mu.parts().iter().enumerate().map(|(i, x)| i as i64 * (x - base)).sum::<i64>() as u32;
            let t = cli.t.unwrap_or(exact);
            let action = bt_word_action(mu.parts(), t);
            let terms = action.schur_terms(n).map_err(|e| CliError::Other(e.to_string()))?;
            ok(json!({ "basis": "z-schur", "mu": mu, "T": t, "terms": terms }))
        }
        Command::Verify { suite, quick } => {
            let cfg = SuiteConfig { seed: cli.seed, quick: *quick };
            let start = Instant::now();
            let Some(report) = run_suite(suite, &cfg) else {
                let names: Vec<&str> = SUITES.iter().map(|(n, _)| *n).chain(["all"]).collect();
                return Err(CliError::Parse { token: suite.clone(), msg: format!("unknown suite; known: {}", names.join(", ")) });
            };
            let mut diagnostics = String::new();
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                diagnostics.push_str(&format!(
                    "criterion {} {} {status} checked={} failures={} {:.2}s\n",
                    c.criterion,
                    c.name,
                    c.checked,
                    c.failures,
                    c.elapsed.as_secs_f64()
                ));
            }
            diagnostics.push_str(&format!("total {:.2}s\n", start.elapsed().as_secs_f64()));
            let code = if report.passed { 0 } else { 1 };
            Ok(Emitted { value: serde_json::to_value(&report).unwrap(), code, diagnostics })
        }
    }
}

fn thread_count(cli: &Cli) -> Result<Option<usize>, CliError> {
    match std::env::var("CRYSTAL_LR_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| CliError::Parse { token: v.clone(), msg: "CRYSTAL_LR_THREADS is not a count".into() }),
        Err(_) => Ok(cli.threads),
    }
}

/// Parse `args` (program name first) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let result = thread_count(&cli).and_then(|threads| match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Other(e.to_string()))
            .and_then(|pool| pool.install(|| execute(&cli))),
        None => execute(&cli),
    });
    match result {
        Ok(em) => {
            let stdout = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string(&em.value).unwrap()),
                Format::Table => render_table(&em.value),
            };
            Outcome { code: em.code, stdout, stderr: em.diagnostics }
        }
        Err(e) => Outcome { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
