//! `mnpieri`: runs verification suites and exact computations.
//!
//! Option values are resolved in this order, first match wins: command-line
//! flag, `MNPIERI_*` environment variable, built-in default.

mod expr;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mnpieri::llt::{connectivity_report, gamma_ratio, llt_classic, llt_g};
use mnpieri::qt::QTRational;
use mnpieri::shapes::{Partition, SkewShape};
use mnpieri::stable::{pieri_rhs, validate_stable, verify_pieri_integer_slope_via, Route, StableExpansion};
use mnpieri::sym::{self, cache, macdonald_table, SymConfig};
use mnpieri::verify::{self, criterion, run_suite, Params, CRITERIA, DEFAULT_SEED, SUITES};
use num_integer::Integer;

#[derive(Parser)]
#[command(name = "mnpieri", version, about = "Exact ribbon Pieri rules, Macdonald polynomials and shuffle kernels")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
struct Global {
    /// Slope numerator.
    #[arg(long, global = true, env = "MNPIERI_M", allow_hyphen_values = true)]
    m: Option<i64>,
    /// Slope denominator.
    #[arg(long, global = true, env = "MNPIERI_N")]
    n: Option<usize>,
    #[arg(long, global = true, env = "MNPIERI_K")]
    k: Option<usize>,
    /// Size limit for scans.
    #[arg(long, global = true, env = "MNPIERI_MAX")]
    max: Option<usize>,
    /// Largest degree for which Macdonald tables may be built.
    #[arg(long, global = true, env = "MNPIERI_DEGREE_BOUND")]
    degree_bound: Option<usize>,
    /// Number of variables for LLT series.
    #[arg(long, global = true, env = "MNPIERI_VARS")]
    vars: Option<usize>,
    #[arg(long, global = true, env = "MNPIERI_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random trials per kernel for the randomized suites.
    #[arg(long, global = true, env = "MNPIERI_TRIALS", default_value_t = 20)]
    trials: usize,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true, env = "MNPIERI_THREADS")]
    threads: Option<usize>,
    #[arg(long, global = true, env = "MNPIERI_FORMAT", value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, env = "MNPIERI_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite.
    Verify { suite: String },
    /// Run acceptance criteria (all when none are named).
    Acceptance { ids: Vec<usize> },
    /// Evaluate an expression, e.g. `nabla(M[1])` or `E[1,1/2](shape [1,1]/[])`.
    Compute { expression: String },
    /// Manage the on-disk Macdonald cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
    /// LLT series, gamma ratio or collapse graph of a skew shape such as `[3,1]/[1]`.
    Llt {
        #[arg(value_enum)]
        action: LltAction,
        shape: String,
    },
    /// Expand e_k^{m/n} s^{m/n}_mu in the stable basis.
    Pieri {
        mu: String,
        /// Compare with the operator side (integer slopes only).
        #[arg(long)]
        check: bool,
    },
    /// Stable-basis expansions.
    Stable {
        #[command(subcommand)]
        action: StableAction,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum CacheAction {
    Build,
    Verify,
    Clear,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum LltAction {
    Series,
    Gamma,
    Collapse,
}

#[derive(Subcommand)]
enum StableAction {
    /// Check a JSON expansion against the defining conditions.
    Validate {
        #[arg(long)]
        file: PathBuf,
    },
    /// Print the integer-slope basis (slope `--m`) up to size `--max` as JSON.
    Expand,
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct UsageError(String);

/// Validated options shared by every command.
#[derive(Clone, Debug)]
struct RunConfig {
    g: Global,
}

impl RunConfig {
    fn new(g: Global) -> Result<Self> {
        if g.n == Some(0) {
            bail!(UsageError("--n must be positive".into()));
        }
        if let (Some(m), Some(n)) = (g.m, g.n) {
            if m.gcd(&(n as i64)) != 1 {
                bail!(UsageError(format!("slope {m}/{n} is not reduced: gcd(m, n) must be 1")));
            }
        }
        if g.threads == Some(0) {
            bail!(UsageError("--threads must be positive".into()));
        }
        Ok(RunConfig { g })
    }

    fn apply(&self) -> Result<()> {
        let mut c = SymConfig::default();
        if let Some(d) = self.g.degree_bound {
            c.degree_bound = d;
        }
        c.cache_dir = self.g.cache_dir.clone();
        sym::set_config(c);
        if let Some(t) = self.g.threads {
            rayon::ThreadPoolBuilder::new().num_threads(t).build_global().context("thread pool")?;
        }
        Ok(())
    }

    fn params(&self) -> Params {
        Params {
            m: self.g.m,
            n: self.g.n,
            k: self.g.k,
            max: self.g.max,
            vars: self.g.vars,
            trials: self.g.trials,
            seed: self.g.seed,
        }
    }

    fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
        v.ok_or_else(|| UsageError(format!("{flag} is required")).into())
    }

    fn json(&self) -> bool {
        self.g.format == Format::Json
    }
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn coeff_map<K: std::fmt::Display>(m: &BTreeMap<K, QTRational>) -> BTreeMap<String, String> {
    m.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse().map_err(|e| UsageError(format!("bad partition `{s}`: {e}")).into())
}

fn parse_shape(s: &str) -> Result<SkewShape> {
    s.parse().map_err(|e| UsageError(format!("bad shape `{s}`: {e}")).into())
}

/// Returns whether every check passed.
fn run(cli: Cli) -> Result<bool> {
    let cfg = RunConfig::new(cli.global)?;
    cfg.apply()?;
    match cli.command {
        Command::Verify { suite } => {
            if !SUITES.contains(&suite.as_str()) {
                bail!(UsageError(format!("unknown suite `{suite}`; expected one of {}", SUITES.join(", "))));
            }
            let report = run_suite(&suite, &cfg.params())?;
            if cfg.json() {
                print_json(&report)?;
            } else {
                for c in &report.cases {
                    match &c.witness {
                        Some(w) if !c.passed => println!("FAIL {}: {w}", c.name),
                        _ => println!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name),
                    }
                }
                let failed = report.failures().count();
                println!(
                    "{}: {} of {} cases pass (seed {})",
                    report.suite,
                    report.cases.len() - failed,
                    report.cases.len(),
                    report.seed
                );
            }
            Ok(report.passed())
        }
        Command::Acceptance { ids } => {
            let ids: Vec<usize> = if ids.is_empty() { (1..=CRITERIA).collect() } else { ids };
            let mut all = true;
            let mut out = vec![];
            for id in ids {
                let c = criterion(id).map_err(|e| match e {
                    verify::VerifyError::UnknownCriterion(_) => UsageError(e.to_string()).into(),
                    e => anyhow::Error::from(e),
                })?;
                all &= c.passed();
                if cfg.json() {
                    out.push(c);
                } else {
                    println!("{}", c.summary());
                }
            }
            if cfg.json() {
                print_json(&out)?;
            }
            Ok(all)
        }
        Command::Compute { expression } => {
            let v = expr::evaluate(&expression)?;
            if cfg.json() {
                print_json(&serde_json::json!({"expression": expression, "value": v.to_json()}))?;
            } else {
                println!("{v}");
            }
            Ok(true)
        }
        Command::Cache { action } => {
            let dir = cfg.g.cache_dir.clone().ok_or_else(|| UsageError("--cache-dir is required".into()))?;
            match action {
                CacheAction::Build => {
                    let top = sym::config().degree_bound;
                    for d in 1..=top {
                        macdonald_table(d)?;
                    }
                    println!("built degrees 1..={top} in {}", cache::cache_path(&dir).display());
                    Ok(true)
                }
                CacheAction::Verify => {
                    let status = cache::verify(&dir)?;
                    for (d, ok) in &status {
                        println!("degree {d}: {}", if *ok { "ok" } else { "checksum mismatch" });
                    }
                    if let Some((d, _)) = status.iter().find(|(_, ok)| !ok) {
                        bail!("cache corrupt: checksum mismatch for degree {d}");
                    }
                    Ok(true)
                }
                CacheAction::Clear => {
                    cache::clear(&dir)?;
                    println!("cleared {}", cache::cache_path(&dir).display());
                    Ok(true)
                }
            }
        }
        Command::Llt { action, shape } => {
            let sh = parse_shape(&shape)?;
            let n = RunConfig::need(cfg.g.n, "--n")?;
            let vars = cfg.g.vars.unwrap_or(3);
            match action {
                LltAction::Series => {
                    let s = match cfg.g.m {
                        Some(m) => llt_g(&sh, n, m, vars)?,
                        None => llt_classic(&sh, n, vars)?,
                    };
                    if cfg.json() {
                        print_json(&s.to_json())?;
                    } else {
                        for (nu, c) in &s.coeffs {
                            println!("x^{nu:?}: {c}");
                        }
                    }
                    Ok(true)
                }
                LltAction::Gamma => {
                    let m = RunConfig::need(cfg.g.m, "--m")?;
                    match gamma_ratio(&sh, n, m) {
                        Ok(g) => {
                            let same = llt_g(&sh, n, m, vars)?.coeffs == llt_classic(&sh, n, vars)?.scale(&g);
                            if cfg.json() {
                                print_json(
                                    &serde_json::json!({"shape": sh.to_string(), "gamma": g.to_string(), "factorizes": same}),
                                )?;
                            } else {
                                println!("gamma = {g}");
                                println!("G = gamma * classic: {same}");
                            }
                            Ok(same)
                        }
                        Err(mnpieri::llt::LltError::NonConstantRatio { first, other }) => {
                            println!("gamma is not constant on {sh}: {first} vs {other}");
                            Ok(false)
                        }
                        Err(e) => Err(e.into()),
                    }
                }
                LltAction::Collapse => {
                    let ms = cfg.g.m.map_or(vec![1], |m| vec![m]);
                    let r = connectivity_report(&sh, n, &ms)?;
                    if cfg.json() {
                        print_json(&r)?;
                    } else {
                        println!(
                            "tilings {} edges {} components {} minimal found {} edges ok {}",
                            r.tilings, r.edges, r.components, r.minimal_found, r.edges_ok
                        );
                    }
                    Ok(r.passed())
                }
            }
        }
        Command::Pieri { mu, check } => {
            let mu = parse_partition(&mu)?;
            let k = RunConfig::need(cfg.g.k, "--k")?;
            let m = RunConfig::need(cfg.g.m, "--m")?;
            let n = cfg.g.n.unwrap_or(1);
            let rhs = pieri_rhs(&mu, k, m, n)?;
            if cfg.json() {
                print_json(
                    &serde_json::json!({"mu": mu.to_string(), "k": k, "slope": [m, n], "coeffs": coeff_map(&rhs)}),
                )?;
            } else {
                for (l, c) in &rhs {
                    println!("{l}: {c}");
                }
            }
            if check {
                if n != 1 {
                    bail!(UsageError("--check needs an integer slope (--n 1)".into()));
                }
                let kernel = verify_pieri_integer_slope_via(&mu, k, m, Route::Kernel)?;
                let nab = verify_pieri_integer_slope_via(&mu, k, m, Route::Nabla)?;
                eprintln!("kernel route: {kernel}, nabla route: {nab}");
                return Ok(kernel && nab);
            }
            Ok(true)
        }
        Command::Stable { action } => match action {
            StableAction::Validate { file } => {
                let text = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
                let e = StableExpansion::from_json(&text)?;
                let r = validate_stable(&e);
                if cfg.json() {
                    print_json(&r)?;
                } else {
                    let bad: Vec<_> = r.failures().collect();
                    for c in &bad {
                        println!("FAIL lambda={:?} mu={:?} coeff={}: {c:?}", c.lambda, c.mu, c.coeff);
                    }
                    println!("{} of {} entries pass", r.checks.len() - bad.len(), r.checks.len());
                }
                Ok(r.passed())
            }
            StableAction::Expand => {
                let m = RunConfig::need(cfg.g.m, "--m")?;
                let e = StableExpansion::integer_slope(m, cfg.g.max.unwrap_or(4))?;
                println!("{}", e.to_json());
                Ok(true)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
