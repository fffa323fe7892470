//! The `qverify` command line: `list`, `check` and `suite`.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for
//! usage, configuration and domain errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::{
    catalog, default_instances, instantiate, lookup, random_instances, run_all, sort_reports, Backend, BoundIdentity,
    ParamValue, Params, RunOptions, Slot, VerificationReport,
};
use crate::numeric::{DEFAULT_DIGITS, DEFAULT_TOL};
use crate::series::DEFAULT_ORDER;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const MIN_ORDER: usize = 5;
pub const MIN_DIGITS: u32 = 30;
pub const MIN_TOL: f64 = 1e-40;

#[derive(Parser, Debug)]
#[command(name = "qverify", version, about = "Verify q-series identities by exact expansion and high-precision evaluation")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct GlobalArgs {
    /// Truncation order N for exact checks.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Working precision in decimal digits for numeric checks.
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Largest relative discrepancy a numeric check may show.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Glob on identity ids, e.g. 'mseq*'.
    #[arg(long, global = true)]
    filter: Option<String>,
    /// JSON file with defaults for these options; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for running checks.
    #[arg(long, global = true)]
    parallelism: Option<usize>,
    /// Seed for randomly drawn instances.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Perturb the right side of this identity (repeatable).
    #[arg(long = "inject-fault", value_name = "ID", global = true)]
    faults: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the catalog.
    List,
    /// Check one identity at its default instances or at given parameters.
    Check(CheckArgs),
    /// Check every default instance of every (filtered) identity.
    Suite(SuiteArgs),
}

#[derive(Args, Debug)]
struct CheckArgs {
    id: String,
    #[arg(long, value_enum)]
    backend: Option<BackendArg>,
    /// Run only this default instance (0-based).
    #[arg(long)]
    instance: Option<usize>,
    /// Run this many random instances instead of the defaults.
    #[arg(long)]
    random: Option<usize>,
    /// Parameter `name=value`; `--name value` is accepted as well.
    #[arg(long = "param", short = 'p', value_name = "NAME=VALUE")]
    params: Vec<String>,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    /// Also run this many random instances of each entry with a generator.
    #[arg(long)]
    random: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BackendArg {
    Exact,
    Numeric,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Numeric => Backend::Numeric,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Human,
    Json,
}

/// Settings shared by every subcommand, after merging the config file
/// and the flags.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub order: usize,
    pub precision: u32,
    pub tol: f64,
    pub filter: Option<String>,
    pub parallelism: Option<usize>,
    pub seed: u64,
    pub format: OutputFormat,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            order: DEFAULT_ORDER,
            precision: DEFAULT_DIGITS,
            tol: DEFAULT_TOL,
            filter: None,
            parallelism: None,
            seed: 0,
            format: OutputFormat::Human,
        }
    }
}

impl SuiteConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    pub fn validate(&self) -> Result<()> {
        if self.order < MIN_ORDER {
            return Err(Error::Config(format!("order must be at least {MIN_ORDER}")));
        }
        if self.precision < MIN_DIGITS {
            return Err(Error::Config(format!("precision must be at least {MIN_DIGITS} digits")));
        }
        if !(self.tol >= MIN_TOL && self.tol.is_finite()) {
            return Err(Error::Config(format!("tol must be a finite number at least {MIN_TOL:e}")));
        }
        if self.parallelism == Some(0) {
            return Err(Error::Config("parallelism must be at least 1".into()));
        }
        if let Some(f) = &self.filter {
            glob::Pattern::new(f).map_err(|e| Error::Config(format!("bad filter '{f}': {e}")))?;
        }
        Ok(())
    }

    fn matcher(&self) -> impl Fn(&str) -> bool {
        let pat = self.filter.as_deref().map(|f| glob::Pattern::new(f).expect("validated"));
        move |id| pat.as_ref().is_none_or(|p| p.matches(id))
    }

    fn run_options(&self, faults: &[String]) -> RunOptions {
        RunOptions {
            order: self.order,
            digits: self.precision,
            tol: self.tol,
            faults: faults.to_vec(),
        }
    }
}

fn merge(g: &GlobalArgs) -> Result<SuiteConfig> {
    let mut c = match &g.config {
        Some(p) => SuiteConfig::from_file(p)?,
        None => SuiteConfig::default(),
    };
    if let Some(v) = g.order {
        c.order = v;
    }
    if let Some(v) = g.precision {
        c.precision = v;
    }
    if let Some(v) = g.tol {
        c.tol = v;
    }
    if g.filter.is_some() {
        c.filter = g.filter.clone();
    }
    if g.parallelism.is_some() {
        c.parallelism = g.parallelism;
    }
    if let Some(v) = g.seed {
        c.seed = v;
    }
    if g.json {
        c.format = OutputFormat::Json;
    }
    c.validate()?;
    Ok(c)
}

const KNOWN_FLAGS: [&str; 15] = [
    "order", "precision", "tol", "json", "filter", "config", "parallelism", "seed", "inject-fault", "backend",
    "instance", "random", "param", "help", "version",
];

/// Rewrites `check ID --k 3` into `check ID --param k=3` so identity
/// parameters can be given as plain flags.
fn rewrite_param_flags(args: Vec<OsString>) -> Vec<OsString> {
    let Some(pos) = args.iter().position(|a| a == "check") else {
        return args;
    };
    let mut out: Vec<OsString> = args[..=pos].to_vec();
    let mut rest = args[pos + 1..].iter();
    while let Some(a) = rest.next() {
        let s = a.to_string_lossy();
        let Some(flag) = s.strip_prefix("--") else {
            out.push(a.clone());
            continue;
        };
        let (name, inline) = match flag.split_once('=') {
            Some((n, v)) => (n.to_string(), Some(v.to_string())),
            None => (flag.to_string(), None),
        };
        if name.is_empty() || KNOWN_FLAGS.contains(&name.as_str()) {
            out.push(a.clone());
            continue;
        }
        let value = match inline {
            Some(v) => v,
            None => match rest.next() {
                Some(v) => v.to_string_lossy().into_owned(),
                None => String::new(),
            },
        };
        out.push("--param".into());
        out.push(format!("{name}={value}").into());
    }
    out
}

/// Runs the command line and returns the process exit code.
pub fn run(args: impl IntoIterator<Item = impl Into<OsString>>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args = rewrite_param_flags(args.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = merge(&cli.global).and_then(|cfg| match &cli.command {
        Command::List => cmd_list(&cfg, out),
        Command::Check(a) => cmd_check(&cfg, a, &cli.global.faults, out),
        Command::Suite(a) => cmd_suite(&cfg, a, &cli.global.faults, out),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Serialize)]
struct ListRow {
    id: &'static str,
    description: &'static str,
    location: &'static str,
    quote: &'static str,
    backends: Vec<Backend>,
    params: Vec<Slot>,
    instances: usize,
}

fn cmd_list(cfg: &SuiteConfig, out: &mut dyn Write) -> Result<i32> {
    let keep = cfg.matcher();
    let rows: Vec<ListRow> = catalog()
        .iter()
        .filter(|e| keep(e.id))
        .map(|e| ListRow {
            id: e.id,
            description: e.description,
            location: e.anchor.location,
            quote: e.anchor.quote,
            backends: e.backends(),
            params: e.slots.clone(),
            instances: e.instances.len(),
        })
        .collect();
    match cfg.format {
        OutputFormat::Json => write_json(out, &rows)?,
        OutputFormat::Human => {
            for r in &rows {
                let backends: Vec<String> = r.backends.iter().map(|b| b.to_string()).collect();
                let slots: Vec<&str> = r.params.iter().map(|s| s.name).collect();
                emit(
                    out,
                    &format!(
                        "{:<24} {:<14} {:>2}  {:<22} {}",
                        r.id,
                        backends.join(","),
                        r.instances,
                        format!("({})", slots.join(", ")),
                        r.location
                    ),
                )?;
            }
        }
    }
    Ok(EXIT_PASS)
}

fn parse_params(id: &str, raw: &[String]) -> Result<Params> {
    let entry = lookup(id)?;
    let mut p = Params::new();
    for item in raw {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidParam(format!("expected NAME=VALUE, got '{item}'")))?;
        let slot = entry
            .slot(name)
            .ok_or_else(|| Error::InvalidParam(format!("identity '{id}' has no parameter '{name}'")))?;
        p.insert(name.to_string(), ParamValue::parse(slot.kind, value)?);
    }
    Ok(p)
}

fn cmd_check(cfg: &SuiteConfig, a: &CheckArgs, faults: &[String], out: &mut dyn Write) -> Result<i32> {
    let entry = lookup(&a.id)?;
    let backends: Vec<Backend> = match a.backend {
        Some(b) => {
            let b = Backend::from(b);
            if !entry.supports(b) {
                return Err(Error::UnsupportedBackend {
                    id: a.id.clone(),
                    backend: b.to_string(),
                });
            }
            vec![b]
        }
        None => entry.backends(),
    };
    let bounds: Vec<BoundIdentity> = if !a.params.is_empty() {
        let given = parse_params(&a.id, &a.params)?;
        let mut bound = Vec::new();
        let mut first_err = None;
        for b in &backends {
            match instantiate(&a.id, &given, *b) {
                Ok(x) => bound.push(x),
                Err(e) => {
                    first_err.get_or_insert(e);
                }
            }
        }
        if bound.is_empty() {
            return Err(first_err.expect("at least one backend"));
        }
        bound
    } else if let Some(n) = a.random {
        let v: Vec<_> = random_instances(|id| id == a.id, cfg.seed, n)
            .into_iter()
            .filter(|b| backends.contains(&b.backend))
            .collect();
        if v.is_empty() {
            return Err(Error::InvalidParam(format!("identity '{}' has no random instance generator", a.id)));
        }
        v
    } else {
        let v: Vec<_> = default_instances(|id| id == a.id)
            .into_iter()
            .filter(|b| backends.contains(&b.backend) && a.instance.is_none_or(|i| b.instance == i))
            .collect();
        if v.is_empty() {
            return Err(Error::InvalidParam(format!("identity '{}' has no such default instance", a.id)));
        }
        v
    };
    let reports = execute(cfg, &bounds, faults)?;
    finish(cfg, reports, out)
}

fn cmd_suite(cfg: &SuiteConfig, a: &SuiteArgs, faults: &[String], out: &mut dyn Write) -> Result<i32> {
    let keep = cfg.matcher();
    let mut bounds = default_instances(&keep);
    if let Some(n) = a.random {
        bounds.extend(random_instances(&keep, cfg.seed, n));
    }
    if bounds.is_empty() {
        return Err(Error::Config("the filter matches no identity".into()));
    }
    let reports = execute(cfg, &bounds, faults)?;
    finish(cfg, reports, out)
}

fn execute(cfg: &SuiteConfig, bounds: &[BoundIdentity], faults: &[String]) -> Result<Vec<VerificationReport>> {
    for f in faults {
        lookup(f)?;
    }
    let opts = cfg.run_options(faults);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.parallelism {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    Ok(pool.install(|| run_all(bounds, &opts)))
}

fn finish(cfg: &SuiteConfig, mut reports: Vec<VerificationReport>, out: &mut dyn Write) -> Result<i32> {
    sort_reports(&mut reports);
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let code = if failed == 0 { EXIT_PASS } else { EXIT_FAIL };
    match cfg.format {
        OutputFormat::Json => write_json(out, &reports)?,
        OutputFormat::Human => {
            let total = reports.len();
            for r in &reports {
                emit(out, &r.to_string())?;
            }
            emit(out, &format!("{} of {total} checks passed", total - failed))?;
            if failed > 0 {
                let mut ids: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.id.as_str()).collect();
                ids.dedup();
                emit(out, &format!("failing: {}", ids.join(", ")))?;
            }
        }
    }
    Ok(code)
}

fn emit(out: &mut dyn Write, line: &str) -> Result<()> {
    match writeln!(out, "{line}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::Config(format!("write failed: {e}"))),
        _ => Ok(()),
    }
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Config(e.to_string()))?;
    emit(out, &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn os(v: &[&str]) -> Vec<OsString> {
        v.iter().map(OsString::from).collect()
    }

    #[test]
    fn plain_flags_become_params() {
        let got = rewrite_param_flags(os(&["qverify", "check", "c33", "--k", "3", "--j=2", "--order", "9"]));
        assert_eq!(
            got,
            os(&["qverify", "check", "c33", "--param", "k=3", "--param", "j=2", "--order", "9"])
        );
    }

    #[test]
    fn guards_reject_meaningless_runs() {
        let mut c = SuiteConfig::default();
        assert!(c.validate().is_ok());
        c.order = 4;
        assert!(c.validate().is_err());
        c = SuiteConfig { tol: 1e-41, ..SuiteConfig::default() };
        assert!(c.validate().is_err());
        c = SuiteConfig { precision: 29, ..SuiteConfig::default() };
        assert!(c.validate().is_err());
    }
}
