//! The `zetalab` command line: `eval`, `verify`, `scan` and `grid`.
//!
//! Exit codes: `0` success, `1` usage or domain error, `2` pole or
//! non-convergence, `3` symmetry violation, `4` I/O failure, `5` a
//! verification residual above `--threshold`.

mod cache;
mod dispatch;
mod params;
mod record;

pub use cache::{cache_key, Cache};
pub use dispatch::{build_cutoff, evaluate, strip_default, Selector, VerifyKind};
pub use params::{parse_complex, Cplx, ParamValue, Params, ParamsExt};
pub use record::{from_json_lines, read_csv, to_csv, to_json_lines, Meta, ResultRecord, VERSION};

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::Error;
use crate::funceq::verify;
use crate::numerics::QuadratureSpec;
use crate::zeta_classic::{find_zeros, hardy_z};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] Error),
    #[error("i/o: {0}")]
    Io(String),
    #[error("verification failed: max relative residual {max:e} exceeds {threshold:e}")]
    VerifyFailed { max: f64, threshold: f64 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::Numeric(Error::Domain(_)) => 1,
            Self::Numeric(Error::SymmetryViolation(_)) => 3,
            Self::Numeric(_) => 2,
            Self::Io(_) => 4,
            Self::VerifyFailed { .. } => 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "zetalab",
    version,
    about = "Regularized zeta-functions, functional-equation residuals and heat-kernel transforms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Absolute tolerance for integrals and series
    #[arg(long, global = true)]
    pub abs_tol: Option<f64>,
    /// Relative tolerance for integrals and series
    #[arg(long, global = true)]
    pub rel_tol: Option<f64>,
    /// Term budget for series
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, global = true, default_value = "json")]
    pub format: Format,
    /// Content-addressed result cache
    #[arg(long, global = true, env = "ZETALAB_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Record wall time in JSON output (breaks byte-identical reruns)
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point
    Eval(PointArgs),
    /// Check a functional equation over a grid of s
    Verify(VerifyArgs),
    /// Locate zeros of Hardy's Z on a t range
    Scan(ScanArgs),
    /// Evaluate one function over a cartesian parameter grid
    Grid(PointArgs),
}

/// Parameter flags. `grid` and `verify` take comma lists, and real flags
/// also take `start:stop:step`.
#[derive(Debug, Default, Args)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Real part of s (alternative to --s)
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<String>,
    /// Imaginary part of s (alternative to --s)
    #[arg(long = "s-im", allow_hyphen_values = true)]
    pub s_im: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    /// none, exp, exp-alpha, two-param, custom:gaussian-log, custom:asymmetric
    #[arg(long)]
    pub cutoff: Option<String>,
    /// quadrature, bessel-series or boundary-form
    #[arg(long)]
    pub repr: Option<String>,
    /// bare or completed (zeta-reg)
    #[arg(long)]
    pub form: Option<String>,
    /// bessel or quadrature (resolvent)
    #[arg(long)]
    pub route: Option<String>,
}

impl ParamArgs {
    /// Present flags as `(name, raw)` pairs, with `--sigma`/`--s-im` folded
    /// into `s`.
    fn raw(&self) -> Result<Vec<(&'static str, String)>, CliError> {
        let mut out = Vec::new();
        let fields = [
            ("s", &self.s),
            ("lambda", &self.lambda),
            ("alpha", &self.alpha),
            ("lambda1", &self.lambda1),
            ("lambda2", &self.lambda2),
            ("nu", &self.nu),
            ("x", &self.x),
            ("t", &self.t),
            ("r", &self.r),
            ("rho", &self.rho),
            ("d", &self.d),
            ("cutoff", &self.cutoff),
            ("repr", &self.repr),
            ("form", &self.form),
            ("route", &self.route),
        ];
        for (name, value) in fields {
            if let Some(v) = value {
                out.push((name, v.clone()));
            }
        }
        if self.sigma.is_some() || self.s_im.is_some() {
            if self.s.is_some() {
                return Err(CliError::Usage(
                    "--s cannot be combined with --sigma/--s-im".into(),
                ));
            }
            let axis = |name: &str, raw: &Option<String>| -> Result<Vec<f64>, CliError> {
                let raw = raw.as_deref().unwrap_or("0");
                params::parse_list(name, params::Kind::Real, raw)?
                    .into_iter()
                    .map(|v| match v {
                        ParamValue::Real(x) => Ok(x),
                        _ => Err(CliError::Usage(format!("--{name}: expected real values"))),
                    })
                    .collect()
            };
            let (re, im) = (axis("sigma", &self.sigma)?, axis("s-im", &self.s_im)?);
            let list: Vec<String> = re
                .iter()
                .flat_map(|a| im.iter().map(move |b| format!("{a}{b:+}i")))
                .collect();
            out.push(("s", list.join(",")));
        }
        Ok(out)
    }
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long = "fn", value_enum)]
    pub function: Selector,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub kind: VerifyKind,
    /// Named s grid; `strip-default` is {0.1,…,0.9} × {0, 5i, 14i}
    #[arg(long = "s-grid")]
    pub s_grid: Option<String>,
    /// Largest accepted relative residual
    #[arg(long, default_value_t = 1e-8)]
    pub threshold: f64,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Range `t_min:t_max`
    #[arg(long, allow_hyphen_values = true)]
    pub t: String,
    #[arg(long, default_value_t = 0.05)]
    pub step: f64,
}

/// A fully validated request.
#[derive(Debug, Clone)]
pub enum Request {
    Eval {
        selector: Selector,
        params: Params,
    },
    Verify {
        kind: VerifyKind,
        points: Vec<(Params, Complex64)>,
        threshold: f64,
    },
    Scan {
        t_min: f64,
        t_max: f64,
        step: f64,
    },
    Grid {
        selector: Selector,
        rows: Vec<Params>,
    },
}

/// Everything a run needs, checked before any computation starts.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub request: Request,
    pub quadrature: QuadratureSpec,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub timing: bool,
}

fn with_selector(mut p: Params, name: &str) -> Params {
    p.insert("fn".into(), ParamValue::Text(name.to_string()));
    p
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let base = QuadratureSpec::default();
        let quadrature = QuadratureSpec {
            abs_tol: cli.abs_tol.unwrap_or(base.abs_tol),
            rel_tol: cli.rel_tol.unwrap_or(base.rel_tol),
            max_terms: cli.max_terms.unwrap_or(base.max_terms),
            ..base
        };
        quadrature
            .validate()
            .map_err(|e| CliError::Usage(format!("--abs-tol/--rel-tol/--max-terms: {e}")))?;
        if cli.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        let request = match cli.command {
            Command::Eval(a) => {
                let name = a.function.name();
                let p = params::parse_point(&name, a.function.slots(), &a.params.raw()?)?;
                Request::Eval {
                    selector: a.function,
                    params: with_selector(p, &name),
                }
            }
            Command::Grid(a) => {
                let name = a.function.name();
                let rows = params::parse_grid(&name, a.function.slots(), &a.params.raw()?)?;
                Request::Grid {
                    selector: a.function,
                    rows: rows.into_iter().map(|p| with_selector(p, &name)).collect(),
                }
            }
            Command::Verify(a) => verify_request(a)?,
            Command::Scan(a) => {
                let bad = || {
                    CliError::Usage(format!(
                        "--t: expected t_min:t_max with t_min < t_max, got '{}'",
                        a.t
                    ))
                };
                let (lo, hi) = a.t.split_once(':').ok_or_else(bad)?;
                let (t_min, t_max): (f64, f64) = (
                    lo.parse().map_err(|_| bad())?,
                    hi.parse().map_err(|_| bad())?,
                );
                if !(t_min < t_max) {
                    return Err(bad());
                }
                if !(a.step > 0.0 && a.step <= 1.0) {
                    return Err(CliError::Usage(format!(
                        "--step must lie in (0, 1], got {}",
                        a.step
                    )));
                }
                Request::Scan {
                    t_min,
                    t_max,
                    step: a.step,
                }
            }
        };
        Ok(Self {
            request,
            quadrature,
            format: cli.format,
            out: cli.out,
            cache_dir: cli.cache_dir,
            jobs: cli.jobs,
            timing: cli.timing,
        })
    }
}

fn verify_request(a: VerifyArgs) -> Result<Request, CliError> {
    let name = a.kind.name();
    let mut raw = a.params.raw()?;
    let s_raw = raw
        .iter()
        .position(|(n, _)| *n == "s")
        .map(|k| raw.remove(k).1);
    let s_values: Vec<Complex64> = match (s_raw, a.s_grid.as_deref()) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "--s cannot be combined with --s-grid".into(),
            ))
        }
        (Some(list), None) => params::parse_list("s", params::Kind::Complex, &list)?
            .into_iter()
            .map(|v| match v {
                ParamValue::Complex(z) => z.into(),
                _ => unreachable!("complex slots parse to complex values"),
            })
            .collect(),
        (None, None) | (None, Some("strip-default")) => strip_default(),
        (None, Some(other)) => {
            return Err(CliError::Usage(format!(
                "--s-grid: the only named grid is strip-default, got '{other}'"
            )))
        }
    };
    if !(a.threshold > 0.0) {
        return Err(CliError::Usage("--threshold must be positive".into()));
    }
    let rows = params::parse_grid(&name, a.kind.slots(), &raw)?;
    let mut points = Vec::new();
    for row in rows {
        a.kind.build(&row)?;
        for &s in &s_values {
            let mut p = row.clone();
            p.insert("kind".into(), ParamValue::Text(name.clone()));
            p.insert("s".into(), ParamValue::Complex(s.into()));
            points.push((p, s));
        }
    }
    Ok(Request::Verify {
        kind: a.kind,
        points,
        threshold: a.threshold,
    })
}

/// Records plus the shape they should be rendered in.
#[derive(Debug)]
pub struct Outcome {
    pub records: Vec<ResultRecord>,
    pub scan: bool,
    /// Summary for stderr, if any.
    pub summary: Option<String>,
    /// Set when verification finished but a residual exceeded the threshold.
    pub failure: Option<CliError>,
}

struct Ctx<'a> {
    q: &'a QuadratureSpec,
    cache: Option<&'a Cache>,
    timing: bool,
}

impl Ctx<'_> {
    fn point(&self, selector: Selector, params: &Params) -> Result<ResultRecord, CliError> {
        let start = Instant::now();
        let compute = || {
            let r = evaluate(selector, params, self.q)?;
            if !r.value.is_finite() {
                return Err(CliError::Numeric(Error::NonConvergence {
                    estimate: r.value,
                    err_estimate: r.err_estimate,
                    evaluations: r.evaluations,
                }));
            }
            Ok(ResultRecord::new(
                params.clone(),
                r.value.into(),
                r.err_estimate,
                r.converged,
                self.q,
            ))
        };
        let mut record = match self.cache {
            Some(c) => c.get_or_compute(&cache_key(params, self.q), compute)?,
            None => compute()?,
        };
        self.stamp(&mut record, start);
        Ok(record)
    }

    fn stamp(&self, record: &mut ResultRecord, start: Instant) {
        record.meta.wall_ms = self.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    }
}

pub fn run_eval(
    cfg: &RunConfig,
    cache: Option<&Cache>,
    selector: Selector,
    params: &Params,
) -> Result<ResultRecord, CliError> {
    ctx(cfg, cache).point(selector, params)
}

pub fn run_grid(
    cfg: &RunConfig,
    cache: Option<&Cache>,
    selector: Selector,
    rows: &[Params],
) -> Result<Vec<ResultRecord>, CliError> {
    let c = ctx(cfg, cache);
    rows.par_iter().map(|p| c.point(selector, p)).collect()
}

pub fn run_verify(
    cfg: &RunConfig,
    kind: VerifyKind,
    points: &[(Params, Complex64)],
) -> Result<Vec<ResultRecord>, CliError> {
    let c = ctx(cfg, None);
    points
        .par_iter()
        .map(|(p, s)| {
            let start = Instant::now();
            let report = verify(&kind.build(p)?, *s, c.q)?;
            let mut r = ResultRecord::new(p.clone(), report.lhs.into(), f64::NAN, true, c.q);
            r.residuals = Some(BTreeMap::from([
                ("abs_residual".to_string(), report.abs_residual),
                ("rel_residual".to_string(), report.rel_residual),
                ("rhs_re".to_string(), report.rhs.re),
                ("rhs_im".to_string(), report.rhs.im),
            ]));
            c.stamp(&mut r, start);
            Ok(r)
        })
        .collect()
}

pub fn run_scan(
    cfg: &RunConfig,
    t_min: f64,
    t_max: f64,
    step: f64,
) -> Result<Vec<ResultRecord>, CliError> {
    let c = ctx(cfg, None);
    let start = Instant::now();
    let brackets = find_zeros(t_min, t_max, step, c.q)?;
    brackets
        .iter()
        .map(|b| {
            let z = hardy_z(b.refined_t, c.q)?;
            let input = Params::from([
                ("fn".to_string(), ParamValue::Text("hardy-z".into())),
                ("t_lo".to_string(), ParamValue::Real(b.t_lo)),
                ("t_hi".to_string(), ParamValue::Real(b.t_hi)),
                ("refined_t".to_string(), ParamValue::Real(b.refined_t)),
            ]);
            let mut r = ResultRecord::new(input, z.value.into(), z.err_estimate, z.converged, c.q);
            c.stamp(&mut r, start);
            Ok(r)
        })
        .collect()
}

fn ctx<'a>(cfg: &'a RunConfig, cache: Option<&'a Cache>) -> Ctx<'a> {
    Ctx {
        q: &cfg.quadrature,
        cache,
        timing: cfg.timing,
    }
}

/// Run a validated request on a pool of `cfg.jobs` workers.
pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let cache = cfg.cache_dir.as_ref().map(Cache::open).transpose()?;
    let work = || -> Result<Outcome, CliError> {
        let cache = cache.as_ref();
        let mut outcome = Outcome {
            records: Vec::new(),
            scan: false,
            summary: None,
            failure: None,
        };
        match &cfg.request {
            Request::Eval { selector, params } => outcome
                .records
                .push(run_eval(cfg, cache, *selector, params)?),
            Request::Grid { selector, rows } => {
                outcome.records = run_grid(cfg, cache, *selector, rows)?
            }
            Request::Scan { t_min, t_max, step } => {
                outcome.records = run_scan(cfg, *t_min, *t_max, *step)?;
                outcome.scan = true;
            }
            Request::Verify {
                kind,
                points,
                threshold,
            } => {
                let records = run_verify(cfg, *kind, points)?;
                let max = records
                    .iter()
                    .filter_map(|r| r.residuals.as_ref()?.get("rel_residual").copied())
                    .fold(0.0, f64::max);
                let pass = max < *threshold;
                outcome.summary = Some(format!(
                    "{}: {} points, max relative residual {max:.3e}, threshold {threshold:.1e}: {}",
                    kind.name(),
                    records.len(),
                    if pass { "PASS" } else { "FAIL" }
                ));
                if !pass {
                    outcome.failure = Some(CliError::VerifyFailed {
                        max,
                        threshold: *threshold,
                    });
                }
                outcome.records = records;
            }
        }
        Ok(outcome)
    };
    match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Io(e.to_string()))?
            .install(work),
        None => work(),
    }
}

/// Serialize an outcome in the requested format.
pub fn render(outcome: &Outcome, format: Format) -> Result<String, CliError> {
    match (format, outcome.scan) {
        (Format::Json, _) => Ok(to_json_lines(&outcome.records)),
        (Format::Csv, false) => to_csv(&outcome.records),
        (Format::Csv, true) => {
            let rows: Vec<Vec<f64>> = outcome
                .records
                .iter()
                .map(|r| {
                    let get = |k: &str| r.input.real(k).unwrap_or(f64::NAN);
                    vec![
                        get("t_lo"),
                        get("t_hi"),
                        get("refined_t"),
                        Complex64::from(r.value).norm(),
                    ]
                })
                .collect();
            record::float_table_csv(&["t_lo", "t_hi", "refined_t", "abs_z"], &rows)
        }
    }
}

fn emit(cfg: &RunConfig, outcome: &Outcome, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = render(outcome, cfg.format)?;
    match &cfg.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

/// Parse, run and print; returns the process exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| {
        let outcome = execute(&cfg)?;
        emit(&cfg, &outcome, stdout)?;
        if let Some(s) = &outcome.summary {
            let _ = writeln!(stderr, "{s}");
        }
        match outcome.failure {
            Some(f) => Err(f),
            None => Ok(()),
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "zetalab: {e}");
            e.exit_code()
        }
    }
}

pub fn main_exit_code() -> i32 {
    run_with(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
