//! Command-line front end.
//!
//! One subcommand per analysis: `solve`, `table`, `verify-caustic`,
//! `poly`, `scan`, `float`, `orbit-dump`. Output is deterministic —
//! identical inputs and flags produce byte-identical text, delimited,
//! and structured output, and SVG plots carry no timestamps.
//!
//! Exit codes: 0 for verified/positive outcomes, 1 for negative
//! mathematical outcomes, 2 for usage or I/O errors.

pub mod svg;

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::json;
use thiserror::Error;

use crate::billiard::{self, BilliardError, PhasePoint};
use crate::conjecture::{self, ConjectureError, TableClass};
use crate::curve::{self, CurveError, FloatingAngles, FourierCurve};
use crate::polychain::{self, PolychainError};
use crate::trigroots::{self, TrigrootsError};
use svg::{BBox, SvgCanvas};

const USAGE: &str = "\
usage: caustics <command> [args] [flags]

commands:
  solve <n | lo..hi>                 certified roots of tan nx = n tan x and the angle sets
  table <n> <tau>                    boundary polyline of the table with rho = 1 + tau sin(n a)
  verify-caustic <curve> <delta> [starts]   kernel decision, integral residual, orbit drift
  poly <P|Q|R|S|Sred> <n>            exact polynomial coefficients, ascending
  scan <n_max>                       exact pairwise disjointness certificates
  float <curve>                      contact angles and conditional classification
  orbit-dump <curve> <delta> [steps] per-collision records of a billiard orbit

curve arguments: a JSON curve file or the shorthand omega:<n>,<tau>
delta arguments: a number in radians, pi/<k>, or bn:<n>:<k> (k-th certified root)

flags:
  --format text|structured|delimited   output style (default text)
  --tol <x>       caustic decision tolerance (default 1e-9)
  --steps <n>     orbit length for verify-caustic and orbit-dump
  --nmax <n>      scan bound for float (default 50)
  --seed <n>      seed for randomized starts (default 0)
  --plot <path>   write an SVG plot (table, orbit-dump)
  --out <path>    certificate ledger path for scan (append + dedup)
";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Billiard(#[from] BilliardError),
    #[error(transparent)]
    Trigroots(#[from] TrigrootsError),
    #[error(transparent)]
    Polychain(#[from] PolychainError),
    #[error(transparent)]
    Conjecture(#[from] ConjectureError),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

fn usage_err(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
    Delimited,
}

/// Parsed invocation: one subcommand plus validated numeric parameters
/// and output options.
#[derive(Debug, Default)]
pub struct RunConfig {
    pub format: OutputFormat,
    pub tol: Option<f64>,
    pub steps: Option<u64>,
    pub nmax: Option<u32>,
    pub seed: u64,
    pub plot: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

/// Entry point used by the binary and by tests; writes results to `out`
/// and returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write) -> i32 {
    match execute(args, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            2
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(args: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let (positionals, cfg) = parse_args(args)?;
    let Some(command) = positionals.first() else {
        writeln!(out, "{USAGE}")?;
        return Ok(2);
    };
    let rest = &positionals[1..];
    match command.as_str() {
        "help" | "--help" | "-h" => {
            writeln!(out, "{USAGE}")?;
            Ok(0)
        }
        "solve" => cmd_solve(rest, &cfg, out),
        "table" => cmd_table(rest, &cfg, out),
        "verify-caustic" => cmd_verify_caustic(rest, &cfg, out),
        "poly" => cmd_poly(rest, &cfg, out),
        "scan" => cmd_scan(rest, &cfg, out),
        "float" => cmd_float(rest, &cfg, out),
        "orbit-dump" => cmd_orbit_dump(rest, &cfg, out),
        other => Err(usage_err(format!("unknown command: {other}"))),
    }
}

fn parse_args(args: &[String]) -> Result<(Vec<String>, RunConfig), CliError> {
    let mut positionals = Vec::new();
    let mut cfg = RunConfig::default();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut value_for = |flag: &str| {
            it.next()
                .cloned()
                .ok_or_else(|| usage_err(format!("flag {flag} needs a value")))
        };
        match arg.as_str() {
            "--format" => {
                cfg.format = match value_for("--format")?.as_str() {
                    "text" => OutputFormat::Text,
                    "structured" => OutputFormat::Structured,
                    "delimited" => OutputFormat::Delimited,
                    other => return Err(usage_err(format!("unknown format: {other}"))),
                }
            }
            "--tol" => cfg.tol = Some(parse_f64(&value_for("--tol")?, "--tol")?),
            "--steps" => cfg.steps = Some(parse_u64(&value_for("--steps")?, "--steps")?),
            "--nmax" => cfg.nmax = Some(parse_u32(&value_for("--nmax")?, "--nmax")?),
            "--seed" => cfg.seed = parse_u64(&value_for("--seed")?, "--seed")?,
            "--plot" => cfg.plot = Some(PathBuf::from(value_for("--plot")?)),
            "--out" => cfg.out = Some(PathBuf::from(value_for("--out")?)),
            s if s.starts_with("--") => {
                return Err(usage_err(format!("unknown flag: {s}")));
            }
            _ => positionals.push(arg.clone()),
        }
    }
    Ok((positionals, cfg))
}

fn parse_f64(s: &str, what: &str) -> Result<f64, CliError> {
    s.parse()
        .map_err(|_| usage_err(format!("{what}: not a number: {s}")))
}

fn parse_u64(s: &str, what: &str) -> Result<u64, CliError> {
    s.parse()
        .map_err(|_| usage_err(format!("{what}: not an integer: {s}")))
}

fn parse_u32(s: &str, what: &str) -> Result<u32, CliError> {
    s.parse()
        .map_err(|_| usage_err(format!("{what}: not an integer: {s}")))
}

/// `4` or `4..8`, inclusive.
fn parse_n_range(s: &str) -> Result<(u32, u32), CliError> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = parse_u32(lo, "n range")?;
        let hi = parse_u32(hi, "n range")?;
        if lo < 2 || hi < lo {
            return Err(usage_err(format!("invalid n range: {s}")));
        }
        Ok((lo, hi))
    } else {
        let n = parse_u32(s, "n")?;
        if n < 2 {
            return Err(usage_err("n must be at least 2"));
        }
        Ok((n, n))
    }
}

/// A curve argument: `omega:<n>,<tau>` shorthand or a JSON file path.
fn parse_curve(spec: &str) -> Result<FourierCurve, CliError> {
    if let Some(rest) = spec.strip_prefix("omega:") {
        let (n, tau) = rest
            .split_once(',')
            .ok_or_else(|| usage_err("omega shorthand is omega:<n>,<tau>"))?;
        let n = parse_u32(n, "omega n")?;
        let tau = parse_f64(tau, "omega tau")?;
        return curve::omega_n_tau(n, tau, (0.0, 0.0)).map_err(|e| match e {
            CurveError::NotConvex { .. } => {
                usage_err(format!("tau = {tau} rejected: convexity requires tau < 1"))
            }
            other => CliError::Curve(other),
        });
    }
    let text = std::fs::read_to_string(Path::new(spec))
        .map_err(|e| usage_err(format!("cannot read curve file {spec}: {e}")))?;
    Ok(serde_json::from_str(&text)?)
}

/// A delta argument: radians, `pi/<k>`, or `bn:<n>:<k>`.
fn parse_delta(spec: &str) -> Result<f64, CliError> {
    if let Some(k) = spec.strip_prefix("pi/") {
        let k = parse_f64(k, "pi/<k>")?;
        if k <= 1.0 {
            return Err(usage_err("pi/<k> needs k > 1 to stay in (0, pi)"));
        }
        return Ok(PI / k);
    }
    if let Some(rest) = spec.strip_prefix("bn:") {
        let (n, k) = rest
            .split_once(':')
            .ok_or_else(|| usage_err("root shorthand is bn:<n>:<k>"))?;
        let n = parse_u32(n, "bn n")?;
        let k = parse_u32(k, "bn k")?;
        let roots = trigroots::solve_bn(n)?;
        return roots
            .iter()
            .find(|r| r.k == k)
            .map(|r| r.value)
            .ok_or_else(|| usage_err(format!("no root k = {k} for n = {n}")));
    }
    let delta = parse_f64(spec, "delta")?;
    if !(0.0 < delta && delta < PI) {
        return Err(usage_err("delta must lie strictly between 0 and pi"));
    }
    Ok(delta)
}

fn emit_structured(
    out: &mut dyn Write,
    command: &str,
    inputs: serde_json::Value,
    results: serde_json::Value,
    certificates: serde_json::Value,
) -> Result<(), CliError> {
    let doc = json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "certificates": certificates,
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    Ok(())
}

/// Deterministic generator for randomized starts (xorshift*).
struct SeededRng(u64);

impl SeededRng {
    fn new(seed: u64) -> Self {
        SeededRng(
            seed.wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407)
                | 1,
        )
    }

    fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

fn cmd_solve(args: &[String], cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let spec = args
        .first()
        .ok_or_else(|| usage_err("solve needs <n | lo..hi>"))?;
    let (lo, hi) = parse_n_range(spec)?;
    let mut sets = Vec::new();
    for n in lo..=hi {
        let roots = trigroots::solve_bn(n)?;
        let an = trigroots::build_an(n)?;
        sets.push((n, roots, an));
    }
    match cfg.format {
        OutputFormat::Text => {
            for (n, roots, an) in &sets {
                if roots.is_empty() {
                    writeln!(out, "B_{n} is empty")?;
                } else {
                    writeln!(out, "B_{n} ({} roots):", roots.len())?;
                    for r in roots {
                        writeln!(
                            out,
                            "  k={} bracket=({}, {}) value={} residual={:e}",
                            r.k, r.lo, r.hi, r.value, r.residual
                        )?;
                    }
                }
                let members: Vec<String> = an.members.iter().map(|m| m.to_string()).collect();
                writeln!(out, "A_{n} = [{}]", members.join(", "))?;
            }
        }
        OutputFormat::Delimited => {
            writeln!(out, "n\tk\tlo\thi\tvalue\tresidual")?;
            for (_, roots, _) in &sets {
                for r in roots {
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{:e}",
                        r.n, r.k, r.lo, r.hi, r.value, r.residual
                    )?;
                }
            }
        }
        OutputFormat::Structured => {
            let sets_json: Vec<_> = sets
                .iter()
                .map(|(n, roots, an)| {
                    json!({
                        "n": n,
                        "count": roots.len(),
                        "roots": roots,
                        "angle_set": an,
                    })
                })
                .collect();
            emit_structured(
                out,
                "solve",
                json!({"lo": lo, "hi": hi}),
                json!({"sets": sets_json}),
                json!([]),
            )?;
        }
    }
    Ok(0)
}

fn cmd_table(args: &[String], cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let n = parse_u32(
        args.first()
            .ok_or_else(|| usage_err("table needs <n> <tau>"))?,
        "n",
    )?;
    let tau = parse_f64(
        args.get(1)
            .ok_or_else(|| usage_err("table needs <n> <tau>"))?,
        "tau",
    )?;
    let table = curve::omega_n_tau(n, tau, (0.0, 0.0)).map_err(|e| match e {
        CurveError::NotConvex { min_rho } => usage_err(format!(
            "tau = {tau} rejected: min radius of curvature {min_rho} is not positive (convexity needs tau < 1)"
        )),
        other => CliError::Curve(other),
    })?;
    const POINTS: usize = 1024;
    let polyline: Vec<(f64, f64, f64)> = (0..POINTS)
        .map(|i| {
            let alpha = 2.0 * PI * (i as f64) / (POINTS as f64);
            let (x, y) = table.boundary_point(alpha);
            (alpha, x, y)
        })
        .collect();
    let p0 = table.boundary_point(0.0);
    let p1 = table.boundary_point(2.0 * PI);
    let closure_gap = (p0.0 - p1.0).hypot(p0.1 - p1.1);

    if let Some(path) = &cfg.plot {
        let svg = table_plot(&table, &polyline)?;
        std::fs::write(path, svg)?;
    }

    match cfg.format {
        OutputFormat::Text | OutputFormat::Delimited => {
            writeln!(out, "alpha\tx\ty")?;
            for (alpha, x, y) in &polyline {
                writeln!(out, "{alpha}\t{x}\t{y}")?;
            }
        }
        OutputFormat::Structured => {
            let rows: Vec<_> = polyline.iter().map(|(a, x, y)| json!([a, x, y])).collect();
            emit_structured(
                out,
                "table",
                json!({"n": n, "tau": tau}),
                json!({"polyline": rows, "closure_gap": closure_gap}),
                json!([]),
            )?;
        }
    }
    Ok(0)
}

/// Curve outline with the chord fan of every admissible caustic angle.
fn table_plot(table: &FourierCurve, polyline: &[(f64, f64, f64)]) -> Result<String, CliError> {
    const PALETTE: [&str; 6] = [
        "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b",
    ];
    let mut points: Vec<(f64, f64)> = polyline.iter().map(|&(_, x, y)| (x, y)).collect();
    points.push(points[0]);
    let bbox = BBox::of_points(points.iter().copied())
        .expect("polyline is nonempty")
        .with_margin(0.05);
    let mut canvas = SvgCanvas::new(bbox);
    canvas.polyline(&points, "#1f77b4", 0.012);
    if let Some(h) = table.harmonics().first() {
        let an = trigroots::build_an(h.k)?;
        for (i, &delta) in an.members.iter().enumerate() {
            let start = PhasePoint::new(0.0, delta).map_err(CliError::Billiard)?;
            let records = billiard::run_orbit(table, start, 48)?;
            let color = PALETTE[i % PALETTE.len()];
            for w in records.windows(2) {
                canvas.line((w[0].x, w[0].y), (w[1].x, w[1].y), color, 0.004);
            }
        }
    }
    Ok(canvas.finish())
}

fn cmd_verify_caustic(
    args: &[String],
    cfg: &RunConfig,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let curve_spec = args
        .first()
        .ok_or_else(|| usage_err("verify-caustic needs <curve> <delta> [starts]"))?;
    let delta_spec = args
        .get(1)
        .ok_or_else(|| usage_err("verify-caustic needs <curve> <delta> [starts]"))?;
    let table = parse_curve(curve_spec)?;
    let delta = parse_delta(delta_spec)?;
    let starts = match args.get(2) {
        Some(s) => parse_u64(s, "starts")?,
        None => 1000,
    };
    let tol = cfg.tol.unwrap_or(curve::DEFAULT_CAUSTIC_TOL);

    let report = table.has_constant_caustic_tol(delta, tol);
    let integral_residual = table.caustic_residual(delta);

    // single-step angle conservation from randomized starts
    let mut rng = SeededRng::new(cfg.seed);
    let mut max_step_drift: f64 = 0.0;
    if report.exists {
        for _ in 0..starts {
            let alpha = rng.next_f64() * 2.0 * PI;
            let p = PhasePoint::new(alpha, delta).map_err(CliError::Billiard)?;
            let q = billiard::billiard_step(&table, p)?;
            max_step_drift = max_step_drift.max((q.theta() - delta).abs());
        }
    }

    // a longer orbit for rotation number and cumulative drift
    let orbit_steps = cfg.steps.unwrap_or(starts.min(10_000)).max(1);
    let orbit = if report.exists {
        let start = PhasePoint::new(0.0, delta).map_err(CliError::Billiard)?;
        let records = billiard::run_orbit(&table, start, orbit_steps)?;
        Some(billiard::summarize(start, &records)?)
    } else {
        None
    };

    let drift_ok = orbit.is_some_and(|s| !s.drift_warning()) && max_step_drift <= 1e-6;
    let positive = report.exists && (table.is_circular() || drift_ok);

    match cfg.format {
        OutputFormat::Text | OutputFormat::Delimited => {
            writeln!(out, "delta={delta}")?;
            let offenders: Vec<String> = report.offenders.iter().map(|k| k.to_string()).collect();
            writeln!(
                out,
                "exists={} matched_n={} offenders=[{}] kernel_residual={:e}",
                report.exists,
                report
                    .matched_n
                    .map_or("none".to_string(), |n| n.to_string()),
                offenders.join(","),
                report.residual
            )?;
            writeln!(out, "integral_residual={:e}", integral_residual)?;
            if let Some(summary) = orbit {
                writeln!(
                    out,
                    "orbit steps={} rotation_estimate={} max_theta_drift={:e} single_step_drift={:e}",
                    summary.steps, summary.rotation_estimate, summary.max_theta_drift, max_step_drift
                )?;
                if summary.drift_warning() {
                    writeln!(out, "warning: orbit drift exceeds 1e-6")?;
                }
            }
            writeln!(
                out,
                "verdict: {}",
                if positive {
                    "caustic verified"
                } else {
                    "no caustic at this angle"
                }
            )?;
        }
        OutputFormat::Structured => {
            emit_structured(
                out,
                "verify-caustic",
                json!({
                    "curve": serde_json::to_value(&table)?,
                    "delta": delta,
                    "starts": starts,
                    "tol": tol,
                    "seed": cfg.seed,
                }),
                json!({
                    "report": report,
                    "integral_residual": integral_residual,
                    "max_step_drift": max_step_drift,
                    "orbit": orbit,
                    "positive": positive,
                }),
                json!([]),
            )?;
        }
    }
    Ok(if positive { 0 } else { 1 })
}

fn cmd_poly(args: &[String], cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let family = args
        .first()
        .ok_or_else(|| usage_err("poly needs <P|Q|R|S|Sred> <n>"))?;
    let n = parse_u32(
        args.get(1)
            .ok_or_else(|| usage_err("poly needs <P|Q|R|S|Sred> <n>"))?,
        "n",
    )?;
    let poly = match family.as_str() {
        "P" | "Q" => {
            if n < 1 {
                return Err(usage_err("P and Q need n >= 1"));
            }
            let (p, q) = polychain::pq_pair(n);
            if family == "P" {
                p
            } else {
                q
            }
        }
        "R" => {
            if n < 2 {
                return Err(usage_err("R needs n >= 2"));
            }
            polychain::r_poly(n)
        }
        "S" => {
            if n < 2 {
                return Err(usage_err("S needs n >= 2"));
            }
            polychain::s_poly(n)
        }
        "Sred" => {
            if n < 2 {
                return Err(usage_err("Sred needs n >= 2"));
            }
            polychain::reduced_s_poly(n)?
        }
        other => return Err(usage_err(format!("unknown polynomial family: {other}"))),
    };
    match cfg.format {
        OutputFormat::Text | OutputFormat::Delimited => {
            writeln!(out, "{}", polychain::export_line(family, n, &poly))?;
        }
        OutputFormat::Structured => {
            emit_structured(
                out,
                "poly",
                json!({"family": family, "n": n}),
                json!({
                    "degree": poly.degree(),
                    "coefficients": poly,
                    "line": polychain::export_line(family, n, &poly),
                }),
                json!([]),
            )?;
        }
    }
    Ok(0)
}

fn cmd_scan(args: &[String], cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let n_max = parse_u32(
        args.first()
            .ok_or_else(|| usage_err("scan needs <n_max>"))?,
        "n_max",
    )?;
    if n_max < 4 {
        return Err(usage_err("scan needs n_max >= 4"));
    }
    let certs = conjecture::scan_disjointness(n_max)?;
    let all_disjoint = certs.iter().all(|c| c.is_disjoint());

    if let Some(path) = &cfg.out {
        append_ledger(path, &certs)?;
    }

    match cfg.format {
        OutputFormat::Text => {
            for c in &certs {
                writeln!(out, "{}", c.ledger_line())?;
            }
            if all_disjoint {
                writeln!(
                    out,
                    "all {} pairs disjoint up to n_max={}",
                    certs.len(),
                    n_max
                )?;
            } else {
                let failing: Vec<String> = certs
                    .iter()
                    .filter(|c| !c.is_disjoint())
                    .map(|c| format!("({}, {})", c.m, c.n))
                    .collect();
                writeln!(out, "shared roots found: {}", failing.join(" "))?;
            }
        }
        OutputFormat::Delimited => {
            for c in &certs {
                writeln!(out, "{}", c.ledger_line())?;
            }
        }
        OutputFormat::Structured => {
            let cert_json: Vec<_> = certs
                .iter()
                .map(|c| {
                    json!({
                        "m": c.m,
                        "n": c.n,
                        "verdict": if c.is_disjoint() { "disjoint" } else { "shared" },
                        "gcd_degree": c.gcd.degree(),
                        "gcd": c.gcd,
                    })
                })
                .collect();
            emit_structured(
                out,
                "scan",
                json!({"n_max": n_max}),
                json!({"pairs": certs.len(), "all_disjoint": all_disjoint}),
                json!(cert_json),
            )?;
        }
    }
    Ok(if all_disjoint { 0 } else { 1 })
}

/// Append new certificate lines to the ledger, keeping existing entries
/// and deduplicating by (m, n).
fn append_ledger(path: &Path, certs: &[conjecture::GcdCertificate]) -> Result<(), CliError> {
    let mut seen: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut contents = String::new();
    if path.exists() {
        contents = std::fs::read_to_string(path)?;
        for line in contents.lines() {
            let mut fields = line.split_whitespace();
            if let (Some(m), Some(n)) = (fields.next(), fields.next()) {
                if let (Ok(m), Ok(n)) = (m.parse(), n.parse()) {
                    seen.insert((m, n));
                }
            }
        }
    }
    let mut appended = String::new();
    for c in certs {
        if seen.insert((c.m, c.n)) {
            appended.push_str(&c.ledger_line());
            appended.push('\n');
        }
    }
    if !appended.is_empty() {
        std::fs::write(path, contents + &appended)?;
    }
    Ok(())
}

fn cmd_float(args: &[String], cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let curve_spec = args
        .first()
        .ok_or_else(|| usage_err("float needs <curve>"))?;
    let table = parse_curve(curve_spec)?;
    let n_max = cfg.nmax.unwrap_or(50);
    let report = table.floating_report(n_max)?;
    let classification = conjecture::conditional_classification(&table, n_max)?;

    let class_text = match &classification.class {
        TableClass::Circle => "circle".to_string(),
        TableClass::ConstantWidth { width } => {
            format!("constant width w={width} (caustic only at pi/2)")
        }
        TableClass::OmegaEquivalent { n, tau, deltas } => format!(
            "single-harmonic family n={n} tau={tau} with {} caustic angles",
            deltas.len()
        ),
        TableClass::NoConstantAngleCaustic => "no constant-angle caustic".to_string(),
    };

    match cfg.format {
        OutputFormat::Text | OutputFormat::Delimited => {
            match &report {
                FloatingAngles::AllAngles => {
                    writeln!(out, "floats at all contact angles (circular cross-section)")?;
                }
                FloatingAngles::Angles(list) => {
                    writeln!(
                        out,
                        "contact angles gamma = pi - delta, scan bound n_max={n_max}:"
                    )?;
                    for c in list {
                        writeln!(out, "  gamma={} delta={} n={}", c.gamma, c.delta, c.n)?;
                    }
                    if list.is_empty() {
                        writeln!(out, "  none up to n_max")?;
                    }
                }
            }
            writeln!(
                out,
                "classification (conditional on disjointness certificates up to n_max={}): {}",
                classification.n_max, class_text
            )?;
        }
        OutputFormat::Structured => {
            emit_structured(
                out,
                "float",
                json!({
                    "curve": serde_json::to_value(&table)?,
                    "n_max": n_max,
                }),
                json!({
                    "floating": report,
                    "classification": classification,
                }),
                json!([]),
            )?;
        }
    }
    let negative = matches!(&report, FloatingAngles::Angles(list) if list.is_empty());
    Ok(if negative { 1 } else { 0 })
}

fn cmd_orbit_dump(args: &[String], cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let curve_spec = args
        .first()
        .ok_or_else(|| usage_err("orbit-dump needs <curve> <delta> [steps]"))?;
    let delta_spec = args
        .get(1)
        .ok_or_else(|| usage_err("orbit-dump needs <curve> <delta> [steps]"))?;
    let table = parse_curve(curve_spec)?;
    let delta = parse_delta(delta_spec)?;
    let steps = match args.get(2) {
        Some(s) => parse_u64(s, "steps")?,
        None => cfg.steps.unwrap_or(1000),
    };
    let start = PhasePoint::new(0.0, delta).map_err(CliError::Billiard)?;
    let records = billiard::run_orbit(&table, start, steps.max(1))?;

    if let Some(path) = &cfg.plot {
        let svg = phase_portrait(&records);
        std::fs::write(path, svg)?;
    }

    match cfg.format {
        OutputFormat::Text | OutputFormat::Delimited => {
            writeln!(out, "step\talpha\ttheta\tx\ty")?;
            for r in &records {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    r.step, r.alpha, r.theta, r.x, r.y
                )?;
            }
        }
        OutputFormat::Structured => {
            let summary = billiard::summarize(start, &records)?;
            emit_structured(
                out,
                "orbit-dump",
                json!({
                    "curve": serde_json::to_value(&table)?,
                    "delta": delta,
                    "steps": steps,
                }),
                json!({
                    "records": records,
                    "summary": summary,
                }),
                json!([]),
            )?;
        }
    }
    Ok(0)
}

/// Phase portrait: collision points as (α mod 2π, θ) dots on the phase
/// cylinder rectangle.
fn phase_portrait(records: &[billiard::OrbitRecord]) -> String {
    let bbox = BBox {
        min_x: 0.0,
        min_y: 0.0,
        max_x: 2.0 * PI,
        max_y: PI,
    }
    .with_margin(0.05);
    let mut canvas = SvgCanvas::new(bbox);
    // cylinder outline
    canvas.polyline(
        &[
            (0.0, 0.0),
            (2.0 * PI, 0.0),
            (2.0 * PI, PI),
            (0.0, PI),
            (0.0, 0.0),
        ],
        "#888888",
        0.01,
    );
    for r in records {
        canvas.circle((r.alpha.rem_euclid(2.0 * PI), r.theta), 0.02, "#1f77b4");
    }
    canvas.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut buf = Vec::new();
        let code = run(&args, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn solve_text_output() {
        let (code, text) = run_capture(&["solve", "2"]);
        assert_eq!(code, 0);
        assert!(text.contains("B_2 is empty"));

        let (code, text) = run_capture(&["solve", "4"]);
        assert_eq!(code, 0);
        assert!(text.contains("B_4 (1 roots):"));
        assert!(text.contains("1.15026199"));
    }

    #[test]
    fn solve_range_counts() {
        let (code, text) = run_capture(&["solve", "4..8", "--format", "delimited"]);
        assert_eq!(code, 0);
        // counts by parity: 1, 1, 2, 2, 3
        assert_eq!(text.lines().count() - 1, 1 + 1 + 2 + 2 + 3);
    }

    #[test]
    fn poly_lines() {
        let (code, text) = run_capture(&["poly", "S", "4"]);
        assert_eq!(code, 0);
        assert_eq!(text, "S 4: -3 5 0 0 -5 3\n");

        let (_, text) = run_capture(&["poly", "Sred", "4"]);
        assert_eq!(text, "Sred 4: 3 4 3\n");

        let (_, text) = run_capture(&["poly", "P", "5"]);
        assert_eq!(text, "P 5: 0 5 0 -10 0 1\n");

        let (code, _) = run_capture(&["poly", "T", "4"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn table_rejects_nonconvex_tau() {
        let (code, _) = run_capture(&["table", "4", "1.0"]);
        assert_eq!(code, 2);
        let (code, text) = run_capture(&["table", "4", "0"]);
        assert_eq!(code, 0);
        assert_eq!(text.lines().count(), 1025);
    }

    #[test]
    fn verify_caustic_exit_codes() {
        let (code, text) = run_capture(&["verify-caustic", "omega:4,0.5", "bn:4:1", "200"]);
        assert_eq!(code, 0, "{text}");
        assert!(text.contains("verdict: caustic verified"));

        let (code, text) = run_capture(&["verify-caustic", "omega:4,0.5", "pi/4", "200"]);
        assert_eq!(code, 1);
        assert!(text.contains("offenders=[4]"));
    }

    #[test]
    fn scan_exit_and_count() {
        let (code, text) = run_capture(&["scan", "10"]);
        assert_eq!(code, 0);
        assert!(text.contains("all 21 pairs disjoint up to n_max=10"));

        let (code, _) = run_capture(&["scan", "3"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn float_reports() {
        let (code, text) = run_capture(&["float", "omega:4,0.5"]);
        assert_eq!(code, 0);
        assert!(text.contains("single-harmonic family n=4 tau=0.5"));

        let (code, text) = run_capture(&["float", "omega:4,0"]);
        assert_eq!(code, 0);
        assert!(text.contains("all contact angles"));
    }

    #[test]
    fn unknown_command_is_usage_error() {
        let (code, _) = run_capture(&["frobnicate"]);
        assert_eq!(code, 2);
        let (code, _) = run_capture(&[]);
        assert_eq!(code, 2);
        let (code, _) = run_capture(&["help"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn delta_parsing() {
        assert!((parse_delta("pi/4").unwrap() - PI / 4.0).abs() < 1e-15);
        let x4 = 5.0_f64.sqrt().atan();
        assert!((parse_delta("bn:4:1").unwrap() - x4).abs() < 1e-12);
        assert!(parse_delta("1.5").is_ok());
        assert!(parse_delta("3.5").is_err());
        assert!(parse_delta("bn:4:2").is_err());
    }
}
