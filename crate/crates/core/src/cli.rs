//! Command-line front end: compute radii, sweep the class parameter, run
//! inequality verification, and emit the reproduction table.
//!
//! Exit codes: 0 success, 1 argument error, 2 no root, 3 verification or
//! reproduction failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::equations::{BohrPolynomial, ClassSpec, ProblemVariant, RadiusProblem};
use crate::series::Alpha;
use crate::verify::{
    reproduce_paper_values, reproduction_matches_expectations, verify_bohr_inequality, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NO_ROOT: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Parser)]
#[command(
    name = "bohr",
    version,
    about = "Sharp Bohr radii for harmonic mapping classes"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandKind,
}

#[derive(Subcommand)]
enum CommandKind {
    /// Compute one sharp radius and print a single result record
    Radius(RadiusArgs),
    /// Sweep alpha over a range and emit one row per grid point
    Sweep(SweepArgs),
    /// Sweep the inequality on a grid and report the verdict
    Verify(VerifyArgs),
    /// Recompute every printed value and compare against the source
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct ProblemFlags {
    /// Mapping class: w0h | stable-convex | stable-univalent
    #[arg(long)]
    class: String,
    /// Class parameter in (0, 1]; w0h only
    #[arg(long)]
    alpha: Option<f64>,
    /// Comma-separated lambda_1,...,lambda_k; empty string means P = 0
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    poly: String,
    /// Inequality variant: majorant | power:<m> | ratio
    #[arg(long, default_value = "majorant")]
    variant: String,
}

#[derive(Args)]
struct RadiusArgs {
    #[command(flatten)]
    problem: ProblemFlags,
    /// Bisection tolerance in r
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Output format: json | csv
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct SweepArgs {
    /// Lower end of the alpha range
    #[arg(long)]
    alpha_min: f64,
    /// Upper end of the alpha range
    #[arg(long)]
    alpha_max: f64,
    /// Number of grid rows (>= 1)
    #[arg(long)]
    steps: usize,
    /// Mapping class; sweeps are defined for w0h only
    #[arg(long, default_value = "w0h")]
    class: String,
    /// Comma-separated lambda_1,...,lambda_k; empty string means P = 0
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    poly: String,
    /// Inequality variant: majorant | power:<m>
    #[arg(long, default_value = "majorant")]
    variant: String,
    /// Bisection tolerance in r
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Output format: csv | json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Write the table to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    problem: ProblemFlags,
    /// Number of grid points for the inequality sweep
    #[arg(long, default_value_t = 100)]
    grid: usize,
    /// Output format: text | json
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Output format: json | csv | markdown
    #[arg(long, default_value = "markdown")]
    format: String,
}

/// Parses and executes; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        CommandKind::Radius(args) => cmd_radius(&args),
        CommandKind::Sweep(args) => cmd_sweep(&args),
        CommandKind::Verify(args) => cmd_verify(&args),
        CommandKind::Reproduce(args) => cmd_reproduce(&args),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

/// Writes a command's finished output in one shot; a consumer that closed
/// the pipe early (`| head`) is not an error.
fn emit(body: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(body.as_bytes());
}

fn parse_poly(raw: &str) -> Result<BohrPolynomial, String> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Ok(BohrPolynomial::zero());
    }
    let mut coefficients = Vec::new();
    for piece in trimmed.split(',') {
        let lambda: f64 = piece
            .trim()
            .parse()
            .map_err(|_| format!("--poly: cannot parse `{piece}` as a number"))?;
        coefficients.push(lambda);
    }
    BohrPolynomial::new(coefficients).map_err(|e| format!("--poly: {e}"))
}

fn parse_variant(raw: &str) -> Result<ProblemVariant, String> {
    match raw {
        "majorant" => Ok(ProblemVariant::MajorantOnly),
        "ratio" => Ok(ProblemVariant::RatioArea),
        other => {
            if let Some(m) = other.strip_prefix("power:") {
                let m: u32 = m
                    .parse()
                    .map_err(|_| format!("--variant: power exponent `{m}` must be an integer >= 0"))?;
                Ok(ProblemVariant::WithPowerTerm { m })
            } else {
                Err(format!(
                    "--variant: `{other}` is not one of majorant | power:<m> | ratio"
                ))
            }
        }
    }
}

fn build_problem(flags: &ProblemFlags) -> Result<RadiusProblem, String> {
    let class = match flags.class.as_str() {
        "w0h" => {
            let alpha = flags
                .alpha
                .ok_or_else(|| "--alpha is required with --class w0h".to_string())?;
            let alpha = Alpha::new(alpha).map_err(|e| format!("--alpha: {e}"))?;
            ClassSpec::W0H { alpha }
        }
        "stable-convex" | "stable-univalent" => {
            if flags.alpha.is_some() {
                return Err("--alpha is only valid with --class w0h".into());
            }
            if flags.class == "stable-convex" {
                ClassSpec::StableConvex
            } else {
                ClassSpec::StableUnivalent
            }
        }
        other => {
            return Err(format!(
                "--class: `{other}` is not one of w0h | stable-convex | stable-univalent"
            ))
        }
    };
    let poly = parse_poly(&flags.poly)?;
    let variant = parse_variant(&flags.variant)?;
    RadiusProblem::new(class, poly, variant).map_err(|e| format!("--variant: {e}"))
}

/// Renders a float with 12 significant digits, printf %g style.
pub fn fmt_sig(value: f64) -> String {
    if value == 0.0 {
        return "0".into();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let sci = format!("{:.11e}", value);
    let (mantissa, exp) = sci.split_once('e').expect("{:e} always contains e");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if !(-4..12).contains(&exp) {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, value))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

/// RFC-4180 field: quoted only when it contains a comma, quote, or newline.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn poly_json(p: &BohrPolynomial) -> String {
    let parts: Vec<String> = p.coefficients().iter().map(|&c| fmt_sig(c)).collect();
    format!("[{}]", parts.join(","))
}

fn poly_compact(p: &BohrPolynomial) -> String {
    let parts: Vec<String> = p.coefficients().iter().map(|&c| fmt_sig(c)).collect();
    parts.join(";")
}

fn alpha_of(problem: &RadiusProblem) -> Option<f64> {
    match problem.class() {
        ClassSpec::W0H { alpha } => Some(alpha.get()),
        _ => None,
    }
}

fn variant_name(variant: ProblemVariant) -> String {
    match variant {
        ProblemVariant::MajorantOnly => "majorant".into(),
        ProblemVariant::WithPowerTerm { m } => format!("power:{m}"),
        ProblemVariant::RatioArea => "ratio".into(),
    }
}

fn cmd_radius(args: &RadiusArgs) -> i32 {
    if args.format != "json" && args.format != "csv" {
        return usage_error("--format must be json or csv");
    }
    let problem = match build_problem(&args.problem) {
        Ok(p) => p,
        Err(msg) => return usage_error(&msg),
    };
    let result = match problem.solve(args.tol) {
        Ok(res) => res,
        Err(e) if e.is_no_root() => {
            eprintln!("no root: {e}");
            return EXIT_NO_ROOT;
        }
        Err(e) => return usage_error(&e.to_string()),
    };

    let alpha = alpha_of(&problem);
    let variant = variant_name(problem.variant());
    let mut body = String::new();
    match args.format.as_str() {
        "json" => {
            let alpha_json = alpha.map_or("null".into(), fmt_sig);
            let _ = writeln!(
                body,
                "{{\"class\":\"{}\",\"alpha\":{},\"poly\":{},\"variant\":\"{}\",\"radius\":{},\"residual\":{},\"iterations\":{},\"converged\":{}}}",
                problem.class().name(),
                alpha_json,
                poly_json(problem.poly()),
                variant,
                fmt_sig(result.radius),
                fmt_sig(result.residual),
                result.iterations,
                result.converged
            );
        }
        _ => {
            let _ = writeln!(body, "class,alpha,poly,variant,radius,residual,iterations,converged");
            let _ = writeln!(
                body,
                "{},{},{},{},{},{},{},{}",
                problem.class().name(),
                alpha.map_or(String::new(), fmt_sig),
                csv_field(&poly_compact(problem.poly())),
                variant,
                fmt_sig(result.radius),
                fmt_sig(result.residual),
                result.iterations,
                result.converged
            );
        }
    }
    emit(&body);
    if result.converged {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}

fn cmd_sweep(args: &SweepArgs) -> i32 {
    if args.format != "json" && args.format != "csv" {
        return usage_error("--format must be csv or json");
    }
    if args.class != "w0h" {
        return usage_error("--class: sweeps are defined for w0h only");
    }
    if args.steps < 1 {
        return usage_error("--steps must be >= 1");
    }
    if !(args.alpha_min > 0.0 && args.alpha_min <= args.alpha_max && args.alpha_max <= 1.0) {
        return usage_error("--alpha-min/--alpha-max must satisfy 0 < min <= max <= 1");
    }
    let poly = match parse_poly(&args.poly) {
        Ok(p) => p,
        Err(msg) => return usage_error(&msg),
    };
    let variant = match parse_variant(&args.variant) {
        Ok(ProblemVariant::RatioArea) => {
            return usage_error("--variant: the ratio variant is only defined for stable classes")
        }
        Ok(v) => v,
        Err(msg) => return usage_error(&msg),
    };

    let mut rows = Vec::with_capacity(args.steps);
    for i in 0..args.steps {
        let alpha_value = if args.steps == 1 {
            args.alpha_min
        } else {
            args.alpha_min
                + (args.alpha_max - args.alpha_min) * i as f64 / (args.steps - 1) as f64
        };
        let alpha = match Alpha::new(alpha_value) {
            Ok(a) => a,
            Err(e) => return usage_error(&format!("--alpha-min/--alpha-max: {e}")),
        };
        let problem =
            match RadiusProblem::new(ClassSpec::W0H { alpha }, poly.clone(), variant) {
                Ok(p) => p,
                Err(e) => return usage_error(&e.to_string()),
            };
        let result = match problem.solve(args.tol) {
            Ok(res) => res,
            Err(e) if e.is_no_root() => {
                eprintln!("no root at alpha = {alpha_value}: {e}");
                return EXIT_NO_ROOT;
            }
            Err(e) => return usage_error(&e.to_string()),
        };
        let terms_used = match problem.terms_used_at(result.radius) {
            Ok(t) => t,
            Err(e) => return usage_error(&e.to_string()),
        };
        rows.push((alpha_value, result, terms_used));
    }

    let mut body = String::new();
    match args.format.as_str() {
        "json" => {
            let parts: Vec<String> = rows
                .iter()
                .map(|(alpha, res, terms)| {
                    format!(
                        "{{\"alpha\":{},\"radius\":{},\"residual\":{},\"terms_used\":{},\"converged\":{}}}",
                        fmt_sig(*alpha),
                        fmt_sig(res.radius),
                        fmt_sig(res.residual),
                        terms,
                        res.converged
                    )
                })
                .collect();
            body.push_str(&format!("[{}]\n", parts.join(",")));
        }
        _ => {
            body.push_str("alpha,radius,residual,terms_used,converged\n");
            for (alpha, res, terms) in &rows {
                body.push_str(&format!(
                    "{},{},{},{},{}\n",
                    fmt_sig(*alpha),
                    fmt_sig(res.radius),
                    fmt_sig(res.residual),
                    terms,
                    res.converged
                ));
            }
        }
    }

    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => emit(&body),
    }
    EXIT_OK
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    if args.format != "text" && args.format != "json" {
        return usage_error("--format must be text or json");
    }
    let problem = match build_problem(&args.problem) {
        Ok(p) => p,
        Err(msg) => return usage_error(&msg),
    };
    let report = match verify_bohr_inequality(&problem, args.grid) {
        Ok(rep) => rep,
        Err(e) => return usage_error(&e.to_string()),
    };

    let mut body = String::new();
    match args.format.as_str() {
        "json" => {
            let alpha_json = alpha_of(&problem).map_or("null".into(), fmt_sig);
            let (radius, residual, iterations, converged) = match &report.radius {
                Some(res) => (
                    fmt_sig(res.radius),
                    fmt_sig(res.residual),
                    res.iterations.to_string(),
                    res.converged.to_string(),
                ),
                None => ("null".into(), "null".into(), "null".into(), "null".into()),
            };
            let _ = writeln!(
                body,
                "{{\"class\":\"{}\",\"alpha\":{},\"poly\":{},\"variant\":\"{}\",\"verdict\":\"{}\",\"radius\":{},\"residual\":{},\"iterations\":{},\"converged\":{},\"grid_n\":{},\"max_crosscheck_dev\":{}}}",
                problem.class().name(),
                alpha_json,
                poly_json(problem.poly()),
                variant_name(problem.variant()),
                report.verdict.as_str(),
                radius,
                residual,
                iterations,
                converged,
                report.grid_points.len(),
                fmt_sig(report.max_crosscheck_dev)
            );
        }
        _ => match &report.radius {
            Some(res) => {
                let _ = writeln!(
                    body,
                    "verdict={} radius={} residual={} iterations={} converged={} grid_n={} max_crosscheck_dev={}",
                    report.verdict.as_str(),
                    fmt_sig(res.radius),
                    fmt_sig(res.residual),
                    res.iterations,
                    res.converged,
                    report.grid_points.len(),
                    fmt_sig(report.max_crosscheck_dev)
                );
            }
            None => {
                let _ = writeln!(
                    body,
                    "verdict={} (no root on the domain)",
                    report.verdict.as_str()
                );
            }
        },
    }
    emit(&body);

    match report.verdict {
        Verdict::Consistent => EXIT_OK,
        Verdict::Violation => EXIT_VERIFICATION,
        Verdict::DomainLimited => EXIT_NO_ROOT,
    }
}

fn cmd_reproduce(args: &ReproduceArgs) -> i32 {
    if !matches!(args.format.as_str(), "json" | "csv" | "markdown") {
        return usage_error("--format must be json, csv, or markdown");
    }
    let rows = match reproduce_paper_values() {
        Ok(rows) => rows,
        Err(e) => return usage_error(&e.to_string()),
    };

    let mut body = String::new();
    match args.format.as_str() {
        "json" => {
            let parts: Vec<String> = rows
                .iter()
                .map(|row| {
                    format!(
                        "{{\"claim_id\":\"{}\",\"paper_value\":{},\"computed_value\":{},\"abs_dev\":{},\"tolerance\":{},\"status\":\"{}\",\"note\":\"{}\"}}",
                        json_escape(&row.claim_id),
                        fmt_sig(row.paper_value),
                        fmt_sig(row.computed_value),
                        fmt_sig(row.abs_dev),
                        fmt_sig(row.tolerance),
                        row.status.as_str(),
                        json_escape(&row.note)
                    )
                })
                .collect();
            let _ = writeln!(body, "[{}]", parts.join(","));
        }
        "csv" => {
            let _ = writeln!(body, "claim_id,paper_value,computed_value,abs_dev,status,note");
            for row in &rows {
                let _ = writeln!(
                    body,
                    "{},{},{},{},{},{}",
                    csv_field(&row.claim_id),
                    fmt_sig(row.paper_value),
                    fmt_sig(row.computed_value),
                    fmt_sig(row.abs_dev),
                    row.status.as_str(),
                    csv_field(&row.note)
                );
            }
        }
        _ => {
            let _ = writeln!(body, "| claim_id | paper_value | computed_value | abs_dev | status | note |");
            let _ = writeln!(body, "|---|---|---|---|---|---|");
            for row in &rows {
                let _ = writeln!(
                    body,
                    "| {} | {} | {} | {} | {} | {} |",
                    row.claim_id,
                    fmt_sig(row.paper_value),
                    fmt_sig(row.computed_value),
                    fmt_sig(row.abs_dev),
                    row.status.as_str(),
                    row.note
                );
            }
        }
    }
    emit(&body);

    if reproduction_matches_expectations(&rows) {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}
