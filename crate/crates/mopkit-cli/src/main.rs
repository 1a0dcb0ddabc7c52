use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use mopkit_cli::doc::{self, AnySpec, CheckRecord, FieldKind, ReportDocument, SpecDocument};
use mopkit_core::averages::{avg_char_poly, avg_general};
use mopkit_core::oracles::{oracle_andreief, oracle_enumerate};
use mopkit_core::{Cf64, EnsembleSpec, Rat, Scalar, DEFAULT_ENUM_CAP, DEFAULT_EPS_TOL};
use mopkit_cli::suites::{run_suites, RunConfig, Suite};

#[derive(Parser)]
#[command(
    name = "mopkit",
    about = "Determinantal calculus for multiple orthogonal polynomial ensembles",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites against an ensemble spec file.
    Verify {
        /// Path to the TOML spec file.
        spec: PathBuf,
        /// Which suite to run.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Write the JSON report here instead of only summarizing.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Evaluate the averaged ratio of characteristic polynomials.
    Average {
        spec: PathBuf,
        /// Numerator points, comma separated rationals.
        #[arg(long, value_delimiter = ',')]
        ys: Vec<String>,
        /// Denominator points, comma separated rationals (off support).
        #[arg(long, value_delimiter = ',')]
        zs: Vec<String>,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Approximate the zeros of the average characteristic polynomial.
    Roots { spec: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Enumerate,
    Andreief,
    All,
}

fn main() -> ExitCode {
    match run() {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}

fn load_spec(path: &PathBuf) -> anyhow::Result<(SpecDocument, AnySpec)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let document = doc::parse_spec_document(&text)?;
    let spec = document.build()?;
    Ok((document, spec))
}

fn env_override<T: std::str::FromStr>(name: &str) -> anyhow::Result<Option<T>>
where
    T::Err: std::fmt::Display,
{
    match std::env::var(name) {
        Ok(raw) => raw
            .parse::<T>()
            .map(Some)
            .map_err(|e| anyhow::anyhow!("invalid {}: {}", name, e)),
        Err(_) => Ok(None),
    }
}

fn run_config(document: &SpecDocument) -> anyhow::Result<RunConfig> {
    let eps_tol = env_override::<f64>("MOPKIT_TOL")?
        .or(document.eps_tol)
        .unwrap_or(DEFAULT_EPS_TOL);
    let enum_cap = env_override::<u64>("MOPKIT_ENUM_CAP")?
        .or(document.enum_cap)
        .unwrap_or(DEFAULT_ENUM_CAP);
    Ok(RunConfig {
        eps_tol,
        enum_cap,
        seed: 0x6d6f_706b_6974,
    })
}

fn write_report(report: &ReportDocument, path: Option<&PathBuf>) -> anyhow::Result<()> {
    if let Some(p) = path {
        let json = serde_json::to_string_pretty(report)?;
        std::fs::write(p, json).with_context(|| format!("cannot write {}", p.display()))?;
    }
    Ok(())
}

fn summarize(report: &ReportDocument) {
    for record in &report.records {
        let status = if record.equal { "pass" } else { "FAIL" };
        match record.max_error {
            Some(err) => println!(
                "[{}] {} ({}) err {:.3e}  {}",
                status, record.check_name, record.paper_anchor, err, record.inputs
            ),
            None => println!(
                "[{}] {} ({})  {}",
                status, record.check_name, record.paper_anchor, record.inputs
            ),
        }
        if !record.equal {
            println!("      lhs: {}", record.lhs);
            println!("      rhs: {}", record.rhs);
        }
    }
    println!(
        "{} checks: {} passed, {} failed",
        report.records.len(),
        report.passed,
        report.failed
    );
}

fn run() -> anyhow::Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            spec,
            suite,
            report,
        } => {
            let (document, any) = load_spec(&spec)?;
            let suites = Suite::parse(&suite)?;
            let cfg = run_config(&document)?;
            let field = match document.field {
                FieldKind::Exact => "exact",
                FieldKind::Float => "float",
            };
            let mut out = ReportDocument::new(
                &spec.display().to_string(),
                field,
                cfg.eps_tol,
                cfg.enum_cap,
                cfg.seed,
            );
            match &any {
                AnySpec::Exact(s) => run_suites(s, &suites, &cfg, &mut out)?,
                AnySpec::Float(s) => run_suites(s, &suites, &cfg, &mut out)?,
            }
            summarize(&out);
            write_report(&out, report.as_ref())?;
            Ok(out.all_passed())
        }
        Command::Average {
            spec,
            ys,
            zs,
            method,
            report,
        } => {
            let (document, any) = load_spec(&spec)?;
            let cfg = run_config(&document)?;
            let field = match document.field {
                FieldKind::Exact => "exact",
                FieldKind::Float => "float",
            };
            let mut out = ReportDocument::new(
                &spec.display().to_string(),
                field,
                cfg.eps_tol,
                cfg.enum_cap,
                cfg.seed,
            );
            let ys_r = parse_points(&ys)?;
            let zs_r = parse_points(&zs)?;
            match &any {
                AnySpec::Exact(s) => average_command(s, &ys_r, &zs_r, method, &cfg, &mut out)?,
                AnySpec::Float(s) => {
                    let ys_c: Vec<Cf64> = ys_r.iter().map(Scalar::to_complex).collect();
                    let zs_c: Vec<Cf64> = zs_r.iter().map(Scalar::to_complex).collect();
                    average_command(s, &ys_c, &zs_c, method, &cfg, &mut out)?
                }
            }
            summarize(&out);
            write_report(&out, report.as_ref())?;
            Ok(out.all_passed())
        }
        Command::Roots { spec } => {
            let (_, any) = load_spec(&spec)?;
            let float_spec = match any {
                AnySpec::Exact(s) => s.to_complex(),
                AnySpec::Float(s) => s,
            };
            roots_command(&float_spec)?;
            Ok(true)
        }
    }
}

fn parse_points(raw: &[String]) -> anyhow::Result<Vec<Rat>> {
    raw.iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| doc::parse_rational(s))
        .collect()
}

fn average_command<F: Scalar>(
    spec: &EnsembleSpec<F>,
    ys: &[F],
    zs: &[F],
    method: Method,
    cfg: &RunConfig,
    out: &mut ReportDocument,
) -> anyhow::Result<()> {
    let inputs = format!(
        "ys = {:?}, zs = {:?}",
        ys.iter().map(Scalar::render).collect::<Vec<_>>(),
        zs.iter().map(Scalar::render).collect::<Vec<_>>()
    );
    let mut values: Vec<(&str, F)> = Vec::new();
    let start = std::time::Instant::now();
    if matches!(method, Method::Formula | Method::All) {
        values.push(("formula", avg_general(spec, ys, zs)?));
    }
    if matches!(method, Method::Enumerate | Method::All) {
        values.push(("enumerate", oracle_enumerate(spec, ys, zs, cfg.enum_cap)?));
    }
    if matches!(method, Method::Andreief | Method::All) {
        values.push(("andreief", oracle_andreief(spec, ys, zs)?));
    }
    let runtime = start.elapsed().as_secs_f64();
    let reference = values[0].1.clone();
    let mut equal = true;
    let mut max_error: Option<f64> = if F::EXACT { None } else { Some(0.0) };
    for (_, v) in &values {
        if F::EXACT {
            equal &= *v == reference;
        } else {
            let err = (v.clone() - reference.clone()).magnitude()
                / 1f64.max(reference.magnitude());
            equal &= v.approx_eq(&reference, cfg.eps_tol);
            if let Some(worst) = max_error.as_mut() {
                *worst = worst.max(err);
            }
        }
    }
    for (name, v) in &values {
        println!("{}: {}", name, v.render());
    }
    out.push(CheckRecord {
        check_name: "average".to_string(),
        paper_anchor: "theorem:avg-products-ratios".to_string(),
        inputs,
        lhs: values
            .iter()
            .map(|(n, v)| format!("{} = {}", n, v.render()))
            .collect::<Vec<_>>()
            .join("; "),
        rhs: reference.render(),
        equal,
        max_error,
        runtime,
    });
    Ok(())
}

fn roots_command(spec: &EnsembleSpec<Cf64>) -> anyhow::Result<()> {
    let poly = avg_char_poly(spec)?;
    let n = poly.degree().unwrap_or(0);
    if n == 0 {
        println!("degree 0: no zeros");
        return Ok(());
    }
    // Companion matrix of the monic polynomial; imaginary dust in the
    // coefficients is dropped before the eigenvalue run.
    let leading = *poly.leading().expect("nonzero");
    let coeffs: Vec<f64> = (0..n).map(|i| (poly.coeff(i) / leading).re).collect();
    let companion = nalgebra::DMatrix::<f64>::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -coeffs[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let eigen = companion.complex_eigenvalues();
    let mut roots: Vec<(f64, f64)> = eigen.iter().map(|c| (c.re, c.im)).collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    println!("approximate zeros of the average characteristic polynomial:");
    for (re, im) in roots {
        if im.abs() < 1e-12 {
            println!("  {:.12}", re);
        } else {
            println!("  {:.12} {:+.12}i", re, im);
        }
    }
    Ok(())
}
