//! Command-line driver.
//!
//! Exit codes: 0 success or positive verdict, 1 negative verdict or failed
//! verification, 2 usage or input error.

pub mod format;
pub mod render;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{One, Zero};
use serde_json::json;

use crate::algebra::{
    build_division_cubic, check_gauss_wantzel_verdict, check_tricuspoid_verdict, factor_over_rationals,
    gauss_wantzel, irreducible_by_dumas, newton_polygon, rational_roots, tricuspoid_division_constructible,
    DumasOutcome,
};
use crate::error::Error;
use crate::exact::{integer, parse_rational, BigRational};
use crate::geometry::{division_points, HypocycloidShape};
use crate::oracle::verify_division;

pub use format::{format_sig17, report_to_csv, report_to_json};
pub use render::{render_svg, RenderSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hypodiv", version, about = "Division points and constructibility for rational hypocycloids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the n-division points of the c-hypocycloid.
    Divide(DivideArgs),
    /// Print the division cubic f_n with its Newton polygon and irreducibility finding.
    Polynomial(PolynomialArgs),
    /// Decide constructibility of circle or tricuspoid n-division points.
    Constructible(ConstructibleArgs),
    /// Check division points against quadrature arclength.
    Verify(VerifyArgs),
    /// Draw the curve (and optionally its division points) as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Curve {
    Tricuspoid,
    Circle,
}

#[derive(Debug, Args)]
pub struct DivideArgs {
    /// Cusp ratio c = A/B (or an integer), greater than 1.
    #[arg(long = "c", value_name = "A/B")]
    pub c: String,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PolynomialArgs {
    /// Integer or rational n >= 3.
    #[arg(long, allow_hyphen_values = true)]
    pub n: String,
    /// Prime for the Newton polygon.
    #[arg(long, default_value_t = 3)]
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct ConstructibleArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value = "tricuspoid")]
    pub curve: Curve,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "c", value_name = "A/B")]
    pub c: String,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long = "c", value_name = "A/B")]
    pub c: String,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: Option<u64>,
    #[arg(long, default_value_t = 600)]
    pub width: u32,
    #[arg(long, default_value_t = 600)]
    pub height: u32,
    /// Polyline vertices per turn of the rolling circle.
    #[arg(long, default_value_t = 400)]
    pub samples: u32,
    #[arg(long)]
    pub no_circumcircle: bool,
    /// Draw the origin-centred circle through each division point.
    #[arg(long)]
    pub division_circles: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A failed command: message for standard error plus exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Divide(a) => divide(a, stdout, stderr),
        Command::Polynomial(a) => polynomial(a, stdout),
        Command::Constructible(a) => constructible(a, stdout),
        Command::Verify(a) => verify(a, stdout, stderr),
        Command::Render(a) => render(a, stdout, stderr),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn parse_shape(text: &str, stderr: &mut dyn Write) -> std::result::Result<HypocycloidShape, Failure> {
    let c = parse_rational(text)?;
    if c <= BigRational::one() {
        return Err(Error::invalid(format!("c = {c} must be greater than 1")).into());
    }
    let shape = HypocycloidShape::from_ratio(&c)?;
    if shape.is_degenerate() {
        let _ = writeln!(stderr, "warning: c = 2 is degenerate; the curve is the segment [-2, 2] traced twice");
    }
    Ok(shape)
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> std::result::Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("cannot write to standard output: {e}"),
        }),
    }
}

fn divide(args: DivideArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let shape = parse_shape(&args.c, stderr)?;
    let text = match args.format {
        ReportFormat::Json => report_to_json(&division_points(&shape, args.n)?),
        ReportFormat::Csv => report_to_csv(&division_points(&shape, args.n)?),
        ReportFormat::Svg => {
            let mut spec = RenderSpec::new(shape);
            spec.n = Some(args.n);
            spec.show_division_circles = true;
            render_svg(&spec)?
        }
    };
    emit(&args.out, &text, stdout)?;
    Ok(EXIT_OK)
}

fn polynomial(args: PolynomialArgs, stdout: &mut dyn Write) -> Outcome {
    let n = parse_rational(&args.n)?;
    if n < integer(3) {
        return Err(Failure {
            code: EXIT_USAGE,
            message: format!("n = {n}: the division cubic is only valid for n >= 3"),
        });
    }
    let f = build_division_cubic(&n)?;
    let polygon = newton_polygon(&f, args.p)?;
    let dumas = if f.coefficient(0).is_zero() {
        "not applicable"
    } else {
        match irreducible_by_dumas(&f, args.p)? {
            DumasOutcome::Irreducible(_) => "irreducible",
            DumasOutcome::Indeterminate(_) => "indeterminate",
        }
    };
    let roots = rational_roots(&f)?;
    let factorization = factor_over_rationals(&f)?;
    let verdict = if roots.is_empty() { "irreducible" } else { "reducible" };

    let doc = json!({
        "n": n.to_string(),
        "prime": args.p,
        "polynomial": f.to_string(),
        "coefficients": f.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "newton_polygon": {
            "points": polygon.points,
            "vertices": polygon.vertices,
            "segments": polygon.segments.iter().map(|s| json!({
                "slope": s.slope.to_string(),
                "length": s.length,
            })).collect::<Vec<_>>(),
        },
        "dumas": dumas,
        "rational_roots": roots.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "verdict": verdict,
        "factorization": factorization.to_string(),
        "unit": factorization.unit.to_string(),
        "factors": factorization.factors.iter().map(|(g, e)| json!({
            "factor": g.to_string(),
            "multiplicity": e,
        })).collect::<Vec<_>>(),
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("json value serializes");
    text.push('\n');
    emit(&None, &text, stdout)?;
    Ok(EXIT_OK)
}

fn constructible(args: ConstructibleArgs, stdout: &mut dyn Write) -> Outcome {
    let (verdict, checked, curve) = match args.curve {
        Curve::Tricuspoid => {
            let v = tricuspoid_division_constructible(args.n)?;
            let ok = check_tricuspoid_verdict(args.n, &v);
            (v, ok, "tricuspoid")
        }
        Curve::Circle => {
            let v = gauss_wantzel(args.n)?;
            let ok = check_gauss_wantzel_verdict(args.n, &v);
            (v, ok, "circle")
        }
    };
    let text = format!(
        "constructible: {}\ncurve: {curve}\nn: {}\nwitness: {}\nwitness_checked: {checked}\n",
        verdict.constructible, args.n, verdict.witness
    );
    emit(&None, &text, stdout)?;
    Ok(if verdict.constructible { EXIT_OK } else { EXIT_NEGATIVE })
}

fn verify(args: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let shape = parse_shape(&args.c, stderr)?;
    let report = verify_division(&shape, args.n, args.tol)?;
    let text = format!(
        "shape: {}\nn: {}\nexpected_segment: {}\nmax_deviation: {}\ntol: {}\npass: {}\n",
        report.shape,
        report.n,
        format_sig17(report.expected_segment),
        format_sig17(report.max_deviation),
        format_sig17(report.tol),
        report.pass
    );
    emit(&None, &text, stdout)?;
    Ok(if report.pass { EXIT_OK } else { EXIT_NEGATIVE })
}

fn render(args: RenderArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let shape = parse_shape(&args.c, stderr)?;
    let spec = RenderSpec {
        shape,
        n: args.n,
        width: args.width,
        height: args.height,
        show_circumcircle: !args.no_circumcircle,
        show_division_circles: args.division_circles,
        samples: args.samples,
    };
    let svg = render_svg(&spec)?;
    emit(&args.out, &svg, stdout)?;
    Ok(EXIT_OK)
}
