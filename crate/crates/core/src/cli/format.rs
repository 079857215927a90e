//! JSON and CSV encodings of division reports.
//!
//! Exact values travel as rational strings (`"33/25"`); floats are written
//! with 17 significant digits in `%.17g` style so they round-trip.

use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::geometry::DivisionReport;

/// `printf("%.17g")`: 17 significant digits, trailing zeros dropped,
/// scientific notation outside `1e-4 <= |v| < 1e17`.
pub fn format_sig17(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let mantissa = trim_fraction(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (16 - exp) as usize;
        trim_fraction(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn sig17<S: Serializer>(v: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    let number = serde_json::Number::from_str(&format_sig17(*v)).map_err(serde::ser::Error::custom)?;
    number.serialize(serializer)
}

#[derive(Serialize)]
struct JsonShape {
    a: u64,
    b: u64,
}

#[derive(Serialize)]
struct JsonPoint {
    index: u64,
    #[serde(serialize_with = "sig17")]
    phi: f64,
    cusp_index: u64,
    #[serde(serialize_with = "sig17")]
    x: f64,
    #[serde(serialize_with = "sig17")]
    y: f64,
    #[serde(serialize_with = "sig17")]
    r: f64,
    r_squared: String,
}

#[derive(Serialize)]
struct JsonReport {
    shape: JsonShape,
    n: u64,
    total_arclength: String,
    degenerate: bool,
    points: Vec<JsonPoint>,
}

pub fn report_to_json(report: &DivisionReport) -> String {
    let doc = JsonReport {
        shape: JsonShape { a: report.shape.a(), b: report.shape.b() },
        n: report.n,
        total_arclength: report.shape.total_arclength().to_string(),
        degenerate: report.degenerate(),
        points: report
            .points
            .iter()
            .map(|p| JsonPoint {
                index: p.index,
                phi: p.position.phi,
                cusp_index: p.position.cusp_index,
                x: p.point.x,
                y: p.point.y,
                r: p.r,
                r_squared: p.r_squared.to_string(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
    out.push('\n');
    out
}

pub const CSV_HEADER: [&str; 7] = ["index", "phi", "cusp_index", "x", "y", "r_sq_num", "r_sq_den"];

pub fn report_to_csv(report: &DivisionReport) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("in-memory write");
    for p in &report.points {
        writer
            .write_record([
                p.index.to_string(),
                format_sig17(p.position.phi),
                p.position.cusp_index.to_string(),
                format_sig17(p.point.x),
                format_sig17(p.point.y),
                p.r_squared.numer().to_string(),
                p.r_squared.denom().to_string(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("ascii output")
}
