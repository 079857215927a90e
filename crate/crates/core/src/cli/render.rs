//! SVG figures: the curve inside its dashed circumcircle, with optional
//! division points and the origin-centred circles that cut them out.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::to_f64;
use crate::geometry::{self, HypocycloidShape};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub shape: HypocycloidShape,
    pub n: Option<u64>,
    pub width: u32,
    pub height: u32,
    pub show_circumcircle: bool,
    pub show_division_circles: bool,
    /// Polyline vertices per turn of the parameter.
    pub samples: u32,
}

impl RenderSpec {
    pub fn new(shape: HypocycloidShape) -> Self {
        RenderSpec {
            shape,
            n: None,
            width: 600,
            height: 600,
            show_circumcircle: true,
            show_division_circles: false,
            samples: 400,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples < 64 {
            return Err(Error::invalid(format!("samples must be at least 64, got {}", self.samples)));
        }
        if self.width < 100 || self.height < 100 {
            return Err(Error::invalid(format!(
                "canvas must be at least 100x100, got {}x{}",
                self.width, self.height
            )));
        }
        if self.n == Some(0) {
            return Err(Error::invalid("n must be positive"));
        }
        Ok(())
    }

    /// Pixels per unit length; the shorter side spans `[-1.2c, 1.2c]`.
    pub fn scale(&self) -> f64 {
        self.width.min(self.height) as f64 / (2.4 * self.shape.c_f64())
    }
}

// Three decimals, never "-0.000".
fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

pub fn render_svg(spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    let shape = &spec.shape;
    let scale = spec.scale();
    let (w, h) = (spec.width as f64, spec.height as f64);
    let mut out = String::new();

    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        spec.width,
        spec.height,
        num(-w / 2.0),
        num(-h / 2.0),
        num(w),
        num(h)
    )
    .unwrap();
    writeln!(out, r#"  <title>{shape}-hypocycloid</title>"#).unwrap();

    if spec.show_circumcircle {
        writeln!(
            out,
            r##"  <circle class="circumcircle" cx="0.000" cy="0.000" r="{}" fill="none" stroke="#888888" stroke-width="1" stroke-dasharray="6 4"/>"##,
            num(shape.c_f64() * scale)
        )
        .unwrap();
    }

    let count = spec.samples as u64 * shape.b();
    let period = shape.period();
    let points: Vec<String> = (0..=count)
        .map(|i| {
            let p = geometry::position(shape, period * i as f64 / count as f64);
            format!("{},{}", num(p.x * scale), num(-p.y * scale))
        })
        .collect();
    writeln!(
        out,
        r##"  <polyline class="curve" fill="none" stroke="#000000" stroke-width="2" points="{}"/>"##,
        points.join(" ")
    )
    .unwrap();

    if let Some(n) = spec.n {
        let report = geometry::division_points(shape, n)?;
        if spec.show_division_circles {
            for p in &report.points {
                writeln!(
                    out,
                    r##"  <circle class="division-circle" data-index="{}" data-r-squared="{}" cx="0.000" cy="0.000" r="{}" fill="none" stroke="#3366cc" stroke-width="1"/>"##,
                    p.index,
                    p.r_squared,
                    num(to_f64(&p.r_squared).sqrt() * scale)
                )
                .unwrap();
            }
        }
        for p in &report.points {
            writeln!(
                out,
                r##"  <circle class="division-point" data-index="{}" cx="{}" cy="{}" r="4.000" fill="#cc0000"/>"##,
                p.index,
                num(p.point.x * scale),
                num(-p.point.y * scale)
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
