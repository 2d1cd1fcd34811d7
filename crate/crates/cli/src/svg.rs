//! Plain SVG pictures on the fixed window `[−VIEW, VIEW]²`.

use std::fmt::Write;

use poncelet_core::geometry::TraceResult;

use crate::contour::Contour;

pub const VIEW: f64 = 3.0;
const PARABOLA_SAMPLES: usize = 400;

fn header() -> String {
    let size = 2.0 * VIEW;
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {size} {size}\" width=\"600\" height=\"600\">\n\
         <rect x=\"{}\" y=\"{}\" width=\"{size}\" height=\"{size}\" fill=\"white\"/>\n\
         <g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"0.012\">\n",
        -VIEW, -VIEW, -VIEW, -VIEW
    )
}

const FOOTER: &str = "</g>\n</svg>\n";

/// `y² = 2px + p²` sampled in `y` across the window.
fn parabola_path(p: f64) -> String {
    let mut d = String::new();
    for k in 0..PARABOLA_SAMPLES {
        let y = -VIEW + 2.0 * VIEW * k as f64 / (PARABOLA_SAMPLES - 1) as f64;
        let x = (y * y - p * p) / (2.0 * p);
        let _ = write!(d, "{}{x:.5},{y:.5} ", if k == 0 { "M" } else { "L" });
    }
    format!("<path d=\"{}\" stroke=\"#1f77b4\"/>\n", d.trim_end())
}

fn focus() -> &'static str {
    "<circle cx=\"0\" cy=\"0\" r=\"0.03\" fill=\"black\" stroke=\"none\"/>\n"
}

/// The circle, the parabola and the real part of the traced polygon.
pub fn trace_picture(center: [f64; 2], p: f64, trace: &TraceResult) -> String {
    let mut s = header();
    s.push_str(&parabola_path(p));
    s.push_str(focus());
    let _ = writeln!(
        s,
        "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"1\" stroke=\"#2ca02c\"/>",
        center[0], center[1]
    );
    let mut d = String::new();
    for (k, v) in trace.vertices.iter().enumerate() {
        let _ = write!(d, "{}{:.6},{:.6} ", if k == 0 { "M" } else { "L" }, v[0].re, v[1].re);
    }
    let dash = if trace.is_real(1e-9) { "" } else { " stroke-dasharray=\"0.05 0.05\"" };
    let _ = writeln!(s, "<path d=\"{}\" stroke=\"#d62728\"{dash}/>", d.trim_end());
    s.push_str(FOOTER);
    s
}

/// The locus curve of circle centres together with the parabola.
pub fn locus_picture(p: f64, contour: &Contour) -> String {
    let mut s = header();
    s.push_str(&parabola_path(p));
    s.push_str(focus());
    s.push_str("<circle cx=\"0\" cy=\"0\" r=\"1\" stroke=\"#999999\" stroke-dasharray=\"0.05 0.05\"/>\n");
    let mut d = String::new();
    for [a, b] in &contour.segments {
        let (pa, pb) = (contour.points[*a], contour.points[*b]);
        let _ = write!(d, "M{:.5},{:.5} L{:.5},{:.5} ", pa[0], pa[1], pb[0], pb[1]);
    }
    let _ = writeln!(s, "<path d=\"{}\" stroke=\"#d62728\"/>", d.trim_end());
    s.push_str(FOOTER);
    s
}
