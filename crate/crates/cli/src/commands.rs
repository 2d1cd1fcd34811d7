use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use poncelet_core::cayley::{locus as locus_poly, locus_at_p};
use poncelet_core::classify::identities::verify_all;
use poncelet_core::classify::{isoperiodic_n, pair_classify, Center};
use poncelet_core::geometry::{default_starts, poncelet_trace, Circle, Parabola};
use poncelet_core::painleve::{okamoto, sample_family, Family, PVISolutionPoint};
use poncelet_core::polycore::{format_rational, to_f64, Rational};
use serde::{Deserialize, Serialize};

use crate::contour::Contour;
use crate::{svg, CliError, Status};

/// JSON form of `cayley`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CayleyOutput {
    pub n: u32,
    pub p: Option<String>,
    /// Proper divisors `k ≥ 3` of `n` whose factors were divided out.
    pub divisors_removed: Vec<u32>,
    pub polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsoperiodicOutput {
    pub center: [String; 2],
    pub n: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PainleveFailure {
    pub p: f64,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PainleveOutput {
    pub family: Family,
    pub points: Vec<PVISolutionPoint>,
    pub failures: Vec<PainleveFailure>,
    pub max_residual: f64,
    pub tol: f64,
    pub passed: bool,
}

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(compute)?;
    writeln!(out)?;
    Ok(())
}

pub fn cayley(out: &mut dyn Write, n: u32, p: Option<&Rational>, json: bool) -> Result<Status, CliError> {
    let full = locus_poly(n).map_err(compute)?;
    let poly = match p {
        Some(p) if p == &Rational::from_integer(0.into()) => {
            return Err(CliError::Usage("p = 0 is not a parabola".into()))
        }
        Some(p) => locus_at_p(n, p).map_err(compute)?,
        None => full.canonical.clone(),
    };
    if json {
        json_line(
            out,
            &CayleyOutput {
                n,
                p: p.map(format_rational),
                divisors_removed: full.divisors_removed.clone(),
                polynomial: poly.to_string(),
            },
        )?;
    } else {
        writeln!(out, "{poly}")?;
    }
    Ok(Status::Ok)
}

pub fn classify(out: &mut dyn Write, n: u32, e: &Center) -> Result<Status, CliError> {
    let c = pair_classify(n, e).map_err(compute)?;
    json_line(out, &c.report())?;
    Ok(Status::Ok)
}

pub fn isoperiodic(out: &mut dyn Write, e: &Center) -> Result<Status, CliError> {
    let n = isoperiodic_n(e).map_err(compute)?;
    json_line(
        out,
        &IsoperiodicOutput {
            center: [format_rational(&e.x), format_rational(&e.y)],
            n,
        },
    )?;
    Ok(Status::Ok)
}

fn parabola(p: &Rational) -> Result<Parabola, CliError> {
    Parabola::exact(p).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn trace(
    out: &mut dyn Write,
    e: &Center,
    p: &Rational,
    n: usize,
    start: Option<Complex64>,
    svg_path: Option<&Path>,
) -> Result<Status, CliError> {
    let circle = Circle::unit_exact(&e.x, &e.y);
    let par = parabola(p)?;
    let start = start.unwrap_or_else(|| default_starts(&par, 1)[0]);
    let result = poncelet_trace(&circle, &par, start, n).map_err(compute)?;
    if let Some(path) = svg_path {
        let (cx, cy) = e.to_f64();
        std::fs::write(path, svg::trace_picture([cx, cy], par.p, &result))?;
    }
    json_line(out, &result)?;
    Ok(Status::Ok)
}

pub fn locus(out: &mut dyn Write, n: u32, p: &Rational, grid: usize, as_svg: bool) -> Result<Status, CliError> {
    let par = parabola(p)?;
    let poly = locus_at_p(n, p).map_err(compute)?;
    let contour = Contour::trace(&poly, grid, svg::VIEW);
    if as_svg {
        out.write_all(svg::locus_picture(par.p, &contour).as_bytes())?;
    } else {
        writeln!(out, "x,y")?;
        for [x, y] in &contour.points {
            writeln!(out, "{x},{y}")?;
        }
    }
    Ok(Status::Ok)
}

const OKAMOTO_TOL: f64 = 1e-9;

fn point_passes(pt: &PVISolutionPoint, tol: f64) -> bool {
    let chained = okamoto(pt.y0, pt.family.expected_dy0_dx(pt.p), pt.x);
    pt.max_residual() < tol && chained.is_ok_and(|y| (y - pt.y).norm() < OKAMOTO_TOL)
}

fn cell(z: Complex64) -> String {
    if z.im.abs() <= 1e-14 * (1.0 + z.re.abs()) {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

pub fn painleve(out: &mut dyn Write, family: u32, ps: &[Rational], json: bool, tol: f64) -> Result<Status, CliError> {
    let family = if family == 3 { Family::N3 } else { Family::N4 };
    let values: Vec<Complex64> = ps.iter().map(|p| Complex64::new(to_f64(p), 0.0)).collect();
    let sample = sample_family(family, &values);
    let failures: Vec<PainleveFailure> = sample
        .errors
        .iter()
        .map(|(p, e)| PainleveFailure {
            p: p.re,
            error: e.to_string(),
        })
        .collect();
    let passed = failures.is_empty() && sample.points.iter().all(|pt| point_passes(pt, tol));
    if json {
        json_line(
            out,
            &PainleveOutput {
                family,
                points: sample.points,
                failures,
                max_residual: sample.max_residual,
                tol,
                passed,
            },
        )?;
    } else {
        writeln!(out, "p,x,y0,y,res0,res1,rel")?;
        for pt in &sample.points {
            writeln!(
                out,
                "{},{},{},{},{:e},{:e},{:e}",
                pt.p.re,
                cell(pt.x),
                cell(pt.y0),
                cell(pt.y),
                pt.residual_y0,
                pt.residual_y,
                pt.relation_residual
            )?;
        }
        for f in &failures {
            eprintln!("p = {}: {}", f.p, f.error);
        }
    }
    Ok(if passed { Status::Ok } else { Status::VerificationFailed })
}

pub fn verify_identities(out: &mut dyn Write) -> Result<Status, CliError> {
    let checks = verify_all();
    let mut all = true;
    for c in &checks {
        all &= c.passed;
        if c.passed {
            writeln!(out, "PASS {}", c.name)?;
        } else {
            writeln!(out, "FAIL {}: {}", c.name, c.detail)?;
        }
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} passed, {failed} failed", checks.len() - failed)?;
    Ok(if all { Status::Ok } else { Status::VerificationFailed })
}
