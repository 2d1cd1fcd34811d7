//! Marching squares for a polynomial curve `f(x, y) = 0` on a square.

use poncelet_core::polycore::{to_f64, LaurentPoly3};

/// Crossing points of the curve with grid edges, and the segments joining
/// them inside each cell.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Contour {
    /// One point per crossed grid edge, in row order.
    pub points: Vec<[f64; 2]>,
    pub segments: Vec<[usize; 2]>,
}

// f(x, ·) for a fixed row: coefficients of the polynomial in x.
fn row_coefficients(terms: &[(u32, u32, f64)], degree: usize, y: f64) -> Vec<f64> {
    let mut coef = vec![0.0; degree + 1];
    for &(ex, ey, c) in terms {
        coef[ex as usize] += c * y.powi(ey as i32);
    }
    coef
}

fn horner(coef: &[f64], x: f64) -> f64 {
    coef.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn node(i: usize, grid: usize, half: f64) -> f64 {
    -half + 2.0 * half * i as f64 / grid as f64
}

impl Contour {
    /// Samples `f` (free of `p`) at the `(grid + 1)²` nodes of
    /// `[−half, half]²` and joins the crossings cell by cell. Rows are
    /// processed bottom to top, so the output is deterministic.
    pub fn trace(f: &LaurentPoly3, grid: usize, half: f64) -> Contour {
        let terms: Vec<(u32, u32, f64)> = f.terms().map(|(m, c)| (m.x, m.y, to_f64(c))).collect();
        let degree = terms.iter().map(|t| t.0 as usize).max().unwrap_or(0);
        let values: Vec<Vec<f64>> = (0..=grid)
            .map(|j| {
                let coef = row_coefficients(&terms, degree, node(j, grid, half));
                (0..=grid).map(|i| horner(&coef, node(i, grid, half))).collect()
            })
            .collect();
        let v = |i: usize, j: usize| values[j][i];
        let positive = |i: usize, j: usize| v(i, j) > 0.0;

        let mut points = Vec::new();
        // indices of crossings on horizontal edges (i,j)-(i+1,j) and vertical
        // edges (i,j)-(i,j+1)
        let mut horizontal = vec![None; grid * (grid + 1)];
        let mut vertical = vec![None; (grid + 1) * grid];
        let mut crossing = |a: (usize, usize), b: (usize, usize)| {
            let (va, vb) = (v(a.0, a.1), v(b.0, b.1));
            let t = va / (va - vb);
            let lerp = |u: usize, w: usize| node(u, grid, half) + t * (node(w, grid, half) - node(u, grid, half));
            points.push([lerp(a.0, b.0), lerp(a.1, b.1)]);
            Some(points.len() - 1)
        };
        for j in 0..=grid {
            for i in 0..grid {
                if positive(i, j) != positive(i + 1, j) {
                    horizontal[j * grid + i] = crossing((i, j), (i + 1, j));
                }
            }
            if j < grid {
                for i in 0..=grid {
                    if positive(i, j) != positive(i, j + 1) {
                        vertical[j * (grid + 1) + i] = crossing((i, j), (i, j + 1));
                    }
                }
            }
        }

        let mut segments = Vec::new();
        for j in 0..grid {
            for i in 0..grid {
                let bottom = horizontal[j * grid + i];
                let top = horizontal[(j + 1) * grid + i];
                let left = vertical[j * (grid + 1) + i];
                let right = vertical[j * (grid + 1) + i + 1];
                let hits: Vec<usize> = [bottom, right, top, left].into_iter().flatten().collect();
                match hits.len() {
                    2 => segments.push([hits[0], hits[1]]),
                    4 => {
                        // saddle: the centre value decides which corners connect
                        let centre = (v(i, j) + v(i + 1, j) + v(i + 1, j + 1) + v(i, j + 1)) / 4.0;
                        let (b, r, t, l) = (hits[0], hits[1], hits[2], hits[3]);
                        if (centre > 0.0) == positive(i, j) {
                            segments.push([b, r]);
                            segments.push([t, l]);
                        } else {
                            segments.push([b, l]);
                            segments.push([r, t]);
                        }
                    }
                    _ => {}
                }
            }
        }
        Contour { points, segments }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> LaurentPoly3 {
        s.parse().unwrap()
    }

    #[test]
    fn unit_circle_points_lie_on_it() {
        let c = Contour::trace(&poly("x^2 + y^2 - 1"), 64, 3.0);
        assert!(!c.points.is_empty());
        for [x, y] in &c.points {
            assert!((x.hypot(*y) - 1.0).abs() < 0.02, "({x}, {y})");
        }
        // a closed curve: every crossing is shared by exactly two cells
        let mut degree = vec![0; c.points.len()];
        for s in &c.segments {
            degree[s[0]] += 1;
            degree[s[1]] += 1;
        }
        assert!(degree.iter().all(|&d| d == 2));
    }

    #[test]
    fn curve_outside_the_window_gives_nothing() {
        let c = Contour::trace(&poly("x^2 + y^2 - 100"), 16, 3.0);
        assert_eq!(c, Contour::default());
    }

    #[test]
    fn deterministic_order() {
        let f = poly("x^3 - x*y^2 + y - 1/3");
        assert_eq!(Contour::trace(&f, 40, 3.0), Contour::trace(&f, 40, 3.0));
    }
}
