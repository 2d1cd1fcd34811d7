//! Determinants over exact rings.

use super::ring::{ExactDiv, Ring};

/// Largest size handled by cofactor expansion; bigger matrices go through
/// Bareiss elimination.
pub const COFACTOR_LIMIT: usize = 4;

/// Determinant of a square matrix given as rows.
///
/// Panics if the matrix is empty or not square.
pub fn det<R: ExactDiv>(rows: &[Vec<R>]) -> R {
    let k = rows.len();
    assert!(k > 0, "determinant of an empty matrix");
    assert!(rows.iter().all(|r| r.len() == k), "matrix is not square");
    if k <= COFACTOR_LIMIT {
        det_cofactor(rows)
    } else {
        det_bareiss(rows)
    }
}

/// Laplace expansion with memoised minors over column subsets.
pub fn det_cofactor<R: Ring>(rows: &[Vec<R>]) -> R {
    let k = rows.len();
    // minors[mask] = determinant of the last popcount(mask) rows restricted
    // to the columns in mask
    let mut minors: Vec<Option<R>> = vec![None; 1 << k];
    minors[0] = Some(R::one());
    for mask in 1usize..(1 << k) {
        let size = mask.count_ones() as usize;
        let row = &rows[k - size];
        let mut acc = R::zero();
        let mut sign_positive = true;
        for (col, entry) in row.iter().enumerate() {
            if mask & (1 << col) == 0 {
                continue;
            }
            if !entry.is_zero() {
                let minor = minors[mask & !(1 << col)].as_ref().unwrap();
                if !minor.is_zero() {
                    let term = entry.clone() * minor.clone();
                    acc = if sign_positive { acc + term } else { acc - term };
                }
            }
            sign_positive = !sign_positive;
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << k) - 1].take().unwrap()
}

/// Fraction-free Gaussian elimination. Every division is exact.
pub fn det_bareiss<R: ExactDiv>(rows: &[Vec<R>]) -> R {
    let k = rows.len();
    let mut m: Vec<Vec<R>> = rows.to_vec();
    let mut negate = false;
    let mut prev = R::one();
    for i in 0..k - 1 {
        if m[i][i].is_zero() {
            match (i + 1..k).find(|&r| !m[r][i].is_zero()) {
                Some(r) => {
                    m.swap(i, r);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let num = m[r][c].clone() * m[i][i].clone() - m[r][i].clone() * m[i][c].clone();
                m[r][c] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            m[r][i] = R::zero();
        }
        prev = m[i][i].clone();
    }
    let d = m[k - 1][k - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::super::laurent::LaurentPoly3;
    use super::super::rational::{int, Rational};
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn small_constant_determinants() {
        assert_eq!(det(&ints(&[&[1, 2], &[3, 4]])), int(-2));
        assert_eq!(det(&ints(&[&[7]])), int(7));
        assert_eq!(det(&ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])), int(0));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = ints(&[
            &[0, 2, -1, 3, 1],
            &[4, 0, 2, -2, 5],
            &[1, 1, 0, 7, -3],
            &[2, -5, 3, 0, 1],
            &[6, 1, 1, 1, 0],
        ]);
        assert_eq!(det_bareiss(&m), det_cofactor(&m));
        let singular = ints(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 0]]);
        assert_eq!(det_bareiss(&singular), int(0));
    }

    #[test]
    fn symbolic_bareiss_matches_cofactor() {
        let p: LaurentPoly3 = "p".parse().unwrap();
        let x: LaurentPoly3 = "x".parse().unwrap();
        let y: LaurentPoly3 = "y".parse().unwrap();
        let one = LaurentPoly3::one();
        let m = vec![
            vec![p.clone(), x.clone(), one.clone(), y.clone(), x.clone() * y.clone()],
            vec![x.clone(), p.clone() * p.clone(), y.clone(), one.clone(), p.clone()],
            vec![one.clone(), y.clone(), x.clone() - p.clone(), p.clone(), one.clone()],
            vec![y.clone(), one.clone(), p.clone(), x.clone() + y.clone(), x.clone()],
            vec![x.clone() * y.clone(), p.clone(), one.clone(), x.clone(), y.clone() - one.clone()],
        ];
        assert_eq!(det_bareiss(&m), det_cofactor(&m));
    }
}
