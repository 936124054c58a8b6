//! Exact rational Gaussian elimination: solving, rank, inversion.

use num_traits::Zero;

use super::{int_vec_to_rat, IntMatrix, Rat};
use crate::error::{Error, Result};

/// Reduces `rows` to row echelon form in place, eliminating with leftmost
/// pivots. `rhs` (if given) receives the same row operations. Returns the
/// pivot column of each pivot row.
fn echelon(rows: &mut [Vec<Rat>], mut rhs: Option<&mut Vec<Rat>>) -> Vec<usize> {
    let m = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        if let Some(b) = rhs.as_deref_mut() {
            b.swap(r, p);
        }
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        if let Some(b) = rhs.as_deref_mut() {
            b[r] *= &inv;
        }
        for i in 0..m {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..n {
                let t = &rows[r][j] * &f;
                rows[i][j] -= t;
            }
            if let Some(b) = rhs.as_deref_mut() {
                let t = &b[r] * &f;
                b[i] -= t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    pivots
}

/// Solves `rows * x = b` exactly. Returns `None` when inconsistent. Free
/// variables (non-pivot columns, pivots chosen leftmost) are set to zero.
pub fn solve_rational_rows(rows: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut rhs = b.to_vec();
    let pivots = echelon(&mut a, Some(&mut rhs));
    for i in pivots.len()..rows.len() {
        if !rhs[i].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rhs[i].clone();
    }
    Some(x)
}

/// Integer-matrix front end for [`solve_rational_rows`].
pub fn solve_rational(a: &IntMatrix, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
    if a.rows() != b.len() {
        return Err(Error::ShapeMismatch(format!(
            "matrix {}x{} vs rhs {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    let rows: Vec<Vec<Rat>> = (0..a.rows()).map(|i| int_vec_to_rat(&a.row(i))).collect();
    Ok(solve_rational_rows(&rows, b))
}

/// Rank of a rational matrix given by rows.
pub fn rat_rank(rows: &[Vec<Rat>]) -> usize {
    let mut a = rows.to_vec();
    echelon(&mut a, None).len()
}

/// Exact inverse of a square rational matrix, or `None` if singular.
pub fn rat_inverse(rows: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return None;
    }
    // Gauss-Jordan on [A | I].
    let mut a: Vec<Vec<Rat>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    Rat::from(num_bigint::BigInt::from(1))
                } else {
                    Rat::zero()
                }
            }));
            row
        })
        .collect();
    let pivots = echelon(&mut a, None);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int_vec, IntMatrix};
    use num_bigint::BigInt;

    fn r(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    fn rq(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn identity_solve() {
        let a = IntMatrix::identity(2);
        let b = vec![rq(1, 2), r(-3)];
        assert_eq!(solve_rational(&a, &b).unwrap().unwrap(), b);
    }

    #[test]
    fn underdetermined_leftmost_pivot() {
        let a = IntMatrix::from_rows(&[int_vec(&[1, 1])]).unwrap();
        let x = solve_rational(&a, &[r(1)]).unwrap().unwrap();
        assert_eq!(x, vec![r(1), r(0)]);
    }

    #[test]
    fn inconsistent_returns_none() {
        let a = IntMatrix::from_rows(&[int_vec(&[1, 1]), int_vec(&[1, 1])]).unwrap();
        assert!(solve_rational(&a, &[r(1), r(2)]).unwrap().is_none());
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = IntMatrix::identity(2);
        assert!(solve_rational(&a, &[r(1)]).is_err());
    }

    #[test]
    fn rank_and_inverse() {
        let rows = vec![vec![r(2), r(1)], vec![r(1), r(1)]];
        assert_eq!(rat_rank(&rows), 2);
        let inv = rat_inverse(&rows).unwrap();
        assert_eq!(inv, vec![vec![r(1), r(-1)], vec![r(-1), r(2)]]);
        let singular = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert_eq!(rat_rank(&singular), 1);
        assert!(rat_inverse(&singular).is_none());
    }
}
