//! Smith normal form and integer kernels.

use num_traits::{Signed, Zero};

use super::{Int, IntMatrix};

/// Unimodular decomposition `U * A * V = D` with `D` diagonal and each
/// diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).filter(|&i| !self.d.get(i, i).is_zero()).count()
    }

    pub fn diagonal(&self) -> Vec<Int> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Finds the pivot for step `k`: the leftmost column (at or right of `k`)
/// with a nonzero entry in rows `k..`, then the entry of smallest absolute
/// value in that column, ties broken by smallest row index.
fn find_pivot(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    for j in k..d.cols() {
        let mut best: Option<usize> = None;
        for i in k..d.rows() {
            if d.get(i, j).is_zero() {
                continue;
            }
            best = match best {
                None => Some(i),
                Some(b) if d.get(i, j).abs() < d.get(b, j).abs() => Some(i),
                other => other,
            };
        }
        if let Some(i) = best {
            return Some((i, j));
        }
    }
    None
}

/// Finds the nonzero entry of smallest absolute value in the submatrix
/// `k..` x `k..`, ties broken by smallest row then smallest column. Used
/// after a reduction pass leaves remainders, where picking the global
/// minimum makes the pivot strictly shrink and the loop terminate.
fn find_min_pivot(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            if d.get(i, j).is_zero() {
                continue;
            }
            best = match best {
                None => Some((i, j)),
                Some((bi, bj)) if d.get(i, j).abs() < d.get(bi, bj).abs() => Some((i, j)),
                other => other,
            };
        }
    }
    best
}

/// Computes the Smith normal form by deterministic row/column reduction.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let steps = a.rows().min(a.cols());

    let mut k = 0;
    while k < steps {
        let Some((pi, pj)) = find_pivot(&d, k) else {
            break;
        };
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);

        'reduce: loop {
            // Clear column k below the pivot and row k right of the pivot;
            // truncated division keeps remainders smaller than the pivot.
            let mut dirty = false;
            for i in k + 1..d.rows() {
                if d.get(i, k).is_zero() {
                    continue;
                }
                let q = -(d.get(i, k) / d.get(k, k));
                d.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                if !d.get(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..d.cols() {
                if d.get(k, j).is_zero() {
                    continue;
                }
                let q = -(d.get(k, j) / d.get(k, k));
                d.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                if !d.get(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A nonzero remainder survives; move the smallest entry of
                // the submatrix into the pivot slot and go again.
                let (pi, pj) = find_min_pivot(&d, k).expect("nonzero remainder present");
                d.swap_rows(k, pi);
                u.swap_rows(k, pi);
                d.swap_cols(k, pj);
                v.swap_cols(k, pj);
                continue;
            }
            // Pivot must divide the remaining submatrix for the chain
            // condition; fold an offending row in and keep reducing.
            for i in k + 1..d.rows() {
                for j in k + 1..d.cols() {
                    if !(d.get(i, j) % d.get(k, k)).is_zero() {
                        d.add_row_multiple(k, i, &Int::from(1));
                        u.add_row_multiple(k, i, &Int::from(1));
                        continue 'reduce;
                    }
                }
            }
            break;
        }

        if d.get(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }

    SmithDecomposition { u, d, v }
}

/// Columns form a basis of the saturated lattice `{x : A x = 0}`.
///
/// The basis comes from the unimodular column transform of the Smith
/// decomposition, so it generates the full kernel lattice, not a
/// finite-index sublattice. Each column is sign-normalized so its first
/// nonzero entry is positive.
pub fn integer_kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let rank = s.rank();
    let cols: Vec<Vec<Int>> = (rank..a.cols())
        .map(|j| {
            let col = s.v.col(j);
            match col.iter().find(|x| !x.is_zero()) {
                Some(x) if x.is_negative() => col.iter().map(|y| -y).collect(),
                _ => col,
            }
        })
        .collect();
    if cols.is_empty() {
        IntMatrix::zero(a.cols(), 0)
    } else {
        IntMatrix::from_cols(&cols).expect("kernel columns share a length")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int_vec;

    fn check(a: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        let lhs = s.u.mul(a).unwrap().mul(&s.v).unwrap();
        assert_eq!(lhs, s.d, "U*A*V must equal D");
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero(), "off-diagonal entry");
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain");
            } else {
                assert!(w[1].is_zero(), "zeros trail the chain");
            }
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.diagonal(), int_vec(&[1, 1, 1]));
    }

    #[test]
    fn two_by_two() {
        let a = IntMatrix::from_rows(&[int_vec(&[2, 4]), int_vec(&[6, 8])]).unwrap();
        let s = check(&a);
        assert_eq!(s.diagonal(), int_vec(&[2, 4]));
    }

    #[test]
    fn row_of_ones() {
        let a = IntMatrix::from_rows(&[int_vec(&[1, 1, 1])]).unwrap();
        let s = check(&a);
        assert_eq!(s.diagonal(), int_vec(&[1]));
    }

    #[test]
    fn kernel_of_ones_row() {
        let a = IntMatrix::from_rows(&[int_vec(&[1, 1, 1])]).unwrap();
        let k = integer_kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        assert_eq!(a.mul(&k).unwrap(), IntMatrix::zero(1, 2));
    }

    #[test]
    fn kernel_of_simplex_columns() {
        let cols = vec![
            int_vec(&[1, 0, 0, 0]),
            int_vec(&[0, 1, 0, 0]),
            int_vec(&[0, 0, 1, 0]),
            int_vec(&[0, 0, 0, 1]),
            int_vec(&[-1, -1, -1, -1]),
        ];
        let a = IntMatrix::from_cols(&cols).unwrap();
        let k = integer_kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert_eq!(k.col(0), int_vec(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn pivot_larger_than_remainder_terminates() {
        // The fold step leaves a remainder smaller than the pivot in the
        // pivot row; reduction must move to it instead of spinning.
        let a = IntMatrix::from_rows(&[int_vec(&[-2, 0, 0, 2]), int_vec(&[0, -1, 1, 0])]).unwrap();
        let s = check(&a);
        assert_eq!(s.diagonal(), int_vec(&[1, 2]));
    }

    #[test]
    fn injective_map_has_empty_kernel() {
        let k = integer_kernel_basis(&IntMatrix::identity(2));
        assert_eq!(k.cols(), 0);
    }
}
