//! Exact integer and rational linear algebra.
//!
//! Everything downstream (polytopes, triangulations, cones) runs on the
//! primitives in this module: arbitrary-precision matrices, Smith normal
//! form, saturated integer kernels, rational solving, linear feasibility,
//! and double-description conversion between the generator and inequality
//! descriptions of a polyhedral cone.

mod dd;
mod feasible;
mod snf;
mod solve;

pub use dd::{cone_facets, extreme_rays, ConeRep};
pub use feasible::rational_feasible;
pub use snf::{integer_kernel_basis, smith_normal_form, SmithDecomposition};
pub use solve::{rat_inverse, rat_rank, solve_rational, solve_rational_rows};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must share a length.
    pub fn from_rows(rows: &[Vec<Int>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged row lengths".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|row| row.iter().cloned()).collect(),
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Int>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::ShapeMismatch("ragged column lengths".into()));
        }
        let mut m = Self::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                m.set(i, j, acc);
            }
        }
        Ok(m)
    }

    /// Matrix-vector product over the integers.
    pub fn mul_vec(&self, x: &[Int]) -> Result<Vec<Int>> {
        if self.cols != x.len() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &x[j]).sum())
            .collect())
    }

    /// Matrix-vector product with a rational vector.
    pub fn mul_vec_rat(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        if self.cols != x.len() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| Rat::from(self.get(i, j).clone()) * &x[j])
                    .sum()
            })
            .collect())
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, q: &Int) {
        for j in 0..self.cols {
            let t = self.get(src, j) * q;
            let v = self.get(dst, j) + t;
            self.set(dst, j, v);
        }
    }

    /// col[dst] += q * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, q: &Int) {
        for i in 0..self.rows {
            let t = self.get(i, src) * q;
            let v = self.get(i, dst) + t;
            self.set(i, dst, v);
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    pub fn rows_vec(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn cols_vec(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }
}

/// Exact dot product of two integer vectors.
pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact dot product of two rational vectors.
pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dot product of an integer vector against a rational vector.
pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| Rat::from(x.clone()) * y).sum()
}

pub fn int_vec_to_rat(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from(x.clone())).collect()
}

/// Scales a rational vector to a primitive integer vector pointing the same
/// way. Returns the zero vector unchanged.
pub fn primitive_int_vector(v: &[Rat]) -> Vec<Int> {
    if v.iter().all(|x| x.is_zero()) {
        return vec![Int::zero(); v.len()];
    }
    let lcm = v
        .iter()
        .filter(|x| !x.is_zero())
        .fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<Int> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let gcd = ints
        .iter()
        .filter(|x| !x.is_zero())
        .fold(Int::zero(), |acc, x| acc.gcd(&x.abs()));
    ints.iter().map(|x| x / &gcd).collect()
}

/// Divides an integer vector by the gcd of its entries (sign preserved).
pub fn primitive_of_int(v: &[Int]) -> Vec<Int> {
    let gcd = v
        .iter()
        .filter(|x| !x.is_zero())
        .fold(Int::zero(), |acc, x| acc.gcd(&x.abs()));
    if gcd.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &gcd).collect()
}

/// Convenience constructor for integer vectors from machine integers.
pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}
