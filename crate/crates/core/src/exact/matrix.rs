use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// A square `n × n` matrix over a [`Field`], stored row-major.
///
/// Indices in this API are 0-based; the matrix unit `E_ij` of the usual
/// 1-based notation is `Matrix::unit(field, n, i - 1, j - 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    n: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from row-major entries, checking length and fields.
    pub fn new(field: Field, n: usize, entries: Vec<Scalar>) -> Result<Matrix> {
        if n == 0 {
            return Err(Error::input("matrix degree must be at least 1"));
        }
        if entries.len() != n * n {
            return Err(Error::input(format!("expected {} entries for degree {n}, got {}", n * n, entries.len())));
        }
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(Error::input(format!("entry {bad} is not in {field}")));
        }
        Ok(Matrix { field, n, entries })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::input("matrix rows must form a square"));
        }
        Matrix::new(field, n, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integers.
    ///
    /// # Panics
    /// If the rows do not form a non-empty square.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Matrix {
        let entries = rows.iter().flat_map(|r| r.iter().map(|&k| field.from_i64(k))).collect();
        Matrix::new(field, rows.len(), entries).expect("square integer matrix")
    }

    pub fn zero(field: Field, n: usize) -> Matrix {
        Matrix { field, n, entries: vec![field.zero(); n * n] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    /// Matrix unit with a single 1 at `(i, j)` (0-based).
    pub fn unit(field: Field, n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zero(field, n);
        m.entries[i * n + j] = field.one();
        m
    }

    pub fn scalar(field: Field, n: usize, c: &Scalar) -> Matrix {
        Matrix::identity(field, n).scale(c)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "entry field mismatch");
        self.entries[i * self.n + j] = value;
    }

    /// Row-major entries; the coordinate vector of the matrix in `K^{n²}`.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, columns: &[Vec<Scalar>]) -> Result<Matrix> {
        let n = columns.len();
        if columns.iter().any(|c| c.len() != n) {
            return Err(Error::input("columns must form a square"));
        }
        let entries = (0..n).flat_map(|i| columns.iter().map(move |c| c[i].clone())).collect();
        Matrix::new(field, n, entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.field, self.n)
    }

    /// True when every entry strictly below the diagonal is zero.
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn trace(&self) -> Scalar {
        (0..self.n).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { field: self.field, n: self.n, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect();
        Matrix { field: self.field, n, entries }
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.n, "vector length mismatch");
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> Scalar {
        let n = self.n;
        let mut a: Vec<Vec<Scalar>> = self.rows().map(<[Scalar]>::to_vec).collect();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return self.field.zero();
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &inv;
                let (top, bottom) = a.split_at_mut(r);
                for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let mut a: Vec<Vec<Scalar>> = self.rows().map(<[Scalar]>::to_vec).collect();
        let mut inv: Vec<Vec<Scalar>> = Matrix::identity(self.field, n).rows().map(<[Scalar]>::to_vec).collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(p, col);
            inv.swap(p, col);
            let pinv = a[col][col].inv().expect("nonzero pivot");
            for c in 0..n {
                a[col][c] = &a[col][c] * &pinv;
                inv[col][c] = &inv[col][c] * &pinv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &f * &a[col][c];
                    a[r][c] = &a[r][c] - &t;
                    let t = &f * &inv[col][c];
                    inv[r][c] = &inv[r][c] - &t;
                }
            }
        }
        Ok(Matrix { field: self.field, n, entries: inv.into_iter().flatten().collect() })
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    /// `p · self · p⁻¹`, given both `p` and its inverse.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> Matrix {
        &(p * self) * p_inv
    }

    fn check_same_shape(&self, other: &Matrix) {
        assert!(
            self.n == other.n && self.field == other.field,
            "matrix shape mismatch: {}x{} over {} vs {}x{} over {}",
            self.n,
            self.n,
            self.field,
            other.n,
            other.n,
            other.field
        );
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.check_same_shape(rhs);
        let n = self.n;
        let zero = self.field.zero();
        let mut entries = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    entries[i * n + j] = &entries[i * n + j] + &t;
                }
            }
        }
        Matrix { field: self.field, n, entries }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.check_same_shape(rhs);
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, n: self.n, entries }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.check_same_shape(rhs);
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, n: self.n, entries }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
