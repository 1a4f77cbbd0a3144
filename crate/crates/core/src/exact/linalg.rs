//! Row reduction, subspaces, kernels and linear solves.
//!
//! Pivoting is deterministic: the pivot of a column is the first row (in
//! current order) with a nonzero entry there. Subspaces are always kept in
//! reduced row-echelon form, which makes their basis a canonical
//! representative; two subspaces are equal iff their bases are equal.

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// A subspace of `K^ambient`, held as the reduced row-echelon basis of its span.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

/// Output of [`solve`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Solution {
    /// The solution with all free variables set to zero, or `None` when the
    /// system is inconsistent.
    pub particular: Option<Vec<Scalar>>,
    pub kernel: Subspace,
}

/// Reduced row-echelon basis of the span of `rows`.
pub fn rref<I>(field: Field, ambient: usize, rows: I) -> Result<Subspace>
where
    I: IntoIterator<Item = Vec<Scalar>>,
{
    let mut s = Subspace::zero(field, ambient);
    for row in rows {
        check_vector(field, ambient, &row)?;
        s.insert(row);
    }
    Ok(s)
}

fn check_vector(field: Field, ambient: usize, v: &[Scalar]) -> Result<()> {
    if v.len() != ambient {
        return Err(Error::input(format!("vector of length {} in ambient dimension {ambient}", v.len())));
    }
    if let Some(bad) = v.iter().find(|s| s.field() != field) {
        return Err(Error::input(format!("entry {bad} is not in {field}")));
    }
    Ok(())
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace { field, ambient, rows, pivots: (0..ambient).collect() }
    }

    /// Wraps rows that are already in reduced row-echelon form.
    pub(crate) fn from_echelon_unchecked(
        field: Field,
        ambient: usize,
        rows: Vec<Vec<Scalar>>,
        pivots: Vec<usize>,
    ) -> Subspace {
        debug_assert_eq!(rows.len(), pivots.len());
        Subspace { field, ambient, rows, pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The residue of `v` after clearing every pivot coordinate against the basis.
    ///
    /// The map is linear, vanishes exactly on the subspace, and its output
    /// is zero at all pivot columns, so the non-pivot coordinates give
    /// coordinates on the quotient `K^ambient / self`.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row).skip(p) {
                if !b.is_zero() {
                    *x = &*x - &(&f * b);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Coefficients of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut().skip(p) {
            *x = &*x * &inv;
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, b) in row.iter_mut().zip(&r).skip(p) {
                if !b.is_zero() {
                    *x = &*x - &(&f * b);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// The span of `self ∪ other`.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }

    /// Non-pivot columns, the coordinates of the quotient space.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| self.pivots.binary_search(c).is_err()).collect()
    }
}

/// Solves `A x = b`, `A` given by its rows (each of length `cols`).
pub fn solve(field: Field, cols: usize, a: &[Vec<Scalar>], b: &[Scalar]) -> Result<Solution> {
    if a.len() != b.len() {
        return Err(Error::input(format!("{} equations but {} right-hand sides", a.len(), b.len())));
    }
    for row in a {
        check_vector(field, cols, row)?;
    }
    check_vector(field, b.len(), b)?;

    // Row-reduce the augmented system [A | b].
    let augmented = a.iter().zip(b).map(|(row, rhs)| {
        let mut r = row.clone();
        r.push(rhs.clone());
        r
    });
    let reduced = rref(field, cols + 1, augmented)?;
    let consistent = !reduced.pivots.contains(&cols);
    let particular = consistent.then(|| {
        let mut x = vec![field.zero(); cols];
        for (row, &p) in reduced.rows.iter().zip(&reduced.pivots) {
            x[p] = row[cols].clone();
        }
        x
    });

    let pivots: Vec<usize> = reduced.pivots.iter().copied().filter(|&p| p < cols).collect();
    let kernel_rows = (0..cols).filter(|c| !pivots.contains(c)).map(|free| {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &p) in reduced.rows.iter().zip(&reduced.pivots) {
            if p < cols {
                v[p] = -&row[free];
            }
        }
        v
    });
    let kernel = rref(field, cols, kernel_rows)?;
    Ok(Solution { particular, kernel })
}

/// Kernel of the linear map with the given rows, as a subspace of `K^cols`.
pub fn kernel(field: Field, cols: usize, a: &[Vec<Scalar>]) -> Result<Subspace> {
    let zeros = vec![field.zero(); a.len()];
    Ok(solve(field, cols, a, &zeros)?.kernel)
}
