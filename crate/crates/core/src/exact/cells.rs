//! Enumeration of subspaces of `F_q^m` by reduced row-echelon cells.
//!
//! A `k`-dimensional subspace has a unique RREF basis, determined by its
//! pivot columns and by the entries at the free positions (right of a row's
//! pivot, outside other pivot columns). Enumerating pivot sets and then all
//! fillings of the free positions visits every subspace exactly once.

use super::{Field, Scalar, Subspace};
use crate::error::{Error, Result};

/// Number of `k`-dimensional subspaces of an `m`-dimensional space over `F_q`.
///
/// Returns `None` on `u128` overflow.
pub fn gaussian_binomial(m: u32, k: u32, q: u64) -> Option<u128> {
    if k > m {
        return Some(0);
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.checked_mul(q.checked_pow(m - i)?.checked_sub(1)?)?;
        den = den.checked_mul(q.checked_pow(i + 1)?.checked_sub(1)?)?;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    Some(num / den)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All `k`-subsets of `0..m` in lexicographic order.
pub fn pivot_sets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..m {
            if m - c < k - cur.len() {
                break;
            }
            cur.push(c);
            go(c + 1, m, k, cur, out);
            cur.pop();
        }
    }
    go(0, m, k, &mut cur, &mut out);
    out
}

/// One echelon cell: a fixed pivot set, with free entries ranging over `F_q`.
#[derive(Clone, Debug)]
pub struct EchelonCell {
    field: Field,
    ambient: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
}

impl EchelonCell {
    pub fn new(field: Field, ambient: usize, pivots: Vec<usize>) -> Result<EchelonCell> {
        if field.is_rational() {
            return Err(Error::Unsupported("echelon cells are only enumerable over F_q".into()));
        }
        if pivots.windows(2).any(|w| w[0] >= w[1]) || pivots.last().is_some_and(|&p| p >= ambient) {
            return Err(Error::input("pivot columns must be strictly increasing and in range"));
        }
        let free = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                let pivots = &pivots;
                (p + 1..ambient).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
            })
            .collect();
        Ok(EchelonCell { field, ambient, pivots, free })
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Number of subspaces in the cell, `None` on overflow.
    pub fn size(&self) -> Option<u128> {
        (self.field.order()? as u128).checked_pow(self.free.len() as u32)
    }

    /// Calls `visit` with the RREF rows of every subspace in the cell.
    ///
    /// The rows buffer is reused between calls. Returning `false` from
    /// `visit` stops the enumeration early.
    pub fn for_each_rows(&self, mut visit: impl FnMut(&[Vec<Scalar>]) -> bool) {
        let elements = self.field.elements().expect("finite field");
        let q = elements.len();
        let zero = self.field.zero();
        let one = self.field.one();
        let mut rows: Vec<Vec<Scalar>> = self
            .pivots
            .iter()
            .map(|&p| {
                let mut v = vec![zero.clone(); self.ambient];
                v[p] = one.clone();
                v
            })
            .collect();
        let mut digits = vec![0usize; self.free.len()];
        loop {
            if !visit(&rows) {
                return;
            }
            // Odometer increment over the free positions.
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return;
                }
                let (r, c) = self.free[i];
                digits[i] += 1;
                if digits[i] == q {
                    digits[i] = 0;
                    rows[r][c] = zero.clone();
                    i += 1;
                } else {
                    rows[r][c] = elements[digits[i]].clone();
                    break;
                }
            }
        }
    }

    pub fn subspaces(&self) -> Vec<Subspace> {
        let mut out = Vec::new();
        self.for_each_rows(|rows| {
            out.push(Subspace::from_echelon_unchecked(self.field, self.ambient, rows.to_vec(), self.pivots.clone()));
            true
        });
        out
    }
}

/// Every `dim`-dimensional subspace of `F_q^ambient`, in cell order.
pub fn subspaces(field: Field, ambient: usize, dim: usize) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for pivots in pivot_sets(ambient, dim) {
        out.extend(EchelonCell::new(field, ambient, pivots)?.subspaces());
    }
    Ok(out)
}
