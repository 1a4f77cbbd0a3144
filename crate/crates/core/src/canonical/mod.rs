//! Canonical forms of representations with Borel mold.
//!
//! The pipeline runs on the triangularized representation: a word set with
//! unit pivots fixes a chart (the `τ`, `ε`, `η` tables), the matrices
//! `η_{i′j′}(α_{ij})` are reduced to well-shaped matrices `X(i,j)`, and a
//! normalizing upper-triangular `Q` is solved for. The canonical images are
//! `Q · ρ_Δ(g) · Q⁻¹`.

mod chart;
mod equiv;
mod form;
mod shape;

use std::cmp::Ordering;
use std::fmt;

pub use chart::{epsilon_eta, find_star_words, Chart, EpsilonEta, StarResult, WordSet};
pub use equiv::{conjugator_search, equivalent, Equivalence};
pub use form::{canonical_form, canonical_form_with_words, CanonicalData};
pub use shape::{decompose, is_shaped, normalizing_matrix, verify_normalization, well_shaped_basis, WellShaped};

use crate::error::{Error, Result};

/// An index `(i, j)` with `1 ≤ i ≤ j ≤ n` (1-based).
///
/// Ordered by `j − i` first and then by `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct IndexPair {
    pub i: usize,
    pub j: usize,
}

impl IndexPair {
    pub fn new(i: usize, j: usize) -> IndexPair {
        debug_assert!(1 <= i && i <= j);
        IndexPair { i, j }
    }

    fn key(self) -> (usize, usize) {
        (self.j - self.i, self.i)
    }

    /// Whether `(k, l)` lies in the convex hull `{(k, l) : k ≤ i, l ≥ j}`.
    pub fn hull_contains(self, other: IndexPair) -> bool {
        other.i <= self.i && other.j >= self.j
    }

    /// 0-based `(row, column)`.
    pub fn position(self) -> (usize, usize) {
        (self.i - 1, self.j - 1)
    }
}

impl Ord for IndexPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for IndexPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

/// All pairs `(i, j)`, `1 ≤ i ≤ j ≤ n`, in ascending order.
pub fn index_order(n: usize) -> Result<Vec<IndexPair>> {
    if n == 0 {
        return Err(Error::input("degree must be at least 1"));
    }
    Ok(order(n))
}

pub(crate) fn order(n: usize) -> Vec<IndexPair> {
    (0..n).flat_map(|d| (1..=n - d).map(move |i| IndexPair::new(i, i + d))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(xs: &[(usize, usize)]) -> Vec<IndexPair> {
        xs.iter().map(|&(i, j)| IndexPair::new(i, j)).collect()
    }

    #[test]
    fn order_examples() {
        assert_eq!(index_order(2).unwrap(), pairs(&[(1, 1), (2, 2), (1, 2)]));
        assert_eq!(index_order(3).unwrap(), pairs(&[(1, 1), (2, 2), (3, 3), (1, 2), (2, 3), (1, 3)]));
        assert_eq!(index_order(1).unwrap(), pairs(&[(1, 1)]));
        assert!(index_order(0).is_err());
    }

    #[test]
    fn order_agrees_with_sort() {
        for n in 1..=6 {
            let mut all: Vec<IndexPair> = (1..=n).flat_map(|i| (i..=n).map(move |j| IndexPair::new(i, j))).collect();
            all.sort();
            assert_eq!(all, order(n));
        }
    }

    #[test]
    fn hull() {
        let h = IndexPair::new(2, 2);
        let inside: Vec<_> = order(3).into_iter().filter(|&p| h.hull_contains(p)).collect();
        assert_eq!(inside, pairs(&[(2, 2), (1, 2), (2, 3), (1, 3)]));
        assert_eq!(IndexPair::new(1, 3).to_string(), "1,3");
    }
}
