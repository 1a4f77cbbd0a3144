//! `F_q`-points of the moduli of molds, by exhaustive search.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{self, cells, Field, Matrix, Scalar, Subspace};
use crate::io::subspace_json;
use crate::mold::{Mold, ParabolicType};

/// Result of [`enumerate_molds`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoldCensus {
    pub n: usize,
    pub d: usize,
    pub q: u64,
    pub total: u128,
    /// Counts keyed by parabolic type (`"1,2"`) or `"other"`.
    pub by_type: BTreeMap<String, u128>,
    /// Number of candidate subspaces visited.
    pub searched: u128,
    pub representatives: Option<Vec<Mold>>,
}

impl MoldCensus {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "n": self.n,
            "d": self.d,
            "q": self.q,
            "total": self.total,
            "byType": self.by_type,
            "searched": self.searched,
        });
        if let Some(reps) = &self.representatives {
            v["representatives"] = json!(reps.iter().map(|m| subspace_json(m.space())).collect::<Vec<_>>());
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Refuse searches with more candidates than this.
    pub limit: u128,
    pub keep_representatives: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { jobs: None, limit: 10_000_000, keep_representatives: false }
    }
}

/// Number of `d`-dimensional subspaces of `M_n(F_q)` containing `I_n`.
pub fn candidate_count(n: usize, d: usize, q: u64) -> Option<u128> {
    if d == 0 || d > n * n {
        return Some(0);
    }
    cells::gaussian_binomial((n * n - 1) as u32, (d - 1) as u32, q)
}

#[derive(Default)]
struct Tally {
    by_type: BTreeMap<String, u128>,
    reps: Vec<Mold>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for (k, v) in other.by_type {
            *self.by_type.entry(k).or_default() += v;
        }
        self.reps.extend(other.reps);
        self
    }
}

/// Enumerates the `d`-dimensional unital subalgebras of `M_n(F_q)` and classifies them.
///
/// A subspace containing `I` is `K·I ⊕ W` with `W` inside the hyperplane
/// `x_11 = 0`, so the search runs over `(d−1)`-dimensional `W` in echelon
/// cells of that hyperplane (coordinates `1..n²` of the row-major vector).
pub fn enumerate_molds(n: usize, d: usize, q: u64, options: &CensusOptions) -> Result<MoldCensus> {
    let field = Field::prime(q)?;
    if n == 0 {
        return Err(Error::input("degree must be at least 1"));
    }
    let searched =
        candidate_count(n, d, q).ok_or(Error::ResourceLimit { searched: u128::MAX, limit: options.limit })?;
    if searched > options.limit {
        return Err(Error::ResourceLimit { searched, limit: options.limit });
    }
    let mut census = MoldCensus {
        n,
        d,
        q,
        total: 0,
        by_type: BTreeMap::new(),
        searched,
        representatives: options.keep_representatives.then(Vec::new),
    };
    if searched == 0 {
        return Ok(census);
    }
    let hyper = n * n - 1;
    let pivot_sets = cells::pivot_sets(hyper, d - 1);
    let work = || {
        pivot_sets
            .par_iter()
            .map(|pivots| census_cell(field, n, pivots.clone(), options.keep_representatives))
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
    };
    let tally = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    census.total = tally.by_type.values().sum();
    census.by_type = tally.by_type;
    if let Some(reps) = census.representatives.as_mut() {
        let mut found = tally.reps;
        found.sort_by_key(|m| subspace_json(m.space()).to_string());
        *reps = found;
    }
    Ok(census)
}

fn census_cell(field: Field, n: usize, pivots: Vec<usize>, keep: bool) -> Result<Tally> {
    let hyper = n * n - 1;
    let cell = cells::EchelonCell::new(field, hyper, pivots)?;
    let mut tally = Tally::default();
    let mut failure = None;
    cell.for_each_rows(|rows| {
        if !closed(field, n, rows, cell.pivots()) {
            return true;
        }
        match classify(field, n, rows) {
            Ok(mold) => {
                let key = match mold.parabolic_type() {
                    Some((ty, _)) => ty.to_string(),
                    None => "other".to_string(),
                };
                *tally.by_type.entry(key).or_default() += 1;
                if keep {
                    tally.reps.push(mold);
                }
                true
            }
            Err(e) => {
                failure = Some(e);
                false
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(tally),
    }
}

fn embed(field: Field, n: usize, row: &[Scalar]) -> Matrix {
    let mut entries = Vec::with_capacity(n * n);
    entries.push(field.zero());
    entries.extend_from_slice(row);
    Matrix::new(field, n, entries).expect("n² entries")
}

/// Whether `K·I ⊕ span(rows)` is closed under products.
fn closed(field: Field, n: usize, rows: &[Vec<Scalar>], pivots: &[usize]) -> bool {
    let ms: Vec<Matrix> = rows.iter().map(|r| embed(field, n, r)).collect();
    for x in &ms {
        for y in &ms {
            let p = x * y;
            // Remove the identity component, then reduce against W.
            let c = p.get(0, 0).clone();
            let mut v: Vec<Scalar> = (1..n * n)
                .map(|k| {
                    let (i, j) = (k / n, k % n);
                    if i == j && !c.is_zero() {
                        p.get(i, j) - &c
                    } else {
                        p.get(i, j).clone()
                    }
                })
                .collect();
            for (row, &piv) in rows.iter().zip(pivots) {
                if v[piv].is_zero() {
                    continue;
                }
                let f = v[piv].clone();
                for (a, b) in v.iter_mut().zip(row).skip(piv) {
                    if !b.is_zero() {
                        *a = &*a - &(&f * b);
                    }
                }
            }
            if v.iter().any(|s| !s.is_zero()) {
                return false;
            }
        }
    }
    true
}

fn classify(field: Field, n: usize, rows: &[Vec<Scalar>]) -> Result<Mold> {
    let mut vectors = vec![Matrix::identity(field, n).into_entries()];
    vectors.extend(rows.iter().map(|r| embed(field, n, r).into_entries()));
    let space: Subspace = exact::rref(field, n * n, vectors)?;
    Mold::from_subspace(n, space)
}

/// The point count predicted for `Mold_{n,d}(F_q)`, where one is known.
pub fn predicted_count(n: usize, d: usize, q: u64) -> Option<u128> {
    let q = q as u128;
    let nn = n * n;
    if d == 0 || d > nn {
        return Some(0);
    }
    if d == 1 {
        return Some(1);
    }
    if n == 2 && d == 2 {
        return Some(q * q + q + 1);
    }
    if n == 2 && d == 3 {
        return Some(q + 1);
    }
    if d == nn {
        return Some(1);
    }
    if nn - n + 1 < d {
        return Some(0);
    }
    if d == nn - n + 1 && n > 2 {
        let geometric: u128 = (0..n as u32).map(|k| q.pow(k)).sum();
        return Some(2 * geometric);
    }
    None
}

/// Number of flags of type `(n_1, …, n_r)` over `F_q`: `[n]_q! / Π [n_i]_q!`.
pub fn flag_point_count(ty: &ParabolicType, q: u64) -> Result<u128> {
    if q < 2 {
        return Err(Error::input("q must be at least 2"));
    }
    let mut rest = ty.degree() as u32;
    let mut count: u128 = 1;
    for &part in ty.parts() {
        let part = part as u32;
        let g = cells::gaussian_binomial(rest, part, q).ok_or_else(|| Error::input("flag count overflows"))?;
        count = count.checked_mul(g).ok_or_else(|| Error::input("flag count overflows"))?;
        rest -= part;
    }
    Ok(count)
}
