use super::{order, IndexPair};
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar};
use crate::rep::{Representation, Word};

/// A word `α_{ij}` for every index, stored in index order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WordSet {
    entries: Vec<(IndexPair, Word)>,
}

impl WordSet {
    /// Builds the set from words listed in index order.
    pub fn new(n: usize, words: Vec<Word>) -> Result<WordSet> {
        let idx = order(n);
        if words.len() != idx.len() {
            return Err(Error::input(format!("expected {} words for degree {n}, got {}", idx.len(), words.len())));
        }
        Ok(WordSet { entries: idx.into_iter().zip(words).collect() })
    }

    pub fn get(&self, p: IndexPair) -> Option<&Word> {
        self.entries.iter().find(|(q, _)| *q == p).map(|(_, w)| w)
    }

    pub fn entries(&self) -> &[(IndexPair, Word)] {
        &self.entries
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.entries.iter().map(|(_, w)| w)
    }
}

/// The data fixed by a word set: pivots `τ_t` and matrices `Y_t = η_{t−1}(α_t)`.
///
/// Index `t` runs over [`super::index_order`]; `η_0(γ) = ρ(γ)` and
/// `η_t(γ) = η_{t−1}(γ) − ε_t(γ) · Y_t` with `ε_t(γ) = η_{t−1}(γ)_t / τ_t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chart {
    field: Field,
    n: usize,
    order: Vec<IndexPair>,
    tau: Vec<Scalar>,
    y: Vec<Matrix>,
}

impl Chart {
    fn empty(field: Field, n: usize) -> Chart {
        Chart { field, n, order: order(n), tau: Vec::new(), y: Vec::new() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[IndexPair] {
        &self.order
    }

    pub fn tau(&self) -> &[Scalar] {
        &self.tau
    }

    pub fn y(&self) -> &[Matrix] {
        &self.y
    }

    fn is_complete(&self) -> bool {
        self.tau.len() == self.order.len()
    }

    /// Runs the first `steps` steps of the recursion on `m`.
    ///
    /// Returns the `ε` values of those steps and `η_steps(m)`.
    pub fn reduce(&self, m: &Matrix, steps: usize) -> (Vec<Scalar>, Matrix) {
        let mut cur = m.clone();
        let mut eps = Vec::with_capacity(steps);
        for t in 0..steps.min(self.tau.len()) {
            let (r, c) = self.order[t].position();
            let e = cur.get(r, c) / &self.tau[t];
            if !e.is_zero() {
                cur = &cur - &self.y[t].scale(&e);
            }
            eps.push(e);
        }
        (eps, cur)
    }

    /// All `ε_t(m)`; `m` must be upper triangular for the remainder to vanish.
    pub fn epsilon(&self, m: &Matrix) -> Result<Vec<Scalar>> {
        let (eps, rest) = self.reduce(m, self.order.len());
        if !rest.is_zero() {
            return Err(Error::Invariant("matrix is not spanned by the chart".into()));
        }
        Ok(eps)
    }

    /// Tries to extend the chart by one index; returns the pivot on success.
    fn push(&mut self, m: &Matrix) -> Option<Scalar> {
        let t = self.tau.len();
        let (_, y) = self.reduce(m, t);
        let (r, c) = self.order[t].position();
        let tau = y.get(r, c).clone();
        if tau.is_zero() {
            return None;
        }
        self.tau.push(tau.clone());
        self.y.push(y);
        Some(tau)
    }
}

/// `ε` for every generator together with the chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsilonEta {
    pub chart: Chart,
    /// `epsilon[k][t]` is `ε_t` of generator `k + 1`.
    pub epsilon: Vec<Vec<Scalar>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StarResult {
    Satisfied(EpsilonEta),
    /// The first index whose pivot vanished.
    Failure(IndexPair),
}

fn require_triangular(rep: &Representation) -> Result<()> {
    if rep.generators().iter().all(Matrix::is_upper_triangular) {
        Ok(())
    } else {
        Err(Error::input("generator images must be upper triangular"))
    }
}

/// Runs the `ε/η/τ` recursion for a fixed word set.
pub fn epsilon_eta(rep: &Representation, words: &WordSet) -> Result<StarResult> {
    require_triangular(rep)?;
    let mut chart = Chart::empty(rep.field(), rep.degree());
    if words.entries().len() != chart.order.len() {
        return Err(Error::input("word set does not match the degree"));
    }
    for (p, w) in words.entries() {
        let m = rep.evaluate(w)?;
        if chart.push(&m).is_none() {
            return Ok(StarResult::Failure(*p));
        }
    }
    let epsilon = rep.generators().iter().map(|g| chart.epsilon(g)).collect::<Result<_>>()?;
    Ok(StarResult::Satisfied(EpsilonEta { chart, epsilon }))
}

/// Greedy search for a word set with unit pivots.
///
/// For each index in order, words are tried by length (starting from the
/// empty word) and lexicographically within a length; the first one with a
/// nonzero pivot is kept. Returns `None` when no word of length at most
/// `max_len` works at some index.
pub fn find_star_words(rep: &Representation, max_len: usize) -> Result<Option<WordSet>> {
    require_triangular(rep)?;
    let (kind, m) = (rep.kind(), rep.generator_count());
    let alphabet = Word::alphabet(kind, m);
    let mut levels: Vec<Vec<(Word, Matrix)>> = vec![vec![(Word::empty(), rep.evaluate(&Word::empty())?)]];
    let mut chart = Chart::empty(rep.field(), rep.degree());
    let mut chosen = Vec::with_capacity(chart.order.len());
    for _ in 0..chart.order.len() {
        let mut found = None;
        'search: for len in 0..=max_len {
            if levels.len() <= len {
                let mut next = Vec::new();
                for (w, mw) in &levels[len - 1] {
                    for &a in &alphabet {
                        if w.letters().last() == Some(&-a) {
                            continue;
                        }
                        next.push((w.concat(&Word::letter(a)), mw * rep.letter(a)?));
                    }
                }
                levels.push(next);
            }
            for (w, mw) in &levels[len] {
                if chart.push(mw).is_some() {
                    found = Some(w.clone());
                    break 'search;
                }
            }
        }
        match found {
            Some(w) => chosen.push(w),
            None => return Ok(None),
        }
    }
    debug_assert!(chart.is_complete());
    Ok(Some(WordSet::new(rep.degree(), chosen)?))
}
