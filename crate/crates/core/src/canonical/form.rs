use serde_json::{json, Map, Value};

use super::chart::{epsilon_eta, find_star_words, StarResult, WordSet};
use super::shape::{normalizing_matrix, well_shaped_basis};
use super::{order, IndexPair};
use crate::borel::triangularize;
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar};
use crate::io::{field_json, matrix_json};
use crate::rep::{Kind, Representation, Word};

/// Invariant tables and canonical images of a representation with Borel mold.
///
/// Tables are stored in the frame of the triangularized representation
/// `ρ_Δ = P⁻¹ρP`; index-keyed vectors follow [`super::index_order`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalData {
    pub field: Field,
    pub n: usize,
    pub kind: Kind,
    pub order: Vec<IndexPair>,
    pub words: WordSet,
    pub tau: Vec<Scalar>,
    /// `epsilon[k][t]` is `ε_t` of generator `k + 1`.
    pub epsilon: Vec<Vec<Scalar>>,
    /// `η_{i′j′}(α_{ij})`.
    pub y: Vec<Matrix>,
    pub x: Vec<Matrix>,
    pub a: Vec<Vec<(IndexPair, Scalar)>>,
    pub q: Matrix,
    /// `P` with `P⁻¹ρP` upper triangular.
    pub triangularizer: Matrix,
    /// `Q · ρ_Δ(g) · Q⁻¹` for each generator.
    pub images: Vec<Matrix>,
}

impl CanonicalData {
    pub fn index(&self, p: IndexPair) -> Option<usize> {
        self.order.binary_search(&p).ok()
    }

    pub fn tau_at(&self, p: IndexPair) -> Option<&Scalar> {
        self.index(p).map(|t| &self.tau[t])
    }

    pub fn x_at(&self, p: IndexPair) -> Option<&Matrix> {
        self.index(p).map(|t| &self.x[t])
    }

    /// The JSON document, in the frame where `Q` is the identity.
    ///
    /// `τ_ij` becomes `τ_ij q_ii / q_jj` and `X(i,j)` becomes `Q X(i,j) Q⁻¹`;
    /// `ε`, the reduction coefficients, the words and the images are
    /// unchanged. In this frame all entries are invariant under conjugation
    /// of the input, so equivalent inputs serialize to identical bytes.
    pub fn to_json(&self) -> Value {
        let q_inv = self.q.inverse().expect("Q is invertible");
        let key = |p: &IndexPair| p.to_string();
        let mut words = Map::new();
        let mut tau = Map::new();
        let mut xs = Map::new();
        let mut a = Map::new();
        for (t, p) in self.order.iter().enumerate() {
            let (r, c) = p.position();
            let ratio = self.q.get(r, r) / self.q.get(c, c);
            words.insert(key(p), json!(self.words.entries()[t].1));
            tau.insert(key(p), json!((&self.tau[t] * &ratio).to_string()));
            xs.insert(key(p), matrix_json(&self.x[t].conjugate(&self.q, &q_inv)));
            let coeffs: Map<String, Value> = self.a[t].iter().map(|(s, v)| (key(s), json!(v.to_string()))).collect();
            a.insert(key(p), Value::Object(coeffs));
        }
        let mut epsilon = Map::new();
        for (k, row) in self.epsilon.iter().enumerate() {
            let table: Map<String, Value> =
                self.order.iter().zip(row).map(|(p, v)| (key(p), json!(v.to_string()))).collect();
            epsilon.insert(format!("g{}", k + 1), Value::Object(table));
        }
        json!({
            "field": field_json(self.field),
            "n": self.n,
            "kind": self.kind,
            "generators": self.images.len(),
            "words": words,
            "tau": tau,
            "epsilon": epsilon,
            "X": xs,
            "a": a,
            "Q": matrix_json(&Matrix::identity(self.field, self.n)),
            "images": self.images.iter().map(matrix_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }
}

/// Canonical form, with the word set found by [`find_star_words`].
pub fn canonical_form(rep: &Representation, max_len: usize) -> Result<CanonicalData> {
    let (p, tri) = triangularize(rep)?;
    let words = find_star_words(&tri, max_len)?.ok_or(Error::SearchExhausted { max_len })?;
    finish(p, &tri, words)
}

/// Canonical form for a caller-chosen word set (words in index order).
pub fn canonical_form_with_words(rep: &Representation, words: &[Word]) -> Result<CanonicalData> {
    let (p, tri) = triangularize(rep)?;
    finish(p, &tri, WordSet::new(rep.degree(), words.to_vec())?)
}

fn finish(p: Matrix, tri: &Representation, words: WordSet) -> Result<CanonicalData> {
    let ee = match epsilon_eta(tri, &words)? {
        StarResult::Satisfied(ee) => ee,
        StarResult::Failure(at) => return Err(Error::StarFailure(at)),
    };
    let shaped = well_shaped_basis(ee.chart.y())?;
    let q = normalizing_matrix(&shaped.x)?;
    let q_inv = q.inverse()?;
    let images = tri.generators().iter().map(|g| g.conjugate(&q, &q_inv)).collect();
    Ok(CanonicalData {
        field: tri.field(),
        n: tri.degree(),
        kind: tri.kind(),
        order: order(tri.degree()),
        words,
        tau: ee.chart.tau().to_vec(),
        epsilon: ee.epsilon,
        y: ee.chart.y().to_vec(),
        x: shaped.x,
        a: shaped.a,
        q,
        triangularizer: p,
        images,
    })
}
