use super::form::canonical_form;
use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::rep::Representation;

/// Outcome of an equivalence query.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Equivalence {
    Equivalent,
    Inequivalent,
    /// No common word set within the search bound, over an infinite field.
    Undecided,
}

/// Largest `GL_n(F_q)` ambient (`q^{n²}`) the brute-force search will walk.
const CONJUGATOR_SEARCH_LIMIT: u128 = 1 << 24;

/// Whether two representations with Borel mold are conjugate under `GL_n(K)`.
///
/// Both are brought to canonical form; they are equivalent exactly when the
/// greedy word sets and the canonical images coincide. The word search
/// only depends on the conjugacy class, so a search that succeeds for one
/// input and fails for the other already separates them. When both
/// searches fail, `F_q` inputs fall back to [`conjugator_search`] and
/// rational inputs are reported as undecided.
pub fn equivalent(r1: &Representation, r2: &Representation, max_len: usize) -> Result<Equivalence> {
    if r1.degree() != r2.degree()
        || r1.field() != r2.field()
        || r1.kind() != r2.kind()
        || r1.generator_count() != r2.generator_count()
    {
        return Err(Error::input("representations differ in degree, field, kind or generator count"));
    }
    let c1 = canonical_form(r1, max_len);
    let c2 = canonical_form(r2, max_len);
    match (c1, c2) {
        (Ok(a), Ok(b)) => Ok(if a.words == b.words && a.images == b.images {
            Equivalence::Equivalent
        } else {
            Equivalence::Inequivalent
        }),
        (Err(Error::SearchExhausted { .. }), Ok(_)) | (Ok(_), Err(Error::SearchExhausted { .. })) => {
            Ok(Equivalence::Inequivalent)
        }
        (Err(Error::SearchExhausted { .. }), Err(Error::SearchExhausted { .. })) => {
            if r1.field().is_rational() {
                Ok(Equivalence::Undecided)
            } else {
                Ok(match conjugator_search(r1, r2)? {
                    Some(_) => Equivalence::Equivalent,
                    None => Equivalence::Inequivalent,
                })
            }
        }
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

/// Exhaustive search for `P ∈ GL_n(F_q)` with `P ρ_1(g) P⁻¹ = ρ_2(g)` for all generators.
pub fn conjugator_search(r1: &Representation, r2: &Representation) -> Result<Option<Matrix>> {
    let field = r1.field();
    let n = r1.degree();
    let elements =
        field.elements().ok_or_else(|| Error::Unsupported("conjugator search needs a finite field".into()))?;
    if r2.field() != field || r2.degree() != n || r2.generator_count() != r1.generator_count() {
        return Err(Error::input("representations differ in shape"));
    }
    let q = elements.len() as u128;
    let total = q.checked_pow((n * n) as u32).unwrap_or(u128::MAX);
    if total > CONJUGATOR_SEARCH_LIMIT {
        return Err(Error::ResourceLimit { searched: total, limit: CONJUGATOR_SEARCH_LIMIT });
    }
    let mut digits = vec![0usize; n * n];
    loop {
        let p = Matrix::new(field, n, digits.iter().map(|&d| elements[d].clone()).collect())?;
        let intertwines = r1.generators().iter().zip(r2.generators()).all(|(a, b)| &p * a == b * &p);
        if intertwines && p.is_invertible() {
            return Ok(Some(p));
        }
        let mut k = 0;
        loop {
            if k == digits.len() {
                return Ok(None);
            }
            digits[k] += 1;
            if digits[k] < elements.len() {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}
