//! Borel detection, the invariant complete flag, simultaneous
//! triangularization, characters, and the degree-2 discriminants.

mod discriminant;

pub use discriminant::{discriminant2, discriminant4, span_of_pair};

use crate::error::{Error, Result};
use crate::exact::{self, cells, Field, Matrix, Scalar, Subspace};
use crate::mold::{algebra_closure, Mold};
use crate::rep::{Kind, Representation, Word};

/// A complete flag `E_1 ⊂ … ⊂ E_{n−1}` in `K^n`; `subspaces[i]` has dimension `i + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Flag {
    pub subspaces: Vec<Subspace>,
}

impl Flag {
    /// The standard flag `E_i = span{e_1, …, e_i}`.
    pub fn standard(field: Field, n: usize) -> Flag {
        let subspaces = (1..n)
            .map(|i| {
                let rows = (0..i).map(|k| {
                    let mut v = vec![field.zero(); n];
                    v[k] = field.one();
                    v
                });
                exact::rref(field, n, rows).expect("unit vectors")
            })
            .collect();
        Flag { subspaces }
    }

    /// `P · E_i` for each member.
    pub fn push_forward(&self, p: &Matrix) -> Result<Flag> {
        let subspaces = self
            .subspaces
            .iter()
            .map(|s| exact::rref(p.field(), p.degree(), s.basis().iter().map(|v| p.mul_vec(v))))
            .collect::<Result<_>>()?;
        Ok(Flag { subspaces })
    }
}

pub fn closure(rep: &Representation) -> Mold {
    algebra_closure(rep.field(), rep.degree(), rep.generators()).expect("representation is well formed")
}

/// Whether the images generate a mold conjugate to `𝓑_n`.
pub fn is_borel(rep: &Representation) -> bool {
    is_borel_mold(&closure(rep))
}

pub fn is_borel_mold(mold: &Mold) -> bool {
    let n = mold.degree();
    mold.rank() == n * (n + 1) / 2 && mold.parabolic_type().is_some_and(|(ty, _)| ty.is_borel())
}

fn require_borel(rep: &Representation) -> Result<Mold> {
    let mold = closure(rep);
    if is_borel_mold(&mold) {
        Ok(mold)
    } else {
        Err(Error::NotBorel)
    }
}

/// The unique complete flag invariant under every generator.
///
/// `E_{n−1} = C·K^n` and `E_{i−1} = C·E_i`, where `C` is the span of
/// commutators in the generated algebra. Over `F_q` a degenerate chain
/// falls back to exhaustive search.
pub fn invariant_flag(rep: &Representation) -> Result<Flag> {
    let mold = require_borel(rep)?;
    flag_of_mold(&mold)
}

fn flag_of_mold(mold: &Mold) -> Result<Flag> {
    let (field, n) = (mold.field(), mold.degree());
    let basis = mold.basis_matrices();
    let commutators: Vec<Matrix> =
        basis.iter().enumerate().flat_map(|(k, x)| basis[k + 1..].iter().map(move |y| x.commutator(y))).collect();
    let c_span = exact::rref(field, n * n, commutators.iter().map(|m| m.entries().to_vec()))?;
    let c: Vec<Matrix> = c_span.basis().iter().map(|v| Matrix::new(field, n, v.clone()).expect("n² entries")).collect();
    let mut subspaces = Vec::with_capacity(n.saturating_sub(1));
    let mut current = Subspace::full(field, n);
    for dim in (1..n).rev() {
        let images = c.iter().flat_map(|x| current.basis().iter().map(|w| x.mul_vec(w)));
        current = exact::rref(field, n, images)?;
        if current.rank() != dim {
            return flag_by_search(mold);
        }
        subspaces.push(current.clone());
    }
    subspaces.reverse();
    Ok(Flag { subspaces })
}

fn flag_by_search(mold: &Mold) -> Result<Flag> {
    if mold.field().is_rational() {
        return Err(Error::Invariant("commutator chain of a Borel mold degenerated".into()));
    }
    let n = mold.degree();
    let mut subspaces = Vec::new();
    for r in 1..n {
        let found = mold.invariant_subspaces(r)?;
        match found.as_slice() {
            [only] => subspaces.push(only.clone()),
            _ => return Err(Error::Invariant(format!("{} invariant subspaces of dimension {r}", found.len()))),
        }
    }
    Ok(Flag { subspaces })
}

/// Exhaustive list of `r`-dimensional subspaces invariant under all generators (`F_q` only).
pub fn invariant_subspaces_exhaustive(rep: &Representation, r: usize) -> Result<Vec<Subspace>> {
    let n = rep.degree();
    let mut out = Vec::new();
    for pivots in cells::pivot_sets(n, r) {
        for s in cells::EchelonCell::new(rep.field(), n, pivots)?.subspaces() {
            if rep.generators().iter().all(|g| s.basis().iter().all(|w| s.contains(&g.mul_vec(w)))) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// `P` and `ρ' = P⁻¹ · ρ · P`, with every `ρ'(g)` upper triangular.
///
/// The columns of `P` are an adapted basis of the invariant flag: column `i`
/// is the first echelon basis vector of `E_i` outside `E_{i−1}`.
pub fn triangularize(rep: &Representation) -> Result<(Matrix, Representation)> {
    let flag = invariant_flag(rep)?;
    let (field, n) = (rep.field(), rep.degree());
    let mut members: Vec<Subspace> = flag.subspaces;
    members.push(Subspace::full(field, n));
    let mut span = Subspace::zero(field, n);
    let mut columns = Vec::with_capacity(n);
    for e in &members {
        let v = e
            .basis()
            .iter()
            .find(|v| !span.contains(v))
            .ok_or_else(|| Error::Invariant("flag members are not strictly increasing".into()))?
            .clone();
        span.insert(v.clone());
        columns.push(v);
    }
    let p = Matrix::from_columns(field, &columns)?;
    let p_inv = p.inverse()?;
    let tri = rep.map(|g| g.conjugate(&p_inv, &p))?;
    if !tri.generators().iter().all(Matrix::is_upper_triangular) {
        return Err(Error::Invariant("triangularized image is not upper triangular".into()));
    }
    Ok((p, tri))
}

/// `χ_i(g)` for `i = 1..n`: the diagonal entries after triangularization.
///
/// `result[i][k]` is the value of the `(i+1)`-th character on generator `k+1`.
pub fn characters(rep: &Representation) -> Result<Vec<Vec<Scalar>>> {
    let (_, tri) = triangularize(rep)?;
    Ok((0..rep.degree()).map(|i| tri.generators().iter().map(|g| g.get(i, i).clone()).collect()).collect())
}

/// The degree-2 criterion: `tr ρ([u, v]) = 2` for all words up to `max_len`,
/// and some pair of generators does not commute.
pub fn borel_criterion_deg2(rep: &Representation, max_len: usize) -> Result<bool> {
    if rep.degree() != 2 {
        return Err(Error::input("the degree-2 criterion needs a degree-2 representation"));
    }
    if rep.kind() != Kind::Group {
        return Err(Error::input("the degree-2 criterion is stated for group representations"));
    }
    let gens = rep.generators();
    let noncommuting = gens.iter().enumerate().any(|(k, a)| gens[k + 1..].iter().any(|b| !a.commutator(b).is_zero()));
    if !noncommuting {
        return Ok(false);
    }
    let words = Word::up_to_length(Kind::Group, rep.generator_count(), max_len);
    let images: Vec<(Matrix, Matrix)> =
        words.iter().map(|w| Ok((rep.evaluate(w)?, rep.evaluate(&w.inverse())?))).collect::<Result<_>>()?;
    let two = rep.field().from_i64(2);
    for (k, (u, u_inv)) in images.iter().enumerate() {
        for (v, v_inv) in &images[k + 1..] {
            let c = &(&(u * v) * u_inv) * v_inv;
            if c.trace() != two {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
