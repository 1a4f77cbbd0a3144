use crate::error::{Error, Result};
use crate::exact::{self, Matrix, Scalar, Subspace};
use crate::mold::algebra_closure;

fn check_deg2(ms: &[&Matrix]) -> Result<()> {
    let field = ms[0].field();
    for m in ms {
        if m.degree() != 2 {
            return Err(Error::input(format!("discriminants need 2x2 matrices, got degree {}", m.degree())));
        }
        if m.field() != field {
            return Err(Error::input("discriminant arguments must share a field"));
        }
    }
    Ok(())
}

/// `Δ(A,B) = tr(A)²det(B) + tr(B)²det(A) + tr(AB)² − tr(A)tr(B)tr(AB) − 4det(A)det(B)`.
pub fn discriminant2(a: &Matrix, b: &Matrix) -> Result<Scalar> {
    check_deg2(&[a, b])?;
    let field = a.field();
    let (ta, tb) = (a.trace(), b.trace());
    let tab = (a * b).trace();
    let (da, db) = (a.det(), b.det());
    let four = field.from_i64(4);
    Ok(&ta * &ta * &db + &tb * &tb * &da + &tab * &tab - &ta * &tb * &tab - four * &da * &db)
}

/// Determinant of the 4×4 matrix whose rows are the row-major entries of `A, B, C, D`.
pub fn discriminant4(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Scalar> {
    check_deg2(&[a, b, c, d])?;
    let rows: Vec<Vec<Scalar>> = [a, b, c, d].iter().map(|m| m.entries().to_vec()).collect();
    Ok(Matrix::from_rows(a.field(), rows)?.det())
}

/// `span{I, A, B}` together with whether the algebra generated by `A, B` stays inside it.
pub fn span_of_pair(a: &Matrix, b: &Matrix) -> Result<(Subspace, bool)> {
    check_deg2(&[a, b])?;
    let field = a.field();
    let span = exact::rref(
        field,
        4,
        [Matrix::identity(field, 2), a.clone(), b.clone()].into_iter().map(Matrix::into_entries),
    )?;
    let closure = algebra_closure(field, 2, &[a.clone(), b.clone()])?;
    let inside = span.contains_subspace(closure.space());
    Ok((span, inside))
}
