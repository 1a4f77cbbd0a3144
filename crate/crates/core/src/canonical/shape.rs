use super::{order, IndexPair};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};

/// Upper-triangular support of `m`, in index order.
fn support(m: &Matrix) -> Vec<IndexPair> {
    order(m.degree())
        .into_iter()
        .filter(|p| {
            let (r, c) = p.position();
            !m.get(r, c).is_zero()
        })
        .collect()
}

fn entry(m: &Matrix, p: IndexPair) -> &Scalar {
    let (r, c) = p.position();
    m.get(r, c)
}

/// Whether `m` has a nonzero `p`-entry and support inside the hull of `p`.
pub fn is_shaped(m: &Matrix, p: IndexPair) -> bool {
    m.is_upper_triangular() && !entry(m, p).is_zero() && support(m).into_iter().all(|s| p.hull_contains(s))
}

/// Output of [`well_shaped_basis`], indexed like [`super::index_order`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WellShaped {
    pub x: Vec<Matrix>,
    /// `a[t]` lists `((s, t′), a_{s t′}(index t))` in the order the reductions happened.
    pub a: Vec<Vec<(IndexPair, Scalar)>>,
}

/// Reduces each `Y(i,j)` to an `(i,j)`-shaped matrix `X(i,j)`.
///
/// Indices are processed from `(1,n)` downwards. While the support of the
/// residual leaves the hull of `(i,j)`, the smallest offending index
/// `(s,t)` is cleared by subtracting a multiple of `X(s,t)`; since every
/// hull only contains larger indices, that smallest index is also the
/// minimum of `hull(Supp) \ hull(i,j)`.
pub fn well_shaped_basis(y: &[Matrix]) -> Result<WellShaped> {
    let Some(first) = y.first() else {
        return Err(Error::input("no matrices to shape"));
    };
    let n = first.degree();
    let idx = order(n);
    if y.len() != idx.len() {
        return Err(Error::input(format!("expected {} matrices for degree {n}", idx.len())));
    }
    let mut x: Vec<Option<Matrix>> = vec![None; idx.len()];
    let mut a: Vec<Vec<(IndexPair, Scalar)>> = vec![Vec::new(); idx.len()];
    for t in (0..idx.len()).rev() {
        let p = idx[t];
        let mut z = y[t].clone();
        if !z.is_upper_triangular() || entry(&z, p).is_zero() {
            return Err(Error::input(format!("Y({p}) has a zero pivot or is not upper triangular")));
        }
        while let Some(s) = support(&z).into_iter().find(|&s| !p.hull_contains(s)) {
            let u = idx.binary_search(&s).expect("index in order");
            let xs = x[u].as_ref().expect("larger indices are shaped first");
            let coeff = entry(&z, s) / entry(xs, s);
            z = &z - &xs.scale(&coeff);
            a[t].push((s, coeff));
        }
        x[t] = Some(z);
    }
    Ok(WellShaped { x: x.into_iter().map(|m| m.expect("all filled")).collect(), a })
}

/// Coefficients `c_t` with `m = Σ c_t X(t)` for an upper-triangular `m`.
///
/// Repeatedly clears the smallest index in the support.
pub fn decompose(m: &Matrix, x: &[Matrix]) -> Result<Vec<Scalar>> {
    let n = m.degree();
    let idx = order(n);
    if !m.is_upper_triangular() || x.len() != idx.len() {
        return Err(Error::input("decomposition needs an upper-triangular matrix and a full shaped basis"));
    }
    let mut coeffs = vec![m.field().zero(); idx.len()];
    let mut z = m.clone();
    while let Some(&s) = support(&z).first() {
        let u = idx.binary_search(&s).expect("index in order");
        let c = entry(&z, s)
            .checked_div(entry(&x[u], s))
            .ok_or_else(|| Error::input(format!("X({s}) has a zero pivot")))?;
        z = &z - &x[u].scale(&c);
        coeffs[u] = &coeffs[u] + &c;
    }
    Ok(coeffs)
}

fn half(n: usize) -> usize {
    n.div_ceil(2)
}

fn conj_entry(q: &Matrix, x: &Matrix, r: usize, c: usize) -> Result<Scalar> {
    let q_inv = q.inverse()?;
    Ok(x.conjugate(q, &q_inv).get(r, c).clone())
}

/// The normalizing upper-triangular matrix `Q`.
///
/// Diagonal: `q_11 = 1`, `q_kk = τ_{1n}/τ_{kn}` for `2 ≤ k ≤ ⌊(n+1)/2⌋`,
/// `q_kk = τ_{1k}` above that. Off the diagonal `q_ij` is solved in index
/// order from `(Q X(1,1) Q⁻¹)_{1j} = 0` when `i = 1` and from
/// `(Q X(j,j) Q⁻¹)_{ij} = 0` otherwise; each equation is affine in `q_ij`.
pub fn normalizing_matrix(x: &[Matrix]) -> Result<Matrix> {
    let Some(first) = x.first() else {
        return Err(Error::input("no shaped matrices"));
    };
    let (field, n) = (first.field(), first.degree());
    let idx = order(n);
    if x.len() != idx.len() {
        return Err(Error::input(format!("expected {} matrices for degree {n}", idx.len())));
    }
    let xm = |i: usize, j: usize| &x[idx.binary_search(&IndexPair::new(i, j)).expect("index")];
    let tau = |i: usize, j: usize| entry(xm(i, j), IndexPair::new(i, j)).clone();
    for (t, p) in idx.iter().enumerate() {
        if entry(&x[t], *p).is_zero() {
            return Err(Error::input(format!("X({p}) has a zero pivot")));
        }
    }

    let mut q = Matrix::identity(field, n);
    for k in 2..=n {
        let v = if k <= half(n) { &tau(1, n) / &tau(k, n) } else { tau(1, k) };
        q.set(k - 1, k - 1, v);
    }
    for p in idx.iter().filter(|p| p.i < p.j) {
        let (i, j) = (p.i, p.j);
        let (target, r, c) = if i == 1 { (xm(1, 1), 0, j - 1) } else { (xm(j, j), i - 1, j - 1) };
        let f = |t: &Scalar| -> Result<Scalar> {
            let mut qt = q.clone();
            qt.set(i - 1, j - 1, t.clone());
            conj_entry(&qt, target, r, c)
        };
        let f0 = f(&field.zero())?;
        let slope = &f(&field.one())? - &f0;
        let solution = (-&f0)
            .checked_div(&slope)
            .ok_or_else(|| Error::Invariant(format!("normalizing equation at ({i},{j}) has zero coefficient")))?;
        q.set(i - 1, j - 1, solution);
    }
    verify_normalization(&q, x)?;
    Ok(q)
}

/// Checks the four families of normalization equalities for `Q`.
pub fn verify_normalization(q: &Matrix, x: &[Matrix]) -> Result<()> {
    let (field, n) = (q.field(), q.degree());
    let idx = order(n);
    let xm = |i: usize, j: usize| &x[idx.binary_search(&IndexPair::new(i, j)).expect("index")];
    let q_inv = q.inverse()?;
    let at = |m: &Matrix, r: usize, c: usize| m.conjugate(q, &q_inv).get(r - 1, c - 1).clone();
    let (zero, one) = (field.zero(), field.one());
    let fail = |what: String| Err(Error::Invariant(format!("normalization failed: {what}")));
    for i in half(n) + 1..=n {
        if at(xm(1, i), 1, i) != one {
            return fail(format!("(QX(1,{i})Q⁻¹)_(1,{i}) ≠ 1"));
        }
    }
    for i in 2..=half(n) {
        if at(xm(i, n), i, n) != one {
            return fail(format!("(QX({i},{n})Q⁻¹)_({i},{n}) ≠ 1"));
        }
    }
    for i in 2..=n {
        if at(xm(1, 1), 1, i) != zero {
            return fail(format!("(QX(1,1)Q⁻¹)_(1,{i}) ≠ 0"));
        }
    }
    for i in 3..=n {
        for j in 2..i {
            if at(xm(i, i), j, i) != zero {
                return fail(format!("(QX({i},{i})Q⁻¹)_({j},{i}) ≠ 0"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Field;

    fn q() -> Field {
        Field::rationals()
    }

    fn m(rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(q(), rows.iter().map(|r| r.iter().map(|s| q().parse(s).unwrap()).collect()).collect())
            .unwrap()
    }

    #[test]
    fn running_example_shapes() {
        // Y in index order (1,1), (2,2), (1,2).
        let y = vec![m(&[&["2", "0"], &["0", "1"]]), m(&[&["0", "1"], &["0", "1/2"]]), m(&[&["0", "1"], &["0", "0"]])];
        let ws = well_shaped_basis(&y).unwrap();
        assert_eq!(ws.x[0], m(&[&["2", "-2"], &["0", "0"]]));
        assert_eq!(ws.x[1], y[1]);
        assert_eq!(ws.x[2], y[2]);
        assert_eq!(ws.a[0], vec![(IndexPair::new(2, 2), q().from_i64(2))]);
        assert!(ws.a[1].is_empty() && ws.a[2].is_empty());
        for (t, p) in order(2).into_iter().enumerate() {
            assert!(is_shaped(&ws.x[t], p));
        }
        let qm = normalizing_matrix(&ws.x).unwrap();
        assert_eq!(qm, m(&[&["1", "-1"], &["0", "1"]]));
    }

    #[test]
    fn already_shaped_is_fixed() {
        let n = 3;
        let y: Vec<Matrix> = order(n).iter().map(|p| Matrix::unit(q(), n, p.i - 1, p.j - 1)).collect();
        let ws = well_shaped_basis(&y).unwrap();
        assert_eq!(ws.x, y);
        assert!(ws.a.iter().all(Vec::is_empty));
        assert!(normalizing_matrix(&ws.x).unwrap().is_identity());
    }

    #[test]
    fn forced_subtraction_in_degree_three() {
        let n = 3;
        let mut y: Vec<Matrix> = order(n).iter().map(|p| Matrix::unit(q(), n, p.i - 1, p.j - 1)).collect();
        // Y(2,2) = E_22 + E_13 stays inside its hull; Y(1,1) = E_11 + 3 E_23 leaves it.
        y[1] = &y[1] + &Matrix::unit(q(), n, 0, 2);
        y[0] = &y[0] + &Matrix::unit(q(), n, 1, 2).scale(&q().from_i64(3));
        let ws = well_shaped_basis(&y).unwrap();
        assert!(ws.a[1].is_empty());
        assert_eq!(ws.a[0], vec![(IndexPair::new(2, 3), q().from_i64(3))]);
        for (t, p) in order(n).into_iter().enumerate() {
            assert!(is_shaped(&ws.x[t], p));
        }
    }

    #[test]
    fn decompose_recovers_coefficients() {
        let y = vec![m(&[&["2", "0"], &["0", "1"]]), m(&[&["0", "1"], &["0", "1/2"]]), m(&[&["0", "1"], &["0", "0"]])];
        let ws = well_shaped_basis(&y).unwrap();
        let c = [q().from_i64(3), q().parse("-1/4").unwrap(), q().from_i64(7)];
        let mut total = Matrix::zero(q(), 2);
        for (ci, xi) in c.iter().zip(&ws.x) {
            total = &total + &xi.scale(ci);
        }
        assert_eq!(decompose(&total, &ws.x).unwrap(), c.to_vec());
    }

    #[test]
    fn zero_pivot_is_rejected() {
        let y = vec![Matrix::zero(q(), 2), Matrix::identity(q(), 2), Matrix::identity(q(), 2)];
        assert!(well_shaped_basis(&y).is_err());
    }
}
