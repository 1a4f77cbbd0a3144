//! Molds at a field point: unital subalgebras of `M_n(K)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{self, cells, Field, Matrix, Scalar, Subspace};

/// A unital subalgebra of `M_n(K)`, held as the echelon basis of its span in `K^{n²}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mold {
    field: Field,
    n: usize,
    space: Subspace,
}

/// A composition `(n_1, …, n_r)` of `n`, naming the block-upper-triangular mold `𝓟_{n_1,…,n_r}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ParabolicType {
    parts: Vec<usize>,
}

impl ParabolicType {
    pub fn new(parts: Vec<usize>) -> Result<ParabolicType> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::input("a composition needs at least one part, all positive"));
        }
        Ok(ParabolicType { parts })
    }

    pub fn borel(n: usize) -> ParabolicType {
        ParabolicType { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `Σ_{i≤j} n_i n_j`, the dimension of the block-upper-triangular algebra.
    pub fn rank(&self) -> usize {
        let mut d = 0;
        for i in 0..self.parts.len() {
            for j in i..self.parts.len() {
                d += self.parts[i] * self.parts[j];
            }
        }
        d
    }

    pub fn is_borel(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Partial sums `n_1, n_1+n_2, …, n` of the parts.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Block index (0-based) of each coordinate.
    fn blocks(&self) -> Vec<usize> {
        self.parts.iter().enumerate().flat_map(|(b, &p)| std::iter::repeat_n(b, p)).collect()
    }

    /// Whether `(i, j)` (0-based) lies in the block-upper-triangular pattern.
    pub fn allows(&self, i: usize, j: usize) -> bool {
        let b = self.blocks();
        b[i] <= b[j]
    }

    /// All compositions of `n`, in lexicographic order of parts.
    pub fn compositions(n: usize) -> Vec<ParabolicType> {
        fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<ParabolicType>) {
            if rest == 0 {
                out.push(ParabolicType { parts: cur.clone() });
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                go(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for ParabolicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Basis of derivations `M → M_n(K)/M`.
#[derive(Clone, Debug)]
pub struct Derivations {
    pub dimension: usize,
    /// Each derivation as its values on the mold's basis, lifted to matrices
    /// supported on the quotient coordinates.
    pub basis: Vec<Vec<Matrix>>,
}

fn to_matrix(field: Field, n: usize, v: &[Scalar]) -> Matrix {
    Matrix::new(field, n, v.to_vec()).expect("vector of length n²")
}

/// Kernel of the linear map whose images of the unit vectors are `images`.
fn kernel_of_images(field: Field, images: &[Vec<Scalar>]) -> Subspace {
    let unknowns = images.len();
    let eqs = images.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Scalar>> = (0..eqs).map(|r| images.iter().map(|col| col[r].clone()).collect()).collect();
    exact::kernel(field, unknowns, &rows).expect("consistent shapes")
}

fn check_matrices(field: Field, n: usize, ms: &[Matrix]) -> Result<()> {
    if n == 0 {
        return Err(Error::input("degree must be at least 1"));
    }
    for m in ms {
        if m.degree() != n || m.field() != field {
            return Err(Error::input(format!(
                "matrix of degree {} over {} where degree {n} over {field} was expected",
                m.degree(),
                m.field()
            )));
        }
    }
    Ok(())
}

/// The smallest unital subalgebra of `M_n(K)` containing `gens`.
pub fn algebra_closure(field: Field, n: usize, gens: &[Matrix]) -> Result<Mold> {
    check_matrices(field, n, gens)?;
    let mut space = Subspace::zero(field, n * n);
    let mut elements: Vec<Matrix> = Vec::new();
    let mut queue: Vec<Matrix> = vec![Matrix::identity(field, n)];
    queue.extend(gens.iter().cloned());
    queue.reverse();
    while let Some(x) = queue.pop() {
        if !space.insert(x.entries().to_vec()) {
            continue;
        }
        for y in &elements {
            queue.push(&x * y);
            queue.push(y * &x);
        }
        queue.push(&x * &x);
        elements.push(x);
        if space.rank() == n * n {
            break;
        }
    }
    Ok(Mold { field, n, space })
}

impl Mold {
    /// Wraps a subspace of `K^{n²}` after checking that it is a unital subalgebra.
    pub fn from_subspace(n: usize, space: Subspace) -> Result<Mold> {
        if space.ambient() != n * n {
            return Err(Error::input("subspace ambient dimension must be n²"));
        }
        let mold = Mold { field: space.field(), n, space };
        if !mold.is_unital_subalgebra() {
            return Err(Error::input("subspace is not a unital subalgebra"));
        }
        Ok(mold)
    }

    fn is_unital_subalgebra(&self) -> bool {
        if !self.space.contains(Matrix::identity(self.field, self.n).entries()) {
            return false;
        }
        let basis = self.basis_matrices();
        basis.iter().all(|x| basis.iter().all(|y| self.space.contains((x * y).entries())))
    }

    pub fn full(field: Field, n: usize) -> Mold {
        Mold { field, n, space: Subspace::full(field, n * n) }
    }

    pub fn scalars(field: Field, n: usize) -> Mold {
        algebra_closure(field, n, &[]).expect("valid degree")
    }

    /// The upper-triangular mold `𝓑_n`.
    pub fn borel(field: Field, n: usize) -> Mold {
        Mold::parabolic(field, &ParabolicType::borel(n))
    }

    /// The block-upper-triangular mold `𝓟_{n_1,…,n_r}`.
    pub fn parabolic(field: Field, ty: &ParabolicType) -> Mold {
        let n = ty.degree();
        let units = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| ty.allows(i, j))
            .map(|(i, j)| Matrix::unit(field, n, i, j).into_entries());
        let space = exact::rref(field, n * n, units).expect("unit vectors");
        Mold { field, n, space }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis_matrices(&self) -> Vec<Matrix> {
        self.space.basis().iter().map(|v| to_matrix(self.field, self.n, v)).collect()
    }

    pub fn contains(&self, x: &Matrix) -> Result<bool> {
        check_matrices(self.field, self.n, std::slice::from_ref(x))?;
        Ok(self.space.contains(x.entries()))
    }

    /// `p · M · p⁻¹`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Mold> {
        check_matrices(self.field, self.n, std::slice::from_ref(p))?;
        let p_inv = p.inverse()?;
        let rows = self.basis_matrices().into_iter().map(|y| y.conjugate(p, &p_inv).into_entries());
        Ok(Mold { field: self.field, n: self.n, space: exact::rref(self.field, self.n * self.n, rows)? })
    }

    fn units(&self) -> impl Iterator<Item = Matrix> + '_ {
        let n = self.n;
        (0..n * n).map(move |k| Matrix::unit(self.field, n, k / n, k % n))
    }

    /// Quotient coordinates of `x` in `M_n(K)/M`.
    fn quotient_coords(&self, x: &Matrix, free: &[usize]) -> Vec<Scalar> {
        let r = self.space.reduce(x.entries());
        free.iter().map(|&c| r[c].clone()).collect()
    }

    /// `{X : [X, Y] ∈ M for all Y ∈ M}`.
    pub fn normalizer(&self) -> Subspace {
        let basis = self.basis_matrices();
        let free = self.space.free_columns();
        let images: Vec<Vec<Scalar>> = self
            .units()
            .map(|e| basis.iter().flat_map(|y| self.quotient_coords(&e.commutator(y), &free)).collect())
            .collect();
        kernel_of_images(self.field, &images)
    }

    /// `{X : [X, Y] = 0 for all Y ∈ M}`.
    pub fn centralizer(&self) -> Subspace {
        let basis = self.basis_matrices();
        let images: Vec<Vec<Scalar>> =
            self.units().map(|e| basis.iter().flat_map(|y| e.commutator(y).into_entries()).collect()).collect();
        kernel_of_images(self.field, &images)
    }

    /// Derivations `δ: M → M_n(K)/M` with `δ(XY) = X δ(Y) + δ(X) Y`.
    pub fn derivation_space(&self) -> Derivations {
        let (field, n) = (self.field, self.n);
        let basis = self.basis_matrices();
        let d = basis.len();
        let free = self.space.free_columns();
        let c = free.len();
        if c == 0 {
            return Derivations { dimension: 0, basis: Vec::new() };
        }
        let lift = |vals: &[Scalar]| {
            let mut e = vec![field.zero(); n * n];
            for (&col, v) in free.iter().zip(vals) {
                e[col] = v.clone();
            }
            to_matrix(field, n, &e)
        };
        // Structure constants: Y_k Y_l = Σ_m coeff[k][l][m] Y_m.
        let coeff: Vec<Vec<Vec<Scalar>>> = basis
            .iter()
            .map(|yk| {
                basis
                    .iter()
                    .map(|yl| self.space.coordinates((yk * yl).entries()).expect("closed under products"))
                    .collect()
            })
            .collect();
        // Unknown u = (k, s): the s-th quotient coordinate of δ(Y_k).
        let images: Vec<Vec<Scalar>> = (0..d * c)
            .map(|u| {
                let (k0, s0) = (u / c, u % c);
                let mut unit = vec![field.zero(); c];
                unit[s0] = field.one();
                let delta0 = lift(&unit);
                let mut eqs = Vec::with_capacity(d * d * c);
                for k in 0..d {
                    for l in 0..d {
                        // Y_k δ(Y_l) + δ(Y_k) Y_l − δ(Y_k Y_l), for δ the unit derivation.
                        let mut acc = Matrix::zero(field, n);
                        if l == k0 {
                            acc = &acc + &(&basis[k] * &delta0);
                        }
                        if k == k0 {
                            acc = &acc + &(&delta0 * &basis[l]);
                        }
                        let cm = &coeff[k][l][k0];
                        if !cm.is_zero() {
                            acc = &acc - &delta0.scale(cm);
                        }
                        eqs.extend(self.quotient_coords(&acc, &free));
                    }
                }
                eqs
            })
            .collect();
        let ker = kernel_of_images(field, &images);
        let basis_out = ker.basis().iter().map(|v| (0..d).map(|k| lift(&v[k * c..(k + 1) * c])).collect()).collect();
        Derivations { dimension: ker.rank(), basis: basis_out }
    }

    /// Whether `M · V ⊆ V` for a subspace `V ⊆ K^n`.
    pub fn leaves_invariant(&self, v: &Subspace) -> bool {
        let basis = self.basis_matrices();
        basis.iter().all(|x| v.basis().iter().all(|w| v.contains(&x.mul_vec(w))))
    }

    /// All `r`-dimensional `M`-invariant subspaces of `K^n`.
    ///
    /// Exhaustive over `F_q`. Over the rationals only the full matrix algebra
    /// and detected parabolic molds are supported.
    pub fn invariant_subspaces(&self, r: usize) -> Result<Vec<Subspace>> {
        let n = self.n;
        if r == 0 || r >= n {
            return Err(Error::input(format!("subspace dimension must be in 1..={}", n.saturating_sub(1))));
        }
        if !self.field.is_rational() {
            let basis = self.basis_matrices();
            let mut out = Vec::new();
            for pivots in cells::pivot_sets(n, r) {
                let cell = cells::EchelonCell::new(self.field, n, pivots)?;
                cell.for_each_rows(|rows| {
                    let s = Subspace::from_echelon_unchecked(self.field, n, rows.to_vec(), cell.pivots().to_vec());
                    if basis.iter().all(|x| rows.iter().all(|w| s.contains(&x.mul_vec(w)))) {
                        out.push(s);
                    }
                    true
                });
            }
            return Ok(out);
        }
        if self.rank() == n * n {
            return Ok(Vec::new());
        }
        let (ty, p) = self
            .parabolic_type()
            .ok_or_else(|| Error::Unsupported("invariant subspaces over Q need a parabolic mold".into()))?;
        if !ty.partial_sums().contains(&r) {
            return Ok(Vec::new());
        }
        let cols = (0..r).map(|j| p.column(j));
        Ok(vec![exact::rref(self.field, n, cols)?])
    }

    /// The radical of the trace form `(x, y) ↦ tr(xy)` restricted to `M`.
    fn trace_radical(&self) -> Vec<Matrix> {
        let basis = self.basis_matrices();
        let gram: Vec<Vec<Scalar>> = basis.iter().map(|x| basis.iter().map(|y| (x * y).trace()).collect()).collect();
        let ker = exact::kernel(self.field, basis.len(), &gram).expect("square system");
        ker.basis()
            .iter()
            .map(|coeffs| {
                let mut acc = Matrix::zero(self.field, self.n);
                for (c, y) in coeffs.iter().zip(&basis) {
                    if !c.is_zero() {
                        acc = &acc + &y.scale(c);
                    }
                }
                acc
            })
            .collect()
    }

    /// Detects `M = P · 𝓟_{n_1,…,n_r} · P⁻¹` and returns the type with `P`.
    ///
    /// The flag is read off the chain `K^n ⊋ N K^n ⊋ N² K^n ⊋ … ⊋ 0`, where
    /// `N` is the trace-form radical of `M`; the answer is then checked
    /// against the rank formula and the block pattern of `P⁻¹ M P`. The
    /// full matrix algebra (`r = 1`) is reported as not parabolic for `n ≥ 2`.
    pub fn parabolic_type(&self) -> Option<(ParabolicType, Matrix)> {
        let (field, n) = (self.field, self.n);
        if n == 1 {
            return Some((ParabolicType::borel(1), Matrix::identity(field, 1)));
        }
        let radical = self.trace_radical();
        if radical.is_empty() {
            return None;
        }
        let mut chain = vec![Subspace::full(field, n)];
        loop {
            let last = chain.last().expect("nonempty");
            if last.rank() == 0 {
                break;
            }
            let images = radical.iter().flat_map(|x| last.basis().iter().map(|w| x.mul_vec(w)));
            let next = exact::rref(field, n, images).ok()?;
            if next.rank() >= last.rank() {
                return None;
            }
            chain.push(next);
        }
        // chain = [W_0 = K^n, W_1, …, W_r = 0]; the flag is V_s = W_{r−s}.
        let r = chain.len() - 1;
        let flag: Vec<&Subspace> = (1..=r).map(|s| &chain[r - s]).collect();
        let mut parts = Vec::with_capacity(r);
        let mut prev = 0;
        for v in &flag {
            parts.push(v.rank() - prev);
            prev = v.rank();
        }
        let ty = ParabolicType::new(parts).ok()?;
        if ty.rank() != self.rank() {
            return None;
        }
        let mut adapted = Subspace::zero(field, n);
        let mut columns = Vec::with_capacity(n);
        for v in &flag {
            for w in v.basis() {
                if adapted.insert(w.clone()) {
                    columns.push(w.clone());
                }
            }
        }
        let p = Matrix::from_columns(field, &columns).ok()?;
        let p_inv = p.inverse().ok()?;
        let fits = self.basis_matrices().iter().all(|y| {
            let z = y.conjugate(&p_inv, &p);
            (0..n).all(|i| (0..n).all(|j| ty.allows(i, j) || z.get(i, j).is_zero()))
        });
        fits.then_some((ty, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn e(n: usize, i: usize, j: usize) -> Matrix {
        Matrix::unit(q(), n, i - 1, j - 1)
    }

    #[test]
    fn closure_examples() {
        assert_eq!(algebra_closure(q(), 3, &[]).unwrap().rank(), 1);
        let full = algebra_closure(q(), 2, &[e(2, 1, 2), e(2, 2, 1)]).unwrap();
        assert_eq!(full, Mold::full(q(), 2));
        let a = Matrix::from_ints(q(), &[&[1, 1], &[0, 1]]);
        let b = Matrix::from_ints(q(), &[&[2, 0], &[0, 1]]);
        assert_eq!(algebra_closure(q(), 2, &[a, b]).unwrap(), Mold::borel(q(), 2));
        assert!(algebra_closure(q(), 3, &[e(2, 1, 2)]).is_err());
    }

    #[test]
    fn membership() {
        let b2 = Mold::borel(q(), 2);
        assert!(b2.contains(&Matrix::identity(q(), 2)).unwrap());
        assert!(!b2.contains(&e(2, 2, 1)).unwrap());
        let m = Matrix::from_ints(q(), &[&[3, -1], &[7, 5]]);
        assert!(Mold::full(q(), 2).contains(&m).unwrap());
    }

    #[test]
    fn normalizer_examples() {
        assert_eq!(Mold::full(q(), 2).normalizer().rank(), 4);
        assert_eq!(Mold::scalars(q(), 2).normalizer().rank(), 4);
        let b2 = Mold::borel(q(), 2);
        assert_eq!(&b2.normalizer(), b2.space());
    }

    #[test]
    fn derivation_examples() {
        assert_eq!(Mold::full(q(), 3).derivation_space().dimension, 0);
        assert_eq!(Mold::borel(q(), 2).derivation_space().dimension, 1);
        let p12 = Mold::parabolic(q(), &ParabolicType::new(vec![1, 2]).unwrap());
        assert_eq!(p12.rank(), 7);
        assert_eq!(p12.derivation_space().dimension, 2);
        // δ(I) = δ(I·I) = 2δ(I) forces δ = 0.
        assert_eq!(Mold::scalars(q(), 2).derivation_space().dimension, 0);
    }

    #[test]
    fn invariant_subspace_examples() {
        let b2 = Mold::borel(q(), 2);
        let lines = b2.invariant_subspaces(1).unwrap();
        assert_eq!(lines.len(), 1);
        assert_eq!(lines[0].basis(), &[vec![q().one(), q().zero()]]);
        let f2 = Field::prime(2).unwrap();
        assert_eq!(Mold::scalars(f2, 2).invariant_subspaces(1).unwrap().len(), 3);
        assert!(Mold::full(q(), 2).invariant_subspaces(1).unwrap().is_empty());
        assert!(Mold::full(f2, 2).invariant_subspaces(1).unwrap().is_empty());
        assert!(matches!(Mold::scalars(q(), 2).invariant_subspaces(1), Err(Error::Unsupported(_))));
        assert!(b2.invariant_subspaces(2).is_err());
    }

    #[test]
    fn parabolic_examples() {
        let (ty, p) = Mold::borel(q(), 3).parabolic_type().unwrap();
        assert_eq!(ty, ParabolicType::borel(3));
        assert!(p.is_identity());

        let swap = Matrix::from_ints(q(), &[&[0, 1], &[1, 0]]);
        let m = Mold::borel(q(), 2).conjugate(&swap).unwrap();
        let (ty, p) = m.parabolic_type().unwrap();
        assert_eq!(ty, ParabolicType::borel(2));
        assert_eq!(Mold::borel(q(), 2).conjugate(&p).unwrap(), m);

        assert!(Mold::full(q(), 2).parabolic_type().is_none());
        assert!(Mold::scalars(q(), 2).parabolic_type().is_none());
    }

    #[test]
    fn parabolic_types_round_trip() {
        let p = Matrix::from_ints(q(), &[&[1, 2, 0], &[0, 1, 0], &[3, 0, 1]]);
        for ty in ParabolicType::compositions(3) {
            let m = Mold::parabolic(q(), &ty).conjugate(&p).unwrap();
            let detected = m.parabolic_type();
            if ty.parts().len() == 1 {
                assert!(detected.is_none());
                continue;
            }
            let (found, conj) = detected.unwrap();
            assert_eq!(found, ty);
            assert_eq!(Mold::parabolic(q(), &ty).conjugate(&conj).unwrap(), m);
        }
    }

    #[test]
    fn composition_counts() {
        assert_eq!(ParabolicType::compositions(4).len(), 8);
        assert_eq!(ParabolicType::new(vec![1, 2]).unwrap().rank(), 7);
        assert_eq!(ParabolicType::new(vec![2, 1, 1]).unwrap().to_string(), "2,1,1");
        assert!(ParabolicType::new(vec![1, 0]).is_err());
    }
}
