//! Seeded random matrices and representations for self-tests and property suites.
//!
//! Core computations never draw random numbers; only these helpers do.

use rand::Rng;

use crate::borel::is_borel;
use crate::exact::{Field, Matrix, Scalar};
use crate::rep::{Kind, Representation};

/// A random scalar: an integer in `[-bound, bound]` over the rationals, a uniform residue over `F_p`.
pub fn scalar<R: Rng>(rng: &mut R, field: Field, bound: i64) -> Scalar {
    match field.modulus() {
        None => field.from_i64(rng.gen_range(-bound..=bound)),
        Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

fn nonzero<R: Rng>(rng: &mut R, field: Field, bound: i64) -> Scalar {
    loop {
        let s = scalar(rng, field, bound);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn matrix<R: Rng>(rng: &mut R, field: Field, n: usize, bound: i64) -> Matrix {
    let entries = (0..n * n).map(|_| scalar(rng, field, bound)).collect();
    Matrix::new(field, n, entries).expect("n² entries")
}

pub fn invertible<R: Rng>(rng: &mut R, field: Field, n: usize, bound: i64) -> Matrix {
    loop {
        let m = matrix(rng, field, n, bound);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Upper triangular with nonzero diagonal.
pub fn upper_invertible<R: Rng>(rng: &mut R, field: Field, n: usize, bound: i64) -> Matrix {
    let mut m = Matrix::zero(field, n);
    for i in 0..n {
        m.set(i, i, nonzero(rng, field, bound));
        for j in i + 1..n {
            m.set(i, j, scalar(rng, field, bound));
        }
    }
    m
}

/// An upper-triangular representation with Borel mold (rejection sampling).
pub fn borel_upper<R: Rng>(rng: &mut R, field: Field, n: usize, m: usize, kind: Kind, bound: i64) -> Representation {
    loop {
        let gens = (0..m).map(|_| upper_invertible(rng, field, n, bound)).collect();
        let rep = Representation::new(field, n, kind, gens).expect("invertible generators");
        if is_borel(&rep) {
            return rep;
        }
    }
}

/// A representation with Borel mold in general position: an upper-triangular one, conjugated.
pub fn borel<R: Rng>(rng: &mut R, field: Field, n: usize, m: usize, kind: Kind, bound: i64) -> Representation {
    let upper = borel_upper(rng, field, n, m, kind, bound);
    let p = invertible(rng, field, n, bound);
    upper.conjugate(&p).expect("invertible conjugator")
}
