use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;

/// An element of a [`Field`].
///
/// Rationals are kept reduced with a positive denominator (guaranteed by
/// `BigRational`); residues lie in `[0, p)`. Binary operations on scalars of
/// different fields panic: every container in the crate validates fields on
/// construction, so a mismatch here is a bug.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub(crate) fn rational(r: BigRational) -> Scalar {
        Scalar(Repr::Rational(r))
    }

    pub(crate) fn residue(value: u64, modulus: u64) -> Scalar {
        debug_assert!(value < modulus);
        Scalar(Repr::Residue { value, modulus })
    }

    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Rational(_) => Field::RATIONALS,
            // Residues are only created from validated fields.
            Repr::Residue { modulus, .. } => Field::prime_unchecked(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Rational(r) => Scalar::rational(r.recip()),
            Repr::Residue { value, modulus } => Scalar::residue(inv_mod(*value, *modulus), *modulus),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(r) => Some(r),
            Repr::Residue { .. } => None,
        }
    }

    /// The residue in `[0, p)`, if this is a prime-field scalar.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Residue { value, .. } => Some(*value),
            Repr::Rational(_) => None,
        }
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(p as i128) as u64
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar::rational(a + b),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                Scalar::residue(((*a as u128 + *b as u128) % *p as u128) as u64, *p)
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar::rational(a - b),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                Scalar::residue(((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64, *p)
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar::rational(a * b),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                Scalar::residue(((*a as u128 * *b as u128) % *p as u128) as u64, *p)
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(a) => Scalar::rational(-a),
            Repr::Residue { value, modulus } => Scalar::residue((modulus - value) % modulus, *modulus),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { (&self).$method(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar { (&self).$method(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Rational(r) => {
                debug_assert!(r.denom().is_positive());
                write!(f, "{}/{}", r.numer(), r.denom())
            }
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_arithmetic() {
        let f = Field::prime(5).unwrap();
        let two = f.from_i64(2);
        let three = f.from_i64(3);
        assert!((&two * &three).is_one());
        assert_eq!(two.inv().unwrap(), three);
        assert!((&two + &three).is_zero());
        assert_eq!(-&two, three);
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn large_modulus_does_not_overflow() {
        // Largest prime below 2^64; primality is not re-checked here.
        let f = Field::prime_unchecked(18446744073709551557);
        let a = f.from_i64(-1);
        assert!((&a * &a).is_one());
        assert!((&a + &f.one()).is_zero());
        assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn rational_display() {
        let q = Field::rationals();
        assert_eq!(q.parse("6/-4").unwrap().to_string(), "-3/2");
        assert_eq!((&q.parse("1/2").unwrap() + &q.parse("1/2").unwrap()).to_string(), "1");
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_fields_panic() {
        let _ = &Field::rationals().one() + &Field::prime(3).unwrap().one();
    }
}
