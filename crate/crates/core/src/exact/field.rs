use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Base field of a computation: the rationals or a prime field `F_p`.
///
/// Prime fields can only be built through [`Field::prime`], which checks
/// primality, so every `Field` in circulation is a genuine field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    // 0 encodes the rationals.
    modulus: u64,
}

impl Field {
    pub const RATIONALS: Field = Field { modulus: 0 };

    pub fn rationals() -> Field {
        Field::RATIONALS
    }

    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field { modulus: p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// For moduli already known to be prime (taken from an existing residue).
    pub(crate) const fn prime_unchecked(p: u64) -> Field {
        Field { modulus: p }
    }

    pub fn is_rational(self) -> bool {
        self.modulus == 0
    }

    /// `Some(p)` for `F_p`, `None` for the rationals.
    pub fn modulus(self) -> Option<u64> {
        (self.modulus != 0).then_some(self.modulus)
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, k: i64) -> Scalar {
        match self.modulus() {
            None => Scalar::rational(BigRational::from_integer(BigInt::from(k))),
            Some(p) => Scalar::residue((k as i128).rem_euclid(p as i128) as u64, p),
        }
    }

    /// The image of `num/den` in this field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::input("zero denominator"));
        }
        match self.modulus() {
            None => Ok(Scalar::rational(BigRational::new(num.clone(), den.clone()))),
            Some(p) => {
                let n = reduce_bigint(num, p);
                let d = reduce_bigint(den, p);
                let d = Scalar::residue(d, p);
                let inv = d.inv().ok_or_else(|| Error::input(format!("denominator {den} vanishes mod {p}")))?;
                Ok(&Scalar::residue(n, p) * &inv)
            }
        }
    }

    /// Parses `"3"`, `"-2/7"`, or a residue; the result is normalized.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::input(format!("cannot parse scalar {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => {
                (n.trim().parse::<BigInt>().map_err(|_| bad())?, d.trim().parse::<BigInt>().map_err(|_| bad())?)
            }
            None => (text.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        self.from_ratio(&num, &den)
    }

    /// All elements of a prime field in residue order; `None` over the rationals.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        self.modulus().map(|p| (0..p).map(|v| Scalar::residue(v, p)).collect())
    }

    /// Number of elements, `None` over the rationals.
    pub fn order(self) -> Option<u64> {
        self.modulus()
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus() {
            None => write!(f, "Q"),
            Some(p) => write!(f, "F_{p}"),
        }
    }
}

fn reduce_bigint(x: &BigInt, p: u64) -> u64 {
    use num_integer::Integer;
    let r = x.mod_floor(&BigInt::from(p));
    r.try_into().expect("residue fits in u64")
}

/// Trial division; adequate for the moduli this crate is used with.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= p as u128 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
