//! Representations of free monoids and free groups, and words in their generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix};

/// Whether the source is the free monoid or the free group on `m` letters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Monoid,
    Group,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Monoid => "monoid",
            Kind::Group => "group",
        })
    }
}

/// A word in the generators: letter `k` is generator `k` (1-based), `-k` its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letter(k: i32) -> Word {
        Word(vec![k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|k| -k).collect())
    }

    /// The commutator `u v u⁻¹ v⁻¹`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    /// Letters ordered `1..m` then `-1..-m`; monoid kind has only the positive ones.
    pub fn alphabet(kind: Kind, m: usize) -> Vec<i32> {
        let pos = 1..=m as i32;
        match kind {
            Kind::Monoid => pos.collect(),
            Kind::Group => pos.clone().chain(pos.map(|k| -k)).collect(),
        }
    }

    /// All words of exactly `len` letters, lexicographic in [`Word::alphabet`] order.
    ///
    /// Group words are freely reduced (no letter next to its inverse).
    pub fn all_of_length(kind: Kind, m: usize, len: usize) -> Vec<Word> {
        let alphabet = Word::alphabet(kind, m);
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * alphabet.len());
            for w in &out {
                for &a in &alphabet {
                    if w.0.last() == Some(&-a) {
                        continue;
                    }
                    let mut v = w.0.clone();
                    v.push(a);
                    next.push(Word(v));
                }
            }
            out = next;
        }
        out
    }

    /// All words of length at most `max_len`, by length then lexicographically.
    pub fn up_to_length(kind: Kind, m: usize, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|l| Word::all_of_length(kind, m, l)).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *k < 0 {
                write!(f, "g{}^-1", -k)?;
            } else {
                write!(f, "g{k}")?;
            }
        }
        Ok(())
    }
}

/// Generator images of a representation `Γ → M_n(K)` (or `GL_n(K)` for groups).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    field: Field,
    n: usize,
    kind: Kind,
    generators: Vec<Matrix>,
    // Present exactly for group kind.
    inverses: Option<Vec<Matrix>>,
}

impl Representation {
    pub fn new(field: Field, n: usize, kind: Kind, generators: Vec<Matrix>) -> Result<Representation> {
        if n == 0 {
            return Err(Error::input("degree must be at least 1"));
        }
        if generators.is_empty() {
            return Err(Error::input("a representation needs at least one generator"));
        }
        for (k, g) in generators.iter().enumerate() {
            if g.degree() != n || g.field() != field {
                return Err(Error::input(format!(
                    "generator {} is {}x{} over {}, expected {n}x{n} over {field}",
                    k + 1,
                    g.degree(),
                    g.degree(),
                    g.field()
                )));
            }
        }
        let inverses = match kind {
            Kind::Monoid => None,
            Kind::Group => Some(
                generators
                    .iter()
                    .enumerate()
                    .map(|(k, g)| {
                        g.inverse().map_err(|_| Error::input(format!("generator {} is not invertible", k + 1)))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Ok(Representation { field, n, kind, generators, inverses })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Image of a single letter.
    pub fn letter(&self, k: i32) -> Result<&Matrix> {
        let idx = k.unsigned_abs() as usize;
        if k == 0 || idx > self.generators.len() {
            return Err(Error::input(format!("letter {k} out of range 1..={}", self.generators.len())));
        }
        if k > 0 {
            return Ok(&self.generators[idx - 1]);
        }
        match &self.inverses {
            Some(inv) => Ok(&inv[idx - 1]),
            None => Err(Error::input("inverse letters are not allowed for monoid representations")),
        }
    }

    /// `ρ(w)`; the empty word maps to `I_n`.
    pub fn evaluate(&self, w: &Word) -> Result<Matrix> {
        let mut acc = Matrix::identity(self.field, self.n);
        for &k in w.letters() {
            acc = &acc * self.letter(k)?;
        }
        Ok(acc)
    }

    /// The representation `γ ↦ p · ρ(γ) · p⁻¹`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Representation> {
        if p.degree() != self.n || p.field() != self.field {
            return Err(Error::input("conjugator shape does not match the representation"));
        }
        let p_inv = p.inverse()?;
        self.map(|g| g.conjugate(p, &p_inv))
    }

    /// Applies `f` to every generator, keeping kind and shape.
    pub fn map(&self, f: impl Fn(&Matrix) -> Matrix) -> Result<Representation> {
        Representation::new(self.field, self.n, self.kind, self.generators.iter().map(f).collect())
    }

    /// The same generators, viewed with a different kind.
    pub fn with_kind(&self, kind: Kind) -> Result<Representation> {
        Representation::new(self.field, self.n, kind, self.generators.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn running(kind: Kind) -> Representation {
        let a = Matrix::from_ints(q(), &[&[1, 1], &[0, 1]]);
        let b = Matrix::from_ints(q(), &[&[2, 0], &[0, 1]]);
        Representation::new(q(), 2, kind, vec![a, b]).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let rho = running(Kind::Group);
        assert!(rho.evaluate(&Word::empty()).unwrap().is_identity());
        assert_eq!(rho.evaluate(&Word(vec![1, 1])).unwrap(), Matrix::from_ints(q(), &[&[1, 2], &[0, 1]]));
        assert_eq!(rho.evaluate(&Word(vec![-1])).unwrap(), Matrix::from_ints(q(), &[&[1, -1], &[0, 1]]));
        let mono = running(Kind::Monoid);
        assert!(matches!(mono.evaluate(&Word(vec![-1])), Err(Error::Input(_))));
        assert!(rho.evaluate(&Word(vec![3])).is_err());
    }

    #[test]
    fn group_needs_invertible_generators() {
        let z = Matrix::from_ints(q(), &[&[1, 0], &[0, 0]]);
        assert!(Representation::new(q(), 2, Kind::Group, vec![z.clone()]).is_err());
        assert!(Representation::new(q(), 2, Kind::Monoid, vec![z]).is_ok());
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(Word::all_of_length(Kind::Monoid, 2, 2).len(), 4);
        // Reduced group words: 4 · 3^(l-1).
        assert_eq!(Word::all_of_length(Kind::Group, 2, 3).len(), 36);
        let first: Vec<Word> = Word::all_of_length(Kind::Group, 2, 1);
        assert_eq!(first, vec![Word(vec![1]), Word(vec![2]), Word(vec![-1]), Word(vec![-2])]);
        assert_eq!(Word::up_to_length(Kind::Monoid, 2, 2)[0], Word::empty());
        assert_eq!(Word::commutator(&Word(vec![1]), &Word(vec![2])), Word(vec![1, 2, -1, -2]));
    }
}
