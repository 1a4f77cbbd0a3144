//! JSON input documents and the JSON encodings of fields, matrices and subspaces.
//!
//! Scalars are always strings (`"3"`, `"-2/7"`, or a residue) so that no
//! value passes through a floating-point number.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Scalar, Subspace};
use crate::rep::{Kind, Representation};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldSpec::Q => Ok(Field::rationals()),
            FieldSpec::Fp { p } => Field::prime(p),
        }
    }

    pub fn of(field: Field) -> FieldSpec {
        match field.modulus() {
            None => FieldSpec::Q,
            Some(p) => FieldSpec::Fp { p },
        }
    }
}

/// A representation as it appears on disk.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub field: FieldSpec,
    pub n: usize,
    pub kind: Kind,
    pub generators: Vec<Vec<Vec<String>>>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<InputDocument> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("malformed document: {e}")))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    /// Builds the representation, re-checking every invariant.
    pub fn to_representation(&self, config: &Config) -> Result<Representation> {
        let field = self.field.to_field()?;
        let n = self.n;
        if n == 0 || n > config.max_degree {
            return Err(Error::input(format!("degree {n} outside 1..={}", config.max_degree)));
        }
        let generators = self
            .generators
            .iter()
            .enumerate()
            .map(|(k, rows)| {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::input(format!("generator {} is not {n}x{n}", k + 1)));
                }
                let entries = rows.iter().flatten().map(|s| field.parse(s)).collect::<Result<Vec<_>>>()?;
                Matrix::new(field, n, entries)
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(field, n, self.kind, generators)
    }

    /// The normalized document of a representation.
    pub fn from_representation(rep: &Representation) -> InputDocument {
        InputDocument {
            field: FieldSpec::of(rep.field()),
            n: rep.degree(),
            kind: rep.kind(),
            generators: rep.generators().iter().map(matrix_strings).collect(),
        }
    }
}

/// Parses a document and returns the representation.
pub fn parse(text: &str, config: &Config) -> Result<Representation> {
    InputDocument::from_json(text)?.to_representation(config)
}

/// Compact JSON of the normalized document of `rep`.
pub fn serialize(rep: &Representation) -> String {
    InputDocument::from_representation(rep).to_json_string()
}

pub fn field_json(field: Field) -> Value {
    serde_json::to_value(FieldSpec::of(field)).expect("field spec serializes")
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.rows().map(|r| r.iter().map(Scalar::to_string).collect()).collect()
}

pub fn matrix_json(m: &Matrix) -> Value {
    json!(matrix_strings(m))
}

pub fn vector_json(v: &[Scalar]) -> Value {
    json!(v.iter().map(Scalar::to_string).collect::<Vec<_>>())
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!(s.basis().iter().map(|v| vector_json(v)).collect::<Vec<_>>())
}
