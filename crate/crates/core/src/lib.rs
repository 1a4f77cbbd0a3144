//! Exact computations with molds (unital subalgebras of `M_n(K)`) and with
//! representations of free monoids and free groups whose image generates a
//! Borel mold.
//!
//! Everything runs over an exact field: the rationals or a prime field
//! `F_p`. There is no floating point anywhere in the crate.
//!
//! ```
//! use moldkit::{Field, Matrix, mold::algebra_closure};
//!
//! let q = Field::rationals();
//! let a = Matrix::from_ints(q, &[&[1, 1], &[0, 1]]);
//! let b = Matrix::from_ints(q, &[&[2, 0], &[0, 1]]);
//! let m = algebra_closure(q, 2, &[a, b]).unwrap();
//! assert_eq!(m.rank(), 3);
//! ```

pub mod borel;
pub mod canonical;
pub mod cli;
pub mod config;
pub mod error;
pub mod exact;
pub mod io;
pub mod moduli;
pub mod mold;
pub mod rep;
pub mod sample;

pub use config::Config;
pub use error::{Error, Result};
pub use exact::{Field, Matrix, Scalar, Subspace};
pub use mold::{Mold, ParabolicType};
pub use rep::{Kind, Representation, Word};
