//! Exact growth functions of finitely generated algebras, and a calculus for
//! infinite matrices built from bands `E_k(a)` and matrix units `e_{i,j}(a)`
//! over a base algebra.
//!
//! ```
//! use bandgrowth::algebra::{BaseAlgebra, BasisIndex};
//! use bandgrowth::scalar::Field;
//! use bandgrowth::span::{assoc_growth, Associative};
//!
//! let a = BaseAlgebra::polynomial(Field::Rational, 1);
//! let x = a.basis_element(BasisIndex::Exponents(vec![1])).unwrap();
//! let t = assoc_growth(&Associative(&a), &[a.one().unwrap(), x], 5).unwrap();
//! assert_eq!(t.dims(), &[2, 3, 4, 5, 6]);
//! ```

pub mod algebra;
pub mod banded;
pub mod cli;
pub mod config;
pub mod error;
pub mod oracle;
pub mod scalar;
pub mod span;
pub mod verify;

pub use error::{Error, Result};
