//! Exact arithmetic for small graded algebras given by multiplication tables:
//! products, word contraction, brackets, Jacobi-type identities and axiom checks.

pub mod algebra;
pub mod axioms;
pub mod bracket;
pub mod compare;
pub mod element;
pub mod error;
pub mod jacobi;
pub mod parser;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod verify;
pub mod word;

pub use algebra::{
    complex_numbers, load_algebra, quaternion_deformation, quaternions, AlgebraTable, Parity,
};
pub use element::Element;
pub use error::{Error, Result};
pub use scalar::Scalar;
