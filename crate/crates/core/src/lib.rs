//! Exact arithmetic in the stable Green ring of the Drinfeld double of a
//! Taft-type algebra `Λ_{n,d}`.

pub mod blockrep;
pub mod cli;
pub mod fusion;
pub mod labels;
pub mod linalg;
pub mod modring;
pub mod scalar;
pub mod universe;

/// Band parameters.
pub type Lambda = num_rational::Rational64;
/// Arbitrary-precision rationals for linear algebra.
pub type Rational = num_rational::BigRational;

pub use blockrep::BlockRep;
pub use fusion::{tensor, tensor_basis, GreenElement};
pub use labels::ModLabel;
pub use modring::{Params, Vertex};
pub use scalar::Field;

/// Oracle representations over arbitrary-precision rationals.
pub type Rep = BlockRep<Rational>;
