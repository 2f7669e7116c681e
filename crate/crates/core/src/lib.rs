//! Exact computation of Meyer's signature cocycle on `Sp(2g; Z)`, the Meyer
//! function on `SL(2; Z)`, Meyer-function values on lassos around dual
//! varieties of complete intersections and Veronese images, and local
//! signatures of fiber germs of fibered 4-manifolds.
//!
//! The linear algebra in [`exactnum`] is generic over the scalar type
//! ([`scalar::ExactField`]); the rest of the crate works over the
//! arbitrary-precision aliases defined here.

pub mod cli;
pub mod exactnum;
pub mod localsig;
pub mod meyer;
pub mod random;
pub mod scalar;
pub mod symplectic;
pub mod varieties;

pub use num_bigint::BigInt;
pub use num_rational::{BigRational, Rational64};

pub type Integer = BigInt;
pub type Rational = BigRational;
pub type IntMatrix = exactnum::Matrix<Integer>;
pub type RatMatrix = exactnum::Matrix<Rational>;
pub type RatVector = Vec<Rational>;
pub type RatForm = exactnum::SymmetricForm<Rational>;

pub use exactnum::text::{format_rational, parse_rational};
pub use meyer::{lasso_power, phi1, phi1_base, tau, tau_cocycle_defect, MeyerFunction, PhiBase};
pub use symplectic::{sl2_word, SL2Word, SymplecticElement};
