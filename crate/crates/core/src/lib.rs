//! Jordan types of graded Artinian Gorenstein algebras.
//!
//! Given a homogeneous form `f` with rational coefficients, the crate builds
//! `A = Q / Ann_f` (with `Q` the ring of differential operators acting on `f`)
//! and computes its Hilbert vector, the ranks of its mixed Hessians, the
//! generic Jordan type of multiplication by a linear form, the weak and strong
//! Lefschetz verdicts, and string diagrams. A brute-force oracle recomputes the
//! Jordan type from the full multiplication matrix so every formula-based
//! result has an independent check.
//!
//! All arithmetic is exact. Matrices are generic over an integral domain
//! ([`linalg::Domain`]) so one fraction-free elimination serves integer,
//! rational and polynomial matrices; the concrete aliases below are what the
//! rest of the crate uses.

pub mod apolarity;
pub mod cli;
pub mod constructions;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod hessian;
pub mod jordan;
pub mod lefschetz;
pub mod linalg;
pub mod oracle;
pub mod pipeline;
pub mod poly;

pub use error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Dense matrix of rationals.
pub type QMatrix = linalg::Matrix<Rational>;
/// Dense matrix of integers.
pub type ZMatrix = linalg::Matrix<Integer>;
/// Dense matrix of polynomials, e.g. a mixed Hessian before evaluation.
pub type PolyMatrix = linalg::Matrix<poly::Poly>;

pub use apolarity::{graded_basis, GradedAlgebraBasis};
pub use poly::{parse_poly, LinearForm, Monomial, Poly};
