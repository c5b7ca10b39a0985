//! Exact arithmetic over ℚ, Λ = ℚ[t,t⁻¹], ℚ(t), and ℚ(t)/Λ, plus dense
//! matrix linear algebra over these rings.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so the whole module is safe to call concurrently.

pub mod intmat;
pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod torsion;

pub use laurent::LaurentPolynomial;
pub use matrix::{Matrix, MatrixError};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use torsion::TorsionValue;
