//! Exact-arithmetic invariants of knot and link concordance.
//!
//! The crate computes, over the rationals and the Laurent ring Λ = ℚ[t,t⁻¹]:
//!
//! - Alexander polynomials and Blanchfield pairings from Seifert matrices
//!   ([`seifert`]), together with Levine-Tristram signatures, the signature
//!   integral ρ₀, and the Arf invariant;
//! - the Blanchfield self-pairing obstruction for 2-component links with
//!   linking number zero ([`obstruction`]);
//! - Milnor invariants of pure-braid closures via the Artin action and the
//!   Magnus expansion ([`milnor`]);
//! - linking-form data of C-complexes and metabolic-certificate checking
//!   ([`ccomplex`]);
//! - Seifert forms of fusion surfaces and the block-sum metabolizer
//!   construction ([`fusion`]);
//! - half-integer solvability-grade arithmetic for doubling operators
//!   ([`solvability`]).
//!
//! All arithmetic is exact: arbitrary-precision rationals, Laurent
//! polynomials, rational functions, and the torsion quotient ℚ(t)/Λ live in
//! [`exact`]. No floating point enters any invariant computation; the only
//! approximate quantities are jump angles of signature step functions at
//! non-cyclotomic roots, and those are flagged as such.
//!
//! The crate is `no_std` (with `alloc`). IO, file formats, and the command
//! line front end live in the companion `concordance-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod ccomplex;
pub mod exact;
pub mod fusion;
pub mod milnor;
pub mod obstruction;
pub mod seifert;
pub mod solvability;

pub use exact::laurent::LaurentPolynomial;
pub use exact::rational::Rational;
pub use exact::ratfunc::RationalFunction;
pub use exact::torsion::TorsionValue;
