//! Invariants of a knot computed from a Seifert matrix.
//!
//! A Seifert matrix here is an integer square matrix `V` of even size `2g`
//! with `det(V - Vᵀ) = ±1`, the intersection-form condition for a genus-`g`
//! surface with one boundary component. From it the module computes:
//!
//! - the normalized Alexander polynomial `Δ(t) = ±t^{-g}·det(tV - Vᵀ)`,
//!   symmetric with `Δ(1) = 1`;
//! - the Blanchfield pairing
//!   `Bl(r, s) = (1-t)·r(t⁻¹)ᵀ·(V - tVᵀ)⁻¹·s(t)` with values in ℚ(t)/Λ;
//! - Levine-Tristram signatures, the signature average ρ₀ over the unit
//!   circle, and the Arf invariant via the Δ(-1) mod 8 congruence;
//! - metabolizer block certificates: change-of-basis witnesses bringing the
//!   Seifert form to the shape `[[0, A], [B, C]]` on a symplectic basis.

mod metabolizer;
mod profile;
mod roots;
mod signature;

pub use metabolizer::{
    metabolizer_block_check, metabolizer_search, BlockCheckOutcome, MetabolizerBlocks,
    SearchOutcome,
};
pub use profile::{rho_zero, signature_profile, AngleOverPi, Plateau, RhoZero, SignatureProfile};
pub use signature::{signature_at, CirclePoint};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::exact::laurent::LaurentPolynomial;
use crate::exact::matrix::{Matrix, RatFuncMatrix};
use crate::exact::ratfunc::RationalFunction;
use crate::exact::rational::{rat_int, Rational};
use crate::exact::torsion::TorsionValue;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeifertError {
    /// The matrix is not square.
    NonSquare,
    /// The matrix has odd size.
    OddSize,
    /// `det(V - Vᵀ) ≠ ±1`: not the Seifert matrix of a knot surface.
    IntersectionFormNotUnimodular,
    /// A coordinate vector has the wrong length.
    VectorLength { expected: usize, got: usize },
    /// `V - tVᵀ` is singular over ℚ(t).
    SingularPairing,
    /// A change-of-basis matrix has determinant other than ±1.
    NonUnimodular,
    /// The requested exhaustive search exceeds the configured cap.
    SearchSpaceTooLarge,
    /// The evaluation point is (indistinguishable from) a unit root of Δ.
    AtSingularPoint,
    /// The point is not on the unit circle minus 1, or is malformed.
    InvalidCirclePoint(String),
}

impl fmt::Display for SeifertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeifertError::NonSquare => write!(f, "Seifert matrix must be square"),
            SeifertError::OddSize => write!(f, "Seifert matrix must have even size"),
            SeifertError::IntersectionFormNotUnimodular => {
                write!(f, "det(V - V^T) must be +1 or -1")
            }
            SeifertError::VectorLength { expected, got } => {
                write!(f, "coordinate vector has length {got}, expected {expected}")
            }
            SeifertError::SingularPairing => write!(f, "V - tV^T is singular"),
            SeifertError::NonUnimodular => {
                write!(f, "change of basis must have determinant +1 or -1")
            }
            SeifertError::SearchSpaceTooLarge => {
                write!(f, "search space exceeds the configured cap")
            }
            SeifertError::AtSingularPoint => {
                write!(f, "evaluation point is a unit root of the Alexander polynomial")
            }
            SeifertError::InvalidCirclePoint(msg) => write!(f, "invalid circle point: {msg}"),
        }
    }
}

/// Integer Seifert matrix of a genus-`g` surface with one boundary component.
#[derive(Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    size: usize,
    entries: Vec<i64>,
    label: Option<String>,
}

impl SeifertMatrix {
    /// Validates and wraps an integer matrix: square, even size, and
    /// `det(V - Vᵀ) = ±1`.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, SeifertError> {
        Self::with_label(rows, None)
    }

    pub fn with_label(rows: Vec<Vec<i64>>, label: Option<String>) -> Result<Self, SeifertError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(SeifertError::NonSquare);
        }
        if n % 2 != 0 {
            return Err(SeifertError::OddSize);
        }
        let m = SeifertMatrix {
            size: n,
            entries: rows.into_iter().flatten().collect(),
            label,
        };
        let skew = Matrix::from_fn(n, n, |i, j| {
            BigInt::from(m.entry(i, j) - m.entry(j, i))
        });
        let det = skew.det().expect("square");
        if !det.abs().is_one() {
            return Err(SeifertError::IntersectionFormNotUnimodular);
        }
        Ok(m)
    }

    /// The empty matrix: a Seifert matrix for the unknot.
    pub fn empty() -> Self {
        SeifertMatrix {
            size: 0,
            entries: Vec::new(),
            label: None,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn genus(&self) -> usize {
        self.size / 2
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Block-diagonal sum, modeling connected sum of knots.
    pub fn block_sum(&self, other: &SeifertMatrix) -> SeifertMatrix {
        let n = self.size + other.size;
        let mut entries = alloc::vec![0i64; n * n];
        for i in 0..self.size {
            for j in 0..self.size {
                entries[i * n + j] = self.entry(i, j);
            }
        }
        for i in 0..other.size {
            for j in 0..other.size {
                entries[(self.size + i) * n + (self.size + j)] = other.entry(i, j);
            }
        }
        SeifertMatrix {
            size: n,
            entries,
            label: None,
        }
    }

    /// Entrywise negation, modeling the reverse mirror image.
    pub fn negate(&self) -> SeifertMatrix {
        SeifertMatrix {
            size: self.size,
            entries: self.entries.iter().map(|&e| -e).collect(),
        label: self.label.clone(),
        }
    }

    /// `tV - Vᵀ`, the presentation matrix of the Alexander module.
    pub fn presentation_matrix(&self) -> Matrix<LaurentPolynomial> {
        let t = LaurentPolynomial::t();
        Matrix::from_fn(self.size, self.size, |i, j| {
            &(&t * &LaurentPolynomial::from_int(self.entry(i, j)))
                - &LaurentPolynomial::from_int(self.entry(j, i))
        })
    }

    /// `V - tVᵀ` over ℚ(t), the matrix inverted by the Blanchfield formula.
    pub fn pairing_matrix(&self) -> RatFuncMatrix {
        let t = RationalFunction::t();
        Matrix::from_fn(self.size, self.size, |i, j| {
            &RationalFunction::from_rational(rat_int(self.entry(i, j)))
                - &(&t * &RationalFunction::from_rational(rat_int(self.entry(j, i))))
        })
    }

    /// `V + Vᵀ` over ℚ.
    pub fn symmetrized(&self) -> Matrix<Rational> {
        Matrix::from_fn(self.size, self.size, |i, j| {
            rat_int(self.entry(i, j) + self.entry(j, i))
        })
    }

    /// `V - Vᵀ` over ℚ.
    pub fn intersection_form(&self) -> Matrix<Rational> {
        Matrix::from_fn(self.size, self.size, |i, j| {
            rat_int(self.entry(i, j) - self.entry(j, i))
        })
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix{:?}", self.rows())
    }
}

/// Normalized Alexander polynomial: `det(tV - Vᵀ)` adjusted by a unit
/// `±t^k` so that `Δ(t) = Δ(t⁻¹)` and `Δ(1) = 1`.
///
/// `det(tV - Vᵀ)` satisfies `D(1/t) = t^{-2g}·D(t)`, so centering the
/// exponents at 0 makes it symmetric, and `D(1) = det(V - Vᵀ) = ±1` fixes
/// the sign.
pub fn alexander_polynomial(v: &SeifertMatrix) -> LaurentPolynomial {
    let det = v
        .presentation_matrix()
        .det()
        .expect("presentation matrix is square");
    if v.size() == 0 {
        return LaurentPolynomial::one();
    }
    let centered = det.mul_power(-(v.genus() as i64));
    let at_one = centered.eval(&rat_int(1));
    debug_assert!(at_one.abs().is_one());
    centered.scale(&at_one)
}

/// The Blanchfield pairing of classes `r`, `s` given in the dual basis, as a
/// canonical element of ℚ(t)/Λ:
/// `Bl(r, s) = (1-t)·r(t⁻¹)ᵀ·(V - tVᵀ)⁻¹·s(t)`.
pub fn blanchfield(
    v: &SeifertMatrix,
    r: &[LaurentPolynomial],
    s: &[LaurentPolynomial],
) -> Result<TorsionValue, SeifertError> {
    if r.len() != v.size() {
        return Err(SeifertError::VectorLength {
            expected: v.size(),
            got: r.len(),
        });
    }
    if s.len() != v.size() {
        return Err(SeifertError::VectorLength {
            expected: v.size(),
            got: s.len(),
        });
    }
    if v.size() == 0 {
        return Ok(TorsionValue::zero());
    }
    let inv = v
        .pairing_matrix()
        .inverse()
        .map_err(|_| SeifertError::SingularPairing)?;
    let s_rf: Vec<RationalFunction> = s.iter().map(RationalFunction::from_laurent).collect();
    let inv_s = inv.mul_vec(&s_rf).expect("length checked");
    let mut acc = RationalFunction::zero();
    for (ri, w) in r.iter().zip(inv_s) {
        let conj = RationalFunction::from_laurent(&ri.involute());
        acc = &acc + &(&conj * &w);
    }
    let one_minus_t = &RationalFunction::one() - &RationalFunction::t();
    Ok(TorsionValue::reduce(&(&one_minus_t * &acc)))
}

/// Blanchfield pairing for integer class vectors (constant coordinates).
pub fn blanchfield_int(
    v: &SeifertMatrix,
    r: &[i64],
    s: &[i64],
) -> Result<TorsionValue, SeifertError> {
    let to_l = |xs: &[i64]| -> Vec<LaurentPolynomial> {
        xs.iter().map(|&x| LaurentPolynomial::from_int(x)).collect()
    };
    blanchfield(v, &to_l(r), &to_l(s))
}

/// Arf invariant via the Murasugi congruence: 0 iff `Δ(-1) ≡ ±1 (mod 8)`.
pub fn arf(v: &SeifertMatrix) -> u8 {
    let delta = alexander_polynomial(v);
    let at_minus_one = delta.eval(&rat_int(-1));
    debug_assert!(crate::exact::rational::is_integer(&at_minus_one));
    let n = at_minus_one.numer().clone();
    debug_assert!(num_integer::Integer::is_odd(&n), "Δ(-1) is odd for knots");
    let r: BigInt = num_integer::Integer::mod_floor(&n, &BigInt::from(8));
    if r == BigInt::from(1) || r == BigInt::from(7) {
        0
    } else {
        1
    }
}
