//! Levine-Tristram signatures at exact points of the unit circle.
//!
//! For `ω = e^{iθ}` with `x = cos θ` the Hermitian matrix
//! `H(ω) = (1-ω)V + (1-ω̄)Vᵀ` can be written `(1-x)(V+Vᵀ) - u·(V-Vᵀ)` where
//! `u = i·sin θ` satisfies `u² = x² - 1`. All arithmetic therefore happens in
//! the quadratic extension ℚ[u]/(u² - (x²-1)): the characteristic polynomial
//! comes out with rational coefficients (the u-parts cancel, as they must for
//! a Hermitian matrix), its roots are the real eigenvalues, and Descartes'
//! rule of signs — exact for polynomials with all roots real — counts them.
//!
//! Since `H(ω) = -(1-ω̄)·(ωV - Vᵀ)`, the matrix is singular exactly at unit
//! roots of the Alexander polynomial; that case is reported as
//! [`SeifertError::AtSingularPoint`].

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::roots;
use super::{alexander_polynomial, SeifertError, SeifertMatrix};
use crate::exact::rational::{rat, rat_int, sign, Rational};

/// A point `ω ≠ 1` of the unit circle, given exactly or approximately.
#[derive(Clone, Debug, PartialEq)]
pub enum CirclePoint {
    /// `ω = -1`.
    MinusOne,
    /// `ω` with exactly rational `cos θ ∈ (-1, 1)`; the sign of `sin θ` does
    /// not affect the signature.
    RationalCos(Rational),
    /// `ω = e^{2πi·k/m}`.
    RootOfUnity { k: u64, m: u64 },
    /// `cos θ` known only within `tolerance`; rejected when a unit root of Δ
    /// is that close.
    ApproxCos { value: Rational, tolerance: Rational },
}

impl CirclePoint {
    /// Builds from an exact rational point `(cos θ, sin θ)` on the circle.
    pub fn from_rational_point(cos: Rational, sin: Rational) -> Result<Self, SeifertError> {
        if &cos * &cos + &sin * &sin != rat_int(1) {
            return Err(SeifertError::InvalidCirclePoint(format!(
                "({cos}, {sin}) is not on the unit circle"
            )));
        }
        if cos == rat_int(1) {
            return Err(SeifertError::InvalidCirclePoint("ω = 1 is excluded".into()));
        }
        Ok(if cos == rat_int(-1) {
            CirclePoint::MinusOne
        } else {
            CirclePoint::RationalCos(cos)
        })
    }
}

/// Element `a + b·u` of ℚ[u]/(u² - d).
#[derive(Clone)]
struct Quad {
    a: Rational,
    b: Rational,
}

impl Quad {
    fn zero() -> Self {
        Quad {
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }

    fn real(a: Rational) -> Self {
        Quad {
            a,
            b: Rational::zero(),
        }
    }

    fn add(&self, o: &Quad) -> Quad {
        Quad {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }

    fn mul(&self, o: &Quad, d: &Rational) -> Quad {
        Quad {
            a: &self.a * &o.a + &(&self.b * &o.b) * d,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

/// Characteristic polynomial of `H = (1-x)(V+Vᵀ) - u(V-Vᵀ)` over
/// ℚ[u]/(u² - (x²-1)), via the Faddeev-LeVerrier recurrence. Returns the
/// coefficients of `λⁿ + c₁λⁿ⁻¹ + … + cₙ` as `[c₁, …, cₙ]`.
fn char_poly_at(v: &SeifertMatrix, x: &Rational) -> Vec<Rational> {
    let n = v.size();
    let d = x * x - rat_int(1);
    let one_minus_x = rat_int(1) - x;
    let h: Vec<Vec<Quad>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let sym = rat_int(v.entry(i, j) + v.entry(j, i));
                    let skew = rat_int(v.entry(i, j) - v.entry(j, i));
                    Quad {
                        a: &one_minus_x * &sym,
                        b: -skew,
                    }
                })
                .collect()
        })
        .collect();

    let mat_mul = |p: &Vec<Vec<Quad>>, q: &Vec<Vec<Quad>>| -> Vec<Vec<Quad>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = Quad::zero();
                        for k in 0..n {
                            acc = acc.add(&p[i][k].mul(&q[k][j], &d));
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    };
    let trace = |p: &Vec<Vec<Quad>>| -> Quad {
        let mut acc = Quad::zero();
        for i in 0..n {
            acc = acc.add(&p[i][i]);
        }
        acc
    };

    let mut coeffs = Vec::with_capacity(n);
    let mut m = h.clone();
    for k in 1..=n {
        let tr = trace(&m);
        let c = Quad {
            a: -&tr.a / rat_int(k as i64),
            b: -&tr.b / rat_int(k as i64),
        };
        debug_assert!(c.b.is_zero(), "Hermitian char poly has real coefficients");
        coeffs.push(c.a.clone());
        if k == n {
            break;
        }
        // M ← H·(M + c·I)
        let mut shifted = m;
        for i in 0..n {
            shifted[i][i] = shifted[i][i].add(&Quad::real(c.a.clone()));
        }
        m = mat_mul(&h, &shifted);
    }
    coeffs
}

/// Signature of `H` at the rational cosine `x ∈ [-1, 1)`, or an error when
/// `H` is singular there. Exactness argument: the characteristic polynomial
/// has all roots real, so Descartes' sign-change count equals the number of
/// positive (resp. negative) roots with multiplicity.
pub(super) fn signature_at_cos(v: &SeifertMatrix, x: &Rational) -> Result<i64, SeifertError> {
    let n = v.size();
    if n == 0 {
        return Ok(0);
    }
    // χ(λ) = λⁿ + c₁λⁿ⁻¹ + … + cₙ, stored descending.
    let cs = char_poly_at(v, x);
    if cs[n - 1].is_zero() {
        return Err(SeifertError::AtSingularPoint);
    }
    let mut descending = Vec::with_capacity(n + 1);
    descending.push(Rational::one());
    descending.extend(cs);
    let sign_changes = |coeffs: &[Rational]| -> i64 {
        let signs: Vec<i32> = coeffs.iter().map(sign).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
    };
    let pos = sign_changes(&descending);
    let negated: Vec<Rational> = descending
        .iter()
        .enumerate()
        .map(|(i, c)| {
            // χ(-λ): flip signs of odd-degree coefficients (degree n-i).
            if (descending.len() - 1 - i) % 2 == 1 {
                -c
            } else {
                c.clone()
            }
        })
        .collect();
    let neg = sign_changes(&negated);
    debug_assert_eq!(pos + neg, n as i64, "H is nonsingular here");
    Ok(pos - neg)
}

/// Levine-Tristram signature `σ_ω(V)`: the signature of the Hermitian matrix
/// `(1-ω)V + (1-ω̄)Vᵀ`.
pub fn signature_at(v: &SeifertMatrix, point: &CirclePoint) -> Result<i64, SeifertError> {
    match point {
        CirclePoint::MinusOne => signature_at_cos(v, &rat_int(-1)),
        CirclePoint::RationalCos(x) => {
            if x >= &rat_int(1) || x < &rat_int(-1) {
                return Err(SeifertError::InvalidCirclePoint(format!(
                    "cos θ = {x} is outside [-1, 1)"
                )));
            }
            signature_at_cos(v, x)
        }
        CirclePoint::RootOfUnity { k, m } => signature_at_root_of_unity(v, *k, *m),
        CirclePoint::ApproxCos { value, tolerance } => {
            signature_at_approx(v, value, tolerance)
        }
    }
}

fn signature_at_root_of_unity(v: &SeifertMatrix, k: u64, m: u64) -> Result<i64, SeifertError> {
    if m == 0 {
        return Err(SeifertError::InvalidCirclePoint("order 0".into()));
    }
    let k = k % m;
    if k == 0 {
        return Err(SeifertError::InvalidCirclePoint("ω = 1 is excluded".into()));
    }
    let g = k.gcd(&m);
    let (k, m) = (k / g, m / g); // ω is now a primitive m-th root
    match m {
        2 => return signature_at_cos(v, &rat_int(-1)),
        3 => return signature_at_cos(v, &rat(-1, 2)),
        4 => return signature_at_cos(v, &rat_int(0)),
        6 => return signature_at_cos(v, &rat(1, 2)),
        _ => {}
    }
    // Exact singularity test: ω is a root of Δ iff the m-th cyclotomic
    // polynomial divides it.
    let delta = alexander_polynomial(v);
    let (_, delta_poly) = delta.to_shifted_polynomial();
    let phi = roots::cyclotomic(m);
    if delta_poly.exact_div(&phi).is_some() {
        return Err(SeifertError::AtSingularPoint);
    }
    // cos(2πk/m) is irrational here; the signature is constant on the arc
    // between consecutive unit roots of Δ, so it suffices to evaluate at a
    // rational cosine in the same root-free interval.
    let x_poly = roots::unit_root_cosine_polynomial(&delta_poly);
    let sturm = roots::SturmChain::new(&x_poly);
    let mut precision = 32u32;
    loop {
        let (lo, hi) = roots::cos_two_pi_bounds(k, m, precision);
        let lo = lo.max(rat_int(-1));
        let hi = hi.min(rat_int(1));
        if sturm.count_roots_between(&lo, &hi) == 0 {
            let mid = (lo + hi) / rat_int(2);
            return signature_at_cos(v, &mid);
        }
        precision *= 2;
        if precision > 1 << 14 {
            // Unreachable when the divisibility test above is sound.
            return Err(SeifertError::AtSingularPoint);
        }
    }
}

fn signature_at_approx(
    v: &SeifertMatrix,
    value: &Rational,
    tolerance: &Rational,
) -> Result<i64, SeifertError> {
    if tolerance.is_negative() {
        return Err(SeifertError::InvalidCirclePoint(
            "negative tolerance".into(),
        ));
    }
    if value >= &rat_int(1) || value <= &rat_int(-1) {
        return Err(SeifertError::InvalidCirclePoint(format!(
            "cos θ = {value} is outside (-1, 1)"
        )));
    }
    let delta = alexander_polynomial(v);
    let (_, delta_poly) = delta.to_shifted_polynomial();
    let x_poly = roots::unit_root_cosine_polynomial(&delta_poly);
    let sturm = roots::SturmChain::new(&x_poly);
    let lo = (value - tolerance).max(rat_int(-1));
    let hi = (value + tolerance).min(rat_int(1));
    if sturm.count_roots_between(&lo, &hi) > 0 {
        return Err(SeifertError::AtSingularPoint);
    }
    signature_at_cos(v, value)
}
