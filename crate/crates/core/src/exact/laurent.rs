//! Laurent polynomials Λ = ℚ[t,t⁻¹] with exact rational coefficients.
//!
//! A value is a finite map from integer exponent to nonzero coefficient; the
//! empty map is zero. No zero coefficient is ever stored, so equality is
//! structural.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use super::rational::Rational;

/// Element of ℚ[t,t⁻¹]: exponent → nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    /// The monomial `c·t^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPolynomial { coeffs }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&k) {
            None => {
                self.coeffs.insert(k, c);
            }
            Some(prev) => {
                let sum = prev + c;
                if !sum.is_zero() {
                    self.coeffs.insert(k, sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterates terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn involute(&self) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn mul_power(&self, k: i64) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Evaluates at a nonzero rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        assert!(!x.is_zero(), "Laurent polynomial evaluated at 0");
        let inv = Rational::one() / x;
        let mut acc = Rational::zero();
        for (&k, c) in &self.coeffs {
            let base = if k >= 0 { x } else { &inv };
            let mut pw = Rational::one();
            for _ in 0..k.unsigned_abs() {
                pw = pw * base;
            }
            acc = acc + c * pw;
        }
        acc
    }

    /// Splits as `t^shift · p(t)` with `p(0) ≠ 0`; zero maps to `(0, 0)`.
    pub fn to_shifted_polynomial(&self) -> (i64, Polynomial) {
        match self.min_exponent() {
            None => (0, Polynomial::zero()),
            Some(m) => {
                let max = self.max_exponent().unwrap();
                let mut coeffs = Vec::with_capacity((max - m + 1) as usize);
                for k in m..=max {
                    coeffs.push(self.coeff(k));
                }
                (m, Polynomial::from_coeffs(coeffs))
            }
        }
    }

    pub fn from_shifted_polynomial(shift: i64, p: &Polynomial) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (shift + k as i64, c.clone())),
        )
    }

    /// Exact quotient in Λ, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_zero() {
            return None;
        }
        let (sa, pa) = self.to_shifted_polynomial();
        let (sd, pd) = d.to_shifted_polynomial();
        let q = pa.exact_div(&pd)?;
        Some(Self::from_shifted_polynomial(sa - sd, &q))
    }

    /// Renders like `t^-1 - 1 + t` (ascending exponents).
    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_is_one = mag.is_one();
            if k == 0 || !coeff_is_one {
                let _ = write!(out, "{mag}");
            }
            if k != 0 {
                if !coeff_is_one {
                    out.push('*');
                }
                if k == 1 {
                    out.push('t');
                } else {
                    let _ = write!(out, "t^{k}");
                }
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

// Owned-value operator forms, for generic matrix code.
impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> Self {
        -&self
    }
}

impl Zero for LaurentPolynomial {
    fn zero() -> Self {
        LaurentPolynomial::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPolynomial::is_zero(self)
    }
}

impl One for LaurentPolynomial {
    fn one() -> Self {
        LaurentPolynomial::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().map(|&(k, c)| (k, rat_int(c))))
    }

    #[test]
    fn add_cancels() {
        // (t + 1) + (-1) = t
        let a = lp(&[(1, 1), (0, 1)]);
        let b = lp(&[(0, -1)]);
        assert_eq!(&a + &b, lp(&[(1, 1)]));
    }

    #[test]
    fn mul_shifts_exponents() {
        // (t - 1)·t⁻¹ = 1 - t⁻¹
        let a = lp(&[(1, 1), (0, -1)]);
        let b = lp(&[(-1, 1)]);
        assert_eq!(&a * &b, lp(&[(0, 1), (-1, -1)]));
    }

    #[test]
    fn mul_hand_checked() {
        // (t² - t + 1)(t + 1) = t³ + 1
        let a = lp(&[(2, 1), (1, -1), (0, 1)]);
        let b = lp(&[(1, 1), (0, 1)]);
        assert_eq!(&a * &b, lp(&[(3, 1), (0, 1)]));
    }

    #[test]
    fn involute_examples() {
        assert_eq!(LaurentPolynomial::t().involute(), lp(&[(-1, 1)]));
        let a = lp(&[(2, 1), (1, -1), (0, 1)]);
        assert_eq!(a.involute(), lp(&[(-2, 1), (-1, -1), (0, 1)]));
    }

    #[test]
    fn exact_division() {
        let a = lp(&[(3, 1), (0, 1)]); // t³ + 1
        let b = lp(&[(1, 1), (0, 1)]); // t + 1
        assert_eq!(a.exact_div(&b), Some(lp(&[(2, 1), (1, -1), (0, 1)])));
        assert_eq!(lp(&[(1, 1)]).exact_div(&b), None);
        let shifted = lp(&[(-2, 1), (-3, 1)]); // t⁻³(t + 1)
        assert_eq!(a.exact_div(&shifted), Some(lp(&[(5, 1), (4, -1), (3, 1)])));
    }

    #[test]
    fn render_readable() {
        assert_eq!(lp(&[(-1, 1), (0, -1), (1, 1)]).render(), "t^-1 - 1 + t");
        assert_eq!(
            LaurentPolynomial::from_terms([(2, rat(1, 2))]).render(),
            "1/2*t^2"
        );
        assert_eq!(LaurentPolynomial::zero().render(), "0");
    }

    #[test]
    fn eval_with_negative_exponents() {
        let a = lp(&[(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(a.eval(&rat_int(2)), rat(3, 2));
        assert_eq!(a.eval(&rat_int(1)), rat_int(1));
    }
}
