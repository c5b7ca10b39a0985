//! The torsion quotient ℚ(t)/Λ with canonical coset representatives.
//!
//! A coset is represented by the unique fraction `t^s·num/den` with `s ≥ 0`,
//! `den` monic with nonzero constant term, `gcd(num, den) = 1`, and
//! `s + deg num < deg den`. Such a fraction lies in Λ only when it is zero:
//! if `t^s·num/den = p(t)/t^k` with `p(0) ≠ 0` then `p·den = t^{k+s}·num`
//! forces `k + s = 0` (both sides have nonzero lowest coefficient otherwise)
//! and then the degree bound forces `p = 0`. Uniqueness follows because the
//! difference of two representatives satisfies the same constraints. Coset
//! equality is therefore structural equality of representatives.

use core::fmt;
use core::ops::{Add, Neg, Sub};

use alloc::string::String;

use super::laurent::LaurentPolynomial;
use super::poly::Polynomial;
use super::ratfunc::RationalFunction;

/// Canonical representative of an element of ℚ(t)/Λ.
#[derive(Clone, PartialEq, Eq)]
pub struct TorsionValue {
    rep: RationalFunction,
}

impl TorsionValue {
    pub fn zero() -> Self {
        TorsionValue {
            rep: RationalFunction::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The canonical representative as an element of ℚ(t).
    pub fn representative(&self) -> &RationalFunction {
        &self.rep
    }

    /// Reduces an arbitrary element of ℚ(t) modulo Λ.
    ///
    /// The Λ-part is split off by Euclidean division against the polynomial
    /// part and partial fractions against the `t`-power part: with the input
    /// written as `Ñ/(t^m·D)` for a polynomial `Ñ` and `D(0) ≠ 0`, divide to
    /// get `Q + R/(t^m·D)`, then use `u·t^m + v·D = 1` to split
    /// `R/(t^m·D) = R·u/D + R·v/t^m`; everything except `(R·u mod D)/D`
    /// lies in Λ.
    pub fn reduce(f: &RationalFunction) -> Self {
        if f.is_zero() || f.is_laurent() {
            return Self::zero();
        }
        let den = f.denominator();
        let shift = f.shift();
        let m = (-shift).max(0) as usize;
        let n_tilde = f.numerator().shift_up((shift + m as i64) as usize);
        let full_den = den.shift_up(m);
        let (_, r) = n_tilde.div_rem(&full_den);
        let b = if m == 0 {
            r
        } else {
            let tm = Polynomial::monomial(crate::exact::rational::rat_int(1), m);
            let (g, u, _) = tm.extended_gcd(den);
            debug_assert!(g.degree() == Some(0));
            let (_, b) = (&r * &u).div_rem(den);
            b
        };
        TorsionValue {
            rep: RationalFunction::new(0, b, den.clone()),
        }
    }

    /// Reduces a Laurent polynomial (always zero in the quotient).
    pub fn reduce_laurent(l: &LaurentPolynomial) -> Self {
        let _ = l;
        Self::zero()
    }

    /// Multiplies by a Laurent polynomial and re-reduces.
    pub fn scale_laurent(&self, l: &LaurentPolynomial) -> Self {
        Self::reduce(&(&self.rep * &RationalFunction::from_laurent(l)))
    }

    /// Applies `t ↦ t⁻¹` to the coset.
    pub fn involute(&self) -> Self {
        Self::reduce(&self.rep.involute())
    }

    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let num = LaurentPolynomial::from_shifted_polynomial(
            self.rep.shift(),
            self.rep.numerator(),
        );
        let den = LaurentPolynomial::from_shifted_polynomial(0, self.rep.denominator());
        let mut out = String::new();
        let _ = write!(out, "({})/({})", num.render(), den.render());
        out
    }
}

impl fmt::Debug for TorsionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for TorsionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &TorsionValue {
    type Output = TorsionValue;
    fn add(self, rhs: &TorsionValue) -> TorsionValue {
        TorsionValue::reduce(&(&self.rep + &rhs.rep))
    }
}

impl Sub for &TorsionValue {
    type Output = TorsionValue;
    fn sub(self, rhs: &TorsionValue) -> TorsionValue {
        TorsionValue::reduce(&(&self.rep - &rhs.rep))
    }
}

impl Neg for &TorsionValue {
    type Output = TorsionValue;
    fn neg(self) -> TorsionValue {
        TorsionValue {
            rep: -&self.rep,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn rf(shift: i64, num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(
            shift,
            Polynomial::from_ints(num),
            Polynomial::from_ints(den),
        )
    }

    #[test]
    fn laurent_elements_reduce_to_zero() {
        // t³ + 2 ∈ Λ
        assert!(TorsionValue::reduce(&rf(0, &[2, 0, 0, 1], &[1])).is_zero());
        // a/t^m + g with polynomial g: both summands in Λ
        let f = &rf(-3, &[5], &[1]) + &rf(0, &[1, 2, 0, 7], &[1]);
        assert!(TorsionValue::reduce(&f).is_zero());
    }

    #[test]
    fn polynomial_part_is_dropped() {
        // -1 + t/(t² - t + 1) ≡ t/(t² - t + 1); division oracle:
        // (-t² + 2t - 1)/(t² - t + 1) = -1 + t/(t² - t + 1).
        let f = rf(0, &[-1, 2, -1], &[1, -1, 1]);
        let reduced = TorsionValue::reduce(&f);
        let expected = TorsionValue::reduce(&rf(1, &[1], &[1, -1, 1]));
        assert_eq!(reduced, expected);
        assert!(!reduced.is_zero());
        assert_eq!(reduced.representative(), &rf(1, &[1], &[1, -1, 1]));
    }

    #[test]
    fn negative_shift_splits_off_t_power_part() {
        // 1/(t·(t+2)) = (1/2)/t - (1/2)/(t+2): coset is -(1/2)/(t+2).
        let f = rf(-1, &[1], &[2, 1]);
        let reduced = TorsionValue::reduce(&f);
        let expected = TorsionValue::reduce(&RationalFunction::new(
            0,
            Polynomial::constant(rat(-1, 2)),
            Polynomial::from_ints(&[2, 1]),
        ));
        assert_eq!(reduced, expected);
    }

    #[test]
    fn additive_and_invariant_under_lambda() {
        let f = rf(1, &[3, 1], &[1, 0, 2, 1]);
        let g = rf(-2, &[1, 1], &[1, 1, 1]);
        let sum = TorsionValue::reduce(&(&f + &g));
        let split = &TorsionValue::reduce(&f) + &TorsionValue::reduce(&g);
        assert_eq!(sum, split);

        let h = rf(-4, &[7, 0, 2], &[1]); // ∈ Λ
        assert_eq!(TorsionValue::reduce(&(&f + &h)), TorsionValue::reduce(&f));
    }

    #[test]
    fn representative_degree_bound() {
        let f = rf(3, &[1, 5, 0, 2, 1], &[1, -1, 1]);
        let r = TorsionValue::reduce(&f);
        if !r.is_zero() {
            let eff_deg = r.representative().shift() as usize
                + r.representative().numerator().degree().unwrap();
            assert!(eff_deg < r.representative().denominator().degree().unwrap());
            assert!(r.representative().shift() >= 0);
        }
        let _ = rat_int(0);
    }
}
