//! The field of fractions ℚ(t), with canonical representatives.
//!
//! A value is `t^shift · num(t) / den(t)` where `den` is monic with nonzero
//! constant term, `gcd(num, den) = 1`, and all powers of `t` dividing the
//! numerator have been absorbed into the shift (so `num(0) ≠ 0` unless the
//! whole value is zero). Zero is `(shift 0, 0, 1)`. With these invariants,
//! equality is structural.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::LaurentPolynomial;
use super::poly::Polynomial;
use super::rational::Rational;

/// Element of ℚ(t) in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    shift: i64,
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Canonicalizes `t^shift · num / den`. Panics if `den` is zero.
    pub fn new(shift: i64, num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(t)");
        if num.is_zero() {
            return Self::zero();
        }
        let k_num = num.trailing_zeros();
        let k_den = den.trailing_zeros();
        let num = num.shift_down(k_num);
        let den = den.shift_down(k_den);
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lead = den.leading().expect("nonzero").clone();
        let scale = Polynomial::constant(Rational::one() / lead);
        RationalFunction {
            shift: shift + k_num as i64 - k_den as i64,
            num: &num * &scale,
            den: den.monic(),
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            shift: 0,
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            shift: 0,
            num: Polynomial::one(),
            den: Polynomial::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RationalFunction {
            shift: 0,
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_polynomial(p: &Polynomial) -> Self {
        Self::new(0, p.clone(), Polynomial::one())
    }

    pub fn from_laurent(l: &LaurentPolynomial) -> Self {
        let (shift, p) = l.to_shifted_polynomial();
        Self::new(shift, p, Polynomial::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::from_laurent(&LaurentPolynomial::t())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// Whether the value lies in Λ = ℚ[t,t⁻¹].
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Converts to a Laurent polynomial when the denominator is trivial.
    pub fn to_laurent(&self) -> Option<LaurentPolynomial> {
        self.is_laurent()
            .then(|| LaurentPolynomial::from_shifted_polynomial(self.shift, &self.num))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::new(-self.shift, self.den.clone(), self.num.clone()))
    }

    /// Substitutes `t ↦ t⁻¹`.
    ///
    /// With `num(0) ≠ 0` and `den(0) ≠ 0`, coefficient reversal preserves
    /// degrees, so the result is again canonical after re-normalization.
    pub fn involute(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        Self::new(-self.shift + dd - dn, self.num.reverse(), self.den.reverse())
    }

    /// Evaluates at a rational point; `None` at a pole or (for negative
    /// shift) at zero.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return None;
        }
        if x.is_zero() && self.shift < 0 {
            return None;
        }
        let mut acc = self.num.eval(x) / den;
        if self.shift >= 0 {
            for _ in 0..self.shift {
                acc = acc * x;
            }
        } else {
            for _ in 0..(-self.shift) {
                acc = acc / x;
            }
        }
        Some(acc)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.shift != 0 {
            write!(f, "t^{}·", self.shift)?;
        }
        write!(f, "({:?})", self.num)?;
        if !self.den.is_one() {
            write!(f, "/({:?})", self.den)?;
        }
        Ok(())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // t^s1·n1/d1 + t^s2·n2/d2 over the common shift min(s1, s2).
        let s = self.shift.min(rhs.shift);
        let a = self.num.shift_up((self.shift - s) as usize);
        let b = rhs.num.shift_up((rhs.shift - s) as usize);
        let num = &(&a * &rhs.den) + &(&b * &self.den);
        RationalFunction::new(s, num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(
            self.shift + rhs.shift,
            &self.num * &rhs.num,
            &self.den * &rhs.den,
        )
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by zero in Q(t)")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            shift: self.shift,
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> Self {
        -&self
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
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
    fn laurent_round_trip() {
        let l = lp(&[(-2, 3), (0, -1), (1, 2)]);
        let f = RationalFunction::from_laurent(&l);
        assert!(f.is_laurent());
        assert_eq!(f.to_laurent(), Some(l));
    }

    #[test]
    fn canonical_normalization() {
        // (2t² + 2t)/(4t) = t^0 · (t+1)/2 → shift 1 absorbed, monic den.
        let f = RationalFunction::new(
            0,
            Polynomial::from_ints(&[0, 2, 2]),
            Polynomial::from_ints(&[0, 4]),
        );
        assert_eq!(f.shift(), 0);
        assert_eq!(f.numerator(), &{
            let half = Polynomial::constant(rat(1, 2));
            &Polynomial::from_ints(&[1, 1]) * &half
        });
        assert!(f.denominator().is_one());
    }

    #[test]
    fn field_laws_spot_checks() {
        let t = RationalFunction::t();
        let f = &(&t * &t) - &RationalFunction::one(); // t² - 1
        let g = &t + &RationalFunction::one(); // t + 1
        let q = &f / &g;
        assert_eq!(q, &t - &RationalFunction::one());
        assert_eq!(&q * &q.inv().unwrap(), RationalFunction::one());
    }

    #[test]
    fn involute_is_involution() {
        let f = RationalFunction::new(
            -1,
            Polynomial::from_ints(&[1, 2]),
            Polynomial::from_ints(&[3, 0, 1]),
        );
        assert_eq!(f.involute().involute(), f);
        // t ↦ t⁻¹ on the Laurent t matches the Laurent involution.
        let t = RationalFunction::t();
        assert_eq!(
            t.involute().to_laurent().unwrap(),
            LaurentPolynomial::t().involute()
        );
    }

    #[test]
    fn eval_matches_pieces() {
        let f = RationalFunction::new(
            -1,
            Polynomial::from_ints(&[1, 1]),
            Polynomial::from_ints(&[1, 0, 1]),
        );
        // f(2) = 2⁻¹·3/5 = 3/10
        assert_eq!(f.eval(&rat_int(2)), Some(rat(3, 10)));
        assert_eq!(f.eval(&rat_int(0)), None);
    }
}
