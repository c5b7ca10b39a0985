//! Dense univariate polynomials over ℚ.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: the vector is empty for the zero polynomial, and otherwise the
//! last coefficient is nonzero. These polynomials back [`RationalFunction`]
//! denominators/numerators and the root-isolation machinery; the ring the
//! rest of the crate mostly works in is [`LaurentPolynomial`].
//!
//! [`RationalFunction`]: crate::exact::ratfunc::RationalFunction
//! [`LaurentPolynomial`]: crate::exact::laurent::LaurentPolynomial

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Dense polynomial over ℚ in ascending coefficient order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    fn normalized(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { coeffs: vec![c] }
        }
    }

    /// The monomial `c·t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self::normalized(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::normalized(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect();
        Self::normalized(coeffs)
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = Rational::one() / l;
                Polynomial {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Largest `k` with `t^k` dividing `self`; 0 for the zero polynomial.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Divides by `t^k`; panics if `t^k` does not divide.
    pub fn shift_down(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        assert!(self.trailing_zeros() >= k, "t^k does not divide");
        Polynomial {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Coefficient reversal: `t^deg · p(1/t)`.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::normalized(coeffs)
    }

    /// Euclidean division: `(q, r)` with `self = q·d + r`, `deg r < deg d`.
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dl = d.leading().expect("division by zero polynomial");
        let dd = d.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / dl;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                let v = &rem[idx] - &q * dc;
                rem[idx] = v;
            }
            quot[k - dd] = q;
        }
        (Self::normalized(quot), Self::normalized(rem))
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, u, v)` with `u·self + v·other = g`, `g` monic
    /// (or zero when both inputs are zero).
    pub fn extended_gcd(&self, other: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = Polynomial::one();
        let mut u1 = Polynomial::zero();
        let mut v0 = Polynomial::zero();
        let mut v1 = Polynomial::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let u = &u0 - &(&q * &u1);
            let v = &v0 - &(&q * &v1);
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        match r0.leading() {
            None => (Polynomial::zero(), Polynomial::zero(), Polynomial::zero()),
            Some(l) => {
                let scale = Polynomial::constant(Rational::one() / l);
                (&r0 * &scale, &u0 * &scale, &v0 * &scale)
            }
        }
    }

    /// Squarefree part: `self / gcd(self, self')`, made monic.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g)
            .expect("gcd divides its argument")
            .monic()
    }

    /// Clears denominators and common integer content; the sign of the
    /// leading coefficient is preserved.
    pub fn primitive_integer(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for n in &ints {
            content = num_integer::gcd(content, n.abs());
        }
        Polynomial {
            coeffs: ints
                .into_iter()
                .map(|n| Rational::from_integer(n / &content))
                .collect(),
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::normalized(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::normalized(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + a * b;
                coeffs[i + j] = v;
            }
        }
        Polynomial::normalized(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    #[test]
    fn div_rem_euclidean() {
        // (t^3 + 1) = (t + 1)(t^2 - t + 1)
        let a = p(&[1, 0, 0, 1]);
        let d = p(&[1, 1]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());

        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(&(&q * &p(&[1, 1])) + &r, p(&[1, 0, 1]));
        assert!(r.degree() < p(&[1, 1]).degree());
    }

    #[test]
    fn gcd_and_extended_gcd() {
        let a = &p(&[1, 1]) * &p(&[1, -1, 1]);
        let b = &p(&[1, 1]) * &p(&[2, 3]);
        let g = a.gcd(&b);
        assert_eq!(g, p(&[1, 1]));

        let (g, u, v) = p(&[0, 0, 1]).extended_gcd(&p(&[1, -1, 1]));
        assert!(g.degree() == Some(0));
        let lhs = &(&u * &p(&[0, 0, 1])) + &(&v * &p(&[1, -1, 1]));
        assert_eq!(lhs, g);
    }

    #[test]
    fn reverse_and_eval() {
        let a = p(&[1, -2, 3]);
        assert_eq!(a.reverse(), p(&[3, -2, 1]));
        assert_eq!(a.eval(&rat_int(2)), rat_int(1 - 4 + 12));
    }

    #[test]
    fn primitive_integer_scaling() {
        let a = Polynomial::from_coeffs(alloc::vec![
            crate::exact::rational::rat(1, 2),
            crate::exact::rational::rat(3, 4),
        ]);
        assert_eq!(a.primitive_integer(), p(&[2, 3]));
    }
}
