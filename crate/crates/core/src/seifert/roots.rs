//! Exact localization of unit-circle roots of Alexander polynomials.
//!
//! A symmetric polynomial `p` of even degree has `p(e^{iθ})/e^{i·deg/2·θ}`
//! real; writing `t^k + t^{-k} = 2·T_k(cos θ)` in Chebyshev polynomials turns
//! unit roots with `θ ∈ (0, π)` into roots of a rational polynomial in
//! `x = cos θ` on `(-1, 1)`. Roots at roots of unity are recognized exactly
//! by cyclotomic divisibility; everything else is isolated by Sturm-chain
//! bisection with rational endpoints.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::poly::Polynomial;
use crate::exact::rational::{rat_int, sign, Rational};

/// Trial-division factorization into (prime, exponent) pairs.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    let mut phi = 1u64;
    for (p, e) in factorize(n) {
        phi *= p.pow(e - 1) * (p - 1);
    }
    phi
}

/// The m-th cyclotomic polynomial, with integer coefficients.
///
/// Computed as `Φ_m(t) = Π_{d|m} (t^d - 1)^{μ(m/d)}` by multiplying the
/// μ = 1 factors and dividing out the μ = -1 factors.
pub fn cyclotomic(m: u64) -> Polynomial {
    fn t_pow_minus_one(d: u64) -> Polynomial {
        let mut coeffs = vec![rat_int(-1)];
        coeffs.extend(core::iter::repeat(Rational::zero()).take(d as usize - 1));
        coeffs.push(rat_int(1));
        Polynomial::from_coeffs(coeffs)
    }
    fn moebius(n: u64) -> i32 {
        let f = factorize(n);
        if f.iter().any(|&(_, e)| e > 1) {
            0
        } else if f.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
    let mut num = Polynomial::one();
    let mut den = Polynomial::one();
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        match moebius(m / d) {
            1 => num = &num * &t_pow_minus_one(d),
            -1 => den = &den * &t_pow_minus_one(d),
            _ => {}
        }
    }
    num.exact_div(&den).expect("cyclotomic division is exact")
}

/// All `m` with `Φ_m` possibly dividing a degree-`deg` polynomial:
/// `φ(m) ≤ deg`, using `φ(m) ≥ √(m/2)`.
pub fn cyclotomic_candidates(deg: usize) -> impl Iterator<Item = u64> {
    let bound = 2 * (deg as u64) * (deg as u64) + 1;
    (1..=bound).filter(move |&m| euler_phi(m) <= deg as u64)
}

/// For a palindromic polynomial `p` of even degree `2d` with `p(0) ≠ 0`,
/// the polynomial `q(x)` with `q(cos θ) = p(e^{iθ})·e^{-idθ}`; its roots in
/// `(-1, 1)` correspond exactly to the unit roots of `p` off `±1`.
pub fn unit_root_cosine_polynomial(p: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return Polynomial::zero();
    }
    let deg = p.degree().unwrap();
    assert!(deg % 2 == 0, "need even degree");
    let d = deg / 2;
    debug_assert_eq!(p, &p.reverse(), "need a palindromic polynomial");
    // Chebyshev T_k, ascending.
    let mut t_prev = Polynomial::one();
    let mut t_cur = Polynomial::from_ints(&[0, 1]);
    let two_x = Polynomial::from_ints(&[0, 2]);
    let mut q = Polynomial::constant(p.coeff(d));
    for k in 1..=d {
        // 2·c_{d+k}·T_k
        let c = p.coeff(d + k) * rat_int(2);
        q = &q + &(&t_cur * &Polynomial::constant(c));
        if k < d {
            let next = &(&two_x * &t_cur) - &t_prev;
            t_prev = t_cur;
            t_cur = next;
        }
    }
    q
}

/// Sturm chain of a squarefree-ified polynomial, for exact root counting.
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    /// Builds the chain for the squarefree part of `p`.
    pub fn new(p: &Polynomial) -> Self {
        let p = p.squarefree_part();
        let mut chain = Vec::new();
        if p.is_zero() {
            return SturmChain { chain };
        }
        chain.push(p.clone());
        let dp = p.derivative();
        if !dp.is_zero() {
            chain.push(dp);
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(-&r);
            }
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rational) -> usize {
        let signs: Vec<i32> = self
            .chain
            .iter()
            .map(|p| sign(&p.eval(x)))
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots_in(&self, a: &Rational, b: &Rational) -> usize {
        if self.chain.is_empty() || a >= b {
            return 0;
        }
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    pub fn count_roots_between(&self, a: &Rational, b: &Rational) -> usize {
        if self.chain.is_empty() || a >= b {
            return 0;
        }
        let mut n = self.count_roots_in(a, b);
        if !self.chain[0].eval(b).is_zero() {
            return n;
        }
        n -= 1;
        n
    }

    pub fn polynomial(&self) -> Option<&Polynomial> {
        self.chain.first()
    }
}

/// Isolating intervals, in descending order of the root, for the distinct
/// roots of `p` in the open interval `(lo, hi)`. Requires `p(lo), p(hi) ≠ 0`.
/// Every returned interval `(a, b)` contains exactly one root, strictly.
pub fn isolate_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Vec<(Rational, Rational)> {
    let chain = SturmChain::new(p);
    let Some(sf) = chain.polynomial() else {
        return Vec::new();
    };
    assert!(
        !sf.eval(lo).is_zero() && !sf.eval(hi).is_zero(),
        "endpoints must not be roots"
    );
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        match chain.count_roots_in(&a, &b) {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let mut mid = (&a + &b) / rat_int(2);
                // Nudge off a root so interval endpoints stay regular.
                while sf.eval(&mid).is_zero() {
                    mid = (&a + &mid) / rat_int(2);
                }
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    // count_roots_in counts on (a, b]; endpoints are never roots here, so
    // the intervals are honestly open. Sort descending by midpoint.
    out.sort_by(|p1, p2| {
        let m1 = &p1.0 + &p1.1;
        let m2 = &p2.0 + &p2.1;
        m2.partial_cmp(&m1).unwrap()
    });
    out
}

/// Shrinks an isolating interval of `p` below the given width.
pub fn refine_interval(
    p: &Polynomial,
    (mut a, mut b): (Rational, Rational),
    width: &Rational,
) -> (Rational, Rational) {
    let sf = p.squarefree_part();
    let sign_a = sign(&sf.eval(&a));
    debug_assert!(sign_a != 0 && sign_a == -sign(&sf.eval(&b)), "not isolating");
    while &(&b - &a) > width {
        let mid = (&a + &b) / rat_int(2);
        let sm = sign(&sf.eval(&mid));
        if sm == 0 {
            // The root is the rational midpoint; pin it inside the interval.
            let quarter = (&b - &a) / rat_int(4);
            let half_width = width / rat_int(2);
            let w = quarter.min(half_width);
            return (&mid - &w, &mid + &w);
        }
        if sm == sign_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    (a, b)
}

/// Rational lower/upper bounds for π, via the Machin formula with alternating
/// arctangent tails: `π = 16·arctan(1/5) - 4·arctan(1/239)`.
pub fn pi_bounds(precision_bits: u32) -> (Rational, Rational) {
    // Alternating series with decreasing terms: the truncation error is
    // bounded by the first omitted term.
    fn arctan_inv_bounds(q: i64, terms: usize) -> (Rational, Rational) {
        // arctan(1/q) = Σ (-1)^j / ((2j+1)·q^{2j+1})
        let mut acc = Rational::zero();
        let qq = rat_int(q * q);
        let mut power = rat_int(q); // q^{2j+1}
        for j in 0..terms {
            let term = Rational::one() / (rat_int(2 * j as i64 + 1) * &power);
            if j % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
            power = &power * &qq;
        }
        let tail = Rational::one() / (rat_int(2 * terms as i64 + 1) * &power);
        (&acc - &tail, &acc + &tail)
    }
    // 5^{-(2k+1)} < 2^{-p} needs k ≈ p/4.6 terms; round up generously.
    let terms = (precision_bits as usize / 4) + 4;
    let (a_lo, a_hi) = arctan_inv_bounds(5, terms);
    let (b_lo, b_hi) = arctan_inv_bounds(239, terms / 2 + 2);
    let lo = rat_int(16) * &a_lo - rat_int(4) * &b_hi;
    let hi = rat_int(16) * &a_hi - rat_int(4) * &b_lo;
    (lo, hi)
}

/// Rigorous rational bounds for `cos(2π·k/m)`, within `2^{1-precision}`.
pub fn cos_two_pi_bounds(k: u64, m: u64, precision_bits: u32) -> (Rational, Rational) {
    let (pi_lo, pi_hi) = pi_bounds(precision_bits + 8);
    let frac = Rational::new(BigInt::from(2 * k), BigInt::from(m));
    let theta_lo = &pi_lo * &frac;
    let theta_hi = &pi_hi * &frac;
    // cos is 1-Lipschitz: evaluate at a dyadic point near θ and widen by the
    // distance plus the Taylor tail.
    let theta_mid = (&theta_lo + &theta_hi) / rat_int(2);
    let scale = BigInt::one() << precision_bits;
    let rounded = (theta_mid.numer() * &scale) / theta_mid.denom();
    let theta = Rational::new(rounded, scale);
    let slack = {
        let from_interval = &theta_hi - &theta_lo;
        let from_rounding = Rational::new(BigInt::one(), BigInt::one() << precision_bits);
        &from_interval + &from_rounding
    };
    let (c_lo, c_hi) = cos_bounds_taylor(&theta, precision_bits);
    (&c_lo - &slack, &c_hi + &slack)
}

/// Taylor bounds for `cos θ` at a rational `θ` with `|θ| ≤ 8`.
fn cos_bounds_taylor(theta: &Rational, precision_bits: u32) -> (Rational, Rational) {
    let theta2 = theta * theta;
    let mut term = Rational::one(); // θ^{2j}/(2j)!
    let mut acc = Rational::zero();
    let mut j = 0u32;
    let eps = Rational::new(BigInt::one(), BigInt::one() << precision_bits);
    loop {
        if j % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
        j += 1;
        term = &term * &theta2 / rat_int((2 * j as i64 - 1) * (2 * j as i64));
        // |tail| ≤ next term once terms decrease; with |θ| ≤ 8 that holds
        // for 2j ≥ 8.
        if j >= 4 && term < eps {
            break;
        }
        assert!(j < 200, "cosine series failed to converge");
    }
    (&acc - &term, &acc + &term)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn cyclotomic_small_orders() {
        assert_eq!(cyclotomic(1), Polynomial::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), Polynomial::from_ints(&[1, 1]));
        assert_eq!(cyclotomic(3), Polynomial::from_ints(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), Polynomial::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), Polynomial::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), Polynomial::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(30), 8);
    }

    #[test]
    fn chebyshev_transform_of_phi6() {
        // Φ₆ = t² - t + 1: q(x) = 2x - 1 with root x = 1/2 = cos(π/3).
        let q = unit_root_cosine_polynomial(&Polynomial::from_ints(&[1, -1, 1]));
        assert_eq!(q, Polynomial::from_ints(&[-1, 2]));
    }

    #[test]
    fn sturm_counts_roots() {
        // (x² - 2)(x - 1/2): roots ±√2, 1/2; two of them in (-1.5, 1.5).
        let p = &Polynomial::from_ints(&[-2, 0, 1])
            * &Polynomial::from_coeffs(alloc::vec![rat(-1, 2), rat_int(1)]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots_in(&rat(-3, 2), &rat(3, 2)), 3);
        assert_eq!(chain.count_roots_in(&rat_int(0), &rat_int(1)), 1);
        assert_eq!(chain.count_roots_in(&rat_int(-1), &rat_int(1)), 1);
    }

    #[test]
    fn isolation_separates_roots() {
        let p = &Polynomial::from_ints(&[-2, 0, 1]) * &Polynomial::from_ints(&[-1, 3]);
        // roots, descending: √2 ≈ 1.414, 1/3, -√2; isolate in (-3/2, 3/2)
        let iv = isolate_roots(&p, &rat(-3, 2), &rat(3, 2));
        assert_eq!(iv.len(), 3);
        let expected = [rat(14142, 10000), rat(1, 3), rat(-14142, 10000)];
        for ((a, b), x) in iv.iter().zip(expected) {
            let (ra, rb) = refine_interval(&p, (a.clone(), b.clone()), &rat(1, 1 << 20));
            assert!(&rb - &ra <= rat(1, 1 << 20));
            assert!(&rb - &x < rat(1, 1000) && &x - &ra < rat(1, 1000));
        }
    }

    #[test]
    fn pi_bounds_bracket() {
        let (lo, hi) = pi_bounds(64);
        assert!(lo < hi);
        assert!(lo > rat(314159265, 100000000));
        assert!(hi < rat(314159266, 100000000));
        let width = &hi - &lo;
        assert!(width < Rational::new(BigInt::one(), BigInt::one() << 60));
    }

    #[test]
    fn cos_bounds_hit_known_values() {
        // cos(2π/6) = 1/2
        let (lo, hi) = cos_two_pi_bounds(1, 6, 48);
        assert!(lo <= rat(1, 2) && rat(1, 2) <= hi);
        assert!(&hi - &lo < rat(1, 1 << 30));
        // cos(2π/4) = 0
        let (lo, hi) = cos_two_pi_bounds(1, 4, 48);
        assert!(lo <= rat_int(0) && rat_int(0) <= hi);
    }
}
