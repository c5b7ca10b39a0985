//! Signature step functions over the unit circle and their average ρ₀.
//!
//! The Levine-Tristram signature is constant between consecutive unit roots
//! of the Alexander polynomial. Jump locations are split into cyclotomic ones
//! (angle an exact rational multiple of π, recognized by cyclotomic
//! divisibility) and the rest (isolated to width 2⁻⁶⁴ in `x = cos θ` by
//! Sturm bisection, angle recovered approximately and flagged). Plateau
//! values are computed at exact rational midpoints of the root-free gaps, so
//! `ρ₀ = (1/2π)·∫ σ_ω dω` comes out as an exact rational whenever every jump
//! is cyclotomic.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

use super::roots;
use super::signature::signature_at_cos;
use super::{alexander_polynomial, SeifertMatrix};
use crate::exact::poly::Polynomial;
use crate::exact::rational::{rat_int, Rational};

/// An angle divided by π: exact rational, or a rational approximation of an
/// isolated algebraic angle.
#[derive(Clone, Debug, PartialEq)]
pub enum AngleOverPi {
    Exact(Rational),
    Approx(Rational),
}

impl AngleOverPi {
    pub fn value(&self) -> &Rational {
        match self {
            AngleOverPi::Exact(v) | AngleOverPi::Approx(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, AngleOverPi::Exact(_))
    }

    fn mirrored(&self) -> Self {
        match self {
            AngleOverPi::Exact(v) => AngleOverPi::Exact(rat_int(2) - v),
            AngleOverPi::Approx(v) => AngleOverPi::Approx(rat_int(2) - v),
        }
    }
}

/// One plateau of the signature step function.
#[derive(Clone, Debug, PartialEq)]
pub struct Plateau {
    pub start: AngleOverPi,
    pub end: AngleOverPi,
    pub sigma: i64,
}

/// The full signature profile over θ ∈ (0, 2π), symmetric under
/// θ ↦ 2π - θ.
#[derive(Clone, Debug, PartialEq)]
pub struct SignatureProfile {
    pub plateaus: Vec<Plateau>,
}

/// ρ₀ with its exactness flag.
#[derive(Clone, Debug, PartialEq)]
pub struct RhoZero {
    pub value: Rational,
    pub exact: bool,
}

struct Jump {
    interval: (Rational, Rational), // x-interval isolating cos θ
    defining: Polynomial,           // squarefree polynomial vanishing there
    angle: Option<Rational>,        // θ/π when the root is cyclotomic
}

/// Locates all unit-root jump candidates of Δ, as disjoint x-intervals in
/// descending x order (ascending θ), tagged with exact angles where the root
/// is a root of unity.
fn unit_root_jumps(v: &SeifertMatrix) -> Vec<Jump> {
    let delta = alexander_polynomial(v);
    let (_, p) = delta.to_shifted_polynomial();
    let mut h = p.primitive_integer();
    let deg = match h.degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };

    let mut jumps: Vec<Jump> = Vec::new();
    for m in roots::cyclotomic_candidates(deg) {
        if m < 3 {
            // Φ₁, Φ₂ never divide: Δ(1) = 1 and Δ(-1) is odd.
            continue;
        }
        let phi = roots::cyclotomic(m);
        let mut divides = false;
        while let Some(q) = h.exact_div(&phi) {
            divides = true;
            h = q;
        }
        if !divides {
            continue;
        }
        let psi = roots::unit_root_cosine_polynomial(&phi);
        let intervals = roots::isolate_roots(&psi, &rat_int(-1), &rat_int(1));
        // Roots of ψ_m are cos(2πk/m) for k < m/2 coprime to m; descending x
        // matches ascending k.
        let ks: Vec<u64> = (1..m.div_ceil(2))
            .filter(|k| k.gcd(&m) == 1)
            .collect();
        debug_assert_eq!(ks.len(), intervals.len());
        for (k, interval) in ks.into_iter().zip(intervals) {
            jumps.push(Jump {
                interval,
                defining: psi.clone(),
                angle: Some(Rational::new(BigInt::from(2 * k), BigInt::from(m))),
            });
        }
    }
    if h.degree().map_or(false, |d| d > 0) {
        let q_rest = roots::unit_root_cosine_polynomial(&h);
        for interval in roots::isolate_roots(&q_rest, &rat_int(-1), &rat_int(1)) {
            jumps.push(Jump {
                interval,
                defining: q_rest.clone(),
                angle: None,
            });
        }
    }

    // Pull every interval strictly inside (-1, 1) so that plateau samples
    // never land on the circle points ω = ±1.
    for jump in &mut jumps {
        let mut width = Rational::new(BigInt::one(), BigInt::from(16));
        loop {
            jump.interval =
                roots::refine_interval(&jump.defining, jump.interval.clone(), &width);
            if jump.interval.0 > rat_int(-1) && jump.interval.1 < rat_int(1) {
                break;
            }
            width = width / rat_int(4);
        }
    }

    // Make the isolating intervals pairwise disjoint, then push every
    // non-cyclotomic interval down to width 2⁻⁶⁴ for angle recovery.
    loop {
        let mut overlap = None;
        'outer: for i in 0..jumps.len() {
            for j in i + 1..jumps.len() {
                let (a1, b1) = &jumps[i].interval;
                let (a2, b2) = &jumps[j].interval;
                if a1 <= b2 && a2 <= b1 {
                    overlap = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = overlap else { break };
        for idx in [i, j] {
            let width = {
                let (a, b) = &jumps[idx].interval;
                (b - a) / rat_int(4)
            };
            jumps[idx].interval = roots::refine_interval(
                &jumps[idx].defining,
                jumps[idx].interval.clone(),
                &width,
            );
        }
    }
    let fine = Rational::new(BigInt::one(), BigInt::one() << 64);
    for jump in &mut jumps {
        if jump.angle.is_none() {
            jump.interval =
                roots::refine_interval(&jump.defining, jump.interval.clone(), &fine);
        }
    }
    jumps.sort_by(|p1, p2| p2.interval.0.cmp(&p1.interval.0));
    jumps
}

/// Plateau values and jump angles over the half circle θ ∈ (0, π).
fn half_profile(v: &SeifertMatrix) -> (Vec<AngleOverPi>, Vec<i64>) {
    let jumps = unit_root_jumps(v);
    let r = jumps.len();
    let mut sigmas = Vec::with_capacity(r + 1);
    for j in 0..=r {
        let upper = if j == 0 {
            rat_int(1)
        } else {
            jumps[j - 1].interval.0.clone()
        };
        let lower = if j == r {
            rat_int(-1)
        } else {
            jumps[j].interval.1.clone()
        };
        let sample = (&upper + &lower) / rat_int(2);
        let sigma = signature_at_cos(v, &sample)
            .expect("gap midpoints avoid the unit roots of Δ");
        debug_assert!(sigma % 2 == 0, "Levine-Tristram signatures are even");
        sigmas.push(sigma);
    }
    let angles = jumps
        .iter()
        .map(|jump| match &jump.angle {
            Some(a) => AngleOverPi::Exact(a.clone()),
            None => {
                let mid = (&jump.interval.0 + &jump.interval.1) / rat_int(2);
                let x = mid.to_f64().unwrap_or(0.0);
                let theta_over_pi = libm::acos(x) / core::f64::consts::PI;
                AngleOverPi::Approx(
                    Rational::from_f64(theta_over_pi).unwrap_or_else(Rational::zero),
                )
            }
        })
        .collect();
    (angles, sigmas)
}

/// The exact average `ρ₀ = (1/2π)·∫ σ_ω dω` of the signature function.
///
/// `value` is exact when every jump angle is a rational multiple of π
/// (equivalently all unit roots of Δ are roots of unity); otherwise it uses
/// the isolated approximate angles and is flagged.
pub fn rho_zero(v: &SeifertMatrix) -> RhoZero {
    let (angles, sigmas) = half_profile(v);
    let exact = angles.iter().all(AngleOverPi::is_exact);
    let mut value = Rational::zero();
    for (j, sigma) in sigmas.iter().enumerate() {
        let start = if j == 0 {
            Rational::zero()
        } else {
            angles[j - 1].value().clone()
        };
        let end = if j == sigmas.len() - 1 {
            rat_int(1)
        } else {
            angles[j].value().clone()
        };
        value = &value + &(rat_int(*sigma) * (end - start));
    }
    RhoZero { value, exact }
}

/// The signature step function over the whole circle, plateaus in order of
/// increasing θ. Adjacent plateaus with equal value are merged, so every
/// listed boundary is an honest jump (or the symmetric image of one).
pub fn signature_profile(v: &SeifertMatrix) -> SignatureProfile {
    let (angles, sigmas) = half_profile(v);
    let r = angles.len();
    // Walk the full circle: angles a₁ < … < a_r < (2 - a_r) < … < (2 - a₁),
    // with plateau values mirrored around θ = π.
    let mut boundaries: Vec<AngleOverPi> = angles.clone();
    boundaries.extend(angles.iter().rev().map(AngleOverPi::mirrored));
    let mut values: Vec<i64> = sigmas.clone();
    values.extend(sigmas.iter().rev().skip(1));

    let mut plateaus: Vec<Plateau> = Vec::new();
    let mut start = AngleOverPi::Exact(Rational::zero());
    for (i, value) in values.iter().enumerate() {
        let end = if i == 2 * r {
            AngleOverPi::Exact(rat_int(2))
        } else {
            boundaries[i].clone()
        };
        match plateaus.last_mut() {
            Some(last) if last.sigma == *value => last.end = end.clone(),
            _ => plateaus.push(Plateau {
                start: start.clone(),
                end: end.clone(),
                sigma: *value,
            }),
        }
        start = end;
    }
    SignatureProfile { plateaus }
}
