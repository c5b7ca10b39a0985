//! Milnor invariants of pure-braid closures.
//!
//! The pipeline: a pure braid acts on the free group through the Artin
//! representation; each strand's image is a conjugate `w·xⱼ·w⁻¹`, from which
//! the 0-framed longitude `λⱼ = xⱼ^{-eⱼ}·wⱼ` is read off (`eⱼ` the
//! `xⱼ`-exponent sum of `wⱼ`, so that self-linking is framed to zero); the
//! Magnus expansion `xᵢ ↦ 1 + Xᵢ` sends longitudes into the truncated tensor
//! algebra, and `μ(i₁…i_{k-1}; i_k)` is the coefficient of `X_{i₁}⋯X_{i_{k-1}}`
//! in the expansion of `λ_{i_k}`.
//!
//! Composition convention: braid letters compose as functions, so
//! `artin_act(a·b, w) = artin_act(a, artin_act(b, w))` — the *last* letter of
//! a word is applied to `w` first. For pure braids (string links) the μ are
//! well defined at every length and integer-valued; no gcd indeterminacy is
//! reported. Multi-index convention: the last index names the longitude
//! strand, so `μ_{ij} = lk(Lᵢ, Lⱼ)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exact::rational::{rat_int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MilnorError {
    /// A generator or braid letter index is out of range.
    IndexOutOfRange { index: usize, strands: usize },
    /// The braid's underlying permutation is not the identity.
    NotPure,
    /// Concatenation of braids on different strand counts.
    StrandMismatch { left: usize, right: usize },
    /// The truncated series would exceed the configured term budget.
    SeriesTooLarge { estimated_terms: u64 },
    /// A multi-index violates its constraints.
    InvalidMultiIndex(String),
}

impl fmt::Display for MilnorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MilnorError::IndexOutOfRange { index, strands } => {
                write!(f, "index {index} out of range for {strands} strands")
            }
            MilnorError::NotPure => write!(f, "braid is not pure"),
            MilnorError::StrandMismatch { left, right } => {
                write!(f, "strand counts differ: {left} vs {right}")
            }
            MilnorError::SeriesTooLarge { estimated_terms } => {
                write!(f, "series would need about {estimated_terms} terms")
            }
            MilnorError::InvalidMultiIndex(msg) => write!(f, "invalid multi-index: {msg}"),
        }
    }
}

/// Budget for truncated-series term counts; the noncommutative algebra on
/// `n` symbols truncated at degree `d` has `Σ_{j≤d} n^j` monomials.
pub const SERIES_TERM_BUDGET: u64 = 2_000_000;

/// Freely reduced word in the free group on `x₁, x₂, …`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(index: usize) -> Self {
        assert!(index >= 1);
        FreeWord {
            letters: alloc::vec![(index, 1)],
        }
    }

    /// Builds from letters `(generator ≥ 1, ±1)`, reducing adjacent inverses.
    pub fn from_letters<I: IntoIterator<Item = (usize, i8)>>(letters: I) -> Self {
        let mut out: Vec<(usize, i8)> = Vec::new();
        for (g, e) in letters {
            assert!(g >= 1 && (e == 1 || e == -1));
            if let Some(&(lg, le)) = out.last() {
                if lg == g && le == -e {
                    out.pop();
                    continue;
                }
            }
            out.push((g, e));
        }
        FreeWord { letters: out }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> Self {
        Self::from_letters(
            self.letters
                .iter()
                .chain(other.letters.iter())
                .copied(),
        )
    }

    /// Total exponent of the given generator.
    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.letters
            .iter()
            .filter(|&&(g, _)| g == generator)
            .map(|&(_, e)| e as i64)
            .sum()
    }

    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    /// Applies the homomorphism sending `xᵢ` to `images[i-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut letters = Vec::new();
        for &(g, e) in &self.letters {
            let img = &images[g - 1];
            if e == 1 {
                letters.extend(img.letters.iter().copied());
            } else {
                letters.extend(img.letters.iter().rev().map(|&(h, f)| (h, -f)));
            }
        }
        Self::from_letters(letters)
    }

    /// Renders like `x1 x2^-1`.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.letters.is_empty() {
            return String::from("1");
        }
        let mut out = String::new();
        for (i, &(g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "x{g}");
            if e == -1 {
                out.push_str("^-1");
            }
        }
        out
    }
}

/// A braid word on `strands` strands: letters `±i` stand for `σᵢ^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, MilnorError> {
        if strands == 0 {
            return Err(MilnorError::IndexOutOfRange { index: 0, strands });
        }
        for &letter in &word {
            let idx = letter.unsigned_abs() as usize;
            if letter == 0 || idx >= strands {
                return Err(MilnorError::IndexOutOfRange {
                    index: idx,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn trivial(strands: usize) -> Self {
        BraidWord {
            strands,
            word: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// The underlying permutation, as images `perm[i] = π(i)` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &letter in &self.word {
            let i = letter.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Word concatenation `self · other`.
    pub fn concatenate(&self, other: &BraidWord) -> Result<BraidWord, MilnorError> {
        if self.strands != other.strands {
            return Err(MilnorError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut word = self.word.clone();
        word.extend(&other.word);
        Ok(BraidWord {
            strands: self.strands,
            word,
        })
    }

    /// The inverse braid: reversed word with flipped signs.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            word: self.word.iter().rev().map(|&l| -l).collect(),
        }
    }
}

/// Images of the free generators under the braid's Artin automorphism.
///
/// `σᵢ` sends `xᵢ ↦ xᵢx_{i+1}xᵢ⁻¹`, `x_{i+1} ↦ xᵢ`; the word composes as
/// functions (last letter innermost).
pub fn artin_images(b: &BraidWord) -> Vec<FreeWord> {
    let n = b.strands;
    let mut images: Vec<FreeWord> = (1..=n).map(FreeWord::generator).collect();
    // Processing letters left to right with T ← T ∘ φ_g yields
    // φ_{g₁} ∘ φ_{g₂} ∘ … ∘ φ_{g_k}.
    for &letter in &b.word {
        let i = letter.unsigned_abs() as usize - 1;
        let (xi, xi1) = (images[i].clone(), images[i + 1].clone());
        if letter > 0 {
            images[i] = xi.concat(&xi1).concat(&xi.inverse());
            images[i + 1] = xi;
        } else {
            images[i] = xi1.clone();
            images[i + 1] = xi1.inverse().concat(&xi).concat(&xi1);
        }
    }
    images
}

/// Applies the braid's automorphism to a word.
pub fn artin_act(b: &BraidWord, w: &FreeWord) -> Result<FreeWord, MilnorError> {
    if w.max_generator() > b.strands {
        return Err(MilnorError::IndexOutOfRange {
            index: w.max_generator(),
            strands: b.strands,
        });
    }
    Ok(w.substitute(&artin_images(b)))
}

/// 0-framed longitudes of a pure braid's closure: for each strand `j`, the
/// Artin image of `xⱼ` is `wⱼxⱼwⱼ⁻¹` and `λⱼ = xⱼ^{-eⱼ}·wⱼ` with `eⱼ` the
/// `xⱼ`-exponent sum of `wⱼ`.
pub fn longitudes(b: &BraidWord) -> Result<Vec<FreeWord>, MilnorError> {
    if !b.is_pure() {
        return Err(MilnorError::NotPure);
    }
    let images = artin_images(b);
    let mut out = Vec::with_capacity(b.strands);
    for (j, image) in images.iter().enumerate() {
        let gen = j + 1;
        let conjugator = extract_conjugator(image, gen).ok_or(MilnorError::NotPure)?;
        let e = conjugator.exponent_sum(gen);
        let mut lead = Vec::new();
        for _ in 0..e.unsigned_abs() {
            lead.push((gen, if e > 0 { -1 } else { 1 }));
        }
        let framing = FreeWord::from_letters(lead);
        out.push(framing.concat(&conjugator));
    }
    Ok(out)
}

/// Writes a reduced conjugate of `x_gen` as `w·x_gen·w⁻¹` and returns `w`.
fn extract_conjugator(image: &FreeWord, gen: usize) -> Option<FreeWord> {
    let len = image.len();
    if len % 2 == 0 {
        return None;
    }
    let mid = len / 2;
    if image.letters()[mid] != (gen, 1) {
        return None;
    }
    let w = FreeWord::from_letters(image.letters()[..mid].iter().copied());
    let candidate = w
        .concat(&FreeWord::generator(gen))
        .concat(&w.inverse());
    (&candidate == image).then_some(w)
}

/// Truncated Magnus series: noncommutative polynomial in `X₁…Xₙ` of degree
/// at most `cap`, monomials mapped to rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    cap: usize,
    coeffs: BTreeMap<Vec<u16>, Rational>,
}

impl TruncatedSeries {
    pub fn one(cap: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Vec::new(), Rational::one());
        TruncatedSeries { cap, coeffs }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coefficient(&self, monomial: &[u16]) -> Rational {
        self.coeffs
            .get(monomial)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&[])
    }

    /// Terms in deterministic (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rational)> {
        self.coeffs.iter().map(|(m, c)| (m.as_slice(), c))
    }

    fn insert(&mut self, monomial: Vec<u16>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&monomial) {
            None => {
                self.coeffs.insert(monomial, c);
            }
            Some(prev) => {
                let sum = prev + c;
                if !sum.is_zero() {
                    self.coeffs.insert(monomial, sum);
                }
            }
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        debug_assert_eq!(self.cap, other.cap);
        let mut out = TruncatedSeries {
            cap: self.cap,
            coeffs: BTreeMap::new(),
        };
        for (m1, c1) in &self.coeffs {
            for (m2, c2) in &other.coeffs {
                if m1.len() + m2.len() > self.cap {
                    continue;
                }
                let mut m = m1.clone();
                m.extend(m2);
                out.insert(m, c1 * c2);
            }
        }
        out
    }
}

fn series_budget_check(generators: usize, cap: usize) -> Result<(), MilnorError> {
    let mut estimate: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..=cap {
        estimate = estimate.saturating_add(power);
        power = power.saturating_mul(generators.max(1) as u64);
    }
    if estimate > SERIES_TERM_BUDGET {
        return Err(MilnorError::SeriesTooLarge {
            estimated_terms: estimate,
        });
    }
    Ok(())
}

/// Magnus expansion of a free word: `xᵢ ↦ 1 + Xᵢ`,
/// `xᵢ⁻¹ ↦ 1 - Xᵢ + Xᵢ² - …`, truncated at degree `cap`.
pub fn magnus_expand(w: &FreeWord, cap: usize) -> Result<TruncatedSeries, MilnorError> {
    series_budget_check(w.max_generator(), cap)?;
    let mut acc = TruncatedSeries::one(cap);
    for &(g, e) in w.letters() {
        let mut factor = TruncatedSeries::one(cap);
        if e == 1 {
            factor.insert(alloc::vec![g as u16], Rational::one());
        } else {
            let mut monomial = Vec::new();
            for d in 1..=cap {
                monomial.push(g as u16);
                let sign = if d % 2 == 1 {
                    -Rational::one()
                } else {
                    Rational::one()
                };
                factor.insert(monomial.clone(), sign);
            }
        }
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// A Milnor multi-index `(i₁, …, i_k)`: component indices with `k ≥ 2`; the
/// last entry is the longitude strand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(indices: Vec<usize>, strands: usize) -> Result<Self, MilnorError> {
        if indices.len() < 2 {
            return Err(MilnorError::InvalidMultiIndex(String::from(
                "need at least two indices",
            )));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i < 1 || i > strands) {
            return Err(MilnorError::InvalidMultiIndex(alloc::format!(
                "index {bad} out of range 1..={strands}"
            )));
        }
        Ok(MultiIndex(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `μ_I` of the braid closure: integer-valued for pure braids, returned as a
/// rational for interface uniformity.
pub fn milnor_invariant(b: &BraidWord, index: &MultiIndex) -> Result<Rational, MilnorError> {
    let lambdas = longitudes(b)?;
    let k = index.len();
    let strand = index.indices()[k - 1];
    let series = magnus_expand(&lambdas[strand - 1], k - 1)?;
    let monomial: Vec<u16> = index.indices()[..k - 1].iter().map(|&i| i as u16).collect();
    let value = series.coefficient(&monomial);
    debug_assert!(
        crate::exact::rational::is_integer(&value),
        "Magnus coefficients of group elements are integers"
    );
    Ok(value)
}

/// Result of scanning lengths `2..=cap` for a nonzero invariant.
#[derive(Clone, Debug, PartialEq)]
pub enum FirstNonvanishing {
    Found {
        length: usize,
        /// All `μ_I` with `|I| = length`, keyed by the index sequence.
        table: BTreeMap<Vec<usize>, Rational>,
    },
    AllVanishUpTo {
        cap: usize,
    },
}

/// Finds the smallest `k ≤ cap` with some `μ_I ≠ 0`, `|I| = k`, together
/// with the full table at that length.
pub fn first_nonvanishing(b: &BraidWord, cap: usize) -> Result<FirstNonvanishing, MilnorError> {
    let n = b.strands;
    if cap < 2 {
        return Ok(FirstNonvanishing::AllVanishUpTo { cap });
    }
    series_budget_check(n, cap - 1)?;
    // In tabulation the budget must also cover n^k index tuples.
    let table_estimate = (n as u64).saturating_pow(cap as u32);
    if table_estimate > SERIES_TERM_BUDGET {
        return Err(MilnorError::SeriesTooLarge {
            estimated_terms: table_estimate,
        });
    }
    let lambdas = longitudes(b)?;
    let series: Vec<TruncatedSeries> = lambdas
        .iter()
        .map(|l| magnus_expand(l, cap - 1))
        .collect::<Result<_, _>>()?;
    for k in 2..=cap {
        let mut table: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        let mut any_nonzero = false;
        let mut index = alloc::vec![1usize; k];
        loop {
            let strand = index[k - 1];
            let monomial: Vec<u16> = index[..k - 1].iter().map(|&i| i as u16).collect();
            let value = series[strand - 1].coefficient(&monomial);
            if !value.is_zero() {
                any_nonzero = true;
            }
            table.insert(index.clone(), value);
            // Advance the odometer over {1..n}^k.
            let mut pos = k;
            let mut wrapped = true;
            while pos > 0 {
                pos -= 1;
                if index[pos] < n {
                    index[pos] += 1;
                    for e in index.iter_mut().skip(pos + 1) {
                        *e = 1;
                    }
                    wrapped = false;
                    break;
                }
                index[pos] = 1;
            }
            if wrapped {
                break;
            }
        }
        if any_nonzero {
            return Ok(FirstNonvanishing::Found { length: k, table });
        }
    }
    Ok(FirstNonvanishing::AllVanishUpTo { cap })
}
