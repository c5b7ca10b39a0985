//! The Blanchfield self-pairing obstruction for 2-component links.
//!
//! For a link `L = L₁ ∪ L₂` with `lk(L₁, L₂) = 0`, the second component
//! lifts to the infinite cyclic cover of the exterior of the first, and its
//! rational homology class pairs with itself under the Blanchfield form of
//! `L₁`. A nonzero value certifies that `L` is not 0.5-solve-equivalent to
//! any sublink of a homology boundary link; reports carry the tag
//! `Prop-3.1` naming the statement that gives the verdict its meaning.
//!
//! Inputs are a Seifert matrix for a surface of `L₁` disjoint from `L₂`
//! together with the coordinates of `[L₂]` in the dual basis; producing
//! those from a diagram is the caller's business. Reversing a dual basis
//! vector negates one coordinate, which never changes the vanishing verdict.

use alloc::vec::Vec;

use crate::exact::torsion::TorsionValue;
use crate::seifert::{blanchfield_int, SeifertError, SeifertMatrix};

/// Result tag naming the statement that backs the obstruction.
pub const OBSTRUCTION_TAG: &str = "Prop-3.1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionError {
    /// The lift of the second component requires linking number zero.
    NonzeroLinkingNumber(i64),
    Seifert(SeifertError),
}

impl core::fmt::Display for ObstructionError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ObstructionError::NonzeroLinkingNumber(lk) => {
                write!(f, "linking number must be 0, got {lk}")
            }
            ObstructionError::Seifert(e) => write!(f, "{e}"),
        }
    }
}

impl From<SeifertError> for ObstructionError {
    fn from(e: SeifertError) -> Self {
        ObstructionError::Seifert(e)
    }
}

/// A 2-component input: Seifert matrix of a surface for the first component
/// disjoint from the second, the class of the second component in the dual
/// basis, and the (necessarily zero) linking number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoComponentInput {
    v: SeifertMatrix,
    class_vector: Vec<i64>,
    linking_number: i64,
}

impl TwoComponentInput {
    pub fn new(
        v: SeifertMatrix,
        class_vector: Vec<i64>,
        linking_number: i64,
    ) -> Result<Self, ObstructionError> {
        if linking_number != 0 {
            return Err(ObstructionError::NonzeroLinkingNumber(linking_number));
        }
        if class_vector.len() != v.size() {
            return Err(ObstructionError::Seifert(SeifertError::VectorLength {
                expected: v.size(),
                got: class_vector.len(),
            }));
        }
        Ok(TwoComponentInput {
            v,
            class_vector,
            linking_number,
        })
    }

    pub fn seifert(&self) -> &SeifertMatrix {
        &self.v
    }

    pub fn class_vector(&self) -> &[i64] {
        &self.class_vector
    }
}

/// Outcome of the self-pairing test.
#[derive(Clone, Debug, PartialEq)]
pub struct ObstructionReport {
    /// `Bl([L₂], [L₂])` in canonical form.
    pub value: TorsionValue,
    /// True exactly when the value is nonzero; then the link is not
    /// 0.5-solve-equivalent to a sublink of a homology boundary link.
    pub obstructed: bool,
    /// Machine-readable tag of the statement backing the interpretation.
    pub basis: &'static str,
}

/// Computes `Bl(v, v)` for the lifted second component and interprets it.
pub fn hbl_obstruction(input: &TwoComponentInput) -> Result<ObstructionReport, ObstructionError> {
    let value = blanchfield_int(&input.v, &input.class_vector, &input.class_vector)?;
    let obstructed = !value.is_zero();
    Ok(ObstructionReport {
        value,
        obstructed,
        basis: OBSTRUCTION_TAG,
    })
}

/// Models an exterior band sum with a split summand: the Seifert surface
/// gains a block `connect` that the class vector does not touch. The
/// Blanchfield self-pairing of the output equals that of the input.
pub fn band_sum_invariance(
    input: &TwoComponentInput,
    connect: &SeifertMatrix,
) -> TwoComponentInput {
    let v = input.v.block_sum(connect);
    let mut class_vector = input.class_vector.clone();
    class_vector.resize(v.size(), 0);
    TwoComponentInput {
        v,
        class_vector,
        linking_number: input.linking_number,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::intmat::int_matrix_from_rows;
    use crate::exact::laurent::LaurentPolynomial;
    use crate::exact::poly::Polynomial;
    use crate::exact::ratfunc::RationalFunction;
    use crate::seifert::{blanchfield, metabolizer_block_check, BlockCheckOutcome};

    use alloc::vec;
    use alloc::vec::Vec;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    #[test]
    fn zero_class_is_unobstructed() {
        let input = TwoComponentInput::new(trefoil(), vec![0, 0], 0).unwrap();
        let report = hbl_obstruction(&input).unwrap();
        assert!(report.value.is_zero());
        assert!(!report.obstructed);
    }

    #[test]
    fn nonzero_linking_number_rejected() {
        assert!(matches!(
            TwoComponentInput::new(trefoil(), vec![0, 0], 1),
            Err(ObstructionError::NonzeroLinkingNumber(1))
        ));
    }

    #[test]
    fn trefoil_generator_is_obstructed() {
        let input = TwoComponentInput::new(trefoil(), vec![1, 0], 0).unwrap();
        let report = hbl_obstruction(&input).unwrap();
        assert!(report.obstructed);
        assert_eq!(report.basis, "Prop-3.1");
        let expected = TorsionValue::reduce(&RationalFunction::new(
            1,
            Polynomial::from_ints(&[1]),
            Polynomial::from_ints(&[1, -1, 1]),
        ));
        assert_eq!(report.value, expected);
    }

    #[test]
    fn class_in_certified_dual_span_is_unobstructed() {
        // For an accepted metabolizer witness, any class in the b′-span
        // pairs to zero with itself.
        let v = SeifertMatrix::new(vec![vec![0, 1], vec![0, 0]]).unwrap();
        let p = int_matrix_from_rows(&[vec![1, 0], vec![0, 1]]);
        assert!(matches!(
            metabolizer_block_check(&v, &p).unwrap(),
            BlockCheckOutcome::Accepted(_)
        ));
        // The b′-span here is spanned by e₂.
        let input = TwoComponentInput::new(v, vec![0, 3], 0).unwrap();
        let report = hbl_obstruction(&input).unwrap();
        assert!(!report.obstructed);
    }

    #[test]
    fn class_invariant_under_relation_vectors() {
        // [L₂] is a class in the Alexander module: shifting the coordinate
        // vector by (V - tVᵀ)·u leaves the self-pairing unchanged.
        let v = trefoil();
        let class = [LaurentPolynomial::one(), LaurentPolynomial::zero()];
        let u = [RationalFunction::t(), RationalFunction::one()];
        let rel = v.pairing_matrix().mul_vec(&u).unwrap();
        let shifted: Vec<LaurentPolynomial> = class
            .iter()
            .zip(&rel)
            .map(|(c, r)| c + &r.to_laurent().unwrap())
            .collect();
        assert_eq!(
            blanchfield(&v, &shifted, &shifted).unwrap(),
            blanchfield(&v, &class, &class).unwrap()
        );
    }

    #[test]
    fn band_sum_preserves_the_value() {
        let input = TwoComponentInput::new(trefoil(), vec![1, 0], 0).unwrap();
        let base = hbl_obstruction(&input).unwrap();

        // Empty connect: identity.
        let same = band_sum_invariance(&input, &SeifertMatrix::empty());
        assert_eq!(same, input);

        // Trefoil connect: same value, still obstructed.
        let summed = band_sum_invariance(&input, &trefoil());
        let report = hbl_obstruction(&summed).unwrap();
        assert_eq!(report.value, base.value);
        assert!(report.obstructed);
    }

    #[test]
    fn obstructed_flag_stable_under_random_band_sums() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..50 {
            let genus = rng.gen_range(0..=1);
            let v = crate::seifert::tests::random_seifert(&mut rng, 1, 2);
            let connect = crate::seifert::tests::random_seifert(&mut rng, genus, 2);
            let class: Vec<i64> = (0..v.size()).map(|_| rng.gen_range(-2..=2)).collect();
            let input = TwoComponentInput::new(v, class, 0).unwrap();
            let before = hbl_obstruction(&input).unwrap();
            let after = hbl_obstruction(&band_sum_invariance(&input, &connect)).unwrap();
            assert_eq!(before.value, after.value);
            assert_eq!(before.obstructed, after.obstructed);
        }
    }
}
