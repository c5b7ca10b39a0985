//! Integer-lattice linear algebra: Smith normal form with transforms,
//! saturation of sublattices, and symplectic completion of Lagrangian bases.
//!
//! Everything runs over `BigInt`. The payoff is in the metabolizer machinery:
//! a half-rank sublattice on which a Seifert form vanishes extends to a
//! unimodular symplectic basis exactly when its saturation does, and the
//! completion here produces the witness matrix for that extension.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::{ExactDiv, Matrix};

impl ExactDiv for BigInt {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, d);
        r.is_zero().then_some(q)
    }
}

pub type IntMatrix = Matrix<BigInt>;

pub fn int_matrix_from_rows(rows: &[Vec<i64>]) -> IntMatrix {
    Matrix::from_fn(rows.len(), rows.first().map_or(0, Vec::len), |i, j| {
        BigInt::from(rows[i][j])
    })
}

/// The standard symplectic form `[[0, I], [-I, 0]]` of size `2g`.
pub fn standard_symplectic(g: usize) -> IntMatrix {
    let mut j = Matrix::zero(2 * g, 2 * g);
    for i in 0..g {
        j[(i, g + i)] = BigInt::one();
        j[(g + i, i)] = -BigInt::one();
    }
    j
}

/// Smith normal form `A = P·M·Q` together with the inverse transforms, so
/// that `M = Pinv·A·Qinv`. `P`, `Q`, `Pinv`, `Qinv` are unimodular and `A`
/// is diagonal with the divisibility chain `d₁ | d₂ | …`.
pub struct Smith {
    pub a: IntMatrix,
    pub p: IntMatrix,
    pub pinv: IntMatrix,
    pub q: IntMatrix,
    pub qinv: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut p = IntMatrix::identity(rows);
    let mut pinv = IntMatrix::identity(rows);
    let mut q = IntMatrix::identity(cols);
    let mut qinv = IntMatrix::identity(cols);

    fn swap_rows(a: &mut IntMatrix, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..a.cols() {
            let x = a[(i, c)].clone();
            let y = a[(j, c)].clone();
            a[(i, c)] = y;
            a[(j, c)] = x;
        }
    }
    fn swap_cols(a: &mut IntMatrix, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..a.rows() {
            let x = a[(r, i)].clone();
            let y = a[(r, j)].clone();
            a[(r, i)] = y;
            a[(r, j)] = x;
        }
    }
    // row_i += λ·row_j
    fn add_row(a: &mut IntMatrix, i: usize, j: usize, lam: &BigInt) {
        for c in 0..a.cols() {
            let v = &a[(i, c)] + lam * &a[(j, c)];
            a[(i, c)] = v;
        }
    }
    fn add_col(a: &mut IntMatrix, i: usize, j: usize, lam: &BigInt) {
        for r in 0..a.rows() {
            let v = &a[(r, i)] + lam * &a[(r, j)];
            a[(r, i)] = v;
        }
    }
    fn negate_row(a: &mut IntMatrix, i: usize) {
        for c in 0..a.cols() {
            let v = -a[(i, c)].clone();
            a[(i, c)] = v;
        }
    }

    let n = rows.min(cols);
    let mut k = 0;
    while k < n {
        // Pivot: entry of least nonzero magnitude in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if a[(i, j)].abs() < a[(pi, pj)].abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut a, k, pi);
        swap_rows(&mut p, k, pi);
        swap_cols(&mut pinv, k, pi);
        swap_cols(&mut a, k, pj);
        swap_cols(&mut q, k, pj);
        swap_rows(&mut qinv, k, pj);

        let mut clean = true;
        for i in k + 1..rows {
            if a[(i, k)].is_zero() {
                continue;
            }
            let lam = -(&a[(i, k)] / &a[(k, k)]);
            add_row(&mut a, i, k, &lam);
            add_row(&mut p, i, k, &lam);
            add_col(&mut pinv, k, i, &(-&lam));
            if !a[(i, k)].is_zero() {
                clean = false;
            }
        }
        for j in k + 1..cols {
            if a[(k, j)].is_zero() {
                continue;
            }
            let lam = -(&a[(k, j)] / &a[(k, k)]);
            add_col(&mut a, j, k, &lam);
            add_col(&mut q, j, k, &lam);
            add_row(&mut qinv, k, j, &(-&lam));
            if !a[(k, j)].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue; // smaller remainders appeared; re-pivot this corner
        }
        // Enforce the divisibility chain: if some entry below-right is not
        // divisible by the pivot, mix its row in and redo the corner.
        let mut retry = false;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(&a[(i, j)] % &a[(k, k)]).is_zero() {
                    let one = BigInt::one();
                    add_row(&mut a, k, i, &one);
                    add_row(&mut p, k, i, &one);
                    add_col(&mut pinv, i, k, &(-&one));
                    retry = true;
                    break 'scan;
                }
            }
        }
        if retry {
            continue;
        }
        if a[(k, k)].is_negative() {
            negate_row(&mut a, k);
            negate_row(&mut p, k);
            for r in 0..rows {
                let v = -pinv[(r, k)].clone();
                pinv[(r, k)] = v;
            }
        }
        k += 1;
    }
    Smith {
        a,
        p,
        pinv,
        q,
        qinv,
    }
}

/// Rank of the integer matrix (over ℚ).
pub fn rank(m: &IntMatrix) -> usize {
    let s = smith_normal_form(m);
    let n = m.rows().min(m.cols());
    (0..n).filter(|&i| !s.a[(i, i)].is_zero()).count()
}

/// Basis of the saturation of the row span: the smallest primitive sublattice
/// containing the rows. Returns `rank` rows forming a primitive basis.
pub fn saturate_rows(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let r = {
        let n = m.rows().min(m.cols());
        (0..n).filter(|&i| !s.a[(i, i)].is_zero()).count()
    };
    s.qinv.block(0, 0, r, m.cols())
}

/// Solves `B·Y = I` for an integer right inverse `Y`, when one exists.
/// `B` must be `g × c` with `g ≤ c` and Smith invariants all 1.
pub fn right_inverse(b: &IntMatrix) -> Option<IntMatrix> {
    let g = b.rows();
    let c = b.cols();
    if g > c {
        return None;
    }
    let s = smith_normal_form(b);
    for i in 0..g {
        if !s.a[(i, i)].abs().is_one() {
            return None;
        }
    }
    // B·Y = I  ⇔  D·(Qinv·Y) = P; take Z with rows Z[i] = P[i]/d_i, rest 0.
    let mut z = IntMatrix::zero(c, g);
    for i in 0..g {
        for j in 0..g {
            z[(i, j)] = &s.p[(i, j)] / &s.a[(i, i)];
        }
    }
    Some(s.q.mul(&z).expect("shapes agree"))
}

/// Completes a primitive Lagrangian basis to a symplectic basis.
///
/// `lagrangian` holds `g` rows, a primitive basis of a rank-`g` sublattice of
/// `ℤ^{2g}` that is isotropic for the standard symplectic form. The result is
/// a `2g × 2g` unimodular matrix whose first `g` columns are the given rows
/// (as columns) and which pulls the standard form back to itself.
pub fn symplectic_completion(lagrangian: &IntMatrix) -> Option<IntMatrix> {
    let g = lagrangian.rows();
    if lagrangian.cols() != 2 * g {
        return None;
    }
    if g == 0 {
        return Some(IntMatrix::identity(0));
    }
    let j = standard_symplectic(g);
    // Pairings J(a_i, ·) as rows; a right inverse gives duals y_k with
    // J(a_i, y_k) = δ_ik.
    let b = lagrangian.mul(&j).expect("shapes agree");
    let y = right_inverse(&b)?;
    // Correct the duals to be mutually isotropic: b_k = y_k + Σ λ_{ki} a_i
    // with λ_{ki} = -J(y_k, y_i) for k < i.
    let pair = |u: &[BigInt], v: &[BigInt]| -> BigInt {
        let jv = j.mul_vec(v).expect("len");
        u.iter().zip(jv).map(|(a, b)| a * b).sum()
    };
    let a_rows: Vec<Vec<BigInt>> = (0..g)
        .map(|i| (0..2 * g).map(|c| lagrangian[(i, c)].clone()).collect())
        .collect();
    let y_cols: Vec<Vec<BigInt>> = (0..g)
        .map(|k| (0..2 * g).map(|r| y[(r, k)].clone()).collect())
        .collect();
    let mut b_cols = y_cols.clone();
    for k in 0..g {
        for i in k + 1..g {
            let lam = -pair(&y_cols[k], &y_cols[i]);
            for c in 0..2 * g {
                let v = &b_cols[k][c] + &lam * &a_rows[i][c];
                b_cols[k][c] = v;
            }
        }
    }
    let p = Matrix::from_fn(2 * g, 2 * g, |r, c| {
        if c < g {
            lagrangian[(c, r)].clone()
        } else {
            b_cols[c - g][r].clone()
        }
    });
    // The construction guarantees Pᵀ·J·P = J; verify anyway.
    let check = p.transpose().mul(&j).expect("sq").mul(&p).expect("sq");
    (check == j).then_some(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        int_matrix_from_rows(&rows)
    }

    fn is_unimodular(u: &IntMatrix) -> bool {
        u.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }

    #[test]
    fn smith_reconstructs_input() {
        let cases = [
            m(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]),
            m(&[&[0, 0], &[0, 0]]),
            m(&[&[1, 2, 3], &[4, 5, 6]]),
            m(&[&[3]]),
        ];
        for c in cases {
            let s = smith_normal_form(&c);
            assert!(is_unimodular(&s.p) && is_unimodular(&s.q));
            assert_eq!(s.p.mul(&s.pinv).unwrap(), IntMatrix::identity(c.rows()));
            assert_eq!(s.q.mul(&s.qinv).unwrap(), IntMatrix::identity(c.cols()));
            assert_eq!(s.p.mul(&c).unwrap().mul(&s.q).unwrap(), s.a);
            // divisibility chain
            let n = c.rows().min(c.cols());
            for i in 1..n {
                if !s.a[(i, i)].is_zero() {
                    assert!((&s.a[(i, i)] % &s.a[(i - 1, i - 1)]).is_zero());
                }
            }
        }
    }

    #[test]
    fn saturation_of_scaled_row() {
        let sat = saturate_rows(&m(&[&[2, 4]]));
        assert_eq!(sat.rows(), 1);
        // (1, 2) up to sign
        let a = sat[(0, 0)].clone();
        let b = sat[(0, 1)].clone();
        assert!(a.abs().is_one() && b.abs() == BigInt::from(2));
    }

    #[test]
    fn right_inverse_solves() {
        let b = m(&[&[1, 0, 2], &[0, 1, -3]]);
        let y = right_inverse(&b).unwrap();
        assert_eq!(b.mul(&y).unwrap(), IntMatrix::identity(2));
        assert!(right_inverse(&m(&[&[2, 0], &[0, 2]])).is_none());
    }

    #[test]
    fn symplectic_completion_of_coordinate_lagrangian() {
        // Rows e₁, e₂ in ℤ⁴ form a Lagrangian for [[0, I], [-I, 0]].
        let l = m(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let p = symplectic_completion(&l).unwrap();
        assert!(is_unimodular(&p));
        let j = standard_symplectic(2);
        assert_eq!(p.transpose().mul(&j).unwrap().mul(&p).unwrap(), j);
    }

    #[test]
    fn symplectic_completion_of_skew_lagrangian() {
        // Rows (1, 1, 0, 0) and (0, 0, ...)-free pattern: a-part mixing s, t.
        let l = m(&[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
        let j = standard_symplectic(2);
        let self_pair = l.mul(&j).unwrap().mul(&l.transpose()).unwrap();
        assert!(self_pair[(0, 1)].is_zero() && self_pair[(1, 0)].is_zero());
        let p = symplectic_completion(&l).unwrap();
        assert!(is_unimodular(&p));
        assert_eq!(p.transpose().mul(&j).unwrap().mul(&p).unwrap(), j);
        for i in 0..2 {
            for r in 0..4 {
                assert_eq!(p[(r, i)], l[(i, r)]);
            }
        }
    }
}
