//! Dense matrices over the crate's exact rings.
//!
//! One generic container serves ℚ, Λ, and ℚ(t); the entry ring is the type
//! parameter, so each matrix is homogeneous by construction. Determinants use
//! fraction-free Bareiss elimination (exact in any integral domain with the
//! divisions the algorithm performs), with cofactor expansion for dimension
//! ≤ 4; inverses use Gauss-Jordan elimination over a field.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::LaurentPolynomial;
use super::ratfunc::RationalFunction;
use super::rational::Rational;

/// Ring-element bound for matrix entries.
pub trait RingElem:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<T> RingElem for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Exact division, defined where the quotient exists in the ring.
pub trait ExactDiv: Sized {
    fn exact_div(&self, d: &Self) -> Option<Self>;
}

impl ExactDiv for Rational {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}

impl ExactDiv for LaurentPolynomial {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        LaurentPolynomial::exact_div(self, d)
    }
}

impl ExactDiv for RationalFunction {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        d.inv().map(|i| self * &i)
    }
}

/// Multiplicative inverse for field entries.
pub trait FieldInv: Sized {
    fn field_inv(&self) -> Option<Self>;
}

impl FieldInv for Rational {
    fn field_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational::one() / self)
    }
}

impl FieldInv for RationalFunction {
    fn field_inv(&self) -> Option<Self> {
        self.inv()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixError {
    NonSquare,
    SingularMatrix,
    ShapeMismatch,
    Ragged,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::NonSquare => write!(f, "matrix is not square"),
            MatrixError::SingularMatrix => write!(f, "matrix is singular"),
            MatrixError::ShapeMismatch => write!(f, "matrix shapes do not match"),
            MatrixError::Ragged => write!(f, "rows have unequal lengths"),
        }
    }
}

/// Dense rectangular matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type LaurentMatrix = Matrix<LaurentPolynomial>;
pub type RatFuncMatrix = Matrix<RationalFunction>;

impl<T: RingElem> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::Ragged);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: RingElem>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| f(e)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatrixError::ShapeMismatch);
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatrixError::ShapeMismatch);
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::ShapeMismatch);
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
            }
            acc
        }))
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, MatrixError> {
        if self.cols != v.len() {
            return Err(MatrixError::ShapeMismatch);
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.clone() * c.clone()).collect(),
        }
    }

    /// Block-diagonal sum `self ⊕ rhs`.
    pub fn block_diag(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out[(self.rows + i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    /// The `rows × cols` block with upper-left corner `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Cofactor-expansion determinant; exact in any commutative ring.
    fn det_cofactor(&self) -> T {
        let n = self.rows;
        match n {
            0 => T::one(),
            1 => self[(0, 0)].clone(),
            2 => {
                self[(0, 0)].clone() * self[(1, 1)].clone()
                    - self[(0, 1)].clone() * self[(1, 0)].clone()
            }
            _ => {
                let mut acc = T::zero();
                for j in 0..n {
                    if self[(0, j)].is_zero() {
                        continue;
                    }
                    let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
                        self[(r + 1, if c < j { c } else { c + 1 })].clone()
                    });
                    let term = self[(0, j)].clone() * minor.det_cofactor();
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }
}

impl<T: RingElem + ExactDiv> Matrix<T> {
    /// Exact determinant: cofactor expansion for dimension ≤ 4, fraction-free
    /// Bareiss elimination above that. The empty matrix has determinant 1.
    pub fn det(&self) -> Result<T, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare);
        }
        let n = self.rows;
        if n <= 4 {
            return Ok(self.det_cofactor());
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                    None => return Ok(T::zero()),
                    Some(r) => {
                        for j in 0..n {
                            let a = m[(k, j)].clone();
                            let b = m[(r, j)].clone();
                            m[(k, j)] = b;
                            m[(r, j)] = a;
                        }
                        negate = !negate;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact in an integral domain");
                }
                m[(i, k)] = T::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        Ok(if negate { -d } else { d })
    }
}

impl<T: RingElem + FieldInv> Matrix<T> {
    /// Exact inverse over a field via Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let pivot_row = (k..n)
                .find(|&r| !a[(r, k)].is_zero())
                .ok_or(MatrixError::SingularMatrix)?;
            if pivot_row != k {
                for j in 0..n {
                    let x = a[(k, j)].clone();
                    let y = a[(pivot_row, j)].clone();
                    a[(k, j)] = y;
                    a[(pivot_row, j)] = x;
                    let x = inv[(k, j)].clone();
                    let y = inv[(pivot_row, j)].clone();
                    inv[(k, j)] = y;
                    inv[(pivot_row, j)] = x;
                }
            }
            let p = a[(k, k)].field_inv().ok_or(MatrixError::SingularMatrix)?;
            for j in 0..n {
                a[(k, j)] = a[(k, j)].clone() * p.clone();
                inv[(k, j)] = inv[(k, j)].clone() * p.clone();
            }
            for i in 0..n {
                if i == k || a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone();
                for j in 0..n {
                    let v = a[(i, j)].clone() - f.clone() * a[(k, j)].clone();
                    a[(i, j)] = v;
                    let v = inv[(i, j)].clone() - f.clone() * inv[(k, j)].clone();
                    inv[(i, j)] = v;
                }
            }
        }
        Ok(inv)
    }
}

impl<T> core::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.cols + j]
    }
}

impl<T> core::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.entries[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().map(|&(k, c)| (k, rat_int(c))))
    }

    #[test]
    fn det_of_empty_matrix_is_one() {
        let m: LaurentMatrix = Matrix::zero(0, 0);
        assert_eq!(m.det().unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn det_diagonal_units() {
        // [[t, 0], [0, t⁻¹]] → 1
        let m = Matrix::from_rows(vec![
            vec![lp(&[(1, 1)]), LaurentPolynomial::zero()],
            vec![LaurentPolynomial::zero(), lp(&[(-1, 1)])],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn det_presentation_matrix_of_trefoil() {
        // tV - Vᵀ for V = [[-1, 1], [0, -1]] has determinant t² - t + 1.
        let t = LaurentPolynomial::t();
        let v = [[-1i64, 1], [0, -1]];
        let m = Matrix::from_fn(2, 2, |i, j| {
            let a = LaurentPolynomial::from_int(v[i][j]);
            let b = LaurentPolynomial::from_int(v[j][i]);
            &(&t * &a) - &b
        });
        assert_eq!(m.det().unwrap(), lp(&[(2, 1), (1, -1), (0, 1)]));
    }

    #[test]
    fn det_nonsquare_rejected() {
        let m: LaurentMatrix = Matrix::zero(2, 3);
        assert_eq!(m.det(), Err(MatrixError::NonSquare));
    }

    #[test]
    fn bareiss_matches_cofactor_on_5x5() {
        let m: Matrix<Rational> = Matrix::from_fn(5, 5, |i, j| {
            rat_int(((i * 7 + j * 3) % 5) as i64 - 2 + ((i == j) as i64) * 3)
        });
        let bareiss = m.det().unwrap();
        assert_eq!(bareiss, m.det_cofactor());
    }

    #[test]
    fn inverse_examples() {
        let id: RatFuncMatrix = Matrix::identity(3);
        assert_eq!(id.inverse().unwrap(), id);

        // [[t]]⁻¹ = [[t⁻¹]]
        let m = Matrix::from_rows(vec![vec![RationalFunction::t()]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(
            inv[(0, 0)].to_laurent().unwrap(),
            LaurentPolynomial::t().involute()
        );

        let sing = Matrix::from_rows(vec![
            vec![RationalFunction::one(), RationalFunction::one()],
            vec![RationalFunction::one(), RationalFunction::one()],
        ])
        .unwrap();
        assert_eq!(sing.inverse(), Err(MatrixError::SingularMatrix));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        // (V - tVᵀ) for the trefoil; check M·M⁻¹ = I exactly.
        let t = RationalFunction::t();
        let v = [[-1i64, 1], [0, -1]];
        let m = Matrix::from_fn(2, 2, |i, j| {
            let a = RationalFunction::from_rational(rat_int(v[i][j]));
            let b = RationalFunction::from_rational(rat_int(v[j][i]));
            &a - &(&t * &b)
        });
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(2));
    }
}
