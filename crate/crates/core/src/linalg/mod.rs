//! Exact integer linear algebra: dense matrices, Smith normal form and
//! rank computations.
//!
//! Everything is generic over [`Scalar`], implemented for overflow-checked `i64`
//! and for `BigInt`. Callers that only need ranks and elementary divisors go
//! through [`elementary_divisors`], which runs on `i64` and restarts on `BigInt`
//! when an intermediate value overflows.

mod snf;
mod span;

pub use snf::{elementary_divisors, smith_normal_form, snf_generic, Overflow, SnfResult};
pub use span::{rational_rank, RationalSpan};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer arithmetic needed by the elimination routines. Fallible operations
/// return `None` on overflow.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn abs_cmp(&self, other: &Self) -> std::cmp::Ordering;
    fn checked_neg(&self) -> Option<Self>;
    /// `self - q * b`
    fn checked_mul_sub(&self, q: &Self, b: &Self) -> Option<Self>;
    /// `self + b`
    fn checked_add(&self, b: &Self) -> Option<Self>;
    fn checked_mul(&self, b: &Self) -> Option<Self>;
    /// Truncated quotient.
    fn quotient(&self, d: &Self) -> Option<Self>;
    fn divides(&self, other: &Self) -> bool;
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn abs_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn checked_neg(&self) -> Option<Self> {
        i64::checked_neg(*self)
    }
    fn checked_mul_sub(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(i64::checked_mul(*q, *b)?)
    }
    fn checked_add(&self, b: &Self) -> Option<Self> {
        i64::checked_add(*self, *b)
    }
    fn checked_mul(&self, b: &Self) -> Option<Self> {
        i64::checked_mul(*self, *b)
    }
    fn quotient(&self, d: &Self) -> Option<Self> {
        self.checked_div(*d)
    }
    fn divides(&self, other: &Self) -> bool {
        if *self == 0 {
            *other == 0
        } else {
            other.checked_rem(*self).is_some_and(|r| r == 0)
        }
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn checked_mul_sub(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn checked_add(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn checked_mul(&self, b: &Self) -> Option<Self> {
        Some(self * b)
    }
    fn quotient(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn divides(&self, other: &Self) -> bool {
        if Zero::is_zero(self) {
            Zero::is_zero(other)
        } else {
            Zero::is_zero(&(other % self))
        }
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Arbitrary-precision integer matrix.
pub type IntegerMatrix = Matrix<BigInt>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| T::from_i64(v)).collect()).collect())
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `row[target] -= q * row[source]`
    pub fn row_mul_sub(&mut self, target: usize, source: usize, q: &T) -> Result<(), Overflow> {
        for c in 0..self.cols {
            let s = &self.data[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let v = self.data[target * self.cols + c].checked_mul_sub(q, s).ok_or(Overflow)?;
            self.data[target * self.cols + c] = v;
        }
        Ok(())
    }

    /// `col[target] -= q * col[source]`
    pub fn col_mul_sub(&mut self, target: usize, source: usize, q: &T) -> Result<(), Overflow> {
        for r in 0..self.rows {
            let s = &self.data[r * self.cols + source];
            if s.is_zero() {
                continue;
            }
            let v = self.data[r * self.cols + target].checked_mul_sub(q, s).ok_or(Overflow)?;
            self.data[r * self.cols + target] = v;
        }
        Ok(())
    }

    pub fn negate_row(&mut self, r: usize) -> Result<(), Overflow> {
        for c in 0..self.cols {
            let v = self.data[r * self.cols + c].checked_neg().ok_or(Overflow)?;
            self.data[r * self.cols + c] = v;
        }
        Ok(())
    }

    pub fn negate_col(&mut self, c: usize) -> Result<(), Overflow> {
        for r in 0..self.rows {
            let v = self.data[r * self.cols + c].checked_neg().ok_or(Overflow)?;
            self.data[r * self.cols + c] = v;
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, Overflow> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.checked_mul(b).ok_or(Overflow)?;
                    let v = out.get(i, j).checked_add(&prod).ok_or(Overflow)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn checked_mul_vec(&self, v: &[T]) -> Result<Vec<T>, Overflow> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.checked_add(&a.checked_mul(b).ok_or(Overflow)?).ok_or(Overflow)?;
                }
                Ok(acc)
            })
            .collect()
    }

    pub fn to_bigint(&self) -> IntegerMatrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::to_bigint).collect(),
        }
    }
}

impl IntegerMatrix {
    /// Narrowing conversion; `None` if any entry does not fit in `i64`.
    pub fn to_i64(&self) -> Option<Matrix<i64>> {
        let data = self.data.iter().map(|v| v.to_i64()).collect::<Option<Vec<_>>>()?;
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Exact product; never overflows.
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("BigInt arithmetic does not overflow")
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.checked_mul_vec(v).expect("BigInt arithmetic does not overflow")
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return <BigInt as One>::one();
        }
        let mut a = self.clone();
        let mut sign = <BigInt as One>::one();
        let mut prev = <BigInt as One>::one();
        for k in 0..n {
            if Zero::is_zero(a.get(k, k)) {
                match (k + 1..n).find(|&r| !Zero::is_zero(a.get(r, k))) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return <BigInt as Zero>::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        let m = IntegerMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]);
        assert_eq!(m.determinant(), BigInt::from(-8));
        let m = IntegerMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 3]]);
        assert_eq!(m.determinant(), BigInt::from(-3));
        assert_eq!(IntegerMatrix::identity(0).determinant(), BigInt::from(1));
    }

    #[test]
    fn i64_overflow_is_reported() {
        let mut m = Matrix::<i64>::from_i64_rows(&[&[i64::MAX], &[1]]);
        assert!(m.row_mul_sub(0, 1, &-1).is_err());
    }
}
