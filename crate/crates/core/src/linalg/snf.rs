use num_bigint::BigInt;

use super::{IntegerMatrix, Matrix, Scalar};

/// An `i64` intermediate left the representable range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

/// `U · M · V = D` with `D` diagonal, `d₁ | d₂ | …`, all `dᵢ > 0`, and `U`, `V`
/// unimodular. The inverses are carried along because cohomology computations
/// need to move between original and reduced coordinates in both directions.
#[derive(Clone, Debug)]
pub struct SnfResult<T = BigInt> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v_inv: Matrix<T>,
    pub rank: usize,
}

impl<T: Scalar> SnfResult<T> {
    /// Nonzero diagonal entries `d₁, …, d_rank`.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }

    fn to_bigint(&self) -> SnfResult<BigInt> {
        SnfResult {
            u: self.u.to_bigint(),
            d: self.d.to_bigint(),
            v: self.v.to_bigint(),
            u_inv: self.u_inv.to_bigint(),
            v_inv: self.v_inv.to_bigint(),
            rank: self.rank,
        }
    }
}

struct Transforms<T> {
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
}

struct Reducer<T> {
    a: Matrix<T>,
    tr: Option<Transforms<T>>,
}

impl<T: Scalar> Reducer<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(t) = &mut self.tr {
            t.u.swap_rows(i, j);
            t.u_inv.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(t) = &mut self.tr {
            t.v.swap_cols(i, j);
            t.v_inv.swap_rows(i, j);
        }
    }

    /// row[target] -= q row[source]
    fn row_sub(&mut self, target: usize, source: usize, q: &T) -> Result<(), Overflow> {
        self.a.row_mul_sub(target, source, q)?;
        if let Some(t) = &mut self.tr {
            t.u.row_mul_sub(target, source, q)?;
            let neg = q.checked_neg().ok_or(Overflow)?;
            t.u_inv.col_mul_sub(source, target, &neg)?;
        }
        Ok(())
    }

    /// col[target] -= q col[source]
    fn col_sub(&mut self, target: usize, source: usize, q: &T) -> Result<(), Overflow> {
        self.a.col_mul_sub(target, source, q)?;
        if let Some(t) = &mut self.tr {
            t.v.col_mul_sub(target, source, q)?;
            let neg = q.checked_neg().ok_or(Overflow)?;
            t.v_inv.row_mul_sub(source, target, &neg)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<(), Overflow> {
        self.a.negate_row(i)?;
        if let Some(t) = &mut self.tr {
            t.u.negate_row(i)?;
            t.u_inv.negate_col(i)?;
        }
        Ok(())
    }

    /// Smallest nonzero |entry| in the trailing block, first in row-major order on ties.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => v.abs_cmp(self.a.get(bi, bj)).is_lt(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(&mut self) -> Result<usize, Overflow> {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.min_pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.a.get(t, t).clone();
                let mut residue = false;
                for i in t + 1..rows {
                    if self.a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = self.a.get(i, t).quotient(&p).ok_or(Overflow)?;
                    self.row_sub(i, t, &q)?;
                    residue |= !self.a.get(i, t).is_zero();
                }
                for j in t + 1..cols {
                    if self.a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = self.a.get(t, j).quotient(&p).ok_or(Overflow)?;
                    self.col_sub(j, t, &q)?;
                    residue |= !self.a.get(t, j).is_zero();
                }
                if residue {
                    // Bring the smallest remainder in row/column t to the corner.
                    let mut best: Option<(usize, usize)> = None;
                    let candidates = (t + 1..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                    for (i, j) in candidates {
                        let v = self.a.get(i, j);
                        if v.is_zero() {
                            continue;
                        }
                        if best.is_none_or(|(bi, bj)| v.abs_cmp(self.a.get(bi, bj)).is_lt()) {
                            best = Some((i, j));
                        }
                    }
                    let (bi, bj) = best.expect("residue recorded");
                    self.swap_rows(t, bi);
                    self.swap_cols(t, bj);
                    continue;
                }
                let offender = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !p.divides(self.a.get(i, j))));
                match offender {
                    Some(i) => {
                        let minus_one = T::one().checked_neg().ok_or(Overflow)?;
                        self.row_sub(t, i, &minus_one)?;
                    }
                    None => break,
                }
            }
            if self.a.get(t, t).is_negative() {
                self.negate_row(t)?;
            }
            t += 1;
        }
        Ok(t)
    }
}

/// Smith normal form over any [`Scalar`]; `Err(Overflow)` only for `i64`.
///
/// When `track` is false the transforms are returned as empty matrices.
pub fn snf_generic<T: Scalar>(m: &Matrix<T>, track: bool) -> Result<SnfResult<T>, Overflow> {
    let tr = track.then(|| Transforms {
        u: Matrix::identity(m.rows()),
        u_inv: Matrix::identity(m.rows()),
        v: Matrix::identity(m.cols()),
        v_inv: Matrix::identity(m.cols()),
    });
    let mut red = Reducer { a: m.clone(), tr };
    let rank = red.run()?;
    let (u, u_inv, v, v_inv) = match red.tr {
        Some(t) => (t.u, t.u_inv, t.v, t.v_inv),
        None => (Matrix::zeros(0, 0), Matrix::zeros(0, 0), Matrix::zeros(0, 0), Matrix::zeros(0, 0)),
    };
    Ok(SnfResult {
        u,
        d: red.a,
        v,
        u_inv,
        v_inv,
        rank,
    })
}

/// Smith normal form with transforms. Pivot rule: smallest absolute value, ties
/// broken in row-major order. Tries `i64` first and redoes the work in `BigInt`
/// on overflow.
pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    if let Some(small) = m.to_i64() {
        if let Ok(res) = snf_generic(&small, true) {
            return res.to_bigint();
        }
    }
    snf_generic(m, true).expect("BigInt arithmetic does not overflow")
}

/// Nonzero invariant factors of an `i64` matrix, computed exactly.
pub fn elementary_divisors(m: &Matrix<i64>) -> Vec<BigInt> {
    match snf_generic(m, false) {
        Ok(res) => res.invariant_factors().iter().map(|&v| BigInt::from(v)).collect(),
        Err(Overflow) => {
            log::debug!("i64 overflow in {}x{} elimination; retrying with BigInt", m.rows(), m.cols());
            snf_generic(&m.to_bigint(), false)
                .expect("BigInt arithmetic does not overflow")
                .invariant_factors()
        }
    }
}
