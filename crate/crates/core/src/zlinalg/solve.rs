use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{to_integer_vector, IntMatrix, IntVector, RatMatrix};
use super::normal_form::{hnf, snf};
use crate::error::{Error, Result};

/// Finds an integer vector `x` with `m * x == b`, where the columns of `m`
/// generate a lattice and `b` is given in the same ambient coordinates.
///
/// `Ok(None)` means `b` is not in the lattice.
pub fn solve_in_lattice(m: &IntMatrix, b: &[BigRational]) -> Result<Option<IntVector>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let Some(b) = to_integer_vector(b) else {
        return Ok(None);
    };
    let d = snf(m);
    let c = d.left.mul_vec(&b);
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, ci) in c.iter().enumerate() {
        let di = if i < m.cols() {
            &d.diagonal[(i, i)]
        } else {
            &BigInt::ZERO
        };
        if di.is_zero() {
            if !ci.is_zero() {
                return Ok(None);
            }
        } else {
            let (q, r) = ci.div_rem(di);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
    }
    Ok(Some(d.right.mul_vec(&y)))
}

/// Exact inverse over the rationals by Gauss-Jordan elimination.
pub fn invert_rational(m: &IntMatrix) -> Result<RatMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a = m.to_rational();
    let mut inv = RatMatrix::identity(n);
    for col in 0..n {
        let p = (col..n).find(|&r| !a[(r, col)].is_zero()).ok_or(Error::Singular)?;
        a.swap_rows(col, p);
        inv.swap_rows(col, p);
        let pivot_inv = BigRational::one() / &a[(col, col)];
        for j in 0..n {
            let x = &a[(col, j)] * &pivot_inv;
            a[(col, j)] = x;
            let y = &inv[(col, j)] * &pivot_inv;
            inv[(col, j)] = y;
        }
        for r in 0..n {
            if r == col || a[(r, col)].is_zero() {
                continue;
            }
            let f = a[(r, col)].clone();
            for j in 0..n {
                let x = &f * &a[(col, j)];
                a[(r, j)] -= x;
                let y = &f * &inv[(col, j)];
                inv[(r, j)] -= y;
            }
        }
    }
    Ok(inv)
}

/// A basis (as columns) of the integer kernel `{x : m * x == 0}`.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf(&m.transpose());
    let zero_rows: Vec<IntVector> = (0..h.rows())
        .filter(|&r| h.row(r).iter().all(Zero::is_zero))
        .map(|r| u.row(r).to_vec())
        .collect();
    IntMatrix::from_columns(m.cols(), &zero_rows).expect("kernel rows have matching length")
}

/// A basis (as columns) of the lattice generated by the columns of `m`.
pub fn lattice_basis(m: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf(&m.transpose());
    let rows: Vec<IntVector> = (0..h.rows())
        .filter(|&r| h.row(r).iter().any(|x| !x.is_zero()))
        .map(|r| h.row(r).to_vec())
        .collect();
    IntMatrix::from_columns(m.rows(), &rows).expect("basis rows have matching length")
}
