use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Result of [`snf`]: `left * original * right == diagonal`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SnfDecomposition {
    /// Diagonal entries d1 | d2 | ... (zeros last), length min(rows, cols).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.diagonal.rows().min(self.diagonal.cols());
        (0..k).map(|i| self.diagonal[(i, i)].clone()).collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u` unimodular and `u * m == h`. Pivots of `h` are
/// positive, entries above each pivot lie in `[0, pivot)`, and zero rows
/// come last.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivot_row = 0;

    for col in 0..m.cols() {
        if pivot_row == rows {
            break;
        }
        loop {
            let best = (pivot_row..rows)
                .filter(|&r| !h[(r, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()));
            let Some(p) = best else { break };
            h.swap_rows(p, pivot_row);
            u.swap_rows(p, pivot_row);

            let mut cleared = true;
            for r in pivot_row + 1..rows {
                if h[(r, col)].is_zero() {
                    continue;
                }
                let q = h[(r, col)].div_floor(&h[(pivot_row, col)]);
                h.sub_row_multiple(r, pivot_row, &q);
                u.sub_row_multiple(r, pivot_row, &q);
                if !h[(r, col)].is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                break;
            }
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let pivot = h[(pivot_row, col)].clone();
        for r in 0..pivot_row {
            let q = h[(r, col)].div_floor(&pivot);
            if !q.is_zero() {
                h.sub_row_multiple(r, pivot_row, &q);
                u.sub_row_multiple(r, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Smith normal form by elementary row and column operations, always
/// pivoting on an entry of minimal absolute value.
pub fn snf(m: &IntMatrix) -> SnfDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);

    'outer: for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'outer };
            s.swap_rows(t, pi);
            left.swap_rows(t, pi);
            s.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let pivot = s[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = &s[(i, t)] / &pivot;
                s.sub_row_multiple(i, t, &q);
                left.sub_row_multiple(i, t, &q);
                dirty |= !s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = &s[(t, j)] / &pivot;
                s.sub_col_multiple(j, t, &q);
                right.sub_col_multiple(j, t, &q);
                dirty |= !s[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }

            // pivot must divide the whole remaining block
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    s.sub_row_multiple(t, i, &minus_one);
                    left.sub_row_multiple(t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            left.negate_row(t);
        }
    }

    SnfDecomposition {
        diagonal: s,
        left,
        right,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &IntMatrix) -> Vec<i64> {
        let d = snf(m);
        assert_eq!(&(&d.left * m) * &d.right, d.diagonal);
        d.invariant_factors()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    fn assert_hnf_shape(h: &IntMatrix) {
        let mut last_pivot_col: Option<usize> = None;
        let mut seen_zero_row = false;
        for r in 0..h.rows() {
            match (0..h.cols()).find(|&c| !h[(r, c)].is_zero()) {
                None => seen_zero_row = true,
                Some(c) => {
                    assert!(!seen_zero_row, "nonzero row after a zero row");
                    assert!(last_pivot_col.is_none_or(|p| c > p));
                    assert!(h[(r, c)].is_positive());
                    for above in 0..r {
                        assert!(!h[(above, c)].is_negative());
                        assert!(h[(above, c)] < h[(r, c)]);
                    }
                    last_pivot_col = Some(c);
                }
            }
        }
    }

    #[test]
    fn hnf_identity() {
        let i = IntMatrix::identity(2);
        assert_eq!(hnf(&i), (i.clone(), i));
    }

    #[test]
    fn hnf_a2_cartan() {
        let m = IntMatrix::from_rows(&[[2, -1], [-1, 2]]);
        let (h, u) = hnf(&m);
        assert_eq!(&u * &m, h);
        assert!(u.is_unimodular());
        assert_hnf_shape(&h);
        assert_eq!(h, IntMatrix::from_rows(&[[1, 1], [0, 3]]));
    }

    #[test]
    fn hnf_zero_matrix() {
        let z = IntMatrix::zeros(2, 2);
        assert_eq!(hnf(&z), (z.clone(), IntMatrix::identity(2)));
    }

    #[test]
    fn hnf_rectangular_and_rank_deficient() {
        let m = IntMatrix::from_rows(&[[2, 4, 6], [1, 2, 3], [0, 3, 1]]);
        let (h, u) = hnf(&m);
        assert_eq!(&u * &m, h);
        assert!(u.is_unimodular());
        assert_hnf_shape(&h);
        assert!(h.row(2).iter().all(Zero::is_zero));
    }

    #[test]
    fn snf_known_cases() {
        assert_eq!(diag(&IntMatrix::from_rows(&[[2, -1], [-1, 2]])), vec![1, 3]);
        let d4 = IntMatrix::from_rows(&[
            [2, -1, 0, 0],
            [-1, 2, -1, -1],
            [0, -1, 2, 0],
            [0, -1, 0, 2],
        ]);
        assert_eq!(diag(&d4), vec![1, 1, 2, 2]);
        assert_eq!(diag(&IntMatrix::identity(4)), vec![1; 4]);
        assert_eq!(diag(&IntMatrix::from_rows(&[[0]])), vec![0]);
    }

    #[test]
    fn snf_enforces_divisibility_chain() {
        // diag(2, 3) is not in Smith form; the chain is (1, 6)
        assert_eq!(diag(&IntMatrix::from_rows(&[[2, 0], [0, 3]])), vec![1, 6]);
        assert_eq!(diag(&IntMatrix::from_rows(&[[4, 0], [0, 6]])), vec![2, 12]);
        assert_eq!(diag(&IntMatrix::from_rows(&[[0, 0, 0], [0, 0, 5]])), vec![5, 0]);
    }

    #[test]
    fn snf_of_empty_shapes() {
        let d = snf(&IntMatrix::zeros(3, 0));
        assert_eq!(d.left, IntMatrix::identity(3));
        assert_eq!(d.rank(), 0);
    }
}
