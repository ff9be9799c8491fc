use std::collections::HashSet;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::group::FiniteAbelianGroup;

/// An element of Q/Z, kept as its representative in [0, 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QmodZ(BigRational);

impl QmodZ {
    pub fn new(x: BigRational) -> Self {
        let floor = x.floor();
        QmodZ(x - floor)
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        QmodZ(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn times(&self, k: u64) -> Self {
        Self::new(&self.0 * BigRational::from_integer(BigInt::from(k)))
    }
}

impl Add for &QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: &QmodZ) -> QmodZ {
        QmodZ::new(&self.0 + &rhs.0)
    }
}

impl fmt::Display for QmodZ {
    /// `"0"` for zero, otherwise `"a/b"` in lowest terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl std::str::FromStr for QmodZ {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|e| format!("{s:?}: {e}"));
        match s.split_once('/') {
            None => Ok(QmodZ::new(BigRational::from_integer(parse(s)?))),
            Some((n, d)) => {
                let d = parse(d)?;
                if d.is_zero() {
                    return Err(format!("{s:?}: zero denominator"));
                }
                Ok(QmodZ::new(BigRational::new(parse(n)?, d)))
            }
        }
    }
}

/// Bilinear pairing `left x right -> Q/Z`, tabulated on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingTable {
    left: FiniteAbelianGroup,
    right: FiniteAbelianGroup,
    values: Vec<Vec<QmodZ>>,
}

impl PairingTable {
    pub fn new(left: FiniteAbelianGroup, right: FiniteAbelianGroup, values: Vec<Vec<QmodZ>>) -> Self {
        assert_eq!(values.len(), left.rank(), "one row per left generator");
        assert!(values.iter().all(|r| r.len() == right.rank()), "one column per right generator");
        PairingTable {
            left,
            right,
            values,
        }
    }

    pub fn left(&self) -> &FiniteAbelianGroup {
        &self.left
    }

    pub fn right(&self) -> &FiniteAbelianGroup {
        &self.right
    }

    pub fn values(&self) -> &[Vec<QmodZ>] {
        &self.values
    }

    pub fn evaluate(&self, x: &[u64], y: &[u64]) -> QmodZ {
        let mut acc = QmodZ::zero();
        for (i, &a) in x.iter().enumerate() {
            for (j, &b) in y.iter().enumerate() {
                acc = &acc + &self.values[i][j].times(a * b);
            }
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.values.len();
        (0..n).all(|i| (0..n).all(|j| self.values.get(j).and_then(|r| r.get(i)) == Some(&self.values[i][j])))
    }

    /// Each table entry is killed by the orders of both generators involved.
    pub fn respects_orders(&self) -> bool {
        self.values.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, v)| {
                v.times(self.left.orders()[i]).is_zero() && v.times(self.right.orders()[j]).is_zero()
            })
        })
    }

    /// Perfectness by enumeration: both adjoint maps are injective and the
    /// groups have equal order.
    pub fn is_perfect(&self) -> bool {
        if self.left.order() != self.right.order() {
            return false;
        }
        let rights: Vec<_> = self.right.elements().collect();
        let lefts: Vec<_> = self.left.elements().collect();
        let mut seen = HashSet::new();
        let left_injective = lefts.iter().all(|x| {
            let row: Vec<QmodZ> = rights.iter().map(|y| self.evaluate(x, y)).collect();
            seen.insert(row)
        });
        let mut seen = HashSet::new();
        let right_injective = rights.iter().all(|y| {
            let col: Vec<QmodZ> = lefts.iter().map(|x| self.evaluate(x, y)).collect();
            seen.insert(col)
        });
        left_injective && right_injective
    }

    /// Entries as strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.values
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }
}
