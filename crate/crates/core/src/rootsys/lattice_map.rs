use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::zlinalg::{IntMatrix, RatMatrix, RatVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    SimpleRoots,
    SimpleCoroots,
    FundamentalWeights,
    FundamentalCoweights,
}

impl BasisKind {
    /// Whether the basis lives in V (as opposed to its dual).
    pub fn is_primal(self) -> bool {
        matches!(self, BasisKind::SimpleRoots | BasisKind::FundamentalWeights)
    }

    fn short_name(self) -> &'static str {
        match self {
            BasisKind::SimpleRoots => "roots",
            BasisKind::SimpleCoroots => "coroots",
            BasisKind::FundamentalWeights => "weights",
            BasisKind::FundamentalCoweights => "coweights",
        }
    }
}

/// A distinguished basis of a specific root system's (dual) space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Basis {
    pub kind: BasisKind,
    pub system: String,
}

impl Basis {
    pub fn new(kind: BasisKind, system: impl Into<String>) -> Self {
        Basis {
            kind,
            system: system.into(),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind.short_name(), self.system)
    }
}

/// Linear map written on distinguished bases; column `j` is the image of
/// the `j`-th source basis vector in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    source: Basis,
    target: Basis,
    matrix: RatMatrix,
}

impl LatticeMap {
    pub fn new(source: Basis, target: Basis, matrix: RatMatrix) -> Self {
        LatticeMap {
            source,
            target,
            matrix,
        }
    }

    pub fn from_integer(source: Basis, target: Basis, matrix: &IntMatrix) -> Self {
        Self::new(source, target, matrix.to_rational())
    }

    pub fn source(&self) -> &Basis {
        &self.source
    }

    pub fn target(&self) -> &Basis {
        &self.target
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn integer_matrix(&self) -> Option<IntMatrix> {
        self.matrix.to_integer()
    }

    /// `self ∘ inner`; the bases must line up.
    pub fn compose(&self, inner: &LatticeMap) -> Result<LatticeMap> {
        if inner.target != self.source {
            return Err(Error::BasisMismatch {
                left: self.source.to_string(),
                right: inner.target.to_string(),
            });
        }
        Ok(LatticeMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &inner.matrix,
        })
    }

    /// `self - other` for maps with identical source and target.
    pub fn difference(&self, other: &LatticeMap) -> Result<LatticeMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::BasisMismatch {
                left: format!("{} -> {}", self.source, self.target),
                right: format!("{} -> {}", other.source, other.target),
            });
        }
        let data = self
            .matrix
            .entries()
            .iter()
            .zip(other.matrix.entries())
            .map(|(a, b)| a - b)
            .collect();
        Ok(LatticeMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: RatMatrix::new(self.matrix.rows(), self.matrix.cols(), data)?,
        })
    }

    pub fn scale(&self, factor: &BigRational) -> LatticeMap {
        LatticeMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.scale(factor),
        }
    }

    pub fn apply(&self, v: &[BigRational]) -> RatVector {
        self.matrix.mul_vec(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(src: BasisKind, dst: BasisKind, rows: &[[i64; 2]]) -> LatticeMap {
        LatticeMap::from_integer(
            Basis::new(src, "A2"),
            Basis::new(dst, "A2"),
            &IntMatrix::from_rows(rows),
        )
    }

    #[test]
    fn composition_requires_matching_tags() {
        let a = map(BasisKind::SimpleCoroots, BasisKind::SimpleRoots, &[[1, 0], [0, 1]]);
        let b = map(BasisKind::SimpleRoots, BasisKind::FundamentalWeights, &[[2, -1], [-1, 2]]);
        let ba = b.compose(&a).unwrap();
        assert_eq!(ba.source().kind, BasisKind::SimpleCoroots);
        assert_eq!(ba.target().kind, BasisKind::FundamentalWeights);
        assert_eq!(ba.integer_matrix().unwrap(), IntMatrix::from_rows(&[[2, -1], [-1, 2]]));
        assert!(matches!(a.compose(&b), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn systems_must_match_too() {
        let a = map(BasisKind::SimpleCoroots, BasisKind::SimpleRoots, &[[1, 0], [0, 1]]);
        let other = LatticeMap::from_integer(
            Basis::new(BasisKind::SimpleRoots, "B2"),
            Basis::new(BasisKind::SimpleRoots, "B2"),
            &IntMatrix::identity(2),
        );
        assert!(other.compose(&a).is_err());
        assert!(a.difference(&other).is_err());
    }
}
