use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::zlinalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn admits(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// Cartan-Killing type of an irreducible root system, e.g. `E7`.
///
/// `C2` and `D3` are accepted as labels in their own right; they keep the
/// C and D node numbering even though the underlying systems are `B2` and
/// `A3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    family: Family,
    rank: usize,
}

impl TypeLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits(rank) {
            return Err(Error::InadmissibleLabel(format!("{}{rank}", family.letter())));
        }
        Ok(TypeLabel { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Every admissible label of rank at most `max_rank`, in family then rank order.
    pub fn catalog(max_rank: usize) -> Vec<TypeLabel> {
        Family::ALL
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |n| TypeLabel::new(f, n).ok()))
            .collect()
    }

    /// Squared lengths of the simple roots, in units where short roots have 2.
    fn simple_root_lengths(self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![2; n],
            Family::B => (0..n).map(|i| if i + 1 == n { 2 } else { 4 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { 4 } else { 2 }).collect(),
            Family::F => vec![4, 4, 2, 2],
            Family::G => vec![2, 6],
        }
    }

    /// Edges of the Dynkin diagram, zero-based, Bourbaki numbering.
    fn edges(self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let path = |k: usize| (1..k).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => path(n),
            Family::D => {
                let mut e = path(n - 1);
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..n).map(|i| (i - 1, i)));
                e
            }
        }
    }

    /// Standard Cartan matrix with `C[i][j] = <alpha_j^vee, alpha_i>`.
    pub fn cartan_matrix(self) -> IntMatrix {
        let n = self.rank;
        let len = self.simple_root_lengths();
        // Gram matrix of the simple roots, short roots of squared length 2
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            gram[i][i] = len[i];
        }
        for (i, j) in self.edges() {
            let ip = -len[i].max(len[j]) / 2;
            gram[i][j] = ip;
            gram[j][i] = ip;
        }
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        IntMatrix::from_rows(&rows)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Parses labels like `A5`, `d4`, `E7`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnparsableLabel(s.to_string())),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::UnparsableLabel(s.to_string()));
        }
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::UnparsableLabel(s.to_string()))?;
        TypeLabel::new(family, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let l: TypeLabel = "e7".parse().unwrap();
        assert_eq!(l, TypeLabel::new(Family::E, 7).unwrap());
        assert_eq!(l.to_string(), "E7");
        assert!(matches!("X3".parse::<TypeLabel>(), Err(Error::UnparsableLabel(_))));
        assert!(matches!("A".parse::<TypeLabel>(), Err(Error::UnparsableLabel(_))));
        assert!(matches!("A-1".parse::<TypeLabel>(), Err(Error::UnparsableLabel(_))));
        assert!(matches!("E9".parse::<TypeLabel>(), Err(Error::InadmissibleLabel(_))));
        assert!(matches!("B1".parse::<TypeLabel>(), Err(Error::InadmissibleLabel(_))));
        assert!(matches!("A0".parse::<TypeLabel>(), Err(Error::InadmissibleLabel(_))));
    }

    #[test]
    fn catalog_up_to_rank_eight() {
        let c = TypeLabel::catalog(8);
        // A1..A8, B2..B8, C2..C8, D3..D8, E6..E8, F4, G2
        assert_eq!(c.len(), 8 + 7 + 7 + 6 + 3 + 1 + 1);
    }

    #[test]
    fn classical_cartan_matrices() {
        let a2 = TypeLabel::new(Family::A, 2).unwrap().cartan_matrix();
        assert_eq!(a2, IntMatrix::from_rows(&[[2, -1], [-1, 2]]));
        // alpha_3 short: <alpha_3^vee, alpha_2> = -2
        let b3 = TypeLabel::new(Family::B, 3).unwrap().cartan_matrix();
        assert_eq!(b3, IntMatrix::from_rows(&[[2, -1, 0], [-1, 2, -2], [0, -1, 2]]));
        let c3 = TypeLabel::new(Family::C, 3).unwrap().cartan_matrix();
        assert_eq!(c3, b3.transpose());
        let d4 = TypeLabel::new(Family::D, 4).unwrap().cartan_matrix();
        assert_eq!(
            d4,
            IntMatrix::from_rows(&[[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]])
        );
        let g2 = TypeLabel::new(Family::G, 2).unwrap().cartan_matrix();
        // alpha_1 short
        assert_eq!(g2, IntMatrix::from_rows(&[[2, -1], [-3, 2]]));
    }

    #[test]
    fn e_series_branches_at_node_four() {
        let e6 = TypeLabel::new(Family::E, 6).unwrap().cartan_matrix();
        assert_eq!(e6[(1, 3)], (-1).into());
        assert_eq!(e6[(0, 2)], (-1).into());
        assert_eq!(e6[(1, 2)], 0.into());
        assert_eq!(e6.det().unwrap(), 3.into());
    }

    #[test]
    fn cartan_determinants() {
        let det = |s: &str| s.parse::<TypeLabel>().unwrap().cartan_matrix().det().unwrap();
        assert_eq!(det("E7"), 2.into());
        assert_eq!(det("E8"), 1.into());
        assert_eq!(det("F4"), 1.into());
        assert_eq!(det("D5"), 4.into());
        assert_eq!(det("D3"), 4.into());
        assert_eq!(det("A7"), 8.into());
    }
}
