//! Closed-form values per type, written independently of the computation.

use crate::center::{QmodZ, RhoKind};
use crate::rootsys::{Family, TypeLabel};

fn q(n: usize, d: usize) -> QmodZ {
    QmodZ::from_fraction(n as i64, d as i64)
}

/// Induced pairing on the preferred generators of `Delta^vee`.
pub fn pairing(label: TypeLabel) -> Vec<Vec<QmodZ>> {
    let n = label.rank();
    match label.family() {
        Family::A => vec![vec![q(n, n + 1)]],
        Family::B => vec![vec![QmodZ::zero()]],
        Family::C if n % 2 == 1 => vec![vec![q(1, 2)]],
        Family::C => vec![vec![QmodZ::zero()]],
        Family::D if n % 2 == 1 => vec![vec![q(n, 4)]],
        Family::D => vec![vec![q(n, 4), q(n - 2, 4)], vec![q(n - 2, 4), q(n, 4)]],
        Family::E if n == 6 => vec![vec![q(1, 3)]],
        Family::E if n == 7 => vec![vec![q(1, 2)]],
        _ => Vec::new(),
    }
}

pub fn rho_kind(label: TypeLabel) -> RhoKind {
    let n = label.rank();
    match label.family() {
        Family::A | Family::D => RhoKind::Iso,
        Family::E if n < 8 => RhoKind::Iso,
        Family::C if n % 2 == 1 => RhoKind::Iso,
        Family::B | Family::C => RhoKind::Zero,
        _ => RhoKind::TrivialCenter,
    }
}

/// Root count of the irreducible system.
pub fn root_count(label: TypeLabel) -> usize {
    let n = label.rank();
    match label.family() {
        Family::A => n * (n + 1),
        Family::B | Family::C => 2 * n * n,
        Family::D => 2 * n * (n - 1),
        Family::E => [72, 126, 240][n - 6],
        Family::F => 48,
        Family::G => 12,
    }
}
