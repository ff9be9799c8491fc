//! The finite groups `Delta = Λ_w/Λ_r` and `Delta^vee = Λ_w^vee/Λ_r^vee`,
//! their duality, and the map `rho: Delta^vee -> Delta` induced by `phi`.
//!
//! `Delta` is presented on fundamental-weight coordinates, where the root
//! lattice is spanned by the columns of `C^T`; `Delta^vee` on
//! fundamental-coweight coordinates, where the coroot lattice is spanned by
//! the columns of `C`.

mod group;
mod pairing;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use group::{Element, FiniteAbelianGroup, Generator, GroupHom};
pub use pairing::{PairingTable, QmodZ};

use crate::error::{Error, Result};
use crate::rootsys::{BasisKind, Family, RootSystem, TypeLabel};
use crate::zlinalg::{to_rational_vector, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Weights,
    Coweights,
}

/// Name of an ambient vector as a combination of fundamental (co)weights,
/// 1-based: `f1`, `f6v`, `f1+2f3`.
pub fn combination_name(v: &[BigInt], side: Side, offset: usize) -> String {
    let suffix = if side == Side::Coweights { "v" } else { "" };
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != BigInt::one() {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("f{}{suffix}", i + 1 + offset));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Generators used for each irreducible type, as zero-based node indices.
fn preferred_generators(label: TypeLabel, side: Side) -> Vec<usize> {
    let n = label.rank();
    match (label.family(), side) {
        (Family::A, _) => vec![0],
        (Family::B, Side::Weights) | (Family::C, Side::Coweights) => vec![n - 1],
        (Family::B, Side::Coweights) | (Family::C, Side::Weights) => vec![0],
        (Family::D, _) if n % 2 == 1 => vec![n - 1],
        (Family::D, _) => vec![n - 2, n - 1],
        (Family::E, _) if n == 6 => vec![0],
        (Family::E, _) if n == 7 => vec![6],
        _ => Vec::new(),
    }
}

fn quotient(r: &RootSystem, side: Side) -> Result<FiniteAbelianGroup> {
    let parts = r
        .components()
        .iter()
        .map(|c| {
            let nodes: Vec<usize> = c.nodes().collect();
            let block = r.cartan().select(&nodes, &nodes);
            let relations = match side {
                Side::Weights => block.transpose(),
                Side::Coweights => block,
            };
            let preferred = preferred_generators(c.label, side);
            FiniteAbelianGroup::quotient(&relations, Some(&preferred), |v| {
                combination_name(v, side, c.offset)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiniteAbelianGroup::direct_sum(&parts))
}

/// `Delta = Λ_w / Λ_r`, computed blockwise for reducible systems.
pub fn weight_quotient(r: &RootSystem) -> Result<FiniteAbelianGroup> {
    quotient(r, Side::Weights)
}

/// `Delta^vee = Λ_w^vee / Λ_r^vee`.
pub fn coweight_quotient(r: &RootSystem) -> Result<FiniteAbelianGroup> {
    quotient(r, Side::Coweights)
}

/// The canonical pairing `Delta x Delta^vee -> Q/Z` on the chosen generators.
pub fn duality_pairing(r: &RootSystem) -> Result<PairingTable> {
    let delta = weight_quotient(r)?;
    let delta_dual = coweight_quotient(r)?;
    duality_pairing_on(r, delta, delta_dual)
}

fn duality_pairing_on(
    r: &RootSystem,
    delta: FiniteAbelianGroup,
    delta_dual: FiniteAbelianGroup,
) -> Result<PairingTable> {
    let to_roots = r.basis_change(BasisKind::FundamentalWeights, BasisKind::SimpleRoots)?;
    let to_coroots = r.basis_change(BasisKind::FundamentalCoweights, BasisKind::SimpleCoroots)?;
    let values = delta
        .generators()
        .iter()
        .map(|g| {
            let a = to_roots.apply(&to_rational_vector(&g.lift));
            delta_dual
                .generators()
                .iter()
                .map(|h| {
                    let b = to_coroots.apply(&to_rational_vector(&h.lift));
                    QmodZ::new(r.pairing(&a, &b))
                })
                .collect()
        })
        .collect();
    Ok(PairingTable::new(delta, delta_dual, values))
}

/// `rho: Delta^vee -> Delta`, the class of `v` going to the class of `phi(v)`.
pub fn rho(r: &RootSystem) -> Result<GroupHom> {
    let delta = weight_quotient(r)?;
    let delta_dual = coweight_quotient(r)?;
    GroupHom::induced(&delta_dual, &delta, r.phi_on_weights().matrix())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RhoKind {
    Iso,
    Zero,
    TrivialCenter,
    /// Neither injective nor zero; does not occur for irreducible systems.
    Partial,
}

impl RhoKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RhoKind::Iso => "iso",
            RhoKind::Zero => "zero",
            RhoKind::TrivialCenter => "trivial-center",
            RhoKind::Partial => "partial",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoClassification {
    pub kind: RhoKind,
    pub kernel_factors: Vec<u64>,
}

pub fn classify(rho: &GroupHom) -> RhoClassification {
    let kind = if rho.source().is_trivial() && rho.target().is_trivial() {
        RhoKind::TrivialCenter
    } else if rho.is_bijective() {
        RhoKind::Iso
    } else if rho.is_zero() {
        RhoKind::Zero
    } else {
        RhoKind::Partial
    };
    RhoClassification {
        kind,
        kernel_factors: rho.kernel_invariant_factors(),
    }
}

/// Classification of `ker rho` for an irreducible system.
pub fn rho_kernel_class(r: &RootSystem) -> Result<RhoClassification> {
    r.irreducible_label()?;
    Ok(classify(&rho(r)?))
}

/// The pairing `Delta^vee x Delta^vee -> Q/Z`, `(x, y) -> <rho(y), x>`.
pub fn induced_pairing(r: &RootSystem) -> Result<PairingTable> {
    induced_pairing_from(&rho(r)?, &duality_pairing(r)?)
}

/// Induced pairing for an explicitly supplied `rho`.
pub fn induced_pairing_from(rho: &GroupHom, duality: &PairingTable) -> Result<PairingTable> {
    let dual = rho.source().clone();
    if duality.right().orders() != dual.orders() || duality.left().orders() != rho.target().orders() {
        return Err(Error::DimensionMismatch {
            expected: dual.rank(),
            found: duality.right().rank(),
        });
    }
    let k = dual.rank();
    let mut values = vec![vec![QmodZ::zero(); k]; k];
    for (x, row) in values.iter_mut().enumerate() {
        let mut ex = vec![0; k];
        ex[x] = 1;
        for (y, cell) in row.iter_mut().enumerate() {
            *cell = duality.evaluate(&rho.images()[y], &ex);
        }
    }
    Ok(PairingTable::new(dual.clone(), dual, values))
}

/// Permutation of fundamental (co)weight coordinates induced by a diagram
/// automorphism, as a lattice map.
fn permutation_matrix(perm: &[usize]) -> RatMatrix {
    let n = perm.len();
    let mut m = RatMatrix::zeros(n, n);
    for (i, &p) in perm.iter().enumerate() {
        m[(p, i)] = BigRational::one();
    }
    m
}

/// Checks `rho ∘ sigma = sigma ∘ rho` on every element, for every diagram
/// automorphism `sigma`. Returns the offending permutation on failure.
pub fn rho_equivariance(r: &RootSystem, rho: &GroupHom) -> Result<Option<Vec<usize>>> {
    for perm in r.dynkin_automorphisms() {
        let p = permutation_matrix(&perm);
        let on_dual = GroupHom::induced(rho.source(), rho.source(), &p)?;
        let on_delta = GroupHom::induced(rho.target(), rho.target(), &p)?;
        let lhs = rho.compose(&on_dual)?;
        let rhs = on_delta.compose(rho)?;
        if !lhs.agrees_everywhere(&rhs) {
            return Ok(Some(perm));
        }
    }
    Ok(None)
}

/// Determinant of the Cartan matrix, for cross-checking group orders.
pub fn cartan_determinant(r: &RootSystem) -> BigInt {
    r.cartan().det().expect("square").abs()
}
