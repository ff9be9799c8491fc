//! Reduction to the type-A subsystem spanned by the simple roots whose
//! fundamental weights are not in the root lattice.
//!
//! Coordinates: coweights on fundamental coweights, weights on fundamental
//! weights, for both the ambient system `R` and the primed system `R'`.
//! Primed node `p` sits over ambient node `nodes[p]`.

mod lemma;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use lemma::{claim_check, verify_lemma2, verify_lemma2_with};

use crate::error::{Error, Result};
use crate::fault::Fault;
use crate::rootsys::{BasisKind, Family, LatticeMap, RootSystem, TypeLabel};
use crate::zlinalg::RatMatrix;

/// A connected component of the complement, nodes ordered along the path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeAComponent {
    pub nodes: Vec<usize>,
    pub label: TypeLabel,
    /// Common square length of the coroots on this component.
    pub d: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleRootPartition {
    system: RootSystem,
    pi_r: Vec<usize>,
    pi_prime: Vec<usize>,
    components: Vec<TypeAComponent>,
}

impl SimpleRootPartition {
    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    /// Nodes whose fundamental weight lies in the root lattice, ascending.
    pub fn pi_r(&self) -> &[usize] {
        &self.pi_r
    }

    /// The complement of `pi_r`, ascending.
    pub fn pi_prime(&self) -> &[usize] {
        &self.pi_prime
    }

    pub fn components(&self) -> &[TypeAComponent] {
        &self.components
    }

    /// Ambient node of each primed node.
    pub fn primed_nodes(&self) -> Vec<usize> {
        self.components.iter().flat_map(|c| c.nodes.iter().copied()).collect()
    }
}

/// Splits the simple roots of an irreducible system.
pub fn partition(r: &RootSystem) -> Result<SimpleRootPartition> {
    r.irreducible_label()?;
    let n = r.rank();
    let mut pi_r = Vec::new();
    let mut pi_prime = Vec::new();
    for i in 0..n {
        let mut f = vec![BigRational::zero(); n];
        f[i] = BigRational::one();
        if r.in_root_lattice(&f)? {
            pi_r.push(i);
        } else {
            pi_prime.push(i);
        }
    }

    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for &start in &pi_prime {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in r.neighbors(v) {
                if !seen[w] && pi_prime.contains(&w) {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        components.push(type_a_component(r, &comp, &pi_prime)?);
    }

    Ok(SimpleRootPartition {
        system: r.clone(),
        pi_r,
        pi_prime,
        components,
    })
}

fn type_a_component(r: &RootSystem, comp: &[usize], pi_prime: &[usize]) -> Result<TypeAComponent> {
    let not_a = || Error::NotTypeA(comp.to_vec());
    let degree = |v: usize| r.neighbors(v).filter(|w| pi_prime.contains(w)).count();
    let start = comp
        .iter()
        .copied()
        .find(|&v| degree(v) <= 1)
        .ok_or_else(not_a)?;
    let mut nodes = vec![start];
    while nodes.len() < comp.len() {
        let last = *nodes.last().expect("non-empty");
        let next = r
            .neighbors(last)
            .find(|w| pi_prime.contains(w) && !nodes.contains(w))
            .ok_or_else(not_a)?;
        nodes.push(next);
    }
    let label = TypeLabel::new(Family::A, nodes.len())?;
    if r.cartan().select(&nodes, &nodes) != label.cartan_matrix() {
        return Err(not_a());
    }
    let d = r.d_coroot()[nodes[0]];
    if nodes.iter().any(|&v| r.d_coroot()[v] != d) {
        return Err(not_a());
    }
    Ok(TypeAComponent { nodes, label, d })
}

/// The maps `s`, `t` and `t^vee` together with the primed system.
#[derive(Clone, Debug)]
pub struct ReductionMaps {
    partition: SimpleRootPartition,
    primed: RootSystem,
    nodes: Vec<usize>,
    s: LatticeMap,
    t: LatticeMap,
    t_dual: LatticeMap,
    multipliers: Vec<u32>,
}

impl ReductionMaps {
    pub fn partition(&self) -> &SimpleRootPartition {
        &self.partition
    }

    /// `R'`, the product of the type-A components in order.
    pub fn primed(&self) -> &RootSystem {
        &self.primed
    }

    pub fn primed_nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// `s`, coweights of `R` to coweights of `R'`.
    pub fn s(&self) -> &LatticeMap {
        &self.s
    }

    /// `t`, weights of `R'` to weights of `R`.
    pub fn t(&self) -> &LatticeMap {
        &self.t
    }

    /// `t^vee`, coweights of `R'` to coweights of `R`.
    pub fn t_dual(&self) -> &LatticeMap {
        &self.t_dual
    }

    /// Factor applied by `t` on each component.
    pub fn multipliers(&self) -> &[u32] {
        &self.multipliers
    }

    /// `f'_a -> f_a` on component `i`, zero on the others.
    pub fn component_embedding(&self, i: usize) -> LatticeMap {
        let comp = &self.partition.components[i];
        let n = self.partition.system.rank();
        let mut m = RatMatrix::zeros(n, self.nodes.len());
        for (p, &v) in self.nodes.iter().enumerate() {
            if comp.nodes.contains(&v) {
                m[(v, p)] = BigRational::one();
            }
        }
        LatticeMap::new(
            self.primed.basis(BasisKind::FundamentalWeights),
            self.partition.system.basis(BasisKind::FundamentalWeights),
            m,
        )
    }
}

pub fn build_maps(p: &SimpleRootPartition) -> Result<ReductionMaps> {
    build_maps_with(p, &[])
}

pub fn build_maps_with(p: &SimpleRootPartition, faults: &[Fault]) -> Result<ReductionMaps> {
    let r = &p.system;
    let n = r.rank();
    let nodes = p.primed_nodes();
    let m = nodes.len();
    let primed = if p.components.is_empty() {
        RootSystem::trivial()
    } else {
        let parts: Vec<RootSystem> = p.components.iter().map(|c| RootSystem::build(c.label)).collect();
        let product = RootSystem::product(&parts)?;
        let name = format!("{}'", product.name());
        product.renamed(name)
    };

    // s(x) = x - sum_{a in pi_r} <x, f_a> a^vee; the coefficients are rows of C^-1
    let cinv = r.cartan_inverse();
    for &a in &p.pi_r {
        for j in 0..n {
            if !cinv[(a, j)].is_integer() {
                return Err(Error::NonIntegralCorrection {
                    coweight: j + 1,
                    weight: a + 1,
                });
            }
        }
    }
    let c = r.cartan().to_rational();
    let all: Vec<usize> = (0..n).collect();
    let correction = &c.select(&nodes, &p.pi_r) * &cinv.select(&p.pi_r, &all);
    let mut s = RatMatrix::zeros(m, n);
    for (row, &v) in nodes.iter().enumerate() {
        for j in 0..n {
            let id = if j == v { BigRational::one() } else { BigRational::zero() };
            s[(row, j)] = id - &correction[(row, j)];
        }
    }

    let drop = faults.contains(&Fault::DropTMultiplier);
    let multipliers: Vec<u32> = p.components.iter().map(|c| if drop { 1 } else { c.d }).collect();
    let mut t = RatMatrix::zeros(n, m);
    let mut t_dual = RatMatrix::zeros(n, m);
    let mut col = 0;
    for (comp, &k) in p.components.iter().zip(&multipliers) {
        for &v in &comp.nodes {
            t[(v, col)] = BigRational::from_integer(BigInt::from(k));
            t_dual[(v, col)] = BigRational::one();
            col += 1;
        }
    }

    Ok(ReductionMaps {
        s: LatticeMap::new(
            r.basis(BasisKind::FundamentalCoweights),
            primed.basis(BasisKind::FundamentalCoweights),
            s,
        ),
        t: LatticeMap::new(
            primed.basis(BasisKind::FundamentalWeights),
            r.basis(BasisKind::FundamentalWeights),
            t,
        ),
        t_dual: LatticeMap::new(
            primed.basis(BasisKind::FundamentalCoweights),
            r.basis(BasisKind::FundamentalCoweights),
            t_dual,
        ),
        partition: p.clone(),
        primed,
        nodes,
        multipliers,
    })
}
