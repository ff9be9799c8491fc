//! Reduced root systems with exact coordinates.
//!
//! Roots are stored in simple-root coordinates and coroots in simple-coroot
//! coordinates. The Cartan matrix follows `C[i][j] = <alpha_j^vee, alpha_i>`,
//! so a vector with simple-root coordinates `a` has weight coordinates
//! `C^T a`, and the canonical pairing of `a` with a covector with
//! simple-coroot coordinates `b` is `a^T C b`.

mod label;
mod lattice_map;
pub(crate) mod phi;

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use label::{Family, TypeLabel};
pub use lattice_map::{Basis, BasisKind, LatticeMap};

use crate::error::{Error, Result};
use crate::zlinalg::{invert_rational, solve_in_lattice, IntMatrix, IntVector, RatMatrix};

/// One irreducible factor of a root system and the index of its first node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Component {
    pub label: TypeLabel,
    pub offset: usize,
}

impl Component {
    pub fn nodes(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.label.rank()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    name: String,
    components: Vec<Component>,
    cartan: IntMatrix,
    cartan_inverse: RatMatrix,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    root_form: RatMatrix,
    coroot_form: RatMatrix,
    d_root: Vec<u32>,
    d_coroot: Vec<u32>,
}

impl RootSystem {
    pub fn build(label: TypeLabel) -> RootSystem {
        let cartan = label.cartan_matrix();
        let small = small_entries(&cartan);
        let roots = reflection_closure(&small);
        let coroots = reflection_closure(&transpose_small(&small));
        let root_form = normalized_form(&small, &roots);
        let coroot_form = normalized_form(&transpose_small(&small), &coroots);
        let d_root = diagonal_u32(&root_form);
        let d_coroot = diagonal_u32(&coroot_form);
        let cartan_inverse = invert_rational(&cartan).expect("Cartan matrices are nonsingular");
        RootSystem {
            name: label.to_string(),
            components: vec![Component { label, offset: 0 }],
            cartan,
            cartan_inverse,
            roots,
            coroots,
            root_form,
            coroot_form,
            d_root,
            d_coroot,
        }
    }

    /// Rank-zero system, the neutral element for [`RootSystem::product`].
    pub fn trivial() -> RootSystem {
        RootSystem {
            name: "1".to_string(),
            components: Vec::new(),
            cartan: IntMatrix::zeros(0, 0),
            cartan_inverse: RatMatrix::zeros(0, 0),
            roots: Vec::new(),
            coroots: Vec::new(),
            root_form: RatMatrix::zeros(0, 0),
            coroot_form: RatMatrix::zeros(0, 0),
            d_root: Vec::new(),
            d_coroot: Vec::new(),
        }
    }

    /// Parses `E7` or a product such as `A1xB3`.
    pub fn parse(label: &str) -> Result<RootSystem> {
        let parts = label
            .split(['x', 'X'])
            .map(|p| p.parse().map(Self::build))
            .collect::<Result<Vec<_>>>()?;
        Self::product(&parts)
    }

    /// Orthogonal direct sum; node indices of later factors are shifted.
    pub fn product(systems: &[RootSystem]) -> Result<RootSystem> {
        if systems.is_empty() {
            return Err(Error::EmptyProduct);
        }
        if systems.len() == 1 {
            return Ok(systems[0].clone());
        }
        let total: usize = systems.iter().map(RootSystem::rank).sum();
        let mut components = Vec::new();
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let mut offset = 0;
        for s in systems {
            components.extend(s.components.iter().map(|c| Component {
                label: c.label,
                offset: c.offset + offset,
            }));
            let embed = |v: &Vec<i64>| {
                let mut w = vec![0; total];
                w[offset..offset + v.len()].copy_from_slice(v);
                w
            };
            roots.extend(s.roots.iter().map(embed));
            coroots.extend(s.coroots.iter().map(embed));
            offset += s.rank();
        }
        roots.sort();
        coroots.sort();
        let names: Vec<&str> = systems
            .iter()
            .filter(|s| s.rank() > 0)
            .map(|s| s.name.as_str())
            .collect();
        Ok(RootSystem {
            name: if names.is_empty() {
                "1".to_string()
            } else {
                names.join("x")
            },
            components,
            cartan: IntMatrix::direct_sum(&systems.iter().map(|s| &s.cartan).collect::<Vec<_>>()),
            cartan_inverse: RatMatrix::direct_sum(
                &systems.iter().map(|s| &s.cartan_inverse).collect::<Vec<_>>(),
            ),
            roots,
            coroots,
            root_form: RatMatrix::direct_sum(
                &systems.iter().map(|s| &s.root_form).collect::<Vec<_>>(),
            ),
            coroot_form: RatMatrix::direct_sum(
                &systems.iter().map(|s| &s.coroot_form).collect::<Vec<_>>(),
            ),
            d_root: systems.iter().flat_map(|s| s.d_root.iter().copied()).collect(),
            d_coroot: systems.iter().flat_map(|s| s.d_coroot.iter().copied()).collect(),
        })
    }

    /// Same system under another name; basis tags follow the name.
    pub fn renamed(mut self, name: impl Into<String>) -> RootSystem {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.cartan.rows()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    /// The label of an irreducible system.
    pub fn irreducible_label(&self) -> Result<TypeLabel> {
        match self.components.as_slice() {
            [c] => Ok(c.label),
            _ => Err(Error::Reducible(self.name.clone())),
        }
    }

    pub fn component_of(&self, node: usize) -> &Component {
        self.components
            .iter()
            .find(|c| c.nodes().contains(&node))
            .expect("node index in range")
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &RatMatrix {
        &self.cartan_inverse
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// Gram matrix of ( , ) on simple roots, short roots of each component
    /// having squared length 1.
    pub fn root_form(&self) -> &RatMatrix {
        &self.root_form
    }

    /// Gram matrix of ( , )^vee on simple coroots, normalized the same way.
    pub fn coroot_form(&self) -> &RatMatrix {
        &self.coroot_form
    }

    /// `(alpha_i, alpha_i)` for each simple root.
    pub fn d_root(&self) -> &[u32] {
        &self.d_root
    }

    /// `(alpha_i^vee, alpha_i^vee)^vee` for each simple root.
    pub fn d_coroot(&self) -> &[u32] {
        &self.d_coroot
    }

    pub fn basis(&self, kind: BasisKind) -> Basis {
        Basis::new(kind, self.name.clone())
    }

    /// Columns are the fundamental weights in simple-root coordinates.
    pub fn fundamental_weights(&self) -> RatMatrix {
        self.cartan_inverse.transpose()
    }

    /// Columns are the fundamental coweights in simple-coroot coordinates.
    pub fn fundamental_coweights(&self) -> RatMatrix {
        self.cartan_inverse.clone()
    }

    /// Canonical pairing of a vector (simple-root coordinates) with a
    /// covector (simple-coroot coordinates).
    pub fn pairing(&self, root_coords: &[BigRational], coroot_coords: &[BigRational]) -> BigRational {
        let cb = self.cartan.to_rational().mul_vec(coroot_coords);
        root_coords
            .iter()
            .zip(&cb)
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Change of coordinates between two bases of the same space.
    pub fn basis_change(&self, from: BasisKind, to: BasisKind) -> Result<LatticeMap> {
        use BasisKind::*;
        let matrix = match (from, to) {
            _ if from == to => RatMatrix::identity(self.rank()),
            (SimpleRoots, FundamentalWeights) => self.cartan.transpose().to_rational(),
            (FundamentalWeights, SimpleRoots) => self.fundamental_weights(),
            (SimpleCoroots, FundamentalCoweights) => self.cartan.to_rational(),
            (FundamentalCoweights, SimpleCoroots) => self.fundamental_coweights(),
            _ => {
                return Err(Error::BasisMismatch {
                    left: self.basis(to).to_string(),
                    right: self.basis(from).to_string(),
                })
            }
        };
        Ok(LatticeMap::new(self.basis(from), self.basis(to), matrix))
    }

    /// Membership in the root lattice for a vector given on fundamental weights.
    pub fn root_lattice_coordinates(&self, weight_coords: &[BigRational]) -> Result<Option<IntVector>> {
        solve_in_lattice(&self.cartan.transpose(), weight_coords)
    }

    pub fn in_root_lattice(&self, weight_coords: &[BigRational]) -> Result<bool> {
        Ok(self.root_lattice_coordinates(weight_coords)?.is_some())
    }

    /// Membership in the coroot lattice for a covector given on fundamental coweights.
    pub fn in_coroot_lattice(&self, coweight_coords: &[BigRational]) -> Result<bool> {
        Ok(solve_in_lattice(&self.cartan, coweight_coords)?.is_some())
    }

    /// Squared length `(x, x)` of a vector in simple-root coordinates.
    pub fn root_norm(&self, root: &[i64]) -> BigRational {
        quadratic(&self.root_form, root)
    }

    /// The coroot of a root, in simple-coroot coordinates.
    pub fn coroot_of(&self, root: &[i64]) -> Vec<BigRational> {
        let len = self.root_norm(root);
        root.iter()
            .enumerate()
            .map(|(i, &a)| BigRational::from_integer(a.into()) * &self.root_form[(i, i)] / &len)
            .collect()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && !self.cartan[(i, j)].is_zero()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| self.adjacent(i, j))
    }

    /// All permutations of the nodes preserving the Cartan matrix.
    pub fn dynkin_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend_automorphism(&mut perm, &mut used, &mut out);
        out
    }

    fn extend_automorphism(&self, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let i = perm.len();
        if i == self.rank() {
            out.push(perm.clone());
            return;
        }
        for candidate in 0..self.rank() {
            if used[candidate] {
                continue;
            }
            let consistent = (0..i).chain(std::iter::once(i)).all(|k| {
                let image_k = if k == i { candidate } else { perm[k] };
                self.cartan[(i, k)] == self.cartan[(candidate, image_k)]
                    && self.cartan[(k, i)] == self.cartan[(image_k, candidate)]
            });
            if consistent {
                used[candidate] = true;
                perm.push(candidate);
                self.extend_automorphism(perm, used, out);
                perm.pop();
                used[candidate] = false;
            }
        }
    }
}

fn small_entries(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_i64().expect("Cartan entries are small")).collect())
        .collect()
}

fn transpose_small(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = c.len();
    (0..n).map(|i| (0..n).map(|j| c[j][i]).collect()).collect()
}

/// Closure of the simple roots under `s_i(x) = x - <alpha_i^vee, x> alpha_i`,
/// where `<alpha_i^vee, x> = sum_j x_j C[j][i]`. Returned sorted.
pub(crate) fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        if seen.insert(e.clone()) {
            queue.push_back(e);
        }
    }
    while let Some(x) = queue.pop_front() {
        for i in 0..n {
            let coeff: i64 = (0..n).map(|j| x[j] * cartan[j][i]).sum();
            if coeff == 0 {
                continue;
            }
            let mut y = x.clone();
            y[i] -= coeff;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort();
    roots
}

/// The W-invariant form determined by the Cartan matrix, scaled on each
/// connected component so that the shortest root there has squared length 1.
fn normalized_form(cartan: &[Vec<i64>], roots: &[Vec<i64>]) -> RatMatrix {
    let n = cartan.len();
    let rat = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut len: Vec<Option<BigRational>> = vec![None; n];
    let mut component = vec![usize::MAX; n];
    let mut n_components = 0;
    for start in 0..n {
        if len[start].is_some() {
            continue;
        }
        len[start] = Some(BigRational::one());
        component[start] = n_components;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j == i || cartan[i][j] == 0 || len[j].is_some() {
                    continue;
                }
                // C[i][j] / C[j][i] = (a_i, a_i) / (a_j, a_j)
                let li = len[i].clone().unwrap();
                len[j] = Some(li * rat(cartan[j][i]) / rat(cartan[i][j]));
                component[j] = n_components;
                stack.push(j);
            }
        }
        n_components += 1;
    }
    let len: Vec<BigRational> = len.into_iter().map(Option::unwrap).collect();
    let mut gram = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = rat(cartan[i][j]) * &len[j] / rat(2);
        }
    }
    let mut shortest: Vec<Option<BigRational>> = vec![None; n_components];
    for r in roots {
        let Some(i) = r.iter().position(|&x| x != 0) else { continue };
        let q = quadratic(&gram, r);
        let slot = &mut shortest[component[i]];
        if slot.as_ref().is_none_or(|s| q < *s) {
            *slot = Some(q);
        }
    }
    for i in 0..n {
        for j in 0..n {
            if component[i] == component[j] {
                let s = shortest[component[i]].as_ref().expect("every component has roots");
                let v = &gram[(i, j)] / s;
                gram[(i, j)] = v;
            }
        }
    }
    gram
}

fn quadratic(gram: &RatMatrix, x: &[i64]) -> BigRational {
    let mut acc = BigRational::zero();
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in x.iter().enumerate() {
            if b != 0 {
                acc += &gram[(i, j)] * BigRational::from_integer(BigInt::from(a * b));
            }
        }
    }
    acc
}

fn diagonal_u32(m: &RatMatrix) -> Vec<u32> {
    (0..m.rows())
        .map(|i| {
            let d = &m[(i, i)];
            assert!(d.is_integer(), "normalized simple root lengths are integral");
            d.to_integer().to_u32().expect("small length")
        })
        .collect()
}

#[cfg(test)]
mod tests;
