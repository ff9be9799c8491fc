use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::zlinalg::{
    integer_kernel, invert_rational, lattice_basis, snf, to_integer_vector, IntMatrix, IntVector,
};

/// Element of a finite abelian group, one residue per generator.
pub type Element = Vec<u64>;

/// A named generator and a representative in the ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub lift: IntVector,
}

/// Quotient `Z^n / L` of an ambient integer lattice by a full-rank sublattice,
/// presented as a direct sum of cyclic groups on chosen generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
    generators: Vec<Generator>,
    /// Row `i` maps ambient coordinates to the residue of generator `i`.
    reduction: IntMatrix,
    /// Columns generate the sublattice, in ambient coordinates.
    relations: IntMatrix,
}

impl FiniteAbelianGroup {
    /// Builds `Z^n / relations Z^m`. `relations` must have rank `n`.
    ///
    /// With `preferred`, the listed ambient basis vectors become the
    /// generators; otherwise the Smith-form generators are used.
    pub fn quotient(
        relations: &IntMatrix,
        preferred: Option<&[usize]>,
        name: impl Fn(&[BigInt]) -> String,
    ) -> Result<Self> {
        let n = relations.rows();
        let d = snf(relations);
        if d.rank() != n {
            return Err(Error::NotWellDefined("sublattice does not have full rank".into()));
        }
        let keep: Vec<usize> = (0..n).filter(|&i| d.diagonal[(i, i)] != BigInt::from(1)).collect();
        let orders: Vec<u64> = keep
            .iter()
            .map(|&i| d.diagonal[(i, i)].to_u64().expect("small quotient"))
            .collect();
        let all_cols: Vec<usize> = (0..n).collect();
        let reduction = d.left.select(&keep, &all_cols);
        let left_inv = invert_rational(&d.left)?
            .to_integer()
            .expect("unimodular inverse is integral");
        let snf_group = FiniteAbelianGroup {
            generators: keep
                .iter()
                .map(|&i| {
                    let lift = left_inv.column(i);
                    Generator { name: name(&lift), lift }
                })
                .collect(),
            orders,
            reduction,
            relations: relations.clone(),
        };
        match preferred {
            None => Ok(snf_group),
            Some(indices) => {
                let lifts: Vec<IntVector> = indices
                    .iter()
                    .map(|&i| {
                        let mut e = vec![BigInt::zero(); n];
                        e[i] = BigInt::from(1);
                        e
                    })
                    .collect();
                snf_group.with_generators(lifts, &name)
            }
        }
    }

    /// Re-presents the group on new generators, whose orders must match the
    /// current cyclic decomposition position by position.
    pub fn with_generators(&self, lifts: Vec<IntVector>, name: impl Fn(&[BigInt]) -> String) -> Result<Self> {
        let k = self.rank();
        if lifts.len() != k {
            return Err(Error::BadGenerators(format!(
                "{} generators offered for a group with {} cyclic factors",
                lifts.len(),
                k
            )));
        }
        // columns: old coordinates of the new generators
        let images: Vec<Element> = lifts.iter().map(|l| self.reduce(l)).collect();
        for (j, img) in images.iter().enumerate() {
            if self.order_of(img) != self.orders[j] {
                return Err(Error::BadGenerators(format!(
                    "{} has order {} instead of {}",
                    name(&lifts[j]),
                    self.order_of(img),
                    self.orders[j]
                )));
            }
        }
        // invert the change of generators by exhaustive search
        let mut inverse_cols: Vec<Option<Element>> = vec![None; k];
        for t in self.elements() {
            let mut old = vec![0u64; k];
            for (j, &tj) in t.iter().enumerate() {
                for i in 0..k {
                    old[i] = (old[i] + tj * images[j][i]) % self.orders[i];
                }
            }
            if let Some(i) = (0..k).find(|&i| old[i] == 1 && (0..k).all(|l| l == i || old[l] == 0)) {
                inverse_cols[i].get_or_insert(t);
            }
        }
        let inverse_cols: Vec<Element> = inverse_cols
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::BadGenerators("offered generators do not span".into()))?;
        let mut inv = IntMatrix::zeros(k, k);
        for (i, col) in inverse_cols.iter().enumerate() {
            for (j, &v) in col.iter().enumerate() {
                inv[(j, i)] = BigInt::from(v);
            }
        }
        let regrouped = FiniteAbelianGroup {
            orders: self.orders.clone(),
            generators: lifts
                .into_iter()
                .map(|lift| Generator { name: name(&lift), lift })
                .collect(),
            reduction: &inv * &self.reduction,
            relations: self.relations.clone(),
        };
        for (j, g) in regrouped.generators.iter().enumerate() {
            let mut unit = vec![0; k];
            unit[j] = 1;
            debug_assert_eq!(regrouped.reduce(&g.lift), unit);
        }
        Ok(regrouped)
    }

    /// External direct sum; ambient lattices are concatenated.
    pub fn direct_sum(parts: &[FiniteAbelianGroup]) -> Self {
        let ambient: usize = parts.iter().map(|p| p.ambient_rank()).sum();
        let mut orders = Vec::new();
        let mut generators = Vec::new();
        let mut offset = 0;
        for p in parts {
            orders.extend_from_slice(&p.orders);
            for g in &p.generators {
                let mut lift = vec![BigInt::zero(); ambient];
                lift[offset..offset + g.lift.len()].clone_from_slice(&g.lift);
                generators.push(Generator {
                    name: g.name.clone(),
                    lift,
                });
            }
            offset += p.ambient_rank();
        }
        FiniteAbelianGroup {
            orders,
            generators,
            reduction: IntMatrix::direct_sum(&parts.iter().map(|p| &p.reduction).collect::<Vec<_>>()),
            relations: IntMatrix::direct_sum(&parts.iter().map(|p| &p.relations).collect::<Vec<_>>()),
        }
    }

    /// Orders of the chosen generators (a cyclic decomposition, not
    /// necessarily a divisibility chain for direct sums).
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Invariant factors `d1 | d2 | ...`, each greater than 1.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let d = snf(&IntMatrix::diagonal(self.orders.iter().map(|&o| BigInt::from(o))));
        d.invariant_factors()
            .iter()
            .map(|x| x.to_u64().expect("small"))
            .filter(|&x| x > 1)
            .collect()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn ambient_rank(&self) -> usize {
        self.reduction.cols()
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn zero(&self) -> Element {
        vec![0; self.rank()]
    }

    /// Class of an ambient lattice vector.
    pub fn reduce(&self, v: &[BigInt]) -> Element {
        let c = self.reduction.mul_vec(v);
        c.iter()
            .zip(&self.orders)
            .map(|(x, &d)| x.mod_floor(&BigInt::from(d)).to_u64().expect("residue fits"))
            .collect()
    }

    /// Class of an ambient vector given with rational entries; fails unless
    /// the vector is integral.
    pub fn reduce_rational(&self, v: &[BigRational]) -> Result<Element> {
        let v = to_integer_vector(v)
            .ok_or_else(|| Error::NotWellDefined(format!("{v:?} is not a lattice vector")))?;
        Ok(self.reduce(&v))
    }

    /// A representative of `x` in the ambient lattice.
    pub fn lift(&self, x: &[u64]) -> IntVector {
        let mut out = vec![BigInt::zero(); self.ambient_rank()];
        for (g, &c) in self.generators.iter().zip(x) {
            for (o, l) in out.iter_mut().zip(&g.lift) {
                *o += l * BigInt::from(c);
            }
        }
        out
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Element {
        x.iter()
            .zip(y)
            .zip(&self.orders)
            .map(|((a, b), d)| (a + b) % d)
            .collect()
    }

    pub fn scale(&self, k: u64, x: &[u64]) -> Element {
        x.iter().zip(&self.orders).map(|(a, d)| (a * (k % d)) % d).collect()
    }

    pub fn order_of(&self, x: &[u64]) -> u64 {
        x.iter()
            .zip(&self.orders)
            .map(|(&a, &d)| d / a.gcd(&d))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Every element, in lexicographic order of residues.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let total = self.order();
        (0..total).map(move |mut idx| {
            let mut x = vec![0; self.rank()];
            for i in (0..self.rank()).rev() {
                x[i] = idx % self.orders[i];
                idx /= self.orders[i];
            }
            x
        })
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .generators
            .iter()
            .zip(&self.orders)
            .map(|(g, d)| format!("Z/{d}<{}>", g.name))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Homomorphism between finite abelian groups, stored as the images of the
/// source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteAbelianGroup,
    target: FiniteAbelianGroup,
    images: Vec<Element>,
}

impl GroupHom {
    /// Builds a homomorphism from images of the source generators, checking
    /// that each respects the generator's order.
    pub fn new(source: FiniteAbelianGroup, target: FiniteAbelianGroup, images: Vec<Element>) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::DimensionMismatch {
                expected: source.rank(),
                found: images.len(),
            });
        }
        for (img, &d) in images.iter().zip(source.orders()) {
            if img.len() != target.rank() {
                return Err(Error::DimensionMismatch {
                    expected: target.rank(),
                    found: img.len(),
                });
            }
            if target.scale(d, img) != target.zero() {
                return Err(Error::NotWellDefined(format!(
                    "image {img:?} of a generator of order {d} does not have order dividing {d}"
                )));
            }
        }
        Ok(GroupHom {
            source,
            target,
            images,
        })
    }

    /// The map induced on quotients by a linear map of ambient lattices.
    ///
    /// `matrix` sends source ambient coordinates to target ambient
    /// coordinates. Fails unless the map sends the source lattice into the
    /// target lattice and the source sublattice into the target sublattice.
    pub fn induced(
        source: &FiniteAbelianGroup,
        target: &FiniteAbelianGroup,
        matrix: &crate::zlinalg::RatMatrix,
    ) -> Result<Self> {
        if matrix.cols() != source.ambient_rank() || matrix.rows() != target.ambient_rank() {
            return Err(Error::DimensionMismatch {
                expected: source.ambient_rank(),
                found: matrix.cols(),
            });
        }
        let integral = matrix.to_integer().ok_or_else(|| {
            Error::NotWellDefined("map does not send the lattice into the lattice".into())
        })?;
        let rel = source.relations();
        for j in 0..rel.cols() {
            let image = integral.mul_vec(&rel.column(j));
            if target.reduce(&image) != target.zero() {
                return Err(Error::NotWellDefined(format!(
                    "relation #{} maps to a nonzero class",
                    j + 1
                )));
            }
        }
        let images = source
            .generators()
            .iter()
            .map(|g| target.reduce(&integral.mul_vec(&g.lift)))
            .collect();
        GroupHom::new(source.clone(), target.clone(), images)
    }

    pub fn zero(source: FiniteAbelianGroup, target: FiniteAbelianGroup) -> Self {
        let images = vec![target.zero(); source.rank()];
        GroupHom {
            source,
            target,
            images,
        }
    }

    pub fn source(&self) -> &FiniteAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteAbelianGroup {
        &self.target
    }

    /// Images of the source generators, in target coordinates.
    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, x: &[u64]) -> Element {
        let mut out = self.target.zero();
        for (img, &c) in self.images.iter().zip(x) {
            out = self.target.add(&out, &self.target.scale(c, img));
        }
        out
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        if inner.target.orders() != self.source.orders() {
            return Err(Error::DimensionMismatch {
                expected: self.source.rank(),
                found: inner.target.rank(),
            });
        }
        let images = inner.images.iter().map(|y| self.apply(y)).collect();
        GroupHom::new(inner.source.clone(), self.target.clone(), images)
    }

    /// Pointwise multiple `k * self`.
    pub fn times(&self, k: u64) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(|y| self.target.scale(k, y)).collect(),
        }
    }

    /// Pointwise sum of homomorphisms with the same source and target.
    pub fn sum(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self
                .images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| self.target.add(a, b))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|y| y.iter().all(|&c| c == 0))
    }

    /// Bijectivity, decided by enumerating the source.
    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        self.source.elements().all(|x| seen.insert(self.apply(&x)))
    }

    /// Whether two maps agree on every element of the source.
    pub fn agrees_everywhere(&self, other: &GroupHom) -> bool {
        self.source.order() == other.source.order()
            && self.source.elements().all(|x| self.apply(&x) == other.apply(&x))
    }

    pub fn kernel_size(&self) -> u64 {
        let zero = self.target.zero();
        self.source.elements().filter(|x| self.apply(x) == zero).count() as u64
    }

    /// Invariant factors of the kernel, from the lattice
    /// `{x in Z^k : A x in diag(e) Z^m}` modulo `diag(d) Z^k`.
    pub fn kernel_invariant_factors(&self) -> Vec<u64> {
        let k = self.source.rank();
        let m = self.target.rank();
        if k == 0 {
            return Vec::new();
        }
        // [A | -diag(e)] (x, y)^T = 0
        let mut block = IntMatrix::zeros(m, k + m);
        for (j, img) in self.images.iter().enumerate() {
            for (i, &v) in img.iter().enumerate() {
                block[(i, j)] = BigInt::from(v);
            }
        }
        for (i, &e) in self.target.orders().iter().enumerate() {
            block[(i, k + i)] = -BigInt::from(e);
        }
        let kernel = integer_kernel(&block);
        let rows: Vec<usize> = (0..k).collect();
        let cols: Vec<usize> = (0..kernel.cols()).collect();
        let basis = lattice_basis(&kernel.select(&rows, &cols));
        let d = IntMatrix::diagonal(self.source.orders().iter().map(|&o| BigInt::from(o)));
        let rel = (&invert_rational(&basis).expect("full rank kernel lattice") * &d.to_rational())
            .to_integer()
            .expect("diag(d) Z^k lies inside the kernel lattice");
        snf(&rel)
            .invariant_factors()
            .iter()
            .map(|x| x.to_u64().expect("small"))
            .filter(|&x| x > 1)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[BigInt]) -> String {
        format!("{v:?}")
    }

    fn z(n: i64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::quotient(&IntMatrix::from_rows(&[[n]]), None, names).unwrap()
    }

    #[test]
    fn quotient_of_a2_cartan() {
        let g = FiniteAbelianGroup::quotient(&IntMatrix::from_rows(&[[2, -1], [-1, 2]]), Some(&[0]), names)
            .unwrap();
        assert_eq!(g.orders(), &[3]);
        assert_eq!(g.reduce(&[1.into(), 0.into()]), vec![1]);
        // f2 = -f1 modulo the root lattice
        assert_eq!(g.reduce(&[0.into(), 1.into()]), vec![2]);
        assert_eq!(g.reduce(&[2.into(), (-1).into()]), vec![0]);
    }

    #[test]
    fn reduce_lift_round_trip() {
        let rel = IntMatrix::from_rows(&[[2, 0, 0], [0, 4, 0], [0, 0, 6]]);
        let g = FiniteAbelianGroup::quotient(&rel, None, names).unwrap();
        assert_eq!(g.order(), 48);
        assert_eq!(g.invariant_factors(), vec![2, 2, 12]);
        for x in g.elements() {
            assert_eq!(g.reduce(&g.lift(&x)), x);
        }
    }

    #[test]
    fn bad_preferred_generators_are_rejected() {
        // repeating a generator cannot span Z/2 + Z/2
        let rel = IntMatrix::from_rows(&[[2, 0], [0, 2]]);
        let err = FiniteAbelianGroup::quotient(&rel, Some(&[0, 0]), names).unwrap_err();
        assert!(matches!(err, Error::BadGenerators(_)));
    }

    #[test]
    fn hom_checks_orders() {
        let z2 = z(2);
        let z4 = z(4);
        assert!(GroupHom::new(z2.clone(), z4.clone(), vec![vec![2]]).is_ok());
        assert!(GroupHom::new(z2, z4, vec![vec![1]]).is_err());
    }

    #[test]
    fn kernel_factors() {
        let z4 = z(4);
        let z2 = z(2);
        let h = GroupHom::new(z4.clone(), z2.clone(), vec![vec![1]]).unwrap();
        assert_eq!(h.kernel_invariant_factors(), vec![2]);
        assert_eq!(h.kernel_size(), 2);
        let zero = GroupHom::zero(z4.clone(), z2);
        assert_eq!(zero.kernel_invariant_factors(), vec![4]);
        let klein =
            FiniteAbelianGroup::quotient(&IntMatrix::from_rows(&[[2, 0], [0, 2]]), None, names).unwrap();
        let proj = GroupHom::new(klein.clone(), z(2), vec![vec![1], vec![1]]).unwrap();
        assert_eq!(proj.kernel_invariant_factors(), vec![2]);
        let id = GroupHom::new(klein.clone(), klein.clone(), vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(id.kernel_invariant_factors().is_empty());
        assert!(id.is_bijective());
        assert_eq!(GroupHom::zero(klein.clone(), klein).kernel_invariant_factors(), vec![2, 2]);
    }

    #[test]
    fn composition_and_scaling() {
        let z6 = z(6);
        let double = GroupHom::new(z6.clone(), z6.clone(), vec![vec![2]]).unwrap();
        let twice = double.compose(&double).unwrap();
        assert_eq!(twice.images(), &[vec![4]]);
        assert!(twice.agrees_everywhere(&GroupHom::new(z6.clone(), z6, vec![vec![1]]).unwrap().times(4)));
    }
}
