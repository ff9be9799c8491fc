use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{BasisKind, LatticeMap, RootSystem};
use crate::report::{Report, Verdict};
use crate::zlinalg::{to_integer_vector, RatMatrix};

fn rat(x: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl RootSystem {
    /// The map V* -> V sending each coroot `alpha^vee` to `d_alpha * alpha`,
    /// written from simple coroots to simple roots.
    pub fn phi(&self) -> LatticeMap {
        LatticeMap::new(
            self.basis(BasisKind::SimpleCoroots),
            self.basis(BasisKind::SimpleRoots),
            RatMatrix::diagonal(self.d_coroot().iter().map(|&d| rat(d))),
        )
    }

    /// The map V -> V* sending each root `alpha` to `d_{alpha^vee} * alpha^vee`.
    pub fn phi_dual(&self) -> LatticeMap {
        LatticeMap::new(
            self.basis(BasisKind::SimpleRoots),
            self.basis(BasisKind::SimpleCoroots),
            RatMatrix::diagonal(self.d_root().iter().map(|&d| rat(d))),
        )
    }

    /// `phi` written from fundamental coweights to fundamental weights.
    pub fn phi_on_weights(&self) -> LatticeMap {
        let into = self
            .basis_change(BasisKind::FundamentalCoweights, BasisKind::SimpleCoroots)
            .expect("same space");
        let out = self
            .basis_change(BasisKind::SimpleRoots, BasisKind::FundamentalWeights)
            .expect("same space");
        out.compose(&self.phi().compose(&into).expect("tags match"))
            .expect("tags match")
    }

    /// `(alpha^vee, alpha^vee)^vee` for a short root `alpha` of the component
    /// containing `node`. Every root is conjugate to a simple root, so a
    /// shortest simple root is a shortest root.
    pub fn d_short(&self, node: usize) -> BigRational {
        let form = self.root_form();
        let short = self
            .component_of(node)
            .nodes()
            .min_by(|&i, &j| form[(i, i)].cmp(&form[(j, j)]))
            .expect("component has nodes");
        let mut e = vec![0; self.rank()];
        e[short] = 1;
        self.coroot_norm(&self.coroot_of(&e))
    }

    fn coroot_norm(&self, coroot: &[BigRational]) -> BigRational {
        let form = self.coroot_form();
        let mut acc = BigRational::zero();
        for (i, a) in coroot.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in coroot.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                acc += &form[(i, j)] * a * b;
            }
        }
        acc
    }

    /// Mechanical check of the basic properties of `phi` and `phi^vee`.
    pub fn check_phi_properties(&self) -> Report {
        let mut report = Report::default();
        let n = self.rank();
        let phi = self.phi();
        let coweights = self.fundamental_coweights();
        let weights = self.fundamental_weights();
        let to_weights = self
            .basis_change(BasisKind::SimpleRoots, BasisKind::FundamentalWeights)
            .expect("same space");

        let mut failures = Vec::new();
        for i in 0..n {
            let image = phi.apply(&coweights.column(i));
            let w = to_weights.apply(&image);
            if to_integer_vector(&w).is_none() {
                failures.push(format!("phi(f{}v) has weight coordinates {}", i + 1, fmt_vec(&w)));
            }
        }
        report.push(Verdict::from_failures("phi.coweight_lattice", failures));

        let mut failures = Vec::new();
        for (k, root) in self.roots().iter().enumerate() {
            let coroot = self.coroot_of(root);
            let image = phi.apply(&coroot);
            if to_integer_vector(&image).is_none() {
                failures.push(format!("phi of coroot #{k} is {}", fmt_vec(&image)));
                continue;
            }
            let d = self.coroot_norm(&coroot);
            let expected: Vec<BigRational> = root
                .iter()
                .map(|&a| BigRational::from_integer(a.into()) * &d)
                .collect();
            if image != expected {
                failures.push(format!("phi(alpha^vee) != d_alpha alpha for root {root:?}"));
            }
        }
        report.push(Verdict::from_failures("phi.coroot_lattice", failures));

        let mut failures = Vec::new();
        for i in 0..n {
            let image = phi.apply(&coweights.column(i));
            let expected: Vec<BigRational> =
                weights.column(i).iter().map(|x| x * rat(self.d_coroot()[i])).collect();
            if image != expected {
                failures.push(format!(
                    "phi(f{}v) = {} but d f{} = {}",
                    i + 1,
                    fmt_vec(&image),
                    i + 1,
                    fmt_vec(&expected)
                ));
            }
        }
        report.push(Verdict::from_failures("phi.fundamental", failures));

        let square = phi.compose(&self.phi_dual()).expect("tags match");
        let mut failures = Vec::new();
        for comp in self.components() {
            let nodes: Vec<usize> = comp.nodes().collect();
            let block = square.matrix().select(&nodes, &nodes);
            let expected = RatMatrix::identity(nodes.len()).scale(&self.d_short(comp.offset));
            if block != expected {
                failures.push(format!("{}: phi phi^vee = {}", comp.label, block));
            }
        }
        report.push(Verdict::from_failures("phi.square", failures));
        report
    }
}

pub(crate) fn fmt_vec(v: &[BigRational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
