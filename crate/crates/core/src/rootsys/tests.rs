use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::*;
use crate::zlinalg::int_vector;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn sys(label: &str) -> RootSystem {
    RootSystem::parse(label).unwrap()
}

/// Reflection closure driven directly by a Gram matrix, independent of the
/// Cartan-matrix route used by the library.
fn gram_closure(gram: &[[i64; 2]; 2]) -> BTreeSet<Vec<i64>> {
    let ip = |x: &[i64], y: &[i64]| -> i64 {
        (0..2).map(|i| (0..2).map(|j| x[i] * gram[i][j] * y[j]).sum::<i64>()).sum()
    };
    let mut set: BTreeSet<Vec<i64>> = [vec![1, 0], vec![0, 1]].into_iter().collect();
    loop {
        let mut grew = false;
        let current: Vec<Vec<i64>> = set.iter().cloned().collect();
        for a in &current {
            for x in &current {
                let num = 2 * ip(a, x);
                let den = ip(a, a);
                assert_eq!(num % den, 0);
                let c = num / den;
                let y: Vec<i64> = x.iter().zip(a).map(|(xi, ai)| xi - c * ai).collect();
                grew |= set.insert(y);
            }
        }
        if !grew {
            return set;
        }
    }
}

#[test]
fn a2_roots_match_gram_oracle() {
    let a2 = sys("A2");
    assert_eq!(a2.cartan(), &IntMatrix::from_rows(&[[2, -1], [-1, 2]]));
    // two simple roots at 120 degrees
    let oracle = gram_closure(&[[2, -1], [-1, 2]]);
    let ours: BTreeSet<Vec<i64>> = a2.roots().iter().cloned().collect();
    assert_eq!(ours, oracle);
    assert_eq!(ours.len(), 6);
}

#[test]
fn g2_roots_and_lengths() {
    let g2 = sys("G2");
    let oracle = gram_closure(&[[2, -3], [-3, 6]]);
    let ours: BTreeSet<Vec<i64>> = g2.roots().iter().cloned().collect();
    assert_eq!(ours, oracle);
    assert_eq!(ours.len(), 12);
    let lengths: BTreeSet<u32> = g2.d_root().iter().copied().collect();
    assert_eq!(lengths, [1, 3].into_iter().collect());
}

#[test]
fn b2_coroot_lengths() {
    let b2 = sys("B2");
    assert_eq!(b2.roots().len(), 8);
    assert_eq!(b2.d_coroot(), &[1, 2]);
    assert_eq!(b2.d_root(), &[2, 1]);
}

#[test]
fn census() {
    for label in TypeLabel::catalog(8) {
        let n = label.rank();
        let expected = match (label.family(), n) {
            (Family::A, _) => n * (n + 1),
            (Family::B | Family::C, _) => 2 * n * n,
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, 8) => 240,
            (Family::F, _) => 48,
            (Family::G, _) => 12,
            _ => unreachable!(),
        };
        let r = RootSystem::build(label);
        assert_eq!(r.roots().len(), expected, "{label}");
        assert_eq!(r.coroots().len(), expected, "{label} coroots");
    }
}

#[test]
fn roots_are_closed_and_sign_coherent() {
    for label in TypeLabel::catalog(6) {
        let r = RootSystem::build(label);
        let set: BTreeSet<&Vec<i64>> = r.roots().iter().collect();
        let c = r.cartan();
        for x in r.roots() {
            assert!(x.iter().all(|&v| v >= 0) || x.iter().all(|&v| v <= 0));
            for i in 0..r.rank() {
                let coeff: BigInt = (0..r.rank()).map(|j| BigInt::from(x[j]) * &c[(j, i)]).sum();
                let mut y = x.clone();
                y[i] -= i64::try_from(&coeff).unwrap();
                assert!(set.contains(&y), "{label}: not closed");
            }
        }
    }
}

#[test]
fn forms_are_normalized_and_compatible() {
    for label in TypeLabel::catalog(8) {
        let r = RootSystem::build(label);
        let min_root = r.roots().iter().map(|a| r.root_norm(a)).min().unwrap();
        assert!(min_root.is_one(), "{label}");
        let cf = r.coroot_form();
        let coroot_norm = |b: &Vec<i64>| {
            let mut acc = BigRational::zero();
            for i in 0..b.len() {
                for j in 0..b.len() {
                    acc += &cf[(i, j)] * BigRational::from_integer((b[i] * b[j]).into());
                }
            }
            acc
        };
        let min_coroot = r.coroots().iter().map(coroot_norm).min().unwrap();
        assert!(min_coroot.is_one(), "{label}");
        let g = r.root_form();
        for i in 0..r.rank() {
            for j in 0..r.rank() {
                let lhs = rat(2, 1) * &g[(i, j)] / &g[(j, j)];
                assert_eq!(lhs, BigRational::from_integer(r.cartan()[(i, j)].clone()));
            }
        }
        // d_root * d_coroot is the squared length ratio of the component
        let ratio = match label.family() {
            Family::A | Family::D | Family::E => 1,
            Family::B | Family::C | Family::F => 2,
            Family::G => 3,
        };
        for i in 0..r.rank() {
            assert_eq!(r.d_root()[i] * r.d_coroot()[i], ratio, "{label} node {i}");
        }
    }
}

#[test]
fn coroot_evaluation_matches_the_form() {
    for label in ["B3", "C4", "G2", "F4", "E6"] {
        let r = sys(label);
        let g = r.root_form();
        for alpha in r.roots() {
            let coroot = r.coroot_of(alpha);
            assert!(coroot.iter().all(|x| x.is_integer()));
            let alpha_q: Vec<BigRational> =
                alpha.iter().map(|&a| BigRational::from_integer(a.into())).collect();
            let len = r.root_norm(alpha);
            for k in 0..r.rank() {
                let mut e = vec![BigRational::zero(); r.rank()];
                e[k] = BigRational::one();
                let lhs = r.pairing(&e, &coroot);
                let ip: BigRational =
                    (0..r.rank()).fold(BigRational::zero(), |acc, i| acc + &alpha_q[i] * &g[(i, k)]);
                assert_eq!(lhs, rat(2, 1) * ip / &len, "{label}");
            }
        }
    }
}

#[test]
fn products() {
    let a2 = sys("A2");
    assert_eq!(RootSystem::product(std::slice::from_ref(&a2)).unwrap(), a2);
    let a1 = sys("A1");
    let a1a1 = RootSystem::product(&[a1.clone(), a1.clone()]).unwrap();
    assert_eq!(a1a1.roots().len(), 4);
    assert_eq!(a1a1.cartan(), &IntMatrix::from_rows(&[[2, 0], [0, 2]]));
    assert_eq!(a1a1.name(), "A1xA1");
    let a1a2 = RootSystem::product(&[a1, a2]).unwrap();
    assert_eq!(a1a2.roots().len(), 8);
    assert_eq!(a1a2.components()[1].offset, 1);
    assert!(!a1a2.is_irreducible());
    assert!(matches!(RootSystem::product(&[]), Err(Error::EmptyProduct)));
}

#[test]
fn fundamental_weight_examples() {
    let f = sys("A1").fundamental_weights();
    assert_eq!(f[(0, 0)], rat(1, 2));
    let f = sys("A2").fundamental_weights();
    assert_eq!(f.column(0), vec![rat(2, 3), rat(1, 3)]);
    let f = sys("D5").fundamental_weights();
    assert_eq!(f[(4, 4)], rat(5, 4));
}

#[test]
fn fundamental_coweight_examples() {
    assert_eq!(sys("A1").fundamental_coweights()[(0, 0)], rat(1, 2));
    assert_eq!(sys("A2").fundamental_coweights()[(0, 0)], rat(2, 3));
    let c3 = sys("C3");
    let f3v = c3.fundamental_coweights().column(2);
    assert_eq!(f3v, vec![rat(1, 2), rat(1, 1), rat(3, 2)]);
    let coweight_coords = c3
        .basis_change(BasisKind::SimpleCoroots, BasisKind::FundamentalCoweights)
        .unwrap()
        .apply(&f3v);
    assert!(!c3.in_coroot_lattice(&coweight_coords).unwrap());
    // the other two coweights of C3 do lie in the coroot lattice
    for i in 0..2 {
        let mut e = vec![BigRational::zero(); 3];
        e[i] = BigRational::one();
        assert!(c3.in_coroot_lattice(&e).unwrap());
    }
}

#[test]
fn weights_are_dual_to_coroots() {
    for label in TypeLabel::catalog(8) {
        let r = RootSystem::build(label);
        let f = r.fundamental_weights();
        let n = r.rank();
        for i in 0..n {
            for j in 0..n {
                let mut e = vec![BigRational::zero(); n];
                e[j] = BigRational::one();
                let v = r.pairing(&f.column(i), &e);
                let expected = if i == j { BigRational::one() } else { BigRational::zero() };
                assert_eq!(v, expected, "{label}");
            }
        }
    }
}

#[test]
fn phi_examples() {
    for label in ["A4", "D5", "E6", "E8"] {
        let r = sys(label);
        assert_eq!(r.phi().matrix(), &RatMatrix::identity(r.rank()), "{label}");
    }
    let b3 = sys("B3");
    assert_eq!(
        b3.phi().integer_matrix().unwrap(),
        IntMatrix::diagonal(int_vector(&[1, 1, 2]))
    );
    let g2 = sys("G2");
    let sq = g2.phi().compose(&g2.phi_dual()).unwrap();
    assert_eq!(sq.integer_matrix().unwrap(), IntMatrix::diagonal(int_vector(&[3, 3])));
    assert!(g2.phi_dual().compose(&g2.phi_dual()).is_err());
}

#[test]
fn phi_properties_hold_for_the_catalog() {
    for label in TypeLabel::catalog(8) {
        let report = RootSystem::build(label).check_phi_properties();
        assert!(report.passed(), "{label}: {:?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.verdicts.len(), 4);
    }
}

#[test]
fn phi_on_last_coweight_of_c() {
    for (label, in_root_lattice) in [("C5", false), ("C4", true)] {
        let r = sys(label);
        let n = r.rank();
        let w = r.phi_on_weights();
        let image = w.matrix().column(n - 1);
        let mut fn_ = vec![BigRational::zero(); n];
        fn_[n - 1] = BigRational::one();
        assert_eq!(image, fn_, "{label}: phi(f_n^vee) = f_n");
        assert_eq!(r.in_root_lattice(&image).unwrap(), in_root_lattice, "{label}");
    }
}

#[test]
fn phi_is_diagram_equivariant() {
    for label in ["A3", "A6", "D4", "E6"] {
        let r = sys(label);
        let autos = r.dynkin_automorphisms();
        assert!(autos.len() >= 2, "{label}");
        let phi = r.phi().matrix().clone();
        for p in autos {
            let n = r.rank();
            let mut perm = RatMatrix::zeros(n, n);
            for (i, &pi) in p.iter().enumerate() {
                perm[(pi, i)] = BigRational::one();
            }
            assert_eq!(&perm * &phi, &phi * &perm, "{label}");
        }
    }
    assert_eq!(sys("D4").dynkin_automorphisms().len(), 6);
    assert_eq!(sys("E7").dynkin_automorphisms().len(), 1);
    assert_eq!(sys("B3").dynkin_automorphisms().len(), 1);
}

#[test]
fn aliases_keep_their_own_numbering() {
    let c2 = sys("C2");
    let b2 = sys("B2");
    assert_eq!(c2.cartan(), &b2.cartan().transpose());
    assert_eq!(c2.d_coroot(), &[2, 1]);
    let d3 = sys("D3");
    assert_eq!(d3.roots().len(), 12);
    assert!(d3.adjacent(0, 2) && d3.adjacent(0, 1) && !d3.adjacent(1, 2));
}

#[test]
fn root_lattice_membership() {
    let b3 = sys("B3");
    let e = |i: usize| {
        let mut v = vec![BigRational::zero(); 3];
        v[i] = BigRational::one();
        v
    };
    assert!(b3.in_root_lattice(&e(0)).unwrap());
    assert!(b3.in_root_lattice(&e(1)).unwrap());
    assert!(!b3.in_root_lattice(&e(2)).unwrap());
    assert!(b3.in_root_lattice(&[rat(1, 2), rat(0, 1), rat(0, 1)]).is_ok());
    assert!(!b3.in_root_lattice(&[rat(1, 2), rat(0, 1), rat(0, 1)]).unwrap());
}
