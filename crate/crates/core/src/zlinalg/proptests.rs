use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use super::*;

fn small_matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-5i64..=5, r * c).prop_map(move |v| {
            IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn snf_is_a_valid_decomposition(m in small_matrix(6)) {
        let d = snf(&m);
        prop_assert_eq!(&(&d.left * &m) * &d.right, d.diagonal.clone());
        prop_assert!(d.left.is_unimodular());
        prop_assert!(d.right.is_unimodular());
        for i in 0..d.diagonal.rows() {
            for j in 0..d.diagonal.cols() {
                if i != j {
                    prop_assert!(d.diagonal[(i, j)].is_zero());
                }
            }
        }
        let f = d.invariant_factors();
        prop_assert!(f.iter().all(|x| !x.is_negative()));
        for w in f.windows(2) {
            if w[1].is_zero() {
                continue;
            }
            prop_assert!(!w[0].is_zero(), "zero precedes a nonzero factor");
            prop_assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
        }
    }

    #[test]
    fn snf_product_is_abs_det(m in (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(-5i64..=5, n * n).prop_map(move |v| {
            IntMatrix::new(n, n, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })) {
        let det = m.det().unwrap();
        prop_assume!(!det.is_zero());
        let prod: BigInt = snf(&m).invariant_factors().iter().product();
        prop_assert_eq!(prod, det.abs());
    }

    #[test]
    fn hnf_is_valid(m in small_matrix(5)) {
        let (h, u) = hnf(&m);
        prop_assert_eq!(&u * &m, h);
        prop_assert!(u.is_unimodular());
    }

    #[test]
    fn solve_recovers_images(
        m in small_matrix(5),
        seed in proptest::collection::vec(-4i64..=4, 5),
    ) {
        let x: Vec<BigInt> = seed.iter().take(m.cols()).map(|&v| BigInt::from(v)).collect();
        let b = m.mul_vec(&x);
        let sol = solve_in_lattice(&m, &to_rational_vector(&b)).unwrap();
        let sol = sol.expect("image vector must be a member");
        prop_assert_eq!(m.mul_vec(&sol), b);
    }

    #[test]
    fn inverse_round_trips(m in (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(-5i64..=5, n * n).prop_map(move |v| {
            IntMatrix::new(n, n, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })) {
        prop_assume!(!m.det().unwrap().is_zero());
        let inv = invert_rational(&m).unwrap();
        prop_assert_eq!(&m.to_rational() * &inv, RatMatrix::identity(m.rows()));
        prop_assert_eq!(&inv * &m.to_rational(), RatMatrix::identity(m.rows()));
    }
}
