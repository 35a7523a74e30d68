use fivepoint::{coordinates_in_span, Matrix, ProjConfig, Rational, Scalar};
use num_traits::Zero;
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| Rational::from_ratio(a, b))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(entry(), rows * cols).prop_map(move |data| Matrix::new(rows, cols, data).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

proptest! {
    #[test]
    fn rank_is_invariant_under_transpose(a in any_matrix()) {
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(4, 4), b in matrix(4, 4)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
    }

    #[test]
    fn determinant_vanishes_exactly_below_full_rank(a in matrix(3, 3)) {
        prop_assert_eq!(a.determinant().unwrap().is_zero(), a.rank() < 3);
    }

    #[test]
    fn rref_is_idempotent_and_keeps_rank(a in any_matrix()) {
        let (r, pivots) = a.rref();
        prop_assert_eq!(pivots.len(), a.rank());
        prop_assert_eq!(r.rref().0, r.clone());
        prop_assert_eq!(r.rank(), a.rank());
    }

    #[test]
    fn null_space_has_complementary_dimension(a in any_matrix()) {
        let kernel = a.null_space();
        prop_assert_eq!(kernel.len(), a.cols() - a.rank());
        for x in &kernel {
            prop_assert!(a.mul_vec(x).unwrap().iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn span_coordinates_reconstruct_the_target(
        basis in prop::collection::vec(prop::collection::vec(entry(), 4), 3),
        coeffs in prop::collection::vec(entry(), 3),
    ) {
        prop_assume!(Matrix::from_columns(4, &basis).unwrap().rank() == 3);
        let target: Vec<Rational> = (0..4)
            .map(|k| (0..3).fold(Rational::from_int(0), |acc, j| acc + coeffs[j].clone() * basis[j][k].clone()))
            .collect();
        prop_assume!(target.iter().any(|x| !x.is_zero()));
        let mut columns = basis.clone();
        columns.push(target);
        let v = ProjConfig::new(4, columns).unwrap();
        prop_assert_eq!(coordinates_in_span(&v, &[0, 1, 2], 3).unwrap(), coeffs);
    }
}
