use fivepoint::enumeration::fixed_parameter;
use fivepoint::{
    catalogue, classify, compute_rank_matrix, orbit_dimension, same_orbit, verify_realizability, Config, Family,
    Matrix, Orbit, Rational, RationalParameter, Scalar,
};
use proptest::prelude::*;

/// Orbit dimension as 16 minus the dimension of the stabilizer algebra
/// `{A : A v_i is proportional to v_i for every i}`, solved for `(A, lambda)` directly.
fn orbit_dimension_oracle(v: &Config) -> usize {
    let (n, m) = (v.n(), v.m());
    let mut rows = Vec::new();
    for i in 0..m {
        for r in 0..n {
            let mut row = vec![Rational::from_int(0); n * n + m];
            for c in 0..n {
                row[r * n + c] = v.column(i)[c].clone();
            }
            row[n * n + i] = -v.column(i)[r].clone();
            rows.push(row);
        }
    }
    n * n - Matrix::from_rows(rows).unwrap().null_space().len()
}

#[test]
fn orbit_dimension_matches_the_stabilizer_oracle() {
    for e in catalogue().entries() {
        let v: Config = verify_realizability(&e.rank_matrix).unwrap();
        assert_eq!(orbit_dimension(&v), orbit_dimension_oracle(&v), "{}", e.family);
    }
    let v = Config::from_int_columns(4, &[&[0, 0, 1, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 0, 0], &[1, 2, 0, 0]])
        .unwrap();
    assert_eq!(orbit_dimension(&v), 10);
}

#[test]
fn the_generic_configuration() {
    let v = Config::from_int_columns(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 1, 1]])
        .unwrap();
    let o = classify(&v).unwrap();
    assert_eq!(o.type_label(), "(5,10,10)");
    assert!(!o.is_parametrized());
    assert_eq!(orbit_dimension(&v), 15);
}

#[test]
fn parameters_are_read_in_the_orbit_frame() {
    let v = Config::from_int_columns(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 1, 1, 0], &[1, 2, 3, 0]])
        .unwrap();
    let o = classify(&v).unwrap();
    assert_eq!(o.family(), &Family::Rank3);
    assert_eq!(o.parameter().unwrap().to_strings(), ["[1:2:3]"]);

    let swapped = v.reorder(&[4, 1, 2, 3, 0]);
    let o = classify(&swapped).unwrap();
    assert_eq!(o.type_label(), "(5,10)");
    assert_eq!(compute_rank_matrix(&o.representative()), compute_rank_matrix(&swapped));
    assert!(same_orbit(&o.representative(), &swapped).unwrap());
}

#[test]
fn non_generic_parameters_are_rejected() {
    let p = RationalParameter::from_ints(&[&[1, 1, 1]]).unwrap();
    assert!(Orbit::new(Family::Rank3, Some(p)).is_err());
    let p = RationalParameter::from_ints(&[&[1, 2], &[1, 2]]).unwrap();
    assert!(Orbit::new(Family::Rank2, Some(p)).is_err());
}

#[test]
fn classification_needs_five_points_in_three_space() {
    let v = Config::from_int_columns(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 3]]).unwrap();
    assert!(matches!(classify(&v), Err(fivepoint::Error::UnsupportedShape { n: 3, m: 5 })));
}

fn invertible() -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-4i64..=4, 16)
        .prop_map(|d| Matrix::new(4, 4, d.into_iter().map(Rational::from_int).collect()).unwrap())
        .prop_filter("invertible", |g| g.rank() == 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_is_invariant_under_the_group(index in 0usize..184, g in invertible()) {
        let e = &catalogue().entries()[index];
        let v: Config = verify_realizability(&e.rank_matrix).unwrap();
        let moved = v.transform(&g).unwrap();
        let o = classify(&moved).unwrap();
        prop_assert_eq!(&o, &classify(&v).unwrap());
        let param = e.family.parameter_kind().map(fixed_parameter::<Rational>);
        prop_assert_eq!(o.parameter(), param.as_ref());
    }
}
