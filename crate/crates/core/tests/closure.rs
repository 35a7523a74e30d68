use fivepoint::closure::{
    closure_verdict, face_degeneration, fibre_closure, fibre_closure_verdict, ideal_generators, ideal_values,
    ideal_vanishes, orbit_closure_description, Slot,
};
use fivepoint::{
    catalogue, classify, compute_rank_matrix, orbit_dimension, ClosureComponent, Config, Error, Family, Orbit,
    Rational, RationalParameter, Scalar, Splitting, Subset, Verdict,
};

fn orbit(tag: &str, points: &[&[i64]]) -> Orbit {
    let param = (!points.is_empty()).then(|| RationalParameter::from_ints(points).unwrap());
    Orbit::new(tag.parse().unwrap(), param).unwrap()
}

fn varpi(blocks: &[(&[usize], usize)]) -> ClosureComponent<Rational> {
    ClosureComponent::VarpiFibre(Splitting::from_labels(5, blocks).unwrap())
}

#[test]
fn double_point_family_decomposition() {
    let o = orbit("phi[5^2;{4,5}]", &[&[1, 2]]);
    let d = orbit_closure_description(&o).unwrap();
    let expected = vec![
        ClosureComponent::Orbit(o.clone()),
        varpi(&[(&[4, 5], 1), (&[1, 2, 3], 1)]),
        varpi(&[(&[1], 1), (&[2, 3, 4, 5], 1)]),
        varpi(&[(&[2], 1), (&[1, 3, 4, 5], 1)]),
        varpi(&[(&[3], 1), (&[1, 2, 4, 5], 1)]),
        varpi(&[(&[1, 2, 3, 4, 5], 1)]),
    ];
    assert_eq!(d.components, expected);
}

#[test]
fn point_and_line_family_contains_a_line_family() {
    let o = orbit("phi[4^2;1]", &[&[1, 2]]);
    let d = orbit_closure_description(&o).unwrap();
    let p = vec![Rational::from_int(1), Rational::from_int(2)];
    assert!(d.components.iter().any(|c| matches!(
        c,
        ClosureComponent::ParamFamily { family: Family::Rank2, slots, .. } if *slots == [Slot::Fixed(p.clone()), Slot::Free]
    )));
    let json = serde_json::to_value(&d).unwrap();
    assert_eq!(json[1]["kind"], "param_family");
    assert_eq!(json[1]["frame"], serde_json::json!([2, 3, 4, 5, 1]));
}

#[test]
fn single_orbit_families_close_over_fibres() {
    let o = classify(
        &Config::from_int_columns(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 1, 1, 0], &[1, 0, 0, 0]])
            .unwrap(),
    )
    .unwrap();
    assert_eq!(o.type_label(), "(4,6)");
    let d = orbit_closure_description(&o).unwrap();
    let below = fibre_closure(o.rank_matrix()).unwrap();
    let fibres: Vec<_> = d
        .components
        .iter()
        .map(|c| match c {
            ClosureComponent::Fibre(psi) => psi.clone(),
            other => panic!("unexpected component {other:?}"),
        })
        .collect();
    assert_eq!(fibres, below);
    assert!(below.iter().all(|psi| psi.leq(o.rank_matrix()).unwrap()));
    assert!(below.contains(o.rank_matrix()));
}

#[test]
fn fibre_closure_rejects_parametrized_fibres() {
    assert!(matches!(fibre_closure(&Family::Rank2.rank_matrix()), Err(Error::ParametrizedFibre(_))));
}

#[test]
fn verdicts_by_order() {
    let o = orbit("phi[5^3]", &[&[1, 2, 3]]);
    let verdict = |tag: &str| fibre_closure_verdict(&o, &tag.parse::<Family>().unwrap().rank_matrix()).unwrap();
    assert_eq!(verdict("phi[4^2;5]"), Verdict::IntersectsOnly);
    assert_eq!(verdict("phi[5^2]"), Verdict::Contains);
    let collinear = orbit("phi[5^3;{1,2,3}]", &[&[1, 2]]);
    assert_eq!(orbit_dimension(&collinear.representative()), orbit_dimension(&o.representative()));
    assert_eq!(verdict("phi[5^3;{1,2,3}]"), Verdict::Disjoint);
    let generic = Family::Split(Splitting::from_labels(5, &[(&[1, 2, 3, 4, 5], 4)]).unwrap()).rank_matrix();
    assert_eq!(fibre_closure_verdict(&o, &generic).unwrap(), Verdict::Disjoint);
    assert_eq!(serde_json::to_value(Verdict::IntersectsOnly).unwrap(), "intersects_only");
}

#[test]
fn closure_verdict_for_single_orbits_uses_leq() {
    let top = classify(
        &Config::from_int_columns(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 1, 1]])
            .unwrap(),
    )
    .unwrap();
    for e in catalogue().entries() {
        assert_eq!(closure_verdict(&top, &e.rank_matrix).unwrap(), Verdict::Contains);
    }
}

#[test]
fn known_generators() {
    let o = orbit("phi[5^2]", &[&[1, 2], &[1, 3]]);
    let ideal = ideal_generators(&o).unwrap();
    assert_eq!(ideal.generators.len(), 5);
    assert_eq!(ideal.generators[3].to_string(), "(3)|1,3||5,2| + |1,5||2,3|");
    assert!(ideal.generators.iter().all(|g| g.multidegree().is_some()));

    let line = orbit("phi[5^3;{1,2,3}]", &[&[1, 2]]);
    let ideal = ideal_generators(&line).unwrap();
    assert_eq!(ideal.generators.len(), 3);
    assert_eq!(ideal.generators[0].to_string(), "|1,2,3|");

    let plane = orbit("phi[5^3]", &[&[1, 2, 3]]);
    assert_eq!(ideal_generators(&plane).unwrap().generators.len(), 5);

    let single = classify(
        &Config::from_int_columns(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 1, 1]])
            .unwrap(),
    )
    .unwrap();
    assert!(matches!(ideal_generators(&single), Err(Error::NoIdealGenerators(_))));
}

#[test]
fn generators_vanish_on_the_orbit_and_not_on_neighbours() {
    let o = orbit("phi[5^2]", &[&[1, 2], &[1, 3]]);
    assert!(ideal_vanishes(&o, &o.representative()).unwrap());
    let other = orbit("phi[5^2]", &[&[1, 2], &[1, 5]]).representative();
    assert!(!ideal_vanishes(&o, &other).unwrap());
    let values = ideal_values(&o, &other).unwrap().unwrap();
    assert_eq!(values[3], Rational::from_int(3 - 5));

    let plane = orbit("phi[5^3]", &[&[1, 2, 3]]);
    let four_equal =
        Config::from_int_columns(4, &[&[1, 2, 0, 0], &[1, 2, 0, 0], &[0, 0, 1, 0], &[1, 2, 0, 0], &[1, 2, 0, 0]])
            .unwrap();
    assert!(ideal_vanishes(&plane, &four_equal).unwrap());
    let spatial =
        Config::from_int_columns(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 1, 1]])
            .unwrap();
    assert!(!ideal_vanishes(&plane, &spatial).unwrap());
}

#[test]
fn plane_family_generators_vanish_on_listed_degenerations() {
    let o = orbit("phi[5^3]", &[&[1, 2, 3]]);
    let d = orbit_closure_description(&o).unwrap();
    let degenerate: Vec<_> = d.components.iter().skip(1).take(5).collect();
    assert_eq!(degenerate.len(), 5);
    for c in degenerate {
        let ClosureComponent::Orbit(x) = c else { panic!("explicit degenerations are orbits") };
        assert!(ideal_vanishes(&o, &x.representative()).unwrap(), "{x:?}");
    }
}

#[test]
fn face_degeneration_examples() {
    let generic =
        Config::from_int_columns(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 2, 3, 4]])
            .unwrap();
    let w = face_degeneration(&generic, Subset::from_labels([1]), &Rational::from_int(0)).unwrap();
    let phi = compute_rank_matrix(&w);
    assert_eq!(phi.rho(), Splitting::from_labels(5, &[(&[1], 1), (&[2, 3, 4, 5], 3)]).unwrap());

    let w = face_degeneration(&generic, Subset::full(5), &Rational::from_int(7)).unwrap();
    assert!(w.projectively_equal(&generic));

    let plane = orbit("phi[5^3]", &[&[1, 2, 3]]).representative();
    let w = face_degeneration(&plane, Subset::from_labels([5]), &Rational::from_int(0)).unwrap();
    assert_eq!(compute_rank_matrix(&w), "phi[4^2;5]".parse::<Family>().unwrap().rank_matrix());

    let w = face_degeneration(&plane, Subset::from_labels([5]), &Rational::from_ratio(2, 3)).unwrap();
    assert_eq!(classify(&w).unwrap(), classify(&plane).unwrap());
}

#[test]
fn face_degeneration_needs_a_face() {
    let line =
        Config::from_int_columns(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
            .unwrap();
    let err = face_degeneration(&line, Subset::from_labels([1, 2]), &Rational::from_int(0)).unwrap_err();
    assert!(matches!(err, Error::NotAFace { .. }));
}
