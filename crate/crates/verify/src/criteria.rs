use std::time::{Duration, Instant};

use fivepoint::closure::{
    face_degeneration, fibre_closure_verdict, ideal_values, ideal_vanishes, orbit_closure_description,
};
use fivepoint::enumeration::{fixed_parameter, Catalogue, EXPECTED_MULTIPLICITIES, TYPE_LABELS};
use fivepoint::{
    catalogue, classify, compute_rank_matrix, compute_splitting, orbit_dimension, same_orbit, verify_realizability,
    ClosureComponent, Family, Parameter, ProjConfig, Rational, Scalar, Subset,
};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::oracle::{direct_sum_decomposition, one_parameter_limit};
use crate::random::{config, generic_parameter, nonzero_rational, representative, rng, translate};
use crate::Report;

fn parametrized_families() -> Vec<Family> {
    Family::named_instances().into_iter().filter(|f| f.parameter_kind().is_some()).collect()
}

fn canonical_parametrized_families() -> Vec<Family> {
    parametrized_families().into_iter().filter(|f| f.canonical() == *f).collect()
}

fn catalogued_representative(phi: &fivepoint::RankMatrix) -> ProjConfig<Rational> {
    verify_realizability(phi).expect("catalogued rank matrices are realizable")
}

/// Catalogue reproduction: label set, multiplicities and total, built within one second.
pub fn catalogue_reproduction() -> Report {
    let start = Instant::now();
    let built = Catalogue::build();
    let elapsed = start.elapsed();
    let counts = built.label_counts();
    let mut failures = Vec::new();
    let labels: Vec<&str> = counts.iter().map(|(l, _)| l.as_str()).collect();
    if labels != TYPE_LABELS {
        failures.push(format!("labels {labels:?} differ from the catalogue labels"));
    }
    for (label, expected) in TYPE_LABELS.iter().zip(EXPECTED_MULTIPLICITIES) {
        let found = counts.iter().find(|(l, _)| l == label).map_or(0, |(_, c)| *c);
        if found != expected {
            failures.push(format!("{label}: found {found}, expected {expected}"));
        }
    }
    let expected_total: usize = EXPECTED_MULTIPLICITIES.iter().sum();
    if built.len() != expected_total {
        failures.push(format!("total {} rank matrices, expected {expected_total}", built.len()));
    }
    if elapsed > Duration::from_secs(1) {
        failures.push(format!("enumeration took {elapsed:?}"));
    }
    Report::new(
        1,
        "catalogue reproduction",
        &failures,
        format!("{} labels, {} rank matrices in {elapsed:?}", counts.len(), built.len()),
    )
}

/// The splitting read off the rank matrix equals the finest direct-sum decomposition found by search.
pub fn splitting_agrees_with_search(seed: u64) -> Report {
    let mut rng = rng(seed, 2);
    let mut failures = Vec::new();
    let trials = 1000;
    for _ in 0..trials {
        let n = rng.gen_range(2..=4);
        let m = rng.gen_range(3..=5);
        let v = config(&mut rng, n, m);
        let expected = direct_sum_decomposition(&v);
        let rho: Vec<(Subset, usize)> =
            compute_rank_matrix(&v).rho().blocks().iter().map(|b| (b.indices, b.rank)).collect();
        let direct: Vec<(Subset, usize)> = compute_splitting(&v).blocks().iter().map(|b| (b.indices, b.rank)).collect();
        if rho != expected || direct != expected {
            failures.push(format!("{:?}: search {expected:?}, rho {rho:?}, splitting {direct:?}", v.columns()));
        }
    }
    Report::new(2, "splitting of the rank matrix", &failures, format!("{trials} random configurations"))
}

/// Classifying each catalogued representative returns its splitting type, label, family and parameter.
pub fn representative_round_trips() -> Report {
    let mut failures = Vec::new();
    for e in catalogue().entries() {
        let v = catalogued_representative(&e.rank_matrix);
        let param = e.family.parameter_kind().map(fixed_parameter::<Rational>);
        let o = match classify(&v) {
            Ok(o) => o,
            Err(err) => {
                failures.push(format!("{}: {err}", e.family));
                continue;
            }
        };
        let checks = [
            (compute_rank_matrix(&v) == e.rank_matrix, "rank matrix"),
            (o.type_label() == e.type_label, "type label"),
            (o.splitting().splitting_type() == compute_splitting(&v).splitting_type(), "splitting type"),
            (o.splitting() == e.splitting, "splitting"),
            (o.family() == &e.family, "family"),
            (o.parameter() == param.as_ref(), "parameter"),
        ];
        for (ok, what) in checks {
            if !ok {
                failures.push(format!("{}: {what} differs", e.family));
            }
        }
    }
    Report::new(3, "representative round trips", &failures, format!("{} fibres", catalogue().len()))
}

/// Parameters separate orbits: translates agree, distinct parameters never do.
pub fn faithful_parameters(seed: u64) -> Report {
    let mut rng = rng(seed, 4);
    let mut failures = Vec::new();
    let families = canonical_parametrized_families();
    for family in &families {
        let kind = family.parameter_kind().expect("parametrized");
        for _ in 0..100 {
            let p = generic_parameter(&mut rng, kind);
            let q = loop {
                let q = generic_parameter(&mut rng, kind);
                if q != p {
                    break q;
                }
            };
            let vp = family.representative(Some(&p)).expect("generic");
            let vq = family.representative(Some(&q)).expect("generic");
            let (a, b, c) = (translate(&mut rng, &vp), translate(&mut rng, &vp), translate(&mut rng, &vq));
            if !same_orbit(&a, &b).unwrap_or(false) {
                failures.push(format!("{family} at {p}: translates not identified"));
            }
            if same_orbit(&a, &c).unwrap_or(true) {
                failures.push(format!("{family}: {p} and {q} identified"));
            }
            if classify(&a).ok().and_then(|o| o.parameter().cloned()) != Some(p.clone()) {
                failures.push(format!("{family}: parameter {p} not recovered from a translate"));
            }
        }
    }
    Report::new(4, "faithful parameters", &failures, format!("{} families x 100 parameter pairs", families.len()))
}

/// Witness values at a second parameter `q`, computed by hand from the canonical representatives.
fn witness(family: &Family, p: &Parameter<Rational>, q: &Parameter<Rational>) -> Option<(usize, Rational)> {
    let c = Rational::clone;
    match (family, p, q) {
        (Family::Rank2, Parameter::LinePair(_, q), Parameter::LinePair(_, s)) => {
            Some((3, c(&q[1]) * c(&s[0]) - c(&q[0]) * c(&s[1])))
        }
        (Family::Rank2Double(_) | Family::PointLine(_), Parameter::Line(p), Parameter::Line(q)) => {
            Some((0, c(&p[1]) * c(&q[0]) - c(&p[0]) * c(&q[1])))
        }
        (Family::Rank3, Parameter::Plane(p), Parameter::Plane(q)) => {
            Some((0, c(&p[2]) * c(&q[1]) - c(&p[1]) * c(&q[2])))
        }
        (Family::Rank3Line(_), Parameter::Line(p), Parameter::Line(q)) => {
            Some((1, c(&p[0]) * c(&q[1]) - c(&p[1]) * c(&q[0])))
        }
        _ => None,
    }
}

/// Ideal generators vanish on translates and are nonzero at the witnesses.
pub fn ideal_certificates(seed: u64) -> Report {
    let mut rng = rng(seed, 5);
    let mut failures = Vec::new();
    let mut evaluations = 0;
    for family in parametrized_families() {
        let translates = if family.canonical() == family { 200 } else { 20 };
        for _ in 0..translates {
            let (param, v) = representative(&mut rng, &family);
            let o = classify(&v).expect("representatives classify");
            let w = translate(&mut rng, &v);
            evaluations += 1;
            match ideal_vanishes(&o, &w) {
                Ok(true) => {}
                Ok(false) => {
                    failures.push(format!("{family} at {}: generators do not vanish", param.expect("parametrized")))
                }
                Err(err) => failures.push(format!("{family}: {err}")),
            }
        }
    }
    for family in canonical_parametrized_families() {
        let kind = family.parameter_kind().expect("parametrized");
        for _ in 0..100 {
            let p = generic_parameter(&mut rng, kind);
            let q = loop {
                let q = match (&p, generic_parameter(&mut rng, kind)) {
                    (Parameter::LinePair(p0, _), Parameter::LinePair(_, s)) => {
                        Parameter::line_pair(p0.clone(), s).expect("nonzero")
                    }
                    (_, q) => q,
                };
                let nonzero = witness(&family, &p, &q).is_some_and(|(_, value)| !value.is_zero());
                if q.is_generic() && nonzero {
                    break q;
                }
            };
            let o = classify(&family.representative(Some(&p)).expect("generic")).expect("classifies");
            let vq = family.representative(Some(&q)).expect("generic");
            let (index, expected) = witness(&family, &p, &q).expect("every canonical family has a witness");
            let values = ideal_values(&o, &vq).ok().flatten();
            if values.as_ref().map(|v| &v[index]) != Some(&expected) {
                failures.push(format!(
                    "{family}: witness at {q} gives {values:?}, expected {expected} at generator {}",
                    index + 1
                ));
            }
            let moved = translate(&mut rng, &vq);
            if ideal_vanishes(&o, &moved).unwrap_or(true) {
                failures.push(format!("{family}: generators of {p} vanish on a translate of {q}"));
            }
        }
    }
    Report::new(5, "ideal certificates", &failures, format!("{evaluations} translates, 100 witnesses per family"))
}

/// Fibre-level verdicts from the orders agree with the explicit closure decompositions.
pub fn closure_consistency(seed: u64) -> Report {
    let mut rng = rng(seed, 6);
    let mut failures = Vec::new();
    let mut comparisons = 0;
    for family in parametrized_families() {
        let fixed = fixed_parameter::<Rational>(family.parameter_kind().expect("parametrized"));
        let mut params = vec![fixed];
        params.extend((0..2).map(|_| generic_parameter(&mut rng, family.parameter_kind().expect("parametrized"))));
        for p in params {
            let o = classify(&family.representative(Some(&p)).expect("generic")).expect("classifies");
            let description = orbit_closure_description(&o).expect("parametrized orbits have descriptions");
            for psi in catalogue().entries() {
                comparisons += 1;
                let by_order = fibre_closure_verdict(&o, &psi.rank_matrix);
                let by_description = description.verdict(&psi.rank_matrix);
                if by_order != by_description {
                    failures
                        .push(format!("{family} at {p}, target {}: {by_order:?} vs {by_description:?}", psi.family));
                }
            }
        }
    }
    Report::new(6, "closure consistency", &failures, format!("{comparisons} orbit/fibre pairs"))
}

/// Face degenerations land on the reduction at `c = 0` and stay in the orbit otherwise.
pub fn degeneration_endpoints(seed: u64) -> Report {
    let mut rng = rng(seed, 7);
    let mut failures = Vec::new();
    let mut faces = 0;
    for _ in 0..500 {
        let v = config(&mut rng, 4, 5);
        let phi = compute_rank_matrix(&v);
        let orbit = classify(&v).expect("five points in 3-space classify");
        for j in phi.all_faces() {
            faces += 1;
            let expected = phi.reduction(j).expect("faces reduce");
            match face_degeneration(&v, j, &Rational::from_int(0)) {
                Ok(w) if compute_rank_matrix(&w) == expected => {}
                Ok(w) => failures.push(format!("{:?} along {j}: endpoint {}", v.columns(), compute_rank_matrix(&w))),
                Err(err) => failures.push(format!("{:?} along {j}: {err}", v.columns())),
            }
            for _ in 0..5 {
                let c = nonzero_rational(&mut rng, 9);
                let stays =
                    face_degeneration(&v, j, &c).ok().and_then(|w| classify(&w).ok()).is_some_and(|o| o == orbit);
                if !stays {
                    failures.push(format!("{:?} along {j} at c = {c} leaves the orbit", v.columns()));
                }
            }
        }
    }
    Report::new(7, "degeneration endpoints", &failures, format!("500 configurations, {faces} faces"))
}

/// The generic orbit has dimension 15, every other is smaller, and dimension drops along closures.
pub fn open_orbit_dimension() -> Report {
    let mut failures = Vec::new();
    let entries = catalogue().entries();
    let dims: Vec<usize> =
        entries.iter().map(|e| orbit_dimension(&catalogued_representative(&e.rank_matrix))).collect();
    let top = entries.iter().position(|e| e.type_label == "(5,10,10)").expect("generic type is catalogued");
    if dims[top] != 15 {
        failures.push(format!("generic orbit has dimension {}", dims[top]));
    }
    for (k, e) in entries.iter().enumerate() {
        if k != top && dims[k] >= dims[top] {
            failures.push(format!("{} has dimension {}", e.family, dims[k]));
        }
    }
    let mut edges = 0;
    for (k, phi) in entries.iter().enumerate().filter(|(_, e)| e.family.is_single_orbit()) {
        for (l, psi) in entries.iter().enumerate() {
            if l != k && psi.rank_matrix.leq(&phi.rank_matrix).unwrap_or(false) {
                edges += 1;
                if dims[l] >= dims[k] {
                    failures
                        .push(format!("{} ({}) in the closure of {} ({})", psi.family, dims[l], phi.family, dims[k]));
                }
            }
        }
    }
    for family in parametrized_families() {
        let p = fixed_parameter::<Rational>(family.parameter_kind().expect("parametrized"));
        let v = family.representative(Some(&p)).expect("generic");
        let d = orbit_dimension(&v);
        let o = classify(&v).expect("classifies");
        let description = orbit_closure_description(&o).expect("parametrized orbits have descriptions");
        for component in &description.components {
            if matches!(component, ClosureComponent::Orbit(x) if *x == o) {
                continue;
            }
            for w in component.samples() {
                edges += 1;
                let dw = orbit_dimension(&w);
                if dw >= d {
                    failures.push(format!("sample {:?} ({dw}) in the closure of {family} ({d})", w.columns()));
                }
            }
        }
    }
    Report::new(
        8,
        "open orbit dimension",
        &failures,
        format!("generic dimension {}, {edges} closure edges sampled", dims[top]),
    )
}

/// Degenerating a single-orbit representative only reaches smaller rank matrices.
pub fn single_fibre_closures(seed: u64) -> Report {
    let mut rng = rng(seed, 9);
    let mut failures = Vec::new();
    let single: Vec<_> = catalogue().entries().iter().filter(|e| e.family.is_single_orbit()).collect();
    for trial in 0..200 {
        let phi = &single.choose(&mut rng).expect("single-orbit fibres exist").rank_matrix;
        let v = translate(&mut rng, &catalogued_representative(phi));
        let (how, w) = if trial % 2 == 0 {
            let faces = phi.all_faces();
            let j = *faces.choose(&mut rng).expect("the whole set is a face");
            (format!("face {j}"), face_degeneration(&v, j, &Rational::from_int(0)).expect("faces degenerate"))
        } else {
            let g = crate::random::invertible(&mut rng, 4);
            let weights: Vec<u32> = (0..4).map(|_| rng.gen_range(0..4)).collect();
            let moved = v.transform(&g).expect("square");
            (format!("weights {weights:?}"), one_parameter_limit(&moved, &weights))
        };
        let psi = compute_rank_matrix(&w);
        if !psi.leq(phi).unwrap_or(false) || catalogue().position(&psi).is_none() {
            failures.push(format!("{how} of {phi} reached {psi}"));
        }
    }
    Report::new(9, "single-fibre closures", &failures, "200 random degenerations".to_string())
}
