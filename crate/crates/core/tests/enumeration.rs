use std::collections::{BTreeMap, BTreeSet};

use fivepoint::enumeration::EXPECTED_MULTIPLICITIES;
use fivepoint::{catalogue, compute_rank_matrix, verify_realizability, Config, RankMatrix};
use itertools::Itertools;

/// Every rank function of a loopless matroid of rank at most 4 on five labelled points,
/// found by depth-first search over subsets in order of size.
fn matroid_rank_functions() -> BTreeSet<Vec<u8>> {
    let order: Vec<u32> = (0u32..32).sorted_by_key(|s| (s.count_ones(), *s)).collect();
    let mut found = BTreeSet::new();
    let mut r = vec![0u8; 32];
    fn search(order: &[u32], k: usize, r: &mut Vec<u8>, found: &mut BTreeSet<Vec<u8>>) {
        let Some(&s) = order.get(k) else {
            found.insert(r.clone());
            return;
        };
        if s.count_ones() <= 1 {
            r[s as usize] = s.count_ones() as u8;
            return search(order, k + 1, r, found);
        }
        let elems: Vec<u32> = (0..5).filter(|i| s & (1 << i) != 0).collect();
        let below: Vec<u8> = elems.iter().map(|i| r[(s & !(1 << i)) as usize]).collect();
        let lo = *below.iter().max().unwrap();
        let hi = (below.iter().min().unwrap() + 1).min(4);
        for value in lo..=hi {
            let submodular = elems.iter().tuple_combinations().all(|(&i, &j)| {
                let (si, sj, sij) = (s & !(1 << i), s & !(1 << j), s & !(1 << i) & !(1 << j));
                value + r[sij as usize] <= r[si as usize] + r[sj as usize]
            });
            if submodular {
                r[s as usize] = value;
                search(order, k + 1, r, found);
            }
        }
    }
    search(&order, 0, &mut r, &mut found);
    found
}

#[test]
fn catalogue_is_exactly_the_set_of_loopless_matroids() {
    let oracle = matroid_rank_functions();
    let ours: BTreeSet<Vec<u8>> = catalogue().entries().iter().map(|e| e.rank_matrix.values().to_vec()).collect();
    assert_eq!(ours.len(), catalogue().len());
    assert_eq!(oracle.len(), 184);
    assert_eq!(ours, oracle);
}

#[test]
fn label_counts_match_the_matroid_count() {
    let counts: BTreeMap<String, usize> = matroid_rank_functions()
        .into_iter()
        .map(|v| RankMatrix::from_values(5, v).unwrap().type_label())
        .counts()
        .into_iter()
        .collect();
    let expected = [
        ("(∅)", 1),
        ("(2)a", 5),
        ("(2)b", 10),
        ("(3)a", 15),
        ("(3)b", 10),
        ("(4)", 10),
        ("(5)", 1),
        ("(3,3)a", 15),
        ("(3,3)b", 10),
        ("(4,4)a", 10),
        ("(4,4)b", 30),
        ("(5,5)", 5),
        ("(4,6)", 10),
        ("(5,6)", 15),
        ("(5,8)", 10),
        ("(5,10)", 1),
        ("(4,6,4)", 10),
        ("(5,8,5)", 10),
        ("(5,10,7)", 5),
        ("(5,10,10)", 1),
    ];
    let expected: BTreeMap<String, usize> = expected.iter().map(|(l, c)| (l.to_string(), *c)).collect();
    assert_eq!(counts, expected);
    let ours: BTreeMap<String, usize> = catalogue().label_counts().into_iter().collect();
    assert_eq!(ours, expected);
}

#[test]
fn expected_counts_differ_only_for_the_double_point_lines() {
    let ours = catalogue().label_counts();
    let differing: Vec<(&str, usize, usize)> = ours
        .iter()
        .zip(EXPECTED_MULTIPLICITIES)
        .filter(|((_, c), p)| *c != *p)
        .map(|((l, c), p)| (l.as_str(), *c, p))
        .collect();
    assert_eq!(differing, vec![("(4)", 10, 5)]);
}

#[test]
fn every_label_is_one_orbit_of_the_symmetric_group() {
    for (label, count) in catalogue().label_counts() {
        let first = catalogue().entries().iter().find(|e| e.type_label == label).unwrap();
        let orbit: BTreeSet<RankMatrix> = (0..5).permutations(5).map(|p| first.rank_matrix.relabel(&p)).collect();
        assert_eq!(orbit.len(), count, "{label}");
        assert!(orbit.iter().all(|phi| catalogue().entry(phi).is_ok_and(|e| e.type_label == label)));
    }
}

#[test]
fn every_fibre_is_realized() {
    for e in catalogue().entries() {
        let v: Config = verify_realizability(&e.rank_matrix).unwrap();
        assert_eq!(compute_rank_matrix(&v), e.rank_matrix, "{}", e.family);
    }
}

#[test]
fn tabulated_representatives() {
    let point_line = "phi[4^2;1]".parse::<fivepoint::Family>().unwrap().rank_matrix();
    let v: Config = verify_realizability(&point_line).unwrap();
    let expected =
        Config::from_int_columns(4, &[&[0, 0, 1, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 0, 0], &[1, 2, 0, 0]])
            .unwrap();
    assert!(v.projectively_equal(&expected));

    let coincident = RankMatrix::from_fn(5, |s| usize::from(!s.is_empty())).unwrap();
    let v: Config = verify_realizability(&coincident).unwrap();
    assert!(v.columns().iter().all(|c| c == v.column(0)));
    assert_eq!(catalogue().entry(&coincident).unwrap().type_label, "(∅)");
}
