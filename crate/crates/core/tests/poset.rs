use fivepoint::poset::order_relation;
use fivepoint::rank_matrix::{prec_generator, preceq_generator, OrderData};
use fivepoint::{build_poset, catalogue, export_dot, Family, OrderKind};

/// Transitive closure by repeated squaring of a boolean matrix.
fn closure(mut rel: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let n = rel.len();
    for k in 0..n {
        let through = rel[k].clone();
        for row in rel.iter_mut().filter(|row| row[k]) {
            for (cell, &reach) in row.iter_mut().zip(&through) {
                *cell |= reach;
            }
        }
    }
    rel
}

fn naive(kind: OrderKind) -> Vec<Vec<bool>> {
    let entries = catalogue().entries();
    let data: Vec<OrderData> = entries.iter().map(|e| OrderData::new(&e.rank_matrix)).collect();
    let n = entries.len();
    let generator = |a: usize, b: usize| match kind {
        OrderKind::Leq => a != b && entries[a].rank_matrix.leq(&entries[b].rank_matrix).unwrap(),
        OrderKind::Preceq => a != b && preceq_generator(&data[a], &data[b]),
        OrderKind::Prec => prec_generator(&data[a], &data[b]),
    };
    closure((0..n).map(|a| (0..n).map(|b| generator(a, b)).collect()).collect())
}

#[test]
fn orders_match_naive_transitive_closures() {
    for (kind, edges, hasse) in
        [(OrderKind::Leq, 6111, 695), (OrderKind::Preceq, 5406, 1035), (OrderKind::Prec, 1246, 1168)]
    {
        let rel = naive(kind);
        let n = rel.len();
        assert!((0..n).all(|a| !rel[a][a]), "{kind:?} has a cycle");
        let g = build_poset(kind);
        let mut expected: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| rel[a][b]).collect();
        let mut got = g.edges.clone();
        expected.sort_unstable();
        got.sort_unstable();
        assert_eq!(got, expected, "{kind:?}");
        let mut covers: Vec<(usize, usize)> =
            expected.iter().copied().filter(|&(a, b)| !(0..n).any(|c| rel[a][c] && rel[c][b])).collect();
        let mut hasse_got = g.hasse.clone();
        covers.sort_unstable();
        hasse_got.sort_unstable();
        assert_eq!(hasse_got, covers, "{kind:?}");
        assert_eq!((got.len(), hasse_got.len()), (edges, hasse), "{kind:?}");
    }
}

#[test]
fn leq_has_unique_extremes() {
    let g = build_poset(OrderKind::Leq);
    let n = g.nodes.len();
    let maxima: Vec<usize> = (0..n).filter(|&a| !g.edges.iter().any(|&(x, _)| x == a)).collect();
    let minima: Vec<usize> = (0..n).filter(|&b| !g.edges.iter().any(|&(_, y)| y == b)).collect();
    let label = |i: usize| catalogue().entry(&g.nodes[i]).unwrap().type_label.clone();
    assert_eq!(maxima.iter().map(|&i| label(i)).collect::<Vec<_>>(), ["(5,10,10)"]);
    assert_eq!(minima.iter().map(|&i| label(i)).collect::<Vec<_>>(), ["(∅)"]);
}

#[test]
fn point_and_line_reductions_lie_below_the_plane_family() {
    let top = Family::Rank3.rank_matrix();
    for i in 1..=5 {
        let psi = format!("phi[4^2;{i}]").parse::<Family>().unwrap().rank_matrix();
        assert!(order_relation(OrderKind::Preceq).holds(&psi, &top).unwrap());
        assert!(!order_relation(OrderKind::Prec).holds(&psi, &top).unwrap());
    }
}

#[test]
fn prec_is_irreflexive_and_preceq_reflexive() {
    for e in catalogue().entries() {
        assert!(!e.rank_matrix.prec(&e.rank_matrix).unwrap());
        assert!(e.rank_matrix.preceq(&e.rank_matrix).unwrap());
    }
}

#[test]
fn dot_export_lists_hasse_edges() {
    let g = build_poset(OrderKind::Leq);
    let dot = export_dot(&g);
    assert!(dot.starts_with("digraph leq {"));
    assert_eq!(dot.matches(" -> ").count(), g.hasse.len());
    assert_eq!(dot.matches("[label=").count(), 184);
}
