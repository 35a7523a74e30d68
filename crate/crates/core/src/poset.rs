//! The orders `≤`, `⪯` and `≺` materialized over the enumerated image.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use petgraph::algo::toposort;
use petgraph::algo::tred::{dag_to_toposorted_adjacency_list, dag_transitive_reduction_closure};
use petgraph::graph::{DiGraph, NodeIndex};
use serde::{Deserialize, Serialize};

use crate::enumeration::catalogue;
use crate::error::{Error, Result};
use crate::rank_matrix::{prec_generator, preceq_generator, OrderData, RankMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Leq,
    Preceq,
    Prec,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::Leq, OrderKind::Preceq, OrderKind::Prec];

    pub fn symbol(self) -> &'static str {
        match self {
            OrderKind::Leq => "≤",
            OrderKind::Preceq => "⪯",
            OrderKind::Prec => "≺",
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "leq" => Ok(OrderKind::Leq),
            "preceq" => Ok(OrderKind::Preceq),
            "prec" => Ok(OrderKind::Prec),
            _ => Err(Error::Parse(format!("unknown order `{s}`; expected leq, preceq or prec"))),
        }
    }
}

/// An order on the enumerated image with its strict relation and Hasse diagram.
///
/// Edges point from the smaller to the larger rank matrix; node indices follow
/// the catalogue order.
#[derive(Debug, Clone)]
pub struct PosetGraph {
    pub kind: OrderKind,
    pub nodes: Vec<RankMatrix>,
    /// Every pair `(a, b)` with `nodes[a]` strictly below `nodes[b]`.
    pub edges: Vec<(usize, usize)>,
    /// Covering pairs only.
    pub hasse: Vec<(usize, usize)>,
    below: Vec<Vec<bool>>,
    position: HashMap<RankMatrix, usize>,
}

impl PosetGraph {
    /// Whether `psi` is below or equal to `phi` (strictly below for `≺`).
    pub fn holds(&self, psi: &RankMatrix, phi: &RankMatrix) -> Result<bool> {
        let a = *self.position.get(psi).ok_or(Error::NotInImage)?;
        let b = *self.position.get(phi).ok_or(Error::NotInImage)?;
        Ok(self.below[a][b] || (a == b && self.kind != OrderKind::Prec))
    }

    pub fn strictly_below(&self, a: usize, b: usize) -> bool {
        self.below[a][b]
    }

    pub fn index_of(&self, phi: &RankMatrix) -> Option<usize> {
        self.position.get(phi).copied()
    }
}

/// Generating pairs of the chosen order, excluding loops.
fn generator_edges(kind: OrderKind, data: &[OrderData]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (a, psi) in data.iter().enumerate() {
        for (b, phi) in data.iter().enumerate() {
            if a == b {
                continue;
            }
            let related = match kind {
                OrderKind::Leq => psi.phi.leq(&phi.phi).unwrap_or(false),
                OrderKind::Preceq => preceq_generator(psi, phi),
                OrderKind::Prec => prec_generator(psi, phi),
            };
            if related {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// Builds the order over the enumerated image from its generators.
///
/// Fails only if the generated relation has a cycle, i.e. is not antisymmetric.
pub fn try_build_poset(kind: OrderKind) -> Result<PosetGraph> {
    let nodes: Vec<RankMatrix> = catalogue().entries().iter().map(|e| e.rank_matrix.clone()).collect();
    let data: Vec<OrderData> = nodes.iter().map(OrderData::new).collect();
    let generators = generator_edges(kind, &data);

    let mut graph = DiGraph::<(), (), u32>::with_capacity(nodes.len(), generators.len());
    for _ in &nodes {
        graph.add_node(());
    }
    for &(a, b) in &generators {
        graph.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
    }
    let order = toposort(&graph, None).map_err(|cycle| {
        Error::InvalidRankMatrix(format!(
            "the {} generators form a cycle through node {}",
            kind.symbol(),
            cycle.node_id().index()
        ))
    })?;
    let (sorted, _) = dag_to_toposorted_adjacency_list::<_, u32>(&graph, &order);
    let (reduction, closure) = dag_transitive_reduction_closure(&sorted);
    let back = |i: u32| order[i as usize].index();
    let collect = |list: &petgraph::adj::UnweightedList<u32>| {
        let mut pairs: Vec<(usize, usize)> = list
            .edge_indices()
            .map(|e| list.edge_endpoints(e).expect("edge exists"))
            .map(|(a, b)| (back(a), back(b)))
            .collect();
        pairs.sort_unstable();
        pairs
    };
    let edges = collect(&closure);
    let hasse = collect(&reduction);
    let mut below = vec![vec![false; nodes.len()]; nodes.len()];
    for &(a, b) in &edges {
        below[a][b] = true;
    }
    let position = nodes.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
    Ok(PosetGraph { kind, nodes, edges, hasse, below, position })
}

pub fn build_poset(kind: OrderKind) -> PosetGraph {
    order_relation(kind).clone()
}

/// The cached order over the enumerated image.
pub fn order_relation(kind: OrderKind) -> &'static PosetGraph {
    static CACHE: [OnceLock<PosetGraph>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = match kind {
        OrderKind::Leq => 0,
        OrderKind::Preceq => 1,
        OrderKind::Prec => 2,
    };
    CACHE[slot].get_or_init(|| try_build_poset(kind).expect("the generated relations are acyclic"))
}

/// DOT rendering of the Hasse diagram, labelling nodes by type label and family tag.
pub fn export_dot(g: &PosetGraph) -> String {
    let cat = catalogue();
    let name = match g.kind {
        OrderKind::Leq => "leq",
        OrderKind::Preceq => "preceq",
        OrderKind::Prec => "prec",
    };
    let mut out = format!("digraph {name} {{\n  rankdir=BT;\n");
    for (i, phi) in g.nodes.iter().enumerate() {
        let entry = cat.entry(phi).expect("poset nodes are catalogued");
        let label = format!("{} {}", entry.type_label, entry.family).replace('"', "\\\"");
        writeln!(out, "  n{i} [label=\"{label}\"];").expect("writing to a string");
    }
    for &(a, b) in &g.hasse {
        writeln!(out, "  n{a} -> n{b};").expect("writing to a string");
    }
    out.push_str("}\n");
    out
}
