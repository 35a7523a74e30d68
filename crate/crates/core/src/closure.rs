//! Orbit closures: fibre-level verdicts, explicit closure decompositions,
//! vanishing ideals given by products of minors, and face degenerations.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use serde_json::json;

use crate::classifier::{classify, OrbitClass};
use crate::enumeration::{catalogue, verify_realizability};
use crate::error::{Error, Result};
use crate::exact_linalg::{coordinates_in_span, normalize, Matrix, ProjConfig};
use crate::family::{Family, Parameter};
use crate::poset::{order_relation, OrderKind};
use crate::rank_matrix::{compute_rank_matrix, RankMatrix};
use crate::scalar::Scalar;
use crate::splitting::{Block, Splitting};
use crate::subset::Subset;

/// How a closure relates to the fibre of a rank matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The whole fibre lies in the closure.
    Contains,
    /// Some but not all orbits of the fibre lie in the closure.
    IntersectsOnly,
    /// No orbit of the fibre lies in the closure.
    Disjoint,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Contains => "contains",
            Verdict::IntersectsOnly => "intersects_only",
            Verdict::Disjoint => "disjoint",
        })
    }
}

fn fibre_is_single_orbit(psi: &RankMatrix) -> Result<bool> {
    Ok(catalogue().entry(psi)?.family.is_single_orbit())
}

/// Closure of a single-orbit fibre: every catalogued `ψ ≤ φ`.
pub fn fibre_closure(phi: &RankMatrix) -> Result<Vec<RankMatrix>> {
    let entry = catalogue().entry(phi)?;
    if !entry.family.is_single_orbit() {
        return Err(Error::ParametrizedFibre(entry.family.to_string()));
    }
    Ok(catalogue()
        .entries()
        .iter()
        .filter(|e| e.rank_matrix.leq(phi).unwrap_or(false))
        .map(|e| e.rank_matrix.clone())
        .collect())
}

/// How the closure of a parametrized orbit meets the fibre of `psi`, decided by `⪯` and `≺`.
pub fn fibre_closure_verdict<T: Scalar>(o: &OrbitClass<T>, psi: &RankMatrix) -> Result<Verdict> {
    if !o.is_parametrized() {
        return Err(Error::UnparametrizedFamily(o.family().to_string()));
    }
    let phi = o.rank_matrix();
    let preceq = order_relation(OrderKind::Preceq).holds(psi, phi)?;
    let prec = order_relation(OrderKind::Prec).holds(psi, phi)?;
    Ok(if (preceq && fibre_is_single_orbit(psi)?) || prec {
        Verdict::Contains
    } else if preceq {
        Verdict::IntersectsOnly
    } else {
        Verdict::Disjoint
    })
}

/// Verdict for any orbit: single-orbit fibres use `≤`, parametrized orbits use `⪯` and `≺`.
pub fn closure_verdict<T: Scalar>(o: &OrbitClass<T>, psi: &RankMatrix) -> Result<Verdict> {
    if o.is_parametrized() {
        return fibre_closure_verdict(o, psi);
    }
    catalogue().entry(psi)?;
    Ok(if psi.leq(o.rank_matrix())? { Verdict::Contains } else { Verdict::Disjoint })
}

/// A parameter point of a family component: pinned, or ranging over the whole projective line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Slot<T> {
    Fixed(Vec<T>),
    Free,
}

/// One piece of an orbit closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureComponent<T> {
    /// A single orbit.
    Orbit(OrbitClass<T>),
    /// The whole fibre of a rank matrix.
    Fibre(RankMatrix),
    /// All configurations with the given splitting.
    VarpiFibre(Splitting),
    /// The union of orbits of a family's canonical representative placed along `frame`
    /// (canonical position `k` is point `frame[k]`), over all values of the free slots.
    ParamFamily { family: Family, frame: Vec<usize>, slots: Vec<Slot<T>> },
    /// All configurations spanning a space of dimension at most the given rank.
    LowRankLocus(usize),
}

/// How much of a fibre a component covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Coverage {
    Nothing,
    Part,
    Whole,
}

impl<T: Scalar> ClosureComponent<T> {
    /// Configurations realizing each fibre the component meets.
    pub fn samples(&self) -> Vec<ProjConfig<T>> {
        let realize = |pred: &dyn Fn(&RankMatrix) -> bool| -> Vec<ProjConfig<T>> {
            catalogue()
                .entries()
                .iter()
                .filter(|e| pred(&e.rank_matrix))
                .map(|e| verify_realizability(&e.rank_matrix).expect("catalogued"))
                .collect()
        };
        match self {
            ClosureComponent::Orbit(o) => vec![o.representative()],
            ClosureComponent::Fibre(psi) => realize(&|phi| phi == psi),
            ClosureComponent::VarpiFibre(s) => realize(&|phi| &phi.rho() == s),
            ClosureComponent::LowRankLocus(r) => realize(&|phi| phi.total() <= *r),
            ClosureComponent::ParamFamily { family, frame, slots } => family_samples(family, frame, slots),
        }
    }

    /// How much of the fibre of `psi` the component covers.
    pub fn coverage(&self, psi: &RankMatrix) -> Result<Coverage> {
        let whole_or_part = |hit: bool| -> Result<Coverage> {
            Ok(match (hit, fibre_is_single_orbit(psi)?) {
                (false, _) => Coverage::Nothing,
                (true, true) => Coverage::Whole,
                (true, false) => Coverage::Part,
            })
        };
        match self {
            ClosureComponent::Orbit(o) => whole_or_part(o.rank_matrix() == psi),
            ClosureComponent::Fibre(phi) => Ok(if phi == psi { Coverage::Whole } else { Coverage::Nothing }),
            ClosureComponent::VarpiFibre(s) => Ok(if &psi.rho() == s { Coverage::Whole } else { Coverage::Nothing }),
            ClosureComponent::LowRankLocus(r) => {
                Ok(if psi.total() <= *r { Coverage::Whole } else { Coverage::Nothing })
            }
            ClosureComponent::ParamFamily { .. } => {
                whole_or_part(self.samples().iter().any(|v| &compute_rank_matrix(v) == psi))
            }
        }
    }
}

/// Members of a family component: free slots run over the coordinate points, the fixed
/// values, and one further point avoiding all of them.
fn family_samples<T: Scalar>(family: &Family, frame: &[usize], slots: &[Slot<T>]) -> Vec<ProjConfig<T>> {
    let point = |a: i64, b: i64| normalize(&[T::from_int(a), T::from_int(b)]);
    let fixed: Vec<Vec<T>> = slots
        .iter()
        .filter_map(|s| match s {
            Slot::Fixed(p) => Some(normalize(p)),
            Slot::Free => None,
        })
        .collect();
    let mut values = vec![point(1, 0), point(0, 1), point(1, 1)];
    for p in &fixed {
        if !values.contains(p) {
            values.push(p.clone());
        }
    }
    let spare = (2..).map(|k| point(1, k)).find(|p| !values.contains(p)).expect("infinitely many candidates");
    values.push(spare);

    let mut choices: Vec<Vec<Vec<T>>> = vec![Vec::new()];
    for slot in slots {
        let options = match slot {
            Slot::Fixed(p) => vec![p.clone()],
            Slot::Free => values.clone(),
        };
        choices = choices
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.push(o.clone());
                    next
                })
            })
            .collect();
    }
    choices
        .into_iter()
        .filter_map(|points| {
            let refs: Vec<&[T]> = points.iter().map(Vec::as_slice).collect();
            place(&family.canonical_columns(&refs), frame).ok()
        })
        .collect()
}

/// Builds the configuration whose point `map[k]` is `columns[k]`.
fn place<T: Scalar>(columns: &[Vec<T>], map: &[usize]) -> Result<ProjConfig<T>> {
    let mut placed = vec![Vec::new(); columns.len()];
    for (k, c) in columns.iter().enumerate() {
        placed[map[k]] = c.clone();
    }
    ProjConfig::new(4, placed)
}

/// An orbit closure written as a union of components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureDescription<T> {
    pub orbit: OrbitClass<T>,
    pub components: Vec<ClosureComponent<T>>,
}

impl<T: Scalar> ClosureDescription<T> {
    /// Fibre-level reading of the description: the best coverage any component gives.
    pub fn verdict(&self, psi: &RankMatrix) -> Result<Verdict> {
        let mut best = Coverage::Nothing;
        for c in &self.components {
            best = best.max(c.coverage(psi)?);
        }
        Ok(match best {
            Coverage::Whole => Verdict::Contains,
            Coverage::Part => Verdict::IntersectsOnly,
            Coverage::Nothing => Verdict::Disjoint,
        })
    }
}

/// Index bookkeeping for a decomposition written in a fixed reference labelling.
struct ReferenceFrame {
    map: Vec<usize>,
}

impl ReferenceFrame {
    /// `to_canonical[l]` is the canonical position of reference point `l`.
    fn new<T: Scalar>(o: &OrbitClass<T>, to_canonical: [usize; 5]) -> Self {
        ReferenceFrame { map: to_canonical.iter().map(|&c| o.frame()[c]).collect() }
    }

    fn set(&self, labels: &[usize]) -> Subset {
        Subset::from_labels(labels.iter().copied()).map(&self.map)
    }

    fn varpi<T>(&self, blocks: &[(&[usize], usize)]) -> ClosureComponent<T> {
        let blocks = blocks.iter().map(|(labels, r)| Block::new(self.set(labels), *r)).collect();
        ClosureComponent::VarpiFibre(Splitting::new(5, blocks).expect("blocks partition [5]"))
    }

    /// The splitting `{i}^1, ..., rest^1` with the listed singleton-like blocks.
    fn varpi_points<T>(&self, parts: &[&[usize]]) -> ClosureComponent<T> {
        let used: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
        let rest: Vec<usize> = (1..=5).filter(|l| !used.contains(l)).collect();
        let mut blocks: Vec<(&[usize], usize)> = parts.iter().map(|p| (*p, 1)).collect();
        if !rest.is_empty() {
            blocks.push((&rest, 1));
        }
        self.varpi(&blocks)
    }

    fn fibre<T>(&self, family: Family) -> ClosureComponent<T> {
        ClosureComponent::Fibre(family.rank_matrix().relabel(&self.map))
    }

    fn orbit<T: Scalar>(&self, columns: Vec<Vec<T>>) -> Result<ClosureComponent<T>> {
        Ok(ClosureComponent::Orbit(classify(&place(&columns, &self.map)?)?))
    }
}

/// Columns from rows of a matrix with three rows, embedded in 4-space.
fn from_rows<T: Scalar>(rows: [[T; 5]; 3]) -> Vec<Vec<T>> {
    (0..5).map(|c| vec![rows[0][c].clone(), rows[1][c].clone(), rows[2][c].clone(), T::zero()]).collect()
}

fn unit<T: Scalar>(i: usize) -> Vec<T> {
    (0..4).map(|k| if k + 1 == i { T::one() } else { T::zero() }).collect()
}

fn sum<T: Scalar>(vs: &[Vec<T>]) -> Vec<T> {
    (0..4).map(|k| vs.iter().fold(T::zero(), |acc, v| acc + v[k].clone())).collect()
}

fn embed<T: Scalar>(p: &[T]) -> Vec<T> {
    (0..4).map(|k| p.get(k).cloned().unwrap_or_else(T::zero)).collect()
}

/// The explicit decomposition of the closure of `o` into fibres, splitting fibres,
/// families of orbits and low-rank loci.
pub fn orbit_closure_description<T: Scalar>(o: &OrbitClass<T>) -> Result<ClosureDescription<T>> {
    let itself = ClosureComponent::Orbit(o.clone());
    let canonical = |o: &OrbitClass<T>| ReferenceFrame::new(o, [0, 1, 2, 3, 4]);
    let components = match (o.family().canonical(), o.parameter()) {
        (Family::Rank2, Some(_)) => {
            let f = canonical(o);
            let mut c = vec![itself];
            c.extend((1..=5).map(|i| f.varpi_points(&[&[i]])));
            c.push(f.varpi(&[(&[1, 2, 3, 4, 5], 1)]));
            c
        }
        (Family::Rank2Double(_), Some(_)) => {
            let f = canonical(o);
            let mut c = vec![itself, f.varpi_points(&[&[4, 5]])];
            c.extend((1..=3).map(|i| f.varpi_points(&[&[i]])));
            c.push(f.varpi(&[(&[1, 2, 3, 4, 5], 1)]));
            c
        }
        (Family::PointLine(_), Some(Parameter::Line(p))) => {
            // reference labelling: [e1, e2, e1+e2, p, e3], apex last
            let f = ReferenceFrame::new(o, [1, 2, 3, 4, 0]);
            let mut c = vec![
                itself,
                ClosureComponent::ParamFamily {
                    family: Family::Rank2,
                    frame: f.map.clone(),
                    slots: vec![Slot::Fixed(p.clone()), Slot::Free],
                },
            ];
            let others = |i: usize| -> Vec<usize> { (1..=4).filter(|&k| k != i).collect() };
            c.extend((1..=4).map(|i| f.varpi_points(&[&[i], &[5]])));
            c.extend((1..=4).map(|i| f.fibre(Family::Rank2Triple(Subset::from_labels(others(i))))));
            c.extend((1..=4).map(|i| f.varpi_points(&[&[i, 5]])));
            c.extend((1..=5).map(|i| f.varpi_points(&[&[i]])));
            c.push(f.varpi(&[(&[1, 2, 3, 4, 5], 1)]));
            c
        }
        (Family::Rank3, Some(Parameter::Plane(p))) => {
            let f = canonical(o);
            let (z, one) = (T::zero(), T::one());
            let (p1, p2, p3) = (p[0].clone(), p[1].clone(), p[2].clone());
            let degenerate = [
                [
                    [z.clone(), one.clone(), z.clone(), one.clone(), p2.clone()],
                    [z.clone(), z.clone(), one.clone(), one.clone(), p3.clone()],
                    [one.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
                ],
                [
                    [one.clone(), z.clone(), z.clone(), one.clone(), p1.clone()],
                    [z.clone(), z.clone(), one.clone(), one.clone(), p3.clone()],
                    [z.clone(), one.clone(), z.clone(), z.clone(), z.clone()],
                ],
                [
                    [one.clone(), z.clone(), z.clone(), one.clone(), p1.clone()],
                    [z.clone(), one.clone(), z.clone(), one.clone(), p2.clone()],
                    [z.clone(), z.clone(), one.clone(), z.clone(), z.clone()],
                ],
                [
                    [one.clone(), z.clone(), one.clone(), z.clone(), p1.clone() - p3.clone()],
                    [z.clone(), one.clone(), one.clone(), z.clone(), p2.clone() - p3.clone()],
                    [z.clone(), z.clone(), z.clone(), one.clone(), z.clone()],
                ],
                [
                    [one.clone(), z.clone(), one.clone(), p2.clone() * (p1.clone() - p3.clone()), z.clone()],
                    [z.clone(), one.clone(), one.clone(), p1.clone() * (p2.clone() - p3.clone()), z.clone()],
                    [z.clone(), z.clone(), z.clone(), z.clone(), one.clone()],
                ],
            ];
            let mut c = vec![itself];
            for rows in degenerate {
                c.push(f.orbit(from_rows(rows))?);
            }
            for i in 1..=5 {
                for j in i + 1..=5 {
                    c.push(f.varpi_points(&[&[i], &[j]]));
                }
            }
            c.push(ClosureComponent::LowRankLocus(2));
            c
        }
        (Family::Rank3Line(_), Some(Parameter::Line(p))) => {
            // reference labelling: [e1, e2, p, e3, e1+e2+e3] with the first three points collinear
            let f = ReferenceFrame::new(o, [0, 1, 4, 2, 3]);
            let (e1, e2, e3) = (unit::<T>(1), unit::<T>(2), unit::<T>(3));
            let e12 = sum(&[e1.clone(), e2.clone()]);
            let pv = embed(p);
            let mut c = vec![
                itself,
                f.orbit(vec![e1.clone(), e2.clone(), pv.clone(), e3.clone(), e12.clone()])?,
                f.orbit(vec![e1, e2, pv, e12, e3])?,
            ];
            for (k, l, m) in [(1, 2, 3), (2, 1, 3), (3, 1, 2)] {
                c.push(f.fibre(Family::PointLineDouble(k - 1, Subset::from_labels([l, m]))));
            }
            c.push(f.varpi(&[(&[1, 2, 3], 2), (&[4, 5], 1)]));
            for i in 1..=5 {
                for j in i + 1..=5 {
                    if j > 3 {
                        c.push(f.varpi_points(&[&[i], &[j]]));
                    }
                }
            }
            for (k, l, m) in [(1, 2, 3), (2, 1, 3), (3, 1, 2)] {
                c.push(f.varpi_points(&[&[k], &[l, m], &[4, 5]]));
            }
            c.push(ClosureComponent::LowRankLocus(2));
            c
        }
        _ => {
            let phi = o.rank_matrix();
            catalogue()
                .entries()
                .iter()
                .filter(|e| e.rank_matrix.leq(phi).unwrap_or(false))
                .map(|e| ClosureComponent::Fibre(e.rank_matrix.clone()))
                .collect()
        }
    };
    Ok(ClosureDescription { orbit: o.clone(), components })
}

/// A product of column minors with a coefficient; columns are zero-based point indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorTerm<T> {
    pub coefficient: T,
    pub minors: Vec<Vec<usize>>,
}

/// A sum of [`MinorTerm`]s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorPolynomial<T> {
    pub terms: Vec<MinorTerm<T>>,
}

impl<T: Scalar> MinorPolynomial<T> {
    /// Builds a polynomial from one-based column labels, relabelled by `map`.
    fn from_labels(map: &[usize], terms: Vec<(T, &[&[usize]])>) -> Self {
        let terms = terms
            .into_iter()
            .map(|(coefficient, minors)| MinorTerm {
                coefficient,
                minors: minors.iter().map(|m| m.iter().map(|&l| map[l - 1]).collect()).collect(),
            })
            .collect();
        MinorPolynomial { terms }
    }

    /// Evaluates the polynomial on column coordinates (`columns[i]` has one entry per minor row).
    pub fn evaluate(&self, columns: &[Vec<T>]) -> T {
        self.terms.iter().fold(T::zero(), |acc, term| {
            let product = term.minors.iter().fold(term.coefficient.clone(), |prod, minor| {
                let cols: Vec<Vec<T>> = minor.iter().map(|&i| columns[i].clone()).collect();
                let det = Matrix::from_columns(minor.len(), &cols)
                    .and_then(|m| m.determinant())
                    .expect("minor columns match the coordinate dimension");
                prod * det
            });
            acc + product
        })
    }

    /// How often each column occurs in every term, if this is the same for all terms.
    pub fn multidegree(&self) -> Option<BTreeMap<usize, usize>> {
        let degree = |t: &MinorTerm<T>| {
            let mut d = BTreeMap::new();
            for i in t.minors.iter().flatten() {
                *d.entry(*i).or_insert(0) += 1;
            }
            d
        };
        let first = degree(self.terms.first()?);
        self.terms.iter().all(|t| degree(t) == first).then_some(first)
    }
}

impl<T: Scalar> fmt::Display for MinorPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, term) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if !term.coefficient.is_one() {
                write!(f, "({})", term.coefficient)?;
            }
            for minor in &term.minors {
                let labels: Vec<String> = minor.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "|{}|", labels.join(","))?;
            }
        }
        Ok(())
    }
}

/// Generators of the ideal cutting out an orbit closure, with the columns they involve and
/// the dimension of the space their minors live in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal<T> {
    pub support: Subset,
    pub rank_bound: usize,
    pub generators: Vec<MinorPolynomial<T>>,
}

/// The known generators of the ideal of the orbit closure, with its parameters substituted.
pub fn ideal_generators<T: Scalar>(o: &OrbitClass<T>) -> Result<Ideal<T>> {
    let frame = o.frame();
    let full = Subset::full(5);
    let c = T::clone;
    let one = T::one;
    let ideal = match (o.family().canonical(), o.parameter()) {
        (Family::Rank2, Some(Parameter::LinePair(p, q))) => {
            let (p1, p2, q1, q2) = (&p[0], &p[1], &q[0], &q[1]);
            let g = |terms| MinorPolynomial::from_labels(frame, terms);
            Ideal {
                support: full,
                rank_bound: 2,
                generators: vec![
                    g(vec![
                        (c(q1) * (c(p2) - c(p1)), &[&[2, 4][..], &[5, 3]][..]),
                        (c(p1) * (c(q2) - c(q1)), &[&[2, 5], &[3, 4]]),
                    ]),
                    g(vec![
                        (c(q2) * (c(p2) - c(p1)), &[&[1, 4][..], &[5, 3]][..]),
                        (c(p2) * (c(q2) - c(q1)), &[&[1, 5], &[3, 4]]),
                    ]),
                    g(vec![(c(p1) * c(q2), &[&[1, 4][..], &[5, 2]][..]), (c(p2) * c(q1), &[&[1, 5], &[2, 4]])]),
                    g(vec![(c(q2), &[&[1, 3][..], &[5, 2]][..]), (c(q1), &[&[1, 5], &[2, 3]])]),
                    g(vec![(c(p2), &[&[1, 3][..], &[4, 2]][..]), (c(p1), &[&[1, 4], &[2, 3]])]),
                ],
            }
        }
        (Family::Rank2Double(_), Some(Parameter::Line(p))) => {
            let g = |terms| MinorPolynomial::from_labels(frame, terms);
            Ideal {
                support: full,
                rank_bound: 2,
                generators: vec![
                    g(vec![(c(&p[1]), &[&[1, 3][..], &[4, 2]][..]), (c(&p[0]), &[&[1, 4], &[2, 3]])]),
                    g(vec![(one(), &[&[4, 5][..]][..])]),
                ],
            }
        }
        (Family::PointLine(_), Some(Parameter::Line(p))) => {
            let g = |terms| MinorPolynomial::from_labels(frame, terms);
            Ideal {
                support: full.without(frame[0]),
                rank_bound: 2,
                generators: vec![g(vec![(c(&p[1]), &[&[2, 4][..], &[5, 3]][..]), (c(&p[0]), &[&[2, 5], &[3, 4]])])],
            }
        }
        (Family::Rank3, Some(Parameter::Plane(p))) => {
            let (p1, p2, p3) = (&p[0], &p[1], &p[2]);
            let g = |terms| MinorPolynomial::from_labels(frame, terms);
            Ideal {
                support: full,
                rank_bound: 3,
                generators: vec![
                    g(vec![(c(p3), &[&[1, 2, 4][..], &[1, 5, 3]][..]), (c(p2), &[&[1, 2, 5], &[1, 3, 4]])]),
                    g(vec![(c(p3), &[&[2, 1, 4][..], &[2, 5, 3]][..]), (c(p1), &[&[2, 1, 5], &[2, 3, 4]])]),
                    g(vec![(c(p2), &[&[3, 1, 4][..], &[3, 5, 2]][..]), (c(p1), &[&[3, 1, 5], &[3, 2, 4]])]),
                    g(vec![
                        (c(p2) - c(p3), &[&[4, 1, 3][..], &[4, 5, 2]][..]),
                        (c(p1) - c(p3), &[&[4, 1, 5], &[4, 2, 3]]),
                    ]),
                    g(vec![
                        (c(p1) * (c(p2) - c(p3)), &[&[5, 1, 3][..], &[5, 4, 2]][..]),
                        (c(p2) * (c(p1) - c(p3)), &[&[5, 1, 4], &[5, 2, 3]]),
                    ]),
                ],
            }
        }
        (Family::Rank3Line(_), Some(Parameter::Line(p))) => {
            let map: Vec<usize> = [0, 1, 4, 2, 3].iter().map(|&k| frame[k]).collect();
            let g = |terms| MinorPolynomial::from_labels(&map, terms);
            let (p1, p2) = (&p[0], &p[1]);
            Ideal {
                support: full,
                rank_bound: 3,
                generators: vec![
                    g(vec![(one(), &[&[1, 2, 3][..]][..])]),
                    g(vec![(c(p1), &[&[4, 1, 3][..], &[4, 5, 2]][..]), (c(p2), &[&[4, 1, 5], &[4, 2, 3]])]),
                    g(vec![(c(p1), &[&[5, 1, 3][..], &[5, 4, 2]][..]), (c(p2), &[&[5, 1, 4], &[5, 2, 3]])]),
                ],
            }
        }
        _ => return Err(Error::NoIdealGenerators(o.family().to_string())),
    };
    Ok(ideal)
}

/// Coordinates of each column of `w` in a basis of a `bound`-dimensional space containing
/// the span of the `support` columns; `None` when the span is too large.
pub fn low_rank_coordinates<T: Scalar>(w: &ProjConfig<T>, support: Subset, bound: usize) -> Option<Vec<Vec<T>>> {
    if w.span_rank(support) > bound {
        return None;
    }
    let mut basis: Vec<Vec<T>> = Vec::new();
    let candidates = support
        .iter()
        .map(|i| w.column(i).to_vec())
        .chain((1..=w.n()).map(|i| (0..w.n()).map(|k| if k + 1 == i { T::one() } else { T::zero() }).collect()));
    for v in candidates {
        if basis.len() == bound {
            break;
        }
        let mut trial = basis.clone();
        trial.push(v);
        if Matrix::from_columns(w.n(), &trial).expect("columns have length n").rank() == trial.len() {
            basis = trial;
        }
    }
    let coords = (0..w.m())
        .map(|i| {
            if !support.contains(i) {
                return vec![T::zero(); bound];
            }
            let mut cols = basis.clone();
            cols.push(w.column(i).to_vec());
            let tmp = ProjConfig::new(w.n(), cols).expect("nonzero columns");
            coordinates_in_span(&tmp, &(0..bound).collect::<Vec<_>>(), bound).expect("column lies in the span")
        })
        .collect();
    Some(coords)
}

/// Values of the generators on `w`, or `None` when the support of `w` spans
/// too much for the generators to apply.
pub fn ideal_values<T: Scalar>(o: &OrbitClass<T>, w: &ProjConfig<T>) -> Result<Option<Vec<T>>> {
    if w.n() != 4 || w.m() != 5 {
        return Err(Error::UnsupportedShape { n: w.n(), m: w.m() });
    }
    let ideal = ideal_generators(o)?;
    Ok(low_rank_coordinates(w, ideal.support, ideal.rank_bound)
        .map(|coords| ideal.generators.iter().map(|g| g.evaluate(&coords)).collect()))
}

/// Whether every generator vanishes on `w`.
pub fn ideal_vanishes<T: Scalar>(o: &OrbitClass<T>, w: &ProjConfig<T>) -> Result<bool> {
    Ok(ideal_values(o, w)?.is_some_and(|values| values.iter().all(T::is_zero)))
}

/// The point at `c` of the curve degenerating `v` along the face `J`: columns in `J` stay,
/// the others become `c * (v_i - w_i) + w_i` with `w_i` their projection onto a complement of
/// the span of `J`.
pub fn face_degeneration<T: Scalar>(v: &ProjConfig<T>, j: Subset, c: &T) -> Result<ProjConfig<T>> {
    let phi = compute_rank_matrix(v);
    if !j.is_subset_of(Subset::full(v.m())) {
        return Err(Error::IndexOutOfRange { index: v.m(), bound: v.m() });
    }
    if let Some(larger) = phi.face_witness(j) {
        return Err(Error::NotAFace { subset: j, larger });
    }
    let n = v.n();
    let face_cols: Vec<Vec<T>> = j.iter().map(|i| v.column(i).to_vec()).collect();
    let (_, pivots) = Matrix::from_columns(n, &face_cols)?.rref();
    let mut basis: Vec<Vec<T>> = pivots.iter().map(|&k| face_cols[k].clone()).collect();
    let face_dim = basis.len();
    for i in 0..n {
        let e: Vec<T> = (0..n).map(|k| if k == i { T::one() } else { T::zero() }).collect();
        let mut trial = basis.clone();
        trial.push(e);
        if Matrix::from_columns(n, &trial)?.rank() == trial.len() {
            basis = trial;
        }
    }
    let change = Matrix::from_columns(n, &basis)?;
    let columns = (0..v.m())
        .map(|i| {
            if j.contains(i) {
                return Ok(v.column(i).to_vec());
            }
            let mut aug = basis.clone();
            aug.push(v.column(i).to_vec());
            let tmp = ProjConfig::new(n, aug)?;
            let x = coordinates_in_span(&tmp, &(0..n).collect::<Vec<_>>(), n)?;
            let scaled: Vec<T> = x
                .iter()
                .enumerate()
                .map(|(k, xk)| if k < face_dim { c.clone() * xk.clone() } else { xk.clone() })
                .collect();
            change.mul_vec(&scaled)
        })
        .collect::<Result<Vec<_>>>()?;
    ProjConfig::new(n, columns)
}

impl Serialize for Slot<String> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Slot::Fixed(p) => p.serialize(serializer),
            Slot::Free => serializer.serialize_str("free"),
        }
    }
}

impl<T: Scalar> Serialize for ClosureComponent<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let value = match self {
            ClosureComponent::Orbit(o) => json!({ "kind": "orbit", "orbit": o }),
            ClosureComponent::Fibre(psi) => {
                let family = catalogue().entry(psi).map(|e| e.family.to_string()).ok();
                json!({ "kind": "fibre", "type_label": psi.type_label(), "family": family, "rank_matrix": psi })
            }
            ClosureComponent::VarpiFibre(s) => {
                json!({ "kind": "varpi_fibre", "splitting_type": s.splitting_type().to_string(), "splitting": s })
            }
            ClosureComponent::ParamFamily { family, frame, slots } => {
                let slots: Vec<String> = slots
                    .iter()
                    .map(|s| match s {
                        Slot::Fixed(p) => Parameter::Line(p.clone()).to_strings().remove(0),
                        Slot::Free => "free".to_string(),
                    })
                    .collect();
                let frame: Vec<usize> = frame.iter().map(|i| i + 1).collect();
                json!({ "kind": "param_family", "family": family, "frame": frame, "parameter": slots })
            }
            ClosureComponent::LowRankLocus(r) => json!({ "kind": "low_rank_locus", "max_rank": r }),
        };
        value.serialize(serializer)
    }
}

impl<T: Scalar> Serialize for ClosureDescription<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.components.serialize(serializer)
    }
}
