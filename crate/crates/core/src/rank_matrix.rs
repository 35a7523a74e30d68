//! Rank matrices: the subset-to-dimension function of a configuration.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linalg::ProjConfig;
use crate::scalar::Scalar;
use crate::splitting::{Block, Splitting};
use crate::subset::Subset;

/// The map `I -> dim span{v_i : i in I}` on all subsets of `[m]`, stored densely by bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRankMatrix")]
pub struct RankMatrix {
    m: usize,
    values: Vec<u8>,
}

#[derive(Deserialize)]
struct RawRankMatrix {
    m: usize,
    values: Vec<u8>,
}

impl TryFrom<RawRankMatrix> for RankMatrix {
    type Error = Error;

    fn try_from(raw: RawRankMatrix) -> Result<Self> {
        RankMatrix::from_values(raw.m, raw.values)
    }
}

impl RankMatrix {
    /// Wraps dense values, checking every rank-function invariant.
    pub fn from_values(m: usize, values: Vec<u8>) -> Result<Self> {
        if m > 16 || values.len() != 1 << m {
            return Err(Error::InvalidRankMatrix(format!(
                "expected {} values for m = {m}, found {}",
                1usize.checked_shl(m as u32).unwrap_or(0),
                values.len()
            )));
        }
        let phi = RankMatrix { m, values };
        phi.check_invariants(None)?;
        Ok(phi)
    }

    pub fn from_fn(m: usize, f: impl Fn(Subset) -> usize) -> Result<Self> {
        Self::from_values(m, Subset::all(m).map(|s| f(s) as u8).collect())
    }

    pub(crate) fn from_fn_unchecked(m: usize, f: impl Fn(Subset) -> usize) -> Self {
        RankMatrix { m, values: Subset::all(m).map(|s| f(s) as u8).collect() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn get(&self, subset: Subset) -> usize {
        self.values[subset.bits() as usize] as usize
    }

    /// Rank of the whole configuration.
    pub fn total(&self) -> usize {
        self.get(Subset::full(self.m))
    }

    /// Checks normalization, monotonicity with unit increments, submodularity, and
    /// (when `n` is given) the bound by the ambient dimension.
    pub fn check_invariants(&self, n: Option<usize>) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidRankMatrix(msg));
        if self.get(Subset::EMPTY) != 0 {
            return bad("the empty set must have rank 0".into());
        }
        for i in 0..self.m {
            if self.get(Subset::singleton(i)) != 1 {
                return bad(format!("point {} must have rank 1", i + 1));
            }
        }
        for s in Subset::all(self.m) {
            if let Some(n) = n {
                if self.get(s) > s.len().min(n) {
                    return bad(format!("{s} has rank {} above min(#I, {n})", self.get(s)));
                }
            }
            for i in (0..self.m).filter(|&i| !s.contains(i)) {
                let grown = self.get(s.with(i));
                if grown < self.get(s) || grown > self.get(s) + 1 {
                    return bad(format!("adding point {} to {s} changes the rank by more than one", i + 1));
                }
            }
        }
        for a in Subset::all(self.m) {
            for b in Subset::all(self.m).filter(|b| b.bits() > a.bits()) {
                if self.get(a.union(b)) + self.get(a.intersection(b)) > self.get(a) + self.get(b) {
                    return bad(format!("submodularity fails for {a} and {b}"));
                }
            }
        }
        Ok(())
    }

    /// A strictly larger subset with the same rank, if `subset` is not a face.
    pub fn face_witness(&self, subset: Subset) -> Option<Subset> {
        (0..self.m)
            .filter(|&i| !subset.contains(i))
            .map(|i| subset.with(i))
            .find(|&larger| self.get(larger) == self.get(subset))
    }

    /// Whether `subset` is inclusion-maximal among subsets of its rank.
    pub fn is_face(&self, subset: Subset) -> bool {
        self.face_witness(subset).is_none()
    }

    /// The `r`-faces, in bitmask order; empty when `r` exceeds the total rank.
    pub fn faces(&self, r: usize) -> Vec<Subset> {
        Subset::all(self.m).filter(|&s| self.get(s) == r && self.is_face(s)).collect()
    }

    /// All faces of every rank, including the empty face when it is maximal.
    pub fn all_faces(&self) -> Vec<Subset> {
        Subset::all(self.m).filter(|&s| self.is_face(s)).collect()
    }

    /// Number of `r`-faces for `r = 1..=total`.
    pub fn rank_type(&self) -> Vec<usize> {
        (1..=self.total()).map(|r| self.faces(r).len()).collect()
    }

    /// The rank type with its final entry (always one) removed, as printed in catalogue labels,
    /// followed by `a`/`b` where the catalogue separates two fibre shapes with one rank type.
    pub fn type_label(&self) -> String {
        let full = self.rank_type();
        let truncated = &full[..full.len().saturating_sub(1)];
        if truncated.is_empty() {
            return "(∅)".to_string();
        }
        let body = truncated.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        format!("({body}){}", self.label_suffix(truncated))
    }

    fn label_suffix(&self, truncated: &[usize]) -> &'static str {
        if self.m != 5 {
            return "";
        }
        let mut vertex_sizes: Vec<usize> = self.faces(1).iter().map(|v| v.len()).collect();
        vertex_sizes.sort_unstable();
        match truncated {
            [2] if vertex_sizes == [1, 4] => "a",
            [2] => "b",
            [3] | [3, 3] if vertex_sizes == [1, 2, 2] => "a",
            [3] | [3, 3] => "b",
            [4, 4] if self.rho().blocks().iter().any(|b| b.indices.len() == 3) => "a",
            [4, 4] => "b",
            _ => "",
        }
    }

    /// Pointwise comparison `self(I) <= other(I)` for every subset.
    pub fn leq(&self, other: &RankMatrix) -> Result<bool> {
        self.same_m(other)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }

    fn same_m(&self, other: &RankMatrix) -> Result<()> {
        if self.m != other.m {
            return Err(Error::PointCountMismatch { left: self.m, right: other.m });
        }
        Ok(())
    }

    /// Whether `self` restricted to `block` separates along `part` and `block \ part`.
    fn separates(&self, block: Subset, part: Subset) -> bool {
        let rest = block.difference(part);
        block.subsets().all(|s| self.get(s) == self.get(s.intersection(part)) + self.get(s.intersection(rest)))
    }

    /// The finest decomposition into blocks on which the rank function is additive.
    pub fn rho(&self) -> Splitting {
        let mut blocks = vec![Subset::full(self.m)];
        let mut k = 0;
        while k < blocks.len() {
            let block = blocks[k];
            let anchor = block.min().expect("blocks are nonempty");
            let split =
                block.subsets().find(|&part| part.contains(anchor) && part != block && self.separates(block, part));
            match split {
                Some(part) => {
                    blocks[k] = part;
                    blocks.push(block.difference(part));
                }
                None => k += 1,
            }
        }
        let blocks = blocks.into_iter().map(|indices| Block { indices, rank: self.get(indices) }).collect();
        Splitting::new(self.m, blocks).expect("refinement of [m] is a partition")
    }

    /// The reduction along a face `j`: `I -> phi(I u J) + phi(I n J) - phi(J)`.
    pub fn reduction(&self, j: Subset) -> Result<RankMatrix> {
        if !j.is_subset_of(Subset::full(self.m)) {
            return Err(Error::IndexOutOfRange { index: 32 - j.bits().leading_zeros() as usize, bound: self.m });
        }
        if let Some(larger) = self.face_witness(j) {
            return Err(Error::NotAFace { subset: j, larger });
        }
        let base = self.get(j);
        Ok(RankMatrix::from_fn_unchecked(self.m, |s| self.get(s.union(j)) + self.get(s.intersection(j)) - base))
    }

    /// Relabels points: the result takes the value `self(I)` on `map(I)`.
    pub fn relabel(&self, map: &[usize]) -> RankMatrix {
        let mut values = vec![0; self.values.len()];
        for s in Subset::all(self.m) {
            values[s.map(map).bits() as usize] = self.values[s.bits() as usize];
        }
        RankMatrix { m: self.m, values }
    }

    /// Whether the two rank matrices agree on every subset of `block`.
    pub fn agrees_on(&self, other: &RankMatrix, block: Subset) -> bool {
        block.subsets().all(|s| self.get(s) == other.get(s))
    }

    /// Order membership `self ⪯ other` on the enumerated image for (n, m) = (4, 5).
    pub fn preceq(&self, other: &RankMatrix) -> Result<bool> {
        crate::poset::order_relation(crate::poset::OrderKind::Preceq).holds(self, other)
    }

    /// Order membership `self ≺ other` on the enumerated image for (n, m) = (4, 5).
    pub fn prec(&self, other: &RankMatrix) -> Result<bool> {
        crate::poset::order_relation(crate::poset::OrderKind::Prec).holds(self, other)
    }
}

impl fmt::Display for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.type_label())?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// The rank matrix of a configuration.
pub fn compute_rank_matrix<T: Scalar>(v: &ProjConfig<T>) -> RankMatrix {
    let phi = RankMatrix::from_fn_unchecked(v.m(), |s| v.span_rank(s));
    debug_assert!(phi.check_invariants(Some(v.n())).is_ok());
    phi
}

/// What the order generators need to know about one rank matrix.
#[derive(Debug, Clone)]
pub struct OrderData {
    pub phi: RankMatrix,
    pub rho: Splitting,
    pub reductions: Vec<RankMatrix>,
}

impl OrderData {
    pub fn new(phi: &RankMatrix) -> Self {
        let reductions = phi.all_faces().into_iter().filter_map(|j| phi.reduction(j).ok()).collect();
        OrderData { phi: phi.clone(), rho: phi.rho(), reductions }
    }
}

fn pointwise_leq(psi: &RankMatrix, phi: &RankMatrix) -> bool {
    psi.m == phi.m && psi.values.iter().zip(&phi.values).all(|(a, b)| a <= b)
}

/// Generator of `≺`: same block partition under `rho`, pointwise smaller, some block rank smaller.
pub fn prec_generator(psi: &OrderData, phi: &OrderData) -> bool {
    pointwise_leq(&psi.phi, &phi.phi)
        && psi.rho.partition() == phi.rho.partition()
        && psi.rho.blocks().iter().zip(phi.rho.blocks()).any(|(a, b)| a.rank < b.rank)
}

/// Generators of `⪯`: a reduction by a face, a pointwise smaller matrix agreeing with `phi`
/// on each block of `rho(phi)`, or a generator of `≺`.
pub fn preceq_generator(psi: &OrderData, phi: &OrderData) -> bool {
    let by_reduction = phi.reductions.contains(&psi.phi);
    let by_blocks =
        pointwise_leq(&psi.phi, &phi.phi) && phi.rho.blocks().iter().all(|b| psi.phi.agrees_on(&phi.phi, b.indices));
    by_reduction || by_blocks || prec_generator(psi, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Config, Rational};

    fn cfg(n: usize, cols: &[&[i64]]) -> Config {
        Config::from_int_columns(n, cols).unwrap()
    }

    fn labels(sets: &[Subset]) -> Vec<Vec<usize>> {
        sets.iter().map(|s| s.labels()).collect()
    }

    fn e2e3_example() -> RankMatrix {
        compute_rank_matrix(&cfg(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 1, 1]]))
    }

    #[test]
    fn rank_two_sets_of_worked_example() {
        let phi = e2e3_example();
        assert_eq!(phi.get(Subset::from_labels([2, 3, 4])), 2);
        assert_eq!(phi.total(), 3);
        let rank_two: Vec<_> = Subset::all(4).filter(|&s| phi.get(s) == 2).collect();
        assert_eq!(
            labels(&rank_two),
            vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4], vec![3, 4], vec![2, 3, 4]]
        );
        assert_eq!(labels(&phi.faces(2)), vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3, 4]]);
        assert_eq!(labels(&phi.faces(1)), vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(labels(&phi.faces(3)), vec![vec![1, 2, 3, 4]]);
        assert!(phi.faces(7).is_empty());
        assert_eq!(phi.rank_type(), vec![4, 4, 1]);
        assert_eq!(phi.type_label(), "(4,4)");
    }

    #[test]
    fn all_equal_points() {
        let phi = compute_rank_matrix(&cfg(4, &[&[1, 2, 0, 0][..]; 5]));
        assert!(Subset::all(5).skip(1).all(|s| phi.get(s) == 1));
        assert_eq!(phi.rank_type(), vec![1]);
        assert_eq!(phi.type_label(), "(∅)");
        assert_eq!(phi.rho().to_string(), "{{1,2,3,4,5}^1}");
    }

    #[test]
    fn rho_of_small_examples() {
        let phi = compute_rank_matrix(&cfg(3, &[&[1, 0, 0], &[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(phi.rho().to_string(), "{{1,2}^1,{3}^1,{4}^1}");
        assert_eq!(e2e3_example().rho().to_string(), "{{1}^1,{2,3,4}^2}");
        let free = RankMatrix::from_fn(4, |s| s.len()).unwrap();
        assert_eq!(free.rho().to_string(), "{{1}^1,{2}^1,{3}^1,{4}^1}");
    }

    #[test]
    fn sum_formula_for_split_example() {
        let v = cfg(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 1]]);
        let phi = compute_rank_matrix(&v);
        let blocks =
            [Subset::from_labels([1]), Subset::from_labels([2]), Subset::from_labels([3]), Subset::from_labels([4, 5])];
        for s in Subset::all(5) {
            let expected: usize = blocks.iter().map(|b| s.intersection(*b).len().min(1)).sum();
            assert_eq!(phi.get(s), expected, "subset {s}");
        }
    }

    #[test]
    fn reduction_by_top_face_is_identity() {
        let phi = e2e3_example();
        assert_eq!(phi.reduction(Subset::full(4)).unwrap(), phi);
    }

    #[test]
    fn reduction_rejects_non_faces() {
        let phi = e2e3_example();
        let err = phi.reduction(Subset::from_labels([2, 3])).unwrap_err();
        assert_eq!(
            err,
            Error::NotAFace { subset: Subset::from_labels([2, 3]), larger: Subset::from_labels([2, 3, 4]) }
        );
    }

    #[test]
    fn leq_rejects_mismatched_sizes() {
        let a = RankMatrix::from_fn(3, |s| s.len().min(1)).unwrap();
        let b = RankMatrix::from_fn(4, |s| s.len().min(1)).unwrap();
        assert_eq!(a.leq(&b).unwrap_err().code(), "point_count_mismatch");
        assert!(a.leq(&a).unwrap());
    }

    #[test]
    fn invalid_values_are_rejected() {
        assert!(RankMatrix::from_fn(3, |s| s.len().min(2) + usize::from(s.len() == 3)).is_ok());
        assert!(RankMatrix::from_fn(3, |s| s.len().min(1) * 2).is_err());
        // not submodular: {1,2} and {1,3} rank 1 forces {1,2,3} rank 1
        let weird = RankMatrix::from_fn(3, |s| match s.bits() {
            0b011 | 0b101 => 1,
            0b111 => 2,
            _ => s.len().min(2),
        });
        assert!(weird.is_err());
    }

    #[test]
    fn json_round_trip() {
        let phi = e2e3_example();
        let text = serde_json::to_string(&phi).unwrap();
        assert!(text.starts_with("{\"m\":4,\"values\":[0,1,1,2,"));
        let back: RankMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, phi);
        assert!(serde_json::from_str::<RankMatrix>("{\"m\":2,\"values\":[0,1,1,3]}").is_err());
    }

    #[test]
    fn scalar_type_is_generic() {
        let v = ProjConfig::<num_rational::Rational64>::from_int_columns(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(compute_rank_matrix(&v).rank_type(), vec![3, 1]);
        let _ = Rational::from_int(0);
    }
}
