//! Splittings: decompositions of a configuration into blocks spanning independent subspaces.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_linalg::{normalize, ProjConfig};
use crate::rank_matrix::{compute_rank_matrix, RankMatrix};
use crate::scalar::Scalar;
use crate::subset::Subset;

/// One block `I_k` of a splitting with its rank `r_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    #[serde(rename = "block")]
    pub indices: Subset,
    pub rank: usize,
}

impl Block {
    pub fn new(indices: Subset, rank: usize) -> Self {
        Block { indices, rank }
    }
}

/// A partition of `[m]` with a rank attached to each block, blocks sorted by minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Splitting {
    m: usize,
    blocks: Vec<Block>,
}

/// The multiset `{(#I_k)^{r_k}}` of block sizes with block ranks, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType(pub Vec<(usize, usize)>);

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(size, rank)| format!("{size}^{rank}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Splitting {
    pub fn new(m: usize, mut blocks: Vec<Block>) -> Result<Self> {
        let full = Subset::full(m);
        let mut seen = Subset::EMPTY;
        for b in &blocks {
            if b.indices.is_empty() {
                return Err(Error::InvalidSplitting("blocks must be nonempty".into()));
            }
            if !b.indices.is_subset_of(full) {
                return Err(Error::InvalidSplitting(format!("block {} exceeds [{m}]", b.indices)));
            }
            if !seen.intersection(b.indices).is_empty() {
                return Err(Error::InvalidSplitting(format!("block {} overlaps another block", b.indices)));
            }
            if b.rank == 0 {
                return Err(Error::InvalidSplitting(format!("block {} has rank 0", b.indices)));
            }
            seen = seen.union(b.indices);
        }
        if seen != full {
            return Err(Error::InvalidSplitting(format!("blocks cover {seen}, not all of [{m}]")));
        }
        blocks.sort_by_key(|b| b.indices.min());
        Ok(Splitting { m, blocks })
    }

    /// Builds a splitting from `(one-based labels, rank)` pairs.
    pub fn from_labels(m: usize, blocks: &[(&[usize], usize)]) -> Result<Self> {
        Self::new(
            m,
            blocks.iter().map(|(labels, r)| Block::new(Subset::from_labels(labels.iter().copied()), *r)).collect(),
        )
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn partition(&self) -> Vec<Subset> {
        self.blocks.iter().map(|b| b.indices).collect()
    }

    pub fn total_rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank).sum()
    }

    pub fn splitting_type(&self) -> SplittingType {
        let mut t: Vec<_> = self.blocks.iter().map(|b| (b.indices.len(), b.rank)).collect();
        t.sort_unstable();
        SplittingType(t)
    }

    /// Whether the splitting arises from some configuration in `(P^{n-1})^m`.
    pub fn image_membership(&self, n: usize) -> bool {
        self.total_rank() <= n && self.blocks.iter().all(|b| b.rank == 1 || (2 <= b.rank && b.rank < b.indices.len()))
    }

    /// Whether every block has rank one or rank one less than its size.
    pub fn pprime_membership(&self, n: usize) -> bool {
        self.image_membership(n) && self.blocks.iter().all(|b| b.rank == 1 || b.rank + 1 == b.indices.len())
    }

    /// The rank matrix `I -> sum_k min(#(I n I_k), r_k)` of a splitting in P'.
    pub fn rho_inverse(&self, n: usize) -> Result<RankMatrix> {
        if !self.pprime_membership(n) {
            return Err(Error::SplittingPrecondition { splitting: self.to_string(), set: "P'", n });
        }
        Ok(self.sum_of_uniform())
    }

    pub(crate) fn sum_of_uniform(&self) -> RankMatrix {
        RankMatrix::from_fn_unchecked(self.m, |s| {
            self.blocks.iter().map(|b| s.intersection(b.indices).len().min(b.rank)).sum()
        })
    }

    /// Relabels points: block `I_k` becomes `map(I_k)`.
    pub fn relabel(&self, map: &[usize]) -> Splitting {
        let blocks = self.blocks.iter().map(|b| Block::new(b.indices.map(map), b.rank)).collect();
        Splitting::new(self.m, blocks).expect("a permutation maps partitions to partitions")
    }

    /// Number of parameter points block `k` takes in the representative.
    pub fn parameter_count(&self, k: usize) -> usize {
        let b = self.blocks[k];
        if b.rank == 1 {
            0
        } else {
            b.indices.len().saturating_sub(b.rank + 1)
        }
    }

    /// The block-diagonal representative: block `k` uses coordinates after those of the previous
    /// blocks, its columns receive the standard basis, then their sum, then the parameter points.
    ///
    /// `params[k]` lists the points of `P^{r_k - 1}` for block `k`; an empty slice means none.
    pub fn representative<T: Scalar>(&self, n: usize, params: &[Vec<Vec<T>>]) -> Result<ProjConfig<T>> {
        if !self.image_membership(n) {
            return Err(Error::SplittingPrecondition { splitting: self.to_string(), set: "the image of varpi", n });
        }
        let expected: usize = (0..self.blocks.len()).map(|k| self.parameter_count(k)).sum();
        if params.is_empty() && expected > 0 || !params.is_empty() && params.len() != self.blocks.len() {
            return Err(Error::ParameterArity { expected, found: params.iter().map(Vec::len).sum() });
        }
        let mut columns = vec![Vec::new(); self.m];
        let mut offset = 0;
        for (k, b) in self.blocks.iter().enumerate() {
            let points = params.get(k).map(Vec::as_slice).unwrap_or(&[]);
            if points.len() != self.parameter_count(k) {
                return Err(Error::ParameterArity { expected: self.parameter_count(k), found: points.len() });
            }
            let embed = |coords: &[T]| {
                let mut v = vec![T::zero(); n];
                v[offset..offset + coords.len()].clone_from_slice(coords);
                v
            };
            let unit = |i: usize| {
                let mut e = vec![T::zero(); b.rank];
                e[i] = T::one();
                e
            };
            for (position, index) in b.indices.iter().enumerate() {
                let local = if b.rank == 1 {
                    unit(0)
                } else if position < b.rank {
                    unit(position)
                } else if position == b.rank {
                    vec![T::one(); b.rank]
                } else {
                    let p = &points[position - b.rank - 1];
                    if p.len() != b.rank || p.iter().all(T::is_zero) {
                        return Err(Error::InvalidParameter(format!("{p:?}"), b.rank));
                    }
                    normalize(p)
                };
                columns[index] = embed(&local);
            }
            offset += b.rank;
        }
        ProjConfig::new(n, columns)
    }
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| format!("{}^{}", b.indices, b.rank)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for Splitting {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Splitting {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Block>::deserialize(deserializer)?;
        let m = blocks.iter().map(|b| b.indices.len()).sum();
        Splitting::new(m, blocks).map_err(serde::de::Error::custom)
    }
}

/// The splitting of a configuration, read off from its rank matrix.
pub fn compute_splitting<T: Scalar>(v: &ProjConfig<T>) -> Splitting {
    compute_rank_matrix(v).rho()
}
