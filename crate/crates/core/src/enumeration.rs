//! The image of the rank-matrix map for five points in projective 3-space.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linalg::ProjConfig;
use crate::family::{Family, ParamKind, Parameter};
use crate::rank_matrix::RankMatrix;
use crate::scalar::Scalar;
use crate::splitting::{Block, Splitting};
use crate::subset::set_partitions;

/// Type labels in catalogue order.
pub const TYPE_LABELS: [&str; 20] = [
    "(∅)",
    "(2)a",
    "(2)b",
    "(3)a",
    "(3)b",
    "(4)",
    "(5)",
    "(3,3)a",
    "(3,3)b",
    "(4,4)a",
    "(4,4)b",
    "(5,5)",
    "(4,6)",
    "(5,6)",
    "(5,8)",
    "(5,10)",
    "(4,6,4)",
    "(5,8,5)",
    "(5,10,7)",
    "(5,10,10)",
];

/// Expected number of rank matrices carrying each label, in catalogue order.
pub const EXPECTED_MULTIPLICITIES: [usize; 20] =
    [1, 5, 10, 15, 10, 5, 1, 15, 10, 10, 30, 5, 10, 15, 10, 1, 10, 10, 5, 1];

/// One fibre of the rank-matrix map.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogueEntry {
    pub rank_matrix: RankMatrix,
    pub type_label: String,
    pub splitting: Splitting,
    pub family: Family,
    #[serde(skip)]
    pub frame: Vec<usize>,
}

#[derive(Debug)]
pub struct Catalogue {
    entries: Vec<CatalogueEntry>,
    index: HashMap<RankMatrix, usize>,
}

impl Catalogue {
    /// Builds the catalogue from scratch; [`catalogue`] caches the result.
    pub fn build() -> Self {
        let mut families: Vec<Family> = pprime_splittings(4, 5).into_iter().map(Family::Split).collect();
        families.extend(Family::named_instances());
        let mut entries: Vec<CatalogueEntry> = families
            .into_iter()
            .map(|family| {
                let rank_matrix = family.rank_matrix();
                CatalogueEntry {
                    type_label: rank_matrix.type_label(),
                    splitting: rank_matrix.rho(),
                    frame: family.frame(),
                    rank_matrix,
                    family,
                }
            })
            .collect();
        entries.sort_by_key(|e| TYPE_LABELS.iter().position(|l| *l == e.type_label).unwrap_or(TYPE_LABELS.len()));
        let index = entries.iter().enumerate().map(|(i, e)| (e.rank_matrix.clone(), i)).collect();
        Catalogue { entries, index }
    }

    pub fn entries(&self) -> &[CatalogueEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, phi: &RankMatrix) -> Option<usize> {
        self.index.get(phi).copied()
    }

    pub fn entry(&self, phi: &RankMatrix) -> Result<&CatalogueEntry> {
        self.position(phi).map(|i| &self.entries[i]).ok_or(Error::NotInImage)
    }

    /// Number of entries carrying each label, in catalogue order (unlisted labels last).
    pub fn label_counts(&self) -> Vec<(String, usize)> {
        let mut counts: Vec<(String, usize)> = Vec::new();
        for e in &self.entries {
            match counts.iter_mut().find(|(l, _)| *l == e.type_label) {
                Some((_, c)) => *c += 1,
                None => counts.push((e.type_label.clone(), 1)),
            }
        }
        counts
    }
}

/// The shared catalogue of every fibre.
pub fn catalogue() -> &'static Catalogue {
    static CATALOGUE: OnceLock<Catalogue> = OnceLock::new();
    CATALOGUE.get_or_init(Catalogue::build)
}

/// Every splitting of `[m]` in P' for ambient dimension `n`.
pub fn pprime_splittings(n: usize, m: usize) -> Vec<Splitting> {
    let mut out = Vec::new();
    for partition in set_partitions(m) {
        let choices: Vec<Vec<usize>> =
            partition.iter().map(|b| if b.len() >= 3 { vec![1, b.len() - 1] } else { vec![1] }).collect();
        let mut ranks = vec![0usize; partition.len()];
        loop {
            let blocks = partition.iter().zip(&ranks).enumerate().map(|(k, (b, &c))| Block::new(*b, choices[k][c]));
            let s = Splitting::new(m, blocks.collect()).expect("set partitions cover [m]");
            if s.pprime_membership(n) {
                out.push(s);
            }
            let Some(k) = (0..ranks.len()).find(|&k| ranks[k] + 1 < choices[k].len()) else {
                break;
            };
            ranks[k] += 1;
            ranks[..k].iter_mut().for_each(|r| *r = 0);
        }
    }
    out
}

/// Every rank matrix of five points in projective 3-space, grouped by type label.
pub fn enumerate_image() -> Vec<RankMatrix> {
    catalogue().entries().iter().map(|e| e.rank_matrix.clone()).collect()
}

/// The parameter used for realizability checks: `[1:2]`, `[1:2:3]` or `([1:2],[1:3])`.
pub fn fixed_parameter<T: Scalar>(kind: ParamKind) -> Parameter<T> {
    let points: &[&[i64]] = match kind {
        ParamKind::Line => &[&[1, 2]],
        ParamKind::Plane => &[&[1, 2, 3]],
        ParamKind::LinePair => &[&[1, 2], &[1, 3]],
    };
    Parameter::from_ints(points).expect("fixed parameters are valid")
}

/// A configuration realizing `phi`, built from the catalogued representative.
pub fn verify_realizability<T: Scalar>(phi: &RankMatrix) -> Result<ProjConfig<T>> {
    let entry = catalogue().entry(phi)?;
    let param = entry.family.parameter_kind().map(fixed_parameter::<T>);
    entry.family.representative(param.as_ref())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventy_seven_pprime_splittings() {
        assert_eq!(pprime_splittings(4, 5).len(), 77);
    }

    #[test]
    fn every_entry_is_a_valid_rank_matrix() {
        for e in catalogue().entries() {
            e.rank_matrix.check_invariants(Some(4)).unwrap();
            assert_eq!(e.splitting, e.rank_matrix.rho());
        }
    }
}
