use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of the point indices `0..m`, stored as a bitmask (bit `i` is point `i + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn full(m: usize) -> Self {
        Subset(if m >= 32 { u32::MAX } else { (1u32 << m) - 1 })
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    /// Builds a subset from zero-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Subset(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    /// Builds a subset from one-based point labels.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        Self::from_indices(labels.into_iter().map(|l| l - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest index in the subset.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Zero-based indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Applies an index map: the result contains `map[i]` for each `i` in the subset.
    pub fn map(self, map: &[usize]) -> Self {
        Self::from_indices(self.iter().map(|i| map[i]))
    }

    /// Every subset of `0..m`, in bitmask order.
    pub fn all(m: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << m).map(Subset)
    }

    /// Every subset of `self`, in bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == full { None } else { Some((current | !full).wrapping_add(1) & full) };
            Some(Subset(current))
        })
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, label) in self.labels().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(deserializer)?;
        if let Some(bad) = labels.iter().find(|&&l| l == 0 || l > 31) {
            return Err(serde::de::Error::custom(format!("point label {bad} out of range")));
        }
        Ok(Subset::from_labels(labels))
    }
}

/// All set partitions of `0..m`, each as blocks sorted by minimum element.
pub fn set_partitions(m: usize) -> Vec<Vec<Subset>> {
    fn grow(i: usize, m: usize, blocks: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
        if i == m {
            out.push(blocks.clone());
            return;
        }
        for k in 0..blocks.len() {
            let saved = blocks[k];
            blocks[k] = saved.with(i);
            grow(i + 1, m, blocks, out);
            blocks[k] = saved;
        }
        blocks.push(Subset::singleton(i));
        grow(i + 1, m, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    grow(0, m, &mut Vec::new(), &mut out);
    out
}
