//! Brute-force reference computations.

use fivepoint::{ProjConfig, Rational, Scalar, Subset};
use num_traits::Zero;

/// Rank of the span of the chosen columns, by plain Gaussian elimination.
pub fn span_rank(v: &ProjConfig<Rational>, columns: &[usize]) -> usize {
    let mut rows: Vec<Vec<Rational>> = columns.iter().map(|&i| v.column(i).to_vec()).collect();
    let mut rank = 0;
    for col in 0..v.n() {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if !row[col].is_zero() {
                let f = row[col].clone() / pivot[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= f.clone() * y.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

fn partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for p in partitions(rest) {
        for k in 0..p.len() {
            let mut q = p.clone();
            q[k].insert(0, first);
            out.push(q);
        }
        let mut q = p;
        q.insert(0, vec![first]);
        out.push(q);
    }
    out
}

/// The finest partition of the points whose block spans form a direct sum decomposition
/// of the whole span, with each block's rank; blocks ordered by smallest element.
pub fn direct_sum_decomposition(v: &ProjConfig<Rational>) -> Vec<(Subset, usize)> {
    let all: Vec<usize> = (0..v.m()).collect();
    let total = span_rank(v, &all);
    let best = partitions(&all)
        .into_iter()
        .filter(|p| p.iter().map(|b| span_rank(v, b)).sum::<usize>() == total)
        .max_by_key(Vec::len)
        .expect("the one-block partition always qualifies");
    let mut blocks: Vec<(Subset, usize)> =
        best.iter().map(|b| (Subset::from_indices(b.iter().copied()), span_rank(v, b))).collect();
    blocks.sort_by_key(|(b, _)| Subset::min(*b));
    blocks
}

/// The limit as `t -> 0` of `diag(t^w_1, ..., t^w_n) * v` in projective space: each
/// column keeps only the coordinates of smallest weight among its nonzero ones.
pub fn one_parameter_limit(v: &ProjConfig<Rational>, weights: &[u32]) -> ProjConfig<Rational> {
    let columns = v
        .columns()
        .iter()
        .map(|c| {
            let lowest = (0..c.len()).filter(|&k| !c[k].is_zero()).map(|k| weights[k]).min().expect("nonzero column");
            (0..c.len()).map(|k| if weights[k] == lowest { c[k].clone() } else { Rational::from_int(0) }).collect()
        })
        .collect();
    ProjConfig::new(v.n(), columns).expect("each column keeps a nonzero entry")
}
