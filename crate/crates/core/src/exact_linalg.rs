//! Exact linear algebra over a [`Scalar`] field.
//!
//! Ranks and determinants use fraction-free (Bareiss) elimination; solving and
//! null spaces go through reduced row echelon form.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subset::Subset;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected: format!("{rows}x{cols} = {} entries", rows * cols),
                found: format!("{} entries", data.len()),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch {
                expected: format!("rows of length {cols}"),
                found: format!("a row of length {}", bad.len()),
            });
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a `rows`-row matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Result<Self> {
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::ShapeMismatch {
                expected: format!("columns of length {rows}"),
                found: format!("a column of length {}", bad.len()),
            });
        }
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, column) in columns.iter().enumerate() {
            for (i, x) in column.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<T>) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                expected: format!("{} rows on the right factor", self.cols),
                found: format!("{}", other.rows),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(r, k).clone() * other.get(k, c).clone();
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch {
                expected: format!("vector of length {}", self.cols),
                found: format!("length {}", v.len()),
            });
        }
        Ok((0..self.rows)
            .map(|r| (0..self.cols).fold(T::zero(), |acc, k| acc + self.get(r, k).clone() * v[k].clone()))
            .collect())
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        for &r in rows {
            check_index(r, self.rows)?;
        }
        for &c in cols {
            check_index(c, self.cols)?;
        }
        let data =
            rows.iter().flat_map(|&r| cols.iter().map(move |&c| (r, c))).map(|(r, c)| self.get(r, c).clone()).collect();
        Ok(Matrix { rows: rows.len(), cols: cols.len(), data })
    }

    /// Dimension of the column span.
    pub fn rank(&self) -> usize {
        bareiss(self.clone()).0
    }

    pub fn determinant(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch {
                expected: "a square matrix".into(),
                found: format!("{}x{}", self.rows, self.cols),
            });
        }
        if self.rows == 0 {
            return Ok(T::one());
        }
        let (rank, reduced, swaps) = bareiss(self.clone());
        if rank < self.rows {
            return Ok(T::zero());
        }
        let last = reduced.get(self.rows - 1, self.cols - 1).clone();
        Ok(if swaps % 2 == 0 { last } else { -last })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = T::one() / a.get(r, c).clone();
            for j in c..a.cols {
                let x = a.get(r, j).clone() * inv.clone();
                a.set(r, j, x);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in c..a.cols {
                    let x = a.get(i, j).clone() - f.clone() * a.get(r, j).clone();
                    a.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// A basis of `{x : self * x = 0}`.
    pub fn null_space(&self) -> Vec<Vec<T>> {
        let (reduced, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![T::zero(); self.cols];
                x[f] = T::one();
                for (row, &p) in pivots.iter().enumerate() {
                    x[p] = -reduced.get(row, f).clone();
                }
                x
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
}

fn check_index(index: usize, bound: usize) -> Result<()> {
    if index < bound {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, bound })
    }
}

/// Fraction-free elimination returning (rank, reduced matrix, row swaps).
fn bareiss<T: Scalar>(mut a: Matrix<T>) -> (usize, Matrix<T>, usize) {
    let mut prev = T::one();
    let mut r = 0;
    let mut swaps = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            a.swap_rows(p, r);
            swaps += 1;
        }
        let pivot = a.get(r, c).clone();
        for i in r + 1..a.rows {
            let lead = a.get(i, c).clone();
            for j in c + 1..a.cols {
                let x = (a.get(i, j).clone() * pivot.clone() - lead.clone() * a.get(r, j).clone()) / prev.clone();
                a.set(i, j, x);
            }
            a.set(i, c, T::zero());
        }
        prev = pivot;
        r += 1;
    }
    (r, a, swaps)
}

/// Rank of a `rows x cols` matrix given row-major.
pub fn rank<T: Scalar>(rows: usize, cols: usize, entries: &[T]) -> Result<usize> {
    Ok(Matrix::new(rows, cols, entries.to_vec())?.rank())
}

/// Determinant of the submatrix on `row_indices x col_indices`, in that order.
pub fn minor<T: Scalar>(entries: &Matrix<T>, row_indices: &[usize], col_indices: &[usize]) -> Result<T> {
    if row_indices.len() != col_indices.len() {
        return Err(Error::CardinalityMismatch { rows: row_indices.len(), cols: col_indices.len() });
    }
    entries.select(row_indices, col_indices)?.determinant()
}

/// Scales a nonzero vector so that its first nonzero entry is one.
pub fn normalize<T: Scalar>(v: &[T]) -> Vec<T> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let lead = lead.clone();
            v.iter().map(|x| x.clone() / lead.clone()).collect()
        }
        None => v.to_vec(),
    }
}

/// An ordered tuple of `m` points of projective `(n-1)`-space, stored as nonzero columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjConfig<T> {
    n: usize,
    columns: Vec<Vec<T>>,
}

impl<T: Scalar> ProjConfig<T> {
    pub fn new(n: usize, columns: Vec<Vec<T>>) -> Result<Self> {
        for (k, column) in columns.iter().enumerate() {
            if column.len() != n {
                return Err(Error::ShapeMismatch {
                    expected: format!("column {} of length {n}", k + 1),
                    found: format!("length {}", column.len()),
                });
            }
            if column.iter().all(T::is_zero) {
                return Err(Error::ZeroColumn { column: k + 1 });
            }
        }
        Ok(ProjConfig { n, columns })
    }

    pub fn from_int_columns(n: usize, columns: &[&[i64]]) -> Result<Self> {
        Self::new(n, columns.iter().map(|c| c.iter().map(|&x| T::from_int(x)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, i: usize) -> &[T] {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[Vec<T>] {
        &self.columns
    }

    /// The `n x m` matrix with the points as columns.
    pub fn matrix(&self) -> Matrix<T> {
        Matrix::from_columns(self.n, &self.columns).expect("columns have length n")
    }

    /// Dimension of the span of the columns in `subset`.
    pub fn span_rank(&self, subset: Subset) -> usize {
        let cols: Vec<Vec<T>> = subset.iter().map(|i| self.columns[i].clone()).collect();
        Matrix::from_columns(self.n, &cols).expect("columns have length n").rank()
    }

    pub fn rank(&self) -> usize {
        self.span_rank(Subset::full(self.m()))
    }

    /// The configuration `g * v`.
    pub fn transform(&self, g: &Matrix<T>) -> Result<Self> {
        if g.rows() != self.n || g.cols() != self.n {
            return Err(Error::ShapeMismatch {
                expected: format!("{0}x{0} matrix", self.n),
                found: format!("{}x{}", g.rows(), g.cols()),
            });
        }
        let columns = self.columns.iter().map(|c| g.mul_vec(c)).collect::<Result<Vec<_>>>()?;
        Self::new(self.n, columns)
    }

    /// Reorders points: column `k` of the result is column `order[k]` of `self`.
    pub fn reorder(&self, order: &[usize]) -> Self {
        ProjConfig { n: self.n, columns: order.iter().map(|&i| self.columns[i].clone()).collect() }
    }

    /// Each column scaled so that its first nonzero entry is one.
    pub fn normalized(&self) -> Self {
        ProjConfig { n: self.n, columns: self.columns.iter().map(|c| normalize(c)).collect() }
    }

    /// Whether the two tuples define the same projective points.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        self.n == other.n && self.normalized() == other.normalized()
    }

    /// A copy with column `i` replaced.
    pub fn with_column(&self, i: usize, column: Vec<T>) -> Result<Self> {
        let mut columns = self.columns.clone();
        columns[i] = column;
        Self::new(self.n, columns)
    }
}

/// Coefficients expressing column `target` in the basis formed by the columns `basis`.
pub fn coordinates_in_span<T: Scalar>(config: &ProjConfig<T>, basis: &[usize], target: usize) -> Result<Vec<T>> {
    for &i in basis.iter().chain([&target]) {
        check_index(i, config.m())?;
    }
    let basis_set = Subset::from_indices(basis.iter().copied());
    let mut cols: Vec<Vec<T>> = basis.iter().map(|&i| config.column(i).to_vec()).collect();
    if basis_set.len() != basis.len() || Matrix::from_columns(config.n(), &cols)?.rank() < basis.len() {
        return Err(Error::DependentBasis { basis: basis_set });
    }
    cols.push(config.column(target).to_vec());
    let (reduced, pivots) = Matrix::from_columns(config.n(), &cols)?.rref();
    if pivots.contains(&basis.len()) {
        return Err(Error::OutsideSpan { basis: basis_set, target: target + 1 });
    }
    Ok((0..basis.len()).map(|row| reduced.get(row, basis.len()).clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(Matrix::<Rational>::identity(4).rank(), 4);
    }

    #[test]
    fn repeated_column_drops_rank() {
        assert_eq!(mat(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, 0]]).rank(), 2);
    }

    #[test]
    fn rank_rejects_wrong_shape() {
        let err = rank(2, 2, &[q(1), q(2), q(3)]).unwrap_err();
        assert_eq!(err.code(), "shape_mismatch");
    }

    #[test]
    fn minors_of_small_matrices() {
        let id = Matrix::<Rational>::identity(2);
        assert_eq!(minor(&id, &[0, 1], &[0, 1]).unwrap(), q(1));
        assert_eq!(minor(&mat(&[&[1, 1], &[0, 0]]), &[0, 1], &[0, 1]).unwrap(), q(0));
        // columns (1,2) and (3,4)
        let m = mat(&[&[1, 3], &[2, 4]]);
        assert_eq!(minor(&m, &[0, 1], &[0, 1]).unwrap(), q(-2));
        assert_eq!(minor(&m, &[0, 1], &[1, 0]).unwrap(), q(2));
        assert_eq!(minor(&m, &[0], &[0, 1]).unwrap_err().code(), "cardinality_mismatch");
    }

    #[test]
    fn coordinates_read_off() {
        let v =
            ProjConfig::<Rational>::from_int_columns(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 2, 0], &[1, 1, 1]])
                .unwrap();
        assert_eq!(coordinates_in_span(&v, &[0, 1], 3).unwrap(), vec![q(1), q(2)]);
        assert_eq!(coordinates_in_span(&v, &[0, 1, 2], 4).unwrap(), vec![q(1), q(1), q(1)]);
        assert_eq!(coordinates_in_span(&v, &[0, 1], 4).unwrap_err().code(), "outside_span");
        assert_eq!(coordinates_in_span(&v, &[0, 1, 3], 4).unwrap_err().code(), "dependent_basis");
    }

    #[test]
    fn zero_column_is_rejected() {
        let err = ProjConfig::<Rational>::from_int_columns(2, &[&[1, 0], &[0, 0]]).unwrap_err();
        assert_eq!(err, Error::ZeroColumn { column: 2 });
    }

    #[test]
    fn null_space_is_annihilated() {
        let m = mat(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let kernel = m.null_space();
        assert_eq!(kernel.len(), 2);
        for x in kernel {
            assert!(m.mul_vec(&x).unwrap().iter().all(|y| y == &q(0)));
        }
    }

    #[test]
    fn determinant_tracks_row_swaps() {
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).determinant().unwrap(), q(-1));
        assert_eq!(mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]).determinant().unwrap(), q(0));
        assert_eq!(mat(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]).determinant().unwrap(), q(-6));
    }
}
