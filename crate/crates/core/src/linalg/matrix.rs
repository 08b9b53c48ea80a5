use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `a + c * b` on sparse vectors.
pub(crate) fn axpy(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub(crate) fn scale_vec(v: &[(usize, Scalar)], c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, c * x)).collect()
}

/// Sparse matrix over a field, stored row-wise.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, nrows: usize, ncols: usize) -> Self {
        Matrix {
            field,
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let rows = (0..n).map(|i| vec![(i, field.one())]).collect();
        Matrix {
            field,
            nrows: n,
            ncols: n,
            rows,
        }
    }

    /// Scalar multiple of the identity.
    pub fn scalar(field: FieldSpec, n: usize, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zeros(field, n, n);
        }
        let rows = (0..n).map(|i| vec![(i, c.clone())]).collect();
        Matrix {
            field,
            nrows: n,
            ncols: n,
            rows,
        }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        field: FieldSpec,
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (r, c, v) in triplets {
            if r >= nrows || c >= ncols {
                return Err(Error::Dimension(format!(
                    "entry ({r},{c}) outside {nrows}x{ncols}"
                )));
            }
            if !field.contains(&v) {
                return Err(Error::Field(format!("entry {v} not in {field}")));
            }
            rows[r].push((c, v));
        }
        let rows = rows
            .into_iter()
            .map(|r| normalize_entries(field, r))
            .collect();
        Ok(Matrix {
            field,
            nrows,
            ncols,
            rows,
        })
    }

    pub fn from_rows(field: FieldSpec, ncols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows
            .iter()
            .all(|r| r.iter().all(|(c, v)| *c < ncols && !v.is_zero())));
        Matrix {
            field,
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    /// Builds from small integer entries.
    pub fn from_i64(field: FieldSpec, dense: &[Vec<i64>]) -> Self {
        let nrows = dense.len();
        let ncols = dense.first().map_or(0, Vec::len);
        let rows = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged matrix literal");
                r.iter()
                    .enumerate()
                    .map(|(c, &v)| (c, field.from_i64(v)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        Matrix {
            field,
            nrows,
            ncols,
            rows,
        }
    }

    /// Single column.
    pub fn column_vector(field: FieldSpec, v: SparseVec, len: usize) -> Self {
        let mut rows = vec![Vec::new(); len];
        for (i, x) in v {
            rows[i] = vec![(0, x)];
        }
        Matrix {
            field,
            nrows: len,
            ncols: 1,
            rows,
        }
    }

    /// Permutation matrix sending basis vector `j` to `image[j]`.
    pub fn permutation(field: FieldSpec, image: &[usize]) -> Self {
        let n = image.len();
        let mut rows = vec![Vec::new(); n];
        for (j, &i) in image.iter().enumerate() {
            rows[i] = vec![(j, field.one())];
        }
        Matrix {
            field,
            nrows: n,
            ncols: n,
            rows,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.rows[r].binary_search_by_key(&c, |(i, _)| *i) {
            Ok(k) => self.rows[r][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn density(&self) -> f64 {
        let cells = self.nrows * self.ncols;
        if cells == 0 {
            0.0
        } else {
            self.nnz() as f64 / cells as f64
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    pub fn transpose(&self) -> Matrix {
        let mut rows = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rows[*c].push((r, v.clone()));
            }
        }
        Matrix {
            field: self.field,
            nrows: self.ncols,
            ncols: self.nrows,
            rows,
        }
    }

    pub fn column(&self, c: usize) -> SparseVec {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                row.binary_search_by_key(&c, |(i, _)| *i)
                    .ok()
                    .map(|k| (r, row[k].1.clone()))
            })
            .collect()
    }

    /// All columns as sparse vectors.
    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().rows
    }

    pub fn from_columns(field: FieldSpec, nrows: usize, cols: &[SparseVec]) -> Matrix {
        let t = Matrix {
            field,
            nrows: cols.len(),
            ncols: nrows,
            rows: cols.to_vec(),
        };
        t.transpose()
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.ncols != rhs.nrows {
            return Err(Error::Dimension(format!(
                "product of {}x{} and {}x{}",
                self.nrows, self.ncols, rhs.nrows, rhs.ncols
            )));
        }
        let mut acc: Vec<Option<Scalar>> = vec![None; rhs.ncols];
        let mut touched = Vec::new();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (c, b) in &rhs.rows[*k] {
                        let p = a * b;
                        match &mut acc[*c] {
                            Some(x) => *x = &*x + &p,
                            slot @ None => {
                                *slot = Some(p);
                                touched.push(*c);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let out: SparseVec = touched
                    .drain(..)
                    .filter_map(|c| acc[c].take().filter(|v| !v.is_zero()).map(|v| (c, v)))
                    .collect();
                out
            })
            .collect();
        Ok(Matrix {
            field: self.field,
            nrows: self.nrows,
            ncols: rhs.ncols,
            rows,
        })
    }

    /// Product of a chain `m0 * m1 * ... * mk`.
    pub fn chain(mats: &[&Matrix]) -> Result<Matrix> {
        let (first, rest) = mats
            .split_first()
            .ok_or_else(|| Error::Dimension("empty chain".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, m| acc.mul(m))
    }

    pub fn apply(&self, v: &[(usize, Scalar)]) -> Result<SparseVec> {
        if let Some((i, _)) = v.last() {
            if *i >= self.ncols {
                return Err(Error::Dimension("vector longer than matrix width".into()));
            }
        }
        // column-oriented accumulation through the transpose would allocate; go row-wise
        let out = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                let s = sparse_dot(row, v, self.field);
                (!s.is_zero()).then_some((r, s))
            })
            .collect();
        Ok(out)
    }

    fn combine(&self, rhs: &Matrix, c: &Scalar) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.nrows, self.ncols, rhs.nrows, rhs.ncols
            )));
        }
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(a, b)| axpy(a, c, b))
            .collect();
        Ok(Matrix {
            field: self.field,
            nrows: self.nrows,
            ncols: self.ncols,
            rows,
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.combine(rhs, &self.field.one())
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.combine(rhs, &self.field.from_i64(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let rows = self.rows.iter().map(|r| scale_vec(r, c)).collect();
        Matrix {
            field: self.field,
            nrows: self.nrows,
            ncols: self.ncols,
            rows,
        }
    }

    /// Kronecker product, left factor most significant.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let nrows = self.nrows * rhs.nrows;
        let ncols = self.ncols * rhs.ncols;
        let mut rows = Vec::with_capacity(nrows);
        for a_row in &self.rows {
            for b_row in &rhs.rows {
                let mut row = Vec::with_capacity(a_row.len() * b_row.len());
                for (ca, va) in a_row {
                    for (cb, vb) in b_row {
                        row.push((ca * rhs.ncols + cb, va * vb));
                    }
                }
                rows.push(row);
            }
        }
        Matrix {
            field: self.field,
            nrows,
            ncols,
            rows,
        }
    }

    /// Kronecker product of a list of factors; empty list gives the 1x1 identity.
    pub fn kron_all(field: FieldSpec, factors: &[&Matrix]) -> Matrix {
        factors
            .iter()
            .fold(Matrix::identity(field, 1), |acc, f| acc.kron(f))
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        if self.nrows != self.ncols {
            return Err(Error::Dimension("power of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(self.field, self.nrows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.nrows != rhs.nrows {
            return Err(Error::Dimension("hstack row mismatch".into()));
        }
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(c, v)| (c + self.ncols, v.clone())));
                r
            })
            .collect();
        Ok(Matrix {
            field: self.field,
            nrows: self.nrows,
            ncols: self.ncols + rhs.ncols,
            rows,
        })
    }

    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.ncols != rhs.ncols {
            return Err(Error::Dimension("vstack column mismatch".into()));
        }
        let mut rows = self.rows.clone();
        rows.extend(rhs.rows.iter().cloned());
        Ok(Matrix {
            field: self.field,
            nrows: self.nrows + rhs.nrows,
            ncols: self.ncols,
            rows,
        })
    }

    /// Rows as dense vectors.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.rows
            .iter()
            .map(|row| {
                let mut d = vec![self.field.zero(); self.ncols];
                for (c, v) in row {
                    d[*c] = v.clone();
                }
                d
            })
            .collect()
    }

    /// First column on which `self` and `other` differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<usize> {
        if self == other {
            return None;
        }
        let d = self.sub(other).ok()?;
        d.rows
            .iter()
            .filter_map(|r| r.first().map(|(c, _)| *c))
            .min()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.nrows != self.ncols {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.nrows;
        let aug = self.hstack(&Matrix::identity(self.field, n))?;
        let (rows, pivots) = super::rref::rref(self.field, 2 * n, aug.rows);
        if pivots.iter().any(|&p| p >= n) {
            return Err(Error::Singular);
        }
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .filter(|(c, _)| *c >= n)
                    .map(|(c, v)| (c - n, v))
                    .collect()
            })
            .collect();
        Ok(Matrix {
            field: self.field,
            nrows: n,
            ncols: n,
            rows,
        })
    }
}

pub(crate) fn sparse_dot(a: &[(usize, Scalar)], b: &[(usize, Scalar)], field: FieldSpec) -> Scalar {
    let (mut i, mut j) = (0, 0);
    let mut acc = field.zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = &acc + &(&a[i].1 * &b[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

fn normalize_entries(field: FieldSpec, mut row: Vec<(usize, Scalar)>) -> SparseVec {
    row.sort_by_key(|(c, _)| *c);
    let mut out: SparseVec = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = &*lv + &v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    let _ = field;
    out
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over {}",
            self.nrows, self.ncols, self.field
        )?;
        if self.nrows * self.ncols <= 400 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        } else {
            writeln!(f, "  ({} nonzeros)", self.nnz())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn kron_identities() {
        let i2 = Matrix::identity(q(), 2);
        let i3 = Matrix::identity(q(), 3);
        assert_eq!(i2.kron(&i3), Matrix::identity(q(), 6));
        let f = Matrix::from_i64(q(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(f.kron(&Matrix::identity(q(), 1)), f);
    }

    #[test]
    fn kron_basis_ordering_left_major() {
        let e = |i: usize, n: usize| Matrix::column_vector(q(), vec![(i, q().one())], n);
        // e_1 (x) e_0 in k^2 (x) k^3 is index 1*3 + 0
        let v = e(1, 2).kron(&e(0, 3));
        assert_eq!(v.column(0), vec![(3, q().one())]);
    }

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_i64(q(), &[vec![1, 2, 0], vec![0, 1, -1]]);
        let b = Matrix::from_i64(q(), &[vec![1, 0], vec![1, 1], vec![0, 2]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, Matrix::from_i64(q(), &[vec![3, 2], vec![1, -1]]));
        assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()).unwrap());
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Matrix::from_i64(q(), &[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        let s = Matrix::from_i64(q(), &[vec![1, 1], vec![1, 1]]);
        assert!(matches!(s.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn permutation_acts_on_basis() {
        let p = Matrix::permutation(q(), &[2, 0, 1]);
        assert_eq!(p.column(0), vec![(2, q().one())]);
        assert_eq!(p.column(1), vec![(0, q().one())]);
    }
}
