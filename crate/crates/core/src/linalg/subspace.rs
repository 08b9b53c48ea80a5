use std::fmt;

use super::matrix::{axpy, Matrix, SparseVec};
use super::rref::rref;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A linear subspace of `k^ambient`, held as the RREF of its basis rows.
///
/// Because the RREF is canonical, two subspaces are equal exactly when
/// their stored forms are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: (0..ambient).map(|i| vec![(i, field.one())]).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(field: FieldSpec, ambient: usize, vectors: Vec<SparseVec>) -> Self {
        let (rows, pivots) = rref(field, ambient, vectors);
        Subspace {
            field,
            ambient,
            rows,
            pivots,
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Self::span(m.field(), m.nrows(), m.columns())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis_vectors(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis as the columns of an `ambient x dim` matrix.
    pub fn basis(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.rows)
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` is not in the subspace.
    pub fn coordinates(&self, v: &[(usize, Scalar)]) -> Option<Vec<Scalar>> {
        let mut rem: SparseVec = v.to_vec();
        let mut coords = vec![self.field.zero(); self.dim()];
        for (k, (&p, row)) in self.pivots.iter().zip(&self.rows).enumerate() {
            if let Ok(pos) = rem.binary_search_by_key(&p, |(c, _)| *c) {
                let c = rem[pos].1.clone();
                rem = axpy(&rem, &-&c, row);
                coords[k] = c;
            }
        }
        rem.is_empty().then_some(coords)
    }

    pub fn contains(&self, v: &[(usize, Scalar)]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    /// Rows of a matrix whose kernel is this subspace.
    pub fn annihilator(&self) -> Matrix {
        let mut is_pivot = vec![None; self.ambient];
        for (k, &p) in self.pivots.iter().enumerate() {
            is_pivot[p] = Some(k);
        }
        // functional for free column j: e_j - sum_k row_k[j] e_{p_k}
        let mut funcs: Vec<Vec<(usize, Scalar)>> = (0..self.ambient).map(|_| Vec::new()).collect();
        for (k, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                if is_pivot[*j].is_none() {
                    funcs[*j].push((self.pivots[k], -v));
                }
            }
        }
        let rows = (0..self.ambient)
            .filter(|j| is_pivot[*j].is_none())
            .map(|j| {
                let mut f = std::mem::take(&mut funcs[j]);
                f.push((j, self.field.one()));
                f.sort_by_key(|(c, _)| *c);
                f
            })
            .collect();
        Matrix::from_rows(self.field, self.ambient, rows)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self, other)?;
        let mut v = self.rows.clone();
        v.extend(other.rows.iter().cloned());
        Ok(Subspace::span(self.field, self.ambient, v))
    }

    /// Image of this subspace under `f`.
    pub fn image(&self, f: &Matrix) -> Result<Subspace> {
        if f.ncols() != self.ambient {
            return Err(Error::Dimension(
                "image: matrix width differs from ambient".into(),
            ));
        }
        let imgs = self
            .rows
            .iter()
            .map(|r| f.apply(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(self.field, f.nrows(), imgs))
    }
}

fn check_ambient(u: &Subspace, v: &Subspace) -> Result<()> {
    if u.ambient != v.ambient {
        return Err(Error::Dimension(format!(
            "ambient {} vs {}",
            u.ambient, v.ambient
        )));
    }
    Ok(())
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}, pivots {:?})",
            self.dim(),
            self.ambient,
            self.pivots
        )
    }
}

/// Kernel `{v : f v = 0}`.
pub fn kernel(f: &Matrix) -> Subspace {
    let field = f.field();
    let n = f.ncols();
    let (rows, pivots) = rref(field, n, f.rows().to_vec());
    let mut pivot_of = vec![None; n];
    for (k, &p) in pivots.iter().enumerate() {
        pivot_of[p] = Some(k);
    }
    // free column j: v_j = 1, v_{p_k} = -row_k[j]
    let mut vecs: Vec<SparseVec> = (0..n).map(|_| Vec::new()).collect();
    for (k, row) in rows.iter().enumerate() {
        for (j, v) in row {
            if pivot_of[*j].is_none() {
                vecs[*j].push((pivots[k], -v));
            }
        }
    }
    let basis = (0..n)
        .filter(|j| pivot_of[*j].is_none())
        .map(|j| {
            let mut v = std::mem::take(&mut vecs[j]);
            v.push((j, field.one()));
            v.sort_by_key(|(c, _)| *c);
            v
        })
        .collect();
    Subspace::span(field, n, basis)
}

pub fn rank(f: &Matrix) -> usize {
    rref(f.field(), f.ncols(), f.rows().to_vec()).1.len()
}

/// Subspace on which `f` and `g` agree.
pub fn equalizer(f: &Matrix, g: &Matrix) -> Result<Subspace> {
    if f.shape() != g.shape() {
        return Err(Error::Dimension(format!(
            "equalizer of {}x{} and {}x{}",
            f.nrows(),
            f.ncols(),
            g.nrows(),
            g.ncols()
        )));
    }
    Ok(kernel(&f.sub(g)?))
}

pub fn intersect(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    check_ambient(u, v)?;
    if u.is_full() {
        return Ok(v.clone());
    }
    if v.is_full() {
        return Ok(u.clone());
    }
    Ok(kernel(&u.annihilator().vstack(&v.annihilator())?))
}

/// `{v : f v ∈ target}`.
pub fn preimage(f: &Matrix, target: &Subspace) -> Result<Subspace> {
    if f.nrows() != target.ambient_dim() {
        return Err(Error::Dimension(format!(
            "preimage: map lands in dim {}, subspace lives in dim {}",
            f.nrows(),
            target.ambient_dim()
        )));
    }
    if target.is_full() {
        return Ok(Subspace::full(f.field(), f.ncols()));
    }
    Ok(kernel(&target.annihilator().mul(f)?))
}

pub fn kronecker(f: &Matrix, g: &Matrix) -> Matrix {
    f.kron(g)
}

/// Largest subspace of `seed` mapped into itself by every operator.
pub fn largest_invariant_subspace(seed: &Subspace, ops: &[&Matrix]) -> Result<Subspace> {
    let n = seed.ambient_dim();
    if let Some(bad) = ops.iter().find(|t| t.shape() != (n, n)) {
        return Err(Error::Dimension(format!(
            "operator {}x{} is not an endomorphism of dim {n}",
            bad.nrows(),
            bad.ncols()
        )));
    }
    let mut v = seed.clone();
    loop {
        let mut next = v.clone();
        for t in ops {
            next = intersect(&next, &preimage(t, &v)?)?;
        }
        if next.dim() == v.dim() {
            return Ok(v);
        }
        v = next;
    }
}

/// Matrix `r` with `target.basis * r == op * source.basis`.
pub fn restrict_operator(op: &Matrix, source: &Subspace, target: &Subspace) -> Result<Matrix> {
    if op.ncols() != source.ambient_dim() || op.nrows() != target.ambient_dim() {
        return Err(Error::Dimension(
            "restriction: operator and subspaces disagree".into(),
        ));
    }
    let field = op.field();
    let mut cols = Vec::with_capacity(source.dim());
    for (k, b) in source.basis_vectors().iter().enumerate() {
        let img = op.apply(b)?;
        let coords = target.coordinates(&img).ok_or_else(|| {
            Error::Restriction(format!(
                "image of basis vector {k} leaves the target subspace"
            ))
        })?;
        cols.push(
            coords
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect::<SparseVec>(),
        );
    }
    Ok(Matrix::from_columns(field, target.dim(), &cols))
}
