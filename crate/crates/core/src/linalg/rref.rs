//! Reduced row echelon form over sparse or dense rows.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::matrix::{axpy, scale_vec, SparseVec};
use crate::field::{FieldSpec, Scalar};

/// Rows above this density are eliminated densely.
const DENSE_THRESHOLD: f64 = 0.5;

/// Reduced row echelon form of the row space spanned by `rows`.
///
/// Returns the nonzero RREF rows sorted by pivot column, together with the
/// pivot columns. Pivots are the standard leftmost ones, so the output is
/// canonical for the row space.
pub fn rref(field: FieldSpec, ncols: usize, rows: Vec<SparseVec>) -> (Vec<SparseVec>, Vec<usize>) {
    let nnz: usize = rows.iter().map(Vec::len).sum();
    let cells = rows.len() * ncols;
    if cells > 0 && nnz as f64 / cells as f64 > DENSE_THRESHOLD {
        dense_rref(field, ncols, rows)
    } else {
        sparse_rref(field, rows)
    }
}

fn sparse_rref(field: FieldSpec, rows: Vec<SparseVec>) -> (Vec<SparseVec>, Vec<usize>) {
    // pivot column -> normalized echelon row (leading entry 1)
    let mut echelon: std::collections::BTreeMap<usize, SparseVec> = Default::default();
    let mut heap: BinaryHeap<(Reverse<usize>, Reverse<usize>, usize)> = BinaryHeap::new();
    let mut pool: Vec<Option<SparseVec>> = Vec::with_capacity(rows.len());
    for r in rows.into_iter().filter(|r| !r.is_empty()) {
        heap.push((Reverse(r[0].0), Reverse(r.len()), pool.len()));
        pool.push(Some(r));
    }
    while let Some((Reverse(lead), _, slot)) = heap.pop() {
        let row = pool[slot].take().expect("row consumed twice");
        match echelon.get(&lead) {
            Some(piv) => {
                let c = -&row[0].1;
                let reduced = axpy(&row, &c, piv);
                if let Some(&(l, _)) = reduced.first() {
                    heap.push((Reverse(l), Reverse(reduced.len()), slot));
                    pool[slot] = Some(reduced);
                }
            }
            None => {
                let inv = row[0].1.inv();
                echelon.insert(lead, scale_vec(&row, &inv));
            }
        }
    }
    let pivots: Vec<usize> = echelon.keys().copied().collect();
    let mut out: Vec<SparseVec> = echelon.into_values().collect();
    // back substitution, last pivot first
    for k in (0..out.len()).rev() {
        let p = pivots[k];
        let (head, tail) = out.split_at_mut(k);
        let piv = &tail[0];
        for row in head.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&p, |(c, _)| *c) {
                let c = -&row[pos].1;
                *row = axpy(row, &c, piv);
            }
        }
    }
    let _ = field;
    (out, pivots)
}

fn dense_rref(
    field: FieldSpec,
    ncols: usize,
    rows: Vec<SparseVec>,
) -> (Vec<SparseVec>, Vec<usize>) {
    let mut m: Vec<Vec<Scalar>> = rows
        .into_iter()
        .map(|r| {
            let mut d = vec![field.zero(); ncols];
            for (c, v) in r {
                d[c] = v;
            }
            d
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].inv();
        for x in m[rank].iter_mut().skip(col) {
            *x = &*x * &inv;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !y.is_zero() {
                    *x = &*x - &(&c * y);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    let out = m
        .into_iter()
        .map(|r| {
            r.into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect();
    (out, pivots)
}
