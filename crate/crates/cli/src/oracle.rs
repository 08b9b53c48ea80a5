//! Dense recomputation of homology dimensions, independent of the sparse
//! elimination used by the engine.

use unicyclic_core::homology::ChainComplex;
use unicyclic_core::paracyclic::{Orientation, ParaCyclicModule};
use unicyclic_core::{Matrix, Scalar};

type Dense = Vec<Vec<Scalar>>;

/// Rank by plain Gaussian elimination on a dense copy.
pub fn dense_rank(mut a: Dense) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].inv();
        for x in a[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot = a[rank].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn rank(m: &Matrix) -> usize {
    dense_rank(m.to_dense())
}

fn hcat(a: &Matrix, b: &Matrix) -> Dense {
    a.to_dense()
        .into_iter()
        .zip(b.to_dense())
        .map(|(mut l, r)| {
            l.extend(r);
            l
        })
        .collect()
}

/// Homology dimensions of a complex in degrees `0..top`.
pub fn complex_homology(c: &ChainComplex) -> Vec<usize> {
    let ranks: Vec<usize> = c.diffs.iter().map(rank).collect();
    (0..c.top())
        .map(|n| {
            let out = if n > 0 { ranks[n - 1] } else { 0 };
            c.dims[n] - ranks[n] - out
        })
        .collect()
}

fn cyclic_oriented(m: &ParaCyclicModule) -> ParaCyclicModule {
    match m.orientation {
        Orientation::Cyclic => m.clone(),
        Orientation::Cocyclic => m.transpose(),
    }
}

fn b_operator(m: &ParaCyclicModule, n: usize) -> Matrix {
    let f = m.field;
    let mut acc = Matrix::zeros(f, m.dims[n], m.dims[n + 1]);
    for (j, d) in m.faces[n].iter().enumerate() {
        acc = if j % 2 == 0 { acc.add(d) } else { acc.sub(d) }.expect("faces share a shape");
    }
    acc
}

/// Homology of `C / (1 − λ)` under `b`, honest in degrees `0..N−1`.
///
/// Only valid in characteristic zero, where it agrees with cyclic homology.
pub fn connes_quotient(m: &ParaCyclicModule) -> Vec<usize> {
    let m = cyclic_oriented(m);
    let f = m.field;
    let top = m.truncation();
    let rel: Vec<Matrix> = (0..=top)
        .map(|n| {
            let t = if n % 2 == 0 {
                m.taus[n].clone()
            } else {
                m.taus[n].scale(&f.from_i64(-1))
            };
            Matrix::identity(f, m.dims[n]).sub(&t).expect("square")
        })
        .collect();
    let rel_rank: Vec<usize> = rel.iter().map(rank).collect();
    // rank of the induced map Q_{n+1} → Q_n
    let induced: Vec<usize> = (0..top)
        .map(|n| dense_rank(hcat(&b_operator(&m, n), &rel[n])) - rel_rank[n])
        .collect();
    (0..top)
        .map(|n| {
            let q = m.dims[n] - rel_rank[n];
            let out = if n > 0 { induced[n - 1] } else { 0 };
            q - induced[n] - out
        })
        .collect()
}
