//! Structural isomorphisms of tensor products in the lexicographic basis.

use crate::field::FieldSpec;
use crate::linalg::Matrix;

/// Reorders tensor factors: output factor `k` is input factor `order[k]`.
pub fn permute_factors(field: FieldSpec, dims: &[usize], order: &[usize]) -> Matrix {
    assert_eq!(dims.len(), order.len(), "one position per factor");
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
    let mut image = Vec::with_capacity(total);
    let mut idx = vec![0usize; dims.len()];
    for _ in 0..total {
        let mut flat = 0;
        for (k, &src) in order.iter().enumerate() {
            flat = flat * out_dims[k] + idx[src];
        }
        image.push(flat);
        // advance the multi-index, rightmost factor fastest
        for k in (0..dims.len()).rev() {
            idx[k] += 1;
            if idx[k] < dims[k] {
                break;
            }
            idx[k] = 0;
        }
    }
    Matrix::permutation(field, &image)
}

/// The symmetry `s_{A,B} : A ⊗ B → B ⊗ A`.
pub fn swap(field: FieldSpec, a: usize, b: usize) -> Matrix {
    permute_factors(field, &[a, b], &[1, 0])
}

/// `(c_1, ..., c_k, x) ↦ (x, c_1, ..., c_k)` with `head` the dimension of `c_1 ⊗ ⋯ ⊗ c_k`.
pub fn rotate_last_to_front(field: FieldSpec, head: usize, last: usize) -> Matrix {
    swap(field, head, last)
}

pub fn id(field: FieldSpec, n: usize) -> Matrix {
    Matrix::identity(field, n)
}

/// Kronecker product of a list of factors.
pub fn kron(field: FieldSpec, factors: &[&Matrix]) -> Matrix {
    Matrix::kron_all(field, factors)
}
