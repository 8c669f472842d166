//! Sparse vectors in tensor products `V_1 ⊗ … ⊗ V_r`, with slot-local maps.
//!
//! Applying a map to a block of adjacent slots is the same as applying
//! `I ⊗ … ⊗ M ⊗ … ⊗ I`, without materializing the Kronecker product.
//! All composite identities (bialgebra compatibility, the matrix form of
//! brace compatibility, braid operators) are evaluated this way, one
//! basis column at a time.

use std::collections::BTreeMap;

use crate::linalg::{SparseMatrix, SparseVec};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVec {
    field: Field,
    dims: Vec<usize>,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

/// Left-major flat index of a multi-index.
pub fn flatten(dims: &[usize], idx: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
}

/// Inverse of [`flatten`].
pub fn unflatten(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    idx
}

/// Iterates all multi-indices of the given shape in left-major order.
pub fn multi_indices(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |f| unflatten(dims, f))
}

impl TensorVec {
    pub fn zero(field: Field, dims: Vec<usize>) -> Self {
        TensorVec {
            field,
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(field: Field, dims: Vec<usize>, idx: &[usize]) -> Self {
        debug_assert_eq!(dims.len(), idx.len());
        let mut terms = BTreeMap::new();
        terms.insert(idx.to_vec(), field.one());
        TensorVec { field, dims, terms }
    }

    /// Interprets a flat sparse vector in the given shape.
    pub fn from_flat(field: Field, dims: Vec<usize>, v: &[(usize, Scalar)]) -> Self {
        let terms = v
            .iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (unflatten(&dims, *i), x.clone()))
            .collect();
        TensorVec { field, dims, terms }
    }

    pub fn to_flat(&self) -> SparseVec {
        let mut v: SparseVec = self
            .terms
            .iter()
            .map(|(idx, x)| (flatten(&self.dims, idx), x.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &TensorVec) -> TensorVec {
        assert_eq!(self.dims, other.dims, "tensor shape mismatch");
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            let slot = terms.entry(k.clone()).or_insert_with(|| self.field.zero());
            *slot += v;
        }
        terms.retain(|_, v| !v.is_zero());
        TensorVec {
            field: self.field,
            dims: self.dims.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &TensorVec) -> TensorVec {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> TensorVec {
        let mut terms: BTreeMap<Vec<usize>, Scalar> =
            self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect();
        terms.retain(|_, v| !v.is_zero());
        TensorVec {
            field: self.field,
            dims: self.dims.clone(),
            terms,
        }
    }

    /// Applies `map: V_slot ⊗ … ⊗ V_{slot+arity−1} → W_1 ⊗ … ⊗ W_q` in place of
    /// the `arity` slots starting at `slot`. `arity` may be 0 (a unit map
    /// inserting slots) and `out_dims` may be empty (a counit).
    pub fn apply(&self, slot: usize, arity: usize, map: &SparseMatrix, out_dims: &[usize]) -> TensorVec {
        let in_dims = &self.dims[slot..slot + arity];
        debug_assert_eq!(map.cols(), in_dims.iter().product::<usize>());
        debug_assert_eq!(map.rows(), out_dims.iter().product::<usize>());
        let mut dims = self.dims[..slot].to_vec();
        dims.extend_from_slice(out_dims);
        dims.extend_from_slice(&self.dims[slot + arity..]);
        let mut terms: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (idx, x) in &self.terms {
            let col = flatten(in_dims, &idx[slot..slot + arity]);
            for (row, a) in map.column(col) {
                let mut key = idx[..slot].to_vec();
                key.extend(unflatten(out_dims, *row));
                key.extend_from_slice(&idx[slot + arity..]);
                let s = terms.entry(key).or_insert_with(|| self.field.zero());
                *s += &(a * x);
            }
        }
        terms.retain(|_, v| !v.is_zero());
        TensorVec {
            field: self.field,
            dims,
            terms,
        }
    }

    /// Applies a square map on a single slot.
    pub fn apply1(&self, slot: usize, map: &SparseMatrix) -> TensorVec {
        let d = map.rows();
        self.apply(slot, 1, map, &[d])
    }

    /// Applies a binary map (e.g. a multiplication) on slots `slot, slot+1`.
    pub fn apply2(&self, slot: usize, map: &SparseMatrix) -> TensorVec {
        let d = map.rows();
        self.apply(slot, 2, map, &[d])
    }

    /// Reorders slots: new slot `k` is old slot `order[k]`.
    pub fn permute(&self, order: &[usize]) -> TensorVec {
        debug_assert_eq!(order.len(), self.dims.len());
        let dims = order.iter().map(|&k| self.dims[k]).collect();
        let terms = self
            .terms
            .iter()
            .map(|(idx, x)| (order.iter().map(|&k| idx[k]).collect(), x.clone()))
            .collect();
        TensorVec {
            field: self.field,
            dims,
            terms,
        }
    }

    /// Swaps adjacent slots `slot` and `slot+1`.
    pub fn flip(&self, slot: usize) -> TensorVec {
        let mut order: Vec<usize> = (0..self.dims.len()).collect();
        order.swap(slot, slot + 1);
        self.permute(&order)
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &TensorVec) -> TensorVec {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut k = a.clone();
                k.extend_from_slice(b);
                terms.insert(k, x * y);
            }
        }
        terms.retain(|_, v: &mut Scalar| !v.is_zero());
        TensorVec {
            field: self.field,
            dims,
            terms,
        }
    }

    /// Merges adjacent slots `slot..slot+count` into one slot of the product dimension.
    pub fn merge(&self, slot: usize, count: usize) -> TensorVec {
        let block = &self.dims[slot..slot + count];
        let merged: usize = block.iter().product();
        let mut dims = self.dims[..slot].to_vec();
        dims.push(merged);
        dims.extend_from_slice(&self.dims[slot + count..]);
        let terms = self
            .terms
            .iter()
            .map(|(idx, x)| {
                let mut k = idx[..slot].to_vec();
                k.push(flatten(block, &idx[slot..slot + count]));
                k.extend_from_slice(&idx[slot + count..]);
                (k, x.clone())
            })
            .collect();
        TensorVec {
            field: self.field,
            dims,
            terms,
        }
    }

    /// Splits slot `slot` into slots with the given dimensions (product must match).
    pub fn split(&self, slot: usize, parts: &[usize]) -> TensorVec {
        debug_assert_eq!(parts.iter().product::<usize>(), self.dims[slot]);
        let mut dims = self.dims[..slot].to_vec();
        dims.extend_from_slice(parts);
        dims.extend_from_slice(&self.dims[slot + 1..]);
        let terms = self
            .terms
            .iter()
            .map(|(idx, x)| {
                let mut k = idx[..slot].to_vec();
                k.extend(unflatten(parts, idx[slot]));
                k.extend_from_slice(&idx[slot + 1..]);
                (k, x.clone())
            })
            .collect();
        TensorVec {
            field: self.field,
            dims,
            terms,
        }
    }
}

/// The matrix of a linear map given by its action on basis tensors of `domain`.
/// Columns are produced in left-major order of the domain multi-indices.
pub fn matrix_of(
    field: Field,
    domain: &[usize],
    codomain_len: usize,
    f: impl Fn(TensorVec) -> TensorVec,
) -> SparseMatrix {
    let columns = multi_indices(domain)
        .map(|idx| f(TensorVec::basis(field, domain.to_vec(), &idx)).to_flat())
        .collect();
    SparseMatrix::from_columns(field, codomain_len, columns).expect("map output within codomain")
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn slot_application_matches_kronecker() {
        // (I ⊗ M) on a 2 ⊗ 3 basis tensor equals kron(I_2, M) applied to the flat vector.
        let m = SparseMatrix::from_triples(
            Q,
            2,
            3,
            [(0, 0, Q.int(1)), (1, 2, Q.int(5)), (0, 1, Q.int(-2))],
        )
        .unwrap();
        let big = SparseMatrix::identity(Q, 2).kron(&m).unwrap();
        for idx in multi_indices(&[2, 3]) {
            let t = TensorVec::basis(Q, vec![2, 3], &idx);
            let via_slots = t.apply(1, 1, &m, &[2]).to_flat();
            let via_kron = big.apply(&t.to_flat());
            assert_eq!(via_slots, via_kron);
        }
    }

    #[test]
    fn flatten_round_trip_and_order() {
        let dims = [2, 3, 4];
        let all: Vec<_> = multi_indices(&dims).collect();
        assert_eq!(all.len(), 24);
        for (f, idx) in all.iter().enumerate() {
            assert_eq!(flatten(&dims, idx), f);
        }
        assert_eq!(unflatten(&dims, 23), vec![1, 2, 3]);
    }

    #[test]
    fn flip_matches_flip_matrix() {
        let tau = SparseMatrix::flip(Q, 2, 3);
        for idx in multi_indices(&[2, 3]) {
            let t = TensorVec::basis(Q, vec![2, 3], &idx);
            assert_eq!(t.flip(0).to_flat(), tau.apply(&t.to_flat()));
        }
    }
}
