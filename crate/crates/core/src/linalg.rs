//! Sparse exact matrices, Kronecker products and canonical subspaces.
//!
//! Tensor powers are indexed left-major: the basis vector `e_i ⊗ e_j` of
//! `V ⊗ W` has flat index `i * dim(W) + j`. Every structure tensor in the
//! crate follows this convention, and so do the file formats.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A sparse column vector: sorted `(index, value)` pairs, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Exact sparse matrix stored column by column.
///
/// Columns are kept sorted by row with zero entries eliminated on write,
/// so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            field,
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let one = field.one();
        SparseMatrix {
            field,
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, one.clone())]).collect(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triples. Repeated positions are summed.
    pub fn from_triples(
        field: Field,
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in triples {
            if r >= rows || c >= cols {
                return Err(Error::IndexOutOfRange(format!(
                    "entry ({r}, {c}) in a {rows}x{cols} matrix"
                )));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(field, v.field()));
            }
            let slot = acc[c].entry(r).or_insert_with(|| field.zero());
            *slot += &v;
        }
        Ok(SparseMatrix {
            field,
            rows,
            cols,
            columns: acc
                .into_iter()
                .map(|col| col.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        })
    }

    /// Builds a matrix column by column. Column vectors must be valid sparse vectors
    /// over `field`; they are normalized (sorted, zero-free) here.
    pub fn from_columns(field: Field, rows: usize, columns: Vec<SparseVec>) -> Result<Self> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for (c, col) in columns.into_iter().enumerate() {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (r, v) in col {
                if r >= rows {
                    return Err(Error::IndexOutOfRange(format!(
                        "row {r} of column {c} in a matrix with {rows} rows"
                    )));
                }
                if v.field() != field {
                    return Err(Error::FieldMismatch(field, v.field()));
                }
                let slot = acc.entry(r).or_insert_with(|| field.zero());
                *slot += &v;
            }
            out.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(SparseMatrix {
            field,
            rows,
            cols,
            columns: out,
        })
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(field: Field, perm: &[usize]) -> Self {
        let one = field.one();
        SparseMatrix {
            field,
            rows: perm.len(),
            cols: perm.len(),
            columns: perm.iter().map(|&i| vec![(i, one.clone())]).collect(),
        }
    }

    /// The flip `τ: V ⊗ W → W ⊗ V` for `dim V = d1`, `dim W = d2`.
    pub fn flip(field: Field, d1: usize, d2: usize) -> Self {
        let perm: Vec<usize> = (0..d1 * d2).map(|c| (c % d2) * d1 + c / d2).collect();
        Self::permutation(field, &perm)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.columns[c]
            .binary_search_by_key(&r, |(i, _)| *i)
            .map(|k| self.columns[c][k].1.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    /// All nonzero entries ordered by `(row, col)`.
    pub fn triples(&self) -> Vec<(usize, usize, Scalar)> {
        let mut t: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())))
            .collect();
        t.sort_by_key(|&(r, c, _)| (r, c));
        t
    }

    fn check_field(&self, other: &SparseMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// Matrix times sparse vector.
    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, x) in v {
            for (r, a) in &self.columns[*c] {
                let slot = acc.entry(*r).or_insert_with(|| self.field.zero());
                *slot += &(a * x);
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        self.check_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::shape(
                "matrix product",
                format!("inner dimension {}", self.cols),
                rhs.rows,
            ));
        }
        Ok(SparseMatrix {
            field: self.field,
            rows: self.rows,
            cols: rhs.cols,
            columns: rhs.columns.iter().map(|col| self.apply(col)).collect(),
        })
    }

    pub fn add(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        self.check_field(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(Error::shape(
                "matrix sum",
                format!("{:?}", self.shape()),
                format!("{:?}", rhs.shape()),
            ));
        }
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| add_sparse(a, b, self.field))
            .collect();
        Ok(SparseMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns,
        })
    }

    pub fn scale(&self, s: &Scalar) -> SparseMatrix {
        SparseMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|(r, v)| (*r, v * s))
                        .filter(|(_, v)| !v.is_zero())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        self.add(&rhs.scale(&-self.field.one()))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        SparseMatrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            columns: cols,
        }
    }

    /// Kronecker product with left-major block indexing:
    /// entry `((i, k), (j, l))` is `A[i][j] · B[k][l]`, row `i·rows(B)+k`, column `j·cols(B)+l`.
    pub fn kron(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        self.check_field(rhs)?;
        let mut columns = Vec::with_capacity(self.cols * rhs.cols);
        for a_col in &self.columns {
            for b_col in &rhs.columns {
                let mut col = Vec::with_capacity(a_col.len() * b_col.len());
                for (i, a) in a_col {
                    for (k, b) in b_col {
                        col.push((i * rhs.rows + k, a * b));
                    }
                }
                columns.push(col);
            }
        }
        Ok(SparseMatrix {
            field: self.field,
            rows: self.rows * rhs.rows,
            cols: self.cols * rhs.cols,
            columns,
        })
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                rows[*r][c] = v.clone();
            }
        }
        rows
    }

    pub fn from_dense_rows(field: Field, rows: &[Vec<Scalar>], cols: usize) -> Result<Self> {
        let triples = rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(c, v)| (r, c, v.clone()))
        });
        Self::from_triples(field, rows.len(), cols, triples)
    }

    pub fn rank(&self) -> usize {
        let mut echelon = Echelon::new(self.field, self.cols);
        for row in self.to_dense_rows() {
            echelon.insert(row);
        }
        echelon.rank()
    }

    /// Exact inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<SparseMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = self.field;
        let mut aug: Vec<Vec<Scalar>> = self
            .to_dense_rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
                row
            })
            .collect();
        let pivots = rref_in_place(&mut aug, 2 * n);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let inv: Vec<Vec<Scalar>> = aug.into_iter().map(|row| row[n..].to_vec()).collect();
        SparseMatrix::from_dense_rows(f, &inv, n).ok()
    }

    /// Solves `self · x = b` for one solution (dense), if consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.field;
        let n = self.cols;
        let mut aug: Vec<Vec<Scalar>> = self
            .to_dense_rows()
            .into_iter()
            .zip(b)
            .map(|(mut row, bi)| {
                row.push(bi.clone());
                row
            })
            .collect();
        let pivots = rref_in_place(&mut aug, n + 1);
        if pivots.contains(&n) {
            return None;
        }
        let mut x = vec![f.zero(); n];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug[i][n].clone();
        }
        Some(x)
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix[{}x{} over {}]{{", self.rows, self.cols, self.field)?;
        for (i, (r, c, v)) in self.triples().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({r},{c})={v}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn add_sparse(a: &[(usize, Scalar)], b: &[(usize, Scalar)], field: Field) -> SparseVec {
    let mut acc: BTreeMap<usize, Scalar> = a.iter().cloned().collect();
    for (i, v) in b {
        let slot = acc.entry(*i).or_insert_with(|| field.zero());
        *slot += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Gauss–Jordan elimination restricted to the first `pivot_cols` columns.
/// Returns pivot columns; rows below the rank are zero afterwards.
fn rref_in_place(rows: &mut [Vec<Scalar>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    if !pv.is_zero() {
                        *v = &*v - &(&factor * pv);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Incremental reduced row echelon form.
#[derive(Clone, Debug)]
struct Echelon {
    field: Field,
    width: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(field: Field, width: usize) -> Self {
        Echelon {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; the remainder is zero iff `v` is in the span.
    fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = &*x - &(&factor * r);
                    }
                }
            }
        }
        v
    }

    /// Inserts `v`; returns whether the rank grew.
    fn insert(&mut self, v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().expect("nonzero");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let factor = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x = &*x - &(&factor * y);
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    fn into_subspace(self) -> Subspace {
        Subspace {
            field: self.field,
            ambient: self.width,
            pivots: self.pivots,
            basis: self.rows,
        }
    }
}

/// A linear subspace of `k^n`, stored by its reduced row echelon basis.
///
/// The echelon form is canonical, so equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Echelon::new(field, ambient).into_subspace()
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Self::span(
            field,
            ambient,
            (0..ambient).map(|i| unit_vector(field, ambient, i)),
        )
        .expect("unit vectors have the ambient length")
    }

    /// The span of arbitrary (possibly dependent) dense vectors.
    pub fn span(
        field: Field,
        ambient: usize,
        vectors: impl IntoIterator<Item = Vec<Scalar>>,
    ) -> Result<Self> {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::shape("subspace span", ambient, v.len()));
            }
            if let Some(x) = v.iter().find(|x| x.field() != field) {
                return Err(Error::FieldMismatch(field, x.field()));
            }
            e.insert(v);
        }
        Ok(e.into_subspace())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis rows (reduced echelon form).
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Pivot column of each basis row. A vector of the subspace is determined by
    /// its coordinates at the pivots, which are also its coordinates in `basis()`.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The ambient-by-dim inclusion matrix whose columns are the basis vectors.
    pub fn inclusion(&self) -> SparseMatrix {
        let cols = self
            .basis
            .iter()
            .map(|v| dense_to_sparse(v))
            .collect();
        SparseMatrix::from_columns(self.field, self.ambient, cols).expect("basis in range")
    }

    /// The dim-by-ambient coordinate map (reads the pivot entries); a left inverse of `inclusion`.
    pub fn coordinates(&self) -> SparseMatrix {
        let one = self.field.one();
        let triples = self
            .pivots
            .iter()
            .enumerate()
            .map(|(i, &p)| (i, p, one.clone()));
        SparseMatrix::from_triples(self.field, self.dim(), self.ambient, triples).expect("in range")
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::shape("subspace membership", self.ambient, v.len()));
        }
        if let Some(x) = v.iter().find(|x| x.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, x.field()));
        }
        let e = Echelon {
            field: self.field,
            width: self.ambient,
            rows: self.basis.clone(),
            pivots: self.pivots.clone(),
        };
        Ok(e.reduce(v.to_vec()).iter().all(Scalar::is_zero))
    }

    /// Vectors annihilating the subspace under the standard pairing:
    /// `{ φ : φ·v = 0 for all v ∈ U }`, of dimension `ambient − dim`.
    pub fn annihilator(&self) -> Subspace {
        let m = SparseMatrix::from_dense_rows(self.field, &self.basis, self.ambient)
            .expect("basis rows are well formed");
        kernel(&m)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::shape(
                "subspace intersection",
                self.ambient,
                other.ambient,
            ));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let rows: Vec<Vec<Scalar>> = self
            .annihilator()
            .basis
            .into_iter()
            .chain(other.annihilator().basis)
            .collect();
        let m = SparseMatrix::from_dense_rows(self.field, &rows, self.ambient)?;
        Ok(kernel(&m))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}: [", self.dim(), self.ambient)?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in v.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "])")
    }
}

/// Null space of `a` in canonical echelon form; `dim + rank(a) = cols(a)`.
pub fn kernel(a: &SparseMatrix) -> Subspace {
    let f = a.field();
    let n = a.cols();
    let mut e = Echelon::new(f, n);
    for row in a.to_dense_rows() {
        e.insert(row);
    }
    let pivots = e.pivots.clone();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vectors = free.iter().map(|&fc| {
        let mut v = vec![f.zero(); n];
        v[fc] = f.one();
        for (row, &p) in e.rows.iter().zip(&pivots) {
            v[p] = -&row[fc];
        }
        v
    });
    Subspace::span(f, n, vectors).expect("kernel vectors have width n")
}

pub fn subspace_intersect(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.intersect(v)
}

pub fn subspace_contains(u: &Subspace, v: &[Scalar]) -> Result<bool> {
    u.contains(v)
}

pub fn kron(a: &SparseMatrix, b: &SparseMatrix) -> Result<SparseMatrix> {
    a.kron(b)
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(field: Field, n: usize, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rational;

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        let r: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Q.int(x)).collect())
            .collect();
        SparseMatrix::from_dense_rows(Q, &r, rows[0].len()).unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.int(x)).collect()
    }

    #[test]
    fn kron_examples() {
        let i2 = SparseMatrix::identity(Q, 2);
        let i3 = SparseMatrix::identity(Q, 3);
        assert_eq!(i2.kron(&i3).unwrap(), SparseMatrix::identity(Q, 6));
        let z = SparseMatrix::zeros(Q, 2, 3);
        assert!(m(&[&[1, 2], &[3, 4]]).kron(&z).unwrap().is_zero());
        assert_eq!(
            m(&[&[1, 2], &[0, 1]]).kron(&m(&[&[3]])).unwrap(),
            m(&[&[3, 6], &[0, 3]])
        );
        let f5 = SparseMatrix::identity(Field::Prime(5), 2);
        assert!(matches!(i2.kron(&f5), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn kron_block_layout() {
        // [[1,2],[3,4]] ⊗ [[0,5],[6,7]], expanded block by block.
        let k = m(&[&[1, 2], &[3, 4]]).kron(&m(&[&[0, 5], &[6, 7]])).unwrap();
        let expected = m(&[
            &[0, 5, 0, 10],
            &[6, 7, 12, 14],
            &[0, 15, 0, 20],
            &[18, 21, 24, 28],
        ]);
        assert_eq!(k, expected);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&SparseMatrix::identity(Q, 4)).dim(), 0);
        assert_eq!(kernel(&SparseMatrix::zeros(Q, 2, 3)), Subspace::full(Q, 3));
        let k = kernel(&m(&[&[1, 2, 3], &[2, 4, 6]]));
        assert_eq!(k.dim(), 2);
        // x + 2y + 3z = 0: spanned by (-2,1,0) and (-3,0,1).
        let expected = Subspace::span(Q, 3, [v(&[-2, 1, 0]), v(&[-3, 0, 1])]).unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn intersection_examples() {
        let u = Subspace::span(Q, 3, [v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let w = Subspace::span(Q, 3, [v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(
            u.intersect(&w).unwrap(),
            Subspace::span(Q, 3, [v(&[0, 1, 0])]).unwrap()
        );
        assert_eq!(u.intersect(&Subspace::full(Q, 3)).unwrap(), u);
        assert_eq!(
            u.intersect(&Subspace::zero(Q, 3)).unwrap(),
            Subspace::zero(Q, 3)
        );
        assert!(u.intersect(&Subspace::zero(Q, 2)).is_err());
    }

    #[test]
    fn containment_examples() {
        let u = Subspace::span(Q, 3, [v(&[1, 1, 0])]).unwrap();
        assert!(u.contains(&v(&[2, 2, 0])).unwrap());
        assert!(u.contains(&v(&[0, 0, 0])).unwrap());
        assert!(!Subspace::zero(Q, 3).contains(&v(&[0, 1, 0])).unwrap());
        assert!(u.contains(&v(&[1, 1])).is_err());
    }

    #[test]
    fn inverse_and_flip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), SparseMatrix::identity(Q, 2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let tau = SparseMatrix::flip(Q, 2, 3);
        // e_1 ⊗ f_2 (index 5) goes to f_2 ⊗ e_1 (index 2*2+1 = 5); e_0 ⊗ f_1 (1) to f_1 ⊗ e_0 (2).
        assert_eq!(tau.column(1), &[(2, Q.one())]);
        assert_eq!(tau.mul(&SparseMatrix::flip(Q, 3, 2)).unwrap(), SparseMatrix::identity(Q, 6));
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = SparseMatrix> {
        proptest::collection::vec(-2i64..3, rows * cols).prop_map(move |xs| {
            let r: Vec<Vec<Scalar>> = xs.chunks(cols).map(|c| c.iter().map(|&x| Q.int(x)).collect()).collect();
            SparseMatrix::from_dense_rows(Q, &r, cols).unwrap()
        })
    }

    proptest! {
        #[test]
        fn kron_is_associative(a in small_matrix(2, 2), b in small_matrix(1, 3), c in small_matrix(2, 1)) {
            let left = a.kron(&b).unwrap().kron(&c).unwrap();
            let right = a.kron(&b.kron(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn kernel_is_annihilated_and_rank_nullity_holds(a in small_matrix(3, 5)) {
            let k = kernel(&a);
            prop_assert_eq!(k.dim() + a.rank(), 5);
            for b in k.basis() {
                prop_assert!(a.apply(&dense_to_sparse(b)).is_empty());
            }
        }

        #[test]
        fn subspace_representation_is_canonical(a in small_matrix(3, 4), s in 1i64..5) {
            let rows = a.to_dense_rows();
            let u = Subspace::span(Q, 4, rows.clone()).unwrap();
            // Same span from rescaled, reordered, and redundant generators.
            let mut gens: Vec<Vec<Scalar>> = rows.iter().rev().map(|r| r.iter().map(|x| x * &Q.int(s)).collect()).collect();
            let sum: Vec<Scalar> = rows[0].iter().zip(&rows[1]).map(|(x, y)| x + y).collect();
            gens.push(sum);
            prop_assert_eq!(u, Subspace::span(Q, 4, gens).unwrap());
        }
    }
}
