//! Sparse rational matrices and canonical subspaces.
//!
//! A [`Subspace`] is always stored as its reduced row-echelon basis, so two
//! subspaces are equal exactly when their stored bases are equal.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense vector over the rationals.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(len: usize) -> Vector {
    vec![Scalar::ZERO; len]
}

pub fn unit_vector(len: usize, i: usize) -> Vector {
    let mut v = zero_vector(len);
    v[i] = Scalar::ONE;
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::ZERO;
    for (x, y) in a.iter().zip(b) {
        acc.add_mul(x, y);
    }
    acc
}

/// `y += c * x`
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        yi.add_mul(c, xi);
    }
}

pub fn scaled(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Sparse matrix stored row by row; each row is sorted by column and holds
/// no explicit zeros, which makes the derived equality exact.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar_identity(n, &Scalar::ONE)
    }

    pub fn scalar_identity(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for (i, row) in m.data.iter_mut().enumerate() {
                row.push((i, c.clone()));
            }
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut m = Self::zeros(rows, cols);
        for (i, j, v) in triplets {
            if i >= rows || j >= cols {
                return Err(Error::IndexOutOfRange {
                    index: if i >= rows { i } else { j },
                    bound: if i >= rows { rows } else { cols },
                });
            }
            m.add_to(i, j, &v);
        }
        Ok(m)
    }

    pub fn from_dense(rows: &[Vector], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.data[i] = r
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect();
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vector> {
        self.data
            .iter()
            .map(|row| {
                let mut d = zero_vector(self.cols);
                for (j, v) in row {
                    d[*j] = v.clone();
                }
                d
            })
            .collect()
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                if !v.is_zero() {
                    m.data[i].push((j, v.clone()));
                }
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => self.data[i][pos].1.clone(),
            Err(_) => Scalar::ZERO,
        }
    }

    /// `self[i][j] += v`, keeping the no-explicit-zero invariant.
    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => {
                row[pos].1 += v;
                if row[pos].1.is_zero() {
                    row.remove(pos);
                }
            }
            Err(pos) => row.insert(pos, (j, v.clone())),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) if v.is_zero() => {
                row.remove(pos);
            }
            Ok(pos) => row[pos].1 = v,
            Err(_) if v.is_zero() => {}
            Err(pos) => row.insert(pos, (j, v)),
        }
    }

    /// Iterates over stored entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        debug_assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                let mut acc = Scalar::ZERO;
                for (j, a) in row {
                    acc.add_mul(a, &v[*j]);
                }
                acc
            })
            .collect()
    }

    pub fn checked_mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.mul_vec(v))
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = SparseMatrix::zeros(self.rows, other.cols);
        let mut acc = zero_vector(other.cols);
        let mut touched: Vec<usize> = Vec::new();
        for (i, row) in self.data.iter().enumerate() {
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    if acc[*j].is_zero() {
                        touched.push(*j);
                    }
                    acc[*j].add_mul(a, b);
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut out_row = Vec::with_capacity(touched.len());
            for &j in &touched {
                let v = core::mem::take(&mut acc[j]);
                if !v.is_zero() {
                    out_row.push((j, v));
                }
            }
            touched.clear();
            out.data[i] = out_row;
        }
        Ok(out)
    }

    fn zip_with(&self, other: &SparseMatrix, sign: &Scalar) -> Result<SparseMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = self.clone();
        for (i, j, v) in other.entries() {
            out.add_to(i, j, &(v * sign));
        }
        Ok(out)
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.zip_with(other, &Scalar::ONE)
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.zip_with(other, &-Scalar::ONE)
    }

    /// `self += c * other` for equally shaped matrices.
    pub fn add_scaled(&mut self, c: &Scalar, other: &SparseMatrix) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (i, j, v) in other.entries() {
            self.add_to(i, j, &(v * c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        if c.is_zero() {
            return SparseMatrix::zeros(self.rows, self.cols);
        }
        let mut out = self.clone();
        for row in &mut out.data {
            for (_, v) in row.iter_mut() {
                *v = &*v * c;
            }
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.cols, self.rows);
        for (i, j, v) in self.entries() {
            out.data[j].push((i, v.clone()));
        }
        out
    }

    /// Extracts rows `[start, start + count)` as a new matrix.
    pub fn row_block(&self, start: usize, count: usize) -> SparseMatrix {
        SparseMatrix {
            rows: count,
            cols: self.cols,
            data: self.data[start..start + count].to_vec(),
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&SparseMatrix], cols: usize) -> Result<SparseMatrix> {
        let mut data = Vec::new();
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: b.cols,
                });
            }
            data.extend(b.data.iter().cloned());
        }
        Ok(SparseMatrix {
            rows: data.len(),
            cols,
            data,
        })
    }
}

/// Reduced row-echelon form and rank. Pivots are taken at the first nonzero
/// column, using the first row (at or below the current one) that is nonzero
/// there; the result is the unique RREF regardless.
pub fn rref(m: &SparseMatrix) -> (SparseMatrix, usize) {
    let (rows, pivots) = rref_dense(m.to_dense(), m.cols());
    let rank = pivots.len();
    let mut padded = rows;
    padded.resize(m.rows(), zero_vector(m.cols()));
    (SparseMatrix::from_dense(&padded, m.cols()), rank)
}

/// Row-reduces dense rows in place; returns the nonzero RREF rows and their
/// pivot columns.
pub(crate) fn rref_dense(mut rows: Vec<Vector>, cols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            let f = other[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                x.sub_mul(&f, y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(m: &SparseMatrix) -> usize {
    rref_dense(m.to_dense(), m.cols()).1.len()
}

/// `{v : m v = 0}` as a canonical subspace of dimension `cols - rank`.
pub fn nullspace(m: &SparseMatrix) -> Subspace {
    let cols = m.cols();
    let (rows, pivots) = rref_dense(m.to_dense(), cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis: Vec<Vector> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = unit_vector(cols, f);
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect();
    Subspace::from_vectors(cols, basis).expect("lengths match by construction")
}

/// A subspace of `Q^ambient`, stored as its RREF basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            rows: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vector>) -> Result<Self> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: bad.len(),
            });
        }
        let (rows, pivots) = rref_dense(vectors, ambient);
        Ok(Self {
            ambient,
            rows,
            pivots,
        })
    }

    /// Basis of `{y : y·b = 0 for every basis vector b}`, read off the RREF
    /// basis without elimination: one vector per free column.
    pub fn annihilator(&self) -> Vec<Vector> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = unit_vector(self.ambient, f);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -&row[f];
                }
                v
            })
            .collect()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis in place; `v` ends as the residue.
    pub fn reduce_in_place(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in v[p..].iter_mut().zip(&row[p..]) {
                x.sub_mul(&f, y);
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        if self.is_full() {
            return Ok(true);
        }
        let mut r = v.to_vec();
        self.reduce_in_place(&mut r);
        Ok(is_zero_vector(&r))
    }

    /// Adds `v` to the span, keeping the basis canonical. Returns `true` if
    /// the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        if self.is_full() {
            return Ok(false);
        }
        let mut r = v.to_vec();
        self.reduce_in_place(&mut r);
        let Some(lead) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[lead].recip().expect("nonzero lead");
        if !inv.is_one() {
            for x in r[lead..].iter_mut() {
                *x = &*x * &inv;
            }
        }
        for row in &mut self.rows {
            let f = row[lead].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row[lead..].iter_mut().zip(&r[lead..]) {
                x.sub_mul(&f, y);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, r);
        Ok(true)
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = zero_vector(self.ambient);
        for (c, row) in coords.iter().zip(&self.rows) {
            axpy(&mut rebuilt, c, row);
        }
        (rebuilt == v).then_some(coords)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            })
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::from_vectors(self.ambient, all)
    }

    /// `self ∩ other`, from the kernel of `[A^T | -B^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let p = self.dim();
        let mut cols: Vec<Vector> = self.rows.clone();
        cols.extend(other.rows.iter().map(|r| r.iter().map(|x| -x).collect()));
        let m = SparseMatrix::from_columns(&cols, self.ambient);
        let kernel = nullspace(&m);
        let vectors = kernel
            .basis()
            .iter()
            .map(|k| {
                let mut v = zero_vector(self.ambient);
                for (c, row) in k[..p].iter().zip(&self.rows) {
                    axpy(&mut v, c, row);
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.ambient, vectors)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for r in &self.rows {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Basis rows as a matrix (dim × ambient).
    pub fn to_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_dense(&self.rows, self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn mat(rows: &[&[i64]]) -> SparseMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let dense: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        SparseMatrix::from_dense(&dense, cols)
    }

    fn ints(v: &[i64]) -> Vector {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let (r, k) = rref(&SparseMatrix::identity(3));
        assert_eq!((r, k), (SparseMatrix::identity(3), 3));

        let (r, k) = rref(&mat(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, mat(&[&[1, 2], &[0, 0]]));
        assert_eq!(k, 1);

        let z = SparseMatrix::zeros(2, 3);
        assert_eq!(rref(&z), (z.clone(), 0));
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&SparseMatrix::identity(3)).is_zero());
        assert_eq!(nullspace(&SparseMatrix::zeros(2, 3)), Subspace::full(3));
        let ns = nullspace(&mat(&[&[1, 1]]));
        assert_eq!(ns.basis(), &[ints(&[1, -1])]);
    }

    #[test]
    fn intersect_examples() {
        let e = |i| unit_vector(3, i);
        let a = Subspace::from_vectors(3, vec![e(0), e(1)]).unwrap();
        let b = Subspace::from_vectors(3, vec![e(1), e(2)]).unwrap();
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(
            a.intersect(&b).unwrap(),
            Subspace::from_vectors(3, vec![e(1)]).unwrap()
        );
        let l1 = Subspace::from_vectors(2, vec![unit_vector(2, 0)]).unwrap();
        let l2 = Subspace::from_vectors(2, vec![unit_vector(2, 1)]).unwrap();
        assert!(l1.intersect(&l2).unwrap().is_zero());
        assert!(a.intersect(&l1).is_err());
    }

    #[test]
    fn contains_examples() {
        let s = Subspace::from_vectors(2, vec![ints(&[1, 2])]).unwrap();
        assert!(s.contains(&ints(&[0, 0])).unwrap());
        assert!(s.contains(&ints(&[2, 4])).unwrap());
        assert!(!s.contains(&ints(&[1, 0])).unwrap());
        assert!(s.contains(&ints(&[1, 2, 3])).is_err());
    }

    #[test]
    fn insert_keeps_canonical_form() {
        let mut s = Subspace::zero(3);
        assert!(s.insert(&ints(&[0, 2, 4])).unwrap());
        assert!(s.insert(&ints(&[1, 1, 1])).unwrap());
        assert!(!s.insert(&ints(&[1, 3, 5])).unwrap());
        let direct =
            Subspace::from_vectors(3, vec![ints(&[0, 2, 4]), ints(&[1, 1, 1])]).unwrap();
        assert_eq!(s, direct);
        assert_eq!(s.basis()[0], vec![Scalar::ONE, Scalar::ZERO, q(-1, 1)]);
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = Subspace::from_vectors(3, vec![ints(&[1, 0, 2]), ints(&[0, 1, 3])]).unwrap();
        let v = ints(&[2, -1, 1]);
        assert_eq!(s.coordinates(&v), Some(ints(&[2, -1])));
        assert_eq!(s.coordinates(&ints(&[1, 0, 0])), None);
    }

    #[test]
    fn matrix_product_and_transpose() {
        let a = mat(&[&[1, 2], &[0, 1]]);
        let b = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), mat(&[&[2, 1], &[1, 0]]));
        assert_eq!(a.transpose(), mat(&[&[1, 0], &[2, 1]]));
        assert!(a.mul(&SparseMatrix::zeros(3, 1)).is_err());
        let c = a.sub(&a).unwrap();
        assert!(c.is_zero());
        assert_eq!(c.nnz(), 0);
    }
}
