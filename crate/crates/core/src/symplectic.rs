//! The symplectic Lie algebra sp(2n) in its natural N×N realization.
//!
//! Coordinates on `Q^N` are split as `(x_1..x_n, x_{n+1}..x_{2n})`. The bar
//! map `r ↦ (r_{n+1},…,r_{2n}, −r_1,…,−r_n)` turns the standard dot product
//! into the invariant alternating form `ω(u, v) = (u, bar v)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Neg;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, Vector};
use crate::scalar::Scalar;

/// Basis element of sp(2n). Indices are zero-based; `Display` prints them
/// one-based (`h_1`, `X_{e1-e2}`, `X_{2e1}`, `X_{-e1-e2}`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Generator {
    /// `h_i = e_{i,i} − e_{n+i,n+i}`
    Cartan(usize),
    /// `X_{ε_i−ε_j} = e_{i,j} − e_{n+j,n+i}`, `i ≠ j`
    Mixed(usize, usize),
    /// `X_{ε_k+ε_l} = e_{k,n+l} + e_{l,n+k}`, `k ≤ l`
    Raising(usize, usize),
    /// `X_{−ε_k−ε_l} = e_{n+k,l} + e_{n+l,k}`, `k ≤ l`
    Lowering(usize, usize),
}

impl Generator {
    /// Root in ε-coordinates (zero for Cartan elements).
    pub fn root(&self, n: usize) -> Vec<i64> {
        let mut r = vec![0i64; n];
        match *self {
            Generator::Cartan(_) => {}
            Generator::Mixed(i, j) => {
                r[i] += 1;
                r[j] -= 1;
            }
            Generator::Raising(k, l) => {
                r[k] += 1;
                r[l] += 1;
            }
            Generator::Lowering(k, l) => {
                r[k] -= 1;
                r[l] -= 1;
            }
        }
        r
    }

    pub fn is_positive_root(&self) -> bool {
        match *self {
            Generator::Mixed(i, j) => i < j,
            Generator::Raising(..) => true,
            _ => false,
        }
    }

    fn max_index(&self) -> usize {
        match *self {
            Generator::Cartan(i) => i,
            Generator::Mixed(i, j) | Generator::Raising(i, j) | Generator::Lowering(i, j) => {
                i.max(j)
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Cartan(i) => write!(f, "h_{}", i + 1),
            Generator::Mixed(i, j) => write!(f, "X_{{e{}-e{}}}", i + 1, j + 1),
            Generator::Raising(k, l) if k == l => write!(f, "X_{{2e{}}}", k + 1),
            Generator::Raising(k, l) => write!(f, "X_{{e{}+e{}}}", k + 1, l + 1),
            Generator::Lowering(k, l) if k == l => write!(f, "X_{{-2e{}}}", k + 1),
            Generator::Lowering(k, l) => write!(f, "X_{{-e{}-e{}}}", k + 1, l + 1),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unrecognized generator label `{s}`"));
        let idx = |t: &str| -> Result<usize> {
            let v: usize = t.parse().map_err(|_| bad())?;
            v.checked_sub(1).ok_or_else(bad)
        };
        if let Some(i) = s.strip_prefix("h_") {
            return Ok(Generator::Cartan(idx(i)?));
        }
        let body = s
            .strip_prefix("X_{")
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(bad)?;
        if let Some(k) = body.strip_prefix("-2e") {
            let k = idx(k)?;
            return Ok(Generator::Lowering(k, k));
        }
        if let Some(k) = body.strip_prefix("2e") {
            let k = idx(k)?;
            return Ok(Generator::Raising(k, k));
        }
        if let Some(rest) = body.strip_prefix("-e") {
            let (k, l) = rest.split_once("-e").ok_or_else(bad)?;
            return Ok(Generator::Lowering(idx(k)?, idx(l)?));
        }
        let rest = body.strip_prefix('e').ok_or_else(bad)?;
        if let Some((i, j)) = rest.split_once("-e") {
            return Ok(Generator::Mixed(idx(i)?, idx(j)?));
        }
        let (k, l) = rest.split_once("+e").ok_or_else(bad)?;
        Ok(Generator::Raising(idx(k)?, idx(l)?))
    }
}

/// sp(2n) with its ordered basis: `h_1..h_n`, then `X_{ε_i−ε_j}` in
/// lexicographic `(i, j)` order, then `X_{ε_k+ε_l}` and `X_{−ε_k−ε_l}` for
/// `k ≤ l`, lexicographic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpAlgebra {
    n: usize,
    labels: Vec<Generator>,
    matrices: Vec<SparseMatrix>,
    index: BTreeMap<Generator, usize>,
}

impl SpAlgebra {
    /// Builds sp(2n), checking that the basis is closed under the bracket
    /// and satisfies the symplectic condition.
    pub fn new(n: usize) -> Result<Self> {
        let alg = Self::build_unchecked(n)?;
        alg.verify_closure()?;
        if let Some(bad) = alg
            .labels
            .iter()
            .zip(&alg.matrices)
            .find(|(_, m)| !alg.is_symplectic(m))
        {
            return Err(Error::NotInSpan(format!("{} violates M^T J + J M = 0", bad.0)));
        }
        Ok(alg)
    }

    /// Builds the basis without the closure check (which is quadratic in the
    /// dimension).
    pub fn build_unchecked(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidRank(n));
        }
        let big = 2 * n;
        let one = Scalar::ONE;
        let mut labels = Vec::with_capacity(2 * n * n + n);
        let mut matrices = Vec::with_capacity(2 * n * n + n);
        let mut push = |g: Generator, entries: Vec<(usize, usize, Scalar)>| {
            labels.push(g);
            matrices.push(
                SparseMatrix::from_triplets(big, big, entries).expect("indices below 2n"),
            );
        };
        for i in 0..n {
            push(
                Generator::Cartan(i),
                vec![(i, i, one.clone()), (n + i, n + i, -&one)],
            );
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    push(
                        Generator::Mixed(i, j),
                        vec![(i, j, one.clone()), (n + j, n + i, -&one)],
                    );
                }
            }
        }
        for k in 0..n {
            for l in k..n {
                push(
                    Generator::Raising(k, l),
                    vec![(k, n + l, one.clone()), (l, n + k, one.clone())],
                );
            }
        }
        for k in 0..n {
            for l in k..n {
                push(
                    Generator::Lowering(k, l),
                    vec![(n + k, l, one.clone()), (n + l, k, one.clone())],
                );
            }
        }
        let index = labels.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        Ok(Self {
            n,
            labels,
            matrices,
            index,
        })
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.n
    }

    /// `N = 2n`, the size of the natural representation.
    #[inline]
    pub fn natural_dim(&self) -> usize {
        2 * self.n
    }

    /// `2n² + n`
    #[inline]
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Generator] {
        &self.labels
    }

    pub fn matrices(&self) -> &[SparseMatrix] {
        &self.matrices
    }

    pub fn index_of(&self, g: Generator) -> Option<usize> {
        self.index.get(&g).copied()
    }

    pub fn matrix(&self, g: Generator) -> Option<&SparseMatrix> {
        self.index_of(g).map(|i| &self.matrices[i])
    }

    pub fn is_valid(&self, g: Generator) -> bool {
        g.max_index() < self.n && self.index.contains_key(&g)
    }

    /// Indices of the positive root vectors.
    pub fn positive_root_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.labels[i].is_positive_root())
            .collect()
    }

    /// Simple roots `ε_i − ε_{i+1}` (i < n) and `2ε_n`, in ε-coordinates.
    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        (0..n)
            .map(|i| {
                let mut r = vec![0i64; n];
                if i + 1 < n {
                    r[i] = 1;
                    r[i + 1] = -1;
                } else {
                    r[i] = 2;
                }
                r
            })
            .collect()
    }

    /// Fundamental weight `δ_k = ε_1 + … + ε_k` (`δ_0 = 0`).
    pub fn fundamental_weight(&self, k: usize) -> Vec<i64> {
        (0..self.n).map(|i| i64::from(i < k)).collect()
    }

    /// The matrix `J` with `J v = bar(v)`.
    pub fn form_matrix(&self) -> SparseMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(2 * n);
        for i in 0..n {
            entries.push((i, n + i, Scalar::ONE));
            entries.push((n + i, i, -Scalar::ONE));
        }
        SparseMatrix::from_triplets(2 * n, 2 * n, entries).expect("in range")
    }

    /// `Mᵗ J + J M = 0`
    pub fn is_symplectic(&self, m: &SparseMatrix) -> bool {
        let j = self.form_matrix();
        let lhs = m.transpose().mul(&j).and_then(|a| a.add(&j.mul(m)?));
        matches!(lhs, Ok(z) if z.is_zero())
    }

    /// Checks that every pairwise bracket lies in the span of the basis.
    pub fn verify_closure(&self) -> Result<()> {
        for (a, x) in self.labels.iter().zip(&self.matrices) {
            for (b, y) in self.labels.iter().zip(&self.matrices) {
                let c = bracket(x, y)?;
                self.decompose(&c).map_err(|_| {
                    Error::NotInSpan(format!("[{a}, {b}] leaves the span of the basis"))
                })?;
            }
        }
        Ok(())
    }

    /// Exact coordinates of `m` in the basis, in basis order. Fails if `m` is
    /// not in sp(2n).
    pub fn decompose(&self, m: &SparseMatrix) -> Result<Vector> {
        let big = self.natural_dim();
        if m.rows() != big || m.cols() != big {
            return Err(Error::ShapeMismatch {
                left: (m.rows(), m.cols()),
                right: (big, big),
            });
        }
        let n = self.n;
        let half = Scalar::new(1, 2).expect("nonzero");
        let coeffs: Vector = self
            .labels
            .iter()
            .map(|g| match *g {
                Generator::Cartan(i) => m.get(i, i),
                Generator::Mixed(i, j) => m.get(i, j),
                Generator::Raising(k, l) if k == l => &m.get(k, n + k) * &half,
                Generator::Raising(k, l) => m.get(k, n + l),
                Generator::Lowering(k, l) if k == l => &m.get(n + k, k) * &half,
                Generator::Lowering(k, l) => m.get(n + k, l),
            })
            .collect();
        if &self.combine(&coeffs) != m {
            return Err(Error::NotInSpan(String::from(
                "matrix does not satisfy the symplectic condition",
            )));
        }
        Ok(coeffs)
    }

    /// Like [`decompose`](Self::decompose) but keyed by generator label.
    pub fn decompose_labeled(&self, m: &SparseMatrix) -> Result<BTreeMap<Generator, Scalar>> {
        let c = self.decompose(m)?;
        Ok(self.labels.iter().copied().zip(c).collect())
    }

    /// `Σ c_i B_i` over the basis.
    pub fn combine(&self, coeffs: &[Scalar]) -> SparseMatrix {
        let big = self.natural_dim();
        let mut out = SparseMatrix::zeros(big, big);
        for (c, b) in coeffs.iter().zip(&self.matrices) {
            out.add_scaled(c, b);
        }
        out
    }

    /// The rank-one matrix `u · bar(u)ᵗ`.
    pub fn rank_one(&self, u: &[Scalar]) -> Result<SparseMatrix> {
        let big = self.natural_dim();
        if u.len() != big {
            return Err(Error::DimensionMismatch {
                expected: big,
                found: u.len(),
            });
        }
        let ub = bar(u);
        let mut entries = Vec::new();
        for (a, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in ub.iter().enumerate() {
                if !y.is_zero() {
                    entries.push((a, b, x * y));
                }
            }
        }
        SparseMatrix::from_triplets(big, big, entries)
    }
}

/// Matrix commutator `xy − yx`.
pub fn bracket(x: &SparseMatrix, y: &SparseMatrix) -> Result<SparseMatrix> {
    if !x.is_square() || x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(Error::ShapeMismatch {
            left: (x.rows(), x.cols()),
            right: (y.rows(), y.cols()),
        });
    }
    x.mul(y)?.sub(&y.mul(x)?)
}

/// `bar(r) = (r_{n+1},…,r_{2n}, −r_1,…,−r_n)`. Odd-length input is treated
/// as having an empty second half, which callers never rely on.
pub fn bar<T>(r: &[T]) -> Vec<T>
where
    T: Clone,
    for<'a> &'a T: Neg<Output = T>,
{
    let n = r.len() / 2;
    r[n..]
        .iter()
        .cloned()
        .chain(r[..n].iter().map(|x| -x))
        .collect()
}

/// The standard bilinear form `Σ u_i v_i`.
pub fn pairing(u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    Ok(crate::linalg::dot(u, v))
}

/// `(bar(r), s)` for integer vectors, without allocating.
pub fn bar_pairing_int(r: &[i64], s: &[i64]) -> i64 {
    let n = r.len() / 2;
    (0..n)
        .map(|i| r[n + i] * s[i] - r[i] * s[n + i])
        .sum()
}

/// `(bar(r), s)` for an integer `r` and rational `s`.
pub fn bar_pairing_mixed(r: &[i64], s: &[Scalar]) -> Scalar {
    let n = r.len() / 2;
    let mut acc = Scalar::ZERO;
    for i in 0..n {
        acc.add_mul(&Scalar::from_int(r[n + i]), &s[i]);
        acc.sub_mul(&Scalar::from_int(r[i]), &s[n + i]);
    }
    acc
}

pub fn int_vector(v: &[i64]) -> Vector {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}

/// Root decomposition data for a positive root.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RootDatum {
    pub root: Vec<i64>,
    pub simple_coeffs: Vec<i64>,
    pub height: i64,
}

fn is_positive_root(root: &[i64]) -> bool {
    let nz: Vec<(usize, i64)> = root
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    matches!(nz.as_slice(), [(_, 2)] | [(_, 1), (_, 1)] | [(_, 1), (_, -1)])
}

/// Simple-root coefficients and height of a positive root given in
/// ε-coordinates. With `α_i = ε_i − ε_{i+1}` and `α_n = 2ε_n`, the
/// coefficients are partial sums `a_i = c_1 + … + c_i` for `i < n` and
/// `a_n = (c_1 + … + c_n) / 2`.
pub fn root_height(root: &[i64], n: usize) -> Result<RootDatum> {
    if n < 1 {
        return Err(Error::InvalidRank(n));
    }
    if root.len() != n || !is_positive_root(root) {
        return Err(Error::NotPositiveRoot(format!("{root:?}")));
    }
    let mut coeffs = Vec::with_capacity(n);
    let mut partial = 0i64;
    for (i, c) in root.iter().enumerate() {
        partial += c;
        if i + 1 < n {
            coeffs.push(partial);
        }
    }
    if partial % 2 != 0 {
        return Err(Error::NotPositiveRoot(format!("{root:?}")));
    }
    coeffs.push(partial / 2);
    if coeffs.iter().any(|&a| a < 0) {
        return Err(Error::NotPositiveRoot(format!("{root:?}")));
    }
    let height = coeffs.iter().sum();
    Ok(RootDatum {
        root: root.to_vec(),
        simple_coeffs: coeffs,
        height,
    })
}

/// All positive roots of sp(2n) in ε-coordinates: `ε_i − ε_j` (i < j) then
/// `ε_k + ε_l` (k ≤ l).
pub fn positive_roots(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut r = vec![0; n];
            r[i] = 1;
            r[j] = -1;
            out.push(r);
        }
    }
    for k in 0..n {
        for l in k..n {
            let mut r = vec![0; n];
            r[k] += 1;
            r[l] += 1;
            out.push(r);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use alloc::string::ToString;

    fn ints(v: &[i64]) -> Vector {
        int_vector(v)
    }

    #[test]
    fn sp2_basis_matches_formulas() {
        let alg = SpAlgebra::new(1).unwrap();
        assert_eq!(alg.dim(), 3);
        let x = alg.matrix(Generator::Raising(0, 0)).unwrap();
        let y = alg.matrix(Generator::Lowering(0, 0)).unwrap();
        let h = alg.matrix(Generator::Cartan(0)).unwrap();
        assert_eq!(x.get(0, 1), Scalar::from_int(2));
        assert_eq!(x.nnz(), 1);
        assert_eq!(y.get(1, 0), Scalar::from_int(2));
        assert_eq!(y.nnz(), 1);
        assert_eq!((h.get(0, 0), h.get(1, 1)), (Scalar::ONE, -Scalar::ONE));
        assert_eq!(bracket(x, y).unwrap(), h.scale(&Scalar::from_int(4)));
        assert_eq!(bracket(h, x).unwrap(), x.scale(&Scalar::from_int(2)));
        assert!(bracket(x, x).unwrap().is_zero());
    }

    #[test]
    fn dimensions_and_order() {
        for n in 1..=4 {
            let alg = SpAlgebra::new(n).unwrap();
            assert_eq!(alg.dim(), 2 * n * n + n);
        }
        let alg = SpAlgebra::new(2).unwrap();
        let names: Vec<_> = alg.labels().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            names,
            [
                "h_1", "h_2", "X_{e1-e2}", "X_{e2-e1}", "X_{2e1}", "X_{e1+e2}", "X_{2e2}",
                "X_{-2e1}", "X_{-e1-e2}", "X_{-2e2}"
            ]
        );
        for (g, name) in alg.labels().iter().zip(&names) {
            assert_eq!(&name.parse::<Generator>().unwrap(), g);
        }
        assert!(SpAlgebra::new(0).is_err());
    }

    #[test]
    fn bar_and_pairing() {
        assert_eq!(bar(&ints(&[1, 2, 3, 4])), ints(&[3, 4, -1, -2]));
        assert_eq!(bar(&ints(&[1, 0])), ints(&[0, -1]));
        let r = ints(&[1, 2, 3, 4]);
        let e1 = ints(&[1, 0, 0, 0]);
        assert_eq!(pairing(&bar(&r), &e1).unwrap(), Scalar::from_int(3));
        assert_eq!(pairing(&bar(&e1), &r).unwrap(), Scalar::from_int(-3));
        assert_eq!(pairing(&bar(&r), &r).unwrap(), Scalar::ZERO);
        assert!(pairing(&r, &e1[..2]).is_err());
        assert_eq!(bar_pairing_int(&[1, 2, 3, 4], &[1, 0, 0, 0]), 3);
    }

    #[test]
    fn decompose_rank_one() {
        let alg = SpAlgebra::new(1).unwrap();
        let m = alg.rank_one(&ints(&[1, 1])).unwrap();
        assert_eq!(m.to_dense(), vec![ints(&[1, -1]), ints(&[1, -1])]);
        let c = alg.decompose_labeled(&m).unwrap();
        assert_eq!(c[&Generator::Cartan(0)], Scalar::ONE);
        assert_eq!(c[&Generator::Lowering(0, 0)], q(1, 2));
        assert_eq!(c[&Generator::Raising(0, 0)], q(-1, 2));
        assert!(alg
            .decompose(&SparseMatrix::zeros(2, 2))
            .unwrap()
            .iter()
            .all(Scalar::is_zero));
        assert!(alg.decompose(&SparseMatrix::identity(2)).is_err());
    }

    #[test]
    fn heights() {
        assert_eq!(root_height(&[1, -1], 2).unwrap().height, 1);
        assert_eq!(root_height(&[1, 1], 2).unwrap().height, 2);
        let d = root_height(&[2, 0], 2).unwrap();
        assert_eq!((d.simple_coeffs.clone(), d.height), (vec![2, 1], 3));
        assert!(root_height(&[-1, 1], 2).is_err());
        assert!(root_height(&[1, 0], 2).is_err());
        assert!(root_height(&[1, 1, 0], 2).is_err());
    }
}
