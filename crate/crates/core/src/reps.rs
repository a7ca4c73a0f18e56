//! Finite-dimensional representations of sp(2n).
//!
//! A [`Representation`] stores one action matrix per basis element of the
//! algebra (in the algebra's basis order) together with a weight for every
//! basis vector of the module. All constructions keep the module basis a
//! weight basis, so Cartan elements always act diagonally.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{nullspace, unit_vector, zero_vector, SparseMatrix, Subspace, Vector};
use crate::scalar::Scalar;
use crate::symplectic::{bracket, Generator, SpAlgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    alg: Arc<SpAlgebra>,
    labels: Vec<String>,
    action: Vec<SparseMatrix>,
    weights: Vec<Vec<i64>>,
}

/// A linear map between two representations of the same algebra.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub source: Representation,
    pub target: Representation,
    pub matrix: SparseMatrix,
}

impl Representation {
    pub fn new(
        alg: Arc<SpAlgebra>,
        labels: Vec<String>,
        action: Vec<SparseMatrix>,
        weights: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if action.len() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: action.len(),
            });
        }
        if weights.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: weights.len(),
            });
        }
        if let Some(w) = weights.iter().find(|w| w.len() != alg.rank()) {
            return Err(Error::DimensionMismatch {
                expected: alg.rank(),
                found: w.len(),
            });
        }
        if let Some(m) = action.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::ShapeMismatch {
                left: (m.rows(), m.cols()),
                right: (dim, dim),
            });
        }
        let rep = Self {
            alg,
            labels,
            action,
            weights,
        };
        rep.check_cartan_diagonal()?;
        Ok(rep)
    }

    fn check_cartan_diagonal(&self) -> Result<()> {
        for i in 0..self.alg.rank() {
            let h = &self.action[i];
            for b in 0..self.dim() {
                let expected = Scalar::from_int(self.weights[b][i]);
                let row = h.row(b);
                let ok = match row {
                    [] => expected.is_zero(),
                    [(c, v)] => *c == b && *v == expected,
                    _ => false,
                };
                if !ok {
                    return Err(Error::KindMismatch(format!(
                        "h_{} is not diagonal with the stored weight at basis vector {}",
                        i + 1,
                        self.labels[b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// One-dimensional trivial module `V(δ_0)`.
    pub fn trivial(alg: Arc<SpAlgebra>) -> Self {
        let n = alg.rank();
        let action = vec![SparseMatrix::zeros(1, 1); alg.dim()];
        Self {
            alg,
            labels: vec![String::from("1")],
            action,
            weights: vec![vec![0; n]],
        }
    }

    /// The natural module `Q^N`; basis `e_1..e_N` with weights `±ε_i`.
    pub fn natural(alg: Arc<SpAlgebra>) -> Self {
        let n = alg.rank();
        let labels = (1..=2 * n).map(|i| format!("e{i}")).collect();
        let weights = (0..2 * n)
            .map(|i| {
                let mut w = vec![0i64; n];
                if i < n {
                    w[i] = 1;
                } else {
                    w[i - n] = -1;
                }
                w
            })
            .collect();
        let action = alg.matrices().to_vec();
        Self {
            alg,
            labels,
            action,
            weights,
        }
    }

    pub fn algebra(&self) -> &Arc<SpAlgebra> {
        &self.alg
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn action(&self) -> &[SparseMatrix] {
        &self.action
    }

    pub fn act(&self, g: Generator) -> Result<&SparseMatrix> {
        self.alg
            .index_of(g)
            .map(|i| &self.action[i])
            .ok_or_else(|| Error::KindMismatch(format!("{g} is not a basis element")))
    }

    /// `ρ(Σ c_i B_i) = Σ c_i ρ(B_i)`.
    pub fn action_of(&self, coeffs: &[Scalar]) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.dim(), self.dim());
        for (c, m) in coeffs.iter().zip(&self.action) {
            out.add_scaled(c, m);
        }
        out
    }

    /// `ρ(m)` for a matrix `m ∈ sp(2n)` in the natural realization.
    pub fn action_of_matrix(&self, m: &SparseMatrix) -> Result<SparseMatrix> {
        let coeffs = self.alg.decompose(m)?;
        Ok(self.action_of(&coeffs))
    }

    /// Basis pairs `(a, b)` for which `ρ([a, b]) ≠ [ρ(a), ρ(b)]`.
    pub fn bracket_violations(&self) -> Vec<(Generator, Generator)> {
        let labels = self.alg.labels();
        let mut bad = Vec::new();
        for a in 0..labels.len() {
            for b in a + 1..labels.len() {
                let ok = bracket(&self.alg.matrices()[a], &self.alg.matrices()[b])
                    .and_then(|c| self.action_of_matrix(&c))
                    .and_then(|lhs| Ok(lhs == bracket(&self.action[a], &self.action[b])?))
                    .unwrap_or(false);
                if !ok {
                    bad.push((labels[a], labels[b]));
                }
            }
        }
        bad
    }

    /// `Λ^k` of this module with basis `v_{i_1} ∧ … ∧ v_{i_k}`, `i_1 < … < i_k`,
    /// in lexicographic order.
    pub fn exterior_power(&self, k: usize) -> Result<Representation> {
        if k > self.dim() {
            return Err(Error::DegreeOutOfRange {
                what: "exterior power",
                degree: k,
                min: 0,
                max: self.dim(),
            });
        }
        let tuples = combinations(self.dim(), k);
        self.tensor_like(tuples, k, "^", true)
    }

    /// `Sym^k` of this module with monomial basis `v_{i_1} ⋯ v_{i_k}`,
    /// `i_1 ≤ … ≤ i_k`, in lexicographic order.
    pub fn symmetric_power(&self, k: usize) -> Result<Representation> {
        let tuples = multisets(self.dim(), k);
        self.tensor_like(tuples, k, "*", false)
    }

    fn tensor_like(
        &self,
        tuples: Vec<Vec<usize>>,
        k: usize,
        sep: &str,
        alternating: bool,
    ) -> Result<Representation> {
        let index: BTreeMap<&[usize], usize> = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.as_slice(), i))
            .collect();
        let dim = tuples.len();
        let mut action = Vec::with_capacity(self.action.len());
        let mut scratch = vec![0usize; k];
        for base in &self.action {
            let columns = base.transpose();
            let mut triplets = Vec::new();
            for (col, t) in tuples.iter().enumerate() {
                for m in 0..k {
                    for (j, v) in columns.row(t[m]) {
                        scratch.copy_from_slice(t);
                        scratch[m] = *j;
                        let sign = if alternating {
                            match sort_with_sign(&mut scratch) {
                                Some(s) => s,
                                None => continue,
                            }
                        } else {
                            scratch.sort_unstable();
                            1
                        };
                        let row = index[scratch.as_slice()];
                        let val = if sign < 0 { -v } else { v.clone() };
                        triplets.push((row, col, val));
                    }
                }
            }
            action.push(SparseMatrix::from_triplets(dim, dim, triplets)?);
        }
        let labels = tuples
            .iter()
            .map(|t| {
                if t.is_empty() {
                    String::from("1")
                } else {
                    t.iter()
                        .map(|&i| self.labels[i].as_str())
                        .collect::<Vec<_>>()
                        .join(sep)
                }
            })
            .collect();
        let n = self.alg.rank();
        let weights = tuples
            .iter()
            .map(|t| {
                let mut w = vec![0i64; n];
                for &i in t {
                    for (a, b) in w.iter_mut().zip(&self.weights[i]) {
                        *a += b;
                    }
                }
                w
            })
            .collect();
        Representation::new(self.alg.clone(), labels, action, weights)
    }

    /// Restriction to an invariant subspace, in the subspace's RREF basis.
    ///
    /// RREF rows of an h-stable subspace of a weight basis are weight
    /// vectors, so the restricted module is again weight-based.
    pub fn subrepresentation(&self, sub: &Subspace) -> Result<Representation> {
        if sub.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: sub.ambient_dim(),
            });
        }
        let mut weights = Vec::with_capacity(sub.dim());
        for row in sub.basis() {
            let mut support = row.iter().enumerate().filter(|(_, x)| !x.is_zero());
            let (first, _) = support.next().expect("basis rows are nonzero");
            let w = &self.weights[first];
            if support.any(|(i, _)| &self.weights[i] != w) {
                return Err(Error::NotInvariant(String::from("the Cartan subalgebra")));
            }
            weights.push(w.clone());
        }
        let labels = sub
            .pivots()
            .iter()
            .map(|&p| self.labels[p].clone())
            .collect();
        let mut action = Vec::with_capacity(self.action.len());
        for (g, m) in self.alg.labels().iter().zip(&self.action) {
            let mut columns = Vec::with_capacity(sub.dim());
            for row in sub.basis() {
                let image = m.mul_vec(row);
                let coords = sub
                    .coordinates(&image)
                    .ok_or_else(|| Error::NotInvariant(g.to_string()))?;
                columns.push(coords);
            }
            action.push(SparseMatrix::from_columns(&columns, sub.dim()));
        }
        Representation::new(self.alg.clone(), labels, action, weights)
    }

    /// Basis of the joint kernel of all positive root vectors, each vector
    /// paired with its weight.
    pub fn highest_weight_vectors(&self) -> Vec<(Vector, Vec<i64>)> {
        let positive: Vec<&SparseMatrix> = self
            .alg
            .positive_root_indices()
            .into_iter()
            .map(|i| &self.action[i])
            .collect();
        let kernel = if positive.is_empty() {
            Subspace::full(self.dim())
        } else {
            let stacked =
                SparseMatrix::vstack(&positive, self.dim()).expect("all blocks are dim×dim");
            nullspace(&stacked)
        };
        kernel
            .basis()
            .iter()
            .map(|v| {
                let lead = v.iter().position(|x| !x.is_zero()).expect("nonzero");
                (v.clone(), self.weights[lead].clone())
            })
            .collect()
    }

    /// Smallest invariant subspace containing `v`.
    pub fn cyclic_span(&self, v: &[Scalar]) -> Result<Subspace> {
        let mut span = Subspace::zero(self.dim());
        let mut queue = VecDeque::new();
        if span.insert(v)? {
            queue.push_back(v.to_vec());
        }
        while let Some(w) = queue.pop_front() {
            if span.is_full() {
                break;
            }
            for m in &self.action {
                let image = m.mul_vec(&w);
                if span.insert(&image)? {
                    queue.push_back(image);
                }
            }
        }
        Ok(span)
    }

    /// Irreducible iff every basis vector generates the whole module and
    /// the highest-weight line is unique.
    pub fn is_irreducible(&self) -> bool {
        if self.dim() == 0 || self.highest_weight_vectors().len() != 1 {
            return false;
        }
        (0..self.dim()).all(|i| {
            self.cyclic_span(&unit_vector(self.dim(), i))
                .map(|s| s.is_full())
                .unwrap_or(false)
        })
    }

    /// The submodule generated by a highest-weight vector of the given
    /// weight.
    pub fn irreducible_component(&self, weight: &[i64]) -> Result<Representation> {
        let (v, _) = self
            .highest_weight_vectors()
            .into_iter()
            .find(|(_, w)| w == weight)
            .ok_or_else(|| {
                Error::KindMismatch(format!("no highest-weight vector of weight {weight:?}"))
            })?;
        let span = self.cyclic_span(&v)?;
        self.subrepresentation(&span)
    }
}

/// `Λ^k` of the natural module together with `Ker θ_k` and the module it
/// carries.
#[derive(Clone, Debug)]
pub struct FundamentalRealization {
    pub k: usize,
    /// `Λ^k Q^N`
    pub wedge: Representation,
    /// `Ker θ_k` inside `Λ^k` (everything for `k < 2`).
    pub kernel: Subspace,
    pub module: Representation,
}

pub fn fundamental_realization(alg: &Arc<SpAlgebra>, k: usize) -> Result<FundamentalRealization> {
    if k > alg.rank() {
        return Err(Error::DegreeOutOfRange {
            what: "fundamental module",
            degree: k,
            min: 0,
            max: alg.rank(),
        });
    }
    let natural = Representation::natural(alg.clone());
    let wedge = natural.exterior_power(k)?;
    if k < 2 {
        let kernel = Subspace::full(wedge.dim());
        let module = if k == 0 {
            Representation::trivial(alg.clone())
        } else {
            natural
        };
        return Ok(FundamentalRealization {
            k,
            wedge,
            kernel,
            module,
        });
    }
    let theta = contraction_theta(alg, k)?;
    let kernel = nullspace(&theta.matrix);
    let module = wedge.subrepresentation(&kernel)?;
    Ok(FundamentalRealization {
        k,
        wedge,
        kernel,
        module,
    })
}

/// `V(δ_k)`: trivial for `k = 0`, natural for `k = 1`, `Ker θ_k` otherwise.
pub fn fundamental_rep(alg: &Arc<SpAlgebra>, k: usize) -> Result<Representation> {
    fundamental_realization(alg, k).map(|f| f.module)
}

/// `(e_a, bar(e_b))`
fn basis_form(a: usize, b: usize, n: usize) -> i64 {
    if b >= n {
        i64::from(a + n == b)
    } else {
        -i64::from(a == b + n)
    }
}

/// The contraction `θ_k : Λ^k → Λ^{k−2}`,
/// `v_1∧…∧v_k ↦ Σ_{r<s} (−1)^{r+s−1} (v_r, bar v_s) v_1∧…v̂_r…v̂_s…∧v_k`
/// with one-based positions `r, s`.
pub fn contraction_theta(alg: &Arc<SpAlgebra>, k: usize) -> Result<LinearMap> {
    let big = alg.natural_dim();
    if k < 2 || k > big {
        return Err(Error::DegreeOutOfRange {
            what: "contraction",
            degree: k,
            min: 2,
            max: big,
        });
    }
    let natural = Representation::natural(alg.clone());
    let source = natural.exterior_power(k)?;
    let target = natural.exterior_power(k - 2)?;
    let target_index: BTreeMap<Vec<usize>, usize> = combinations(big, k - 2)
        .into_iter()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let n = alg.rank();
    let mut triplets = Vec::new();
    for (col, t) in combinations(big, k).into_iter().enumerate() {
        for r in 0..k {
            for s in r + 1..k {
                let form = basis_form(t[r], t[s], n);
                if form == 0 {
                    continue;
                }
                // one-based exponent (r+1)+(s+1)-1 = r+s+1
                let sign = if (r + s + 1) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != r && i != s)
                    .map(|(_, &x)| x)
                    .collect();
                triplets.push((target_index[&rest], col, Scalar::from_int(sign * form)));
            }
        }
    }
    let matrix = SparseMatrix::from_triplets(target.dim(), source.dim(), triplets)?;
    Ok(LinearMap {
        source,
        target,
        matrix,
    })
}

impl LinearMap {
    pub fn new(source: Representation, target: Representation, matrix: SparseMatrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch {
                left: (matrix.rows(), matrix.cols()),
                right: (target.dim(), source.dim()),
            });
        }
        Ok(Self {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(rep: &Representation) -> Self {
        Self {
            source: rep.clone(),
            target: rep.clone(),
            matrix: SparseMatrix::identity(rep.dim()),
        }
    }
}

/// Basis elements `x` with `f ∘ ρ_source(x) ≠ ρ_target(x) ∘ f`; empty means
/// `f` is a module homomorphism.
pub fn verify_intertwiner(f: &LinearMap) -> Result<Vec<Generator>> {
    if f.source.alg.rank() != f.target.alg.rank() {
        return Err(Error::KindMismatch(String::from(
            "source and target are modules over different algebras",
        )));
    }
    let mut bad = Vec::new();
    for (i, g) in f.source.alg.labels().iter().enumerate() {
        let left = f.matrix.mul(&f.source.action[i])?;
        let right = f.target.action[i].mul(&f.matrix)?;
        if left != right {
            bad.push(*g);
        }
    }
    Ok(bad)
}

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    Some(acc)
}

/// Increasing `k`-subsets of `0..n`, lexicographic.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Weakly increasing `k`-tuples from `0..n`, lexicographic.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0usize; k];
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - 1) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[i];
        }
    }
}

/// Sorts `t` and returns the permutation sign, or `None` on a repeat.
fn sort_with_sign(t: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

/// `v ∧ e_J` for a vector `v` of the natural module and an increasing
/// index tuple `J`, in `Λ^{|J|+1}` coordinates.
pub fn wedge_vector_with_monomial(v: &[Scalar], tuple: &[usize], index: &BTreeMap<Vec<usize>, usize>, dim: usize) -> Vector {
    let mut out = zero_vector(dim);
    let mut scratch = Vec::with_capacity(tuple.len() + 1);
    for (a, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        scratch.clear();
        scratch.push(a);
        scratch.extend_from_slice(tuple);
        if let Some(sign) = sort_with_sign(&mut scratch) {
            let pos = index[&scratch];
            if sign > 0 {
                out[pos] += c;
            } else {
                out[pos] -= c;
            }
        }
    }
    out
}

/// Wedge product of vectors of the natural module, in `Λ^k` coordinates
/// (basis from [`combinations`]).
pub fn wedge_vectors(vectors: &[Vector], big: usize) -> Vector {
    let k = vectors.len();
    let tuples = combinations(big, k);
    tuples
        .iter()
        .map(|t| determinant_minor(vectors, t))
        .collect()
}

/// `det [v_i[t_j]]`, the coefficient of `e_t` in `v_1 ∧ … ∧ v_k`.
fn determinant_minor(vectors: &[Vector], cols: &[usize]) -> Scalar {
    let rows: Vec<Vector> = vectors
        .iter()
        .map(|v| cols.iter().map(|&c| v[c].clone()).collect())
        .collect();
    determinant(rows)
}

fn determinant(mut m: Vec<Vector>) -> Scalar {
    let n = m.len();
    let mut det = Scalar::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Scalar::ZERO;
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        let inv = pivot.recip().expect("nonzero");
        for r in c + 1..n {
            let f = &m[r][c] * &inv;
            if f.is_zero() {
                continue;
            }
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::symplectic::int_vector;

    fn alg(n: usize) -> Arc<SpAlgebra> {
        Arc::new(SpAlgebra::new(n).unwrap())
    }

    #[test]
    fn natural_module() {
        let a = alg(2);
        let v = Representation::natural(a.clone());
        assert_eq!(v.dim(), 4);
        assert_eq!(
            v.weights(),
            &[vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]
        );
        assert!(v.bracket_violations().is_empty());
        assert!(v.is_irreducible());
        let hw = v.highest_weight_vectors();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0], (unit_vector(4, 0), a.fundamental_weight(1)));
        let v1 = Representation::natural(alg(1));
        assert_eq!(v1.weights(), &[vec![1], vec![-1]]);
    }

    #[test]
    fn exterior_and_symmetric_dims() {
        let a = alg(2);
        let v = Representation::natural(a.clone());
        let l0 = v.exterior_power(0).unwrap();
        assert_eq!(l0.dim(), 1);
        assert!(l0.action().iter().all(SparseMatrix::is_zero));
        assert_eq!(v.exterior_power(1).unwrap().action(), v.action());
        assert_eq!(v.exterior_power(2).unwrap().dim(), 6);
        assert!(v.exterior_power(5).is_err());
        assert_eq!(v.symmetric_power(1).unwrap().action(), v.action());
        let s2 = v.symmetric_power(2).unwrap();
        assert_eq!(s2.dim(), 10);
        assert!(s2.bracket_violations().is_empty());
        assert!(s2.is_irreducible());
        let hw = s2.highest_weight_vectors();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].1, vec![2, 0]);
        let adj = Representation::natural(alg(1)).symmetric_power(2).unwrap();
        assert_eq!(adj.dim(), 3);
        assert_eq!(adj.highest_weight_vectors()[0].1, vec![2]);
    }

    #[test]
    fn theta_examples() {
        let a = alg(2);
        let th = contraction_theta(&a, 2).unwrap();
        // basis of Λ² for N=4: 12 13 14 23 24 34 (zero-based 01 02 03 12 13 23)
        assert_eq!(th.matrix.get(0, 1), Scalar::ONE); // e1∧e3
        assert_eq!(th.matrix.get(0, 0), Scalar::ZERO); // e1∧e2
        assert_eq!(th.matrix.get(0, 4), Scalar::ONE); // e2∧e4
        assert!(verify_intertwiner(&th).unwrap().is_empty());
        assert!(contraction_theta(&a, 1).is_err());
    }

    #[test]
    fn lambda2_splits() {
        let a = alg(2);
        let l2 = Representation::natural(a.clone()).exterior_power(2).unwrap();
        assert!(!l2.is_irreducible());
        let mut ws: Vec<_> = l2.highest_weight_vectors().into_iter().map(|x| x.1).collect();
        ws.sort();
        assert_eq!(ws, vec![vec![0, 0], vec![1, 1]]);
        // e1∧e3 + e2∧e4 spans the trivial summand
        let inv = int_vector(&[0, 1, 0, 0, 1, 0]);
        assert_eq!(l2.cyclic_span(&inv).unwrap().dim(), 1);
        assert!(l2.cyclic_span(&zero_vector(6)).unwrap().is_zero());
    }

    #[test]
    fn fundamental_dims() {
        let a = alg(2);
        let v = fundamental_rep(&a, 2).unwrap();
        assert_eq!(v.dim(), 5);
        assert!(v.is_irreducible());
        let t = fundamental_rep(&a, 0).unwrap();
        assert_eq!(t.dim(), 1);
        assert!(t.action().iter().all(SparseMatrix::is_zero));
        assert!(fundamental_rep(&a, 3).is_err());
        assert_eq!(fundamental_rep(&alg(3), 3).unwrap().dim(), 14);
    }

    #[test]
    fn intertwiner_violation_is_named() {
        let a = alg(2);
        let l2 = Representation::natural(a.clone()).exterior_power(2).unwrap();
        let l0 = Representation::natural(a.clone()).exterior_power(0).unwrap();
        let m = SparseMatrix::from_triplets(1, 6, [(0, 0, Scalar::ONE)]).unwrap();
        let f = LinearMap::new(l2.clone(), l0, m).unwrap();
        let bad = verify_intertwiner(&f).unwrap();
        assert!(!bad.is_empty());
        assert!(verify_intertwiner(&LinearMap::identity(&l2)).unwrap().is_empty());
    }

    #[test]
    fn wedge_helpers_agree() {
        let e = |i| unit_vector(4, i);
        let w = wedge_vectors(&[e(0), e(2)], 4);
        assert_eq!(w[1], Scalar::ONE);
        let w = wedge_vectors(&[e(2), e(0)], 4);
        assert_eq!(w[1], -Scalar::ONE);
        let idx: BTreeMap<Vec<usize>, usize> = combinations(4, 2)
            .into_iter()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let v = vec![q(1, 2), Scalar::ONE, Scalar::ZERO, Scalar::from_int(3)];
        let direct = wedge_vectors(&[v.clone(), e(1)], 4);
        assert_eq!(wedge_vector_with_monomial(&v, &[1], &idx, 6), direct);
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(6, 2), Some(15));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(20, 10), Some(184_756));
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(multisets(4, 2).len(), 10);
        assert_eq!(multisets(2, 3).len(), 4);
        let mut t = [2, 0, 1];
        assert_eq!(sort_with_sign(&mut t), Some(1));
        let mut t = [1, 0];
        assert_eq!(sort_with_sign(&mut t), Some(-1));
        let mut t = [1, 3, 1];
        assert_eq!(sort_with_sign(&mut t), None);
    }
}
