//! Polynomials in the grade variables `s_1..s_N` with matrix coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, Vector};
use crate::scalar::Scalar;

/// Exponent tuple of a monomial, one entry per variable.
pub type Exponent = Vec<u8>;

/// Scalar polynomial, zero coefficients never stored.
pub type ScalarPoly = BTreeMap<Exponent, Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixPolynomial {
    vars: usize,
    dim: usize,
    terms: BTreeMap<Exponent, SparseMatrix>,
}

impl MatrixPolynomial {
    pub fn zero(vars: usize, dim: usize) -> Self {
        Self {
            vars,
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, SparseMatrix> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| usize::from(x)).sum())
            .max()
    }

    pub fn add_term(&mut self, exp: Exponent, m: &SparseMatrix) {
        debug_assert_eq!(exp.len(), self.vars);
        if m.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(t) => {
                t.add_scaled(&Scalar::ONE, m);
                if t.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, m.clone());
            }
        }
    }

    /// Adds `p(s)·I`.
    pub fn add_scalar(&mut self, p: &ScalarPoly) {
        for (e, c) in p {
            self.add_term(e.clone(), &SparseMatrix::scalar_identity(self.dim, c));
        }
    }

    /// Coefficient of a monomial (the zero matrix if absent).
    pub fn coefficient(&self, exp: &[u8]) -> SparseMatrix {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zeros(self.dim, self.dim))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, m) in &other.terms {
            out.add_term(e.clone(), m);
        }
        Ok(out)
    }

    /// Product `self · other`, matrices composed in that order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.vars, self.dim);
        for (ea, a) in &self.terms {
            for (eb, b) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, &a.mul(b)?);
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, s: &[Scalar]) -> Result<SparseMatrix> {
        if s.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                found: s.len(),
            });
        }
        let mut out = SparseMatrix::zeros(self.dim, self.dim);
        for (e, m) in &self.terms {
            out.add_scaled(&monomial_value(e, s), m);
        }
        Ok(out)
    }

    /// Homogeneous part of the given degree.
    pub fn homogeneous(&self, degree: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().map(|&x| usize::from(x)).sum::<usize>() == degree)
            .map(|(e, m)| (e.clone(), m.clone()))
            .collect();
        Self {
            vars: self.vars,
            dim: self.dim,
            terms,
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars || self.dim != other.dim {
            return Err(Error::ShapeMismatch {
                left: (self.vars, self.dim),
                right: (other.vars, other.dim),
            });
        }
        Ok(())
    }
}

pub fn monomial_value(e: &[u8], s: &[Scalar]) -> Scalar {
    let mut v = Scalar::ONE;
    for (x, &p) in s.iter().zip(e) {
        for _ in 0..p {
            v *= x;
        }
    }
    v
}

/// Exponent with the listed variables (repeats allowed) raised.
pub fn monomial(vars: usize, indices: &[usize]) -> Exponent {
    let mut e = vec![0u8; vars];
    for &i in indices {
        e[i] += 1;
    }
    e
}

/// A vector whose entries are affine in `s`: `constant + Σ s_i linear[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineVector {
    pub constant: Vector,
    pub linear: Vec<Vector>,
}

impl AffineVector {
    /// The constant vector `c`.
    pub fn constant(c: Vector) -> Self {
        let len = c.len();
        Self {
            constant: c,
            linear: vec![vec![Scalar::ZERO; len]; len],
        }
    }

    /// The vector of variables `s` itself.
    pub fn variables(len: usize) -> Self {
        Self {
            constant: vec![Scalar::ZERO; len],
            linear: (0..len).map(|i| crate::linalg::unit_vector(len, i)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            constant: zip_add(&self.constant, &other.constant, false),
            linear: self
                .linear
                .iter()
                .zip(&other.linear)
                .map(|(a, b)| zip_add(a, b, false))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            constant: zip_add(&self.constant, &other.constant, true),
            linear: self
                .linear
                .iter()
                .zip(&other.linear)
                .map(|(a, b)| zip_add(a, b, true))
                .collect(),
        }
    }

    pub fn evaluate(&self, s: &[Scalar]) -> Vector {
        let mut out = self.constant.clone();
        for (si, l) in s.iter().zip(&self.linear) {
            crate::linalg::axpy(&mut out, si, l);
        }
        out
    }
}

fn zip_add(a: &[Scalar], b: &[Scalar], negate: bool) -> Vector {
    a.iter()
        .zip(b)
        .map(|(x, y)| if negate { x - y } else { x + y })
        .collect()
}

/// Quadratic expansion of a symmetric bilinear expression `f(u(s), w(s))`
/// of two affine vectors. `f` must be bilinear.
pub(crate) fn expand_bilinear<T, F>(u: &AffineVector, w: &AffineVector, mut f: F) -> Vec<(Exponent, T)>
where
    F: FnMut(&[Scalar], &[Scalar]) -> T,
{
    let vars = u.linear.len();
    let mut out = Vec::new();
    out.push((vec![0u8; vars], f(&u.constant, &w.constant)));
    for i in 0..vars {
        out.push((monomial(vars, &[i]), f(&u.linear[i], &w.constant)));
        out.push((monomial(vars, &[i]), f(&u.constant, &w.linear[i])));
        for j in 0..vars {
            out.push((monomial(vars, &[i, j]), f(&u.linear[i], &w.linear[j])));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn diag(d: &[i64]) -> SparseMatrix {
        SparseMatrix::from_triplets(
            d.len(),
            d.len(),
            d.iter().enumerate().map(|(i, &x)| (i, i, Scalar::from_int(x))),
        )
        .unwrap()
    }

    #[test]
    fn product_and_evaluation() {
        // p = A s_0 + B, r = A s_1
        let a = diag(&[1, 2]);
        let b = diag(&[3, 0]);
        let mut p = MatrixPolynomial::zero(2, 2);
        p.add_term(monomial(2, &[0]), &a);
        p.add_term(monomial(2, &[]), &b);
        let mut r = MatrixPolynomial::zero(2, 2);
        r.add_term(monomial(2, &[1]), &a);
        let pr = p.mul(&r).unwrap();
        assert_eq!(pr.degree(), Some(2));
        let s = [q(1, 2), Scalar::from_int(3)];
        let lhs = pr.evaluate(&s).unwrap();
        let rhs = p.evaluate(&s).unwrap().mul(&r.evaluate(&s).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(pr.homogeneous(1).degree(), Some(1));
        assert!(MatrixPolynomial::zero(2, 2).degree().is_none());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = diag(&[1, 1]);
        let mut p = MatrixPolynomial::zero(1, 2);
        p.add_term(monomial(1, &[0]), &a);
        p.add_term(monomial(1, &[0]), &a.scale(&-Scalar::ONE));
        assert!(p.is_zero());
    }

    #[test]
    fn affine_vectors() {
        let s = AffineVector::variables(2);
        let c = AffineVector::constant(vec![Scalar::ONE, q(1, 3)]);
        let v = c.sub(&s);
        assert_eq!(
            v.evaluate(&[Scalar::from_int(2), Scalar::ZERO]),
            vec![-Scalar::ONE, q(1, 3)]
        );
    }
}
