//! Compound matrices on exterior powers and their adjugate-compound
//! companions.
//!
//! With the lexicographic basis of n-subsets, the grade-n compound of a d x d
//! matrix A has (J, K) entry det A_{K,J}; at grade 1 this is the transpose.
//! The adjugate-compound family B_n is the signed complementary-minor matrix
//! satisfying B_n * C_n = C_n * B_n = |det A| * identity.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::dilation::certify_dilation;
use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::subsets::{binomial, enumerate_subsets, tau_sign, SubsetIndex};

/// Determinant of the submatrix with rows K, columns J. Size-0 subsets give
/// the empty determinant 1.
pub fn minor(a: &IntegerMatrix, k: &SubsetIndex, j: &SubsetIndex) -> Result<BigInt> {
    if k.size() != j.size() {
        return Err(Error::SubsetSizeMismatch { k: k.size(), j: j.size() });
    }
    if k.ambient() > a.rows() || j.ambient() > a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "subset ambient dimension exceeds {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    a.submatrix(&k.zero_based(), &j.zero_based()).determinant()
}

/// Grade-n compound matrix: row J, column K, entry det A_{K,J}.
pub fn compound_c(a: &IntegerMatrix, n: usize) -> Result<IntegerMatrix> {
    let d = a.require_square()?;
    if n > d {
        return Err(Error::GradeOutOfRange { n, d });
    }
    let subsets = enumerate_subsets(d, n)?;
    let size = binomial(d, n);
    let mut c = IntegerMatrix::zeros(size, size);
    for j in &subsets {
        for k in &subsets {
            c[(j.rank(), k.rank())] = minor(a, k, j)?;
        }
    }
    Ok(c)
}

/// B_n without the dilation gate: only |det a| >= 2 is required. Used by the
/// certified pipeline after certification, and directly by property tests.
pub fn adjugate_compound_b_unchecked(a: &IntegerMatrix, n: usize) -> Result<IntegerMatrix> {
    let d = a.require_square()?;
    if n > d {
        return Err(Error::GradeOutOfRange { n, d });
    }
    let det = a.determinant()?;
    if det.abs() < BigInt::from(2) {
        return Err(Error::InvalidInput(format!(
            "adjugate compound needs |det| >= 2, got det = {det}"
        )));
    }
    if n == 0 {
        let mut b = IntegerMatrix::zeros(1, 1);
        b[(0, 0)] = det.abs();
        return Ok(b);
    }
    if n == d {
        let mut b = IntegerMatrix::zeros(1, 1);
        b[(0, 0)] = BigInt::from(det.signum());
        return Ok(b);
    }
    let negate = det.is_negative();
    let subsets = enumerate_subsets(d, n)?;
    let size = binomial(d, n);
    let mut b = IntegerMatrix::zeros(size, size);
    for k in &subsets {
        let k_comp = k.complement();
        let sign_k = tau_sign(k);
        for l in &subsets {
            let l_comp = l.complement();
            let sign = sign_k * tau_sign(l);
            let mut entry = minor(a, &k_comp, &l_comp)?;
            if sign < 0 {
                entry = -entry;
            }
            if negate {
                entry = -entry;
            }
            b[(k.rank(), l.rank())] = entry;
        }
    }
    Ok(b)
}

/// Grade-n adjugate compound of a certified dilation matrix.
pub fn adjugate_compound_b(a: &IntegerMatrix, n: usize) -> Result<IntegerMatrix> {
    let cert = certify_dilation(a)?;
    if !cert.is_dilation {
        return Err(Error::NotDilation(
            cert.evidence.last().cloned().unwrap_or_default(),
        ));
    }
    adjugate_compound_b_unchecked(a, n)
}

/// Signed diagonal Laplace sum over complementary minors; equals det a.
pub fn laplace_identity_diag(a: &IntegerMatrix, n: usize, j: &SubsetIndex) -> Result<BigInt> {
    let d = a.require_square()?;
    if n == 0 || n >= d {
        return Err(Error::GradeOutOfRange { n, d });
    }
    if j.size() != n {
        return Err(Error::SubsetSizeMismatch { k: n, j: j.size() });
    }
    let j_comp = j.complement();
    let sign_j = tau_sign(j);
    let mut sum = BigInt::from(0);
    for k in &enumerate_subsets(d, n)? {
        let term = minor(a, k, j)? * minor(a, &k.complement(), &j_comp)?;
        if sign_j * tau_sign(k) < 0 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    Ok(sum)
}

/// Off-diagonal companion of `laplace_identity_diag`; equals 0 for J != L.
pub fn laplace_identity_offdiag(
    a: &IntegerMatrix,
    n: usize,
    j: &SubsetIndex,
    l: &SubsetIndex,
) -> Result<BigInt> {
    let d = a.require_square()?;
    if n == 0 || n >= d {
        return Err(Error::GradeOutOfRange { n, d });
    }
    if j == l {
        return Err(Error::InvalidInput(
            "off-diagonal identity needs J != L; use the diagonal identity".into(),
        ));
    }
    let l_comp = l.complement();
    let sign_j = tau_sign(j);
    let mut sum = BigInt::from(0);
    for k in &enumerate_subsets(d, n)? {
        let term = minor(a, k, j)? * minor(a, &k.complement(), &l_comp)?;
        if sign_j * tau_sign(k) < 0 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    Ok(sum)
}

/// Integer adjugate: adj(m) = det(m) * m^-1, by cofactor minors.
fn adjugate(m: &IntegerMatrix) -> Result<IntegerMatrix> {
    let d = m.require_square()?;
    if d == 1 {
        return Ok(IntegerMatrix::identity(1));
    }
    let all: Vec<usize> = (1..=d).collect();
    let mut adj = IntegerMatrix::zeros(d, d);
    for i in 1..=d {
        let rows = SubsetIndex::new(d, all.iter().copied().filter(|&r| r != i).collect())?;
        for j in 1..=d {
            let cols =
                SubsetIndex::new(d, all.iter().copied().filter(|&c| c != j).collect())?;
            let mut cof = minor(m, &rows, &cols)?;
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            // adj is the transpose of the cofactor matrix
            adj[(j - 1, i - 1)] = cof;
        }
    }
    Ok(adj)
}

/// Closed form for B_1: |det A| * (A^T)^-1, cleared to integers.
pub fn b1_closed_form(a: &IntegerMatrix) -> Result<IntegerMatrix> {
    let det = a.determinant()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    // |det| (A^T)^-1 = sign(det) * adj(A^T)
    let adj_t = adjugate(&a.transpose())?;
    Ok(if det.is_negative() { adj_t.neg() } else { adj_t })
}

/// Closed form for B_{d-1}: (k, l) entry (-1)^{k+l} a_{k,l} in the basis
/// f_k = e_{{1..d} \ {k}}, negated when det < 0, then relabeled into the
/// lexicographic subset basis (f_k sits at lex rank d - k).
pub fn bd1_closed_form(a: &IntegerMatrix) -> Result<IntegerMatrix> {
    let d = a.require_square()?;
    let det = a.determinant()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let mut out = IntegerMatrix::zeros(d, d);
    for p in 0..d {
        for q in 0..d {
            // lex rank p of the (d-1)-subsets is the complement of element
            // k = d - p (1-based)
            let k = d - p;
            let l = d - q;
            let mut entry = a[(k - 1, l - 1)].clone();
            if (k + l) % 2 == 1 {
                entry = -entry;
            }
            if det.is_negative() {
                entry = -entry;
            }
            out[(p, q)] = entry;
        }
    }
    Ok(out)
}

/// The full family {C_n}, {B_n} for n = 0..d of a matrix with |det| >= 2.
#[derive(Clone, Debug)]
pub struct GradedFamily {
    pub a: IntegerMatrix,
    pub det: BigInt,
    pub c: Vec<IntegerMatrix>,
    pub b: Vec<IntegerMatrix>,
}

impl GradedFamily {
    pub fn new(a: &IntegerMatrix) -> Result<Self> {
        let d = a.require_square()?;
        let det = a.determinant()?;
        let c: Result<Vec<_>> = (0..=d).map(|n| compound_c(a, n)).collect();
        let b: Result<Vec<_>> = (0..=d).map(|n| adjugate_compound_b_unchecked(a, n)).collect();
        Ok(GradedFamily { a: a.clone(), det, c: c?, b: b? })
    }

    /// B_n * C_n = C_n * B_n = |det| * identity at every grade.
    pub fn verify_inverse_identity(&self) -> Result<()> {
        let scale = self.det.abs();
        for (n, (b, c)) in self.b.iter().zip(&self.c).enumerate() {
            let expected = IntegerMatrix::identity(b.rows()).scale(&scale);
            if b.mul(c)? != expected || c.mul(b)? != expected {
                return Err(Error::InternalInconsistency(format!(
                    "B_{n} C_{n} != |det| 1 for {:?}",
                    self.a
                )));
            }
        }
        Ok(())
    }
}
