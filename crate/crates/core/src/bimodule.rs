//! Symbolic model of the Exel system on the d-torus: the endomorphism
//! induced by a dilation matrix, the averaging transfer operator, the
//! bimodule inner product and right action, monomial filter banks, the
//! reconstruction formula, and the Omega matrix.
//!
//! Everything acts on finite character sums (Laurent polynomials), where the
//! fiber average of a character is exactly 0 or a character; the only
//! floating point is the advisory numeric check inside `check_orthonormal`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::dilation::certify_dilation;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::matrix::IntegerMatrix;
use crate::smith::{smith_normal_form, SmithDecomposition};

/// The endomorphism f -> f o sigma_A on characters: exponent m -> A^T m.
pub fn alpha(a: &IntegerMatrix, f: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    let d = a.require_square()?;
    if f.dimension() != d {
        return Err(Error::DimensionMismatch(format!(
            "alpha: matrix is {d}x{d}, polynomial has {} variables",
            f.dimension()
        )));
    }
    let at = a.transpose();
    Ok(f.map_exponents(|e| Some(at.mul_vec(e).expect("square matrix"))))
}

/// Exact membership test m in M Z^d via the Smith decomposition of M:
/// with U M V = S, m lies in the image iff U m is divisible by diag(S).
struct LatticeMembership {
    u: IntegerMatrix,
    diag: Vec<BigInt>,
}

impl LatticeMembership {
    fn new(m: &IntegerMatrix) -> Result<Self> {
        let snf = smith_normal_form(m)?;
        Ok(LatticeMembership { u: snf.u, diag: snf.factors })
    }

    fn contains(&self, v: &[BigInt]) -> bool {
        let w = self.u.mul_vec(v).expect("dimension checked");
        w.iter().zip(&self.diag).all(|(x, s)| {
            if s.is_zero() {
                x.is_zero()
            } else {
                (x % s).is_zero()
            }
        })
    }
}

/// The transfer operator on characters: a term with exponent m survives iff
/// m lies in A^T Z^d, and is mapped to (A^T)^-1 m; all other terms average
/// to zero over the fibers.
pub fn transfer(a: &IntegerMatrix, f: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    let d = a.require_square()?;
    if f.dimension() != d {
        return Err(Error::DimensionMismatch(format!(
            "transfer: matrix is {d}x{d}, polynomial has {} variables",
            f.dimension()
        )));
    }
    let at = a.transpose();
    if at.determinant()?.is_zero() {
        return Err(Error::Singular);
    }
    let at_inv = at.rational_inverse()?;
    Ok(f.map_exponents(|e| {
        let rat: Vec<BigRational> = e
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        let solved = at_inv.mul_vec(&rat).expect("dimension checked");
        if solved.iter().all(|x| x.is_integer()) {
            Some(solved.iter().map(|x| x.to_integer()).collect())
        } else {
            None
        }
    }))
}

/// Bimodule inner product <f, g> = L(f* g), conjugate-linear in the first
/// variable.
pub fn inner(
    a: &IntegerMatrix,
    f: &LaurentPolynomial,
    g: &LaurentPolynomial,
) -> Result<LaurentPolynomial> {
    transfer(a, &f.conjugate().mul(g)?)
}

/// Right module action m . a = m alpha(a).
pub fn module_action(
    a_mat: &IntegerMatrix,
    m: &LaurentPolynomial,
    a: &LaurentPolynomial,
) -> Result<LaurentPolynomial> {
    m.mul(&alpha(a_mat, a)?)
}

/// Monomial filter bank: N = |det A| exponent vectors forming coset
/// representatives of Z^d / A^T Z^d, with the zero vector first.
#[derive(Clone, Debug, Serialize)]
pub struct FilterBank {
    #[serde(skip)]
    pub a: IntegerMatrix,
    pub n: usize,
    #[serde(serialize_with = "crate::serde_util::exponents_as_strings")]
    pub gammas: Vec<Vec<BigInt>>,
}

impl FilterBank {
    pub fn filter(&self, j: usize) -> LaurentPolynomial {
        LaurentPolynomial::monomial(self.gammas[j].clone(), BigRational::one())
    }
}

/// Coset representatives of Z^d / M Z^d from the Smith decomposition
/// U M V = S: the box {U^-1 t : 0 <= t_i < s_i} in lexicographic t order, so
/// t = 0 puts the zero vector (the trivial coset) first.
fn coset_representatives(m: &IntegerMatrix) -> Result<Vec<Vec<BigInt>>> {
    let SmithDecomposition { u, factors, .. } = smith_normal_form(m)?;
    if factors.iter().any(|f| f.is_zero()) {
        return Err(Error::Singular);
    }
    let u_inv = u.rational_inverse()?.to_integer()?;
    let sizes: Vec<BigInt> = factors;
    let mut reps = Vec::new();
    let mut t = vec![BigInt::zero(); sizes.len()];
    loop {
        reps.push(u_inv.mul_vec(&t)?);
        // lexicographic increment, last coordinate fastest
        let mut i = sizes.len();
        loop {
            if i == 0 {
                return Ok(reps);
            }
            i -= 1;
            t[i] += BigInt::one();
            if t[i] < sizes[i] {
                break;
            }
            t[i] = BigInt::zero();
        }
    }
}

/// Build the monomial filter bank of a certified dilation matrix from coset
/// representatives of Z^d / A^T Z^d.
pub fn build_filterbank(a: &IntegerMatrix) -> Result<FilterBank> {
    let cert = certify_dilation(a)?;
    if !cert.is_dilation {
        return Err(Error::NotDilation(
            cert.evidence.last().cloned().unwrap_or_default(),
        ));
    }
    let gammas = coset_representatives(&a.transpose())?;
    debug_assert_eq!(BigInt::from(gammas.len()), cert.det.abs());
    Ok(FilterBank { a: a.clone(), n: gammas.len(), gammas })
}

/// Outcome of the orthonormality check.
#[derive(Clone, Debug, Serialize)]
pub struct OrthonormalReport {
    pub ok: bool,
    /// Pairs (j, k) violating <m_j, m_k> = delta_{j,k}.
    pub failures: Vec<(usize, usize)>,
    /// Largest deviation of the advisory numeric kernel-sum check.
    pub numeric_max_error: f64,
}

/// Exact check that the filters are orthonormal: gamma_k - gamma_j lies in
/// A^T Z^d iff j = k. Also evaluates the kernel character sum
/// (1/N) sum_zeta e^{2 pi i <gamma_k - gamma_j, zeta>} numerically as an
/// advisory cross-check.
pub fn check_orthonormal(fb: &FilterBank) -> Result<OrthonormalReport> {
    let membership = LatticeMembership::new(&fb.a.transpose())?;
    let mut failures = Vec::new();
    for j in 0..fb.n {
        for k in 0..fb.n {
            let diff: Vec<BigInt> = fb.gammas[k]
                .iter()
                .zip(&fb.gammas[j])
                .map(|(x, y)| x - y)
                .collect();
            let in_lattice = membership.contains(&diff);
            if in_lattice != (j == k) {
                failures.push((j, k));
            }
        }
    }

    // advisory numeric check over the kernel representatives A^-1 k
    let kernel = kernel_representatives(&fb.a)?;
    let n = fb.n as f64;
    let mut numeric_max_error: f64 = 0.0;
    for j in 0..fb.n {
        for k in 0..fb.n {
            let mut re = 0.0;
            let mut im = 0.0;
            for zeta in &kernel {
                let mut phase = 0.0;
                for (i, z) in zeta.iter().enumerate() {
                    let diff = (&fb.gammas[k][i] - &fb.gammas[j][i])
                        .to_f64()
                        .unwrap_or(f64::NAN);
                    let zf = z.numer().to_f64().unwrap_or(f64::NAN)
                        / z.denom().to_f64().unwrap_or(f64::NAN);
                    phase += diff * zf;
                }
                let angle = 2.0 * std::f64::consts::PI * phase;
                re += angle.cos();
                im += angle.sin();
            }
            let expected = if j == k { 1.0 } else { 0.0 };
            let err = ((re / n - expected).powi(2) + (im / n).powi(2)).sqrt();
            numeric_max_error = numeric_max_error.max(err);
        }
    }

    Ok(OrthonormalReport { ok: failures.is_empty(), failures, numeric_max_error })
}

/// Reconstruction formula: sum_j m_j . <m_j, f>; equals f for an orthonormal
/// filter bank.
pub fn reconstruct(fb: &FilterBank, f: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    let mut acc = LaurentPolynomial::zero(f.dimension());
    for j in 0..fb.n {
        let mj = fb.filter(j);
        let coeff = inner(&fb.a, &mj, f)?;
        acc = acc.add(&module_action(&fb.a, &mj, &coeff)?)?;
    }
    Ok(acc)
}

/// The N x N matrix Omega(a) = (<m_j, a m_k>)_{j,k} of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMatrix {
    pub n: usize,
    entries: Vec<LaurentPolynomial>,
}

impl OmegaMatrix {
    pub fn entry(&self, j: usize, k: usize) -> &LaurentPolynomial {
        &self.entries[j * self.n + k]
    }

    pub fn mul(&self, other: &OmegaMatrix) -> Result<OmegaMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "Omega matrices of size {} and {}",
                self.n, other.n
            )));
        }
        let d = self.entries[0].dimension();
        let mut entries = Vec::with_capacity(self.n * self.n);
        for j in 0..self.n {
            for k in 0..self.n {
                let mut acc = LaurentPolynomial::zero(d);
                for l in 0..self.n {
                    acc = acc.add(&self.entry(j, l).mul(other.entry(l, k))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(OmegaMatrix { n: self.n, entries })
    }

    pub fn is_identity(&self) -> bool {
        let d = self.entries[0].dimension();
        let one = LaurentPolynomial::one(d);
        (0..self.n).all(|j| {
            (0..self.n).all(|k| {
                let e = self.entry(j, k);
                if j == k {
                    e == &one
                } else {
                    e.is_zero()
                }
            })
        })
    }
}

/// Omega(a) for the given filter bank: entry (j, k) is <m_j, a m_k> where the
/// left action of a is plain multiplication.
pub fn omega(fb: &FilterBank, a: &LaurentPolynomial) -> Result<OmegaMatrix> {
    let mut entries = Vec::with_capacity(fb.n * fb.n);
    for j in 0..fb.n {
        let mj = fb.filter(j);
        for k in 0..fb.n {
            let mk = fb.filter(k);
            entries.push(inner(&fb.a, &mj, &a.mul(&mk)?)?);
        }
    }
    Ok(OmegaMatrix { n: fb.n, entries })
}

/// The |det A| rational vectors A^-1 k, k over coset representatives of
/// Z^d / A Z^d; these exponents enumerate ker sigma_A.
pub fn kernel_representatives(a: &IntegerMatrix) -> Result<Vec<Vec<BigRational>>> {
    let det = a.determinant()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let a_inv = a.rational_inverse()?;
    let reps = coset_representatives(a)?;
    reps.iter()
        .map(|k| {
            let rat: Vec<BigRational> = k
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            a_inv.mul_vec(&rat)
        })
        .collect()
}
