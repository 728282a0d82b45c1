//! Exact dilation certification and related utilities.
//!
//! A dilation matrix has every complex eigenvalue strictly outside the closed
//! unit disk. The decision is exact: roots of the characteristic polynomial p
//! all satisfy |lambda| > 1 iff the reversed polynomial q(x) = x^d p(1/x) has
//! all roots strictly inside the unit disk, which the Schur-Cohn recursion
//! decides over the integers. Floating point appears only in the advisory
//! eigenvalue cross-check and in `norm_decay`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{IntegerMatrix, RationalMatrix};

#[derive(Clone, Debug, Serialize)]
pub struct DilationCertificate {
    pub is_dilation: bool,
    #[serde(serialize_with = "crate::serde_util::bigint_as_string")]
    pub det: BigInt,
    /// Monic characteristic polynomial, constant coefficient first.
    #[serde(serialize_with = "crate::serde_util::bigints_as_strings")]
    pub charpoly: Vec<BigInt>,
    /// One line per Schur-Cohn step (or the reason the test short-circuited).
    pub evidence: Vec<String>,
    /// Approximate eigenvalue moduli, ascending. Advisory only.
    pub float_eigenvalue_crosscheck: Vec<f64>,
}

enum SchurOutcome {
    Inside,
    Outside { step: String },
    Boundary { step: String },
}

/// Schur-Cohn recursion: all roots of `f` (low coefficient first, nonzero
/// leading coefficient) strictly inside the unit disk?
///
/// Each step requires |f_0| < |f_n| strictly and replaces f by
/// (f_n * f - f_0 * f^rev) / x, which drops the degree by one. Equality
/// |f_0| = |f_n| is degenerate (a boundary condition) and is reported as such.
fn schur_cohn(mut f: Vec<BigInt>, evidence: &mut Vec<String>) -> SchurOutcome {
    loop {
        let n = f.len() - 1;
        if n == 0 {
            return SchurOutcome::Inside;
        }
        let a0 = f[0].abs();
        let an = f[n].abs();
        let step = format!("degree {}: |a0| = {} vs |an| = {}", n, a0, an);
        evidence.push(step.clone());
        if a0 == an {
            return SchurOutcome::Boundary { step };
        }
        if a0 > an {
            return SchurOutcome::Outside { step };
        }
        // g = (f_n * f - f_0 * rev(f)) / x
        let lead = f[n].clone();
        let tail = f[0].clone();
        let g: Vec<BigInt> = (1..=n)
            .map(|i| &lead * &f[i] - &tail * &f[n - i])
            .collect();
        debug_assert!(!g[n - 1].is_zero());
        f = g;
    }
}

/// Certify the strict-expansion property of an integer matrix.
pub fn certify_dilation(a: &IntegerMatrix) -> Result<DilationCertificate> {
    let d = a.require_square()?;
    if d == 0 {
        return Err(Error::InvalidInput("dilation test needs d >= 1".into()));
    }
    let charpoly = a.characteristic_polynomial()?;
    let det = a.determinant()?;
    let mut evidence = Vec::new();

    let float_eigs = {
        let mut moduli: Vec<f64> = a
            .to_f64()
            .complex_eigenvalues()
            .iter()
            .map(|z| z.norm())
            .collect();
        moduli.sort_by(|x, y| x.partial_cmp(y).unwrap());
        moduli
    };

    let is_dilation = if det.is_zero() {
        evidence.push("det = 0: zero eigenvalue has modulus 0 <= 1".into());
        false
    } else {
        // q(x) = x^d p(1/x): reversed coefficients, leading term p_0 != 0.
        let reversed: Vec<BigInt> = charpoly.iter().rev().cloned().collect();
        match schur_cohn(reversed, &mut evidence) {
            SchurOutcome::Inside => {
                evidence.push("all reciprocal roots strictly inside the unit disk".into());
                true
            }
            SchurOutcome::Outside { step } => {
                evidence.push(format!("some eigenvalue has modulus <= 1 ({step})"));
                false
            }
            SchurOutcome::Boundary { step } => {
                evidence.push(format!(
                    "degenerate recursion step, boundary condition |a0| = |an| ({step})"
                ));
                false
            }
        }
    };

    Ok(DilationCertificate {
        is_dilation,
        det,
        charpoly,
        evidence,
        float_eigenvalue_crosscheck: float_eigs,
    })
}

/// Result of the norm-decay search: smallest n with ||A^-n|| < epsilon.
#[derive(Clone, Debug, Serialize)]
pub enum NormDecay {
    Decayed { n: usize, norm: f64 },
    NotYetDecayed { n_max: usize, last_norm: f64 },
}

/// Search for the first n <= n_max with spectral norm ||A^-n|| < epsilon.
///
/// The power A^-n is formed exactly over the rationals and only converted to
/// floating point at evaluation time.
pub fn norm_decay(a: &IntegerMatrix, epsilon: f64, n_max: usize) -> Result<NormDecay> {
    let cert = certify_dilation(a)?;
    if !cert.is_dilation {
        return Err(Error::NotDilation(
            cert.evidence.last().cloned().unwrap_or_default(),
        ));
    }
    let inv = a.rational_inverse()?;
    let mut power = RationalMatrix::identity(a.rows());
    let mut last = f64::INFINITY;
    for n in 1..=n_max {
        power = power.mul(&inv)?;
        let norm = spectral_norm(&power);
        if norm < epsilon {
            return Ok(NormDecay::Decayed { n, norm });
        }
        last = norm;
    }
    Ok(NormDecay::NotYetDecayed { n_max, last_norm: last })
}

/// Largest singular value, in floating point.
pub fn spectral_norm(m: &RationalMatrix) -> f64 {
    m.to_f64().singular_values().max()
}

/// The 0/1 permutation that rewrites an r x r matrix of N x N blocks as an
/// N x N matrix of r x r blocks: entry (p, q) is 1 iff p = t*N + k and
/// q = k*r + t for some 0 <= k < N, 0 <= t < r.
pub fn block_transpose_permutation(r: usize, n_blocks: usize) -> Result<IntegerMatrix> {
    if r < 1 || n_blocks < 2 {
        return Err(Error::InvalidInput(format!(
            "block transpose needs r >= 1 and N >= 2, got r = {r}, N = {n_blocks}"
        )));
    }
    let size = r * n_blocks;
    let mut u = IntegerMatrix::zeros(size, size);
    for t in 0..r {
        for k in 0..n_blocks {
            u[(t * n_blocks + k, k * r + t)] = BigInt::from(1);
        }
    }
    Ok(u)
}
