//! Exact verification suites: graded inverse identity, Laplace expansions,
//! closed-form edge grades, injectivity diagnostics, and the bimodule
//! orthonormality/reconstruction checks on small determinants.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use exelk::{
    adjugate_compound_b, b1_closed_form, bd1_closed_form, build_filterbank, certify_dilation,
    check_orthonormal, enumerate_subsets, injectivity_report, laplace_identity_diag,
    laplace_identity_offdiag, omega, reconstruct, GradedFamily, IntegerMatrix, LaurentPolynomial,
};

use crate::report::{Report, SuiteResult};

/// Rejection-sample `count` dilation matrices of size d x d with entries in
/// [-9, 9], certified exactly.
pub fn random_dilations(d: usize, count: usize, seed: u64) -> Result<Vec<IntegerMatrix>, String> {
    if d == 0 || d > 8 {
        return Err("--random dimension must be in 1..=8".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > 200_000 {
            return Err("random dilation sampling did not converge".into());
        }
        let entries: Vec<BigInt> = (0..d * d)
            .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
            .collect();
        let a = IntegerMatrix::new(d, d, entries).map_err(|e| e.to_string())?;
        let cert = certify_dilation(&a).map_err(|e| e.to_string())?;
        if cert.is_dilation {
            out.push(a);
        }
    }
    Ok(out)
}

fn suite<F>(name: &str, results: &mut Vec<SuiteResult>, body: F)
where
    F: FnOnce() -> Result<String, String>,
{
    let (pass, detail) = match body() {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    results.push(SuiteResult {
        suite: name.to_string(),
        pass,
        detail,
    });
}

fn helper2_suite(matrices: &[IntegerMatrix]) -> Result<String, String> {
    for a in matrices {
        let family = GradedFamily::new(a).map_err(|e| e.to_string())?;
        family
            .verify_inverse_identity()
            .map_err(|e| format!("B_n C_n = C_n B_n = |det| I failed on [{a}]: {e}"))?;
    }
    Ok(format!(
        "B_n C_n = C_n B_n = |det| I holds at every grade for {} matrices",
        matrices.len()
    ))
}

fn laplace_suite(matrices: &[IntegerMatrix]) -> Result<String, String> {
    let mut checks = 0usize;
    for a in matrices {
        let d = a.rows();
        let det = a.determinant().map_err(|e| e.to_string())?;
        for n in 1..d {
            let subsets = enumerate_subsets(d, n).map_err(|e| e.to_string())?;
            for j in &subsets {
                let diag = laplace_identity_diag(a, n, j).map_err(|e| e.to_string())?;
                if diag != det {
                    return Err(format!(
                        "diagonal Laplace sum {diag} != det {det} on [{a}], J = {j:?}"
                    ));
                }
                checks += 1;
            }
            for j in &subsets {
                for l in &subsets {
                    if j == l {
                        continue;
                    }
                    let off =
                        laplace_identity_offdiag(a, n, j, l).map_err(|e| e.to_string())?;
                    if off != BigInt::from(0) {
                        return Err(format!(
                            "off-diagonal Laplace sum {off} != 0 on [{a}], J = {j:?}, L = {l:?}"
                        ));
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} Laplace expansion identities hold exactly"))
}

fn closed_form_suite(matrices: &[IntegerMatrix]) -> Result<String, String> {
    for a in matrices {
        let d = a.rows();
        if d >= 1 {
            let direct = adjugate_compound_b(a, 1).map_err(|e| e.to_string())?;
            let closed = b1_closed_form(a).map_err(|e| e.to_string())?;
            if direct != closed {
                return Err(format!("B_1 closed form mismatch on [{a}]"));
            }
        }
        if d >= 1 {
            let direct = adjugate_compound_b(a, d - 1).map_err(|e| e.to_string())?;
            let closed = bd1_closed_form(a).map_err(|e| e.to_string())?;
            if direct != closed {
                return Err(format!("B_(d-1) closed form mismatch on [{a}]"));
            }
        }
    }
    Ok(format!(
        "B_1 and B_(d-1) closed forms match the minor construction for {} matrices",
        matrices.len()
    ))
}

fn injectivity_suite(matrices: &[IntegerMatrix]) -> Result<String, String> {
    for a in matrices {
        injectivity_report(a)
            .map_err(|e| format!("injectivity diagnostics failed on [{a}]: {e}"))?;
    }
    Ok(format!(
        "det(1 - B_n) pattern (nonzero below grade d, forced value at grade d) holds for {} matrices",
        matrices.len()
    ))
}

/// Bimodule checks are O(|det|^2) inner products, so they run only on
/// matrices with small determinant.
fn bimodule_suite(matrices: &[IntegerMatrix]) -> Result<String, String> {
    let cap = BigInt::from(16);
    let mut ran = 0usize;
    for a in matrices {
        let det = a.determinant().map_err(|e| e.to_string())?;
        if det.magnitude() > cap.magnitude() || a.rows() > 4 {
            continue;
        }
        let fb = build_filterbank(a).map_err(|e| e.to_string())?;
        let ortho = check_orthonormal(&fb).map_err(|e| e.to_string())?;
        if !ortho.ok {
            return Err(format!(
                "filter bank orthonormality failed on [{a}]: {:?}",
                ortho.failures
            ));
        }
        let f = LaurentPolynomial::character(&vec![1i64; a.rows()])
            .add(&LaurentPolynomial::one(a.rows()).scale(&BigRational::from_integer(
                BigInt::from(3),
            )))
            .map_err(|e| e.to_string())?;
        let back = reconstruct(&fb, &f).map_err(|e| e.to_string())?;
        if back != f {
            return Err(format!("reconstruction formula failed on [{a}]"));
        }
        let om = omega(&fb, &LaurentPolynomial::one(a.rows())).map_err(|e| e.to_string())?;
        if !om.is_identity() {
            return Err(format!("Omega(1) != identity on [{a}]"));
        }
        ran += 1;
    }
    Ok(format!(
        "orthonormality, reconstruction, and Omega(1) = I hold on {ran} small-determinant matrices"
    ))
}

pub fn run_suites(matrices: &[IntegerMatrix], seed: u64) -> (Report, bool) {
    let mut results = Vec::new();
    suite("helper2-identity", &mut results, || helper2_suite(matrices));
    suite("laplace-expansion", &mut results, || laplace_suite(matrices));
    suite("edge-closed-forms", &mut results, || {
        closed_form_suite(matrices)
    });
    suite("injectivity-pattern", &mut results, || {
        injectivity_suite(matrices)
    });
    suite("bimodule", &mut results, || bimodule_suite(matrices));
    let all_pass = results.iter().all(|r| r.pass);

    let first = &matrices[0];
    let cert = certify_dilation(first).expect("matrices were certified on entry");
    let mut rep = crate::report::check_report(first, &cert);
    rep.notes = vec![format!("suites ran on {} matrices", matrices.len())];
    rep.verification = Some(results);
    rep.seed = Some(seed);
    (rep, all_pass)
}
