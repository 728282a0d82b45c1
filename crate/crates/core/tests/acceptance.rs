//! Acceptance suite: ten criteria, one pass/fail line each (run with
//! `cargo test --test acceptance -- --nocapture` to see the lines on
//! success). Random inputs use fixed seeds so every run is identical.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use exelk::{
    adjugate_compound_b, alpha, b1_closed_form, bd1_closed_form, build_filterbank,
    certify_dilation, check_orthonormal, cokernel, compound_c, enumerate_subsets, kgroups,
    laplace_identity_diag, laplace_identity_offdiag, norm_decay, omega, one_minus_b, reconstruct,
    smith_normal_form, spectral_norm, tau_sign, transfer, AbelianGroup, FilterBank, GradedFamily,
    IntegerMatrix, LaurentPolynomial, NormDecay,
};

fn m(rows: &[Vec<i64>]) -> IntegerMatrix {
    IntegerMatrix::from_rows(rows).unwrap()
}

fn report(criterion: u32, name: &str, ok: bool, detail: &str) {
    println!(
        "ACCEPTANCE {criterion} {}: {name} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} ({name}) failed: {detail}");
}

fn random_matrix(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> IntegerMatrix {
    let entries: Vec<BigInt> = (0..d * d)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntegerMatrix::new(d, d, entries).unwrap()
}

fn random_dilation(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> IntegerMatrix {
    loop {
        let a = random_matrix(rng, d, bound);
        if certify_dilation(&a).unwrap().is_dilation {
            return a;
        }
    }
}

/// The 200 certified dilation matrices shared by criteria 3 and 6.
fn dilation_pool() -> &'static Vec<IntegerMatrix> {
    static POOL: OnceLock<Vec<IntegerMatrix>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        let mut pool = Vec::with_capacity(200);
        for d in 2..=5 {
            for _ in 0..50 {
                pool.push(random_dilation(&mut rng, d, 9));
            }
        }
        pool
    })
}

fn group(free: usize, torsion: &[i64]) -> AbelianGroup {
    AbelianGroup::from_parts(free, torsion.iter().map(|&t| BigInt::from(t)).collect())
}

#[test]
fn criterion_01_known_examples() {
    let cases: Vec<(IntegerMatrix, AbelianGroup, AbelianGroup)> = vec![
        (m(&[vec![0, 1], vec![2, 0]]), group(0, &[2]), group(0, &[])),
        (m(&[vec![1, 1], vec![-1, 1]]), group(1, &[]), group(1, &[])),
        (
            m(&[vec![2, 1], vec![-1, 2]]),
            group(1, &[4]),
            group(1, &[2]),
        ),
        (
            m(&[vec![2, -1], vec![1, -3]]),
            group(0, &[2, 4]),
            group(0, &[5]),
        ),
    ];
    for (a, k0, k1) in &cases {
        let r = kgroups(a).unwrap();
        if &r.k0 != k0 || &r.k1 != k1 {
            report(
                1,
                "known 2x2 examples",
                false,
                &format!("[{a}] gave K_0 = {}, K_1 = {}", r.k0, r.k1),
            );
            return;
        }
    }
    report(1, "known 2x2 examples", true, "all four matrices match exactly");
}

#[test]
fn criterion_02_d1_family() {
    for n in [2i64, 3, 5, 10] {
        let r = kgroups(&m(&[vec![n]])).unwrap();
        let ok = r.k0 == group(1, &[n - 1]) && r.k1 == group(1, &[]);
        if !ok {
            report(2, "d=1 family", false, &format!("N = {n}: K_0 = {}, K_1 = {}", r.k0, r.k1));
            return;
        }
    }
    for n in [-2i64, -3] {
        let r = kgroups(&m(&[vec![n]])).unwrap();
        let ok = r.k0 == group(0, &[n.abs() - 1])
            && r.k1 == group(0, &[2])
            && r.notes.iter().any(|s| s.contains("corollary-discrepancy"));
        if !ok {
            report(
                2,
                "d=1 family",
                false,
                &format!("N = {n}: K_0 = {}, K_1 = {}, notes {:?}", r.k0, r.k1, r.notes),
            );
            return;
        }
    }
    report(
        2,
        "d=1 family",
        true,
        "N in {2,3,5,10} give Z + Z/(N-1) and Z; N in {-2,-3} give Z/(|N|-1) and Z/2 with the discrepancy note",
    );
}

#[test]
fn criterion_03_inverse_identity_suite() {
    for a in dilation_pool() {
        let fam = GradedFamily::new(a).unwrap();
        if fam.verify_inverse_identity().is_err() {
            report(3, "B_n C_n = |det| identity", false, &format!("failed on [{a}]"));
            return;
        }
    }
    report(
        3,
        "B_n C_n = |det| identity",
        true,
        "exact at every grade on 200 random dilation matrices, d in 2..=5",
    );
}

#[test]
fn criterion_04_laplace_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut checks = 0usize;
    for i in 0..100 {
        let d = 2 + (i % 3); // 2, 3, 4
        let a = random_matrix(&mut rng, d, 9);
        let det = a.determinant().unwrap();
        for n in 1..d {
            let subsets = enumerate_subsets(d, n).unwrap();
            for j in &subsets {
                if laplace_identity_diag(&a, n, j).unwrap() != det {
                    report(4, "Laplace expansions", false, &format!("diagonal failed on [{a}]"));
                    return;
                }
                checks += 1;
                for l in &subsets {
                    if j == l {
                        continue;
                    }
                    if !laplace_identity_offdiag(&a, n, j, l).unwrap().is_zero() {
                        report(
                            4,
                            "Laplace expansions",
                            false,
                            &format!("off-diagonal failed on [{a}]"),
                        );
                        return;
                    }
                    checks += 1;
                }
            }
        }
    }
    report(
        4,
        "Laplace expansions",
        true,
        &format!("{checks} identities exact on 100 random integer matrices, d <= 4"),
    );
}

#[test]
fn criterion_05_sign_formula() {
    let mut checks = 0usize;
    for d in 1..=8 {
        for n in 0..=d {
            let subsets = enumerate_subsets(d, n).unwrap();
            for k in &subsets {
                for j in &subsets {
                    let lhs = tau_sign(k) * tau_sign(j);
                    let exp: usize = k
                        .elements()
                        .iter()
                        .zip(j.elements())
                        .map(|(ki, ji)| ki + ji)
                        .sum();
                    let rhs = if exp % 2 == 0 { 1 } else { -1 };
                    if lhs != rhs {
                        report(
                            5,
                            "permutation sign formula",
                            false,
                            &format!("d = {d}, K = {:?}, J = {:?}", k.elements(), j.elements()),
                        );
                        return;
                    }
                    checks += 1;
                }
            }
        }
    }
    report(
        5,
        "permutation sign formula",
        true,
        &format!("sign(tau_K tau_J) = prod (-1)^(k_i + j_i) on all {checks} pairs, d <= 8"),
    );
}

#[test]
fn criterion_06_injectivity_suite() {
    let two = BigInt::from(2);
    for a in dilation_pool() {
        let d = a.rows();
        let det = a.determinant().unwrap();
        for n in 1..d {
            let dn = one_minus_b(a, n).unwrap().determinant().unwrap();
            if dn.is_zero() {
                report(6, "injectivity pattern", false, &format!("det(1 - B_{n}) = 0 on [{a}]"));
                return;
            }
        }
        let top = one_minus_b(a, d).unwrap();
        let expected = if det.is_positive() { BigInt::zero() } else { two.clone() };
        if top[(0, 0)] != expected {
            report(6, "injectivity pattern", false, &format!("1 - B_{d} wrong on [{a}]"));
            return;
        }
    }
    report(
        6,
        "injectivity pattern",
        true,
        "det(1 - B_n) nonzero below grade d, and 1 - B_d is 0 (det > 1) or 2 (det < -1), on the shared 200 matrices",
    );
}

#[test]
fn criterion_07_closed_form_2x2() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let one = BigInt::one();
    for _ in 0..500 {
        let a = random_dilation(&mut rng, 2, 9);
        let det = a.determinant().unwrap();
        let r = kgroups(&a).unwrap();
        let (k0, k1) = if det.is_positive() {
            let k1m = IntegerMatrix::new(
                2,
                2,
                vec![
                    &one - &a[(0, 0)],
                    a[(0, 1)].clone(),
                    a[(1, 0)].clone(),
                    &one - &a[(1, 1)],
                ],
            )
            .unwrap();
            (
                AbelianGroup::from_parts(1, vec![det.abs() - &one]),
                AbelianGroup::free(1).direct_sum(&cokernel(&k1m).unwrap()),
            )
        } else {
            let k1m = IntegerMatrix::new(
                2,
                2,
                vec![
                    &one + &a[(0, 0)],
                    -&a[(0, 1)],
                    -&a[(1, 0)],
                    &one + &a[(1, 1)],
                ],
            )
            .unwrap();
            (
                AbelianGroup::from_parts(0, vec![det.abs() - &one, BigInt::from(2)]),
                cokernel(&k1m).unwrap(),
            )
        };
        if r.k0 != k0 || r.k1 != k1 {
            report(
                7,
                "2x2 closed forms",
                false,
                &format!("[{a}]: engine ({}, {}) vs closed form ({k0}, {k1})", r.k0, r.k1),
            );
            return;
        }
    }
    report(
        7,
        "2x2 closed forms",
        true,
        "engine K-groups match the d = 2 corollary closed forms on 500 random dilation matrices",
    );
}

fn random_monomial(rng: &mut ChaCha8Rng, d: usize) -> LaurentPolynomial {
    let exponent: Vec<BigInt> = (0..d).map(|_| BigInt::from(rng.gen_range(-4i64..=4))).collect();
    let num = loop {
        let n = rng.gen_range(-5i64..=5);
        if n != 0 {
            break n;
        }
    };
    let den = rng.gen_range(1i64..=4);
    LaurentPolynomial::monomial(
        exponent,
        BigRational::new(BigInt::from(num), BigInt::from(den)),
    )
}

fn omega_equal(x: &exelk::OmegaMatrix, y: &exelk::OmegaMatrix) -> bool {
    x.n == y.n && (0..x.n).all(|j| (0..x.n).all(|k| x.entry(j, k) == y.entry(j, k)))
}

#[test]
fn criterion_08_bimodule_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    // Pool of small-determinant dilations with precomputed filter banks, so
    // the 1000 instances exercise Omega without rebuilding cosets each time.
    let mut pool: Vec<(IntegerMatrix, FilterBank)> = Vec::new();
    for d in 1..=3 {
        while pool.iter().filter(|(a, _)| a.rows() == d).count() < 4 {
            let a = random_dilation(&mut rng, d, 2);
            if a.determinant().unwrap().abs() > BigInt::from(8) {
                continue;
            }
            let fb = build_filterbank(&a).unwrap();
            pool.push((a, fb));
        }
    }
    for i in 0..1000 {
        let (a_mat, fb) = &pool[i % pool.len()];
        let d = a_mat.rows();
        let a = random_monomial(&mut rng, d);
        let b = random_monomial(&mut rng, d);
        let ab = a.mul(&b).unwrap();

        let lhs = transfer(a_mat, &alpha(a_mat, &a).unwrap().mul(&b).unwrap()).unwrap();
        let rhs = a.mul(&transfer(a_mat, &b).unwrap()).unwrap();
        if lhs != rhs {
            report(8, "bimodule identities", false, &format!("transfer axiom failed on [{a_mat}]"));
            return;
        }

        let alpha_ab = alpha(a_mat, &ab).unwrap();
        if alpha_ab != alpha(a_mat, &a).unwrap().mul(&alpha(a_mat, &b).unwrap()).unwrap() {
            report(8, "bimodule identities", false, &format!("alpha multiplicativity failed on [{a_mat}]"));
            return;
        }

        let om_ab = omega(fb, &ab).unwrap();
        let om_prod = omega(fb, &a).unwrap().mul(&omega(fb, &b).unwrap()).unwrap();
        if !omega_equal(&om_ab, &om_prod) {
            report(8, "bimodule identities", false, &format!("Omega multiplicativity failed on [{a_mat}]"));
            return;
        }

        let om_alpha = omega(fb, &alpha(a_mat, &a).unwrap()).unwrap();
        let diagonal_ok = (0..om_alpha.n).all(|j| {
            (0..om_alpha.n).all(|k| {
                if j == k {
                    om_alpha.entry(j, k) == &a
                } else {
                    om_alpha.entry(j, k).is_zero()
                }
            })
        });
        if !diagonal_ok {
            report(8, "bimodule identities", false, &format!("Omega(alpha(a)) not diagonal on [{a_mat}]"));
            return;
        }

        let f = a.add(&b).unwrap();
        if reconstruct(fb, &f).unwrap() != f {
            report(8, "bimodule identities", false, &format!("reconstruction failed on [{a_mat}]"));
            return;
        }
    }

    let mut banks = 0usize;
    while banks < 100 {
        let d = 2 + banks % 3; // 2, 3, 4
        let a = random_dilation(&mut rng, d, 2);
        if a.determinant().unwrap().abs() > BigInt::from(40) {
            continue;
        }
        let fb = build_filterbank(&a).unwrap();
        let ortho = check_orthonormal(&fb).unwrap();
        if !ortho.ok {
            report(8, "bimodule identities", false, &format!("orthonormality failed on [{a}]"));
            return;
        }
        banks += 1;
    }
    report(
        8,
        "bimodule identities",
        true,
        "transfer axiom, alpha/Omega multiplicativity, Omega-alpha diagonality, reconstruction on 1000 monomial instances; 100 filter banks orthonormal",
    );
}

/// Sum over all permutations via Heap's algorithm, tracking parity by swaps.
fn permutation_determinant(a: &IntegerMatrix) -> BigInt {
    let d = a.rows();
    let mut total = BigInt::zero();
    let mut perm: Vec<usize> = (0..d).collect();
    // iterate permutations via Heap's algorithm, tracking parity by swap count
    let mut c = vec![0usize; d];
    let mut sign = 1i64;
    let term = |p: &[usize], s: i64| -> BigInt {
        let mut prod = BigInt::from(s);
        for (i, &pi) in p.iter().enumerate() {
            prod *= &a[(i, pi)];
        }
        prod
    };
    total += term(&perm, sign);
    let mut i = 0;
    while i < d {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            total += term(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    total
}

#[test]
fn criterion_09_oracle_equivalences() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let one = BigInt::one();

    // Bareiss vs permutation expansion, and SNF reconstruction.
    for i in 0..60 {
        let d = 1 + (i % 4);
        let a = random_matrix(&mut rng, d, 9);
        if a.determinant().unwrap() != permutation_determinant(&a) {
            report(9, "oracle equivalences", false, &format!("determinant mismatch on [{a}]"));
            return;
        }
        let snf = smith_normal_form(&a).unwrap();
        let recon = snf.u.mul(&a).unwrap().mul(&snf.v).unwrap();
        let unimodular = snf.u.determinant().unwrap().abs() == one
            && snf.v.determinant().unwrap().abs() == one;
        if recon != snf.s || !unimodular {
            report(9, "oracle equivalences", false, &format!("SNF reconstruction failed on [{a}]"));
            return;
        }
    }

    // Compound functoriality and Sylvester-Franke.
    for i in 0..40 {
        let d = 2 + (i % 3);
        let a = random_matrix(&mut rng, d, 4);
        let b = random_matrix(&mut rng, d, 4);
        let det_a = a.determinant().unwrap();
        for n in 0..=d {
            let c_ab = compound_c(&a.mul(&b).unwrap(), n).unwrap();
            let c_split = compound_c(&b, n).unwrap().mul(&compound_c(&a, n).unwrap()).unwrap();
            if c_ab != c_split {
                report(9, "oracle equivalences", false, &format!("functoriality failed on [{a}], [{b}], n = {n}"));
                return;
            }
            if n >= 1 {
                let sf = num_traits::pow::pow(
                    det_a.clone(),
                    exelk::binomial(d - 1, n - 1),
                );
                if compound_c(&a, n).unwrap().determinant().unwrap() != sf {
                    report(9, "oracle equivalences", false, &format!("Sylvester-Franke failed on [{a}], n = {n}"));
                    return;
                }
            }
        }
    }

    // Closed forms vs the minor construction on certified dilations.
    for i in 0..40 {
        let d = 1 + (i % 4);
        let a = random_dilation(&mut rng, d, 9);
        if adjugate_compound_b(&a, 1).unwrap() != b1_closed_form(&a).unwrap()
            || adjugate_compound_b(&a, d - 1).unwrap() != bd1_closed_form(&a).unwrap()
        {
            report(9, "oracle equivalences", false, &format!("closed-form mismatch on [{a}]"));
            return;
        }
    }

    report(
        9,
        "oracle equivalences",
        true,
        "Bareiss = permutation expansion; u m v = s with unimodular u, v; C_n(AB) = C_n(B) C_n(A); det C_n = (det A)^C(d-1, n-1); closed forms match",
    );
}

#[test]
fn criterion_10_norm_decay() {
    let examples = [
        m(&[vec![0, 1], vec![2, 0]]),
        m(&[vec![1, 1], vec![-1, 1]]),
        m(&[vec![2, 1], vec![-1, 2]]),
        m(&[vec![2, -1], vec![1, -3]]),
    ];
    for a in &examples {
        match norm_decay(a, 1e-3, 64).unwrap() {
            NormDecay::Decayed { n, norm } if n <= 64 && norm < 1e-3 => {}
            other => {
                report(10, "norm decay", false, &format!("[{a}] gave {other:?}"));
                return;
            }
        }
    }
    let a = m(&[vec![0, 1], vec![2, 0]]);
    let inv = a.rational_inverse().unwrap();
    let inv2 = inv.mul(&inv).unwrap();
    let norm2 = spectral_norm(&inv2);
    report(
        10,
        "norm decay",
        (norm2 - 0.5).abs() < 1e-12,
        &format!("all four reference matrices decay below 1e-3 within n <= 64; ||A^-2|| = {norm2} for the det = -2 example"),
    );
}
