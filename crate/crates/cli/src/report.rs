//! Report assembly and rendering. The JSON form has stable keys and is
//! byte-identical for identical inputs and seeds; timing is shown only in
//! the human rendering so it never perturbs the machine output.

use serde::Serialize;

use exelk::{
    AbelianGroup, DilationCertificate, FilterBank, IntegerMatrix, KTheoryResult, NormDecay,
    OrthonormalReport,
};

#[derive(Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct Report {
    pub d: usize,
    pub det: String,
    pub dilation: bool,
    pub charpoly: Vec<String>,
    pub k0: Option<AbelianGroup>,
    pub k1: Option<AbelianGroup>,
    pub summands: Vec<SummandEntry>,
    pub identity_class: Option<String>,
    pub filterbank: Option<Vec<Vec<String>>>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<SuiteResult>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub norm_decay: Option<NormDecayEntry>,
}

#[derive(Serialize)]
pub struct SummandEntry {
    pub n: usize,
    pub parity: String,
    pub cokernel: AbelianGroup,
    pub group_text: String,
}

#[derive(Serialize)]
pub struct NormDecayEntry {
    pub epsilon: f64,
    pub n_max: usize,
    pub decayed: bool,
    pub n: Option<usize>,
    pub norm: f64,
}

fn base_report(a: &IntegerMatrix, cert: &DilationCertificate) -> Report {
    Report {
        d: a.rows(),
        det: cert.det.to_string(),
        dilation: cert.is_dilation,
        charpoly: cert.charpoly.iter().map(|c| c.to_string()).collect(),
        k0: None,
        k1: None,
        summands: Vec::new(),
        identity_class: None,
        filterbank: None,
        notes: Vec::new(),
        verification: None,
        seed: None,
        norm_decay: None,
    }
}

pub fn check_report(a: &IntegerMatrix, cert: &DilationCertificate) -> Report {
    let mut rep = base_report(a, cert);
    rep.notes = cert.evidence.clone();
    rep
}

pub fn ktheory_report(
    a: &IntegerMatrix,
    cert: &DilationCertificate,
    result: &KTheoryResult,
    grades: Option<&[usize]>,
) -> Report {
    let mut rep = base_report(a, cert);
    rep.k0 = Some(result.k0.clone());
    rep.k1 = Some(result.k1.clone());
    rep.summands = result
        .summands
        .iter()
        .filter(|s| grades.map_or(true, |g| g.contains(&s.n)))
        .map(|s| SummandEntry {
            n: s.n,
            parity: format!("{:?}", s.parity).to_lowercase(),
            cokernel: s.cokernel.clone(),
            group_text: s.cokernel.to_string(),
        })
        .collect();
    rep.identity_class = Some(result.identity_class.to_string());
    rep.notes = result.notes.clone();
    rep
}

pub fn filterbank_report(
    a: &IntegerMatrix,
    cert: &DilationCertificate,
    fb: &FilterBank,
    ortho: &OrthonormalReport,
) -> Report {
    let mut rep = base_report(a, cert);
    rep.filterbank = Some(
        fb.gammas
            .iter()
            .map(|g| g.iter().map(|x| x.to_string()).collect())
            .collect(),
    );
    rep.notes.push(format!(
        "orthonormality: {} (numeric cross-check max error {:.2e})",
        if ortho.ok { "exact pass" } else { "FAILED" },
        ortho.numeric_max_error
    ));
    rep
}

pub fn normdecay_report(
    a: &IntegerMatrix,
    cert: &DilationCertificate,
    epsilon: f64,
    n_max: usize,
    decay: &NormDecay,
) -> Report {
    let mut rep = base_report(a, cert);
    rep.norm_decay = Some(match decay {
        NormDecay::Decayed { n, norm } => NormDecayEntry {
            epsilon,
            n_max,
            decayed: true,
            n: Some(*n),
            norm: *norm,
        },
        NormDecay::NotYetDecayed { n_max: nm, last_norm } => NormDecayEntry {
            epsilon,
            n_max: *nm,
            decayed: false,
            n: None,
            norm: *last_norm,
        },
    });
    rep
}

pub fn emit(rep: &Report, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(rep).expect("serializable report"));
        return;
    }
    println!("d = {}, det = {}, dilation = {}", rep.d, rep.det, rep.dilation);
    println!("charpoly (low to high): [{}]", rep.charpoly.join(", "));
    if let (Some(k0), Some(k1)) = (&rep.k0, &rep.k1) {
        println!("K_0 = {k0}");
        println!("K_1 = {k1}");
        println!("per-grade summands:");
        for s in &rep.summands {
            println!("  n = {} ({}): coker(1 - B_n) = {}", s.n, s.parity, s.group_text);
        }
        if let Some(ic) = &rep.identity_class {
            println!("class of the identity in K_0: {ic}");
        }
    }
    if let Some(fb) = &rep.filterbank {
        println!("filter bank exponents ({} cosets):", fb.len());
        for g in fb {
            println!("  ({})", g.join(", "));
        }
    }
    if let Some(suites) = &rep.verification {
        for s in suites {
            println!(
                "{} {}: {}",
                if s.pass { "PASS" } else { "FAIL" },
                s.suite,
                s.detail
            );
        }
    }
    if let Some(nd) = &rep.norm_decay {
        if nd.decayed {
            println!(
                "norm decay: n = {} with ||A^-n|| = {:.6e} < {}",
                nd.n.unwrap(),
                nd.norm,
                nd.epsilon
            );
        } else {
            println!(
                "norm decay: not yet decayed within n_max = {} (last norm {:.6e})",
                nd.n_max, nd.norm
            );
        }
    }
    for note in &rep.notes {
        println!("note: {note}");
    }
}
