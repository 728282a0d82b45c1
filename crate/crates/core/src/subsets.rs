//! Combinatorics of n-element subsets of {1, ..., d}: lexicographic
//! enumeration, ranks, complements and permutation signs.

use crate::error::{Error, Result};

/// An n-subset of {1, ..., d}, stored ascending, together with its rank in
/// the lexicographic enumeration of all n-subsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetIndex {
    d: usize,
    elements: Vec<usize>,
    rank: usize,
}

pub fn binomial(d: usize, n: usize) -> usize {
    if n > d {
        return 0;
    }
    let n = n.min(d - n);
    let mut acc: u128 = 1;
    for i in 0..n {
        acc = acc * (d - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

impl SubsetIndex {
    /// Build from 1-based ascending elements; the rank is computed.
    pub fn new(d: usize, elements: Vec<usize>) -> Result<Self> {
        for w in elements.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(format!(
                    "subset elements must be strictly increasing: {:?}",
                    elements
                )));
            }
        }
        if elements.iter().any(|&e| e < 1 || e > d) {
            return Err(Error::InvalidInput(format!(
                "subset elements out of [1..{}]: {:?}",
                d, elements
            )));
        }
        let rank = lex_rank(d, &elements);
        Ok(SubsetIndex { d, elements, rank })
    }

    pub fn ambient(&self) -> usize {
        self.d
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Complement {1..d} \ K, ascending.
    pub fn complement(&self) -> SubsetIndex {
        let elements: Vec<usize> =
            (1..=self.d).filter(|e| !self.elements.contains(e)).collect();
        let rank = lex_rank(self.d, &elements);
        SubsetIndex { d: self.d, elements, rank }
    }

    /// 0-based row/column indices for submatrix extraction.
    pub fn zero_based(&self) -> Vec<usize> {
        self.elements.iter().map(|&e| e - 1).collect()
    }
}

/// Rank of an ascending subset in lexicographic order.
fn lex_rank(d: usize, elements: &[usize]) -> usize {
    let n = elements.len();
    let mut rank = 0;
    let mut prev = 0;
    for (i, &e) in elements.iter().enumerate() {
        for c in prev + 1..e {
            rank += binomial(d - c, n - i - 1);
        }
        prev = e;
    }
    rank
}

/// All n-subsets of {1..d} in lexicographic order.
pub fn enumerate_subsets(d: usize, n: usize) -> Result<Vec<SubsetIndex>> {
    if n > d {
        return Err(Error::GradeOutOfRange { n, d });
    }
    let mut out = Vec::with_capacity(binomial(d, n));
    let mut current: Vec<usize> = (1..=n).collect();
    loop {
        out.push(SubsetIndex { d, elements: current.clone(), rank: out.len() });
        // next subset in lex order
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if current[i] < d - (n - 1 - i) {
                current[i] += 1;
                for j in i + 1..n {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Sign of the permutation (k_1 .. k_n, k_{n+1} .. k_d) that lists K then its
/// complement, both ascending; computed by inversion count.
pub fn tau_sign(k: &SubsetIndex) -> i32 {
    let mut perm: Vec<usize> = k.elements().to_vec();
    perm.extend(k.complement().elements());
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
