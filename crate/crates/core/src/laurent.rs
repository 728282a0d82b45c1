//! Laurent polynomials in d variables with exact rational coefficients:
//! finitely supported maps from Z^d exponent vectors to rationals. These model
//! finite linear combinations of characters of the d-torus.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    d: usize,
    terms: BTreeMap<Vec<BigInt>, BigRational>,
}

impl LaurentPolynomial {
    pub fn zero(d: usize) -> Self {
        LaurentPolynomial { d, terms: BTreeMap::new() }
    }

    pub fn one(d: usize) -> Self {
        Self::monomial(vec![BigInt::zero(); d], BigRational::one())
    }

    pub fn monomial(exponent: Vec<BigInt>, coeff: BigRational) -> Self {
        let d = exponent.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        LaurentPolynomial { d, terms }
    }

    /// Monomial z^e with coefficient 1, from small integer exponents.
    pub fn character(exponent: &[i64]) -> Self {
        Self::monomial(
            exponent.iter().map(|&x| BigInt::from(x)).collect(),
            BigRational::one(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<BigInt>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &[BigInt]) -> BigRational {
        self.terms.get(exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&vec![BigInt::zero(); self.d])
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch(format!(
                "Laurent polynomials in {} and {} variables",
                self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Ok(LaurentPolynomial { d: self.d, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero(self.d);
        }
        LaurentPolynomial {
            d: self.d,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut terms: BTreeMap<Vec<BigInt>, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<BigInt> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(exp.clone()).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    terms.remove(&exp);
                }
            }
        }
        Ok(LaurentPolynomial { d: self.d, terms })
    }

    /// f* on characters: exponents negate; rational coefficients are their
    /// own conjugates.
    pub fn conjugate(&self) -> Self {
        LaurentPolynomial {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Remap every exponent vector through `f`, summing collisions.
    pub fn map_exponents<F>(&self, f: F) -> Self
    where
        F: Fn(&[BigInt]) -> Option<Vec<BigInt>>,
    {
        let mut terms: BTreeMap<Vec<BigInt>, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            if let Some(new_e) = f(e) {
                let entry = terms.entry(new_e.clone()).or_insert_with(BigRational::zero);
                *entry += c;
                if entry.is_zero() {
                    terms.remove(&new_e);
                }
            }
        }
        LaurentPolynomial { d: self.d, terms }
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let exp: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                format!("{}*z^({})", c, exp.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_zero_coefficients_stored() {
        let f = LaurentPolynomial::character(&[1, 0]);
        let g = f.scale(&-BigRational::one());
        let sum = f.add(&g).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
    }

    #[test]
    fn multiplication_adds_exponents() {
        let f = LaurentPolynomial::character(&[1, -2]);
        let g = LaurentPolynomial::character(&[3, 5]);
        let p = f.mul(&g).unwrap();
        assert_eq!(p, LaurentPolynomial::character(&[4, 3]));
    }

    #[test]
    fn conjugate_negates_exponents() {
        let f = LaurentPolynomial::character(&[2, -1]);
        assert_eq!(f.conjugate(), LaurentPolynomial::character(&[-2, 1]));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let f = LaurentPolynomial::character(&[1]);
        let g = LaurentPolynomial::character(&[1, 2]);
        assert!(f.mul(&g).is_err());
    }
}
