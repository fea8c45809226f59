use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Exponent vector of a monomial with nonnegative exponents.
///
/// The derived `Ord` is the lexicographic term order with the first variable
/// largest: the first differing coordinate decides and the larger exponent
/// wins.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Appends `k` zero exponents.
    pub fn extend(&self, k: usize) -> Monomial {
        let mut e = self.0.clone();
        e.extend(std::iter::repeat_n(0, k));
        Monomial(e)
    }

    pub fn split_at(&self, at: usize) -> (Monomial, Monomial) {
        (Monomial(self.0[..at].to_vec()), Monomial(self.0[at..].to_vec()))
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut e = self.0.clone();
        e.extend_from_slice(&other.0);
        Monomial(e)
    }
}

/// Σ d_i·m_i.
pub fn weighted_degree(m: &[u32], weights: &[u64]) -> u64 {
    m.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum()
}

/// Lexicographic comparison with `U_1 > ⋯ > U_s`.
pub fn lex_compare(a: &[u32], b: &[u32]) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::Shape(format!(
            "exponent vectors of length {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.cmp(b))
}
