//! Polynomials in the graded variables U_1..U_s with coefficients in R_0.

use std::collections::BTreeMap;

use super::monomial::{weighted_degree, Monomial};
use super::poly::R0Element;
use super::scalar::ScalarRing;
use crate::error::{Error, Result};

/// An element of S = R_0[U_1, ..., U_s].
///
/// Terms are keyed by the U-exponent vector, stored strictly descending in
/// the lex order with `U_1 > ⋯ > U_s`, and never carry a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SPolynomial {
    base: ScalarRing,
    coeff_vars: usize,
    nvars: usize,
    terms: Vec<(Monomial, R0Element)>,
}

impl SPolynomial {
    pub fn zero(base: ScalarRing, coeff_vars: usize, nvars: usize) -> Self {
        SPolynomial {
            base,
            coeff_vars,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn from_terms(
        base: ScalarRing,
        coeff_vars: usize,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, R0Element)>,
    ) -> Self {
        let mut acc: BTreeMap<Monomial, R0Element> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "U-exponent vector has wrong length");
            assert!(
                c.base() == base && c.nvars() == coeff_vars,
                "coefficient from the wrong ring"
            );
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        SPolynomial {
            base,
            coeff_vars,
            nvars,
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Splits a polynomial over `coeff_vars + nvars` ground-ring variables,
    /// the first `coeff_vars` of which belong to R_0.
    pub fn from_flat(flat: &R0Element, coeff_vars: usize) -> Self {
        assert!(flat.nvars() >= coeff_vars);
        let nvars = flat.nvars() - coeff_vars;
        let base = flat.base();
        let mut acc: BTreeMap<Monomial, Vec<(Monomial, _)>> = BTreeMap::new();
        for (m, c) in flat.terms() {
            let (cm, um) = m.split_at(coeff_vars);
            acc.entry(um).or_default().push((cm, c.clone()));
        }
        Self::from_terms(
            base,
            coeff_vars,
            nvars,
            acc.into_iter()
                .map(|(um, ts)| (um, R0Element::from_terms(base, coeff_vars, ts))),
        )
    }

    pub fn to_flat(&self) -> R0Element {
        R0Element::from_terms(
            self.base,
            self.coeff_vars + self.nvars,
            self.terms
                .iter()
                .flat_map(|(um, c)| c.terms().iter().map(move |(cm, a)| (cm.concat(um), a.clone()))),
        )
    }

    pub fn base(&self) -> ScalarRing {
        self.base
    }

    pub fn coeff_vars(&self) -> usize {
        self.coeff_vars
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, R0Element)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &R0Element> {
        self.terms.iter().map(|(_, c)| c)
    }

    fn same_ring(&self, other: &SPolynomial) -> bool {
        self.base == other.base && self.coeff_vars == other.coeff_vars && self.nvars == other.nvars
    }

    pub fn add(&self, other: &SPolynomial) -> SPolynomial {
        assert!(self.same_ring(other), "S-polynomials from different rings");
        Self::from_terms(
            self.base,
            self.coeff_vars,
            self.nvars,
            self.terms.iter().chain(&other.terms).cloned(),
        )
    }

    pub fn neg(&self) -> SPolynomial {
        SPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &SPolynomial) -> SPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SPolynomial) -> SPolynomial {
        assert!(self.same_ring(other), "S-polynomials from different rings");
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prods.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Self::from_terms(self.base, self.coeff_vars, self.nvars, prods)
    }

    pub fn scale(&self, c: &R0Element) -> SPolynomial {
        Self::from_terms(
            self.base,
            self.coeff_vars,
            self.nvars,
            self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))),
        )
    }

    pub fn pow(&self, e: u32) -> SPolynomial {
        let one = R0Element::one(self.base, self.coeff_vars);
        let mut acc = Self::from_terms(
            self.base,
            self.coeff_vars,
            self.nvars,
            [(Monomial::one(self.nvars), one)],
        );
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Weighted degree of a homogeneous polynomial: `Some(δ)` when every
    /// term has weighted degree δ, `None` otherwise.
    pub fn homogeneous_degree(&self, weights: &[u64]) -> Result<Option<u64>> {
        if weights.len() != self.nvars {
            return Err(Error::Shape(format!(
                "{} weights for {} variables",
                weights.len(),
                self.nvars
            )));
        }
        let mut degrees = self.terms.iter().map(|(m, _)| weighted_degree(m.exponents(), weights));
        let Some(first) = degrees.next() else {
            return Err(Error::ZeroPolynomial);
        };
        Ok(degrees.all(|d| d == first).then_some(first))
    }

    /// Applies `f` to every coefficient, landing in a possibly different
    /// coefficient ring.
    pub fn map_coefficients(
        &self,
        base: ScalarRing,
        coeff_vars: usize,
        mut f: impl FnMut(&R0Element) -> Result<R0Element>,
    ) -> Result<SPolynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), f(c)?));
        }
        Ok(Self::from_terms(base, coeff_vars, self.nvars, terms))
    }

    /// Renders as a polynomial in the U-variables over R_0, e.g.
    /// `x*U1 + (y + 1)*U2`.
    pub fn display_with(&self, coeff_names: &[String], u_names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono = u_monomial(m, u_names);
            let (negative, body) = if c.is_monomial_like() {
                let (_, a) = &c.terms()[0];
                let negative = a.is_negative();
                let shown = if negative { c.neg() } else { c.clone() };
                let coeff = shown.display_with(coeff_names);
                let body = match (mono.is_empty(), coeff.as_str()) {
                    (true, _) => coeff,
                    (false, "1") => mono,
                    (false, _) => format!("{coeff}*{mono}"),
                };
                (negative, body)
            } else {
                let coeff = format!("({})", c.display_with(coeff_names));
                let body = if mono.is_empty() {
                    coeff
                } else {
                    format!("{coeff}*{mono}")
                };
                (false, body)
            };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

fn u_monomial(m: &Monomial, names: &[String]) -> String {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let name = names.get(i).cloned().unwrap_or_else(|| format!("U{}", i + 1));
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> R0Element {
        R0Element::from_i64(ScalarRing::Integers, 0, v)
    }

    fn linear(a: i64, b: i64) -> SPolynomial {
        SPolynomial::from_terms(
            ScalarRing::Integers,
            0,
            2,
            [
                (Monomial::from_exponents(vec![1, 0]), int(a)),
                (Monomial::from_exponents(vec![0, 1]), int(b)),
            ],
        )
    }

    #[test]
    fn homogeneity_examples() {
        let f = linear(2, 3);
        assert_eq!(f.homogeneous_degree(&[1, 1]).unwrap(), Some(1));
        assert_eq!(linear(1, 1).homogeneous_degree(&[1, 2]).unwrap(), None);
        let zero = SPolynomial::zero(ScalarRing::Integers, 0, 2);
        assert_eq!(zero.homogeneous_degree(&[1, 1]), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn weak_instance_is_homogeneous() {
        // X1*X2 - A1*X1^2 - A2*X2^2 over ZZ[A1, A2]
        let z = ScalarRing::Integers;
        let a = |i| R0Element::var(z, 2, i);
        let f = SPolynomial::from_terms(
            z,
            2,
            2,
            [
                (Monomial::from_exponents(vec![1, 1]), R0Element::one(z, 2)),
                (Monomial::from_exponents(vec![2, 0]), a(0).neg()),
                (Monomial::from_exponents(vec![0, 2]), a(1).neg()),
            ],
        );
        assert_eq!(f.homogeneous_degree(&[1, 1]).unwrap(), Some(2));
        let names: Vec<String> = ["A1", "A2"].iter().map(|s| s.to_string()).collect();
        let u: Vec<String> = ["X1", "X2"].iter().map(|s| s.to_string()).collect();
        assert_eq!(f.display_with(&names, &u), "-A1*X1^2 + X1*X2 - A2*X2^2");
    }

    #[test]
    fn flat_round_trip() {
        let q = ScalarRing::Rationals;
        let flat = R0Element::from_terms(
            q,
            3,
            [
                (Monomial::from_exponents(vec![1, 0, 1]), q.from_i64(2)),
                (
                    Monomial::from_exponents(vec![0, 1, 1]),
                    ScalarRing::Rationals
                        .from_rational(&num_rational::BigRational::new(1.into(), 2.into()))
                        .unwrap(),
                ),
                (Monomial::from_exponents(vec![0, 0, 2]), q.from_i64(-1)),
            ],
        );
        let f = SPolynomial::from_flat(&flat, 2);
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.to_flat(), flat);
        let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        assert_eq!(f.display_with(&names, &["U".to_string()]), "-U^2 + (2*x + 1/2*y)*U");
    }
}
