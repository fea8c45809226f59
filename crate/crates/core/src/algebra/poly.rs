//! Sparse multivariate polynomials over a ground ring; these are the
//! elements of the coefficient ring R_0.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::monomial::Monomial;
use super::scalar::{Scalar, ScalarRing};
use crate::error::{Error, Result};

/// An element of R_0: a polynomial in `nvars` variables over a ground ring.
///
/// Terms are stored strictly descending in the lex order, with no zero
/// coefficients, so equal elements have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct R0Element {
    base: ScalarRing,
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

/// The four checked operations exposed by [`ring_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Negate,
    ExactDiv,
}

/// Checked arithmetic on two elements of the same coefficient ring.
/// `Negate` ignores `b` beyond the ring check.
pub fn ring_arith(a: &R0Element, b: &R0Element, op: ArithOp) -> Result<R0Element> {
    a.check_compatible(b)?;
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Negate => a.neg(),
        ArithOp::ExactDiv => a.exact_div(b)?,
    })
}

impl R0Element {
    pub fn zero(base: ScalarRing, nvars: usize) -> Self {
        R0Element {
            base,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        let base = c.ring();
        if c.is_zero() {
            return Self::zero(base, nvars);
        }
        R0Element {
            base,
            nvars,
            terms: vec![(Monomial::one(nvars), c)],
        }
    }

    pub fn from_i64(base: ScalarRing, nvars: usize, v: i64) -> Self {
        Self::constant(base.from_i64(v), nvars)
    }

    pub fn one(base: ScalarRing, nvars: usize) -> Self {
        Self::from_i64(base, nvars, 1)
    }

    pub fn var(base: ScalarRing, nvars: usize, i: usize) -> Self {
        Self::term(base, Monomial::var(nvars, i), base.one())
    }

    pub fn term(base: ScalarRing, m: Monomial, c: Scalar) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(base, nvars);
        }
        R0Element {
            base,
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(base: ScalarRing, nvars: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_sorted_map(base, nvars, acc)
    }

    fn from_sorted_map(base: ScalarRing, nvars: usize, acc: BTreeMap<Monomial, Scalar>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        R0Element { base, nvars, terms }
    }

    pub fn base(&self) -> ScalarRing {
        self.base
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The value of a constant element; `None` for non-constants.
    pub fn constant_value(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(self.base.zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self.constant_value(), Some(c) if c.is_one())
    }

    /// Units of a polynomial ring over a domain are the unit constants.
    pub fn is_unit(&self) -> bool {
        matches!(self.constant_value(), Some(c) if c.is_unit())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    pub fn compatible(&self, other: &R0Element) -> bool {
        self.base == other.base && self.nvars == other.nvars
    }

    pub fn check_compatible(&self, other: &R0Element) -> Result<()> {
        if self.compatible(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{} in {} variables vs {} in {} variables",
                self.base, self.nvars, other.base, other.nvars
            )))
        }
    }

    fn assert_compatible(&self, other: &R0Element) {
        assert!(
            self.compatible(other),
            "coefficient ring mismatch: {}[{}] vs {}[{}]",
            self.base,
            self.nvars,
            other.base,
            other.nvars
        );
    }

    pub fn add(&self, other: &R0Element) -> R0Element {
        self.assert_compatible(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca.add(cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        R0Element {
            base: self.base,
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn neg(&self) -> R0Element {
        R0Element {
            base: self.base,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &R0Element) -> R0Element {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &R0Element) -> R0Element {
        self.assert_compatible(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.base, self.nvars);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_sorted_map(self.base, self.nvars, acc)
    }

    /// Multiplies by the single term `c·m`. Order is preserved because the
    /// lex order is multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> R0Element {
        if c.is_zero() {
            return Self::zero(self.base, self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), cc.mul(c)))
            .filter(|(_, cc)| !cc.is_zero())
            .collect();
        R0Element {
            base: self.base,
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &Scalar) -> R0Element {
        self.mul_term(&Monomial::one(self.nvars), c)
    }

    pub fn pow(&self, mut e: u32) -> R0Element {
        let mut base = self.clone();
        let mut acc = Self::one(self.base, self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, by lex leading-term division.
    pub fn exact_div(&self, divisor: &R0Element) -> Result<R0Element> {
        self.check_compatible(divisor)?;
        let Some((lm, lc)) = divisor.leading_term() else {
            return Err(Error::Division("division by zero".into()));
        };
        if divisor.terms.len() == 1 && lm.is_one() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                terms.push((m.clone(), c.exact_div(lc)?));
            }
            return Ok(R0Element {
                base: self.base,
                nvars: self.nvars,
                terms,
            });
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.leading_term().cloned() {
            let (Some(qm), Ok(qc)) = (lm.quotient_of(&rm), rc.exact_div(lc)) else {
                return Err(Error::Division("divisor does not divide dividend".into()));
            };
            rem = rem.sub(&divisor.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        // Quotient terms come out in strictly descending order.
        Ok(R0Element {
            base: self.base,
            nvars: self.nvars,
            terms: quot,
        })
    }

    /// Evaluates at a point of the ground ring.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong length");
        let mut acc = self.base.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = t.mul(&x.pow(e as u64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Re-reads the coefficients in another ground ring (ℤ → ℚ, ℤ/ℚ → 𝔽_p).
    pub fn map_base(&self, ring: ScalarRing) -> Result<R0Element> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), c.map_into(ring)?));
        }
        Ok(Self::from_terms(ring, self.nvars, terms))
    }

    /// Embeds into a ring with `k` further variables appended last.
    pub fn extend_vars(&self, k: usize) -> R0Element {
        R0Element {
            base: self.base,
            nvars: self.nvars + k,
            terms: self.terms.iter().map(|(m, c)| (m.extend(k), c.clone())).collect(),
        }
    }

    /// Divides by the leading coefficient (fields only).
    pub fn monic(&self) -> R0Element {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.inverse().expect("leading coefficient is invertible");
                self.scale(&inv)
            }
        }
    }

    /// gcd of the integer coefficients; zero for the zero element.
    pub fn integer_content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| match c {
            Scalar::Int(v) => g.gcd(v),
            _ => panic!("integer content of a non-integer polynomial"),
        })
    }

    /// Renders with the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            let body = format_term(&abs, m, names);
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

    /// True if `self` is a single term (or zero); such values print
    /// without parentheses as a factor.
    pub fn is_monomial_like(&self) -> bool {
        self.terms.len() <= 1
    }
}

fn format_term(c: &Scalar, m: &Monomial, names: &[String]) -> String {
    let mono: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let name = names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if mono.is_empty() {
        c.to_string()
    } else if c.is_one() {
        mono.join("*")
    } else {
        format!("{}*{}", c, mono.join("*"))
    }
}

impl fmt::Display for R0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}
