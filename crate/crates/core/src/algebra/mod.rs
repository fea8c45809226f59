//! Exact arithmetic for the coefficient ring R_0 and for the weighted-graded
//! polynomial ring S = R_0[U_1, ..., U_s].

mod monomial;
mod poly;
mod scalar;
mod spec;
mod spoly;

use std::collections::HashSet;
use std::fmt;

pub use monomial::{lex_compare, weighted_degree, Monomial};
pub use poly::{ring_arith, ArithOp, R0Element};
pub use scalar::{is_prime, Scalar, ScalarRing};
pub use spec::GradedRingSpec;
pub use spoly::SPolynomial;

use crate::error::{Error, Result};

/// Descriptor of R_0: a ground ring, optionally with polynomial variables.
/// An empty variable list means R_0 is the ground ring itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientRing {
    base: ScalarRing,
    vars: Vec<String>,
}

impl CoefficientRing {
    pub fn scalar(base: ScalarRing) -> Self {
        CoefficientRing { base, vars: Vec::new() }
    }

    pub fn polynomial(base: ScalarRing, vars: Vec<String>) -> Result<Self> {
        check_names(&vars)?;
        Ok(CoefficientRing { base, vars })
    }

    pub fn base(&self) -> ScalarRing {
        self.base
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_polynomial(&self) -> bool {
        !self.vars.is_empty()
    }

    pub fn zero(&self) -> R0Element {
        R0Element::zero(self.base, self.nvars())
    }

    pub fn one(&self) -> R0Element {
        R0Element::one(self.base, self.nvars())
    }

    pub fn from_i64(&self, v: i64) -> R0Element {
        R0Element::from_i64(self.base, self.nvars(), v)
    }

    pub fn var(&self, i: usize) -> R0Element {
        R0Element::var(self.base, self.nvars(), i)
    }

    pub fn var_named(&self, name: &str) -> Option<R0Element> {
        self.vars.iter().position(|v| v == name).map(|i| self.var(i))
    }

    pub fn contains(&self, a: &R0Element) -> bool {
        a.base() == self.base && a.nvars() == self.nvars()
    }

    pub fn check(&self, a: &R0Element) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "element of {}[{} vars] used in {}",
                a.base(),
                a.nvars(),
                self
            )))
        }
    }

    /// The same variables over another ground ring.
    pub fn with_base(&self, base: ScalarRing) -> CoefficientRing {
        CoefficientRing {
            base,
            vars: self.vars.clone(),
        }
    }

    pub fn display(&self, a: &R0Element) -> String {
        a.display_with(&self.vars)
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}[{}]", self.base, self.vars.join(","))
        }
    }
}

/// `[A-Za-z][A-Za-z0-9_]*`
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn check_names<'a>(names: impl IntoIterator<Item = &'a String>) -> Result<()> {
    let mut seen = HashSet::new();
    for n in names {
        if !is_identifier(n) {
            return Err(Error::InvalidSpec(format!("`{n}` is not a valid variable name")));
        }
        if !seen.insert(n.as_str()) {
            return Err(Error::InvalidSpec(format!("variable `{n}` declared twice")));
        }
    }
    Ok(())
}
