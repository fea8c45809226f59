//! The module of inverse polynomials R_0[U_1^-, ..., U_s^-]: which degrees
//! are supported, the ordered bases B(d), and the action of S on them.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::{R0Element, SPolynomial};

/// U^λ with every exponent strictly negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InverseMonomial(Vec<i64>);

impl InverseMonomial {
    /// Returns `None` unless every entry is ≤ −1.
    pub fn new(lambda: Vec<i64>) -> Option<Self> {
        lambda.iter().all(|&e| e < 0).then_some(InverseMonomial(lambda))
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    /// The weighted degree Σ d_i λ^(i); always negative.
    pub fn degree(&self, weights: &[u64]) -> i64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e * w as i64).sum()
    }

    /// U^{-λ}, the positive monomial the ordering is defined through.
    fn negated(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().map(|e| -e)
    }
}

/// U^λ < U^μ iff U^{−λ} <_Lex U^{−μ}.
impl Ord for InverseMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.negated().cmp(other.negated())
    }
}

impl PartialOrd for InverseMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for InverseMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The basis B(d) of the degree −d component, ascending.
#[derive(Clone, Debug)]
pub struct ComponentBasis {
    d: u64,
    elements: Vec<InverseMonomial>,
    index: HashMap<InverseMonomial, usize>,
}

impl ComponentBasis {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn elements(&self) -> &[InverseMonomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, m: &InverseMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

impl PartialEq for ComponentBasis {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.elements == other.elements
    }
}

/// A homogeneous inverse polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InversePolynomial {
    terms: BTreeMap<InverseMonomial, R0Element>,
}

impl InversePolynomial {
    pub fn terms(&self) -> impl Iterator<Item = (&InverseMonomial, &R0Element)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &InverseMonomial) -> Option<&R0Element> {
        self.terms.get(m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Is `n` a nonnegative integer combination of `weights` (zero included)?
pub fn in_semigroup(n: u64, weights: &[u64]) -> bool {
    let n = n as usize;
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for k in 1..=n {
        reachable[k] = weights.iter().any(|&w| (w as usize) <= k && reachable[k - w as usize]);
    }
    reachable[n]
}

/// B(d) ≠ ∅ iff d − Δ is a nonnegative combination of the weights.
pub fn basis_nonempty(d: u64, weights: &[u64]) -> bool {
    let delta: u64 = weights.iter().sum();
    d >= delta && in_semigroup(d - delta, weights)
}

/// All λ ≤ (−1, ..., −1) with Σ d_i λ^(i) = −d, sorted ascending.
pub fn enumerate_basis(d: u64, weights: &[u64]) -> ComponentBasis {
    let mut elements = Vec::new();
    if basis_nonempty(d, weights) {
        let mut current = Vec::with_capacity(weights.len());
        descend(d, weights, &mut current, &mut elements);
    }
    elements.sort();
    let index = elements.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    ComponentBasis { d, elements, index }
}

// Chooses μ_i = −λ^(i) ≥ 1 coordinate by coordinate.
fn descend(remaining: u64, weights: &[u64], current: &mut Vec<i64>, out: &mut Vec<InverseMonomial>) {
    let i = current.len();
    let w = weights[i];
    if i + 1 == weights.len() {
        if remaining >= w && remaining.is_multiple_of(w) {
            current.push(-((remaining / w) as i64));
            out.push(InverseMonomial(current.clone()));
            current.pop();
        }
        return;
    }
    let reserve: u64 = weights[i + 1..].iter().sum();
    let mut mu = 1;
    while mu * w + reserve <= remaining {
        current.push(-(mu as i64));
        descend(remaining - mu * w, weights, current, out);
        current.pop();
        mu += 1;
    }
}

/// f · U^ν, keeping only the products whose exponents stay negative.
pub fn module_action(f: &SPolynomial, nu: &InverseMonomial) -> InversePolynomial {
    assert_eq!(f.nvars(), nu.0.len(), "arity mismatch in module action");
    let mut terms = BTreeMap::new();
    for (lambda, a) in f.terms() {
        let e: Vec<i64> =
            nu.0.iter()
                .zip(lambda.exponents())
                .map(|(&n, &l)| n + l as i64)
                .collect();
        if let Some(m) = InverseMonomial::new(e) {
            terms.insert(m, a.clone());
        }
    }
    InversePolynomial { terms }
}
