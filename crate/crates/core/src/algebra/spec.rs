use num_bigint::BigInt;

use super::{check_names, CoefficientRing, R0Element, SPolynomial, ScalarRing};
use crate::error::{Error, Result};

/// The data of R = R_0[U_1, ..., U_s]/I: weights, coefficient ring and
/// homogeneous generators of I, validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRingSpec {
    coeff: CoefficientRing,
    u_vars: Vec<String>,
    weights: Vec<u64>,
    generators: Vec<SPolynomial>,
    degrees: Vec<u64>,
    delta: u64,
}

impl GradedRingSpec {
    pub fn new(
        coeff: CoefficientRing,
        u_vars: Vec<String>,
        weights: Vec<u64>,
        generators: Vec<SPolynomial>,
    ) -> Result<Self> {
        if u_vars.is_empty() {
            return Err(Error::InvalidSpec("at least one graded variable is required".into()));
        }
        if u_vars.len() != weights.len() {
            return Err(Error::InvalidSpec(format!(
                "{} graded variables but {} weights",
                u_vars.len(),
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|&&w| w == 0) {
            return Err(Error::InvalidSpec(format!("weight {w} is not positive")));
        }
        check_names(coeff.vars().iter().chain(&u_vars))?;
        let mut degrees = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if g.base() != coeff.base() || g.coeff_vars() != coeff.nvars() {
                return Err(Error::RingMismatch(format!(
                    "generator f{} has coefficients outside {}",
                    i + 1,
                    coeff
                )));
            }
            if g.nvars() != u_vars.len() {
                return Err(Error::Shape(format!(
                    "generator f{} has {} graded variables, expected {}",
                    i + 1,
                    g.nvars(),
                    u_vars.len()
                )));
            }
            match g.homogeneous_degree(&weights) {
                Ok(Some(d)) => degrees.push(d),
                Ok(None) => {
                    return Err(Error::Homogeneity(format!("generator f{}", i + 1)));
                }
                Err(Error::ZeroPolynomial) => {
                    return Err(Error::InvalidSpec(format!("generator f{} is zero", i + 1)));
                }
                Err(e) => return Err(e),
            }
        }
        let delta = weights.iter().sum();
        Ok(GradedRingSpec {
            coeff,
            u_vars,
            weights,
            generators,
            degrees,
            delta,
        })
    }

    pub fn coeff(&self) -> &CoefficientRing {
        &self.coeff
    }

    pub fn u_vars(&self) -> &[String] {
        &self.u_vars
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn s(&self) -> usize {
        self.u_vars.len()
    }

    pub fn generators(&self) -> &[SPolynomial] {
        &self.generators
    }

    /// Weighted degrees δ_i of the generators.
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Δ = d_1 + ⋯ + d_s.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn max_weight(&self) -> u64 {
        self.weights.iter().copied().max().unwrap_or(1)
    }

    /// `[Δ, Δ + 2·max(d_i) + 4]`, the default degree window for scans.
    pub fn default_window(&self) -> (u64, u64) {
        (self.delta, self.delta + 2 * self.max_weight() + 4)
    }

    pub fn display_generator(&self, f: &SPolynomial) -> String {
        f.display_with(self.coeff.vars(), &self.u_vars)
    }

    pub fn display_element(&self, a: &R0Element) -> String {
        self.coeff.display(a)
    }

    /// Same ring, different generators.
    pub fn with_generators(&self, generators: Vec<SPolynomial>) -> Result<Self> {
        Self::new(
            self.coeff.clone(),
            self.u_vars.clone(),
            self.weights.clone(),
            generators,
        )
    }

    /// Substitutes integers for every variable of R_0 = ℤ[A_1, ..., A_m],
    /// giving the specialized problem over ℤ. Generators that become zero
    /// are dropped.
    pub fn specialize(&self, values: &[BigInt]) -> Result<Self> {
        if self.coeff.base() != ScalarRing::Integers || values.len() != self.coeff.nvars() {
            return Err(Error::RingMismatch(format!(
                "specialization needs ZZ[...] with {} values, found {}",
                values.len(),
                self.coeff
            )));
        }
        let z = ScalarRing::Integers;
        let point: Vec<_> = values.iter().map(|v| z.from_bigint(v)).collect();
        let mut gens = Vec::new();
        for g in &self.generators {
            let h = g.map_coefficients(z, 0, |c| Ok(R0Element::constant(c.evaluate(&point), 0)))?;
            if !h.is_zero() {
                gens.push(h);
            }
        }
        Self::new(
            CoefficientRing::scalar(z),
            self.u_vars.clone(),
            self.weights.clone(),
            gens,
        )
    }
}
