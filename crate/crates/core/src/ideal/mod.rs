//! Ideals of the coefficient ring R_0: content ideals, unit and membership
//! tests, Gröbner bases.
//!
//! Over a field (with or without variables) every question here is decided
//! exactly. Over ℤ[A_1..A_m] unit-ideal detection is complete up to
//! factoring one integer; membership is a semidecision.

pub(crate) mod groebner;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{is_prime, CoefficientRing, GradedRingSpec, R0Element, SPolynomial, Scalar, ScalarRing};
use crate::error::{Error, Result};
use groebner::ideal_basis;

/// Three-valued answer of a decision procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Undecided => "undecided",
        })
    }
}

/// A finitely generated ideal of R_0. Zero generators are dropped and
/// duplicates removed; the generator order is otherwise preserved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R0Ideal {
    ring: CoefficientRing,
    generators: Vec<R0Element>,
}

impl R0Ideal {
    pub fn new(ring: CoefficientRing, generators: Vec<R0Element>) -> Result<Self> {
        let mut gens: Vec<R0Element> = Vec::with_capacity(generators.len());
        for g in generators {
            ring.check(&g)?;
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(R0Ideal { ring, generators: gens })
    }

    pub fn zero(ring: CoefficientRing) -> Self {
        R0Ideal {
            ring,
            generators: Vec::new(),
        }
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn generators(&self) -> &[R0Element] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn sum(&self, other: &R0Ideal) -> Result<R0Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "ideals of {} and {}",
                self.ring, other.ring
            )));
        }
        R0Ideal::new(
            self.ring.clone(),
            self.generators.iter().chain(&other.generators).cloned().collect(),
        )
    }

    /// `(g1, g2, ...)`, or `(0)`.
    pub fn display(&self) -> String {
        if self.generators.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.generators.iter().map(|g| self.ring.display(g)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for R0Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// The ideal of R_0 generated by the coefficients of `f`.
pub fn content_poly(f: &SPolynomial, ring: &CoefficientRing) -> Result<R0Ideal> {
    R0Ideal::new(ring.clone(), normalized(f.coefficients()))
}

// Associates with a positive leading coefficient, lowest degree first.
fn normalized<'a>(coeffs: impl Iterator<Item = &'a R0Element>) -> Vec<R0Element> {
    let mut out: Vec<R0Element> = coeffs
        .map(|c| match c.leading_term() {
            Some((_, a)) if a.is_negative() => c.neg(),
            _ => c.clone(),
        })
        .collect();
    out.sort_by_key(R0Element::total_degree);
    out
}

/// Sum of the content ideals of all generators of I.
pub fn content_ideal(spec: &GradedRingSpec) -> R0Ideal {
    let gens = normalized(spec.generators().iter().flat_map(|f| f.coefficients()));
    R0Ideal::new(spec.coeff().clone(), gens).expect("generators live in R_0")
}

fn integer_of(c: &Scalar) -> &BigInt {
    c.as_bigint().expect("integer scalar")
}

fn gcd_of_constants(gens: &[R0Element]) -> BigInt {
    gens.iter().fold(BigInt::zero(), |g, x| {
        g.gcd(integer_of(&x.constant_value().expect("constant")))
    })
}

fn is_plus_minus_one(a: &R0Element) -> bool {
    a.constant_value()
        .is_some_and(|c| c.as_bigint().is_some_and(|v| v.abs().is_one()))
}

fn map_all(gens: &[R0Element], ring: ScalarRing) -> Vec<R0Element> {
    gens.iter()
        .map(|g| g.map_base(ring).expect("ℤ maps into every ground ring"))
        .filter(|g| !g.is_zero())
        .collect()
}

fn field_unit(gens: &[R0Element], base: ScalarRing, nvars: usize) -> bool {
    if gens.iter().any(|g| !g.is_zero() && g.is_constant()) {
        return true;
    }
    if nvars == 0 {
        return gens.iter().any(|g| !g.is_zero());
    }
    ideal_basis(gens, base, nvars, false).is_everything()
}

/// Bound for trial division; leftovers must be 1 or a u64 prime.
const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Distinct prime divisors of `n > 0`, or `None` when trial division leaves
/// a composite cofactor it cannot split.
pub(crate) fn prime_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let mut n = n.abs();
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_BOUND && BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        if (&n % &bp).is_zero() {
            primes.push(p);
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return Some(primes);
    }
    if BigInt::from(p) * BigInt::from(p) > n {
        // no factor below sqrt(n): n is prime
        primes.push(n.to_u64()?);
        return Some(primes);
    }
    match n.to_u64() {
        Some(m) if is_prime(m) => {
            primes.push(m);
            Some(primes)
        }
        _ => None,
    }
}

fn lcm_of_denominators(polys: &[R0Element]) -> BigInt {
    polys
        .iter()
        .flat_map(|h| h.terms().iter())
        .fold(BigInt::one(), |acc, (_, c)| match c {
            Scalar::Rat(r) => acc.lcm(r.denom()),
            _ => acc,
        })
}

fn integer_poly_unit(gens: &[R0Element], nvars: usize) -> Decision {
    if gens.is_empty() {
        return Decision::No;
    }
    if gens.iter().any(is_plus_minus_one) {
        return Decision::Yes;
    }
    if gens.iter().all(R0Element::is_constant) {
        return Decision::from_bool(gcd_of_constants(gens).is_one());
    }
    let content = gens.iter().fold(BigInt::zero(), |g, x| g.gcd(&x.integer_content()));
    if !content.is_one() {
        return Decision::No;
    }
    let q = ScalarRing::Rationals;
    let rational = map_all(gens, q);
    let gb = ideal_basis(&rational, q, nvars, true);
    if !gb.is_everything() {
        return Decision::No;
    }
    let h = gb.express(&[R0Element::one(q, nvars)]).expect("1 lies in a unit ideal");
    // N·1 = Σ (N h_j) g_j with N h_j integral, so N lies in J.
    let n = lcm_of_denominators(&h);
    if n.is_one() {
        return Decision::Yes;
    }
    let Some(primes) = prime_divisors(&n) else {
        return Decision::Undecided;
    };
    // A maximal ideal containing J meets ℤ in (p) for some p | N.
    for p in primes {
        let fp = ScalarRing::PrimeField(p);
        if !field_unit(&map_all(gens, fp), fp, nvars) {
            return Decision::No;
        }
    }
    Decision::Yes
}

/// Is J the whole ring?
pub fn is_unit_ideal(j: &R0Ideal) -> Decision {
    let base = j.ring.base();
    let nvars = j.ring.nvars();
    let gens = &j.generators;
    match base {
        ScalarRing::Integers if nvars == 0 => Decision::from_bool(gcd_of_constants(gens).is_one()),
        ScalarRing::Integers => integer_poly_unit(gens, nvars),
        _ => Decision::from_bool(field_unit(gens, base, nvars)),
    }
}

/// Reduced lex Gröbner basis. Only defined over a field.
pub fn groebner(j: &R0Ideal) -> Result<R0Ideal> {
    let base = j.ring.base();
    if !base.is_field() {
        return Err(Error::RingMismatch(format!(
            "Gröbner bases need a field of coefficients, not {}",
            j.ring
        )));
    }
    let nvars = j.ring.nvars();
    let gens = if nvars == 0 {
        if j.generators.is_empty() {
            vec![]
        } else {
            vec![R0Element::one(base, 0)]
        }
    } else {
        ideal_basis(&j.generators, base, nvars, false)
            .elements()
            .iter()
            .map(|v| v[0].clone())
            .collect()
    };
    R0Ideal::new(j.ring.clone(), gens)
}

/// Small primes used to refute membership over ℤ[A] by reduction.
const REFUTATION_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// Is `g ∈ J`?
pub fn ideal_member(g: &R0Element, j: &R0Ideal) -> Result<Decision> {
    j.ring.check(g)?;
    if g.is_zero() {
        return Ok(Decision::Yes);
    }
    let base = j.ring.base();
    let nvars = j.ring.nvars();
    let gens = &j.generators;
    if gens.is_empty() {
        return Ok(Decision::No);
    }
    Ok(match base {
        ScalarRing::Integers if nvars == 0 => {
            let d = gcd_of_constants(gens);
            Decision::from_bool(integer_of(&g.constant_value().expect("constant")).is_multiple_of(&d))
        }
        _ if base.is_field() && nvars == 0 => Decision::Yes,
        _ if base.is_field() => {
            Decision::from_bool(ideal_basis(gens, base, nvars, false).contains(std::slice::from_ref(g)))
        }
        _ => integer_poly_member(g, gens, nvars),
    })
}

/// Division by the generators with leading coefficient ±1, working modulo
/// the integer constants of J. A zero remainder proves membership.
fn divides_out_over_integers(g: &R0Element, gens: &[R0Element]) -> bool {
    let modulus = gens.iter().filter(|f| f.is_constant()).fold(BigInt::zero(), |m, f| {
        m.gcd(integer_of(&f.constant_value().expect("constant")))
    });
    let divisors: Vec<&R0Element> = gens
        .iter()
        .filter(|f| !f.is_constant())
        .filter(|f| f.leading_term().is_some_and(|(_, c)| integer_of(c).abs().is_one()))
        .collect();
    let mut p = g.clone();
    while let Some((m, c)) = p.leading_term().cloned() {
        let lead = R0Element::term(ScalarRing::Integers, m.clone(), c.clone());
        let reduced = if modulus.is_zero() {
            c.clone()
        } else {
            Scalar::Int(integer_of(&c).mod_floor(&modulus))
        };
        if reduced.is_zero() {
            p = p.sub(&lead);
            continue;
        }
        let Some(f) = divisors
            .iter()
            .find(|f| f.leading_term().is_some_and(|(lm, _)| lm.divides(&m)))
        else {
            return false;
        };
        let (lm, lc) = f.leading_term().expect("nonzero");
        let q = lm.quotient_of(&m).expect("divides");
        p = p.sub(&f.mul_term(&q, &c.exact_div(lc).expect("unit")));
    }
    true
}

fn integer_poly_member(g: &R0Element, gens: &[R0Element], nvars: usize) -> Decision {
    if gens.iter().any(|f| g.exact_div(f).is_ok()) || divides_out_over_integers(g, gens) {
        return Decision::Yes;
    }
    let q = ScalarRing::Rationals;
    let gb = ideal_basis(&map_all(gens, q), q, nvars, true);
    let gq = g.map_base(q).expect("ℤ ⊂ ℚ");
    let Some(h) = gb.express(&[gq]) else {
        return Decision::No;
    };
    if lcm_of_denominators(&h).is_one() {
        return Decision::Yes;
    }
    for p in REFUTATION_PRIMES {
        let fp = ScalarRing::PrimeField(p);
        let gp = g.map_base(fp).expect("ℤ → 𝔽_p");
        if gp.is_zero() {
            continue;
        }
        let jp = map_all(gens, fp);
        if jp.is_empty() || !ideal_basis(&jp, fp, nvars, false).contains(&[gp]) {
            return Decision::No;
        }
    }
    if integer_poly_unit(gens, nvars) == Decision::Yes {
        return Decision::Yes;
    }
    Decision::Undecided
}

/// Powers of `a` tried against J before the Rabinowitsch test.
const POWER_TRIES: u64 = 32;

/// Is `a ∈ √J`? Over a field, small powers of `a` are first reduced modulo
/// J; otherwise 1 ∈ J + (1 − y·a) with y appended as the last variable.
pub fn radical_member(a: &R0Element, j: &R0Ideal) -> Result<Decision> {
    j.ring.check(a)?;
    if a.is_zero() {
        return Ok(Decision::Yes);
    }
    let base = j.ring.base();
    let nvars = j.ring.nvars();
    if nvars == 0 {
        return Ok(match base {
            ScalarRing::Integers => {
                let g = gcd_of_constants(&j.generators);
                if g.is_zero() {
                    Decision::No
                } else {
                    let a = integer_of(&a.constant_value().expect("constant")).clone();
                    let mut h = g;
                    loop {
                        let d = h.gcd(&a);
                        if d.is_one() {
                            break;
                        }
                        h /= d;
                    }
                    Decision::from_bool(h.is_one())
                }
            }
            _ => Decision::from_bool(!j.generators.is_empty()),
        });
    }
    if base.is_field() && !j.generators.is_empty() {
        // a^k ≡ r_k mod J: a vanishing remainder certifies membership.
        let gb = ideal_basis(&j.generators, base, nvars, false);
        if gb.is_everything() {
            return Ok(Decision::Yes);
        }
        let tries = j.generators.iter().map(R0Element::total_degree).max().unwrap_or(0) * 2 + 2;
        let mut r = gb.remainder(std::slice::from_ref(a)).swap_remove(0);
        for _ in 0..tries.min(POWER_TRIES) {
            if r.is_zero() {
                return Ok(Decision::Yes);
            }
            r = gb.remainder(&[r.mul(a)]).swap_remove(0);
        }
    }
    rabinowitsch(a, j)
}

/// 1 ∈ J + (1 − y·a) with y appended as the last variable.
fn rabinowitsch(a: &R0Element, j: &R0Ideal) -> Result<Decision> {
    let (base, nvars) = (j.ring.base(), j.ring.nvars());
    let y = R0Element::var(base, nvars + 1, nvars);
    let one = R0Element::one(base, nvars + 1);
    let mut gens: Vec<R0Element> = j.generators.iter().map(|g| g.extend_vars(1)).collect();
    gens.push(one.sub(&y.mul(&a.extend_vars(1))));
    let names: Vec<String> = j
        .ring
        .vars()
        .iter()
        .cloned()
        .chain(std::iter::once(fresh_name(j.ring.vars())))
        .collect();
    let ring = CoefficientRing::polynomial(base, names)?;
    Ok(is_unit_ideal(&R0Ideal::new(ring, gens)?))
}

fn fresh_name(taken: &[String]) -> String {
    (0..)
        .map(|k| format!("rabinowitsch{k}"))
        .find(|n| !taken.contains(n))
        .expect("unbounded supply of names")
}
