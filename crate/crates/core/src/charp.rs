//! Certificates (α, β) with (f_1⋯f_s)^α ∈ ⟨f_1^{α+β}, ..., f_s^{α+β}⟩ in a
//! polynomial ring over 𝔽_p, which force H^s_I(R) = 0 for I = (f_1..f_s).

use crate::algebra::{CoefficientRing, R0Element, ScalarRing};
use crate::error::{Error, Result};
use crate::ideal::groebner::{ideal_basis, ModuleBasis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCertificate {
    pub alpha: u32,
    pub beta: u32,
    /// g_i with (∏ f_i)^α = Σ g_i f_i^{α+β}.
    pub witness: Option<Vec<R0Element>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharpOutcome {
    Found(FrobeniusCertificate),
    /// No certificate with α ≤ alpha_max, β ≤ beta_max. Not a proof of
    /// nonvanishing.
    NotFound {
        alpha_max: u32,
        beta_max: u32,
    },
}

fn prime_of(ring: &CoefficientRing) -> Result<u64> {
    match ring.base() {
        ScalarRing::PrimeField(p) => Ok(p),
        other => Err(Error::RingMismatch(format!(
            "the characteristic-p search needs a prime field, not {other}"
        ))),
    }
}

fn check_inputs(fs: &[R0Element], ring: &CoefficientRing) -> Result<u64> {
    let p = prime_of(ring)?;
    if fs.is_empty() {
        return Err(Error::InvalidSpec("no polynomials given".into()));
    }
    for f in fs {
        ring.check(f)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    Ok(p)
}

fn product(fs: &[R0Element], ring: &CoefficientRing) -> R0Element {
    fs.iter().fold(ring.one(), |acc, f| acc.mul(f))
}

fn powers_basis(fs: &[R0Element], ring: &CoefficientRing, n: u32, track: bool) -> ModuleBasis {
    let gens: Vec<R0Element> = fs.iter().map(|f| f.pow(n)).collect();
    ideal_basis(&gens, ring.base(), ring.nvars(), track)
}

/// Smallest (α, β) in the order of increasing α + β, then increasing α.
pub fn charp_vanishing_search(
    fs: &[R0Element],
    ring: &CoefficientRing,
    alpha_max: u32,
    beta_max: u32,
    witness: bool,
) -> Result<CharpOutcome> {
    check_inputs(fs, ring)?;
    if alpha_max == 0 || beta_max == 0 {
        return Err(Error::InvalidSpec("search bounds must be at least 1".into()));
    }
    let prod = product(fs, ring);
    for n in 2..=alpha_max + beta_max {
        // Every cell with α + β = n shares the ideal of n-th powers.
        let alphas: Vec<u32> = (1..n).filter(|&a| a <= alpha_max && n - a <= beta_max).collect();
        if alphas.is_empty() {
            continue;
        }
        let gb = powers_basis(fs, ring, n, witness);
        for alpha in alphas {
            let target = prod.pow(alpha);
            if !gb.contains(std::slice::from_ref(&target)) {
                continue;
            }
            let witness = witness.then(|| {
                gb.express(&[target])
                    .expect("member has an expression")
                    .into_iter()
                    .collect::<Vec<_>>()
            });
            return Ok(CharpOutcome::Found(FrobeniusCertificate {
                alpha,
                beta: n - alpha,
                witness,
            }));
        }
    }
    Ok(CharpOutcome::NotFound { alpha_max, beta_max })
}

/// Re-checks a certificate: by expanding the witness when present,
/// otherwise by a fresh membership test.
pub fn verify_certificate(fs: &[R0Element], ring: &CoefficientRing, cert: &FrobeniusCertificate) -> Result<bool> {
    check_inputs(fs, ring)?;
    let n = cert.alpha + cert.beta;
    let target = product(fs, ring).pow(cert.alpha);
    Ok(match &cert.witness {
        Some(g) if g.len() == fs.len() => {
            let sum = g
                .iter()
                .zip(fs)
                .fold(ring.zero(), |acc, (gi, f)| acc.add(&gi.mul(&f.pow(n))));
            sum == target
        }
        Some(_) => false,
        None => powers_basis(fs, ring, n, false).contains(&[target]),
    })
}

/// Raises a certificate to (pα, pβ). A witness becomes g_i^p, since the
/// p-th power map is additive in characteristic p.
pub fn frobenius_lift(ring: &CoefficientRing, cert: &FrobeniusCertificate) -> Result<FrobeniusCertificate> {
    let p = prime_of(ring)? as u32;
    Ok(FrobeniusCertificate {
        alpha: cert.alpha * p,
        beta: cert.beta * p,
        witness: cert.witness.as_ref().map(|g| g.iter().map(|gi| gi.pow(p)).collect()),
    })
}

/// Direct membership test at (pα, pβ), independent of any witness.
pub fn frobenius_spot_check(fs: &[R0Element], ring: &CoefficientRing, cert: &FrobeniusCertificate) -> Result<bool> {
    let lifted = frobenius_lift(ring, cert)?;
    verify_certificate(
        fs,
        ring,
        &FrobeniusCertificate {
            witness: None,
            ..lifted
        },
    )
}
