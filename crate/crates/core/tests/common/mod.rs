//! Seeded random problem corpus shared by the integration suites.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use topcoh::algebra::{CoefficientRing, GradedRingSpec, Monomial, R0Element, SPolynomial, ScalarRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    Integers,
    Rationals,
    F2,
    F5,
    Qx,
    Qxy,
}

pub const RING_KINDS: [RingKind; 6] = [
    RingKind::Integers,
    RingKind::Rationals,
    RingKind::F2,
    RingKind::F5,
    RingKind::Qx,
    RingKind::Qxy,
];

impl RingKind {
    pub fn ring(self) -> CoefficientRing {
        let q = ScalarRing::Rationals;
        match self {
            RingKind::Integers => CoefficientRing::scalar(ScalarRing::Integers),
            RingKind::Rationals => CoefficientRing::scalar(q),
            RingKind::F2 => CoefficientRing::scalar(ScalarRing::PrimeField(2)),
            RingKind::F5 => CoefficientRing::scalar(ScalarRing::PrimeField(5)),
            RingKind::Qx => CoefficientRing::polynomial(q, vec!["x".into()]).unwrap(),
            RingKind::Qxy => CoefficientRing::polynomial(q, vec!["x".into(), "y".into()]).unwrap(),
        }
    }
}

/// Exponent vectors of weighted degree `deg`.
pub fn monomials_of_degree(deg: u64, weights: &[u64]) -> Vec<Vec<u32>> {
    fn go(i: usize, left: u64, weights: &[u64], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=left / weights[i] {
            cur.push(e as u32);
            go(i + 1, left - e * weights[i], weights, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, deg, weights, &mut Vec::new(), &mut out);
    out
}

fn small_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

/// A random coefficient. With `proper`, every coefficient lies in a fixed
/// proper ideal chosen by `ideal_seed` (when R_0 has one).
fn coefficient(
    rng: &mut ChaCha8Rng,
    ring: &CoefficientRing,
    kind: RingKind,
    proper: bool,
    ideal_seed: u64,
) -> R0Element {
    let c = |v: i64| ring.from_i64(v);
    match kind {
        RingKind::Integers => {
            let k = if proper { [2, 3, 6][ideal_seed as usize % 3] } else { 1 };
            c(k * small_nonzero(rng, 4))
        }
        RingKind::Rationals | RingKind::F2 | RingKind::F5 => loop {
            let v = ring.from_i64(small_nonzero(rng, 6));
            if !v.is_zero() {
                return v;
            }
        },
        RingKind::Qx => {
            let x = ring.var(0);
            let generator = if proper {
                [x.clone(), x.sub(&c(1)), x.mul(&x).add(&c(1))][ideal_seed as usize % 3].clone()
            } else {
                c(1)
            };
            let cofactor = match rng.gen_range(0..3) {
                0 => c(small_nonzero(rng, 3)),
                1 => x
                    .scale(&ScalarRing::Rationals.from_i64(small_nonzero(rng, 3)))
                    .add(&c(rng.gen_range(-2..=2))),
                _ => x.mul(&x).add(&c(small_nonzero(rng, 2))),
            };
            generator.mul(&cofactor)
        }
        RingKind::Qxy => {
            let (x, y) = (ring.var(0), ring.var(1));
            let q = ScalarRing::Rationals;
            loop {
                let a = x.scale(&q.from_i64(rng.gen_range(-2..=2)));
                let b = y.scale(&q.from_i64(rng.gen_range(-2..=2)));
                let quad = if rng.gen_bool(0.3) { x.mul(&y) } else { ring.zero() };
                let constant = if proper && ideal_seed.is_multiple_of(2) {
                    c(0)
                } else {
                    c(rng.gen_range(-2..=2))
                };
                let mut v = a.add(&b).add(&quad).add(&constant);
                if proper && ideal_seed % 2 == 1 {
                    // Coefficients in (x - 1, y).
                    let shift = x.sub(&c(1));
                    v = shift
                        .scale(&q.from_i64(small_nonzero(rng, 2)))
                        .add(&y.mul(&c(rng.gen_range(-2..=2)).add(&x)));
                }
                if !v.is_zero() {
                    return v;
                }
            }
        }
    }
}

/// A random nonzero homogeneous generator of weighted degree at most 4.
pub fn random_generator(
    rng: &mut ChaCha8Rng,
    ring: &CoefficientRing,
    kind: RingKind,
    weights: &[u64],
    proper: bool,
    ideal_seed: u64,
) -> SPolynomial {
    let degrees: Vec<u64> = (1..=4)
        .filter(|&d| !monomials_of_degree(d, weights).is_empty())
        .collect();
    let deg = *degrees.choose(rng).unwrap();
    let mut monos = monomials_of_degree(deg, weights);
    monos.shuffle(rng);
    let k = rng.gen_range(1..=monos.len().min(4));
    let terms: Vec<_> = monos[..k]
        .iter()
        .map(|e| {
            (
                Monomial::from_exponents(e.clone()),
                coefficient(rng, ring, kind, proper, ideal_seed),
            )
        })
        .collect();
    SPolynomial::from_terms(ring.base(), ring.nvars(), weights.len(), terms)
}

pub struct CorpusEntry {
    pub label: String,
    pub kind: RingKind,
    pub spec: GradedRingSpec,
}

/// `n` specs cycling through the coefficient rings, with s ∈ {2, 3},
/// weights in {1, 2}, 1 ≤ r ≤ 3 and generator degrees ≤ 4.
pub fn corpus(n: usize, rng: &mut ChaCha8Rng) -> Vec<CorpusEntry> {
    (0..n)
        .map(|i| {
            let kind = RING_KINDS[i % RING_KINDS.len()];
            let ring = kind.ring();
            let s = rng.gen_range(2..=3);
            let weights: Vec<u64> = (0..s).map(|_| rng.gen_range(1..=2)).collect();
            let r = rng.gen_range(1..=3);
            let proper = rng.gen_bool(0.5);
            let ideal_seed = rng.gen_range(0..6);
            let gens = (0..r)
                .map(|_| random_generator(rng, &ring, kind, &weights, proper, ideal_seed))
                .collect();
            let u_vars = (1..=s).map(|j| format!("U{j}")).collect();
            let spec = GradedRingSpec::new(ring, u_vars, weights, gens).unwrap();
            CorpusEntry {
                label: format!("#{i} {kind:?}"),
                kind,
                spec,
            }
        })
        .collect()
}
