//! Scalars of the ground ring: arbitrary-precision integers, reduced
//! rationals, and residues modulo a prime.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground ring underneath a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarRing {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl ScalarRing {
    /// Builds `GF(p)`, rejecting composite or tiny moduli.
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(ScalarRing::PrimeField(p))
        } else {
            Err(Error::InvalidSpec(format!("{p} is not prime")))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, ScalarRing::Integers)
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            ScalarRing::Integers => Scalar::Int(v.clone()),
            ScalarRing::Rationals => Scalar::Rat(BigRational::from_integer(v.clone())),
            ScalarRing::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Mod {
                    value: r.to_u64().expect("residue fits in u64"),
                    p,
                }
            }
        }
    }

    /// Maps a rational into this ring; fails when the denominator is not
    /// invertible here.
    pub fn from_rational(self, v: &BigRational) -> Result<Scalar> {
        let num = self.from_bigint(v.numer());
        let den = self.from_bigint(v.denom());
        num.exact_div(&den)
    }

    pub fn name(self) -> String {
        match self {
            ScalarRing::Integers => "ZZ".to_string(),
            ScalarRing::Rationals => "QQ".to_string(),
            ScalarRing::PrimeField(p) => format!("GF({p})"),
        }
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A single ground-ring value. Each variant knows which ring it lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Mod { value: u64, p: u64 },
}

impl Scalar {
    pub fn ring(&self) -> ScalarRing {
        match self {
            Scalar::Int(_) => ScalarRing::Integers,
            Scalar::Rat(_) => ScalarRing::Rationals,
            Scalar::Mod { p, .. } => ScalarRing::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_one(),
            Scalar::Rat(v) => v.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Int(v) => v.abs().is_one(),
            _ => !self.is_zero(),
        }
    }

    /// True for values printed with a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_negative(),
            Scalar::Rat(v) => v.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }

    fn mismatch(&self, other: &Scalar) -> ! {
        panic!("scalar ring mismatch: {} vs {}", self.ring(), other.ring())
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => Scalar::Mod {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => self.mismatch(other),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => Scalar::Mod {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => self.mismatch(other),
        }
    }

    /// Multiplicative inverse, when one exists in the ground ring.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Int(a) => {
                if a.abs().is_one() {
                    Some(Scalar::Int(a.clone()))
                } else {
                    None
                }
            }
            Scalar::Rat(a) => Some(Scalar::Rat(a.recip())),
            Scalar::Mod { value, p } => Some(Scalar::Mod {
                value: mod_pow(*value, p - 2, *p),
                p: *p,
            }),
        }
    }

    /// `self / other`, failing unless the quotient lies in the ground ring.
    pub fn exact_div(&self, other: &Scalar) -> Result<Scalar> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch(format!("{} / {}", self.ring(), other.ring())));
        }
        if other.is_zero() {
            return Err(Error::Division("division by zero".into()));
        }
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => {
                let (q, r) = a.div_rem(b);
                if r.is_zero() {
                    Ok(Scalar::Int(q))
                } else {
                    Err(Error::Division(format!("{b} does not divide {a}")))
                }
            }
            _ => Ok(self.mul(&other.inverse().expect("nonzero field element"))),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.ring().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn as_bigint(&self) -> Option<&BigInt> {
        match self {
            Scalar::Int(v) => Some(v),
            _ => None,
        }
    }

    /// Promotes an integer to the given ring (ℤ → ℚ or ℤ → 𝔽_p).
    pub fn map_into(&self, ring: ScalarRing) -> Result<Scalar> {
        match self {
            Scalar::Int(v) => Ok(ring.from_bigint(v)),
            Scalar::Rat(v) => ring.from_rational(v),
            Scalar::Mod { p, .. } if ring == ScalarRing::PrimeField(*p) => Ok(self.clone()),
            Scalar::Mod { .. } => Err(Error::RingMismatch(format!("cannot map {} into {}", self.ring(), ring))),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(v) => {
                if v.is_integer() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

pub(crate) fn mod_pow(base: u64, mut e: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

/// Deterministic Miller–Rabin for 64-bit moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &BASES {
        let mut x = mod_pow(a, d, n) as u128;
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 1..r {
            x = x * x % n as u128;
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
