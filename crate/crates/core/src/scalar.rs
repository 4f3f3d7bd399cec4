//! Exact field arithmetic over the rationals and over GF(p) for odd primes.
//!
//! Every scalar in the crate is either an arbitrary-precision reduced
//! fraction or a residue modulo an odd prime. There is no floating point
//! anywhere; GF(p) exists as a fast backend for fuzzing, while all the
//! headline verification runs over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field: exact rationals, or GF(p) with p an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Rational,
    Gfp { p: u64 },
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn rationals() -> Field {
        Field::Rational
    }

    /// GF(p). Characteristic 2 is rejected outright; the constructions all
    /// assume char != 2.
    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 {
            return Err(Error::Char2Rejected);
        }
        if !is_prime(p) {
            return Err(Error::EvenOrCompositeModulus(p));
        }
        Ok(Field::Gfp { p })
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Gfp { p } => Scalar::Fp {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// Parses `-?digits(/digits)?`. Over GF(p) the fraction is evaluated
    /// via a modular inverse.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num_str, den_str) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let num: BigInt = num_str
            .parse()
            .map_err(|_| Error::ParseError(text.to_string()))?;
        let den: BigInt = match den_str {
            Some(d) => {
                if d.starts_with('-') || d.starts_with('+') {
                    return Err(Error::ParseError(text.to_string()));
                }
                d.parse().map_err(|_| Error::ParseError(text.to_string()))?
            }
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        match *self {
            Field::Rational => Ok(Scalar::Q(BigRational::new(num, den))),
            Field::Gfp { p } => {
                let pm = BigInt::from(p);
                let n = num.mod_floor(&pm);
                let d = den.mod_floor(&pm);
                let n64 = u64::try_from(&n).unwrap();
                let d64 = u64::try_from(&d).unwrap();
                if d64 == 0 {
                    return Err(Error::ZeroDenominator);
                }
                let inv = mod_inverse(d64, p);
                Ok(Scalar::Fp {
                    v: mulmod(n64, inv, p),
                    p,
                })
            }
        }
    }
}

use num_integer::Integer;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p, p prime, a != 0.
    debug_assert!(a % p != 0);
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// An exact field element. Fractions are kept reduced with positive
/// denominator (num-rational canonicalizes on construction); GF(p)
/// residues live in 0..p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Gfp { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: p2 }) if p == p2 => Scalar::Fp {
                v: (a + b) % p,
                p: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (p - v) % p,
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: p2 }) if p == p2 => Scalar::Fp {
                v: mulmod(*a, *b, *p),
                p: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: mod_inverse(*v, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    /// Multiplication by 1/2; well defined since char != 2.
    pub fn half(&self) -> Scalar {
        self.div(&self.field().int(2)).unwrap()
    }

    pub fn render(&self) -> String {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }

    /// Small-magnitude probe for display decisions in the CLI.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
