//! Exact scalars: rationals or a prime field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{GdqError, Result};

pub type Scalar = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    /// `0` selects the rationals, anything else must be prime.
    pub fn from_characteristic(p: u64) -> Result<Field> {
        match p {
            0 => Ok(Field::Rational),
            p if is_prime(p) => Ok(Field::Prime(p)),
            p => Err(GdqError::invalid(format!("field characteristic {p} is not prime"))),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn normalize(self, x: Scalar) -> Scalar {
        match self {
            Field::Rational => x,
            Field::Prime(p) => {
                let p = BigInt::from(p);
                let num = x.numer().mod_floor(&p);
                let den = x.denom().mod_floor(&p);
                let inv = mod_inverse(&den, &p).expect("denominator divisible by the characteristic");
                BigRational::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    pub fn from_int(self, n: i64) -> Scalar {
        self.normalize(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero(self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(self) -> Scalar {
        self.normalize(Scalar::one())
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a + b)
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a - b)
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a * b)
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        self.normalize(-a)
    }

    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            None
        } else {
            Some(self.normalize(a.recip()))
        }
    }

    /// Parses an integer or `num/den` and reduces it into the field.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let bad = || GdqError::invalid(format!("bad scalar `{s}`"));
        let value = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                if let Field::Prime(p) = self {
                    if (&d % BigInt::from(p)).is_zero() {
                        return Err(bad());
                    }
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
        };
        Ok(self.normalize(value))
    }

    pub fn format_scalar(self, x: &Scalar) -> String {
        if x.is_integer() {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(p);
    if e.gcd.abs().is_one() {
        Some((e.x * e.gcd.signum()).mod_floor(p))
    } else {
        None
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
