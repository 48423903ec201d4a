//! Exact scalars and projective ratios.
//!
//! Every signed ratio `|BD| / |DC|` is stored as a projective pair `(p : q)`,
//! so the three edge conventions need no special cases:
//!
//! * `(0 : 1)` is the ratio of a point sitting on the first endpoint,
//! * `(1 : 0)` is infinity, the point sitting on the second endpoint,
//! * `(-1 : 1)` is the point at infinity of the edge-line.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// A signed ratio on the projective line.
///
/// Canonical form: `gcd(|p|, |q|) = 1` and either `q > 0`, or `q = 0` and
/// `p = 1`. Equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjRatio {
    p: BigInt,
    q: BigInt,
}

/// Result of [`ProjRatio::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatioValue {
    Finite(Rational),
    Infinite,
}

impl ProjRatio {
    /// Builds the canonical ratio `p / q`. Fails only for `(0, 0)`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::InvalidRatio);
        }
        if q.is_zero() {
            return Ok(Self::infinity());
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        Ok(Self { p, q })
    }

    pub fn zero() -> Self {
        Self {
            p: BigInt::zero(),
            q: BigInt::one(),
        }
    }

    pub fn infinity() -> Self {
        Self {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    /// The ratio of the point at infinity on an edge-line.
    pub fn minus_one() -> Self {
        Self::integer(-1)
    }

    pub fn integer(n: i64) -> Self {
        Self {
            p: BigInt::from(n),
            q: BigInt::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self {
            p: r.numer().clone(),
            q: r.denom().clone(),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    pub fn classify(&self) -> RatioValue {
        match self.to_rational() {
            Some(r) => RatioValue::Finite(r),
            None => RatioValue::Infinite,
        }
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_infinite() {
            None
        } else {
            Some(Rational::new(self.p.clone(), self.q.clone()))
        }
    }
}

impl fmt::Display for ProjRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else if self.q.is_one() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for ProjRatio {
    type Err = Error;

    /// Grammar: `integer | integer "/" positive-integer | "inf" | "-inf"`.
    fn from_str(text: &str) -> Result<Self> {
        if text == "inf" || text == "-inf" {
            return Ok(Self::infinity());
        }
        let (p, q) = parse_fraction_parts(text)?;
        Self::new(p, q)
    }
}

/// Parses the textual ratio grammar.
pub fn parse_ratio(text: &str) -> Result<ProjRatio> {
    text.parse()
}

/// Parses a finite exact number (`integer` or `integer/positive-integer`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let (p, q) = parse_fraction_parts(text)?;
    if q.is_zero() {
        return Err(Error::InvalidRatio);
    }
    Ok(Rational::new(p, q))
}

/// Renders a rational in the same grammar `parse_rational` accepts.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_fraction_parts(text: &str) -> Result<(BigInt, BigInt)> {
    let bad = || Error::Parse(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if !is_digits(digits) {
        return Err(bad());
    }
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q = match den {
        None => BigInt::one(),
        Some(d) => {
            if !is_digits(d) {
                return Err(bad());
            }
            let q: BigInt = d.parse().map_err(|_| bad())?;
            if q.is_zero() {
                // "0/0" names nothing; "p/0" is outside the grammar (spell it "inf").
                return Err(if p.is_zero() {
                    Error::InvalidRatio
                } else {
                    bad()
                });
            }
            q
        }
    };
    Ok((p, q))
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}
