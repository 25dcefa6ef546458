//! Exact dyadic rationals `k / 2^j`.
//!
//! Every number-valued game in this crate takes its value here. Values are
//! kept in normal form (`exponent == 0` or odd numerator), so derived
//! equality and hashing coincide with equality of the rational value.

mod expansion;
mod simplicity;

pub use expansion::{string_value, value_to_string, zero_bit_index, BinaryExpansion, BlueRed, ColorString};
pub use simplicity::{simplest_between, simplest_gt, simplest_lt};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyadicError {
    #[error("empty interval: {lo} is not below {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("cannot parse {0:?} as a dyadic rational")]
    Parse(String),
    #[error("denominator of {0:?} is not a power of two")]
    NotDyadic(String),
    #[error("{0} is outside the unit interval [0, 1)")]
    NotFractional(Dyadic),
}

/// The rational `numerator / 2^exponent`, always in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigInt,
    exponent: u32,
}

impl Dyadic {
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Self {
        let mut numerator = numerator.into();
        let mut exponent = exponent;
        if numerator.is_zero() {
            exponent = 0;
        } else {
            let twos = numerator.trailing_zeros().unwrap_or(0).min(exponent as u64) as u32;
            numerator >>= twos;
            exponent -= twos;
        }
        Dyadic { numerator, exponent }
    }

    pub fn zero() -> Self {
        Dyadic::new(0, 0)
    }

    pub fn one() -> Self {
        Dyadic::new(1, 0)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n, 0)
    }

    /// `2^power`, for positive or negative `power`.
    pub fn pow2(power: i64) -> Self {
        if power >= 0 {
            Dyadic::integer(BigInt::one() << power as usize)
        } else {
            Dyadic::new(1, (-power) as u32)
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exponent == 0
    }

    pub fn is_positive(&self) -> bool {
        self.numerator.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    pub fn abs(&self) -> Self {
        Dyadic { numerator: self.numerator.abs(), exponent: self.exponent }
    }

    pub fn floor(&self) -> BigInt {
        self.numerator.div_floor(&(BigInt::one() << self.exponent as usize))
    }

    pub fn ceil(&self) -> BigInt {
        self.numerator.div_ceil(&(BigInt::one() << self.exponent as usize))
    }

    /// Multiply by `2^power`.
    pub fn shift(&self, power: i64) -> Self {
        if power >= 0 {
            let p = power as u32;
            if p >= self.exponent {
                Dyadic::new(&self.numerator << (p - self.exponent) as usize, 0)
            } else {
                Dyadic::new(self.numerator.clone(), self.exponent - p)
            }
        } else {
            Dyadic::new(self.numerator.clone(), self.exponent + (-power) as u32)
        }
    }

    /// `n + d` with `n = floor(self)` and `0 <= d < 1`.
    pub fn floor_decomp(&self) -> FloorDecomp {
        let n = self.floor();
        let d = self - &Dyadic::integer(n.clone());
        FloorDecomp { n, d }
    }

    /// `n + d` with `n = ceil(self)`, `-1 < d <= 0` and `d = -k/2^j`.
    pub fn ceil_decomp(&self) -> CeilDecomp {
        let n = self.ceil();
        let d = self - &Dyadic::integer(n.clone());
        let j = d.exponent;
        CeilDecomp { n, d, j }
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator.to_f64().unwrap_or(f64::NAN) / 2f64.powi(self.exponent as i32)
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, u32) {
        let e = self.exponent.max(other.exponent);
        (&self.numerator << (e - self.exponent) as usize, &other.numerator << (e - other.exponent) as usize, e)
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FloorDecomp {
    pub n: BigInt,
    pub d: Dyadic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CeilDecomp {
    pub n: BigInt,
    pub d: Dyadic,
    pub j: u32,
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a + b, e)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a - b, e)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.numerator * &rhs.numerator, self.exponent + rhs.exponent)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { numerator: -&self.numerator, exponent: self.exponent }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $method(self, rhs: Dyadic) -> Dyadic {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::integer(n)
    }
}

impl From<BigInt> for Dyadic {
    fn from(n: BigInt) -> Self {
        Dyadic::integer(n)
    }
}

/// Prints `k` for integers and `k/2^j` (with the power expanded) otherwise.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, BigInt::one() << self.exponent as usize)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `k`, `k/m` with `m` a power of two, and `k/2^j`.
impl FromStr for Dyadic {
    type Err = DyadicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || DyadicError::Parse(s.to_string());
        let parse_int = |x: &str| -> Result<BigInt, DyadicError> {
            let x = x.trim();
            let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse::<BigInt>().map_err(|_| bad())
        };
        match t.split_once('/') {
            None => Ok(Dyadic::integer(parse_int(t)?)),
            Some((num, den)) => {
                let num = parse_int(num)?;
                let den = den.trim();
                let exponent = if let Some(power) = den.strip_prefix("2^") {
                    power.parse::<u32>().map_err(|_| bad())?
                } else {
                    let den = parse_int(den)?;
                    if !den.is_positive() {
                        return Err(bad());
                    }
                    let tz = den.trailing_zeros().unwrap_or(0);
                    if den != BigInt::one() << tz as usize {
                        return Err(DyadicError::NotDyadic(s.to_string()));
                    }
                    tz as u32
                };
                Ok(Dyadic::new(num, exponent))
            }
        }
    }
}

#[cfg(test)]
pub(crate) fn dy(s: &str) -> Dyadic {
    s.parse().unwrap()
}
