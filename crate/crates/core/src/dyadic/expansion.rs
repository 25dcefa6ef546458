use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::{Dyadic, DyadicError};

/// Binary expansion `±int_part.d_1 d_2 … d_k`, implicitly followed by zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryExpansion {
    pub negative: bool,
    pub int_part: BigUint,
    /// Fractional digits `d_1 … d_k`, each 0 or 1; the last one is 1.
    pub bits: Vec<u8>,
}

impl BinaryExpansion {
    pub fn of(x: &Dyadic) -> Self {
        let a = x.abs();
        let int_part = a.floor().to_biguint().expect("non-negative");
        let frac = &a - &Dyadic::integer(a.floor());
        let k = frac.exponent();
        let digits = frac.numerator().to_biguint().expect("non-negative");
        let bits = (0..k).rev().map(|i| digits.bit(i as u64) as u8).collect();
        BinaryExpansion { negative: x.is_negative(), int_part, bits }
    }

    pub fn value(&self) -> Dyadic {
        let frac = self.bits.iter().enumerate().fold(Dyadic::zero(), |acc, (i, &b)| {
            if b == 1 {
                &acc + &Dyadic::pow2(-(i as i64) - 1)
            } else {
                acc
            }
        });
        let v = &Dyadic::integer(BigInt::from(self.int_part.clone())) + &frac;
        if self.negative {
            -v
        } else {
            v
        }
    }

    /// Digit `d_index` (1-based) of the infinite expansion.
    pub fn bit(&self, index: usize) -> u8 {
        self.bits.get(index - 1).copied().unwrap_or(0)
    }
}

impl fmt::Display for BinaryExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "{}", self.int_part)?;
        if !self.bits.is_empty() {
            f.write_str(".")?;
            for b in &self.bits {
                write!(f, "{b}")?;
            }
        }
        Ok(())
    }
}

/// 1-based index of the `t`-th zero digit in the infinite binary expansion of
/// `d`, where `0 <= d < 1` and `t >= 1`.
pub fn zero_bit_index(d: &Dyadic, t: usize) -> Result<usize, DyadicError> {
    if d.is_negative() || *d >= Dyadic::one() {
        return Err(DyadicError::NotFractional(d.clone()));
    }
    assert!(t >= 1, "zero digits are counted from 1");
    let expansion = BinaryExpansion::of(d);
    let mut seen = 0;
    for (i, &b) in expansion.bits.iter().enumerate() {
        if b == 0 {
            seen += 1;
            if seen == t {
                return Ok(i + 1);
            }
        }
    }
    Ok(expansion.bits.len() + (t - seen))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlueRed {
    Blue,
    Red,
}

impl BlueRed {
    pub fn sign(self) -> i64 {
        match self {
            BlueRed::Blue => 1,
            BlueRed::Red => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            BlueRed::Blue => BlueRed::Red,
            BlueRed::Red => BlueRed::Blue,
        }
    }
}

/// A blue-red hackenbush string read bottom to top, which is also the
/// signed binary expansion of its value: the leading run of equal edges is
/// the integer part and every later edge `i` adds `±2^-i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ColorString(pub Vec<BlueRed>);

impl ColorString {
    pub fn new(digits: Vec<BlueRed>) -> Self {
        ColorString(digits)
    }

    pub fn digits(&self) -> &[BlueRed] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self) -> Dyadic {
        let Some(&first) = self.0.first() else {
            return Dyadic::zero();
        };
        let run = self.0.iter().take_while(|&&c| c == first).count();
        let mut v = Dyadic::integer(first.sign() * run as i64);
        for (i, c) in self.0[run..].iter().enumerate() {
            v = &v + &Dyadic::new(c.sign(), i as u32 + 1);
        }
        v
    }

    /// The unique string whose value is `x`.
    pub fn from_value(x: &Dyadic) -> Self {
        if x.is_zero() {
            return ColorString::default();
        }
        if x.is_negative() {
            return ColorString(ColorString::from_value(&-x).0.into_iter().map(BlueRed::flip).collect());
        }
        let ceil = x.ceil();
        let run: usize = ceil.clone().try_into().expect("integer part fits in memory");
        let mut digits = vec![BlueRed::Blue; run];
        let mut rest = x - &Dyadic::integer(ceil);
        let mut i = 1;
        while !rest.is_zero() {
            let step = Dyadic::new(BigInt::one(), i);
            if rest.is_negative() {
                digits.push(BlueRed::Red);
                rest = &rest + &step;
            } else {
                digits.push(BlueRed::Blue);
                rest = &rest - &step;
            }
            i += 1;
        }
        ColorString(digits)
    }
}

impl fmt::Display for ColorString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            f.write_str(match c {
                BlueRed::Blue => "B",
                BlueRed::Red => "R",
            })?;
        }
        Ok(())
    }
}

/// Words over `{B, R}`, case-insensitive.
impl FromStr for ColorString {
    type Err = DyadicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|c| match c {
                'B' | 'b' => Ok(BlueRed::Blue),
                'R' | 'r' => Ok(BlueRed::Red),
                _ => Err(DyadicError::Parse(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ColorString)
    }
}

pub fn string_value(s: &ColorString) -> Dyadic {
    s.value()
}

pub fn value_to_string(x: &Dyadic) -> ColorString {
    ColorString::from_value(x)
}
