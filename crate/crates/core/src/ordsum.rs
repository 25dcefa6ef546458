//! Closed-form ordinal sums of numbers.
//!
//! Two kinds of base occur. A base in canonical form (a blue-red string) is
//! handled by [`van_roode`]. A base with the literal form `{x|}` or `{|x}`
//! is handled by [`eval_base`], which is exact for every `x` and `w`, and by
//! the bit-level fast path [`main2`], which is only valid for `floor(x) >= -1`.
//! Right-sided and negative cases are always computed through negation.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::dyadic::{simplest_between, simplest_gt, zero_bit_index, BlueRed, ColorString, Dyadic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdsumError {
    #[error("the base of a string ordinal sum must be non-zero")]
    ZeroBase,
    #[error("{0} is outside [0, 1)")]
    NotFractional(Dyadic),
    #[error("{what} must be negative, got {value}")]
    NotNegative { what: &'static str, value: i64 },
    #[error("{d} must lie strictly between 0 and 1")]
    NotProperFraction { d: Dyadic },
    #[error("closed formula needs floor(x) >= -1, got {n}")]
    OutOfDomain { n: BigInt },
    #[error("empty chain")]
    EmptyChain,
    #[error("{0} is too large for the closed formula")]
    TooLarge(String),
}

/// Which side the single option of a `{x|}` / `{|x}` base sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseSide {
    /// `{x|}`
    LeftOnly,
    /// `{|x}`
    RightOnly,
}

impl BaseSide {
    pub fn flip(self) -> Self {
        match self {
            BaseSide::LeftOnly => BaseSide::RightOnly,
            BaseSide::RightOnly => BaseSide::LeftOnly,
        }
    }
}

impl From<BlueRed> for BaseSide {
    fn from(c: BlueRed) -> Self {
        match c {
            BlueRed::Blue => BaseSide::LeftOnly,
            BlueRed::Red => BaseSide::RightOnly,
        }
    }
}

/// One base `{x|}` or `{|x}` of an iterated ordinal sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainLink {
    pub side: BaseSide,
    pub x: Dyadic,
}

impl ChainLink {
    pub fn new(side: BaseSide, x: Dyadic) -> Self {
        ChainLink { side, x }
    }
}

fn small(x: &BigInt) -> Result<i64, OrdsumError> {
    x.to_i64().filter(|v| v.unsigned_abs() < 1 << 20).ok_or_else(|| OrdsumError::TooLarge(x.to_string()))
}

fn check_fraction(d: &Dyadic) -> Result<(), OrdsumError> {
    if d.is_negative() || *d >= Dyadic::one() {
        Err(OrdsumError::NotFractional(d.clone()))
    } else {
        Ok(())
    }
}

/// Value of `S_g : S_h` where `S_v` is the blue-red string of value `v`.
pub fn van_roode(g: &Dyadic, h: &Dyadic) -> Result<Dyadic, OrdsumError> {
    if g.is_zero() {
        return Err(OrdsumError::ZeroBase);
    }
    if g.is_negative() {
        return van_roode(&-g, &-h).map(|v| -v);
    }
    if h.is_zero() {
        return Ok(g.clone());
    }
    let base = g.ceil_decomp();
    let j = base.j as i64;
    if h.is_positive() {
        if base.d.is_zero() {
            return Ok(g + h);
        }
        let sub = h.ceil_decomp();
        let m = small(&sub.n)?;
        let tail = &(&Dyadic::pow2(m) - &Dyadic::one()) + &sub.d;
        Ok(g + &tail.shift(-(j + m)))
    } else {
        let sub = h.floor_decomp();
        let m = small(&sub.n)?.abs();
        let tail = &(&Dyadic::one() - &Dyadic::pow2(m)) + &sub.d;
        Ok(g + &tail.shift(-(j + m)))
    }
}

/// Value of `{d|} : m` for `0 <= d < 1` and an integer `m`.
pub fn empty_base_int(d: &Dyadic, m: i64) -> Result<Dyadic, OrdsumError> {
    check_fraction(d)?;
    if m >= 0 {
        return Ok(Dyadic::integer(m + 1));
    }
    if d.is_zero() {
        return Ok(Dyadic::pow2(m));
    }
    // keep d_1 … d_{j-1}, then a 1 where the |m|-th zero digit was
    let j = zero_bit_index(d, m.unsigned_abs() as usize).expect("checked fraction") as i64;
    let prefix = Dyadic::new(d.shift(j - 1).floor(), (j - 1) as u32);
    Ok(&prefix + &Dyadic::pow2(-j))
}

/// The same value as [`empty_base_int`], read off the signed binary
/// expansion of `d` (`0 < d < 1`, `m < 0`).
pub fn empty_base_int_signed(d: &Dyadic, m: i64) -> Result<ColorString, OrdsumError> {
    if !d.is_positive() || *d >= Dyadic::one() {
        return Err(OrdsumError::NotProperFraction { d: d.clone() });
    }
    if m >= 0 {
        return Err(OrdsumError::NotNegative { what: "m", value: m });
    }
    let target = m.unsigned_abs() as usize + 1;
    let digits = ColorString::from_value(d).0;
    // digits[0] is the integer-part blue edge; fractional digits follow
    let reds: Vec<usize> = (1..digits.len()).filter(|&i| digits[i] == BlueRed::Red).collect();
    let mut out = digits.clone();
    if reds.len() >= target {
        out.truncate(reds[target - 1]);
    } else {
        out.push(BlueRed::Blue);
        out.extend(std::iter::repeat_n(BlueRed::Red, target - 1 - reds.len()));
    }
    Ok(ColorString(out))
}

/// `n + k/2^j + d'/2^j` where `k/2^j = {d|}:m` in lowest terms. This is the
/// bare formula with no domain check: for `n <= -2` it does not give the
/// value of `{n+d|}:(m+d')`.
pub fn main2_formula(n: i64, d: &Dyadic, m: i64, d2: &Dyadic) -> Result<Dyadic, OrdsumError> {
    check_fraction(d2)?;
    let inner = empty_base_int(d, m)?;
    let j = inner.exponent() as i64;
    Ok(&(&Dyadic::integer(n) + &inner) + &d2.shift(-j))
}

/// Value of `{n+d|} : (m+d')`, restricted to `n >= -1` where the closed
/// formula is exact.
pub fn main2(n: i64, d: &Dyadic, m: i64, d2: &Dyadic) -> Result<Dyadic, OrdsumError> {
    if n < -1 {
        return Err(OrdsumError::OutOfDomain { n: BigInt::from(n) });
    }
    main2_formula(n, d, m, d2)
}

/// Closed-form value of `{x|}:w` or `{|x}:w` via [`main2`], mirrored for
/// Right-only bases. Fails outside the formula's domain.
pub fn fast_path(x: &Dyadic, side: BaseSide, w: &Dyadic) -> Result<Dyadic, OrdsumError> {
    match side {
        BaseSide::RightOnly => fast_path(&-x, BaseSide::LeftOnly, &-w).map(|v| -v),
        BaseSide::LeftOnly => {
            let base = x.floor_decomp();
            if base.n < BigInt::from(-1) {
                return Err(OrdsumError::OutOfDomain { n: base.n });
            }
            let sub = w.floor_decomp();
            main2(small(&base.n)?, &base.d, small(&sub.n)?, &sub.d)
        }
    }
}

/// Exact value of `{x|}:w` (or `{|x}:w`) for any numbers `x` and `w`.
///
/// Walks the canonical form of `w` from 0 along its birthday path. Each
/// point `v` on the path has as canonical options the tightest ancestors
/// below and above it, so `{x|}:v = { x, {x|}:v^L | {x|}:v^R }`, which is a
/// number and is settled by the simplicity rule.
pub fn eval_base(x: &Dyadic, side: BaseSide, w: &Dyadic) -> Dyadic {
    if side == BaseSide::RightOnly {
        return -eval_base(&-x, BaseSide::LeftOnly, &-w);
    }
    let origin = Dyadic::zero();
    let at_origin = simplest_gt(x);
    if *w == origin {
        return at_origin;
    }
    // (point, value of {x|}:point) for the tightest ancestors of w so far
    let mut below: Option<(Dyadic, Dyadic)> = None;
    let mut above: Option<(Dyadic, Dyadic)> = None;
    if *w > origin {
        below = Some((origin, at_origin));
    } else {
        above = Some((origin, at_origin));
    }
    loop {
        let point = match (&below, &above) {
            (Some((lo, _)), None) => lo + &Dyadic::one(),
            (None, Some((hi, _))) => hi - &Dyadic::one(),
            (Some((lo, _)), Some((hi, _))) => (lo + hi).shift(-1),
            (None, None) => unreachable!("one side is always bracketed"),
        };
        let floor = match &below {
            Some((_, v)) if v > x => v.clone(),
            _ => x.clone(),
        };
        let value = simplest_between(Some(&floor), above.as_ref().map(|(_, v)| v))
            .expect("ordinal sum with a number base and number subordinate is a number");
        match point.cmp(w) {
            std::cmp::Ordering::Equal => return value,
            std::cmp::Ordering::Less => below = Some((point, value)),
            std::cmp::Ordering::Greater => above = Some((point, value)),
        }
    }
}

/// Value of `M_1 : (M_2 : ( … : M_n))` for bases `M_i = {x_i|}` or `{|x_i}`.
pub fn eval_chain(links: &[ChainLink]) -> Result<Dyadic, OrdsumError> {
    if links.is_empty() {
        return Err(OrdsumError::EmptyChain);
    }
    Ok(links.iter().rev().fold(Dyadic::zero(), |w, link| eval_base(&link.x, link.side, &w)))
}

/// Integer `n` such that `{x|}`'s fast path needs `n >= -1`; exposed for
/// reporting.
pub fn base_floor(x: &Dyadic, side: BaseSide) -> BigInt {
    match side {
        BaseSide::LeftOnly => x.floor(),
        BaseSide::RightOnly => (-x).floor(),
    }
}
