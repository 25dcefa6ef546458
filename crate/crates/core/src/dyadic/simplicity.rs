use num_bigint::BigInt;
use num_traits::One;

use super::{Dyadic, DyadicError};

/// The simplest number strictly between `lo` and `hi`; `None` stands for
/// an infinite bound on that side.
///
/// If the open interval holds an integer, the one closest to zero wins.
/// Otherwise the interval sits inside `[n, n + 1]` for some integer `n` and
/// the answer is the dyadic with the fewest fractional bits, found by
/// refining the grid `2^-k` until a grid point lands strictly inside.
pub fn simplest_between(lo: Option<&Dyadic>, hi: Option<&Dyadic>) -> Result<Dyadic, DyadicError> {
    if let (Some(l), Some(h)) = (lo, hi) {
        if l >= h {
            return Err(DyadicError::EmptyInterval { lo: l.to_string(), hi: h.to_string() });
        }
    }
    let zero = Dyadic::zero();
    let above_zero = lo.is_some_and(|l| *l >= zero);
    let below_zero = hi.is_some_and(|h| *h <= zero);
    if !above_zero && !below_zero {
        return Ok(zero);
    }
    if below_zero {
        let neg_lo = hi.map(|h| -h);
        let neg_hi = lo.map(|l| -l);
        return simplest_between(neg_lo.as_ref(), neg_hi.as_ref()).map(|x| -x);
    }
    // 0 <= lo < hi
    let lo = lo.expect("lower bound present when interval is non-negative");
    let next_int = Dyadic::integer(lo.floor() + BigInt::one());
    match hi {
        Some(h) if next_int >= *h => {}
        _ => return Ok(next_int),
    }
    let hi = hi.expect("checked above");
    let mut k = 1u32;
    loop {
        let candidate = Dyadic::new(lo.shift(k as i64).floor() + BigInt::one(), k);
        if candidate < *hi {
            return Ok(candidate);
        }
        k += 1;
    }
}

/// Simplest number above `lo`: 0 when `lo` is negative, else `floor(lo) + 1`.
pub fn simplest_gt(lo: &Dyadic) -> Dyadic {
    simplest_between(Some(lo), None).expect("half-line is never empty")
}

/// Mirror of [`simplest_gt`].
pub fn simplest_lt(hi: &Dyadic) -> Dyadic {
    simplest_between(None, Some(hi)).expect("half-line is never empty")
}
