//! Rational enclosures of `log r` and `pi`, used to certify
//! `|log q| |Im lambda| < pi` without floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

const MAX_TERMS: usize = 512;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `lo <= log x <= hi` for `x > 1`, from `log x = 2 atanh(u)`, `u = (x-1)/(x+1)`,
/// summing `terms` terms; the tail is bounded by a geometric series.
pub fn log_bounds(x: &BigRational, terms: usize) -> (BigRational, BigRational) {
    assert!(*x > BigRational::one(), "log_bounds needs x > 1");
    let one = BigRational::one();
    let u = (x - &one) / (x + &one);
    let u2 = &u * &u;
    let mut pw = u.clone();
    let mut sum = BigRational::zero();
    for k in 0..terms {
        sum += &pw / BigRational::from_integer(BigInt::from(2 * k + 1));
        pw = &pw * &u2;
    }
    let tail = &pw / (BigRational::from_integer(BigInt::from(2 * terms + 1)) * (&one - &u2));
    let two = r(2, 1);
    (&two * &sum, &two * (sum + tail))
}

/// `atan(1/m)` enclosed by consecutive partial sums of its alternating series.
fn atan_inv_bounds(m: i64, terms: usize) -> (BigRational, BigRational) {
    let x = r(1, m);
    let x2 = &x * &x;
    let mut pw = x.clone();
    let mut sum = BigRational::zero();
    for k in 0..terms {
        let t = &pw / BigRational::from_integer(BigInt::from(2 * k + 1));
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        pw = &pw * &x2;
    }
    let next = &pw / BigRational::from_integer(BigInt::from(2 * terms + 1));
    (&sum - &next, &sum + &next)
}

/// `lo < pi < hi` from `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi_bounds(terms: usize) -> (BigRational, BigRational) {
    let (a_lo, a_hi) = atan_inv_bounds(5, terms);
    let (b_lo, b_hi) = atan_inv_bounds(239, terms);
    (
        r(16, 1) * &a_lo - r(4, 1) * &b_hi,
        r(16, 1) * &a_hi - r(4, 1) * &b_lo,
    )
}

/// Certifies `|log q0| * |im| < pi`. Returns `false` when the inequality fails
/// or cannot be decided within the working precision.
pub fn hypothesis_holds(q0: &BigRational, im: &BigRational) -> bool {
    if im.is_zero() || q0.is_one() {
        return true;
    }
    let x = if *q0 > BigRational::one() {
        q0.clone()
    } else {
        q0.recip()
    };
    let v = im.abs();
    let mut terms = 4;
    while terms <= MAX_TERMS {
        let (l_lo, l_hi) = log_bounds(&x, terms);
        let (p_lo, p_hi) = pi_bounds(terms);
        if &l_hi * &v < p_lo {
            return true;
        }
        if &l_lo * &v > p_hi {
            return false;
        }
        terms *= 2;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_enclosure() {
        let (lo, hi) = pi_bounds(10);
        assert!(lo < hi);
        assert!(lo > r(314159, 100000) && hi < r(314160, 100000));
    }

    #[test]
    fn log_enclosure() {
        // log 2 = 0.693147180...
        let (lo, hi) = log_bounds(&r(2, 1), 20);
        assert!(lo > r(693147, 1000000) && hi < r(693148, 1000000));
        let (lo, hi) = log_bounds(&r(2, 1), 1);
        assert!(lo < r(693148, 1000000) && hi > r(693147, 1000000));
    }

    #[test]
    fn hypothesis() {
        // log 2 * 4 = 2.77 < pi; log 2 * 5 = 3.47 > pi
        assert!(hypothesis_holds(&r(2, 1), &r(4, 1)));
        assert!(!hypothesis_holds(&r(2, 1), &r(5, 1)));
        assert!(hypothesis_holds(&r(1, 2), &r(-4, 1)));
        assert!(hypothesis_holds(&r(1000, 1), &BigRational::zero()));
        // pi / log 2 = 4.5323...
        assert!(hypothesis_holds(&r(2, 1), &r(4532, 1000)));
        assert!(!hypothesis_holds(&r(2, 1), &r(4533, 1000)));
    }
}
