//! Where the scalars live: rational functions in `s = q^{1/2}` (generic `q`),
//! or Gaussian rationals at a fixed rational `q0 > 0`, `q0 != 1`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalars::{qbrace, qint, Field, GaussRat, RatFunc};

use super::IndError;

pub const DEFAULT_N_MAX: u32 = 64;

pub trait QDomain: Clone + fmt::Debug + Send + Sync + 'static {
    type S: Field;

    fn q_pow(&self, k: i64) -> Self::S;

    /// Image of an algebra coefficient.
    fn embed(&self, c: &RatFunc) -> Result<Self::S, IndError>;

    /// `Some((sigma, k))` iff `lambda = sigma q^k` exactly. Concrete domains
    /// search `|k| <= n_max` and report `SearchBoundExceeded` past it.
    fn power_of_q(&self, lambda: &Self::S, n_max: u32) -> Result<Option<(i8, i64)>, IndError>;

    fn qint(&self, n: i64) -> Self::S {
        let d = self.q_pow(1).sub(&self.q_pow(-1));
        self.q_pow(n)
            .sub(&self.q_pow(-n))
            .div(&d)
            .expect("q is not 1")
    }

    fn qbrace(&self, n: i64) -> Self::S {
        self.q_pow(n).add(&self.q_pow(-n))
    }
}

/// `q` is an indeterminate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Generic;

impl QDomain for Generic {
    type S = RatFunc;

    fn q_pow(&self, k: i64) -> RatFunc {
        RatFunc::q_pow(k)
    }

    fn embed(&self, c: &RatFunc) -> Result<RatFunc, IndError> {
        Ok(c.clone())
    }

    fn power_of_q(&self, lambda: &RatFunc, _n_max: u32) -> Result<Option<(i8, i64)>, IndError> {
        let Some(p) = lambda.as_laurent() else {
            return Ok(None);
        };
        let [(e, c)] = p.terms() else { return Ok(None) };
        if e % 2 != 0 || !c.im.is_zero() {
            return Ok(None);
        }
        let sigma = if c.is_one() {
            1
        } else if (-c).is_one() {
            -1
        } else {
            return Ok(None);
        };
        Ok(Some((sigma, e / 2)))
    }

    fn qint(&self, n: i64) -> RatFunc {
        qint(n)
    }

    fn qbrace(&self, n: i64) -> RatFunc {
        qbrace(n)
    }
}

/// `q = q0`, a positive rational other than 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtQ {
    q0: BigRational,
}

impl AtQ {
    pub fn new(q0: BigRational) -> Result<Self, IndError> {
        if !q0.is_positive() || q0.is_one() {
            return Err(IndError::InvalidQ);
        }
        Ok(AtQ { q0 })
    }

    pub fn q0(&self) -> &BigRational {
        &self.q0
    }

    /// `min(q0, 1/q0)`
    pub fn q_min(&self) -> BigRational {
        if self.q0 > BigRational::one() {
            self.q0.recip()
        } else {
            self.q0.clone()
        }
    }
}

fn rat_pow(r: &BigRational, k: i64) -> BigRational {
    let base = if k < 0 { r.recip() } else { r.clone() };
    let mut acc = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl QDomain for AtQ {
    type S = GaussRat;

    fn q_pow(&self, k: i64) -> GaussRat {
        GaussRat::real(rat_pow(&self.q0, k))
    }

    fn embed(&self, c: &RatFunc) -> Result<GaussRat, IndError> {
        Ok(c.eval_q(&self.q0)?)
    }

    fn power_of_q(&self, lambda: &GaussRat, n_max: u32) -> Result<Option<(i8, i64)>, IndError> {
        if !lambda.im.is_zero() || lambda.re.is_zero() {
            return Ok(None);
        }
        let sigma = if lambda.re.is_negative() { -1 } else { 1 };
        let a = lambda.re.abs();
        if a.is_one() {
            return Ok(Some((sigma, 0)));
        }
        // Search in the base r = max(q0, 1/q0) > 1, with target >= 1.
        let up = self.q0 > BigRational::one();
        let r = if up { self.q0.clone() } else { self.q0.recip() };
        let (target, flip) = if a > BigRational::one() {
            (a, false)
        } else {
            (a.recip(), true)
        };
        let mut p = BigRational::one();
        for k in 1..=n_max as i64 {
            p *= &r;
            if p == target {
                let k = if flip { -k } else { k };
                return Ok(Some((sigma, if up { k } else { -k })));
            }
            if p > target {
                return Ok(None);
            }
        }
        Err(IndError::SearchBoundExceeded(n_max))
    }
}
