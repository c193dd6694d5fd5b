//! Exact coefficient arithmetic: Gaussian rationals, Laurent polynomials and
//! rational functions in `s = q^{1/2}`, q-integers, and jets at `q = 1`.

mod field;
mod gauss;
mod jet;
mod laurent;
mod modgcd;
mod ratfunc;
mod sturm;

pub use field::Field;
pub use gauss::GaussRat;
pub use jet::{jet_of, Jet};
pub use laurent::HalfLaurent;
pub use ratfunc::{rat, rational_sqrt, RatFunc};

use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("odd powers of q^(1/2) need a rational square root of q")]
    IrrationalSqrt,
    #[error("q must be a positive rational")]
    NonPositiveQ,
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor jet is indistinguishable from zero at this order")]
    DivisorIndistinguishableFromZero,
    #[error("negative valuation: pole at q = 1")]
    NegativeValuation,
}

/// The symmetric q-integer `(q^n - q^{-n}) / (q - q^{-1})`.
pub fn qint(n: i64) -> RatFunc {
    let m = n.unsigned_abs() as i64;
    let sign = if n < 0 {
        -GaussRat::one()
    } else {
        GaussRat::one()
    };
    // q^{m-1} + q^{m-3} + ... + q^{1-m}, in powers of s
    let terms = (0..m).map(|k| (2 * (m - 1 - 2 * k), sign.clone()));
    RatFunc::from_laurent(HalfLaurent::from_terms(terms))
}

/// `q^n + q^{-n}`.
pub fn qbrace(n: i64) -> RatFunc {
    RatFunc::from_laurent(HalfLaurent::from_terms([
        (2 * n, GaussRat::one()),
        (-2 * n, GaussRat::one()),
    ]))
}

pub fn star(x: &RatFunc) -> RatFunc {
    x.star()
}

pub fn eval_q(x: &RatFunc, q0: &BigRational) -> Result<GaussRat, ScalarError> {
    x.eval_q(q0)
}

pub fn pole_free_on_positive_axis(x: &RatFunc) -> bool {
    x.pole_free_on_positive_axis()
}

pub fn jet_exp(c: &GaussRat, order: usize) -> Jet {
    Jet::exp(c, order)
}

pub fn jet_mul(a: &Jet, b: &Jet) -> Jet {
    a.mul(b)
}

pub fn jet_div(a: &Jet, b: &Jet) -> Result<Jet, ScalarError> {
    a.div(b)
}

pub fn jet_add(a: &Jet, b: &Jet) -> Jet {
    a.add(b)
}

pub fn jet_const_term(j: &Jet) -> Result<GaussRat, ScalarError> {
    j.const_term()
}
