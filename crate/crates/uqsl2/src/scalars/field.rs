//! A small field interface so module computations can run either over the
//! rational functions in `s` or over Gaussian rationals at a fixed `q`.

use std::fmt;

use super::{GaussRat, RatFunc};

pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Complex conjugation of coefficients (`q` is real).
    fn star(&self) -> Self;

    fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inv()?))
    }

    fn is_one(&self) -> bool {
        self.sub(&Self::one()).is_zero()
    }

    /// Whether `sum_i prod_j terms[i][j]` vanishes.
    fn sum_of_products_is_zero(terms: &[Vec<Self>]) -> bool {
        terms
            .iter()
            .fold(Self::zero(), |acc, t| {
                acc.add(&t.iter().fold(Self::one(), |p, f| p.mul(f)))
            })
            .is_zero()
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_int(n: i64) -> Self {
        RatFunc::from_int(n)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
    fn star(&self) -> Self {
        RatFunc::star(self)
    }
    fn sum_of_products_is_zero(terms: &[Vec<Self>]) -> bool {
        RatFunc::sum_of_products_is_zero(terms)
    }
}

impl Field for GaussRat {
    fn zero() -> Self {
        GaussRat::zero()
    }
    fn one() -> Self {
        GaussRat::one()
    }
    fn from_int(n: i64) -> Self {
        GaussRat::from_int(n)
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        GaussRat::inv(self)
    }
    fn star(&self) -> Self {
        self.conj()
    }
}
