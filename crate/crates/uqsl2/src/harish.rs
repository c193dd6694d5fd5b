//! The Casimir element, centrality, the abelianization map and the
//! Harish-Chandra map onto symmetric Laurent polynomials in `t`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

use crate::pbw::{commutator, multiply1, Gen, Pbw1Element, Pbw1Monomial};
use crate::scalars::{GaussRat, RatFunc, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarishError {
    #[error("element has theta-dependent monomials")]
    NotInCoidealPart,
    #[error("element is not central")]
    NotCentral,
    #[error("image is not invariant under t -> 1/t")]
    NotInvariant,
    #[error("character parameter must be invertible")]
    NotInvertible,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Laurent polynomial in `t` with rational-function coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TLaurent {
    terms: BTreeMap<i64, RatFunc>,
}

impl TLaurent {
    pub fn add_term(&mut self, k: i64, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&k) {
            Some(x) => x + &c,
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, s);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, k: i64) -> RatFunc {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn mul(&self, o: &TLaurent) -> TLaurent {
        let mut out = TLaurent::default();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    /// Image under `t -> 1/t`.
    pub fn invert_t(&self) -> TLaurent {
        TLaurent {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn eval(&self, t: &RatFunc) -> Option<RatFunc> {
        let mut acc = RatFunc::zero();
        for (k, c) in &self.terms {
            acc += &(c * &t.pow(*k)?);
        }
        Some(acc)
    }
}

impl fmt::Display for TLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("({})*t^{}", c, k))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A central element together with `P` such that `element = P(Omega)`;
/// `polynomial[k]` is the coefficient of `Omega^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CenterWitness {
    pub element: Pbw1Element,
    pub polynomial: Vec<RatFunc>,
}

/// `q X + q^-1 Y + (q - q^-1) theta Z`.
pub fn casimir() -> Pbw1Element {
    let mut e = Pbw1Element::zero();
    e.add_term(Pbw1Monomial::new(0, -1, 0), RatFunc::q());
    e.add_term(Pbw1Monomial::new(0, 1, 0), RatFunc::q_pow(-1));
    e.add_term(Pbw1Monomial::new(1, 0, 1), RatFunc::delta());
    e
}

pub fn is_central(a: &Pbw1Element) -> bool {
    [Gen::Theta, Gen::X, Gen::Y, Gen::Z]
        .iter()
        .all(|g| commutator(a, &Pbw1Element::generator(*g)).is_zero())
}

/// `b_{n,m} -> delta_{m,0} t^{-n}`.
pub fn ab_map(a: &Pbw1Element) -> Result<TLaurent, HarishError> {
    let mut out = TLaurent::default();
    for (m, c) in a.terms() {
        if m.m1 > 0 {
            return Err(HarishError::NotInCoidealPart);
        }
        if m.m2 == 0 {
            out.add_term(-(m.n as i64), c.clone());
        }
    }
    Ok(out)
}

/// Drop theta-dependent monomials, apply `ab`, then substitute `t -> q^-1 t`.
pub fn gamma_tilde(a: &Pbw1Element) -> TLaurent {
    let mut out = TLaurent::default();
    for (m, c) in a.terms() {
        if m.m1 == 0 && m.m2 == 0 {
            let k = -(m.n as i64);
            out.add_term(k, c * &RatFunc::q_pow(-k));
        }
    }
    out
}

/// `P(Omega)` by Horner's scheme.
pub fn poly_in_casimir(p: &[RatFunc]) -> Pbw1Element {
    let omega = casimir();
    let mut acc = Pbw1Element::zero();
    for c in p.iter().rev() {
        acc = multiply1(&omega, &acc);
        acc.add_term(Pbw1Monomial::new(0, 0, 0), c.clone());
    }
    acc
}

fn trim(p: &mut Vec<RatFunc>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_add_scaled(acc: &mut Vec<RatFunc>, p: &[RatFunc], c: &RatFunc) {
    if acc.len() < p.len() {
        acc.resize(p.len(), RatFunc::zero());
    }
    for (k, x) in p.iter().enumerate() {
        acc[k] = &acc[k] + &(x * c);
    }
}

/// Polynomial `p_k` with `p_k(t + 1/t) = t^k + t^-k` (and `p_0 = 2`).
pub fn chebyshev_like(k: usize) -> Vec<RatFunc> {
    let mut prev = vec![RatFunc::from_int(2)];
    if k == 0 {
        return prev;
    }
    let mut cur = vec![RatFunc::zero(), RatFunc::one()];
    for _ in 1..k {
        let mut next = vec![RatFunc::zero()];
        next.extend(cur.iter().cloned());
        poly_add_scaled(&mut next, &prev, &RatFunc::from_int(-1));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Express a symmetric Laurent polynomial in the variable `u = t + 1/t`.
pub fn symmetric_to_poly(g: &TLaurent) -> Result<Vec<RatFunc>, HarishError> {
    if g.invert_t() != *g {
        return Err(HarishError::NotInvariant);
    }
    let mut out = vec![g.coeff(0)];
    for (k, c) in g.terms().range(1..) {
        poly_add_scaled(&mut out, &chebyshev_like(*k as usize), c);
    }
    trim(&mut out);
    Ok(out)
}

pub fn center_express(a: &Pbw1Element) -> Result<CenterWitness, HarishError> {
    if !is_central(a) {
        return Err(HarishError::NotCentral);
    }
    let p = symmetric_to_poly(&gamma_tilde(a))?;
    if !(a - &poly_in_casimir(&p)).is_zero() {
        // A central element with the same image would differ by a nonzero
        // central element in the kernel, which the isomorphism forbids.
        return Err(HarishError::NotInvariant);
    }
    Ok(CenterWitness {
        element: a.clone(),
        polynomial: p,
    })
}

/// Central character: the Harish-Chandra image evaluated at `t = lambda`.
pub fn ev_char(lambda: &RatFunc, a: &Pbw1Element) -> Result<RatFunc, HarishError> {
    if !is_central(a) {
        return Err(HarishError::NotCentral);
    }
    gamma_tilde(a)
        .eval(lambda)
        .ok_or(HarishError::NotInvertible)
}

/// Central character at a concrete `q = q0` and Gaussian-rational `lambda`.
pub fn ev_char_at(
    lambda: &GaussRat,
    q0: &BigRational,
    a: &Pbw1Element,
) -> Result<GaussRat, HarishError> {
    if !is_central(a) {
        return Err(HarishError::NotCentral);
    }
    if lambda.is_zero() {
        return Err(HarishError::NotInvertible);
    }
    let mut acc = GaussRat::zero();
    for (k, c) in gamma_tilde(a).terms() {
        acc += &(&c.eval_q(q0)? * &lambda.pow(*k).unwrap());
    }
    Ok(acc)
}
