//! The integral form of induced modules near `q = 1`: action coefficients as
//! jets in `h` (`q = e^h`, `Lambda = sigma e^{lambda h}`), their values at a
//! concrete `q`, the classical induced modules `I(eps, lambda)` and the
//! comparison of submodule lattices on both sides.

mod bounds;
mod classical;
#[cfg(test)]
mod tests;

pub use bounds::{hypothesis_holds, log_bounds, pi_bounds};
pub use classical::{
    classical_act, classical_classify, correspondence_check, ClassicalClassification,
    ClassicalModule, ClassicalOp, ClassicalSimple, Correspondence,
};

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::indmodule::IndError;
use crate::scalars::{GaussRat, Jet, ScalarError};

pub const DEFAULT_JET_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error("coefficient has a pole at q = 1")]
    PoleAtOne,
    #[error("|log q| |Im lambda| < pi could not be certified")]
    HypothesisViolated,
    #[error("q^lambda is not exactly representable for this lambda")]
    IrrationalParameter,
    #[error("K-type {0} has the wrong parity")]
    ParityMismatch(i64),
    #[error("jet order must be at least 2")]
    OrderTooSmall,
    #[error(transparent)]
    Ind(#[from] IndError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `Lambda = sigma q^lambda`. Only `sigma = 1` satisfies `Lambda(1) = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentLambda {
    pub lambda: GaussRat,
    pub sigma: i8,
}

impl ExponentLambda {
    pub fn new(lambda: GaussRat) -> Self {
        ExponentLambda { lambda, sigma: 1 }
    }

    pub fn with_sign(lambda: GaussRat, sigma: i8) -> Self {
        ExponentLambda {
            lambda,
            sigma: if sigma < 0 { -1 } else { 1 },
        }
    }

    /// `Lambda` and `Lambda^-1` as jets.
    fn jets(&self, order: usize) -> (Jet, Jet) {
        let s = GaussRat::from_int(self.sigma as i64);
        (
            Jet::exp(&self.lambda, order).scale(&s),
            Jet::exp(&-&self.lambda, order).scale(&s),
        )
    }

    fn symbol(&self) -> String {
        let sign = if self.sigma < 0 { "-" } else { "" };
        format!("{}q^({})", sign, self.lambda)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoeffKind {
    TPlus,
    TMinus,
    TZero,
    Theta,
}

impl CoeffKind {
    pub fn name(self) -> &'static str {
        match self {
            CoeffKind::TPlus => "t+",
            CoeffKind::TMinus => "t-",
            CoeffKind::TZero => "t0",
            CoeffKind::Theta => "theta",
        }
    }

    pub fn parse(s: &str) -> Option<CoeffKind> {
        match s {
            "t+" => Some(CoeffKind::TPlus),
            "t-" => Some(CoeffKind::TMinus),
            "t0" => Some(CoeffKind::TZero),
            "theta" => Some(CoeffKind::Theta),
            _ => None,
        }
    }
}

/// Arithmetic at one specialization: jets at `q = 1` or numbers at `q = q0`.
trait Point {
    type T: Clone;
    fn q_pow(&self, k: i64) -> Self::T;
    fn lam(&self) -> Self::T;
    fn lam_inv(&self) -> Self::T;
    fn add(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn sub(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn mul(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn neg(&self, a: &Self::T) -> Self::T;
    fn div(&self, a: &Self::T, b: &Self::T) -> Result<Self::T, LimitError>;
}

struct JetPoint {
    order: usize,
    lam: Jet,
    lam_inv: Jet,
}

impl JetPoint {
    fn new(l: &ExponentLambda, order: usize) -> Self {
        let (lam, lam_inv) = l.jets(order);
        JetPoint {
            order,
            lam,
            lam_inv,
        }
    }
}

impl Point for JetPoint {
    type T = Jet;
    fn q_pow(&self, k: i64) -> Jet {
        Jet::exp(&GaussRat::from_int(k), self.order)
    }
    fn lam(&self) -> Jet {
        self.lam.clone()
    }
    fn lam_inv(&self) -> Jet {
        self.lam_inv.clone()
    }
    fn add(&self, a: &Jet, b: &Jet) -> Jet {
        a.add(b)
    }
    fn sub(&self, a: &Jet, b: &Jet) -> Jet {
        a.sub(b)
    }
    fn mul(&self, a: &Jet, b: &Jet) -> Jet {
        a.mul(b)
    }
    fn neg(&self, a: &Jet) -> Jet {
        a.neg()
    }
    fn div(&self, a: &Jet, b: &Jet) -> Result<Jet, LimitError> {
        Ok(a.div(b)?)
    }
}

struct NumPoint {
    q0: GaussRat,
    mu: GaussRat,
    mu_inv: GaussRat,
}

impl Point for NumPoint {
    type T = GaussRat;
    fn q_pow(&self, k: i64) -> GaussRat {
        self.q0.pow(k).expect("q0 is nonzero")
    }
    fn lam(&self) -> GaussRat {
        self.mu.clone()
    }
    fn lam_inv(&self) -> GaussRat {
        self.mu_inv.clone()
    }
    fn add(&self, a: &GaussRat, b: &GaussRat) -> GaussRat {
        a + b
    }
    fn sub(&self, a: &GaussRat, b: &GaussRat) -> GaussRat {
        a - b
    }
    fn mul(&self, a: &GaussRat, b: &GaussRat) -> GaussRat {
        a * b
    }
    fn neg(&self, a: &GaussRat) -> GaussRat {
        -a
    }
    fn div(&self, a: &GaussRat, b: &GaussRat) -> Result<GaussRat, LimitError> {
        let inv = b.inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(a * &inv)
    }
}

fn num_point(q0: &BigRational, mu: &GaussRat) -> Result<NumPoint, LimitError> {
    if !q0.is_positive() || q0.is_one() {
        return Err(IndError::InvalidQ.into());
    }
    let mu_inv = mu.inv().ok_or(IndError::NotInvertible)?;
    Ok(NumPoint {
        q0: GaussRat::real(q0.clone()),
        mu: mu.clone(),
        mu_inv,
    })
}

fn delta<P: Point>(p: &P) -> P::T {
    p.sub(&p.q_pow(1), &p.q_pow(-1))
}

fn brace<P: Point>(p: &P, k: i64) -> P::T {
    p.add(&p.q_pow(k), &p.q_pow(-k))
}

fn qint<P: Point>(p: &P, k: i64) -> Result<P::T, LimitError> {
    p.div(&p.sub(&p.q_pow(k), &p.q_pow(-k)), &delta(p))
}

fn coeff<P: Point>(p: &P, kind: CoeffKind, n: i64) -> Result<P::T, LimitError> {
    let num = match kind {
        CoeffKind::TPlus => p.sub(
            &p.mul(&p.lam(), &p.q_pow(1 + n)),
            &p.mul(&p.lam_inv(), &p.q_pow(-1 - n)),
        ),
        CoeffKind::TMinus => p.sub(
            &p.mul(&p.lam(), &p.q_pow(1 - n)),
            &p.mul(&p.lam_inv(), &p.q_pow(n - 1)),
        ),
        CoeffKind::TZero => p.sub(&p.add(&p.lam(), &p.lam_inv()), &brace(p, 1)),
        CoeffKind::Theta => return qint(p, n),
    };
    p.div(&num, &delta(p))
}

/// Coefficients of an operator on `zeta_n` toward `zeta_{n+2}`, `zeta_n`,
/// `zeta_{n-2}`.
#[derive(Clone, PartialEq, Debug)]
pub struct Tridiag<T> {
    pub up: T,
    pub diag: T,
    pub down: T,
}

impl<T> Tridiag<T> {
    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Tridiag<U> {
        Tridiag {
            up: f(&self.up),
            diag: f(&self.diag),
            down: f(&self.down),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        [&self.up, &self.diag, &self.down].into_iter()
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct XyzAction<T> {
    pub x: Tridiag<T>,
    pub y: Tridiag<T>,
    pub z: Tridiag<T>,
}

/// `x, y, z` on `zeta_n` by the inverse of the change of variables to the
/// normalized transition operators:
/// `alpha (x, y, z) = N ({n-1} t+, {n+1} t-, {n} t0) + (beta, beta, gamma)`.
fn xyz_generic<P: Point>(p: &P, n: i64) -> Result<XyzAction<P::T>, LimitError> {
    let two = brace(p, 1);
    let bn = brace(p, n);
    let bm = brace(p, n - 1);
    let bp = brace(p, n + 1);
    let alpha = p.mul(&p.mul(&bm, &bn), &bp);
    let beta = p.div(&p.sub(&p.mul(&p.mul(&two, &two), &bn), &alpha), &delta(p))?;
    let gamma = p.mul(&p.mul(&two, &qint(p, n)?), &bn);
    let tp = p.mul(&bm, &coeff(p, CoeffKind::TPlus, n)?);
    let tm = p.mul(&bp, &coeff(p, CoeffKind::TMinus, n)?);
    let t0 = p.mul(&bn, &coeff(p, CoeffKind::TZero, n)?);
    let row = |c_up: P::T,
               c_down: P::T,
               c_diag: P::T,
               shift: &P::T|
     -> Result<Tridiag<P::T>, LimitError> {
        Ok(Tridiag {
            up: p.div(&p.mul(&c_up, &tp), &alpha)?,
            diag: p.div(&p.add(&p.mul(&c_diag, &t0), shift), &alpha)?,
            down: p.div(&p.mul(&c_down, &tm), &alpha)?,
        })
    };
    let x = row(p.q_pow(n + 1), p.q_pow(1 - n), two.clone(), &beta)?;
    let y = row(
        p.neg(&p.q_pow(-n - 1)),
        p.neg(&p.q_pow(n - 1)),
        two.clone(),
        &beta,
    )?;
    let z = row(
        p.neg(&p.q_pow(0)),
        p.q_pow(0),
        p.sub(&p.q_pow(n), &p.q_pow(-n)),
        &gamma,
    )?;
    Ok(XyzAction { x, y, z })
}

fn tidy(j: Jet) -> Jet {
    if j.is_zero() {
        Jet::zero(j.order())
    } else {
        j.normalized()
    }
}

fn integral(j: &Jet) -> bool {
    j.is_zero() || j.valuation >= 0
}

fn check_order(order: usize) -> Result<(), LimitError> {
    if order < 2 {
        return Err(LimitError::OrderTooSmall);
    }
    Ok(())
}

/// One action coefficient of the integral form on `zeta_n`.
#[derive(Clone, PartialEq, Debug)]
pub struct AFormCoeff {
    pub kind: CoeffKind,
    pub n: i64,
    pub lambda: ExponentLambda,
    jet: Jet,
}

impl AFormCoeff {
    /// The coefficient as a function of `q` and `L = Lambda`.
    pub fn closed_form(&self) -> String {
        let n = self.n;
        let body = match self.kind {
            CoeffKind::TPlus => format!("(L*q^{} - L^-1*q^{})/(q - q^-1)", 1 + n, -1 - n),
            CoeffKind::TMinus => format!("(L*q^{} - L^-1*q^{})/(q - q^-1)", 1 - n, n - 1),
            CoeffKind::TZero => "(L + L^-1 - q - q^-1)/(q - q^-1)".to_string(),
            CoeffKind::Theta => format!("(q^{} - q^{})/(q - q^-1)", n, -n),
        };
        format!("{}, L = {}", body, self.lambda.symbol())
    }

    pub fn jet(&self) -> &Jet {
        &self.jet
    }

    /// Value at `q = 1`.
    pub fn ev1(&self) -> GaussRat {
        self.jet
            .const_term()
            .expect("valuation checked at construction")
    }

    /// Value at `q = q0` with `Lambda = mu` given exactly.
    pub fn at(&self, q0: &BigRational, mu: &GaussRat) -> Result<GaussRat, LimitError> {
        coeff(&num_point(q0, mu)?, self.kind, self.n)
    }
}

impl fmt::Display for AFormCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on zeta_{}: {}", self.kind.name(), self.n, self.jet)
    }
}

pub fn aform_coeff(
    kind: CoeffKind,
    n: i64,
    lambda: &ExponentLambda,
    order: usize,
) -> Result<AFormCoeff, LimitError> {
    check_order(order)?;
    let jet = tidy(coeff(&JetPoint::new(lambda, order), kind, n)?);
    if !integral(&jet) {
        return Err(LimitError::PoleAtOne);
    }
    Ok(AFormCoeff {
        kind,
        n,
        lambda: lambda.clone(),
        jet,
    })
}

/// Jets of `x, y, z` on `zeta_n`; every one must be integral.
pub fn xyz_aform_action(
    n: i64,
    lambda: &ExponentLambda,
    order: usize,
) -> Result<XyzAction<Jet>, LimitError> {
    check_order(order)?;
    let a = xyz_generic(&JetPoint::new(lambda, order), n)?;
    let a = XyzAction {
        x: a.x.map(|j| tidy(j.clone())),
        y: a.y.map(|j| tidy(j.clone())),
        z: a.z.map(|j| tidy(j.clone())),
    };
    if [&a.x, &a.y, &a.z]
        .iter()
        .any(|t| t.iter().any(|j| !integral(j)))
    {
        return Err(LimitError::PoleAtOne);
    }
    Ok(a)
}

/// `x, y, z` on `zeta_n` at `q = q0` and `Lambda = mu`.
pub fn xyz_at(n: i64, q0: &BigRational, mu: &GaussRat) -> Result<XyzAction<GaussRat>, LimitError> {
    xyz_generic(&num_point(q0, mu)?, n)
}

/// `ev_1` of a jet triple.
pub fn ev1(t: &Tridiag<Jet>) -> Result<Tridiag<GaussRat>, LimitError> {
    Ok(Tridiag {
        up: t.up.const_term()?,
        diag: t.diag.const_term()?,
        down: t.down.const_term()?,
    })
}

/// `q0^k` for a rational `q0`.
pub fn rational_pow(q0: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        num_traits::pow(q0.clone(), k as usize)
    } else if q0.is_zero() {
        BigRational::zero()
    } else {
        num_traits::pow(q0.recip(), k.unsigned_abs() as usize)
    }
}
