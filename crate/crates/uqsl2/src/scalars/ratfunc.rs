//! Rational functions in `s = q^{1/2}` with a canonical reduced representation.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::gauss::GaussRat;
use super::laurent::{dense, HalfLaurent};
use super::modgcd::{modular_gcd, Cofactors};
use super::sturm;
use super::ScalarError;

/// `num / den` where `den` is a monic polynomial in `s` with nonzero constant
/// term, `num` is a Laurent polynomial, and the two are coprime.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: HalfLaurent,
    den: HalfLaurent,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

/// Monic gcd of two dense polynomials with the cofactors `a/g`, `b/g`:
/// modular first, with the Euclidean algorithm over Q(i) as a fallback.
fn poly_gcd(a: &[GaussRat], b: &[GaussRat]) -> Cofactors {
    if a.len() <= 1 || b.len() <= 1 {
        return (vec![GaussRat::one()], a.to_vec(), b.to_vec());
    }
    modular_gcd(a, b).unwrap_or_else(|| {
        let g = dense::gcd(a, b);
        let qa = dense::div_rem(a, &g).0;
        let qb = dense::div_rem(b, &g).0;
        (g, qa, qb)
    })
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: HalfLaurent::zero(),
            den: HalfLaurent::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: HalfLaurent::one(),
            den: HalfLaurent::one(),
        }
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        RatFunc {
            num: HalfLaurent::constant(c),
            den: HalfLaurent::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gauss(GaussRat::from_int(n))
    }

    pub fn i() -> Self {
        Self::from_gauss(GaussRat::i())
    }

    pub fn from_laurent(num: HalfLaurent) -> Self {
        RatFunc {
            num,
            den: HalfLaurent::one(),
        }
    }

    pub fn s_pow(k: i64) -> Self {
        Self::from_laurent(HalfLaurent::s_pow(k))
    }

    pub fn q_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    /// The indeterminate `q = s^2`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q - q^{-1}`.
    pub fn delta() -> Self {
        Self::from_laurent(HalfLaurent::from_terms([
            (2, GaussRat::one()),
            (-2, -GaussRat::one()),
        ]))
    }

    pub fn from_parts(num: HalfLaurent, den: HalfLaurent) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn num(&self) -> &HalfLaurent {
        &self.num
    }

    pub fn den(&self) -> &HalfLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn as_laurent(&self) -> Option<&HalfLaurent> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn has_odd_exponents(&self) -> bool {
        self.num.has_odd_exponents() || self.den.has_odd_exponents()
    }

    fn normalize(num: HalfLaurent, den: HalfLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (dv, den) = den.split_s_power();
        let num = num.shift(-dv);
        if den.terms().len() == 1 {
            let c = den.terms()[0].1.inv().expect("nonzero");
            return RatFunc {
                num: num.scale(&c),
                den: HalfLaurent::one(),
            };
        }
        let (nv, np) = num.split_s_power();
        let dd = den.to_dense();
        let (g, qn, qd) = poly_gcd(&np.to_dense(), &dd);
        let (num, den) = if g.len() > 1 {
            (
                HalfLaurent::from_dense(qn).shift(nv),
                HalfLaurent::from_dense(qd),
            )
        } else {
            (num, den)
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// Multiply `a/b * c/d` given that each fraction is already reduced.
    fn mul_reduced(n1: &HalfLaurent, d1: &HalfLaurent, n2: &HalfLaurent, d2: &HalfLaurent) -> Self {
        if n1.is_zero() || n2.is_zero() {
            return Self::zero();
        }
        let cancel = |n: &HalfLaurent, d: &HalfLaurent| -> (HalfLaurent, HalfLaurent) {
            if d.is_one() {
                return (n.clone(), d.clone());
            }
            let (v, p) = n.split_s_power();
            let (g, qn, qd) = poly_gcd(&p.to_dense(), &d.to_dense());
            if g.len() > 1 {
                (
                    HalfLaurent::from_dense(qn).shift(v),
                    HalfLaurent::from_dense(qd),
                )
            } else {
                (n.clone(), d.clone())
            }
        };
        let (n1, d2) = cancel(n1, d2);
        let (n2, d1) = cancel(n2, d1);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        // Both denominators are monic, so is the product; a leading coefficient
        // can only differ from one after cancelling by a monic gcd, which keeps it monic.
        RatFunc { num, den }
    }

    /// Exact test of `sum_i prod_j f_ij == 0`. Terms whose denominators agree
    /// as multisets are summed on numerators alone; only the few group sums
    /// are reduced.
    pub fn sum_of_products_is_zero(terms: &[Vec<RatFunc>]) -> bool {
        let mut dens: Vec<&HalfLaurent> = Vec::new();
        let mut groups: Vec<(Vec<usize>, HalfLaurent)> = Vec::new();
        for factors in terms {
            if factors.iter().any(|f| f.is_zero()) {
                continue;
            }
            let mut key = Vec::new();
            let mut num = HalfLaurent::one();
            for f in factors {
                num = &num * &f.num;
                if f.den.is_one() {
                    continue;
                }
                let j = match dens.iter().position(|d| *d == &f.den) {
                    Some(j) => j,
                    None => {
                        dens.push(&f.den);
                        dens.len() - 1
                    }
                };
                key.push(j);
            }
            key.sort_unstable();
            match groups.iter_mut().find(|(k, _)| *k == key) {
                Some((_, acc)) => *acc = &*acc + &num,
                None => groups.push((key, num)),
            }
        }
        let mut total = RatFunc::zero();
        for (key, num) in groups {
            if num.is_zero() {
                continue;
            }
            let den = key
                .iter()
                .fold(HalfLaurent::one(), |acc, j| &acc * dens[*j]);
            total = &total + &RatFunc::normalize(num, den);
        }
        total.is_zero()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (v, p) = self.num.split_s_power();
        let lc = p.leading_coeff().unwrap().inv().unwrap();
        Some(RatFunc {
            num: self.den.shift(-v).scale(&lc),
            den: p.scale(&lc),
        })
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        let mut b = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Some(acc)
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// The involution fixing `s` and conjugating `i`.
    pub fn star(&self) -> Self {
        RatFunc {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }

    /// Evaluate at `q = q0 > 0`.
    pub fn eval_q(&self, q0: &BigRational) -> Result<GaussRat, ScalarError> {
        if !q0.is_positive() {
            return Err(ScalarError::NonPositiveQ);
        }
        if self.has_odd_exponents() {
            let s0 = rational_sqrt(q0).ok_or(ScalarError::IrrationalSqrt)?;
            let s0 = GaussRat::real(s0);
            let d = self.den.eval(&s0);
            if d.is_zero() {
                return Err(ScalarError::PoleAtPoint);
            }
            return Ok(&self.num.eval(&s0) / &d);
        }
        let q0 = GaussRat::real(q0.clone());
        let d = self.den.eval_q(&q0);
        if d.is_zero() {
            return Err(ScalarError::PoleAtPoint);
        }
        Ok(&self.num.eval_q(&q0) / &d)
    }

    /// True iff the denominator has no root `s` in `(0, inf)`.
    pub fn pole_free_on_positive_axis(&self) -> bool {
        if self.den.is_one() {
            return true;
        }
        let (re, im) = self.den.re_im();
        let real_part: Vec<BigRational> = re.to_dense().into_iter().map(|c| c.re).collect();
        let g = if im.is_zero() {
            real_part
        } else {
            let imag_part: Vec<BigRational> = im.to_dense().into_iter().map(|c| c.re).collect();
            sturm::gcd(&real_part, &imag_part)
        };
        sturm::count_positive_roots(&g) == 0
    }
}

/// Square root of a nonnegative rational if it is rational.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl From<GaussRat> for RatFunc {
    fn from(c: GaussRat) -> Self {
        RatFunc::from_gauss(c)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc {
                num: &self.num + &o.num,
                den: HalfLaurent::one(),
            };
        }
        if self.den.is_one() || o.den.is_one() {
            // n1 + n2/d stays reduced: its numerator is n2 modulo d.
            let (poly, frac) = if self.den.is_one() {
                (self, o)
            } else {
                (o, self)
            };
            let num = &(&poly.num * &frac.den) + &frac.num;
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc {
                num,
                den: frac.den.clone(),
            };
        }
        if self.den == o.den {
            return RatFunc::normalize(&self.num + &o.num, self.den.clone());
        }
        let d1 = self.den.to_dense();
        let d2 = o.den.to_dense();
        let (g, e1, e2) = poly_gcd(&d1, &d2);
        if g.len() == 1 {
            // Coprime denominators: the cross sum is automatically reduced.
            let num = &(&self.num * &o.den) + &(&o.num * &self.den);
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc {
                num,
                den: &self.den * &o.den,
            };
        }
        let (e1, e2) = (HalfLaurent::from_dense(e1), HalfLaurent::from_dense(e2));
        let num = &(&self.num * &e2) + &(&o.num * &e1);
        RatFunc::normalize(num, &(&e1 * &e2) * &HalfLaurent::from_dense(g))
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc {
                num: &self.num * &o.num,
                den: HalfLaurent::one(),
            };
        }
        RatFunc::mul_reduced(&self.num, &self.den, &o.num, &o.den)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv().expect("division by zero rational function")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, o: &RatFunc) {
        *self = &*self + o;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, o: &RatFunc) {
        *self = &*self - o;
    }
}

fn fmt_monomial(e: i64) -> String {
    if e == 0 {
        String::new()
    } else if e % 2 == 0 {
        let k = e / 2;
        if k == 1 {
            "q".to_string()
        } else {
            format!("q^{}", k)
        }
    } else if e == 1 {
        "s".to_string()
    } else {
        format!("s^{}", e)
    }
}

/// Text form of a Laurent polynomial in the CLI expression syntax.
pub(crate) fn fmt_laurent(p: &HalfLaurent) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().iter().rev().enumerate() {
        let (neg, body) = c.signed_factor();
        let mono = fmt_monomial(*e);
        let term = if mono.is_empty() {
            body
        } else if body == "1" {
            mono
        } else {
            format!("{}*{}", body, mono)
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        out.push_str(&term);
    }
    out
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = fmt_laurent(&self.num);
        if self.den.is_one() {
            return f.write_str(&n);
        }
        let d = fmt_laurent(&self.den);
        if self.num.terms().len() == 1 {
            write!(f, "{}/({})", n, d)
        } else {
            write!(f, "({})/({})", n, d)
        }
    }
}

/// Integer helper used by tests and callers that need `BigRational` literals.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl RatFunc {
    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }

    /// Leading behaviour helper: true when the value is a nonzero constant.
    pub fn is_nonzero_constant(&self) -> bool {
        self.as_constant().is_some_and(|c| !c.is_zero())
    }
}

impl num_traits::Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}
