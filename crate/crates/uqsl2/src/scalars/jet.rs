//! Truncated Laurent series in `h`, where `q = e^h` and `s = e^{h/2}`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::gauss::GaussRat;
use super::laurent::HalfLaurent;
use super::ratfunc::RatFunc;
use super::ScalarError;

/// `sum_k coeffs[k] * h^(valuation + k)`, known up to `h^(valuation + coeffs.len())`.
///
/// A nonzero jet has a nonzero leading coefficient. A jet whose coefficients
/// are all zero is indistinguishable from zero at its precision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Jet {
    pub valuation: i64,
    pub coeffs: Vec<GaussRat>,
}

fn factorial_inv(k: usize) -> BigRational {
    let mut f = BigInt::from(1);
    for j in 2..=k {
        f *= j;
    }
    BigRational::new(BigInt::from(1), f)
}

impl Jet {
    pub fn zero(order: usize) -> Self {
        Jet {
            valuation: 0,
            coeffs: vec![GaussRat::zero(); order],
        }
    }

    pub fn constant(c: GaussRat, order: usize) -> Self {
        let mut coeffs = vec![GaussRat::zero(); order];
        if order > 0 {
            coeffs[0] = c;
        }
        Jet {
            valuation: 0,
            coeffs,
        }
        .normalized()
    }

    /// The series of `e^{c h}`.
    pub fn exp(c: &GaussRat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut pw = GaussRat::one();
        for k in 0..order {
            coeffs.push(&pw * &GaussRat::real(factorial_inv(k)));
            pw = &pw * c;
        }
        Jet {
            valuation: 0,
            coeffs,
        }
    }

    /// `sum_j c_j e^{mu_j h}` expanded to `order` coefficients from `h^0`.
    pub fn exp_sum(terms: &[(GaussRat, GaussRat)], order: usize) -> Self {
        let mut coeffs = vec![GaussRat::zero(); order];
        for (c, mu) in terms {
            let e = Jet::exp(mu, order);
            for (k, x) in e.coeffs.iter().enumerate() {
                coeffs[k] += &(c * x);
            }
        }
        Jet {
            valuation: 0,
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Strip leading zeros into the valuation (precision shrinks accordingly).
    pub fn normalized(mut self) -> Self {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => self,
            Some(0) => self,
            Some(k) => {
                self.coeffs.drain(..k);
                self.valuation += k as i64;
                self
            }
        }
    }

    pub fn mul(&self, o: &Jet) -> Jet {
        let n = self.order().min(o.order());
        if self.is_zero() || o.is_zero() {
            return Jet {
                valuation: self.valuation + o.valuation,
                coeffs: vec![GaussRat::zero(); n],
            };
        }
        let mut coeffs = vec![GaussRat::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Jet {
            valuation: self.valuation + o.valuation,
            coeffs,
        }
    }

    pub fn div(&self, o: &Jet) -> Result<Jet, ScalarError> {
        if o.is_zero() {
            return Err(ScalarError::DivisorIndistinguishableFromZero);
        }
        let n = self.order().min(o.order());
        let inv0 = o.coeffs[0].inv().expect("normalized jet");
        // Series inverse of the divisor's unit part.
        let mut inv = vec![GaussRat::zero(); n];
        if n > 0 {
            inv[0] = inv0.clone();
        }
        for k in 1..n {
            let mut acc = GaussRat::zero();
            for j in 1..=k.min(o.order() - 1) {
                acc += &(&o.coeffs[j] * &inv[k - j]);
            }
            inv[k] = -(&acc * &inv0);
        }
        let unit = Jet {
            valuation: -o.valuation,
            coeffs: inv,
        };
        Ok(self.mul(&unit))
    }

    pub fn add(&self, o: &Jet) -> Jet {
        let v = self.valuation.min(o.valuation);
        let prec = (self.valuation + self.order() as i64).min(o.valuation + o.order() as i64);
        let len = (prec - v).max(0) as usize;
        let mut coeffs = vec![GaussRat::zero(); len];
        for (src, sv) in [(&self.coeffs, self.valuation), (&o.coeffs, o.valuation)] {
            for (k, c) in src.iter().enumerate() {
                let idx = sv + k as i64 - v;
                if (idx as usize) < len {
                    coeffs[idx as usize] += c;
                }
            }
        }
        Jet {
            valuation: v,
            coeffs,
        }
        .normalized()
    }

    pub fn neg(&self) -> Jet {
        Jet {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, o: &Jet) -> Jet {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &GaussRat) -> Jet {
        Jet {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
        .normalized()
    }

    /// Value at `h = 0`; fails on a genuine pole.
    pub fn const_term(&self) -> Result<GaussRat, ScalarError> {
        if self.is_zero() {
            return Ok(GaussRat::zero());
        }
        match self.valuation {
            v if v < 0 => Err(ScalarError::NegativeValuation),
            0 => Ok(self.coeffs[0].clone()),
            _ => Ok(GaussRat::zero()),
        }
    }

    /// Coefficient of `h^k` (zero beyond the stored range below precision).
    pub fn coeff(&self, k: i64) -> GaussRat {
        let idx = k - self.valuation;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            GaussRat::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({})*h^{}", c, self.valuation + k as i64))
            .collect();
        if parts.is_empty() {
            write!(f, "O(h^{})", self.valuation + self.order() as i64)
        } else {
            write!(
                f,
                "{} + O(h^{})",
                parts.join(" + "),
                self.valuation + self.order() as i64
            )
        }
    }
}

/// Jet of a Laurent polynomial in `s` with exact valuation: factors of `s - 1`
/// are removed exactly so the result carries `order` significant terms.
fn laurent_jet(p: &HalfLaurent, order: usize) -> Jet {
    let (v, poly) = p.split_s_power();
    let mut dense = poly.to_dense();
    let mut k = 0usize;
    // Synthetic division by (s - 1) while s = 1 is a root.
    loop {
        let sum = dense.iter().fold(GaussRat::zero(), |a, c| &a + c);
        if !sum.is_zero() || dense.len() <= 1 {
            break;
        }
        let n = dense.len() - 1;
        let mut q = vec![GaussRat::zero(); n];
        let mut carry = GaussRat::zero();
        for j in (1..=n).rev() {
            carry = &carry + &dense[j];
            q[j - 1] = carry.clone();
        }
        dense = q;
        k += 1;
    }
    let half = GaussRat::from_frac(1, 2);
    let unit: Vec<(GaussRat, GaussRat)> = dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (c.clone(), &GaussRat::from_int(e as i64 + v) * &half))
        .collect();
    let mut out = Jet::exp_sum(&unit, order);
    // (e^{h/2} - 1)^k = h^k (1/2 + h/8 + ...)^k
    let mut step = Jet::exp(&half, order + 1);
    step.coeffs.remove(0);
    step.valuation = 1;
    for _ in 0..k {
        out = out.mul(&step);
    }
    out.normalized()
}

pub fn jet_of(x: &RatFunc, order: usize) -> Result<Jet, ScalarError> {
    if x.is_zero() {
        return Ok(Jet::zero(order));
    }
    let n = laurent_jet(x.num(), order);
    let d = laurent_jet(x.den(), order);
    n.div(&d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qint;

    #[test]
    fn delta_series() {
        let j = jet_of(&RatFunc::delta(), 5).unwrap();
        assert_eq!(j.valuation, 1);
        assert_eq!(j.coeffs[0], GaussRat::from_int(2));
        assert_eq!(j.coeffs[1], GaussRat::zero());
        assert_eq!(j.coeffs[2], GaussRat::from_frac(1, 3));
        assert_eq!(j.order(), 5);
    }

    #[test]
    fn qint_limit() {
        for n in -6..=6 {
            let j = jet_of(&qint(n), 6).unwrap();
            assert_eq!(j.const_term().unwrap(), GaussRat::from_int(n));
        }
    }

    #[test]
    fn pole_detected() {
        let one = Jet::constant(GaussRat::one(), 4);
        let h = Jet {
            valuation: 1,
            coeffs: vec![
                GaussRat::one(),
                GaussRat::zero(),
                GaussRat::zero(),
                GaussRat::zero(),
            ],
        };
        assert_eq!(
            one.div(&h).unwrap().const_term(),
            Err(ScalarError::NegativeValuation)
        );
        assert_eq!(
            one.div(&Jet::zero(4)),
            Err(ScalarError::DivisorIndistinguishableFromZero)
        );
    }
}
