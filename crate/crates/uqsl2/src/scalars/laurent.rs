//! Sparse Laurent polynomials in `s = q^{1/2}` over the Gaussian rationals.

use std::ops::{Add, Mul, Neg, Sub};

use super::gauss::GaussRat;

/// Terms are kept sorted by ascending exponent with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct HalfLaurent {
    terms: Vec<(i64, GaussRat)>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        HalfLaurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: GaussRat, exp: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            HalfLaurent {
                terms: vec![(exp, c)],
            }
        }
    }

    pub fn s_pow(exp: i64) -> Self {
        Self::monomial(GaussRat::one(), exp)
    }

    /// Build from arbitrary (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, GaussRat)>>(it: I) -> Self {
        let mut v: Vec<(i64, GaussRat)> = it.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, GaussRat)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        HalfLaurent { terms: out }
    }

    pub fn terms(&self) -> &[(i64, GaussRat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<GaussRat> {
        match self.terms.as_slice() {
            [] => Some(GaussRat::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn low_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn high_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<&GaussRat> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coeff(&self, exp: i64) -> GaussRat {
        match self.terms.binary_search_by_key(&exp, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => GaussRat::zero(),
        }
    }

    pub fn has_odd_exponents(&self) -> bool {
        self.terms.iter().any(|t| t.0 % 2 != 0)
    }

    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_real())
    }

    pub fn shift(&self, k: i64) -> Self {
        HalfLaurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        HalfLaurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        HalfLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    /// Real and imaginary parts as polynomials with real coefficients.
    pub fn re_im(&self) -> (Self, Self) {
        let re = self
            .terms
            .iter()
            .map(|(e, c)| (*e, GaussRat::real(c.re.clone())));
        let im = self
            .terms
            .iter()
            .map(|(e, c)| (*e, GaussRat::real(c.im.clone())));
        (Self::from_terms(re), Self::from_terms(im))
    }

    /// Substitute `s = s0` (exponents may be negative, so `s0` must be nonzero).
    pub fn eval(&self, s0: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (e, c) in &self.terms {
            acc += &(c * &s0.pow(*e).expect("evaluation at zero"));
        }
        acc
    }

    /// Substitute `s^2 = q0`; only valid when all exponents are even.
    pub fn eval_q(&self, q0: &GaussRat) -> GaussRat {
        debug_assert!(!self.has_odd_exponents());
        let mut acc = GaussRat::zero();
        for (e, c) in &self.terms {
            acc += &(c * &q0.pow(e / 2).expect("evaluation at zero"));
        }
        acc
    }

    /// Split off the largest power of `s`: `self = s^v * p` with `p(0) != 0`.
    pub fn split_s_power(&self) -> (i64, Self) {
        match self.low_exp() {
            None => (0, Self::zero()),
            Some(v) => (v, self.shift(-v)),
        }
    }

    /// Dense coefficient vector of a polynomial (all exponents >= 0).
    pub(crate) fn to_dense(&self) -> Vec<GaussRat> {
        let Some(hi) = self.high_exp() else {
            return Vec::new();
        };
        assert!(
            self.low_exp().unwrap() >= 0,
            "to_dense on a Laurent polynomial with negative exponents"
        );
        let mut v = vec![GaussRat::zero(); hi as usize + 1];
        for (e, c) in &self.terms {
            v[*e as usize] = c.clone();
        }
        v
    }

    pub(crate) fn from_dense(v: Vec<GaussRat>) -> Self {
        HalfLaurent {
            terms: v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as i64, c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let take_left =
                j >= o.terms.len() || (i < self.terms.len() && self.terms[i].0 < o.terms[j].0);
            let take_right =
                i >= self.terms.len() || (j < o.terms.len() && o.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (e, c) = &o.terms[j];
                out.push((*e, if negate { -c } else { c.clone() }));
                j += 1;
            } else {
                let c = if negate {
                    &self.terms[i].1 - &o.terms[j].1
                } else {
                    &self.terms[i].1 + &o.terms[j].1
                };
                if !c.is_zero() {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        HalfLaurent { terms: out }
    }
}

impl<'a> Add<&'a HalfLaurent> for &'a HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, o: &HalfLaurent) -> HalfLaurent {
        self.merge(o, false)
    }
}

impl<'a> Sub<&'a HalfLaurent> for &'a HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, o: &HalfLaurent) -> HalfLaurent {
        self.merge(o, true)
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a HalfLaurent> for &'a HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, o: &HalfLaurent) -> HalfLaurent {
        if self.is_zero() || o.is_zero() {
            return HalfLaurent::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return o.scale(c).shift(*e);
        }
        if o.terms.len() == 1 {
            let (e, c) = &o.terms[0];
            return self.scale(c).shift(*e);
        }
        let lo = self.terms[0].0 + o.terms[0].0;
        let hi = self.high_exp().unwrap() + o.high_exp().unwrap();
        let mut acc: Vec<Option<GaussRat>> = vec![None; (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let slot = &mut acc[(ea + eb - lo) as usize];
                let p = ca * cb;
                match slot {
                    Some(x) => *x += &p,
                    None => *slot = Some(p),
                }
            }
        }
        HalfLaurent {
            terms: acc
                .into_iter()
                .enumerate()
                .filter_map(|(k, c)| c.filter(|c| !c.is_zero()).map(|c| (k as i64 + lo, c)))
                .collect(),
        }
    }
}

/// Dense polynomial helpers (index = exponent), used by gcd and division.
pub(crate) mod dense {
    use super::GaussRat;

    pub fn trim(v: &mut Vec<GaussRat>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }

    /// Division with remainder; `d` must be nonzero and trimmed.
    pub fn div_rem(n: &[GaussRat], d: &[GaussRat]) -> (Vec<GaussRat>, Vec<GaussRat>) {
        let dd = d.len() - 1;
        let mut r: Vec<GaussRat> = n.to_vec();
        trim(&mut r);
        if r.len() < d.len() {
            return (Vec::new(), r);
        }
        let inv_lc = d[dd].inv().expect("zero leading coefficient");
        let mut quo = vec![GaussRat::zero(); r.len() - dd];
        while r.len() >= d.len() {
            let k = r.len() - 1 - dd;
            let t = &r[r.len() - 1] * &inv_lc;
            for (j, dj) in d.iter().enumerate() {
                if !dj.is_zero() {
                    let p = &t * dj;
                    r[k + j] -= &p;
                }
            }
            quo[k] = t;
            r.pop();
            trim(&mut r);
        }
        (quo, r)
    }

    pub fn make_monic(v: &mut [GaussRat]) {
        if let Some(lc) = v.last() {
            if !lc.is_one() {
                let inv = lc.inv().expect("zero leading coefficient");
                for c in v.iter_mut() {
                    *c = &*c * &inv;
                }
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm over Q(i).
    pub fn gcd(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            make_monic(&mut y);
            let (_, r) = div_rem(&x, &y);
            x = y;
            y = r;
        }
        make_monic(&mut x);
        x
    }
}
