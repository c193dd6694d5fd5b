//! Elements in the basis `theta^m1 W^(n) Z^m2`, with `W^(n) = Y^n` for `n >= 0`
//! and `X^(-n)` otherwise.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::scalars::{qint, RatFunc};

use super::{Gen, PbwError};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Pbw1Monomial {
    pub m1: u32,
    pub n: i32,
    pub m2: u32,
}

impl Pbw1Monomial {
    pub fn new(m1: u32, n: i32, m2: u32) -> Self {
        Pbw1Monomial { m1, n, m2 }
    }

    pub fn degree(&self) -> u32 {
        self.m1 + self.n.unsigned_abs() + self.m2
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Pbw1Element {
    terms: BTreeMap<Pbw1Monomial, RatFunc>,
}

impl Pbw1Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::monomial(Pbw1Monomial::new(0, 0, 0), c)
    }

    pub fn monomial(m: Pbw1Monomial, c: RatFunc) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn basis(m1: u32, n: i32, m2: u32) -> Self {
        Self::monomial(Pbw1Monomial::new(m1, n, m2), RatFunc::one())
    }

    /// The generator as an element; `x, y, z, a, b` go through the change of variables.
    pub fn generator(g: Gen) -> Self {
        let delta_inv = RatFunc::delta().inv().unwrap();
        match g {
            Gen::Theta => Self::basis(1, 0, 0),
            Gen::X => Self::basis(0, -1, 0),
            Gen::Y => Self::basis(0, 1, 0),
            Gen::Z => Self::basis(0, 0, 1),
            Gen::SmallX => (&Self::basis(0, -1, 0) - &Self::one()).scale(&delta_inv),
            Gen::SmallY => (&Self::basis(0, 1, 0) - &Self::one()).scale(&delta_inv),
            Gen::SmallZ => Self::basis(0, 0, 1).scale(&delta_inv),
            Gen::A => &Self::generator(Gen::SmallY) - &Self::generator(Gen::SmallX),
            Gen::B => {
                let x = Self::generator(Gen::SmallX);
                let y = Self::generator(Gen::SmallY);
                let z = Self::generator(Gen::SmallZ);
                let xy = multiply1(&x, &y);
                let zz = multiply1(&z, &z);
                &(-&xy) - &zz.scale(&RatFunc::q_pow(2))
            }
        }
    }

    pub fn add_term(&mut self, m: Pbw1Monomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Pbw1Element, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            if c.is_one() {
                self.add_term(*m, x.clone());
            } else {
                self.add_term(*m, x * c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Pbw1Monomial, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, m: &Pbw1Monomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Left multiplication by `theta^k`.
    pub fn theta_shift(&self, k: u32) -> Self {
        Pbw1Element {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Pbw1Monomial::new(m.m1 + k, m.n, m.m2), c.clone()))
                .collect(),
        }
    }

    pub fn max_theta(&self) -> u32 {
        self.terms.keys().map(|m| m.m1).max().unwrap_or(0)
    }

    /// Split by theta power: entry `k` holds the theta-free factor of `theta^k`.
    pub fn theta_layers(&self) -> Vec<Pbw1Element> {
        let mut layers = vec![Pbw1Element::zero(); self.max_theta() as usize + 1];
        for (m, c) in &self.terms {
            layers[m.m1 as usize]
                .terms
                .insert(Pbw1Monomial::new(0, m.n, m.m2), c.clone());
        }
        layers
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }
}

impl<'a> std::ops::Add<&'a Pbw1Element> for &'a Pbw1Element {
    type Output = Pbw1Element;
    fn add(self, o: &Pbw1Element) -> Pbw1Element {
        let mut out = self.clone();
        out.add_scaled(o, &RatFunc::one());
        out
    }
}

impl<'a> std::ops::Sub<&'a Pbw1Element> for &'a Pbw1Element {
    type Output = Pbw1Element;
    fn sub(self, o: &Pbw1Element) -> Pbw1Element {
        let mut out = self.clone();
        out.add_scaled(o, &RatFunc::from_int(-1));
        out
    }
}

impl std::ops::Neg for &Pbw1Element {
    type Output = Pbw1Element;
    fn neg(self) -> Pbw1Element {
        self.scale(&RatFunc::from_int(-1))
    }
}

impl fmt::Display for Pbw1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut factors = Vec::new();
                if m.m1 > 0 {
                    factors.push(power("theta", m.m1));
                }
                if m.n > 0 {
                    factors.push(power("Y", m.n as u32));
                } else if m.n < 0 {
                    factors.push(power("X", m.n.unsigned_abs()));
                }
                if m.m2 > 0 {
                    factors.push(power("Z", m.m2));
                }
                let coeff = format!("({})", c);
                if factors.is_empty() {
                    coeff
                } else {
                    format!("{}*{}", coeff, factors.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn power(sym: &str, k: u32) -> String {
    if k == 1 {
        sym.to_string()
    } else {
        format!("{}^{}", sym, k)
    }
}

/// Left action of X, Y, Z on a theta-free basis vector `b_{n,m} = W^(n) Z^m`.
fn act_plain(g: Gen, n: i32, m: u32) -> Vec<(RatFunc, i32, u32)> {
    let one = RatFunc::one;
    match g {
        Gen::X if n > 0 => vec![
            (one(), n - 1, m),
            (-RatFunc::q_pow(4 * n as i64 - 2), n - 1, m + 2),
        ],
        Gen::X => vec![(one(), n - 1, m)],
        Gen::Y if n < 0 => vec![
            (one(), n + 1, m),
            (-RatFunc::q_pow(4 * n as i64 + 2), n + 1, m + 2),
        ],
        Gen::Y => vec![(one(), n + 1, m)],
        Gen::Z => vec![(RatFunc::q_pow(2 * n as i64), n, m + 1)],
        _ => unreachable!("act_plain only handles X, Y, Z"),
    }
}

fn act_plain_elem(g: Gen, f: &Pbw1Element) -> Pbw1Element {
    let mut out = Pbw1Element::zero();
    for (mono, c) in &f.terms {
        debug_assert_eq!(mono.m1, 0);
        for (k, n, m) in act_plain(g, mono.n, mono.m2) {
            out.add_term(Pbw1Monomial::new(0, n, m), &k * c);
        }
    }
    out
}

/// Coefficients of the theta-exchange rules `g theta = sum c * (theta-power, gen)`.
pub struct ThetaExchange {
    /// X theta = c_xx theta X + c_xz Z
    pub x: (RatFunc, RatFunc),
    /// Y theta = c_yy theta Y + c_yz Z
    pub y: (RatFunc, RatFunc),
}

pub fn theta_exchange() -> ThetaExchange {
    let two = qint(2);
    ThetaExchange {
        x: (RatFunc::q_pow(-2), &RatFunc::q_pow(-1) * &two),
        y: (RatFunc::q_pow(2), -(&RatFunc::q() * &two)),
    }
}

/// `(X a, Y a, Z a)` for an arbitrary element `a`, by Horner's scheme in theta:
/// with `a = F_0 + theta R_1` the exchange rules give each product from the
/// triple for `R_1`.
pub fn left_mul_xyz(a: &Pbw1Element) -> [Pbw1Element; 3] {
    let ex = theta_exchange();
    let layers = a.theta_layers();
    let mut acc: Option<[Pbw1Element; 3]> = None;
    for f in layers.iter().rev() {
        let mut xs = act_plain_elem(Gen::X, f);
        let mut ys = act_plain_elem(Gen::Y, f);
        let mut zs = act_plain_elem(Gen::Z, f);
        if let Some([xr, yr, zr]) = &acc {
            xs.add_scaled(&xr.theta_shift(1), &ex.x.0);
            xs.add_scaled(zr, &ex.x.1);
            ys.add_scaled(&yr.theta_shift(1), &ex.y.0);
            ys.add_scaled(zr, &ex.y.1);
            zs.add_scaled(&zr.theta_shift(1), &RatFunc::one());
            zs.add_scaled(xr, &RatFunc::one());
            zs.add_scaled(yr, &RatFunc::from_int(-1));
        }
        acc = Some([xs, ys, zs]);
    }
    acc.unwrap_or_default()
}

/// Left multiplication by a single generator of `{theta, X, Y, Z}`; the other
/// generators are expanded through the change of variables.
pub fn left_mul(g: Gen, a: &Pbw1Element) -> Pbw1Element {
    match g {
        Gen::Theta => a.theta_shift(1),
        Gen::X | Gen::Y | Gen::Z => {
            if a.max_theta() == 0 {
                return act_plain_elem(g, a);
            }
            let [x, y, z] = left_mul_xyz(a);
            match g {
                Gen::X => x,
                Gen::Y => y,
                _ => z,
            }
        }
        _ => multiply1(&Pbw1Element::generator(g), a),
    }
}

/// Exact product in the algebra.
pub fn multiply1(a: &Pbw1Element, b: &Pbw1Element) -> Pbw1Element {
    // Group a's monomials by (n, m2): each group shares W^(n) Z^m2 b.
    let mut groups: BTreeMap<(u32, i32), Vec<(u32, &RatFunc)>> = BTreeMap::new();
    for (m, c) in &a.terms {
        groups.entry((m.m2, m.n)).or_default().push((m.m1, c));
    }
    let mut z_powers: Vec<Pbw1Element> = vec![b.clone()];
    let mut w_cache: HashMap<(u32, i32), Pbw1Element> = HashMap::new();
    let mut out = Pbw1Element::zero();
    for ((m2, n), mons) in groups {
        while z_powers.len() <= m2 as usize {
            let next = left_mul(Gen::Z, z_powers.last().unwrap());
            z_powers.push(next);
        }
        let mut cur_n = 0i32;
        let mut cur = z_powers[m2 as usize].clone();
        let step = if n >= 0 { 1 } else { -1 };
        // Reuse the longest cached prefix W^(k) Z^m2 b with k between 0 and n.
        let mut k = n;
        while k != 0 {
            if let Some(c) = w_cache.get(&(m2, k)) {
                cur = c.clone();
                cur_n = k;
                break;
            }
            k -= step;
        }
        while cur_n != n {
            cur = left_mul(if n > 0 { Gen::Y } else { Gen::X }, &cur);
            cur_n += step;
            w_cache.insert((m2, cur_n), cur.clone());
        }
        for (m1, c) in mons {
            out.add_scaled(&cur.theta_shift(m1), c);
        }
    }
    out
}

/// Apply a word to the unit: letters act from the right end first.
pub fn normal_form_word(scalar: &RatFunc, letters: &[Gen]) -> Pbw1Element {
    let mut acc = Pbw1Element::scalar(scalar.clone());
    for g in letters.iter().rev() {
        acc = left_mul(*g, &acc);
    }
    acc
}

/// Conjugate-linear antiautomorphism with `theta* = theta`, `X* = Y`, `Z* = Z`.
pub fn star1(a: &Pbw1Element) -> Pbw1Element {
    let mut out = Pbw1Element::zero();
    for (m, c) in &a.terms {
        // (theta^m1 W^(n) Z^m2)* = Z^m2 W^(-n) theta^m1
        let mut cur = Pbw1Element::basis(m.m1, 0, 0);
        let g = if m.n > 0 { Gen::X } else { Gen::Y };
        for _ in 0..m.n.unsigned_abs() {
            cur = left_mul(g, &cur);
        }
        for _ in 0..m.m2 {
            cur = left_mul(Gen::Z, &cur);
        }
        out.add_scaled(&cur, &c.star());
    }
    out
}

pub fn degree1(a: &Pbw1Element) -> Result<u32, PbwError> {
    a.terms
        .keys()
        .map(|m| m.degree())
        .max()
        .ok_or(PbwError::ZeroElement)
}

pub fn commutator(a: &Pbw1Element, b: &Pbw1Element) -> Pbw1Element {
    &multiply1(a, b) - &multiply1(b, a)
}
