//! Elements in the basis `theta^m z^n a^d b^p` (d in {0, 1}) and conversion to
//! and from the first basis.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::scalars::RatFunc;

use super::basis1::{multiply1, Pbw1Element, Pbw1Monomial};
use super::Gen;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Pbw2Monomial {
    pub m: u32,
    pub n: u32,
    pub d: u8,
    pub p: u32,
}

impl Pbw2Monomial {
    pub fn new(m: u32, n: u32, d: u8, p: u32) -> Self {
        assert!(d <= 1, "a-exponent must be 0 or 1");
        Pbw2Monomial { m, n, d, p }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Pbw2Element {
    terms: BTreeMap<Pbw2Monomial, RatFunc>,
}

impl Pbw2Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(m: u32, n: u32, d: u8, p: u32) -> Self {
        let mut e = Self::zero();
        e.add_term(Pbw2Monomial::new(m, n, d, p), RatFunc::one());
        e
    }

    pub fn add_term(&mut self, k: Pbw2Monomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
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

    pub fn add_scaled(&mut self, other: &Pbw2Element, c: &RatFunc) {
        for (k, x) in &other.terms {
            self.add_term(*k, x * c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Pbw2Monomial, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, k: &Pbw2Monomial) -> RatFunc {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }
}

impl<'a> std::ops::Sub<&'a Pbw2Element> for &'a Pbw2Element {
    type Output = Pbw2Element;
    fn sub(self, o: &Pbw2Element) -> Pbw2Element {
        let mut out = self.clone();
        out.add_scaled(o, &RatFunc::from_int(-1));
        out
    }
}

impl<'a> std::ops::Add<&'a Pbw2Element> for &'a Pbw2Element {
    type Output = Pbw2Element;
    fn add(self, o: &Pbw2Element) -> Pbw2Element {
        let mut out = self.clone();
        out.add_scaled(o, &RatFunc::one());
        out
    }
}

impl fmt::Display for Pbw2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut factors = Vec::new();
                for (sym, e) in [("theta", k.m), ("z", k.n), ("a", k.d as u32), ("b", k.p)] {
                    match e {
                        0 => {}
                        1 => factors.push(sym.to_string()),
                        _ => factors.push(format!("{}^{}", sym, e)),
                    }
                }
                if factors.is_empty() {
                    format!("({})", c)
                } else {
                    format!("({})*{}", c, factors.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

type Key = (u32, u8, u32);

/// Memo of the theta-free products `z^n a^d b^p` written in the first basis.
struct ImageCache {
    map: RwLock<HashMap<Key, Arc<Pbw1Element>>>,
    gens: [Pbw1Element; 3],
}

fn cache() -> &'static ImageCache {
    static CACHE: OnceLock<ImageCache> = OnceLock::new();
    CACHE.get_or_init(|| ImageCache {
        map: RwLock::new(HashMap::new()),
        gens: [
            Pbw1Element::generator(Gen::SmallZ),
            Pbw1Element::generator(Gen::A),
            Pbw1Element::generator(Gen::B),
        ],
    })
}

fn image(n: u32, d: u8, p: u32) -> Arc<Pbw1Element> {
    let c = cache();
    if let Some(v) = c.map.read().unwrap().get(&(n, d, p)) {
        return v.clone();
    }
    let [z, a, b] = &c.gens;
    let val = if n > 0 {
        multiply1(z, &image(n - 1, d, p))
    } else if d == 1 {
        multiply1(a, &image(0, 0, p))
    } else if p > 0 {
        multiply1(b, &image(0, 0, p - 1))
    } else {
        Pbw1Element::one()
    };
    let val = Arc::new(val);
    c.map.write().unwrap().insert((n, d, p), val.clone());
    val
}

/// Rewrite a second-basis element in the first basis.
pub fn to_basis1(e: &Pbw2Element) -> Pbw1Element {
    let mut out = Pbw1Element::zero();
    for (k, c) in &e.terms {
        out.add_scaled(&image(k.n, k.d, k.p).theta_shift(k.m), c);
    }
    out
}

/// Rewrite a first-basis element in the second basis.
///
/// Works on each theta layer separately by triangular elimination: the top
/// entries `W^(±j) Z^k` (maximal `|n| + m`, then minimal `m`) are cleared
/// using the images of `z^k b^j` and `z^k a b^(j-1)`, which only contain terms
/// of lower filtration degree or larger Z-power besides those two entries.
pub fn to_basis2(e: &Pbw1Element) -> Pbw2Element {
    let mut out = Pbw2Element::zero();
    for (level, layer) in e.theta_layers().into_iter().enumerate() {
        let mut f = layer;
        while let Some(top) = pick_top(&f) {
            let (k, j) = (top.m2, top.n.unsigned_abs());
            if j == 0 {
                let img = image(k, 0, 0);
                let pivot = img.coeff(&Pbw1Monomial::new(0, 0, k));
                let u = &f.coeff(&top) / &pivot;
                f.add_scaled(&img, &-&u);
                out.add_term(Pbw2Monomial::new(level as u32, k, 0, 0), u);
                continue;
            }
            let i1 = image(k, 0, j);
            let i2 = image(k, 1, j - 1);
            let up = Pbw1Monomial::new(0, j as i32, k);
            let dn = Pbw1Monomial::new(0, -(j as i32), k);
            let (a11, a12) = (i1.coeff(&up), i2.coeff(&up));
            let (a21, a22) = (i1.coeff(&dn), i2.coeff(&dn));
            let det = &(&a11 * &a22) - &(&a12 * &a21);
            assert!(!det.is_zero(), "singular elimination block");
            let (r1, r2) = (f.coeff(&up), f.coeff(&dn));
            let u = &(&(&r1 * &a22) - &(&a12 * &r2)) / &det;
            let v = &(&(&a11 * &r2) - &(&r1 * &a21)) / &det;
            f.add_scaled(&i1, &-&u);
            f.add_scaled(&i2, &-&v);
            out.add_term(Pbw2Monomial::new(level as u32, k, 0, j), u);
            out.add_term(Pbw2Monomial::new(level as u32, k, 1, j - 1), v);
        }
    }
    out
}

fn pick_top(f: &Pbw1Element) -> Option<Pbw1Monomial> {
    f.terms().keys().copied().max_by(|a, b| {
        let (da, db) = (a.n.unsigned_abs() + a.m2, b.n.unsigned_abs() + b.m2);
        da.cmp(&db).then(b.m2.cmp(&a.m2)).then(a.n.cmp(&b.n))
    })
}

/// Product of second-basis elements, computed through the first basis.
pub fn multiply2(a: &Pbw2Element, b: &Pbw2Element) -> Pbw2Element {
    to_basis2(&multiply1(&to_basis1(a), &to_basis1(b)))
}
