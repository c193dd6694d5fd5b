//! Polynomial gcds over Q(i) by reduction modulo primes p = 3 mod 4, for
//! which F_p[i] is the field F_{p^2}.
//!
//! If both inputs keep their degree mod p and their gcd mod p is constant, the
//! gcd over Q(i) is 1 (a monic divisor of a p-integral polynomial with unit
//! leading coefficient is p-integral, so it survives the reduction).

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gauss::GaussRat;
use super::laurent::dense;

const MERSENNE: u64 = (1u64 << 61) - 1;

/// Primes `p = 3 mod 4` below `2^61`, largest first.
const PRIMES: [u64; 9] = [
    MERSENNE,
    2305843009213693907,
    2305843009213693723,
    2305843009213693487,
    2305843009213693123,
    2305843009213692967,
    2305843009213692799,
    2305843009213692671,
    2305843009213692527,
];

#[inline]
fn reduce_mersenne(x: u128) -> u64 {
    let lo = (x as u64) & MERSENNE;
    let hi = (x >> 61) as u64;
    let mut r = lo + (hi & MERSENNE) + (hi >> 61);
    while r >= MERSENNE {
        r -= MERSENNE;
    }
    r
}

#[derive(Clone, Copy)]
struct Zp(u64);

impl Zp {
    #[inline]
    fn reduce(self, x: u128) -> u64 {
        if self.0 == MERSENNE {
            reduce_mersenne(x)
        } else {
            (x % self.0 as u128) as u64
        }
    }
    #[inline]
    fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }
    #[inline]
    fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }
    #[inline]
    fn mul(self, a: u64, b: u64) -> u64 {
        self.reduce(a as u128 * b as u128)
    }
    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
    fn inv(self, a: u64) -> u64 {
        self.pow(a, self.0 - 2)
    }
}

/// Element `a + b i` of `F_p[i] = F_{p^2}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Fp2 {
    a: u64,
    b: u64,
}

impl Fp2 {
    fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
    fn mul(self, o: Fp2, f: Zp) -> Fp2 {
        Fp2 {
            a: f.sub(f.mul(self.a, o.a), f.mul(self.b, o.b)),
            b: f.add(f.mul(self.a, o.b), f.mul(self.b, o.a)),
        }
    }
    fn sub(self, o: Fp2, f: Zp) -> Fp2 {
        Fp2 {
            a: f.sub(self.a, o.a),
            b: f.sub(self.b, o.b),
        }
    }
    fn inv(self, f: Zp) -> Fp2 {
        let n = f.add(f.mul(self.a, self.a), f.mul(self.b, self.b));
        let ni = f.inv(n);
        Fp2 {
            a: f.mul(self.a, ni),
            b: f.mul(f.sub(0, self.b), ni),
        }
    }
}

fn bigint_mod(n: &BigInt, f: Zp) -> u64 {
    let mut acc = 0u64;
    let base = f.reduce(1u128 << 64);
    for d in n.magnitude().iter_u64_digits().rev() {
        acc = f.add(f.mul(acc, base), f.reduce(d as u128));
    }
    if n.sign() == Sign::Minus {
        f.sub(0, acc)
    } else {
        acc
    }
}

fn rat_mod(r: &BigRational, f: Zp) -> Option<u64> {
    if r.is_integer() {
        return Some(bigint_mod(r.numer(), f));
    }
    let d = bigint_mod(r.denom(), f);
    if d == 0 {
        return None;
    }
    Some(f.mul(bigint_mod(r.numer(), f), f.inv(d)))
}

fn reduce_poly(v: &[GaussRat], f: Zp) -> Option<Vec<Fp2>> {
    v.iter()
        .map(|c| {
            Some(Fp2 {
                a: rat_mod(&c.re, f)?,
                b: rat_mod(&c.im, f)?,
            })
        })
        .collect()
}

fn trim(v: &mut Vec<Fp2>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn rem(mut r: Vec<Fp2>, d: &[Fp2], f: Zp) -> Vec<Fp2> {
    let dd = d.len() - 1;
    let inv = d[dd].inv(f);
    trim(&mut r);
    while r.len() >= d.len() {
        let k = r.len() - 1 - dd;
        let t = r[r.len() - 1].mul(inv, f);
        for (j, dj) in d.iter().enumerate() {
            r[k + j] = r[k + j].sub(t.mul(*dj, f), f);
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Monic gcd mod `p`, or `None` if the reduction is not degree-preserving.
fn gcd_mod(a: &[GaussRat], b: &[GaussRat], f: Zp) -> Option<Vec<Fp2>> {
    let (mut x, mut y) = (reduce_poly(a, f)?, reduce_poly(b, f)?);
    let (la, lb) = (x.len(), y.len());
    trim(&mut x);
    trim(&mut y);
    if x.len() != la || y.len() != lb || x.is_empty() || y.is_empty() {
        return None;
    }
    while !y.is_empty() {
        let r = rem(x, &y, f);
        x = y;
        y = r;
    }
    let inv = x[x.len() - 1].inv(f);
    Some(x.into_iter().map(|c| c.mul(inv, f)).collect())
}

pub(crate) type Cofactors = (Vec<GaussRat>, Vec<GaussRat>, Vec<GaussRat>);

/// `n/d` with `n = a d (mod m)` and `|n|, d <= sqrt(m/2)`, if any.
fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let qt = &r0 / &r1;
        let r2 = &r0 - &qt * &r1;
        let t2 = &t0 - &qt * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

fn crt(r1: &BigInt, m1: &BigInt, r2: u64, p: u64) -> BigInt {
    // r = r1 + m1 * ((r2 - r1) / m1 mod p)
    let f = Zp(p);
    let m1p = bigint_mod(m1, f);
    let diff = f.sub(r2, bigint_mod(r1, f));
    let k = f.mul(diff, f.inv(m1p));
    r1 + m1 * BigInt::from(k)
}

/// Monic gcd over Q(i) by reduction modulo several primes, Chinese
/// remaindering, rational reconstruction and an exact divisibility check.
/// Returns the gcd with the cofactors `a/g`, `b/g`; `None` if the primes run
/// out before a candidate verifies.
pub(crate) fn modular_gcd(a: &[GaussRat], b: &[GaussRat]) -> Option<Cofactors> {
    let mut modulus = BigInt::one();
    let mut acc: Vec<(BigInt, BigInt)> = Vec::new();
    for &p in &PRIMES {
        let f = Zp(p);
        let Some(g) = gcd_mod(a, b, f) else { continue };
        if g.len() == 1 {
            return Some((vec![GaussRat::one()], a.to_vec(), b.to_vec()));
        }
        if !acc.is_empty() && g.len() > acc.len() {
            continue;
        }
        if g.len() < acc.len() || acc.is_empty() {
            modulus = BigInt::one();
            acc = g
                .iter()
                .map(|c| (BigInt::from(c.a), BigInt::from(c.b)))
                .collect();
        } else {
            for (x, c) in acc.iter_mut().zip(&g) {
                *x = (crt(&x.0, &modulus, c.a, p), crt(&x.1, &modulus, c.b, p));
            }
        }
        modulus *= BigInt::from(p);
        let cand: Option<Vec<GaussRat>> = acc
            .iter()
            .map(|(re, im)| {
                Some(GaussRat::new(
                    rational_reconstruct(re, &modulus)?,
                    rational_reconstruct(im, &modulus)?,
                ))
            })
            .collect();
        if let Some(cand) = cand {
            let (qa, ra) = dense::div_rem(a, &cand);
            if ra.is_empty() {
                let (qb, rb) = dense::div_rem(b, &cand);
                if rb.is_empty() {
                    return Some((cand, qa, qb));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn detects_coprime_and_common_factor() {
        // s^2 + 1 and s - 1 are coprime
        assert_eq!(
            modular_gcd(&[g(1), g(0), g(1)], &[g(-1), g(1)]).map(|t| t.0),
            Some(vec![g(1)])
        );
        // s^2 - 1 and s + 1 share a factor
        assert_eq!(
            modular_gcd(&[g(-1), g(0), g(1)], &[g(1), g(1)]).map(|t| t.0),
            Some(vec![g(1), g(1)])
        );
        // s^2 + 1 and s - i share a factor over Q(i)
        let mi = -GaussRat::i();
        assert_eq!(
            modular_gcd(&[g(1), g(0), g(1)], &[mi.clone(), g(1)]).map(|t| t.0),
            Some(vec![mi, g(1)])
        );
    }

    #[test]
    fn big_modular_reduction() {
        let f = Zp(MERSENNE);
        let n: BigInt = BigInt::from(MERSENNE) * BigInt::from(MERSENNE) + BigInt::from(5);
        assert_eq!(bigint_mod(&n, f), 5);
        assert_eq!(bigint_mod(&-n, f), MERSENNE - 5);
        let g = Zp(PRIMES[3]);
        assert_eq!(bigint_mod(&(BigInt::from(PRIMES[3]) * 7 + 3), g), 3);
    }

    #[test]
    fn modular_gcd_matches_euclid() {
        let f1 = [g(1), g(0), g(1)]; // s^2 + 1
        let f2 = [GaussRat::from_frac(-1, 3), g(1)]; // s - 1/3
        let f3 = [g(2), GaussRat::i(), g(0), g(1)]; // s^3 + i s + 2
        let mul = |a: &[GaussRat], b: &[GaussRat]| {
            let mut out = vec![GaussRat::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += &(x * y);
                }
            }
            out
        };
        let a = mul(&mul(&f1, &f2), &f3);
        let b = mul(&mul(&f2, &f3), &[g(5), g(1)]);
        let expect = dense::gcd(&a, &b);
        assert_eq!(modular_gcd(&a, &b).map(|t| t.0), Some(expect));
        assert_eq!(modular_gcd(&f1, &f2).map(|t| t.0), Some(vec![g(1)]));
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(MERSENNE);
        let f = Zp(MERSENNE);
        let r = f.mul(bigint_mod(&BigInt::from(-7), f), f.inv(9));
        assert_eq!(
            rational_reconstruct(&BigInt::from(r), &m),
            Some(BigRational::new((-7).into(), 9.into()))
        );
    }
}
