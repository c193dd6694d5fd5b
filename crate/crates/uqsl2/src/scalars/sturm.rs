//! Real-root counting on the positive half-line by Sturm sequences.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

type Poly = Vec<BigRational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn rem(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let t = &r[r.len() - 1] / &b[db];
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &t * bj;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut x: Poly = a.to_vec();
    let mut y: Poly = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

fn derivative(p: &[BigRational]) -> Poly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRational::from_integer((k as i64).into()))
        .collect()
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs.filter(|s| *s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sign(c: &BigRational) -> i8 {
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct roots in `(0, inf)`; requires `p(0) != 0`.
pub(crate) fn count_positive_roots(p: &[BigRational]) -> usize {
    let mut p0: Poly = p.to_vec();
    trim(&mut p0);
    if p0.len() <= 1 {
        return 0;
    }
    debug_assert!(!p0[0].is_zero());
    let mut seq = vec![p0.clone(), derivative(&p0)];
    loop {
        let n = seq.len();
        let r = rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    let at_zero = sign_changes(seq.iter().map(|f| f.first().map(sign).unwrap_or(0)));
    let at_inf = sign_changes(seq.iter().map(|f| f.last().map(sign).unwrap_or(0)));
    at_zero - at_inf
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly {
        v.iter()
            .map(|c| BigRational::from_integer((*c).into()))
            .collect()
    }

    #[test]
    fn counts() {
        assert_eq!(count_positive_roots(&p(&[1, 1])), 0);
        assert_eq!(count_positive_roots(&p(&[-1, 1])), 1);
        // (s-1)^2 (s-2)(s+3)
        let f = p(&[-6, 13, -7, -1, 1]);
        assert_eq!(count_positive_roots(&f), 2);
        assert_eq!(count_positive_roots(&p(&[1, 0, 1])), 0);
    }
}
