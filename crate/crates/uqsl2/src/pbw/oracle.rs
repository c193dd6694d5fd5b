//! A free module with basis `v_{m,n,d,p}` on which `theta, x, y, z` act by
//! explicit recursive formulas such that `theta^m z^n a^d b^p v_0 = v_{m,n,d,p}`.
//! Applying a word to `v_0` gives its coordinates in the second basis without
//! going through any multiplication table, so it serves as an independent check.

use std::collections::{BTreeMap, HashMap};

use crate::scalars::{qbrace, qint, GaussRat, RatFunc};

use super::basis2::{Pbw2Element, Pbw2Monomial};
use super::Gen;

type V = Pbw2Monomial;
type Vec4 = BTreeMap<V, RatFunc>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Op {
    Theta,
    X,
    Y,
    Z,
}

pub struct OracleModule {
    memo: HashMap<(Op, V), Vec4>,
    q: [RatFunc; 5],
    two: RatFunc,
    delta: RatFunc,
    half: RatFunc,
}

impl Default for OracleModule {
    fn default() -> Self {
        Self::new()
    }
}

fn add_into(acc: &mut Vec4, v: &Vec4, c: &RatFunc) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        let s = acc.get(k).map(|y| y + &(x * c)).unwrap_or_else(|| x * c);
        if s.is_zero() {
            acc.remove(k);
        } else {
            acc.insert(*k, s);
        }
    }
}

fn unit(k: V) -> Vec4 {
    BTreeMap::from([(k, RatFunc::one())])
}

impl OracleModule {
    pub fn new() -> Self {
        OracleModule {
            memo: HashMap::new(),
            // q^-2, q^-1, 1, q, q^2
            q: [
                RatFunc::q_pow(-2),
                RatFunc::q_pow(-1),
                RatFunc::one(),
                RatFunc::q(),
                RatFunc::q_pow(2),
            ],
            two: qint(2),
            delta: RatFunc::delta(),
            half: RatFunc::from_gauss(GaussRat::from_frac(1, 2)),
        }
    }

    fn qp(&self, k: i32) -> &RatFunc {
        &self.q[(k + 2) as usize]
    }

    fn act_vec(&mut self, op: Op, v: &Vec4) -> Vec4 {
        let mut out = Vec4::new();
        for (k, c) in v {
            let img = self.act(op, *k);
            add_into(&mut out, &img, c);
        }
        out
    }

    fn act(&mut self, op: Op, v: V) -> Vec4 {
        if op == Op::Theta {
            return unit(V::new(v.m + 1, v.n, v.d, v.p));
        }
        if let Some(r) = self.memo.get(&(op, v)) {
            return r.clone();
        }
        let r = self.compute(op, v);
        self.memo.insert((op, v), r.clone());
        r
    }

    fn compute(&mut self, op: Op, v: V) -> Vec4 {
        let one = RatFunc::one();
        let mut out = Vec4::new();
        if v.m > 0 {
            let prev = V::new(v.m - 1, v.n, v.d, v.p);
            let theta_prev = unit(V::new(v.m, v.n, v.d, v.p));
            let z_prev = self.act(Op::Z, prev);
            match op {
                Op::Z => {
                    let t = self.act_vec(Op::Theta, &z_prev);
                    add_into(&mut out, &t, &one);
                    let x = self.act(Op::X, prev);
                    add_into(&mut out, &x, &one);
                    let y = self.act(Op::Y, prev);
                    add_into(&mut out, &y, &-&one);
                }
                Op::X => {
                    let x = self.act(Op::X, prev);
                    let tx = self.act_vec(Op::Theta, &x);
                    add_into(&mut out, &tx, &self.qp(-2).clone());
                    add_into(&mut out, &z_prev, &(self.qp(-1) * &self.two));
                    add_into(&mut out, &theta_prev, &-self.qp(-1));
                }
                Op::Y => {
                    let y = self.act(Op::Y, prev);
                    let ty = self.act_vec(Op::Theta, &y);
                    add_into(&mut out, &ty, &self.qp(2).clone());
                    add_into(&mut out, &z_prev, &-(self.qp(1) * &self.two));
                    add_into(&mut out, &theta_prev, &self.qp(1).clone());
                }
                Op::Theta => unreachable!(),
            }
            return out;
        }
        if op == Op::Z {
            return unit(V::new(0, v.n + 1, v.d, v.p));
        }
        if v.n > 0 {
            let prev = V::new(0, v.n - 1, v.d, v.p);
            let g = self.act(op, prev);
            let zg = self.act_vec(Op::Z, &g);
            let z_prev = unit(V::new(0, v.n, v.d, v.p));
            if op == Op::X {
                add_into(&mut out, &zg, &self.qp(2).clone());
                add_into(&mut out, &z_prev, &self.qp(1).clone());
            } else {
                add_into(&mut out, &zg, &self.qp(-2).clone());
                add_into(&mut out, &z_prev, &-self.qp(-1));
            }
            return out;
        }
        let sign = if op == Op::X { -&one } else { one.clone() };
        if v.d == 0 {
            // x, y on b^p v_0: half of (q - q^-1) b^(p+1) -/+ a b^p
            add_into(
                &mut out,
                &unit(V::new(0, 0, 0, v.p + 1)),
                &(&self.half * &self.delta),
            );
            add_into(&mut out, &unit(V::new(0, 0, 1, v.p)), &(&self.half * &sign));
            return out;
        }
        // On a b^p v_0 use x + y = (q - q^-1) b and y - x = a together with
        // a^2 = (q - q^-1)^2 b^2 + 4 b + 2{2} z^2 and ba = ab - 2[2] z^2.
        let mut sum = Vec4::new();
        add_into(&mut sum, &unit(V::new(0, 0, 1, v.p + 1)), &self.delta);
        add_into(
            &mut sum,
            &unit(V::new(0, 2, 0, v.p)),
            &-(&(&RatFunc::from_int(2) * &self.delta) * &self.two),
        );
        let mut diff = Vec4::new();
        add_into(
            &mut diff,
            &unit(V::new(0, 0, 0, v.p + 2)),
            &(&self.delta * &self.delta),
        );
        add_into(
            &mut diff,
            &unit(V::new(0, 0, 0, v.p + 1)),
            &RatFunc::from_int(4),
        );
        add_into(
            &mut diff,
            &unit(V::new(0, 2, 0, v.p)),
            &(&RatFunc::from_int(2) * &qbrace(2)),
        );
        add_into(&mut out, &sum, &self.half);
        add_into(&mut out, &diff, &(&self.half * &sign));
        out
    }

    fn apply_gen(&mut self, g: Gen, v: &Vec4) -> Vec4 {
        let one = RatFunc::one();
        match g {
            Gen::Theta => self.act_vec(Op::Theta, v),
            Gen::SmallX => self.act_vec(Op::X, v),
            Gen::SmallY => self.act_vec(Op::Y, v),
            Gen::SmallZ => self.act_vec(Op::Z, v),
            Gen::A => {
                let mut out = self.act_vec(Op::Y, v);
                let x = self.act_vec(Op::X, v);
                add_into(&mut out, &x, &-&one);
                out
            }
            Gen::B => {
                let y = self.act_vec(Op::Y, v);
                let mut out = self.act_vec(Op::X, &y);
                out.iter_mut().for_each(|(_, c)| *c = -&*c);
                let z = self.act_vec(Op::Z, v);
                let zz = self.act_vec(Op::Z, &z);
                add_into(&mut out, &zz, &-self.qp(2));
                out
            }
            Gen::X | Gen::Y => {
                let mut out = self.act_vec(if g == Gen::X { Op::X } else { Op::Y }, v);
                out.iter_mut().for_each(|(_, c)| *c = &*c * &self.delta);
                add_into(&mut out, v, &one);
                out
            }
            Gen::Z => {
                let mut out = self.act_vec(Op::Z, v);
                out.iter_mut().for_each(|(_, c)| *c = &*c * &self.delta);
                out
            }
        }
    }

    /// Apply `scalar * letters` to `v_{0,0,0,0}`.
    pub fn apply_word(&mut self, scalar: &RatFunc, letters: &[Gen]) -> Pbw2Element {
        let mut v = Vec4::new();
        add_into(&mut v, &unit(V::new(0, 0, 0, 0)), scalar);
        for g in letters.iter().rev() {
            v = self.apply_gen(*g, &v);
        }
        let mut out = Pbw2Element::zero();
        for (k, c) in v {
            out.add_term(k, c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_words_hit_basis_vectors() {
        let mut o = OracleModule::new();
        assert_eq!(
            o.apply_word(&RatFunc::one(), &[]),
            Pbw2Element::basis(0, 0, 0, 0)
        );
        assert_eq!(
            o.apply_word(&RatFunc::one(), &[Gen::Theta, Gen::SmallZ, Gen::A]),
            Pbw2Element::basis(1, 1, 1, 0)
        );
        let w = [Gen::Theta, Gen::Theta, Gen::SmallZ, Gen::A, Gen::B, Gen::B];
        assert_eq!(
            o.apply_word(&RatFunc::one(), &w),
            Pbw2Element::basis(2, 1, 1, 2)
        );
    }
}
