//! Finite-dimensional type-1 irreps of the compact quantum group, the matrix
//! of `theta = i q^{-1/2}(E - F K)` and its characteristic polynomial, and the
//! dual q-Krawtchouk polynomials behind the spectrum computation.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::par::{self, Parallelism};
use crate::scalars::{qint, Field, GaussRat, RatFunc, ScalarError};

/// Largest dimension accepted by [`spectrum_check`] by default.
pub const DEFAULT_MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UqError {
    #[error("dimension must be at least 1")]
    InvalidDimension,
    #[error("s0 must be a rational strictly between 0 and 1")]
    InvalidS0,
    #[error("neither reading of the Pochhammer symbol reproduces the orthogonality relations")]
    PochhammerConventionUnresolved,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S: Field> {
    n: usize,
    data: Vec<S>,
}

impl<S: Field> Matrix<S> {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn diag(d: Vec<S>) -> Self {
        let mut m = Self::zero(d.len());
        for (i, x) in d.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: S) {
        self.data[i * self.n + j] = x;
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn trace(&self) -> S {
        (0..self.n).fold(S::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn map<T: Field>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Coefficients `c_0, ..., c_n` of `det(X - A)`, lowest first, by the
    /// Faddeev-LeVerrier recursion.
    pub fn char_poly(&self) -> Vec<S> {
        let n = self.n;
        let mut c = vec![S::zero(); n + 1];
        c[n] = S::one();
        let mut m = Self::zero(n);
        for k in 1..=n {
            let mut next = self.mul(&m);
            for i in 0..n {
                let v = next.get(i, i).add(&c[n - k + 1]);
                next.set(i, i, v);
            }
            let t = self.mul(&next).trace();
            c[n - k] = t.neg().div(&S::from_int(k as i64)).expect("k > 0");
            m = next;
        }
        c
    }
}

impl<S: Field> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// The `(n+1)`-dimensional irrep on `v_0, ..., v_n`:
/// `E v_j = [j+1] v_{j+1}`, `F v_j = [n-j+1] v_{j-1}`, `K v_j = q^{2j-n} v_j`.
#[derive(Clone, PartialEq, Debug)]
pub struct Irrep {
    pub dim: usize,
    pub e: Matrix<RatFunc>,
    pub f: Matrix<RatFunc>,
    pub k: Matrix<RatFunc>,
    pub k_inv: Matrix<RatFunc>,
}

impl Irrep {
    /// The three defining relations, checked exactly.
    pub fn relations_hold(&self) -> bool {
        let q2 = RatFunc::q_pow(2);
        let qm2 = RatFunc::q_pow(-2);
        let kek = self.k.mul(&self.e).mul(&self.k_inv);
        let kfk = self.k.mul(&self.f).mul(&self.k_inv);
        let comm = self.e.mul(&self.f).sub(&self.f.mul(&self.e));
        let rhs = self
            .k
            .sub(&self.k_inv)
            .scale(&RatFunc::delta().inv().expect("nonzero"));
        kek == self.e.scale(&q2) && kfk == self.f.scale(&qm2) && comm == rhs
    }
}

pub fn irrep(dim: usize) -> Result<Irrep, UqError> {
    if dim == 0 {
        return Err(UqError::InvalidDimension);
    }
    let n = dim - 1;
    let mut e = Matrix::zero(dim);
    let mut f = Matrix::zero(dim);
    for j in 0..n {
        // column j is the image of v_j
        e.set(j + 1, j, qint(j as i64 + 1));
        f.set(j, j + 1, qint((n - j) as i64));
    }
    let k = Matrix::diag(
        (0..dim)
            .map(|j| RatFunc::q_pow(2 * j as i64 - n as i64))
            .collect(),
    );
    let k_inv = Matrix::diag(
        (0..dim)
            .map(|j| RatFunc::q_pow(n as i64 - 2 * j as i64))
            .collect(),
    );
    Ok(Irrep {
        dim,
        e,
        f,
        k,
        k_inv,
    })
}

/// `i q^{-1/2} (E - F K)` on the irrep of dimension `dim`.
pub fn theta_matrix(dim: usize) -> Result<Matrix<RatFunc>, UqError> {
    let r = irrep(dim)?;
    let c = &RatFunc::i() * &RatFunc::s_pow(-1);
    Ok(r.e.sub(&r.f.mul(&r.k)).scale(&c))
}

/// `[m]_q` for `m = -n, -n+2, ..., n`.
pub fn expected_eigenvalues(dim: usize) -> Vec<RatFunc> {
    let n = dim as i64 - 1;
    (0..dim as i64).map(|j| qint(2 * j - n)).collect()
}

fn poly_mul<S: Field>(a: &[S], b: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// `prod (X - r)` over the given roots, lowest coefficient first.
pub fn poly_from_roots<S: Field>(roots: &[S]) -> Vec<S> {
    roots.iter().fold(vec![S::one()], |acc, r| {
        poly_mul(&acc, &[r.neg(), S::one()])
    })
}

/// The characteristic polynomial of `theta` equals `prod (X - [m]_q)`; the
/// roots are pairwise distinct, so `theta` is diagonalizable.
pub fn spectrum_check(dim: usize) -> Result<bool, UqError> {
    let cp = theta_matrix(dim)?.char_poly();
    let roots = expected_eigenvalues(dim);
    let distinct = roots
        .iter()
        .enumerate()
        .all(|(i, a)| roots[..i].iter().all(|b| a != b));
    Ok(distinct && cp == poly_from_roots(&roots))
}

/// [`spectrum_check`] over several dimensions.
pub fn spectrum_sweep(dims: &[usize], mode: Parallelism) -> Result<Vec<bool>, UqError> {
    par::try_map(dims, mode, |d| spectrum_check(*d))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PochhammerReading {
    /// `(a;b)_r = prod_{j<r} (1 - a b^j)`, `r` factors.
    Standard,
    /// `r + 1` factors, `j = 0..=r`.
    Inclusive,
}

impl PochhammerReading {
    pub fn name(self) -> &'static str {
        match self {
            PochhammerReading::Standard => "standard",
            PochhammerReading::Inclusive => "inclusive",
        }
    }
}

/// The reading that reproduces the orthogonality relations.
pub const POCHHAMMER: PochhammerReading = PochhammerReading::Standard;

pub fn pochhammer<S: Field>(a: &S, b: &S, r: usize, reading: PochhammerReading) -> S {
    let count = match reading {
        PochhammerReading::Standard => r,
        PochhammerReading::Inclusive => r + 1,
    };
    let mut acc = S::one();
    let mut pw = a.clone();
    for _ in 0..count {
        acc = acc.mul(&S::one().sub(&pw));
        pw = pw.mul(b);
    }
    acc
}

/// Dual q-Krawtchouk family in `t` over rational functions of an
/// indeterminate `s` (represented by the generator `s` of [`RatFunc`]).
#[derive(Clone, PartialEq, Debug)]
pub struct KrawtchoukFamily {
    pub n: usize,
    /// `polys[j]` lists the coefficients of `P_j`, lowest degree first.
    pub polys: Vec<Vec<RatFunc>>,
    /// `t_j = s^{-j} - s^{j-n}`.
    pub nodes: Vec<RatFunc>,
    /// `Q = lead(P_n) prod (t - t_j)`.
    pub q_poly: Vec<RatFunc>,
}

fn s_pow(k: i64) -> RatFunc {
    RatFunc::s_pow(k)
}

fn trim(p: &mut Vec<RatFunc>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_combine(a: &[RatFunc], ca: &RatFunc, b: &[RatFunc], cb: &RatFunc) -> Vec<RatFunc> {
    let len = a.len().max(b.len());
    let get = |p: &[RatFunc], i: usize| p.get(i).cloned().unwrap_or_default();
    let mut out: Vec<RatFunc> = (0..len)
        .map(|i| &(&get(a, i) * ca) + &(&get(b, i) * cb))
        .collect();
    trim(&mut out);
    out
}

/// `P_0 = 1`, `t P_j = (1 - s^{j-n}) P_{j+1} - (1 - s^j) s^{-n} P_{j-1}`.
pub fn krawtchouk(n: usize) -> Result<KrawtchoukFamily, UqError> {
    if n == 0 {
        return Err(UqError::InvalidDimension);
    }
    let ni = n as i64;
    let one = RatFunc::one();
    let mut polys: Vec<Vec<RatFunc>> = vec![vec![one.clone()]];
    for j in 0..n {
        let ji = j as i64;
        let mut tp = vec![RatFunc::zero()];
        tp.extend(polys[j].iter().cloned());
        let prev = if j == 0 {
            Vec::new()
        } else {
            polys[j - 1].clone()
        };
        let c_prev = &(&one - &s_pow(ji)) * &s_pow(-ni);
        let denom = (&one - &s_pow(ji - ni))
            .inv()
            .ok_or(ScalarError::DivisionByZero)?;
        polys.push(poly_combine(&tp, &denom, &prev, &(&c_prev * &denom)));
    }
    let nodes: Vec<RatFunc> = (0..=ni).map(|j| &s_pow(-j) - &s_pow(j - ni)).collect();
    let lead = polys[n].last().cloned().expect("P_n is nonzero");
    let q_poly = poly_from_roots(&nodes).iter().map(|c| c * &lead).collect();
    Ok(KrawtchoukFamily {
        n,
        polys,
        nodes,
        q_poly,
    })
}

impl KrawtchoukFamily {
    /// `t P_n - Q - (1 - s^{-n}) P_{n-1}`, which should vanish.
    pub fn q_identity_residual(&self) -> Vec<RatFunc> {
        let n = self.n;
        let mut tp = vec![RatFunc::zero()];
        tp.extend(self.polys[n].iter().cloned());
        let minus = -RatFunc::one();
        let r = poly_combine(&tp, &RatFunc::one(), &self.q_poly, &minus);
        let c = &RatFunc::one() - &s_pow(-(n as i64));
        poly_combine(&r, &RatFunc::one(), &self.polys[n - 1], &-c)
    }

    /// Gram matrix of `P_0..P_n` under the weighted sum over the nodes, and
    /// the claimed diagonal, both evaluated at `s = s0`.
    pub fn gram_at(
        &self,
        s0: &BigRational,
        reading: PochhammerReading,
    ) -> Result<(Matrix<GaussRat>, Vec<Option<GaussRat>>), UqError> {
        let n = self.n;
        let ni = n as i64;
        let q0 = s0 * s0;
        let ev = |x: &RatFunc| x.eval_q(&q0);
        let s = GaussRat::real(s0.clone());
        let sp = |k: i64| s.pow(k).expect("s0 is nonzero");
        let s2 = sp(2);
        let poch = |a: &GaussRat, b: &GaussRat, r: usize| pochhammer(a, b, r, reading);
        let norm = poch(&GaussRat::from_int(-1), &s, n + 1)
            .inv()
            .ok_or(ScalarError::DivisionByZero)?;
        let mut weights = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let ji = j as i64;
            let num = &(&sp(ji) + &sp(ni - ji)) * &poch(&s2, &s2, n);
            let den = &poch(&s2, &s2, j) * &poch(&s2, &s2, n - j);
            let w = num.div(&den).ok_or(ScalarError::DivisionByZero)?;
            weights.push(w);
        }
        let nodes: Vec<GaussRat> = self.nodes.iter().map(ev).collect::<Result<_, _>>()?;
        let mut values = Vec::with_capacity(n + 1);
        for p in &self.polys {
            let coeffs: Vec<GaussRat> = p.iter().map(ev).collect::<Result<_, _>>()?;
            values.push(
                nodes
                    .iter()
                    .map(|t| {
                        coeffs
                            .iter()
                            .rev()
                            .fold(GaussRat::zero(), |acc, c| &(&acc * t) + c)
                    })
                    .collect::<Vec<_>>(),
            );
        }
        let mut gram = Matrix::zero(n + 1);
        for a in 0..=n {
            for b in 0..=n {
                let mut acc = GaussRat::zero();
                for j in 0..=n {
                    acc += &(&(&values[a][j] * &values[b][j]) * &weights[j]);
                }
                gram.set(a, b, &acc * &norm);
            }
        }
        let claimed = (0..=n)
            .map(|j| {
                let sign = sp(-ni).neg().pow(j as i64).expect("nonzero");
                (&sign * &poch(&s, &s, j)).div(&poch(&sp(-ni), &s, j))
            })
            .collect();
        Ok((gram, claimed))
    }
}

fn validate_s0(s0: &BigRational) -> Result<(), UqError> {
    if !s0.is_positive() || *s0 >= BigRational::one() {
        return Err(UqError::InvalidS0);
    }
    Ok(())
}

/// Whether the Gram matrix under `reading` is diagonal with the claimed
/// entries. A claimed value with a vanishing denominator counts as a failure.
pub fn orthogonality_holds(
    n: usize,
    s0: &BigRational,
    reading: PochhammerReading,
) -> Result<bool, UqError> {
    validate_s0(s0)?;
    let fam = krawtchouk(n)?;
    let (gram, claimed) = match fam.gram_at(s0, reading) {
        Ok(x) => x,
        Err(UqError::Scalar(ScalarError::DivisionByZero)) => return Ok(false),
        Err(e) => return Err(e),
    };
    for a in 0..=n {
        for b in 0..=n {
            let ok = if a == b {
                claimed[a].as_ref() == Some(gram.get(a, a))
            } else {
                gram.get(a, b).is_zero()
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Orthogonality with the adopted reading. `Ok(false)` means only the other
/// reading validates; neither validating is an error.
pub fn orthogonality_check(n: usize, s0: &BigRational) -> Result<bool, UqError> {
    if orthogonality_holds(n, s0, POCHHAMMER)? {
        return Ok(true);
    }
    let other = match POCHHAMMER {
        PochhammerReading::Standard => PochhammerReading::Inclusive,
        PochhammerReading::Inclusive => PochhammerReading::Standard,
    };
    if orthogonality_holds(n, s0, other)? {
        Ok(false)
    } else {
        Err(UqError::PochhammerConventionUnresolved)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use num_bigint::BigInt;

    fn gi(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn small_irreps() {
        let r = irrep(1).unwrap();
        assert!(r.e.is_zero() && r.f.is_zero() && r.k == Matrix::identity(1));
        let r = irrep(2).unwrap();
        assert_eq!(r.e.get(1, 0), &RatFunc::one());
        assert_eq!(r.f.get(0, 1), &RatFunc::one());
        assert_eq!(r.k, Matrix::diag(vec![RatFunc::q_pow(-1), RatFunc::q()]));
        assert_eq!(irrep(0), Err(UqError::InvalidDimension));
    }

    #[test]
    fn commutator_is_diagonal_q_integers() {
        let r = irrep(4).unwrap();
        let c = r.e.mul(&r.f).sub(&r.f.mul(&r.e));
        let want: Vec<RatFunc> = (0..4).map(|j| qint(2 * j - 3)).collect();
        assert_eq!(c, Matrix::diag(want));
    }

    #[test]
    fn relations_up_to_eight() {
        for d in 1..=DEFAULT_MAX_DIM {
            assert!(irrep(d).unwrap().relations_hold(), "dim {d}");
        }
    }

    #[test]
    fn theta_small() {
        assert!(theta_matrix(1).unwrap().is_zero());
        // X^2 - 1
        assert_eq!(
            theta_matrix(2).unwrap().char_poly(),
            vec![-RatFunc::one(), RatFunc::zero(), RatFunc::one()]
        );
        // X (X - [2]) (X + [2]) = X^3 - [2]^2 X
        let two = qint(2);
        let want = vec![
            RatFunc::zero(),
            -(&two * &two),
            RatFunc::zero(),
            RatFunc::one(),
        ];
        assert_eq!(theta_matrix(3).unwrap().char_poly(), want);
    }

    /// Determinant by fraction-free elimination over Q(i), test-side.
    fn det(mut m: Vec<Vec<GaussRat>>) -> GaussRat {
        let n = m.len();
        let mut d = gi(1);
        for c in 0..n {
            let Some(p) = (c..n).find(|r| !m[*r][c].is_zero()) else {
                return gi(0);
            };
            if p != c {
                m.swap(p, c);
                d = -d;
            }
            let piv = m[c][c].clone();
            d = &d * &piv;
            for r in c + 1..n {
                let f = &m[r][c] / &piv;
                for k in c..n {
                    let v = &m[r][k] - &(&f * &m[c][k]);
                    m[r][k] = v;
                }
            }
        }
        d
    }

    #[test]
    fn spectrum_against_numeric_determinants() {
        // at q = 4 (s = 2): det(x - theta) = prod (x - [m]) for several x
        let q0 = rat(4, 1);
        for dim in 1..=6usize {
            let th = theta_matrix(dim).unwrap().map(|c| c.eval_q(&q0).unwrap());
            let eig: Vec<GaussRat> = expected_eigenvalues(dim)
                .iter()
                .map(|c| c.eval_q(&q0).unwrap())
                .collect();
            for x in [gi(0), gi(3), GaussRat::from_parts((1, 2), (1, 3))] {
                let m: Vec<Vec<GaussRat>> = (0..dim)
                    .map(|i| {
                        (0..dim)
                            .map(|j| {
                                let d = if i == j { x.clone() } else { gi(0) };
                                &d - th.get(i, j)
                            })
                            .collect()
                    })
                    .collect();
                let want = eig.iter().fold(gi(1), |acc, r| &acc * &(&x - r));
                assert_eq!(det(m), want, "dim {dim}");
            }
        }
    }

    #[test]
    fn spectrum_one_to_eight() {
        for d in 1..=DEFAULT_MAX_DIM {
            assert!(spectrum_check(d).unwrap(), "dim {d}");
        }
        let r = spectrum_sweep(&[2, 5], Parallelism::Sequential).unwrap();
        assert_eq!(r, vec![true, true]);
    }

    #[test]
    fn wrong_eigenvalues_are_rejected() {
        // the non-symmetric reading [m] = q^m + ... + q^-m would give other roots
        let th = theta_matrix(3).unwrap().char_poly();
        let wrong = poly_from_roots(&[RatFunc::zero(), RatFunc::q(), -RatFunc::q()]);
        assert_ne!(th, wrong);
    }

    #[test]
    fn first_polynomials() {
        let f = krawtchouk(3).unwrap();
        assert_eq!(f.polys[0], vec![RatFunc::one()]);
        let c = (&RatFunc::one() - &RatFunc::s_pow(-3)).inv().unwrap();
        assert_eq!(f.polys[1], vec![RatFunc::zero(), c]);
    }

    #[test]
    fn degrees_parities_and_q_identity() {
        for n in 1..=6 {
            let f = krawtchouk(n).unwrap();
            for (j, p) in f.polys.iter().enumerate() {
                assert_eq!(p.len(), j + 1, "degree of P_{j}, n = {n}");
                assert!(p
                    .iter()
                    .enumerate()
                    .all(|(k, c)| (k + j) % 2 == 0 || c.is_zero()));
            }
            assert!(f.q_identity_residual().is_empty(), "n = {n}");
        }
    }

    /// `P_j(t)` at `s = s0` straight from the recursion over Q, test-side.
    fn p_at(n: i64, j: i64, s0: &BigRational, t: &BigRational) -> BigRational {
        let one = BigRational::one();
        let sp = |k: i64| {
            if k >= 0 {
                num_traits::pow(s0.clone(), k as usize)
            } else {
                num_traits::pow(s0.recip(), (-k) as usize)
            }
        };
        let (mut prev, mut cur) = (BigRational::from_integer(BigInt::from(0)), one.clone());
        for i in 0..j {
            let next = (t * &cur + (&one - sp(i)) * sp(-n) * &prev) / (&one - sp(i - n));
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }

    #[test]
    fn orthogonality_off_diagonal_oracle() {
        let s0 = rat(1, 4);
        let f = krawtchouk(3).unwrap();
        let (gram, _) = f.gram_at(&s0, POCHHAMMER).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                if a != b {
                    assert!(gram.get(a, b).is_zero());
                }
            }
        }
        // P_2 at the node t_1 agrees with the direct recursion
        let t1 = &s0.recip() - &(&s0 * &s0);
        let q0 = &s0 * &s0;
        let val = f.polys[2].iter().rev().fold(gi(0), |acc, c| {
            &(&acc * &GaussRat::real(t1.clone())) + &c.eval_q(&q0).unwrap()
        });
        assert_eq!(val, GaussRat::real(p_at(3, 2, &s0, &t1)));
    }

    #[test]
    fn pochhammer_reading_is_determined() {
        for n in 1..=3 {
            for s0 in [rat(1, 4), rat(2, 3)] {
                assert!(orthogonality_holds(n, &s0, PochhammerReading::Standard).unwrap());
                assert!(!orthogonality_holds(n, &s0, PochhammerReading::Inclusive).unwrap());
                assert!(orthogonality_check(n, &s0).unwrap());
            }
        }
        assert_eq!(orthogonality_check(2, &rat(3, 2)), Err(UqError::InvalidS0));
        assert_eq!(
            pochhammer(&gi(2), &gi(3), 2, PochhammerReading::Standard),
            gi(5)
        ); // (1-2)(1-6)
        assert_eq!(
            pochhammer(&gi(2), &gi(3), 2, PochhammerReading::Inclusive),
            gi(-85)
        ); // ... (1-18)
    }
}
