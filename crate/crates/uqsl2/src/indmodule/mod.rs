//! Modules induced from the characters `chi_{eps,lambda}`, realized on the
//! K-type basis `zeta_n` (`n` of parity `eps`): exact actions, submodule
//! lattices, intertwiners, the invariant inner product and the simple-module
//! classification.

mod classify;
mod domain;
mod intertwine;
mod unitary;

pub use classify::{
    classify, classify_with, enumerate_stable_supports, lattice_descriptors, lattice_matches,
    simple_classify, special_point, stable_supports, Classification, PrincipalLabel, SimpleClass,
    SimpleVariant, SubmoduleDescriptor, SubmoduleKind, UnitaryType,
};
pub use domain::{AtQ, Generic, QDomain, DEFAULT_N_MAX};
pub use intertwine::{intertwiners, solve_intertwiners, IntertwinerSpace};
pub use unitary::{adjointness_check, adjointness_residuals, AdjointReport};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::par::{self, Parallelism};
use crate::pbw::Pbw1Element;
use crate::scalars::{Field, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndError {
    #[error("K-type {0} has the wrong parity for this module")]
    ParityMismatch(i64),
    #[error("element is outside the domain of the character")]
    NotInDomain,
    #[error("singular transition system at K-type {0}")]
    SingularSolve(i64),
    #[error("no exponent found with |n| <= {0}")]
    SearchBoundExceeded(u32),
    #[error("window too small: constraints are still active at the edge")]
    WindowTooSmall,
    #[error("lambda is not a unitary character (lambda* != 1/lambda)")]
    NotUnitaryCharacter,
    #[error("q must be a positive rational different from 1")]
    InvalidQ,
    #[error("lambda must be invertible")]
    NotInvertible,
    #[error("eps must be +1 or -1")]
    InvalidEps,
    #[error("submodule lattice failed the boundary check")]
    LatticeCheckFailed,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `Z^eps`: even integers for `eps = +1`, odd for `eps = -1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_eps(eps: i8) -> Result<Parity, IndError> {
        match eps {
            1 => Ok(Parity::Even),
            -1 => Ok(Parity::Odd),
            _ => Err(IndError::InvalidEps),
        }
    }

    pub fn eps(self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn contains(self, n: i64) -> bool {
        (n.rem_euclid(2) == 0) == (self == Parity::Even)
    }

    pub fn opposite(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Members in `[-window, window]`, increasing.
    pub fn window(self, window: i64) -> impl Iterator<Item = i64> {
        (-window..=window).filter(move |n| self.contains(*n))
    }
}

/// Finitely supported vector `sum c_n zeta_n`.
#[derive(Clone, PartialEq, Debug)]
pub struct KVector<S: Field> {
    entries: BTreeMap<i64, S>,
}

impl<S: Field> Default for KVector<S> {
    fn default() -> Self {
        KVector {
            entries: BTreeMap::new(),
        }
    }
}

impl<S: Field> KVector<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(n: i64) -> Self {
        let mut v = Self::zero();
        v.add_term(n, S::one());
        v
    }

    pub fn from_entries(it: impl IntoIterator<Item = (i64, S)>) -> Self {
        let mut v = Self::zero();
        for (n, c) in it {
            v.add_term(n, c);
        }
        v
    }

    pub fn add_term(&mut self, n: i64, c: S) {
        if c.is_zero() {
            return;
        }
        let s = match self.entries.get(&n) {
            Some(x) => x.add(&c),
            None => c,
        };
        if s.is_zero() {
            self.entries.remove(&n);
        } else {
            self.entries.insert(n, s);
        }
    }

    pub fn add_scaled(&mut self, o: &KVector<S>, c: &S) {
        for (n, x) in &o.entries {
            self.add_term(*n, x.mul(c));
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn entries(&self) -> &BTreeMap<i64, S> {
        &self.entries
    }

    pub fn get(&self, n: i64) -> S {
        self.entries.get(&n).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sub(&self, o: &KVector<S>) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &S::one().neg());
        out
    }
}

impl<S: Field> fmt::Display for KVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(n, c)| format!("{}:{}", n, c))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Which transition coefficient: towards `n+2`, towards `n-2`, or diagonal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Up,
    Down,
    Diag,
}

/// `c+_n = lambda q^{1+n} - lambda^-1 q^{-1-n}`, `c-_n = lambda q^{1-n} - lambda^-1 q^{n-1}`,
/// `c0 = lambda + lambda^-1`; no parity check.
pub fn transition_raw<D: QDomain>(
    d: &D,
    lambda: &D::S,
    lambda_inv: &D::S,
    which: Step,
    n: i64,
) -> D::S {
    match which {
        Step::Up => lambda
            .mul(&d.q_pow(1 + n))
            .sub(&lambda_inv.mul(&d.q_pow(-1 - n))),
        Step::Down => lambda
            .mul(&d.q_pow(1 - n))
            .sub(&lambda_inv.mul(&d.q_pow(n - 1))),
        Step::Diag => lambda.add(lambda_inv),
    }
}

/// The character `chi_{eps,lambda}` of the coideal part.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterPM<S: Field> {
    pub parity: Parity,
    pub lambda: S,
}

impl<S: Field> CharacterPM<S> {
    pub fn new(eps: i8, lambda: S) -> Result<Self, IndError> {
        if lambda.is_zero() {
            return Err(IndError::NotInvertible);
        }
        Ok(CharacterPM {
            parity: Parity::from_eps(eps)?,
            lambda,
        })
    }
}

/// `chi(b_{n,m}) = delta_{m,0} lambda^{-n}`; theta-dependent terms are rejected.
pub fn chi_eval<D: QDomain>(
    d: &D,
    chi: &CharacterPM<D::S>,
    a: &Pbw1Element,
) -> Result<D::S, IndError> {
    let inv = chi.lambda.inv().ok_or(IndError::NotInvertible)?;
    let mut acc = D::S::zero();
    for (m, c) in a.terms() {
        if m.m1 > 0 {
            return Err(IndError::NotInDomain);
        }
        if m.m2 > 0 {
            continue;
        }
        let base = if m.n > 0 { &inv } else { &chi.lambda };
        let mut p = D::S::one();
        for _ in 0..m.n.unsigned_abs() {
            p = p.mul(base);
        }
        acc = acc.add(&d.embed(c)?.mul(&p));
    }
    Ok(acc)
}

/// `chi(a0 + a1 (-1)_q) = chi(a0) + eps chi(a1)`.
pub fn chi_eval_extended<D: QDomain>(
    d: &D,
    chi: &CharacterPM<D::S>,
    a0: &Pbw1Element,
    a1: &Pbw1Element,
) -> Result<D::S, IndError> {
    let e = D::S::from_int(chi.parity.eps() as i64);
    Ok(chi_eval(d, chi, a0)?.add(&e.mul(&chi_eval(d, chi, a1)?)))
}

/// `(zeta_n | zeta_n) = 2 / {n}_q`.
pub fn inner_weight<D: QDomain>(d: &D, n: i64) -> D::S {
    D::S::from_int(2)
        .div(&d.qbrace(n))
        .expect("{n}_q is nonzero")
}

/// Operators available on an induced module.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleOp {
    Theta,
    X,
    Y,
    Z,
    /// Projection onto the K-type `k`.
    Proj(i64),
    /// `(-1)_q`: `(-1)^n` on the K-type `n`.
    MinusOneQ,
    Omega,
}

/// Coefficients of `X, Y, Z` applied to `zeta_n`, on `zeta_{n+2}, zeta_{n-2}, zeta_n`.
type Xyz<S> = [[S; 3]; 3];

pub struct InducedModule<D: QDomain> {
    domain: D,
    parity: Parity,
    lambda: D::S,
    lambda_inv: D::S,
    cache: RwLock<HashMap<i64, Arc<Xyz<D::S>>>>,
}

impl<D: QDomain> fmt::Debug for InducedModule<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ind(eps={}, lambda={})", self.parity.eps(), self.lambda)
    }
}

fn inv3<S: Field>(m: &[[S; 3]; 3]) -> Option<[[S; 3]; 3]> {
    let c = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        m[r0][c0].mul(&m[r1][c1]).sub(&m[r0][c1].mul(&m[r1][c0]))
    };
    let det = m[0][0]
        .mul(&c(0, 0))
        .add(&m[0][1].mul(&c(0, 1)))
        .add(&m[0][2].mul(&c(0, 2)));
    let di = det.inv()?;
    Some(std::array::from_fn(|i| {
        std::array::from_fn(|j| c(j, i).mul(&di))
    }))
}

impl<D: QDomain> InducedModule<D> {
    pub fn new(domain: D, eps: i8, lambda: D::S) -> Result<Self, IndError> {
        let parity = Parity::from_eps(eps)?;
        let lambda_inv = lambda.inv().ok_or(IndError::NotInvertible)?;
        Ok(InducedModule {
            domain,
            parity,
            lambda,
            lambda_inv,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn eps(&self) -> i8 {
        self.parity.eps()
    }

    pub fn lambda(&self) -> &D::S {
        &self.lambda
    }

    pub fn character(&self) -> CharacterPM<D::S> {
        CharacterPM {
            parity: self.parity,
            lambda: self.lambda.clone(),
        }
    }

    pub fn transition_coeff(&self, which: Step, n: i64) -> Result<D::S, IndError> {
        if !self.parity.contains(n) {
            return Err(IndError::ParityMismatch(n));
        }
        Ok(self.transition_unchecked(which, n))
    }

    pub(crate) fn transition_unchecked(&self, which: Step, n: i64) -> D::S {
        transition_raw(&self.domain, &self.lambda, &self.lambda_inv, which, n)
    }

    /// Solve `(T+_n, T-_n, T_n) = M (X, Y, Z)` for `X, Y, Z` on `zeta_n`.
    fn xyz(&self, n: i64) -> Result<Arc<Xyz<D::S>>, IndError> {
        if let Some(r) = self.cache.read().unwrap().get(&n) {
            return Ok(r.clone());
        }
        let d = &self.domain;
        let two = d.qint(2);
        let m = [
            [d.q_pow(n), d.q_pow(-n).neg(), two.neg()],
            [d.q_pow(-n), d.q_pow(n).neg(), two],
            [d.q_pow(-1), d.q_pow(1), d.q_pow(n).sub(&d.q_pow(-n))],
        ];
        let mi = inv3(&m).ok_or(IndError::SingularSolve(n))?;
        let rhs = [
            self.transition_unchecked(Step::Up, n),
            self.transition_unchecked(Step::Down, n),
            self.transition_unchecked(Step::Diag, n),
        ];
        let out: Xyz<D::S> =
            std::array::from_fn(|g| std::array::from_fn(|j| mi[g][j].mul(&rhs[j])));
        let out = Arc::new(out);
        self.cache.write().unwrap().insert(n, out.clone());
        Ok(out)
    }

    fn check(&self, v: &KVector<D::S>) -> Result<(), IndError> {
        match v.entries.keys().find(|n| !self.parity.contains(**n)) {
            Some(n) => Err(IndError::ParityMismatch(*n)),
            None => Ok(()),
        }
    }

    pub fn act(&self, op: ModuleOp, v: &KVector<D::S>) -> Result<KVector<D::S>, IndError> {
        self.check(v)?;
        let mut out = KVector::zero();
        for (n, c) in &v.entries {
            let n = *n;
            match op {
                ModuleOp::Theta => out.add_term(n, c.mul(&self.domain.qint(n))),
                ModuleOp::Proj(k) => {
                    if k == n {
                        out.add_term(n, c.clone());
                    }
                }
                ModuleOp::MinusOneQ => {
                    out.add_term(n, if n % 2 == 0 { c.clone() } else { c.neg() })
                }
                ModuleOp::Omega => {
                    out.add_term(n, c.mul(&self.transition_unchecked(Step::Diag, n)))
                }
                ModuleOp::X | ModuleOp::Y | ModuleOp::Z => {
                    let g = match op {
                        ModuleOp::X => 0,
                        ModuleOp::Y => 1,
                        _ => 2,
                    };
                    let t = self.xyz(n)?;
                    out.add_term(n + 2, c.mul(&t[g][0]));
                    out.add_term(n - 2, c.mul(&t[g][1]));
                    out.add_term(n, c.mul(&t[g][2]));
                }
            }
        }
        Ok(out)
    }

    fn act_pow(&self, op: ModuleOp, k: u32, v: KVector<D::S>) -> Result<KVector<D::S>, IndError> {
        (0..k).try_fold(v, |acc, _| self.act(op, &acc))
    }

    /// Action of an algebra element given in the first PBW basis.
    pub fn act_element(
        &self,
        a: &Pbw1Element,
        v: &KVector<D::S>,
    ) -> Result<KVector<D::S>, IndError> {
        self.check(v)?;
        let mut out = KVector::zero();
        for (m, c) in a.terms() {
            let mut w = self.act_pow(ModuleOp::Z, m.m2, v.clone())?;
            let g = if m.n > 0 { ModuleOp::Y } else { ModuleOp::X };
            w = self.act_pow(g, m.n.unsigned_abs(), w)?;
            w = self.act_pow(ModuleOp::Theta, m.m1, w)?;
            out.add_scaled(&w, &self.domain.embed(c)?);
        }
        Ok(out)
    }

    /// The defining relations, each as `sum c * word`, with words applied right to left.
    fn relations(&self) -> Vec<Vec<(D::S, Vec<ModuleOp>)>> {
        use ModuleOp::{Theta, X, Y, Z};
        let d = &self.domain;
        let one = D::S::one;
        let two = d.qint(2);
        vec![
            vec![(one(), vec![X, Z]), (d.q_pow(2).neg(), vec![Z, X])],
            vec![(one(), vec![Z, Y]), (d.q_pow(2).neg(), vec![Y, Z])],
            vec![
                (one(), vec![X, Y]),
                (d.q_pow(2), vec![Z, Z]),
                (one().neg(), vec![]),
            ],
            vec![
                (one(), vec![Y, X]),
                (d.q_pow(-2), vec![Z, Z]),
                (one().neg(), vec![]),
            ],
            vec![
                (d.q_pow(1), vec![X, Theta]),
                (d.q_pow(-1).neg(), vec![Theta, X]),
                (two.neg(), vec![Z]),
            ],
            vec![
                (d.q_pow(1), vec![Theta, Y]),
                (d.q_pow(-1).neg(), vec![Y, Theta]),
                (two.neg(), vec![Z]),
            ],
            vec![
                (one(), vec![Theta, Z]),
                (one().neg(), vec![Z, Theta]),
                (one().neg(), vec![Y]),
                (one(), vec![X]),
            ],
        ]
    }

    /// K-types `|n| <= window` on which some defining relation fails, as
    /// `(relation index, n)`.
    pub fn relation_failures(
        &self,
        window: i64,
        mode: Parallelism,
    ) -> Result<Vec<(usize, i64)>, IndError> {
        let rels = self.relations();
        let ks: Vec<i64> = self.parity.window(window).collect();
        let per_k = par::try_map(&ks, mode, |&n| -> Result<Vec<(usize, i64)>, IndError> {
            let mut bad = Vec::new();
            for (i, rel) in rels.iter().enumerate() {
                // every path through the word contributes a product of coefficients
                let mut out: BTreeMap<i64, Vec<Vec<D::S>>> = BTreeMap::new();
                for (c, w) in rel {
                    let mut paths = vec![(n, vec![c.clone()])];
                    for g in w.iter().rev() {
                        let mut next = Vec::new();
                        for (k, fs) in &paths {
                            for (m, a) in &self.act(*g, &KVector::basis(*k))?.entries {
                                let mut fs = fs.clone();
                                fs.push(a.clone());
                                next.push((*m, fs));
                            }
                        }
                        paths = next;
                    }
                    for (m, fs) in paths {
                        out.entry(m).or_default().push(fs);
                    }
                }
                if !out.values().all(|t| D::S::sum_of_products_is_zero(t)) {
                    bad.push((i, n));
                }
            }
            Ok(bad)
        })?;
        Ok(per_k.into_iter().flatten().collect())
    }

    /// Matrix entry: coefficient of `zeta_to` in `op zeta_from`.
    pub fn matrix_entry(&self, op: ModuleOp, to: i64, from: i64) -> Result<D::S, IndError> {
        Ok(self.act(op, &KVector::basis(from))?.get(to))
    }
}

#[cfg(test)]
mod tests;
