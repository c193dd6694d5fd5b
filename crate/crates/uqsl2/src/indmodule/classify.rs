//! Submodule lattices and composition series, plus the list of simple modules
//! with unitarizability flags at a concrete `q`.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::scalars::{Field, GaussRat, RatFunc};

use super::domain::{AtQ, Generic, QDomain, DEFAULT_N_MAX};
use super::{IndError, InducedModule, Parity, Step};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum SubmoduleKind {
    Zero,
    All,
    /// `m > n`
    Above,
    /// `m < -n`
    Below,
    /// `|m| < n`
    Middle,
    AboveBelow,
    MiddleAbove,
    MiddleBelow,
}

impl SubmoduleKind {
    pub fn name(self) -> &'static str {
        match self {
            SubmoduleKind::Zero => "Zero",
            SubmoduleKind::All => "All",
            SubmoduleKind::Above => "Above",
            SubmoduleKind::Below => "Below",
            SubmoduleKind::Middle => "Middle",
            SubmoduleKind::AboveBelow => "Above+Below",
            SubmoduleKind::MiddleAbove => "Middle+Above",
            SubmoduleKind::MiddleBelow => "Middle+Below",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SubmoduleDescriptor {
    pub kind: SubmoduleKind,
    pub n: i64,
}

impl SubmoduleDescriptor {
    pub fn new(kind: SubmoduleKind, n: i64) -> Self {
        SubmoduleDescriptor { kind, n }
    }

    /// Membership of the K-type `m` (parity is the caller's business).
    pub fn contains(&self, m: i64) -> bool {
        let n = self.n;
        match self.kind {
            SubmoduleKind::Zero => false,
            SubmoduleKind::All => true,
            SubmoduleKind::Above => m > n,
            SubmoduleKind::Below => m < -n,
            SubmoduleKind::Middle => m.abs() < n,
            SubmoduleKind::AboveBelow => m > n || m < -n,
            SubmoduleKind::MiddleAbove => m.abs() < n || m > n,
            SubmoduleKind::MiddleBelow => m.abs() < n || m < -n,
        }
    }

    pub fn support(&self, parity: Parity, window: i64) -> BTreeSet<i64> {
        parity
            .window(window)
            .filter(|m| self.contains(*m))
            .collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UnitaryType {
    Principal,
    Discrete,
    LimitOfDiscrete,
    Complementary,
    TrivialLike,
}

impl UnitaryType {
    pub fn name(self) -> &'static str {
        match self {
            UnitaryType::Principal => "principal",
            UnitaryType::Discrete => "discrete",
            UnitaryType::LimitOfDiscrete => "limit_of_discrete",
            UnitaryType::Complementary => "complementary",
            UnitaryType::TrivialLike => "trivial_like",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum SimpleVariant<S> {
    Principal {
        eps: i8,
        lambda: S,
    },
    DiscretePlus {
        sigma: i8,
        n: i64,
    },
    DiscreteMinus {
        sigma: i8,
        n: i64,
    },
    /// The `n`-dimensional simple module.
    FiniteDim {
        sigma: i8,
        n: i64,
    },
}

impl<S> SimpleVariant<S> {
    pub fn name(&self) -> &'static str {
        match self {
            SimpleVariant::Principal { .. } => "Principal",
            SimpleVariant::DiscretePlus { .. } => "DiscretePlus",
            SimpleVariant::DiscreteMinus { .. } => "DiscreteMinus",
            SimpleVariant::FiniteDim { .. } => "FiniteDim",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct SimpleClass<S> {
    pub variant: SimpleVariant<S>,
    pub unitarizable: bool,
    pub unitary_type: Option<UnitaryType>,
}

impl<S> SimpleClass<S> {
    fn discrete(plus: bool, sigma: i8, n: i64) -> Self {
        let variant = if plus {
            SimpleVariant::DiscretePlus { sigma, n }
        } else {
            SimpleVariant::DiscreteMinus { sigma, n }
        };
        let t = if n == 0 {
            UnitaryType::LimitOfDiscrete
        } else {
            UnitaryType::Discrete
        };
        SimpleClass {
            variant,
            unitarizable: true,
            unitary_type: Some(t),
        }
    }

    fn finite(sigma: i8, n: i64) -> Self {
        let t = (n == 1).then_some(UnitaryType::TrivialLike);
        SimpleClass {
            variant: SimpleVariant::FiniteDim { sigma, n },
            unitarizable: t.is_some(),
            unitary_type: t,
        }
    }
}

/// Canonical representative and unitarity of a principal-series class.
pub trait PrincipalLabel: QDomain {
    fn principal(&self, eps: i8, lambda: &Self::S) -> SimpleClass<Self::S>;
}

impl PrincipalLabel for Generic {
    fn principal(&self, eps: i8, lambda: &RatFunc) -> SimpleClass<RatFunc> {
        // Unitary iff lambda* = lambda^-1 identically in q.
        let unitary = (lambda * &lambda.star()).is_one();
        SimpleClass {
            variant: SimpleVariant::Principal {
                eps,
                lambda: lambda.clone(),
            },
            unitarizable: unitary,
            unitary_type: unitary.then_some(UnitaryType::Principal),
        }
    }
}

impl PrincipalLabel for AtQ {
    fn principal(&self, eps: i8, lambda: &GaussRat) -> SimpleClass<GaussRat> {
        let one = BigRational::one();
        let norm = lambda.norm_sqr();
        let canon = if norm > one {
            lambda.inv().unwrap()
        } else if norm == one {
            let keep = if eps == 1 {
                !lambda.im.is_negative()
            } else {
                lambda.im.is_positive()
            };
            if keep {
                lambda.clone()
            } else {
                lambda.conj()
            }
        } else {
            lambda.clone()
        };
        let t = if canon.norm_sqr() == one {
            Some(UnitaryType::Principal)
        } else if eps == 1 && canon.is_real() && canon.re.abs() > self.q_min() {
            Some(UnitaryType::Complementary)
        } else {
            None
        };
        SimpleClass {
            variant: SimpleVariant::Principal { eps, lambda: canon },
            unitarizable: t.is_some(),
            unitary_type: t,
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Classification<S> {
    pub eps: i8,
    pub lambda: S,
    /// `(sigma, n)` with `lambda = sigma q^n` and `n` of parity `-eps`.
    pub special: Option<(i8, i64)>,
    pub submodules: Vec<SubmoduleDescriptor>,
    pub composition_series: Vec<SimpleClass<S>>,
}

/// Submodule lattice of an induced module whose parameter sits at exponent
/// `k` of a special point (`None` when it is not special).
pub fn lattice_descriptors(special: Option<i64>) -> Vec<SubmoduleDescriptor> {
    use SubmoduleKind::*;
    let sd = SubmoduleDescriptor::new;
    match special {
        None => vec![sd(Zero, 0), sd(All, 0)],
        Some(0) => vec![sd(Zero, 0), sd(Above, 0), sd(Below, 0), sd(All, 0)],
        Some(k) if k > 0 => vec![
            sd(Zero, 0),
            sd(Above, k),
            sd(Below, k),
            sd(AboveBelow, k),
            sd(All, 0),
        ],
        Some(k) => {
            let n = -k;
            vec![
                sd(Zero, 0),
                sd(Middle, n),
                sd(MiddleAbove, n),
                sd(MiddleBelow, n),
                sd(All, 0),
            ]
        }
    }
}

/// Special point of `Ind(eps, lambda)`, if any.
pub fn special_point<D: QDomain>(
    d: &D,
    eps: i8,
    lambda: &D::S,
    n_max: u32,
) -> Result<Option<(i8, i64)>, IndError> {
    let parity = Parity::from_eps(eps)?;
    Ok(d.power_of_q(lambda, n_max)?
        .filter(|(_, k)| parity.opposite().contains(*k)))
}

pub fn classify<D: PrincipalLabel>(
    d: &D,
    eps: i8,
    lambda: &D::S,
) -> Result<Classification<D::S>, IndError> {
    classify_with(d, eps, lambda, DEFAULT_N_MAX)
}

pub fn classify_with<D: PrincipalLabel>(
    d: &D,
    eps: i8,
    lambda: &D::S,
    n_max: u32,
) -> Result<Classification<D::S>, IndError> {
    let module = InducedModule::new(d.clone(), eps, lambda.clone())?;
    let special = special_point(d, eps, lambda, n_max)?;
    let submodules = lattice_descriptors(special.map(|(_, k)| k));
    let composition_series = match special {
        None => vec![d.principal(eps, lambda)],
        Some((sigma, 0)) => vec![
            SimpleClass::discrete(true, sigma, 0),
            SimpleClass::discrete(false, sigma, 0),
        ],
        Some((sigma, k)) if k > 0 => {
            vec![
                SimpleClass::discrete(true, sigma, k),
                SimpleClass::discrete(false, sigma, k),
                SimpleClass::finite(sigma, k),
            ]
        }
        Some((sigma, k)) => {
            vec![
                SimpleClass::finite(sigma, -k),
                SimpleClass::discrete(true, sigma, -k),
                SimpleClass::discrete(false, sigma, -k),
            ]
        }
    };
    let window = special.map_or(0, |(_, k)| k.abs()) * 2 + 8;
    if !lattice_matches(&module, &submodules, window) {
        return Err(IndError::LatticeCheckFailed);
    }
    Ok(Classification {
        eps,
        lambda: lambda.clone(),
        special,
        submodules,
        composition_series,
    })
}

/// All subsets of the K-types in `[-window, window]` that are stable under the
/// transition operators, found from the vanishing pattern of the coefficients
/// alone. Each stable set is a union of blocks of mutually reachable K-types.
pub fn enumerate_stable_supports<D: QDomain>(
    module: &InducedModule<D>,
    window: i64,
) -> BTreeSet<BTreeSet<i64>> {
    let nodes: Vec<i64> = module.parity().window(window).collect();
    let up: Vec<bool> = nodes
        .iter()
        .map(|n| !module.transition_unchecked(Step::Up, *n).is_zero())
        .collect();
    let down: Vec<bool> = nodes
        .iter()
        .map(|n| !module.transition_unchecked(Step::Down, *n).is_zero())
        .collect();
    stable_supports(&nodes, &up, &down)
}

/// Stable unions of blocks for a chain of K-types `nodes` (consecutive, step 2)
/// where `up[i]` / `down[i]` say whether `nodes[i]` reaches its upper / lower
/// neighbour.
pub fn stable_supports(nodes: &[i64], up: &[bool], down: &[bool]) -> BTreeSet<BTreeSet<i64>> {
    // Split between i and i+1 unless the two are joined both ways.
    let mut blocks: Vec<Vec<usize>> = vec![vec![0]];
    for i in 0..nodes.len() - 1 {
        if up[i] && down[i + 1] {
            blocks.last_mut().unwrap().push(i + 1);
        } else {
            blocks.push(vec![i + 1]);
        }
    }
    let k = blocks.len();
    assert!(k <= 16, "too many blocks");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << k) {
        let has = |b: usize| mask & (1 << b) != 0;
        let closed = (0..k).all(|b| {
            if !has(b) {
                return true;
            }
            let first = blocks[b][0];
            let last = *blocks[b].last().unwrap();
            let up_ok = b + 1 == k || !up[last] || has(b + 1);
            let down_ok = b == 0 || !down[first] || has(b - 1);
            up_ok && down_ok
        });
        if closed {
            let set: BTreeSet<i64> = (0..k)
                .filter(|b| has(*b))
                .flat_map(|b| blocks[b].iter().map(|i| nodes[*i]))
                .collect();
            out.insert(set);
        }
    }
    out
}

/// The claimed lattice restricted to the window equals the enumerated one.
pub fn lattice_matches<D: QDomain>(
    module: &InducedModule<D>,
    subs: &[SubmoduleDescriptor],
    window: i64,
) -> bool {
    let claimed: BTreeSet<BTreeSet<i64>> = subs
        .iter()
        .map(|s| s.support(module.parity(), window))
        .collect();
    claimed.len() == subs.len() && claimed == enumerate_stable_supports(module, window)
}

/// Simple subquotients of `Ind(eps, lambda)` at `q = q0`.
pub fn simple_classify(
    eps: i8,
    lambda: &GaussRat,
    q0: &BigRational,
) -> Result<Vec<SimpleClass<GaussRat>>, IndError> {
    if lambda.is_zero() {
        return Err(IndError::NotInvertible);
    }
    let d = AtQ::new(q0.clone())?;
    Ok(classify(&d, eps, lambda)?.composition_series)
}
