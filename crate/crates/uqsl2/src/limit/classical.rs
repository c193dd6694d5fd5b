//! The classical induced modules `I(eps, lambda)` in the compact picture, their
//! submodule lattices, and the comparison with the deformed side.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::indmodule::{
    classify, lattice_descriptors, stable_supports, AtQ, Generic, IndError, KVector, Parity,
    SubmoduleDescriptor,
};
use crate::scalars::{GaussRat, RatFunc};

use super::{hypothesis_holds, rational_pow, LimitError, Tridiag};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ClassicalOp {
    Theta,
    KappaPlus,
    KappaMinus,
    H,
    E,
    F,
    X,
    Y,
    Z,
}

#[derive(Clone, PartialEq, Debug)]
pub struct ClassicalModule {
    parity: Parity,
    lambda: GaussRat,
}

impl ClassicalModule {
    pub fn new(eps: i8, lambda: GaussRat) -> Result<Self, LimitError> {
        Ok(ClassicalModule {
            parity: Parity::from_eps(eps)?,
            lambda,
        })
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn lambda(&self) -> &GaussRat {
        &self.lambda
    }

    /// Coefficients of `op` on `zeta_n`. Only `theta` and `kappa_+-` are
    /// primitive; the rest come from `H = (k+ + k-)/2`,
    /// `i(E+F) = (k- - k+)/2`, `theta = i(E-F)`, `x = H/2`, `z = iE`, `y = -x`.
    pub fn coefficients(&self, op: ClassicalOp, n: i64) -> Tridiag<GaussRat> {
        let a = &self.lambda + &GaussRat::one();
        let nn = GaussRat::from_int(n);
        let kp = &a + &nn;
        let km = &a - &nn;
        let z = GaussRat::zero();
        let f = |c: i64, d: i64| GaussRat::from_frac(c, d);
        let i = GaussRat::i();
        let t = |up: GaussRat, diag: GaussRat, down: GaussRat| Tridiag { up, diag, down };
        // i E and i F
        let ie = t(&kp * &f(-1, 4), &nn * &f(1, 2), &km * &f(1, 4));
        let i_f = t(&kp * &f(-1, 4), &nn * &f(-1, 2), &km * &f(1, 4));
        let minus_i = -&i;
        match op {
            ClassicalOp::Theta => t(z.clone(), nn, z),
            ClassicalOp::KappaPlus => t(kp, z.clone(), z),
            ClassicalOp::KappaMinus => t(z.clone(), z, km),
            ClassicalOp::H => t(&kp * &f(1, 2), z, &km * &f(1, 2)),
            ClassicalOp::E => ie.map(|c| c * &minus_i),
            ClassicalOp::F => i_f.map(|c| c * &minus_i),
            ClassicalOp::X => t(&kp * &f(1, 4), z, &km * &f(1, 4)),
            ClassicalOp::Y => t(&kp * &f(-1, 4), z, &km * &f(-1, 4)),
            ClassicalOp::Z => ie,
        }
    }
}

pub fn classical_act(
    m: &ClassicalModule,
    op: ClassicalOp,
    v: &KVector<GaussRat>,
) -> Result<KVector<GaussRat>, LimitError> {
    let mut out = KVector::zero();
    for (n, c) in v.entries() {
        if !m.parity.contains(*n) {
            return Err(LimitError::ParityMismatch(*n));
        }
        let t = m.coefficients(op, *n);
        out.add_term(n + 2, &t.up * c);
        out.add_term(*n, &t.diag * c);
        out.add_term(n - 2, &t.down * c);
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Debug)]
pub enum ClassicalSimple {
    /// `I(eps, lambda)` with `Re lambda >= 0`.
    Principal {
        eps: i8,
        lambda: GaussRat,
    },
    DiscretePlus {
        n: i64,
    },
    DiscreteMinus {
        n: i64,
    },
    FiniteDim {
        n: i64,
    },
}

impl ClassicalSimple {
    pub fn name(&self) -> &'static str {
        match self {
            ClassicalSimple::Principal { .. } => "Principal",
            ClassicalSimple::DiscretePlus { .. } => "DiscretePlus",
            ClassicalSimple::DiscreteMinus { .. } => "DiscreteMinus",
            ClassicalSimple::FiniteDim { .. } => "FiniteDim",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct ClassicalClassification {
    pub eps: i8,
    pub lambda: GaussRat,
    /// `lambda` itself when it is an integer of parity `-eps`.
    pub special: Option<i64>,
    pub submodules: Vec<SubmoduleDescriptor>,
    pub composition_series: Vec<ClassicalSimple>,
}

fn as_integer(x: &GaussRat) -> Option<i64> {
    if x.is_real() && x.re.is_integer() {
        x.re.to_integer().to_i64()
    } else {
        None
    }
}

/// K-types in `[-window, window]` and which neighbours each one reaches.
fn reach(m: &ClassicalModule, window: i64) -> (Vec<i64>, Vec<bool>, Vec<bool>) {
    let nodes: Vec<i64> = m.parity.window(window).collect();
    let up = nodes
        .iter()
        .map(|n| !m.coefficients(ClassicalOp::KappaPlus, *n).up.is_zero())
        .collect();
    let down = nodes
        .iter()
        .map(|n| !m.coefficients(ClassicalOp::KappaMinus, *n).down.is_zero())
        .collect();
    (nodes, up, down)
}

pub fn classical_classify(
    eps: i8,
    lambda: &GaussRat,
) -> Result<ClassicalClassification, LimitError> {
    let m = ClassicalModule::new(eps, lambda.clone())?;
    let special = as_integer(lambda).filter(|k| m.parity.opposite().contains(*k));
    let submodules = lattice_descriptors(special);
    let composition_series = match special {
        None => {
            let canon = if lambda.re.is_negative() {
                -lambda
            } else {
                lambda.clone()
            };
            vec![ClassicalSimple::Principal { eps, lambda: canon }]
        }
        Some(0) => vec![
            ClassicalSimple::DiscretePlus { n: 0 },
            ClassicalSimple::DiscreteMinus { n: 0 },
        ],
        Some(k) if k > 0 => vec![
            ClassicalSimple::DiscretePlus { n: k },
            ClassicalSimple::DiscreteMinus { n: k },
            ClassicalSimple::FiniteDim { n: k },
        ],
        Some(k) => vec![
            ClassicalSimple::FiniteDim { n: -k },
            ClassicalSimple::DiscretePlus { n: -k },
            ClassicalSimple::DiscreteMinus { n: -k },
        ],
    };
    // Re-derive the lattice from the vanishing of lambda + 1 +- n.
    let window = 2 * special.map_or(0, i64::abs) + 8;
    let (nodes, up, down) = reach(&m, window);
    let claimed: BTreeSet<BTreeSet<i64>> = submodules
        .iter()
        .map(|s| s.support(m.parity, window))
        .collect();
    if claimed.len() != submodules.len() || claimed != stable_supports(&nodes, &up, &down) {
        return Err(IndError::LatticeCheckFailed.into());
    }
    Ok(ClassicalClassification {
        eps,
        lambda: lambda.clone(),
        special,
        submodules,
        composition_series,
    })
}

/// Both lattices, as descriptors and as K-type supports on a common window.
#[derive(Clone, PartialEq, Debug)]
pub struct Correspondence {
    pub quantum: Vec<SubmoduleDescriptor>,
    pub classical: Vec<SubmoduleDescriptor>,
    pub window: i64,
    pub quantum_supports: BTreeSet<BTreeSet<i64>>,
    pub classical_supports: BTreeSet<BTreeSet<i64>>,
    pub matches: bool,
}

/// Compares the submodules of the deformed module at `q0` with parameter
/// `q0^lambda` against those of `I(eps, lambda)`. Integer `lambda` is handled
/// exactly at `q0`; half-integers go through the symbolic `q^{1/2}`.
pub fn correspondence_check(
    eps: i8,
    lambda: &GaussRat,
    q0: &BigRational,
) -> Result<Correspondence, LimitError> {
    let d = AtQ::new(q0.clone())?;
    if !hypothesis_holds(q0, &lambda.im) {
        return Err(LimitError::HypothesisViolated);
    }
    let classical = classical_classify(eps, lambda)?;
    let quantum = if let Some(k) = as_integer(lambda) {
        let mu = GaussRat::real(rational_pow(d.q0(), k));
        classify(&d, eps, &mu)?.submodules
    } else if lambda.is_real()
        && (&lambda.re * BigRational::from_integer(BigInt::from(2))).is_integer()
    {
        let twice = (&lambda.re * BigRational::from_integer(BigInt::from(2))).to_integer();
        let e = twice.to_i64().ok_or(LimitError::IrrationalParameter)?;
        debug_assert!(e.is_odd());
        classify(&Generic, eps, &RatFunc::s_pow(e))?.submodules
    } else {
        return Err(LimitError::IrrationalParameter);
    };
    let parity = Parity::from_eps(eps)?;
    let window = 2 * classical.special.map_or(0, i64::abs) + 8;
    let supports = |subs: &[SubmoduleDescriptor]| -> BTreeSet<BTreeSet<i64>> {
        subs.iter().map(|s| s.support(parity, window)).collect()
    };
    let quantum_supports = supports(&quantum);
    let classical_supports = supports(&classical.submodules);
    let matches =
        quantum_supports == classical_supports && quantum.len() == classical.submodules.len();
    Ok(Correspondence {
        quantum,
        classical: classical.submodules,
        window,
        quantum_supports,
        classical_supports,
        matches,
    })
}
