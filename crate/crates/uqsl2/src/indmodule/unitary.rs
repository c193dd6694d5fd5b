//! Adjointness of the generators for the inner product with
//! `(zeta_n | zeta_n) = 2/{n}_q`, at a concrete `q`.

use num_rational::BigRational;

use crate::scalars::{Field, GaussRat};

use super::domain::AtQ;
use super::{inner_weight, IndError, InducedModule, ModuleOp};

#[derive(Clone, PartialEq, Debug)]
pub struct AdjointReport {
    pub window: i64,
    /// Number of matrix entries compared.
    pub checked: usize,
    /// `(generator, m, n)` where `(g zeta_m | zeta_n) != (zeta_m | g* zeta_n)`.
    pub failures: Vec<(&'static str, i64, i64)>,
}

impl AdjointReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const PAIRS: [(&str, ModuleOp, ModuleOp); 4] = [
    ("theta", ModuleOp::Theta, ModuleOp::Theta),
    ("X", ModuleOp::X, ModuleOp::Y),
    ("Y", ModuleOp::Y, ModuleOp::X),
    ("Z", ModuleOp::Z, ModuleOp::Z),
];

/// All residuals, with no precondition on `lambda`.
pub fn adjointness_residuals(
    eps: i8,
    lambda: &GaussRat,
    q0: &BigRational,
    window: i64,
) -> Result<AdjointReport, IndError> {
    let d = AtQ::new(q0.clone())?;
    let module = InducedModule::new(d.clone(), eps, lambda.clone())?;
    let ks: Vec<i64> = module.parity().window(window).collect();
    let w: Vec<GaussRat> = ks.iter().map(|n| inner_weight(&d, *n)).collect();
    let mut checked = 0;
    let mut failures = Vec::new();
    for (name, g, gs) in PAIRS {
        for (i, &m) in ks.iter().enumerate() {
            let gm = module.act(g, &super::KVector::basis(m))?;
            for (j, &n) in ks.iter().enumerate() {
                if (m - n).abs() > 2 {
                    continue;
                }
                let lhs = gm.get(n).conj().mul(&w[j]);
                let rhs = module.matrix_entry(gs, m, n)?.mul(&w[i]);
                checked += 1;
                if lhs != rhs {
                    failures.push((name, m, n));
                }
            }
        }
    }
    Ok(AdjointReport {
        window,
        checked,
        failures,
    })
}

/// Residuals for a unitary character `lambda* = lambda^-1`.
pub fn adjointness_check(
    eps: i8,
    lambda: &GaussRat,
    q0: &BigRational,
    window: i64,
) -> Result<AdjointReport, IndError> {
    if !lambda.norm_sqr().eq(&num_traits::One::one()) {
        return Err(IndError::NotUnitaryCharacter);
    }
    adjointness_residuals(eps, lambda, q0, window)
}
