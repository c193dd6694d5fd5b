//! K-equivariant maps `zeta_n -> f_n zeta_n` between two induced modules,
//! found by solving the full graded intertwining system on a window.

use std::collections::BTreeMap;

use crate::scalars::Field;

use super::domain::{QDomain, DEFAULT_N_MAX};
use super::{transition_raw, IndError, Parity, Step};

#[derive(Clone, PartialEq, Debug)]
pub struct IntertwinerSpace<S> {
    pub dimension: usize,
    /// Each family `n -> f_n`, zeros omitted, with the nonzero entry of
    /// smallest `|n|` (then smallest `n`) equal to 1.
    pub basis: Vec<BTreeMap<i64, S>>,
}

/// Basis of the right nullspace of `rows` (each of length `ncols`).
pub(crate) fn nullspace<S: Field>(mut rows: Vec<Vec<S>>, ncols: usize) -> Vec<Vec<S>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|i| !rows[*i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..ncols {
                if !rows[r][j].is_zero() {
                    let v = rows[i][j].sub(&f.mul(&rows[r][j]));
                    rows[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![S::zero(); ncols];
            v[fc] = S::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = rows[i][fc].neg();
            }
            v
        })
        .collect()
}

fn near_edge<D: QDomain>(d: &D, lambda: &D::S, window: i64) -> Result<bool, IndError> {
    // Coefficients vanish only at lambda = +-q^k, at K-types of size |k| + 1.
    Ok(match d.power_of_q(lambda, DEFAULT_N_MAX)? {
        Some((_, k)) => k.abs() + 1 > window - 4,
        None => false,
    })
}

/// The general graded problem: `f_{n+2} c+_n(l1) = c+_n(l2) f_n`,
/// `f_{n-2} c-_n(l1) = c-_n(l2) f_n`, `c0(l1) f_n = c0(l2) f_n` for `|n| <= window`.
pub fn solve_intertwiners<D: QDomain>(
    d: &D,
    eps1: i8,
    lambda1: &D::S,
    eps2: i8,
    lambda2: &D::S,
    window: i64,
) -> Result<IntertwinerSpace<D::S>, IndError> {
    let (p1, p2) = (Parity::from_eps(eps1)?, Parity::from_eps(eps2)?);
    let inv1 = lambda1.inv().ok_or(IndError::NotInvertible)?;
    let inv2 = lambda2.inv().ok_or(IndError::NotInvertible)?;
    if near_edge(d, lambda1, window)? || near_edge(d, lambda2, window)? {
        return Err(IndError::WindowTooSmall);
    }
    let ks: Vec<i64> = p1.window(window).filter(|n| p2.contains(*n)).collect();
    let col: BTreeMap<i64, usize> = ks.iter().enumerate().map(|(i, n)| (*n, i)).collect();
    let c1 = |w, n| transition_raw(d, lambda1, &inv1, w, n);
    let c2 = |w, n| transition_raw(d, lambda2, &inv2, w, n);
    let mut rows = Vec::new();
    let mut push = |entries: Vec<(usize, D::S)>| {
        if entries.iter().any(|(_, c)| !c.is_zero()) {
            let mut row = vec![D::S::zero(); ks.len()];
            for (j, c) in entries {
                row[j] = row[j].add(&c);
            }
            rows.push(row);
        }
    };
    for &n in &ks {
        let j = col[&n];
        push(vec![(j, c1(Step::Diag, n).sub(&c2(Step::Diag, n)))]);
        if let Some(&jp) = col.get(&(n + 2)) {
            push(vec![(jp, c1(Step::Up, n)), (j, c2(Step::Up, n).neg())]);
        }
        if let Some(&jm) = col.get(&(n - 2)) {
            push(vec![(jm, c1(Step::Down, n)), (j, c2(Step::Down, n).neg())]);
        }
    }
    let mut basis: Vec<BTreeMap<i64, D::S>> = nullspace(rows, ks.len())
        .into_iter()
        .map(|v| {
            let lead = ks
                .iter()
                .zip(&v)
                .filter(|(_, c)| !c.is_zero())
                .min_by_key(|(n, _)| (n.abs(), **n))
                .map(|(_, c)| c.inv().unwrap())
                .unwrap();
            ks.iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(n, c)| (*n, c.mul(&lead)))
                .collect()
        })
        .collect();
    basis.sort_by_key(|f: &BTreeMap<i64, D::S>| f.keys().map(|n| (n.abs(), *n)).min());
    Ok(IntertwinerSpace {
        dimension: basis.len(),
        basis,
    })
}

/// Like `solve_intertwiners`, but returns the zero space at once when the
/// parities or the central characters differ.
pub fn intertwiners<D: QDomain>(
    d: &D,
    eps1: i8,
    lambda1: &D::S,
    eps2: i8,
    lambda2: &D::S,
    window: i64,
) -> Result<IntertwinerSpace<D::S>, IndError> {
    let inv1 = lambda1.inv().ok_or(IndError::NotInvertible)?;
    let inv2 = lambda2.inv().ok_or(IndError::NotInvertible)?;
    Parity::from_eps(eps1)?;
    Parity::from_eps(eps2)?;
    if eps1 != eps2 || lambda1.add(&inv1) != lambda2.add(&inv2) {
        return Ok(IntertwinerSpace {
            dimension: 0,
            basis: Vec::new(),
        });
    }
    solve_intertwiners(d, eps1, lambda1, eps2, lambda2, window)
}
