//! One function per subcommand; each returns the JSON value to print.

use std::fmt::Display;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use uqsl2::harish::{casimir, center_express, gamma_tilde, is_central, poly_in_casimir, TLaurent};
use uqsl2::indmodule::{
    adjointness_residuals, classify_with, inner_weight, intertwiners, simple_classify, AtQ,
    Classification, Generic, InducedModule, KVector, PrincipalLabel, QDomain, SimpleClass,
    SimpleVariant, SubmoduleDescriptor,
};
use uqsl2::limit::{
    aform_coeff, classical_classify, correspondence_check, rational_pow, ClassicalSimple,
    CoeffKind, ExponentLambda, LimitError,
};
use uqsl2::par::{self, Parallelism};
use uqsl2::pbw::{
    commutator, independence_oracle, normal_form2, star1, to_basis2, Gen, GenWord, Pbw1Element,
    Pbw2Element,
};
use uqsl2::scalars::{GaussRat, Jet, RatFunc};
use uqsl2::uqirrep::{expected_eigenvalues, orthogonality_check, spectrum_check, theta_matrix};

use crate::expr::{eval_element, eval_gauss, eval_rational, eval_scalar, parse};
use crate::{CliError, Command, Config, LimitCommand};

/// Largest dimension accepted by `spectrum`.
const MAX_SPECTRUM_DIM: usize = 16;

pub fn dispatch(cmd: &Command, cfg: &Config) -> Result<Value, CliError> {
    match cmd {
        Command::Nf { basis, expr } => nf(*basis, expr),
        Command::Comm { a, b } => Ok(pbw1_json(&commutator(&element(a)?, &element(b)?))),
        Command::Star { expr } => Ok(pbw1_json(&star1(&element(expr)?))),
        Command::Central { expr } => central(expr),
        Command::Hc { expr } => {
            Ok(json!({ "t_poly": tlaurent_json(&gamma_tilde(&element(expr)?)) }))
        }
        Command::Act {
            eps,
            lambda,
            q,
            vector,
            expr,
        } => act(*eps, lambda, q.as_deref(), vector, expr),
        Command::Classify { eps, lambda, q } => classify(*eps, lambda, q.as_deref(), cfg),
        Command::Intertwine { eps, from, to, q } => intertwine(*eps, from, to, q.as_deref(), cfg),
        Command::Weights { n } => weights(*n),
        Command::Adjoint { eps, lambda, q } => adjoint(*eps, lambda, q, cfg),
        Command::Simple { eps, lambda, q } => {
            let simples = simple_classify(*eps, &gauss(lambda)?, &rational(q)?)?;
            Ok(json!({ "simples": simples.iter().map(simple_json).collect::<Vec<_>>() }))
        }
        Command::Limit(l) => limit(l, cfg),
        Command::Spectrum { dim } => spectrum(*dim),
        Command::Selftest => selftest(),
    }
}

fn element(s: &str) -> Result<Pbw1Element, CliError> {
    Ok(eval_element(&parse(s)?)?)
}

fn scalar(s: &str) -> Result<RatFunc, CliError> {
    Ok(eval_scalar(&parse(s)?)?)
}

fn gauss(s: &str) -> Result<GaussRat, CliError> {
    Ok(eval_gauss(&parse(s)?)?)
}

fn rational(s: &str) -> Result<BigRational, CliError> {
    Ok(eval_rational(&parse(s)?)?)
}

fn strings<T: Display>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

pub fn pbw1_json(e: &Pbw1Element) -> Value {
    let monomials: Vec<Value> = e
        .terms()
        .iter()
        .map(|(m, c)| json!({ "m1": m.m1, "n": m.n, "m2": m.m2, "coeff": c.to_string() }))
        .collect();
    json!({ "basis": 1, "monomials": monomials })
}

pub fn pbw2_json(e: &Pbw2Element) -> Value {
    let monomials: Vec<Value> = e
        .terms()
        .iter()
        .map(|(k, c)| json!({ "m": k.m, "n": k.n, "d": k.d, "p": k.p, "coeff": c.to_string() }))
        .collect();
    json!({ "basis": 2, "monomials": monomials })
}

fn tlaurent_json(t: &TLaurent) -> Value {
    Value::Array(
        t.terms()
            .iter()
            .map(|(k, c)| json!([k, c.to_string()]))
            .collect(),
    )
}

fn kvector_json<S: uqsl2::scalars::Field>(v: &KVector<S>) -> Value {
    Value::Array(
        v.entries()
            .iter()
            .map(|(n, c)| json!([n, c.to_string()]))
            .collect(),
    )
}

pub fn jet_json(j: &Jet) -> Value {
    json!({ "valuation": j.valuation, "coeffs": strings(&j.coeffs) })
}

fn nf(basis: u8, expr: &str) -> Result<Value, CliError> {
    let e = element(expr)?;
    Ok(if basis == 1 {
        pbw1_json(&e)
    } else {
        pbw2_json(&to_basis2(&e))
    })
}

fn central(expr: &str) -> Result<Value, CliError> {
    let e = element(expr)?;
    if !is_central(&e) {
        return Ok(json!({ "central": false, "polynomial": null }));
    }
    let w = center_express(&e)?;
    Ok(json!({ "central": true, "polynomial": strings(&w.polynomial) }))
}

fn check_eps(eps: i8) -> Result<i8, CliError> {
    if eps == 1 || eps == -1 {
        Ok(eps)
    } else {
        Err(uqsl2::indmodule::IndError::InvalidEps.into())
    }
}

fn parse_vector(s: &str) -> Result<Vec<(i64, RatFunc)>, CliError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (n, c) = p
                .split_once(':')
                .ok_or_else(|| CliError::Usage(format!("vector entry '{p}' is not n:coeff")))?;
            let n: i64 = n
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad K-type '{n}'")))?;
            Ok((n, scalar(c)?))
        })
        .collect()
}

fn act_in<D: QDomain>(
    d: D,
    eps: i8,
    lambda: &RatFunc,
    vector: &[(i64, RatFunc)],
    a: &Pbw1Element,
) -> Result<Value, CliError> {
    let lam = d.embed(lambda)?;
    let module = InducedModule::new(d.clone(), eps, lam)?;
    let mut v = KVector::zero();
    for (n, c) in vector {
        v.add_term(*n, d.embed(c)?);
    }
    Ok(json!({ "vector": kvector_json(&module.act_element(a, &v)?) }))
}

fn act(
    eps: i8,
    lambda: &str,
    q: Option<&str>,
    vector: &str,
    expr: &str,
) -> Result<Value, CliError> {
    let eps = check_eps(eps)?;
    let lam = scalar(lambda)?;
    let vec = parse_vector(vector)?;
    let a = element(expr)?;
    match q {
        None => act_in(Generic, eps, &lam, &vec, &a),
        Some(q) => act_in(AtQ::new(rational(q)?)?, eps, &lam, &vec, &a),
    }
}

fn descriptor_json(s: &SubmoduleDescriptor) -> Value {
    json!({ "kind": s.kind.name(), "n": s.n })
}

pub fn simple_json<S: Display>(c: &SimpleClass<S>) -> Value {
    let ut = c.unitary_type.map(|t| t.name());
    match &c.variant {
        SimpleVariant::Principal { eps, lambda } => json!({
            "class": c.variant.name(),
            "eps": eps,
            "lambda": lambda.to_string(),
            "unitarizable": c.unitarizable,
            "unitary_type": ut,
        }),
        SimpleVariant::DiscretePlus { sigma, n }
        | SimpleVariant::DiscreteMinus { sigma, n }
        | SimpleVariant::FiniteDim { sigma, n } => json!({
            "class": c.variant.name(),
            "sigma": sigma,
            "n": n,
            "unitarizable": c.unitarizable,
            "unitary_type": ut,
        }),
    }
}

pub fn classification_json<S: Display>(c: &Classification<S>) -> Value {
    json!({
        "eps": c.eps,
        "lambda": c.lambda.to_string(),
        "special": c.special.map(|(sigma, n)| json!({ "sigma": sigma, "n": n })),
        "submodules": c.submodules.iter().map(descriptor_json).collect::<Vec<_>>(),
        "composition_series": c.composition_series.iter().map(simple_json).collect::<Vec<_>>(),
    })
}

fn classify_in<D: PrincipalLabel>(
    d: D,
    eps: i8,
    lambda: &RatFunc,
    cfg: &Config,
) -> Result<Value, CliError>
where
    D::S: Display,
{
    let lam = d.embed(lambda)?;
    Ok(classification_json(&classify_with(
        &d, eps, &lam, cfg.n_max,
    )?))
}

fn classify(eps: i8, lambda: &str, q: Option<&str>, cfg: &Config) -> Result<Value, CliError> {
    let lam = scalar(lambda)?;
    match q {
        None => classify_in(Generic, eps, &lam, cfg),
        Some(q) => classify_in(AtQ::new(rational(q)?)?, eps, &lam, cfg),
    }
}

fn intertwine_in<D: QDomain>(
    d: D,
    eps: i8,
    from: &RatFunc,
    to: &RatFunc,
    cfg: &Config,
) -> Result<Value, CliError> {
    let space = intertwiners(&d, eps, &d.embed(from)?, eps, &d.embed(to)?, cfg.window)?;
    let basis: Vec<Value> = space
        .basis
        .iter()
        .map(|f| Value::Array(f.iter().map(|(n, c)| json!([n, c.to_string()])).collect()))
        .collect();
    Ok(json!({ "dimension": space.dimension, "basis": basis, "window": cfg.window }))
}

fn intertwine(
    eps: i8,
    from: &str,
    to: &str,
    q: Option<&str>,
    cfg: &Config,
) -> Result<Value, CliError> {
    let (from, to) = (scalar(from)?, scalar(to)?);
    match q {
        None => intertwine_in(Generic, eps, &from, &to, cfg),
        Some(q) => intertwine_in(AtQ::new(rational(q)?)?, eps, &from, &to, cfg),
    }
}

fn weights(n: u32) -> Result<Value, CliError> {
    let n = n as i64;
    let w: Vec<Value> = (-n..=n)
        .map(|k| json!([k, inner_weight(&Generic, k).to_string()]))
        .collect();
    Ok(json!({ "weights": w }))
}

fn adjoint(eps: i8, lambda: &str, q: &str, cfg: &Config) -> Result<Value, CliError> {
    let r = adjointness_residuals(eps, &gauss(lambda)?, &rational(q)?, cfg.window)?;
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|(g, m, n)| json!([g, m, n]))
        .collect();
    Ok(json!({
        "window": r.window,
        "checked": r.checked,
        "failures": failures,
        "passed": r.passed(),
    }))
}

fn classical_simple_json(c: &ClassicalSimple) -> Value {
    match c {
        ClassicalSimple::Principal { eps, lambda } => {
            json!({ "class": c.name(), "eps": eps, "lambda": lambda.to_string() })
        }
        ClassicalSimple::DiscretePlus { n }
        | ClassicalSimple::DiscreteMinus { n }
        | ClassicalSimple::FiniteDim { n } => json!({ "class": c.name(), "n": n }),
    }
}

fn limit(cmd: &LimitCommand, cfg: &Config) -> Result<Value, CliError> {
    match cmd {
        LimitCommand::Coeff {
            kind,
            n,
            lam,
            at,
            negative,
        } => {
            let kind = CoeffKind::parse(kind)
                .ok_or_else(|| CliError::Usage(format!("unknown kind '{kind}'")))?;
            let lambda = gauss(lam)?;
            let sigma = if *negative { -1 } else { 1 };
            let el = ExponentLambda::with_sign(lambda.clone(), sigma);
            let c = aform_coeff(kind, *n, &el, cfg.jet_order as usize)?;
            let mut out = json!({
                "kind": kind.name(),
                "n": n,
                "lambda": lambda.to_string(),
                "sigma": sigma,
                "closed_form": c.closed_form(),
                "jet": jet_json(c.jet()),
                "ev1": c.ev1().to_string(),
            });
            if let Some(q) = at {
                let q0 = rational(q)?;
                if !lambda.is_real() || !lambda.re.is_integer() {
                    return Err(LimitError::IrrationalParameter.into());
                }
                let k: i64 = lambda
                    .re
                    .to_integer()
                    .try_into()
                    .map_err(|_| LimitError::IrrationalParameter)?;
                let mu = GaussRat::real(rational_pow(&q0, k) * BigInt::from(sigma));
                out["value"] = Value::from(c.at(&q0, &mu)?.to_string());
            }
            Ok(out)
        }
        LimitCommand::ClassicalClassify { eps, lambda } => {
            let c = classical_classify(*eps, &gauss(lambda)?)?;
            Ok(json!({
                "eps": c.eps,
                "lambda": c.lambda.to_string(),
                "special": c.special,
                "submodules": c.submodules.iter().map(descriptor_json).collect::<Vec<_>>(),
                "composition_series":
                    c.composition_series.iter().map(classical_simple_json).collect::<Vec<_>>(),
            }))
        }
        LimitCommand::Compare { eps, lambda, q } => {
            let c = correspondence_check(*eps, &gauss(lambda)?, &rational(q)?)?;
            Ok(json!({
                "matches": c.matches,
                "window": c.window,
                "quantum": c.quantum.iter().map(descriptor_json).collect::<Vec<_>>(),
                "classical": c.classical.iter().map(descriptor_json).collect::<Vec<_>>(),
            }))
        }
    }
}

fn spectrum(dim: usize) -> Result<Value, CliError> {
    if dim > MAX_SPECTRUM_DIM {
        return Err(CliError::Usage(format!(
            "dimension is limited to {MAX_SPECTRUM_DIM}"
        )));
    }
    let cp = theta_matrix(dim)?.char_poly();
    Ok(json!({
        "dim": dim,
        "eigenvalues": strings(&expected_eigenvalues(dim)),
        "char_poly": strings(&cp),
        "verified": spectrum_check(dim)?,
    }))
}

/// The defining relations in the first basis, as expressions equal to 0.
pub const RELATIONS: [&str; 7] = [
    "X*Z - q^2*Z*X",
    "Z*Y - q^2*Y*Z",
    "X*Y + q^2*Z^2 - 1",
    "Y*X + q^-2*Z^2 - 1",
    "q*X*theta - q^-1*theta*X - (q + q^-1)*Z",
    "q*theta*Y - q^-1*Y*theta - (q + q^-1)*Z",
    "theta*Z - Z*theta - Y + X",
];

/// The relations of the integral form in `theta, x, y, z`.
pub const AFORM_RELATIONS: [&str; 7] = [
    "q*x*theta - q^-1*theta*x - (q + q^-1)*z + theta",
    "q*theta*y - q^-1*y*theta - (q + q^-1)*z + theta",
    "theta*z - z*theta - y + x",
    "q*z*x - q^-1*x*z + z",
    "q*y*z - q^-1*z*y + z",
    "x*y + q^2*z^2 - y*x - q^-2*z^2",
    "x + y + (q - q^-1)*x*y + (q - q^-1)*q^2*z^2",
];

fn vanishes(rels: &[&str], basis2: bool) -> Result<bool, CliError> {
    for r in rels {
        let e = element(r)?;
        let zero = if basis2 {
            to_basis2(&e).is_zero()
        } else {
            e.is_zero()
        };
        if !zero {
            return Ok(false);
        }
    }
    Ok(true)
}

fn t_plus_inverse() -> TLaurent {
    let mut t = TLaurent::default();
    t.add_term(1, RatFunc::one());
    t.add_term(-1, RatFunc::one());
    t
}

fn check_center() -> Result<bool, CliError> {
    let om = casimir();
    let p = vec![
        RatFunc::one(),
        RatFunc::q(),
        RatFunc::zero(),
        RatFunc::from_int(-2),
    ];
    Ok(is_central(&om)
        && star1(&om) == om
        && gamma_tilde(&om) == t_plus_inverse()
        && center_express(&poly_in_casimir(&p))?.polynomial == p)
}

fn check_oracle() -> bool {
    use Gen::*;
    let letters = [Theta, SmallX, SmallY, SmallZ, A, B];
    letters.iter().all(|a| {
        letters.iter().all(|b| {
            let w = GenWord::letters(&[*a, *b]);
            normal_form2(&w) == independence_oracle(&w)
        })
    })
}

fn check_modules() -> Result<bool, CliError> {
    let generic = InducedModule::new(Generic, 1, RatFunc::s_pow(1))?;
    let q0 = BigRational::from_integer(BigInt::from(4));
    let lam = GaussRat::from_parts((3, 5), (4, 5));
    let concrete = InducedModule::new(AtQ::new(q0.clone())?, -1, lam.clone())?;
    let mode = Parallelism::Sequential;
    let ok = generic.relation_failures(12, mode)?.is_empty()
        && concrete.relation_failures(12, mode)?.is_empty();
    let unitary = adjointness_residuals(1, &lam, &q0, 10)?.passed();
    let not_unitary = !adjointness_residuals(1, &GaussRat::from_int(4), &q0, 10)?.passed();
    Ok(ok && unitary && not_unitary)
}

fn check_classification() -> Result<bool, CliError> {
    let five = classify_with(&Generic, 1, &RatFunc::q_pow(3), 64)?;
    let simple = classify_with(&Generic, 1, &RatFunc::q_pow(2), 64)?;
    let mid = classify_with(&Generic, 1, &RatFunc::q_pow(-3), 64)?;
    Ok(five.submodules.len() == 5
        && five.composition_series.len() == 3
        && simple.submodules.len() == 2
        && mid.submodules.len() == 5)
}

fn check_limit() -> Result<bool, CliError> {
    for n in [-4i64, 0, 3] {
        for l in [0i64, 2] {
            let el = ExponentLambda::new(GaussRat::from_int(l));
            let c = aform_coeff(CoeffKind::TPlus, n, &el, 8)?;
            if c.ev1() != GaussRat::from_int(l + 1 + n) {
                return Ok(false);
            }
        }
    }
    let q0 = BigRational::from_integer(BigInt::from(2));
    Ok(correspondence_check(1, &GaussRat::from_int(3), &q0)?.matches)
}

fn check_spectrum() -> Result<bool, CliError> {
    for d in 1..=6 {
        if !spectrum_check(d)? {
            return Ok(false);
        }
    }
    let s0 = BigRational::new(BigInt::from(1), BigInt::from(4));
    Ok(orthogonality_check(3, &s0)?)
}

type Check = (&'static str, fn() -> Result<bool, CliError>);

const CHECKS: [Check; 8] = [
    ("relations_basis1", || vanishes(&RELATIONS, false)),
    ("relations_basis2", || vanishes(&AFORM_RELATIONS, true)),
    ("oracle_equivalence", || Ok(check_oracle())),
    ("center", check_center),
    ("module_relations_and_unitarity", check_modules),
    ("classification", check_classification),
    ("classical_limit", check_limit),
    ("spectrum_and_orthogonality", check_spectrum),
];

fn selftest() -> Result<Value, CliError> {
    let results = par::map(&CHECKS, Parallelism::default(), |(name, f)| {
        (*name, f().unwrap_or(false))
    });
    let failed: Vec<&str> = results
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    if !failed.is_empty() {
        return Err(CliError::SelftestFailed(failed.join(", ")));
    }
    let checks: Vec<Value> = results
        .iter()
        .map(|(n, ok)| json!({ "name": n, "passed": ok }))
        .collect();
    Ok(json!({ "checks": checks, "passed": true }))
}
