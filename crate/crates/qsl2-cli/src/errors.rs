use thiserror::Error;

use uqsl2::harish::HarishError;
use uqsl2::indmodule::IndError;
use uqsl2::limit::LimitError;
use uqsl2::pbw::PbwError;
use uqsl2::scalars::ScalarError;
use uqsl2::uqirrep::UqError;

use crate::expr::{EvalError, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("selftest failed: {0}")]
    SelftestFailed(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Harish(#[from] HarishError),
    #[error(transparent)]
    Ind(#[from] IndError),
    #[error(transparent)]
    Limit(#[from] LimitError),
    #[error(transparent)]
    Uq(#[from] UqError),
}

fn scalar_kind(e: &ScalarError) -> &'static str {
    match e {
        ScalarError::PoleAtPoint => "PoleAtPoint",
        ScalarError::IrrationalSqrt => "IrrationalSqrt",
        ScalarError::NonPositiveQ => "NonPositiveQ",
        ScalarError::DivisionByZero => "DivisionByZero",
        ScalarError::DivisorIndistinguishableFromZero => "DivisorIndistinguishableFromZero",
        ScalarError::NegativeValuation => "NegativeValuation",
    }
}

fn ind_kind(e: &IndError) -> &'static str {
    match e {
        IndError::ParityMismatch(_) => "ParityMismatch",
        IndError::NotInDomain => "NotInDomain",
        IndError::SingularSolve(_) => "SingularSolve",
        IndError::SearchBoundExceeded(_) => "SearchBoundExceeded",
        IndError::WindowTooSmall => "WindowTooSmall",
        IndError::NotUnitaryCharacter => "NotUnitaryCharacter",
        IndError::InvalidQ => "InvalidQ",
        IndError::NotInvertible => "NotInvertible",
        IndError::InvalidEps => "InvalidEps",
        IndError::LatticeCheckFailed => "LatticeCheckFailed",
        IndError::Scalar(s) => scalar_kind(s),
    }
}

impl CliError {
    /// Machine-readable name of the innermost error.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::SelftestFailed(_) => "SelftestFailed",
            CliError::Parse(ParseError::Syntax { .. }) => "SyntaxError",
            CliError::Parse(ParseError::NonScalarDivisor { .. }) => "NonScalarDivisor",
            CliError::Eval(e) => match e {
                EvalError::DivisionByZero => "DivisionByZero",
                EvalError::NotScalar => "NotScalar",
                EvalError::NotConstant => "NotConstant",
                EvalError::NotRational => "NotRational",
                EvalError::NotInteger => "NotInteger",
            },
            CliError::Scalar(e) => scalar_kind(e),
            CliError::Pbw(PbwError::ZeroElement) => "ZeroElement",
            CliError::Harish(e) => match e {
                HarishError::NotInCoidealPart => "NotInCoidealPart",
                HarishError::NotCentral => "NotCentral",
                HarishError::NotInvariant => "NotInvariant",
                HarishError::NotInvertible => "NotInvertible",
                HarishError::Scalar(s) => scalar_kind(s),
            },
            CliError::Ind(e) => ind_kind(e),
            CliError::Limit(e) => match e {
                LimitError::PoleAtOne => "PoleAtOne",
                LimitError::HypothesisViolated => "HypothesisViolated",
                LimitError::IrrationalParameter => "IrrationalParameter",
                LimitError::ParityMismatch(_) => "ParityMismatch",
                LimitError::OrderTooSmall => "OrderTooSmall",
                LimitError::Ind(i) => ind_kind(i),
                LimitError::Scalar(s) => scalar_kind(s),
            },
            CliError::Uq(e) => match e {
                UqError::InvalidDimension => "InvalidDimension",
                UqError::InvalidS0 => "InvalidS0",
                UqError::PochhammerConventionUnresolved => "PochhammerConventionUnresolved",
                UqError::Scalar(s) => scalar_kind(s),
            },
        }
    }

    /// 1 for malformed input, 2 for well-formed input the mathematics rejects.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Eval(EvalError::DivisionByZero) => 2,
            CliError::Eval(_) => 1,
            _ => 2,
        }
    }

    pub fn position(&self) -> Option<usize> {
        match self {
            CliError::Parse(p) => Some(p.position()),
            _ => None,
        }
    }
}
