//! Tagged scalars for file I/O, where the coefficient kind is only known at
//! runtime.

use std::fmt;

use super::fp::{is_prime, Fp};
use super::laurent::LaurentPoly;
use super::parse::{parse_fp, parse_laurent, parse_ratfunc, parse_rational};
use super::ratfunc::RatFunc;
use super::rational::Q;
use super::ExactError;

/// Which field a representation's entries live in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldKind {
    Rational,
    RationalFunction,
    Prime(u64),
}

impl FieldKind {
    pub fn prime(p: u64) -> Result<Self, ExactError> {
        if is_prime(p) && p < (1 << 32) {
            Ok(FieldKind::Prime(p))
        } else {
            Err(ExactError::Parse {
                input: p.to_string(),
                msg: "modulus must be a prime below 2^32".into(),
            })
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::RationalFunction => write!(f, "rational_function"),
            FieldKind::Prime(p) => write!(f, "prime({p})"),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum ExactScalar {
    Rational(Q),
    Laurent(LaurentPoly),
    RationalFunction(RatFunc),
    Prime(Fp),
}

impl ExactScalar {
    /// Parse a literal as an element of the given field kind.
    pub fn parse(kind: FieldKind, s: &str) -> Result<Self, ExactError> {
        Ok(match kind {
            FieldKind::Rational => ExactScalar::Rational(parse_rational(s)?),
            FieldKind::RationalFunction => ExactScalar::RationalFunction(parse_ratfunc(s)?),
            FieldKind::Prime(p) => ExactScalar::Prime(parse_fp(s, p)?),
        })
    }

    pub fn parse_laurent(s: &str) -> Result<Self, ExactError> {
        Ok(ExactScalar::Laurent(parse_laurent(s)?))
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ExactScalar::Rational(_) => "rational",
            ExactScalar::Laurent(_) => "laurent",
            ExactScalar::RationalFunction(_) => "rational_function",
            ExactScalar::Prime(_) => "prime",
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(x) => write!(f, "{x}"),
            ExactScalar::Laurent(x) => write!(f, "{x}"),
            ExactScalar::RationalFunction(x) => write!(f, "{x}"),
            ExactScalar::Prime(x) => write!(f, "{x}"),
        }
    }
}
