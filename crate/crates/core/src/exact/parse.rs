//! Scalar literals: rationals like `-3/2` and Laurent polynomials like
//! `u^-1 + 2 - u^3`. Rational functions are written `(num)/(den)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::fp::Fp;
use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::rational::Q;
use super::ring::{Field, Ring};
use super::ExactError;

fn err(input: &str, msg: impl Into<String>) -> ExactError {
    ExactError::Parse {
        input: input.to_string(),
        msg: msg.into(),
    }
}

fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect()
}

fn parse_rational_body(input: &str, s: &str) -> Result<Q, ExactError> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err(input, format!("bad integer `{n}`")))?;
    let d: BigInt = d.parse().map_err(|_| err(input, format!("bad integer `{d}`")))?;
    if d.is_zero() {
        return Err(err(input, "zero denominator"));
    }
    Ok(Q::new(n, d))
}

pub fn parse_rational(input: &str) -> Result<Q, ExactError> {
    let s = normalize(input);
    if s.is_empty() {
        return Err(err(input, "empty literal"));
    }
    parse_rational_body(input, &s)
}

/// Grammar: terms separated by `+`/`-`; a term is `c`, `c*u^k`, `cu^k`,
/// `u^k` or `u`, with `c` an integer or fraction and `k` a signed integer.
pub fn parse_laurent(input: &str) -> Result<LaurentPoly, ExactError> {
    let s = normalize(input);
    if s.is_empty() {
        return Err(err(input, "empty literal"));
    }
    let mut terms = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == '+' || bytes[i] == '-' {
            if bytes[i] == '-' {
                sign = -1;
            }
            i += 1;
        }
        let start = i;
        // A term ends at the next sign that is not part of an exponent.
        while i < bytes.len() && !((bytes[i] == '+' || bytes[i] == '-') && bytes[i - 1] != '^') {
            i += 1;
        }
        let term: String = bytes[start..i].iter().collect();
        if term.is_empty() {
            return Err(err(input, "missing term"));
        }
        let (coef, exp) = parse_term(input, &term)?;
        terms.push((exp, if sign < 0 { -coef } else { coef }));
    }
    Ok(LaurentPoly::from_terms(terms))
}

fn parse_term(input: &str, term: &str) -> Result<(Q, i64), ExactError> {
    match term.find('u') {
        None => Ok((parse_rational_body(input, term)?, 0)),
        Some(pos) => {
            let coef_str = term[..pos].trim_end_matches('*');
            let coef = if coef_str.is_empty() {
                Q::one(&())
            } else {
                parse_rational_body(input, coef_str)?
            };
            let rest = &term[pos + 1..];
            let exp = if rest.is_empty() {
                1
            } else if let Some(e) = rest.strip_prefix('^') {
                e.parse::<i64>()
                    .map_err(|_| err(input, format!("bad exponent `{e}`")))?
            } else {
                return Err(err(input, format!("unexpected `{rest}` after u")));
            };
            Ok((coef, exp))
        }
    }
}

/// Accepts `(num)/(den)` with Laurent numerator and denominator, or a
/// plain Laurent polynomial.
pub fn parse_ratfunc(input: &str) -> Result<RatFunc, ExactError> {
    let s = normalize(input);
    if let Some(rest) = s.strip_prefix('(') {
        let close = rest
            .find(')')
            .ok_or_else(|| err(input, "unbalanced parenthesis"))?;
        let num = parse_laurent(&rest[..close])?;
        let after = &rest[close + 1..];
        if after.is_empty() {
            return Ok(RatFunc::from_laurent(&num));
        }
        let den_str = after
            .strip_prefix("/(")
            .and_then(|d| d.strip_suffix(')'))
            .ok_or_else(|| err(input, "expected `/(den)`"))?;
        let den = parse_laurent(den_str)?;
        if den.is_zero() {
            return Err(err(input, "zero denominator"));
        }
        return RatFunc::from_laurent(&num)
            .div(&RatFunc::from_laurent(&den))
            .ok_or_else(|| err(input, "zero denominator"));
    }
    Ok(RatFunc::from_laurent(&parse_laurent(&s)?))
}

/// Integer or fraction, reduced modulo `p`.
pub fn parse_fp(input: &str, p: u64) -> Result<Fp, ExactError> {
    let q = parse_rational(input)?;
    let pb = BigInt::from(p);
    let to_fp = |x: &BigInt| -> Fp {
        let r = ((x % &pb) + &pb) % &pb;
        Fp::new(i64::try_from(r).expect("residue fits"), p)
    };
    let n = to_fp(q.numer());
    let d = to_fp(q.denom());
    n.div(&d)
        .ok_or_else(|| err(input, format!("denominator divisible by {p}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::qf;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/2").unwrap(), qf(-3, 2));
        assert_eq!(parse_rational("\u{2212}3/2").unwrap(), qf(-3, 2));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn laurent_round_trip() {
        let l = parse_laurent("u^-1 + 2 - u^3").unwrap();
        assert_eq!(l.to_string(), "u^-1+2-u^3");
        assert_eq!(parse_laurent(&l.to_string()).unwrap(), l);
        assert_eq!(parse_laurent("3/2u^2").unwrap().coeff(2), qf(3, 2));
        assert_eq!(parse_laurent("-2*u").unwrap().coeff(1), qf(-2, 1));
    }

    #[test]
    fn rational_functions() {
        let r = parse_ratfunc("(1)/(u)").unwrap();
        assert_eq!(r, RatFunc::u().inv().unwrap());
        assert_eq!(parse_ratfunc(&r.to_string()).unwrap(), r);
        assert_eq!(parse_ratfunc("u^-1").unwrap(), r);
    }

    #[test]
    fn prime_field_literals() {
        assert_eq!(parse_fp("-1", 101).unwrap().value(), 100);
        assert_eq!(parse_fp("1/2", 101).unwrap().value(), 51);
        assert!(parse_fp("1/101", 101).is_err());
    }

    #[test]
    fn garbage_is_rejected() {
        assert!(parse_laurent("u^x").is_err());
        assert!(parse_laurent("2v").is_err());
        assert!(parse_laurent("").is_err());
    }
}
