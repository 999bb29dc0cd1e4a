//! String forms of scalars.
//!
//! Polynomials are written as sparse `coeff*x^k` terms, highest degree first,
//! joined by `+` (so `s^2 - 1` is `1*s^2+-1*s^0`); the zero polynomial is `0`.
//! Rational functions are `num / den`, with the ` / den` part omitted when the
//! denominator is 1. Jets are `[c0, c1, c2] mod h^3` with `Q(k)` coefficients.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Jet, Poly, RatFunc};
use crate::{Error, Result};

fn format_poly(p: &Poly, var: char) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| *c != &BigInt::from(0))
        .map(|(k, c)| format!("{c}*{var}^{k}"))
        .collect();
    terms.join("+")
}

fn parse_poly(text: &str, var: char) -> Result<Poly> {
    let text = text.trim();
    if text == "0" {
        return Ok(Poly::zero());
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    for term in text.split('+') {
        let (c, rest) = term
            .split_once('*')
            .ok_or_else(|| Error::Parse(format!("term without '*': {term:?}")))?;
        let mut chars = rest.chars();
        if chars.next() != Some(var) || chars.next() != Some('^') {
            return Err(Error::Parse(format!("expected {var}^k in {term:?}")));
        }
        let k: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?;
        let c: BigInt = c
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::from(0));
        }
        coeffs[k] += c;
    }
    Ok(Poly::from_coeffs(coeffs))
}

pub fn format_ratfunc(r: &RatFunc, var: char) -> String {
    if r.denom().is_one() {
        format_poly(r.numer(), var)
    } else {
        format!("{} / {}", format_poly(r.numer(), var), format_poly(r.denom(), var))
    }
}

pub fn parse_ratfunc(text: &str, var: char) -> Result<RatFunc> {
    match text.split_once(" / ") {
        Some((n, d)) => RatFunc::new(parse_poly(n, var)?, parse_poly(d, var)?),
        None => Ok(RatFunc::from_poly(parse_poly(text, var)?)),
    }
}

/// `[c0, c1, …] mod h^d`, coefficients in the variable `k`.
pub fn format_jet(j: &Jet) -> String {
    let d = j.order().max(1);
    let cs: Vec<String> = (0..d).map(|i| format_ratfunc(&j.coeff(i), 'k')).collect();
    format!("[{}] mod h^{d}", cs.join(", "))
}

pub fn parse_jet(text: &str) -> Result<Jet> {
    let text = text.trim();
    let (body, order) = text
        .rsplit_once("] mod h^")
        .ok_or_else(|| Error::Parse(format!("not a jet: {text:?}")))?;
    let body = body
        .strip_prefix('[')
        .ok_or_else(|| Error::Parse(format!("not a jet: {text:?}")))?;
    let order: usize = order
        .parse()
        .map_err(|_| Error::Parse(format!("bad jet order in {text:?}")))?;
    let coeffs = body
        .split(", ")
        .map(|c| parse_ratfunc(c, 'k'))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() != order {
        return Err(Error::Parse(format!(
            "jet has {} coefficients, order {order}",
            coeffs.len()
        )));
    }
    Ok(Jet::new(order, coeffs))
}

impl core::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&format_ratfunc(self, 's'))
    }
}

impl core::fmt::Display for Jet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&format_jet(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Field, Ring};
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        let s = RatFunc::var();
        let r = s.mul(&s).sub(&RatFunc::one());
        assert_eq!(format_ratfunc(&r, 's'), "1*s^2+-1*s^0");
        assert_eq!(format_ratfunc(&s.inv().unwrap(), 's'), "1*s^0 / 1*s^1");
        assert_eq!(format_ratfunc(&RatFunc::zero(), 's'), "0");
        let j = Jet::hbar_times(3, RatFunc::var());
        assert_eq!(format_jet(&j), "[0, 1*k^1, 0] mod h^3");
    }

    fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
        (
            proptest::collection::vec(-20i64..20, 0..5),
            proptest::collection::vec(-20i64..20, 1..5),
        )
            .prop_filter_map("nonzero denominator", |(n, d)| {
                RatFunc::new(Poly::from_i64s(&n), Poly::from_i64s(&d)).ok()
            })
    }

    proptest! {
        #[test]
        fn ratfunc_string_roundtrip(r in arb_ratfunc()) {
            let text = format_ratfunc(&r, 's');
            prop_assert_eq!(parse_ratfunc(&text, 's').unwrap(), r.clone());
            prop_assert_eq!(format_ratfunc(&parse_ratfunc(&text, 's').unwrap(), 's'), text);
        }

        #[test]
        fn jet_string_roundtrip(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
            let j = Jet::new(3, alloc::vec![a, b, c]);
            let text = format_jet(&j);
            let back = parse_jet(&text).unwrap();
            prop_assert_eq!(format_jet(&back), text);
            prop_assert_eq!(back, j);
        }
    }
}
