//! Shared plain-text polynomial grammar: integer coefficients, `*`, `^`,
//! named variables, terms joined by `+`/`-`, one polynomial per line, `#`
//! comments. Printing is canonical (sorted by the ring's term order).

use super::coeff::Coeff;
use super::mono::Monomial;
use super::ring::{Poly, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Render an integer-like coefficient for printing. Implemented for the
/// domains the text format supports.
pub trait TextCoeff: Coeff {
    fn to_text(&self) -> String;
}

impl TextCoeff for BigRational {
    fn to_text(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

impl TextCoeff for super::coeff::Fp {
    fn to_text(&self) -> String {
        // balanced representative so mod-p output reads like small integers
        if self.val > self.p / 2 {
            format!("-{}", self.p - self.val)
        } else {
            self.val.to_string()
        }
    }
}

pub fn print_poly<C: TextCoeff>(f: &Poly<C>, ring: &Ring) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in f.terms.iter().enumerate() {
        let ctext = c.to_text();
        let (sign, mag) = match ctext.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", ctext),
        };
        if i == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if mag != "1" || m.is_one() {
            factors.push(mag);
        }
        for (v, &e) in m.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(ring.vars[v].clone()),
                _ => factors.push(format!("{}^{}", ring.vars[v], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

pub fn parse_poly<C: Coeff>(line: &str, ring: &Ring, one: &C) -> Result<Poly<C>> {
    let src = line.split('#').next().unwrap_or("").trim();
    if src.is_empty() || src == "0" {
        return Ok(Poly::zero());
    }
    let mut terms: Vec<(Monomial, C)> = Vec::new();
    let mut rest = src;
    let mut sign = 1i64;
    // leading sign
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        // take one term up to the next top-level + or -
        let end = rest
            .char_indices()
            .find(|&(i, ch)| (ch == '+' || ch == '-') && i > 0)
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term_src = rest[..end].trim();
        terms.push(parse_term(term_src, ring, one, sign)?);
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
        rest = rest[end + 1..].trim_start();
        if rest.is_empty() {
            return Err(Error::Parse(format!("dangling operator in '{line}'")));
        }
    }
    Ok(Poly::normalize(terms, ring))
}

fn parse_term<C: Coeff>(src: &str, ring: &Ring, one: &C, sign: i64) -> Result<(Monomial, C)> {
    let mut coeff = one.from_i64(sign);
    let mut mono = Monomial::one(ring.nvars());
    for factor in src.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in '{src}'")));
        }
        if factor.chars().next().unwrap().is_ascii_digit() {
            let v: i64 = factor
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient '{factor}'")))?;
            coeff = coeff.mul(&one.from_i64(v));
        } else {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?,
                ),
                None => (factor, 1),
            };
            let idx = ring
                .var_index(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable '{name}'")))?;
            mono.exps[idx] = mono.exps[idx]
                .checked_add(exp)
                .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
            mono.deg += exp as u32;
        }
    }
    Ok((mono, coeff))
}

/// Clear denominators and content: returns the primitive integer multiple.
pub fn clear_denominators(f: &Poly<BigRational>) -> Poly<BigRational> {
    use num_bigint::BigUint;
    use num_integer::lcm as int_lcm;
    if f.is_zero() {
        return f.clone();
    }
    let mut l = BigUint::one();
    for (_, c) in &f.terms {
        l = int_lcm(l, c.denom().magnitude().clone());
    }
    let scaled: Vec<BigInt> = f
        .terms
        .iter()
        .map(|(_, c)| c.numer() * BigInt::from(l.clone()) / c.denom())
        .collect();
    let mut g = BigUint::default();
    for v in &scaled {
        g = num_integer::gcd(g, v.magnitude().clone());
    }
    if g == BigUint::default() {
        g = BigUint::one();
    }
    let mut terms = Vec::with_capacity(f.terms.len());
    let gi = BigInt::from(g);
    for ((m, _), v) in f.terms.iter().zip(scaled) {
        terms.push((m.clone(), BigRational::from_integer(v / &gi)));
    }
    // leading coefficient positive
    if terms.first().map(|(_, c): &(Monomial, BigRational)| c.is_negative()) == Some(true) {
        for (_, c) in &mut terms {
            *c = -c.clone();
        }
    }
    Poly { terms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff::Fp;
    use crate::poly::mono::Order;

    #[test]
    fn round_trip() {
        let ring = Ring::numbered("Y", 3, Order::GrevLex);
        let one = Fp::new(1, 557);
        let f = parse_poly("2*Y1^2*Y3 - Y2 + 5 # comment", &ring, &one).unwrap();
        let s = print_poly(&f, &ring);
        assert_eq!(s, "2*Y1^2*Y3 - Y2 + 5");
        let g = parse_poly(&s, &ring, &one).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn negative_leading_and_zero() {
        let ring = Ring::numbered("Y", 2, Order::GrevLex);
        let one = Fp::new(1, 557);
        let f = parse_poly("-Y1 + Y2", &ring, &one).unwrap();
        assert_eq!(print_poly(&f, &ring), "-Y1 + Y2");
        assert!(parse_poly("  # only a comment", &ring, &one)
            .unwrap()
            .is_zero());
        assert!(parse_poly("Y1 + Q9", &ring, &one).is_err());
    }

    #[test]
    fn clear_denominators_primitive() {
        use num_rational::BigRational;
        let ring = Ring::numbered("Y", 2, Order::GrevLex);
        let one = BigRational::from_integer(BigInt::from(1));
        let f = parse_poly("Y1 - Y2", &ring, &one).unwrap();
        let half = f.scale(&(BigRational::new(BigInt::from(-3), BigInt::from(2))));
        let cleared = clear_denominators(&half);
        assert_eq!(print_poly(&cleared, &ring), "Y1 - Y2");
    }
}
