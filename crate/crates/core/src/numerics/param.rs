//! Exact complex parameters written as `x+yi`, `p/q`, `i0.5`, `2/7i`, ...

use super::real::{Cx, Real};
use crate::{Error, Result};
use num_complex::Complex;
use rug::{Integer, Rational};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CParam {
    pub re: Rational,
    pub im: Rational,
}

impl CParam {
    pub fn new(re: Rational, im: Rational) -> Self {
        CParam { re, im }
    }

    pub fn real(re: Rational) -> Self {
        CParam { re, im: Rational::new() }
    }

    pub fn imag(im: Rational) -> Self {
        CParam { re: Rational::new(), im }
    }

    pub fn is_real(&self) -> bool {
        self.im == 0
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn neg(&self) -> Self {
        CParam { re: -self.re.clone(), im: -self.im.clone() }
    }

    pub fn to<T: Real>(&self) -> Cx<T> {
        Complex::new(T::from_rational(&self.re), T::from_rational(&self.im))
    }

    pub fn to_c64(&self) -> Complex<f64> {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl From<Rational> for CParam {
    fn from(r: Rational) -> Self {
        CParam::real(r)
    }
}

impl From<(i64, i64)> for CParam {
    fn from(p: (i64, i64)) -> Self {
        CParam::real(Rational::from(p))
    }
}

impl fmt::Display for CParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re == 0, self.im == 0) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im < 0 => write!(f, "{}{}i", self.re, self.im),
            _ => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

/// `p/q`, an integer, or a decimal with optional exponent, read exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("cannot read '{s}' as a rational number"));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if s.contains('/') {
        return Rational::from_str(s).map_err(|_| bad());
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(k) => (&s[..k], s[k + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    if ip.is_empty() && fp.is_empty() || !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{ip}{fp}");
    let int = Integer::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
    let scale = exp - fp.len() as i32;
    let mut r = Rational::from(int);
    let p = Integer::from(Integer::u_pow_u(10, scale.unsigned_abs()));
    if scale >= 0 {
        r *= p;
    } else {
        r /= p;
    }
    Ok(if neg { -r } else { r })
}

fn parse_imag(t: &str) -> Result<Rational> {
    let (sign, body) = match t.strip_prefix('-') {
        Some(b) => (-1, b),
        None => (1, t.strip_prefix('+').unwrap_or(t)),
    };
    let body = body.strip_prefix('i').or_else(|| body.strip_suffix('i')).unwrap_or(body);
    let body = body.strip_prefix('*').or_else(|| body.strip_suffix('*')).unwrap_or(body);
    let v = if body.is_empty() {
        Rational::from(1)
    } else if body.starts_with('/') {
        parse_rational(&format!("1{body}"))?
    } else {
        parse_rational(body)?
    };
    Ok(if sign < 0 { -v } else { v })
}

impl FromStr for CParam {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if !s.contains('i') {
            return Ok(CParam::real(parse_rational(&s)?));
        }
        // split at the last sign that is neither leading nor an exponent sign
        let bytes = s.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (a, b) = match split {
            Some(k) => (&s[..k], &s[k..]),
            None => ("", s.as_str()),
        };
        let (re_part, im_part) = if a.contains('i') { (b, a) } else { (a, b) };
        if re_part.contains('i') || !im_part.contains('i') {
            return Err(Error::Invalid(format!("cannot read '{s}' as a complex number")));
        }
        let re = if re_part.is_empty() { Rational::new() } else { parse_rational(re_part)? };
        Ok(CParam { re, im: parse_imag(im_part)? })
    }
}
