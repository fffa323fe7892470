use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::BigComplex;
use crate::series::{int, parse_rational, QMonomial, Rational};

/// What a parameter slot accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SlotKind {
    /// A small integer such as a depth or modulus.
    Int,
    /// `r*q^m`, a complex constant `x+yi`, or the formal variable `z`.
    Value,
    /// An angle written as a rational multiple of pi.
    Angle,
    /// A finitely supported sequence `{n: value, ...}`.
    Seq,
    /// A list of values `[v1, v2, ...]`, one per level.
    List,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Slot {
    pub name: &'static str,
    pub kind: SlotKind,
    pub doc: &'static str,
}

pub const fn slot(name: &'static str, kind: SlotKind, doc: &'static str) -> Slot {
    Slot { name, kind, doc }
}

/// A bound parameter value. Numeric values are kept as exact rationals
/// (or rational multiples of pi) so instances are reproducible at any
/// precision.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamValue {
    Int(i64),
    Mono(QMonomial),
    Complex(Rational, Rational),
    AnglePi(Rational),
    Seq(Vec<(i64, Rational)>),
    List(Vec<QMonomial>),
    Formal,
}

pub type Params = BTreeMap<String, ParamValue>;

fn fmt_rat(r: &Rational) -> String {
    r.to_string()
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Mono(m) => write!(f, "{m}"),
            ParamValue::Complex(re, im) => {
                if im.is_zero() {
                    write!(f, "{}", fmt_rat(re))
                } else if re.is_zero() {
                    write!(f, "{}i", fmt_rat(im))
                } else if im.is_negative() {
                    write!(f, "{}-{}i", fmt_rat(re), fmt_rat(&-im))
                } else {
                    write!(f, "{}+{}i", fmt_rat(re), fmt_rat(im))
                }
            }
            ParamValue::AnglePi(r) => {
                if r.is_zero() {
                    return write!(f, "0");
                }
                match r.numer().to_string().as_str() {
                    "1" => write!(f, "pi")?,
                    "-1" => write!(f, "-pi")?,
                    n => write!(f, "{n}pi")?,
                }
                if !r.denom().is_one() {
                    write!(f, "/{}", r.denom())?;
                }
                Ok(())
            }
            ParamValue::Seq(s) => {
                write!(f, "{{")?;
                for (i, (n, v)) in s.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{n}: {v}")?;
                }
                write!(f, "}}")
            }
            ParamValue::List(v) => {
                write!(f, "[")?;
                for (i, m) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, "]")
            }
            ParamValue::Formal => write!(f, "z"),
        }
    }
}

/// Rational from `"3"`, `"-2/5"` or a terminating decimal `"1.75"`.
pub fn parse_number(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((whole, frac)) = s.split_once('.') {
        if s.contains('/') || frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let neg = whole.starts_with('-');
        let w = whole.trim_start_matches(['-', '+']);
        let digits = format!("{}{}", if w.is_empty() { "0" } else { w }, frac);
        let n: num_bigint::BigInt = digits.parse().ok()?;
        let d = num_traits::pow(num_bigint::BigInt::from(10), frac.len());
        let r = Rational::new(n, d);
        return Some(if neg { -r } else { r });
    }
    parse_rational(s.trim_start_matches('+'))
}

/// Parses `2`, `-1/3`, `q`, `-q^2`, `2q^3`, `2*q^3`, `q/3`, `1/2*q`.
pub fn parse_monomial(s: &str) -> Option<QMonomial> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(qpos) = s.find('q') else {
        return parse_number(&s).map(QMonomial::constant);
    };
    let head = s[..qpos].trim_end_matches('*');
    let tail = &s[qpos + 1..];
    let mut coeff = match head {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        h => parse_number(h)?,
    };
    let (pow_part, div_part) = match tail.split_once('/') {
        Some((p, d)) => (p, Some(d)),
        None => (tail, None),
    };
    let power = match pow_part.strip_prefix('^') {
        Some(e) => e.parse::<i64>().ok()?,
        None if pow_part.is_empty() => 1,
        None => return None,
    };
    if let Some(d) = div_part {
        let d = parse_number(d)?;
        if d.is_zero() {
            return None;
        }
        coeff /= d;
    }
    Some(QMonomial::new(coeff, power))
}

fn parse_complex(s: &str) -> Option<(Rational, Rational)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = s.strip_suffix('i') else {
        return parse_number(&s).map(|r| (r, Rational::zero()));
    };
    // Split at the last sign that is not the leading one.
    let split = body
        .char_indices()
        .skip(1)
        .filter(|(_, c)| *c == '+' || *c == '-')
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (parse_number(&body[..i])?, &body[i..]),
        None => (Rational::zero(), body),
    };
    let im = match im {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        x => parse_number(x)?,
    };
    Some((re, im))
}

fn parse_angle(s: &str) -> Option<Rational> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(p) = s.find("pi") else {
        return if s == "0" { Some(Rational::zero()) } else { None };
    };
    let head = s[..p].trim_end_matches('*');
    let tail = &s[p + 2..];
    let mut r = match head {
        "" => Rational::one(),
        "-" => -Rational::one(),
        h => parse_number(h)?,
    };
    if let Some(d) = tail.strip_prefix('/') {
        r /= parse_number(d).filter(|d| !d.is_zero())?;
    } else if !tail.is_empty() {
        return None;
    }
    Some(r)
}

fn parse_seq(s: &str) -> Option<Vec<(i64, Rational)>> {
    let body = s.trim().strip_prefix('{')?.strip_suffix('}')?;
    let mut out = Vec::new();
    for item in body.split(',').filter(|x| !x.trim().is_empty()) {
        let (n, v) = item.split_once(':')?;
        out.push((n.trim().parse().ok()?, parse_number(v)?));
    }
    out.sort_by_key(|(n, _)| *n);
    Some(out)
}

fn parse_list(s: &str) -> Option<Vec<QMonomial>> {
    let body = s.trim().strip_prefix('[')?.strip_suffix(']')?;
    body.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(parse_monomial)
        .collect()
}

impl ParamValue {
    pub fn parse(kind: SlotKind, s: &str) -> Result<ParamValue> {
        let bad = || Error::InvalidParam(format!("cannot parse '{s}' as {kind:?}"));
        match kind {
            SlotKind::Int => s.trim().parse().map(ParamValue::Int).map_err(|_| bad()),
            SlotKind::Value => {
                if s.trim() == "z" {
                    Ok(ParamValue::Formal)
                } else if let Some(m) = parse_monomial(s) {
                    Ok(ParamValue::Mono(m))
                } else {
                    parse_complex(s).map(|(re, im)| ParamValue::Complex(re, im)).ok_or_else(bad)
                }
            }
            SlotKind::Angle => parse_angle(s).map(ParamValue::AnglePi).ok_or_else(bad),
            SlotKind::Seq => parse_seq(s).map(ParamValue::Seq).ok_or_else(bad),
            SlotKind::List => parse_list(s).map(ParamValue::List).ok_or_else(bad),
        }
    }
}

/// Typed access to a parameter map.
pub trait ParamsExt {
    fn int(&self, name: &str) -> Result<i64>;
    fn mono(&self, name: &str) -> Result<QMonomial>;
    fn list(&self, name: &str) -> Result<Vec<QMonomial>>;
    fn seq(&self, name: &str) -> Result<Vec<(i64, Rational)>>;
    fn angle(&self, name: &str) -> Result<Rational>;
    fn is_formal(&self, name: &str) -> bool;
    fn complex(&self, name: &str, q: &BigComplex, digits: u32) -> Result<BigComplex>;
    fn complex_list(&self, name: &str, q: &BigComplex, digits: u32) -> Result<Vec<BigComplex>>;
}

fn missing(name: &str) -> Error {
    Error::InvalidParam(format!("missing parameter '{name}'"))
}

fn wrong(name: &str, want: &str) -> Error {
    Error::InvalidParam(format!("parameter '{name}' must be {want}"))
}

/// `r * q^m` at a numeric `q`.
pub fn mono_value(m: &QMonomial, q: &BigComplex, digits: u32) -> BigComplex {
    let r = BigComplex::from_rational(&m.coeff, digits);
    if m.power == 0 {
        r
    } else {
        r.mul(&q.powi(m.power))
    }
}

impl ParamsExt for Params {
    fn int(&self, name: &str) -> Result<i64> {
        match self.get(name).ok_or_else(|| missing(name))? {
            ParamValue::Int(n) => Ok(*n),
            _ => Err(wrong(name, "an integer")),
        }
    }

    fn mono(&self, name: &str) -> Result<QMonomial> {
        match self.get(name).ok_or_else(|| missing(name))? {
            ParamValue::Mono(m) => Ok(m.clone()),
            ParamValue::Int(n) => Ok(QMonomial::constant(int(*n))),
            ParamValue::Complex(re, im) if im.is_zero() => Ok(QMonomial::constant(re.clone())),
            _ => Err(wrong(name, "an exact monomial r*q^m")),
        }
    }

    fn list(&self, name: &str) -> Result<Vec<QMonomial>> {
        match self.get(name).ok_or_else(|| missing(name))? {
            ParamValue::List(v) => Ok(v.clone()),
            _ => Err(wrong(name, "a list")),
        }
    }

    fn seq(&self, name: &str) -> Result<Vec<(i64, Rational)>> {
        match self.get(name).ok_or_else(|| missing(name))? {
            ParamValue::Seq(v) => Ok(v.clone()),
            _ => Err(wrong(name, "a finitely supported sequence")),
        }
    }

    fn angle(&self, name: &str) -> Result<Rational> {
        match self.get(name).ok_or_else(|| missing(name))? {
            ParamValue::AnglePi(r) => Ok(r.clone()),
            _ => Err(wrong(name, "an angle")),
        }
    }

    fn is_formal(&self, name: &str) -> bool {
        matches!(self.get(name), Some(ParamValue::Formal))
    }

    fn complex(&self, name: &str, q: &BigComplex, digits: u32) -> Result<BigComplex> {
        match self.get(name).ok_or_else(|| missing(name))? {
            ParamValue::Int(n) => Ok(BigComplex::from_i64(*n, digits)),
            ParamValue::Mono(m) => Ok(mono_value(m, q, digits)),
            ParamValue::Complex(re, im) => Ok(BigComplex::from_rationals(re, im, digits)),
            _ => Err(wrong(name, "a number")),
        }
    }

    fn complex_list(&self, name: &str, q: &BigComplex, digits: u32) -> Result<Vec<BigComplex>> {
        Ok(self.list(name)?.iter().map(|m| mono_value(m, q, digits)).collect())
    }
}

/// Builds a parameter map from `(name, text)` pairs using the slot kinds;
/// used for the fixed catalog instances.
pub fn params_from(slots: &[Slot], pairs: &[(&str, &str)]) -> Params {
    let mut p = Params::new();
    for (name, text) in pairs {
        let kind = slots
            .iter()
            .find(|s| s.name == *name)
            .unwrap_or_else(|| panic!("no slot '{name}'"))
            .kind;
        let v = ParamValue::parse(kind, text).unwrap_or_else(|e| panic!("{e}"));
        p.insert(name.to_string(), v);
    }
    p
}
