//! Exact integer polynomials in `y` and in `(x, y)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A dense polynomial in `y`; the coefficient vector never ends in zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct YPoly {
    coeffs: Vec<BigInt>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * y^e`.
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn y() -> Self {
        Self::monomial(1, 1)
    }

    /// Coefficients in ascending powers of `y`; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lowest_exponent(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `p(-y)`; tables list `U_n(-y)`, which has non-negative coefficients.
    pub fn negate_y(&self) -> Self {
        YPoly {
            coeffs: self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect(),
        }
    }

    /// `y^k * p`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        YPoly { coeffs }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return YPoly::zero();
        }
        YPoly { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn eval(&self, y: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * y + c)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    fn add_scaled(&mut self, other: &YPoly, sign: bool) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if sign {
                *a += b;
            } else {
                *a -= b;
            }
        }
        *self = YPoly::from_coeffs(std::mem::take(&mut self.coeffs));
    }
}

impl AddAssign<&YPoly> for YPoly {
    fn add_assign(&mut self, rhs: &YPoly) {
        self.add_scaled(rhs, true);
    }
}

impl SubAssign<&YPoly> for YPoly {
    fn sub_assign(&mut self, rhs: &YPoly) {
        self.add_scaled(rhs, false);
    }
}

impl Add<&YPoly> for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&YPoly> for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&YPoly> for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        YPoly::from_coeffs(coeffs)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

owned_ops!(YPoly);
owned_ops!(XYPoly);

/// Writes `c x^i y^j` terms in ascending order: `y + 9y^2 - x^2y`.
fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, usize, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (i, j, c) in terms {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        let bare = i == 0 && j == 0;
        if !mag.is_one() || bare {
            write!(f, "{mag}")?;
        }
        for (var, e) in [("x", i), ("y", j)] {
            match e {
                0 => {}
                1 => f.write_str(var)?,
                _ => write!(f, "{var}^{e}")?,
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms().map(|(j, c)| (0, j, c)))
    }
}

impl FromStr for YPoly {
    type Err = Error;

    /// Parses the output of `Display`, e.g. `y + 9y^2 - 3y^4` or `0`.
    fn from_str(s: &str) -> Result<Self> {
        let xy: XYPoly = s.parse()?;
        YPoly::try_from(&xy)
    }
}

/// A sparse polynomial in `x` and `y`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XYPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl XYPoly {
    pub fn zero() -> Self {
        XYPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c * x^i * y^j`.
    pub fn monomial(c: impl Into<BigInt>, i: usize, j: usize) -> Self {
        let mut p = XYPoly::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// `((x exponent, y exponent), coefficient)` in ascending `(x, y)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.0).max()
    }

    /// Substitutes an integer for `x`.
    pub fn eval_x(&self, x: &BigInt) -> YPoly {
        let mut out: Vec<BigInt> = Vec::new();
        for (&(i, j), c) in &self.terms {
            if out.len() <= j {
                out.resize(j + 1, BigInt::zero());
            }
            out[j] += c * num_traits::pow(x.clone(), i);
        }
        YPoly::from_coeffs(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return XYPoly::zero();
        }
        XYPoly { terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    /// The coefficient polynomial of `y^j`, as a vector indexed by `x` exponent.
    pub fn y_slice(&self, j: usize) -> Vec<BigInt> {
        let mut out = Vec::new();
        for (&(i, jj), c) in &self.terms {
            if jj == j {
                if out.len() <= i {
                    out.resize(i + 1, BigInt::zero());
                }
                out[i] = c.clone();
            }
        }
        out
    }
}

impl From<&YPoly> for XYPoly {
    fn from(p: &YPoly) -> Self {
        let mut out = XYPoly::zero();
        for (j, c) in p.terms() {
            out.add_term(0, j, c.clone());
        }
        out
    }
}

impl TryFrom<&XYPoly> for YPoly {
    type Error = Error;
    fn try_from(p: &XYPoly) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (&(i, j), c) in p.terms() {
            if i != 0 {
                return Err(Error::InvalidInput("polynomial depends on x".into()));
            }
            if coeffs.len() <= j {
                coeffs.resize(j + 1, BigInt::zero());
            }
            coeffs[j] = c.clone();
        }
        Ok(YPoly::from_coeffs(coeffs))
    }
}

impl AddAssign<&XYPoly> for XYPoly {
    fn add_assign(&mut self, rhs: &XYPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl SubAssign<&XYPoly> for XYPoly {
    fn sub_assign(&mut self, rhs: &XYPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, -c);
        }
    }
}

impl Add<&XYPoly> for &XYPoly {
    type Output = XYPoly;
    fn add(self, rhs: &XYPoly) -> XYPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&XYPoly> for &XYPoly {
    type Output = XYPoly;
    fn sub(self, rhs: &XYPoly) -> XYPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&XYPoly> for &XYPoly {
    type Output = XYPoly;
    fn mul(self, rhs: &XYPoly) -> XYPoly {
        let mut out = XYPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

impl Neg for &XYPoly {
    type Output = XYPoly;
    fn neg(self) -> XYPoly {
        XYPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl fmt::Display for XYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(&(i, j), c)| (i, j, c)))
    }
}

impl FromStr for XYPoly {
    type Err = Error;

    /// Parses sums of terms like `3x^2y`, `-y^4`, `x y` or `7`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = XYPoly::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            rest = tail;
            let digits = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let mut c =
                if digits == 0 { BigInt::one() } else { term[..digits].parse::<BigInt>().map_err(|_| bad())? };
            if digits == 0 && term.is_empty() {
                return Err(bad());
            }
            if neg {
                c = -c;
            }
            let (mut i, mut j) = (0usize, 0usize);
            let mut vars = &term[digits..];
            while let Some(v) = vars.chars().next() {
                vars = &vars[1..];
                let mut e = 1usize;
                if let Some(after) = vars.strip_prefix('^') {
                    let len = after.find(|c: char| !c.is_ascii_digit()).unwrap_or(after.len());
                    e = after[..len].parse().map_err(|_| bad())?;
                    vars = &after[len..];
                }
                match v {
                    'x' => i += e,
                    'y' => j += e,
                    _ => return Err(bad()),
                }
            }
            out.add_term(i, j, c);
        }
        Ok(out)
    }
}

/// JSON term as `{"x": i, "y": j, "c": "<decimal>"}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonTerm {
    pub x: usize,
    pub y: usize,
    pub c: String,
}

/// JSON form shared by both polynomial types; terms sorted by `(x, y)`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonPoly {
    pub terms: Vec<JsonTerm>,
}

impl From<&XYPoly> for JsonPoly {
    fn from(p: &XYPoly) -> Self {
        JsonPoly { terms: p.terms().map(|(&(x, y), c)| JsonTerm { x, y, c: c.to_string() }).collect() }
    }
}

impl TryFrom<&JsonPoly> for XYPoly {
    type Error = Error;
    fn try_from(j: &JsonPoly) -> Result<Self> {
        let mut out = XYPoly::zero();
        for t in &j.terms {
            let c: BigInt = t.c.parse().map_err(|_| Error::InvalidInput(format!("bad coefficient {:?}", t.c)))?;
            out.add_term(t.x, t.y, c);
        }
        Ok(out)
    }
}

impl Serialize for XYPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for XYPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = JsonPoly::deserialize(d)?;
        XYPoly::try_from(&j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for YPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        XYPoly::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for YPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let xy = XYPoly::deserialize(d)?;
        YPoly::try_from(&xy).map_err(serde::de::Error::custom)
    }
}
