//! Truncated exponential generating functions.
//!
//! Coefficient `c_n` is stored as `n! [t^n]`, so products and reciprocals are
//! binomial convolutions over integer polynomials and never divide.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinat::BinomialTable;
use crate::error::{Error, Result};
use crate::poly::{XYPoly, YPoly};

/// Polynomial types usable as EGF coefficients.
pub trait Coefficient: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_constant(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add_assign_scaled(&mut self, a: &Self, b: &Self, k: &BigInt);
}

impl Coefficient for YPoly {
    fn zero() -> Self {
        YPoly::zero()
    }
    fn one() -> Self {
        YPoly::one()
    }
    fn is_zero(&self) -> bool {
        YPoly::is_zero(self)
    }
    fn is_constant(&self) -> bool {
        YPoly::is_constant(self)
    }
    fn add_assign_scaled(&mut self, a: &Self, b: &Self, k: &BigInt) {
        *self += &(a * b).scale(k);
    }
}

impl Coefficient for XYPoly {
    fn zero() -> Self {
        XYPoly::zero()
    }
    fn one() -> Self {
        XYPoly::one()
    }
    fn is_zero(&self) -> bool {
        XYPoly::is_zero(self)
    }
    fn is_constant(&self) -> bool {
        XYPoly::is_constant(self)
    }
    fn add_assign_scaled(&mut self, a: &Self, b: &Self, k: &BigInt) {
        *self += &(a * b).scale(k);
    }
}

/// `(c_0, ..., c_N)` with `c_n = n! [t^n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> EgfSeries<C> {
    pub fn new(coeffs: Vec<C>) -> Result<Self> {
        match coeffs.first() {
            None => Err(Error::InvalidInput("a series needs at least c_0".into())),
            Some(c0) if !c0.is_constant() => Err(Error::InvalidInput("c_0 must be a constant".into())),
            Some(_) => Ok(EgfSeries { coeffs }),
        }
    }

    /// The multiplicative identity `1`.
    pub fn identity(order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = C::one();
        EgfSeries { coeffs }
    }

    /// `e^t`: every coefficient is 1.
    pub fn exp(order: usize) -> Self {
        EgfSeries { coeffs: vec![C::one(); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    fn require_order(&self, n: usize) -> Result<()> {
        if self.order() < n {
            return Err(Error::InvalidInput(format!("series has order {} < {n}", self.order())));
        }
        Ok(())
    }

    fn require_unit(&self) -> Result<()> {
        if !self.coeffs[0].is_one() {
            return Err(Error::InvalidInput("constant term must be 1".into()));
        }
        Ok(())
    }
}

/// `c_n = sum_k C(n,k) a_k b_{n-k}` for `n <= order`.
pub fn egf_product<C: Coefficient>(a: &EgfSeries<C>, b: &EgfSeries<C>, order: usize) -> Result<EgfSeries<C>> {
    a.require_order(order)?;
    b.require_order(order)?;
    let binom = BinomialTable::new(order);
    let coeffs = (0..=order)
        .into_par_iter()
        .map(|n| {
            let mut c = C::zero();
            for k in 0..=n {
                if !a.coeffs[k].is_zero() && !b.coeffs[n - k].is_zero() {
                    c.add_assign_scaled(&a.coeffs[k], &b.coeffs[n - k], binom.get(n, k));
                }
            }
            c
        })
        .collect();
    Ok(EgfSeries { coeffs })
}

/// `1 / A` for `a_0 = 1`: `b_0 = 1`, `b_n = -sum_{k>=1} C(n,k) a_k b_{n-k}`.
pub fn egf_reciprocal<C: Coefficient>(a: &EgfSeries<C>, order: usize) -> Result<EgfSeries<C>> {
    a.require_order(order)?;
    a.require_unit()?;
    let binom = BinomialTable::new(order);
    let mut coeffs: Vec<C> = vec![C::one()];
    for n in 1..=order {
        let mut acc = C::zero();
        for k in 1..=n {
            if !a.coeffs[k].is_zero() && !coeffs[n - k].is_zero() {
                acc.add_assign_scaled(&a.coeffs[k], &coeffs[n - k], &-binom.get(n, k));
            }
        }
        coeffs.push(acc);
    }
    Ok(EgfSeries { coeffs })
}

/// `A^m` truncated to `order`.
pub fn egf_integer_power<C: Coefficient>(a: &EgfSeries<C>, m: u32, order: usize) -> Result<EgfSeries<C>> {
    a.require_order(order)?;
    let mut result = EgfSeries::identity(order);
    let mut base = EgfSeries { coeffs: a.coeffs[..=order].to_vec() };
    let mut m = m;
    while m > 0 {
        if m & 1 == 1 {
            result = egf_product(&result, &base, order)?;
        }
        m >>= 1;
        if m > 0 {
            base = egf_product(&base, &base, order)?;
        }
    }
    Ok(result)
}

/// `A^x` as a series with coefficients in `Z[x, y]`.
///
/// `c_n` has x-degree at most `n`, so the powers `A^1, ..., A^(order+1)`
/// determine it; each y-coefficient is recovered by exact interpolation.
pub fn egf_formal_x_power(a: &EgfSeries<YPoly>, order: usize) -> Result<EgfSeries<XYPoly>> {
    a.require_order(order)?;
    a.require_unit()?;
    let nodes = order + 1;
    let mut powers: Vec<EgfSeries<YPoly>> = Vec::with_capacity(nodes);
    powers.push(EgfSeries { coeffs: a.coeffs[..=order].to_vec() });
    for m in 1..nodes {
        let next = egf_product(&powers[m - 1], &powers[0], order)?;
        powers.push(next);
    }
    let coeffs = (0..=order)
        .into_par_iter()
        .map(|n| {
            let mut out = XYPoly::zero();
            let Some(ydeg) = powers.iter().filter_map(|p| p.coeffs[n].degree()).max() else {
                return Ok(out);
            };
            for j in 0..=ydeg {
                let values: Vec<BigInt> = powers.iter().map(|p| p.coeffs[n].coeff(j)).collect();
                let xs = interpolate_at_1_to_m(&values)?;
                for (i, c) in xs.into_iter().enumerate() {
                    if i > n && !c.is_zero() {
                        return Err(Error::Arithmetic(format!("x-degree exceeds {n} in coefficient {n}")));
                    }
                    out.add_term(i, j, c);
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EgfSeries { coeffs })
}

/// Monomial coefficients of the polynomial `q` of degree `< values.len()`
/// with `q(m) = values[m - 1]`; errors unless they are all integers.
fn interpolate_at_1_to_m(values: &[BigInt]) -> Result<Vec<BigInt>> {
    let k = values.len();
    // Newton divided differences on nodes 1..=k.
    let mut dd: Vec<BigRational> = values.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    for level in 1..k {
        for i in (level..k).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // Horner expansion of sum dd[i] * prod_{m<i} (x - (m+1)).
    let mut poly: Vec<BigRational> = vec![BigRational::zero(); k];
    for i in (0..k).rev() {
        let node = BigRational::from_integer(BigInt::from(i + 1));
        let mut next = vec![BigRational::zero(); k];
        for d in 0..k {
            if poly[d].is_zero() {
                continue;
            }
            if d + 1 < k {
                next[d + 1] += &poly[d];
            }
            next[d] -= &poly[d] * &node;
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly.into_iter()
        .map(|c| {
            if c.denom().is_one() {
                Ok(c.numer().clone())
            } else {
                let (q, _) = c.numer().div_rem(c.denom());
                Err(Error::Arithmetic(format!("non-integral interpolant near {q}")))
            }
        })
        .collect()
}
