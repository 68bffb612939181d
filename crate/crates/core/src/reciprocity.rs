//! Brick tabloid counts, the composition-sum formula for `U_{Γ,n}`, the
//! recursions for each supported pattern family, and the closed forms.
//!
//! All `U` values are returned in plain `y`; tables list `U_n(-y)`, which is
//! [`YPoly::negate_y`] of these.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::brute_force::nm_polynomial_y;
use crate::combinat::{binomial, catalan, double_falling_factorial, multinomial};
use crate::error::{Error, Result};
use crate::perm::{PatternSet, Permutation};
use crate::poly::YPoly;

/// A partition with weakly increasing parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts`; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("partition parts must be positive".into()));
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs in increasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    /// Exponent notation, e.g. `(1^2,2^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (p, m)) in self.multiplicities().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
        }
        f.write_str(")")
    }
}

/// All partitions of `n`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in min..=rest {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n`, ordered by the bitmask of cut positions.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut len = 1;
            for cell in 0..n - 1 {
                if mask >> cell & 1 == 1 {
                    parts.push(len);
                    len = 1;
                } else {
                    len += 1;
                }
            }
            parts.push(len);
            parts
        })
        .collect()
}

/// Number of orderings of the parts of `lambda`, i.e. `B_{λ,n}`.
pub fn brick_tabloid_count(lambda: &Partition, n: usize) -> Result<BigInt> {
    if lambda.n() != n {
        return Err(Error::InvalidInput(format!("partition {lambda} does not have size {n}")));
    }
    let mults: Vec<usize> = lambda.multiplicities().into_iter().map(|(_, m)| m).collect();
    Ok(multinomial(&mults))
}

/// `sum over compositions b of n of (-1)^len(b) * multinomial(n; b) * prod NM_{b_i}(1, y)`.
pub fn theta_h_direct(gamma: &PatternSet, n: usize) -> Result<YPoly> {
    let nm: Vec<YPoly> = (0..=n).map(|b| nm_polynomial_y(b, gamma)).collect::<Result<_>>()?;
    let mut total = YPoly::zero();
    for comp in compositions(n) {
        let mut term = YPoly::constant(multinomial(&comp));
        for &b in &comp {
            term = &term * &nm[b];
        }
        if comp.len() % 2 == 1 {
            total -= &term;
        } else {
            total += &term;
        }
    }
    Ok(total)
}

/// The pattern families with a known recursion for `U_{Γ,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    /// `{1324, 123}`.
    Pair1324And123,
    /// `{1 3 2 4 5 ... p, 1 2 ... (p-1)}` for `p >= 5`.
    Patterns1324p { p: usize },
    /// Permutations of `S_{k1+k2}` starting with 1 whose first `k1` and last
    /// `k2` entries increase and whose entry `k1 + 1` is 2.
    GammaK1K2 { k1: usize, k2: usize },
    /// `Γ_{k1,k1}` together with the identity of length `s + 1`, `s >= k1`.
    GammaK1K1S { k1: usize, s: usize },
    Tau1432,
    Tau142536,
    Tau162534,
    /// `{14253, 15243}`.
    Set14253And15243,
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| Err(Error::InvalidParameters { family: self.to_string(), reason: reason.into() });
        match *self {
            FamilySpec::Patterns1324p { p } if p < 5 => bad("p must be at least 5"),
            FamilySpec::Patterns1324p { p } if p > crate::perm::MAX_PATTERN_LEN => bad("p is too large"),
            FamilySpec::GammaK1K2 { k1, k2 } if k1 < 2 || k2 < 2 => bad("k1 and k2 must be at least 2"),
            FamilySpec::GammaK1K2 { k1, k2 } if k1 + k2 > crate::perm::MAX_PATTERN_LEN => bad("k1 + k2 is too large"),
            FamilySpec::GammaK1K1S { k1, s } if k1 < 2 || s < k1 => bad("need s >= k1 >= 2"),
            FamilySpec::GammaK1K1S { k1, s } if 2 * k1 > crate::perm::MAX_PATTERN_LEN || s + 1 > crate::perm::MAX_PATTERN_LEN => {
                bad("parameters are too large")
            }
            _ => Ok(()),
        }
    }

    /// The raw pattern list, before normalization.
    pub fn patterns(&self) -> Result<Vec<Permutation>> {
        self.validate()?;
        let p = |v: &[u32]| Permutation::from_vec_unchecked(v.to_vec());
        Ok(match *self {
            FamilySpec::Pair1324And123 => vec![p(&[1, 3, 2, 4]), p(&[1, 2, 3])],
            FamilySpec::Patterns1324p { p: len } => {
                let mut long = vec![1, 3, 2];
                long.extend(4..=len as u32);
                vec![Permutation::from_vec_unchecked(long), Permutation::identity(len - 1)]
            }
            FamilySpec::GammaK1K2 { k1, k2 } => gamma_k1k2(k1, k2),
            FamilySpec::GammaK1K1S { k1, s } => {
                let mut v = gamma_k1k2(k1, k1);
                v.push(Permutation::identity(s + 1));
                v
            }
            FamilySpec::Tau1432 => vec![p(&[1, 4, 3, 2])],
            FamilySpec::Tau142536 => vec![p(&[1, 4, 2, 5, 3, 6])],
            FamilySpec::Tau162534 => vec![p(&[1, 6, 2, 5, 3, 4])],
            FamilySpec::Set14253And15243 => vec![p(&[1, 4, 2, 5, 3]), p(&[1, 5, 2, 4, 3])],
        })
    }

    pub fn pattern_set(&self) -> Result<PatternSet> {
        PatternSet::normalize(self.patterns()?)
    }

    /// Builds a family from its short id, e.g. `gamma-k1k2` with `k1`, `k2` set.
    pub fn from_id(id: &str, params: &FamilyParams) -> Result<Self> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::InvalidParameters { family: id.to_string(), reason: format!("--{name} is required") })
        };
        let spec = match id {
            "1324-123" => FamilySpec::Pair1324And123,
            "1324-p" => FamilySpec::Patterns1324p { p: need(params.p, "p")? },
            "gamma-k1k2" => FamilySpec::GammaK1K2 { k1: need(params.k1, "k1")?, k2: need(params.k2, "k2")? },
            "gamma-k1k1s" => FamilySpec::GammaK1K1S { k1: need(params.k1, "k1")?, s: need(params.s, "s")? },
            "gamma-222" => FamilySpec::GammaK1K1S { k1: 2, s: 2 },
            "gamma-223" => FamilySpec::GammaK1K1S { k1: 2, s: 3 },
            "tau-1432" => FamilySpec::Tau1432,
            "tau-142536" => FamilySpec::Tau142536,
            "tau-162534" => FamilySpec::Tau162534,
            "set-14253-15243" => FamilySpec::Set14253And15243,
            _ => return Err(Error::UnsupportedFamily(id.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// The short id and parameters accepted by [`FamilySpec::from_id`].
    pub fn id(&self) -> (&'static str, FamilyParams) {
        let none = FamilyParams::default();
        match *self {
            FamilySpec::Pair1324And123 => ("1324-123", none),
            FamilySpec::Patterns1324p { p } => ("1324-p", FamilyParams { p: Some(p), ..none }),
            FamilySpec::GammaK1K2 { k1, k2 } => ("gamma-k1k2", FamilyParams { k1: Some(k1), k2: Some(k2), ..none }),
            FamilySpec::GammaK1K1S { k1, s } => ("gamma-k1k1s", FamilyParams { k1: Some(k1), s: Some(s), ..none }),
            FamilySpec::Tau1432 => ("tau-1432", none),
            FamilySpec::Tau142536 => ("tau-142536", none),
            FamilySpec::Tau162534 => ("tau-162534", none),
            FamilySpec::Set14253And15243 => ("set-14253-15243", none),
        }
    }
}

/// Numeric parameters for the parameterized family ids.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub k1: Option<usize>,
    pub k2: Option<usize>,
    pub p: Option<usize>,
    pub s: Option<usize>,
}

/// Every family id understood by [`FamilySpec::from_id`].
pub const FAMILY_IDS: &[&str] = &[
    "1324-123",
    "1324-p",
    "gamma-k1k2",
    "gamma-k1k1s",
    "gamma-222",
    "gamma-223",
    "tau-1432",
    "tau-142536",
    "tau-162534",
    "set-14253-15243",
];

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Pair1324And123 => write!(f, "{{1324,123}}"),
            FamilySpec::Patterns1324p { p } => write!(f, "{{1324..{p},12..{}}}", p - 1),
            FamilySpec::GammaK1K2 { k1, k2 } => write!(f, "Gamma_{{{k1},{k2}}}"),
            FamilySpec::GammaK1K1S { k1, s } => write!(f, "Gamma_{{{k1},{k1},{s}}}"),
            FamilySpec::Tau1432 => write!(f, "{{1432}}"),
            FamilySpec::Tau142536 => write!(f, "{{142536}}"),
            FamilySpec::Tau162534 => write!(f, "{{162534}}"),
            FamilySpec::Set14253And15243 => write!(f, "{{14253,15243}}"),
        }
    }
}

fn gamma_k1k2(k1: usize, k2: usize) -> Vec<Permutation> {
    // Choose which of 3..=p follow the leading 1; the rest follow the 2.
    let p = (k1 + k2) as u32;
    let mut out = Vec::new();
    let pool: Vec<u32> = (3..=p).collect();
    let mut choose = vec![false; pool.len()];
    fn go(i: usize, left: usize, choose: &mut Vec<bool>, pool: &[u32], out: &mut Vec<Permutation>) {
        if i == pool.len() {
            if left == 0 {
                let mut v = vec![1];
                v.extend(pool.iter().zip(choose.iter()).filter(|(_, &c)| c).map(|(&x, _)| x));
                v.push(2);
                v.extend(pool.iter().zip(choose.iter()).filter(|(_, &c)| !c).map(|(&x, _)| x));
                out.push(Permutation::from_vec_unchecked(v));
            }
            return;
        }
        if left > 0 {
            choose[i] = true;
            go(i + 1, left - 1, choose, pool, out);
            choose[i] = false;
        }
        go(i + 1, left, choose, pool, out);
    }
    go(0, k1 - 1, &mut choose, &pool, &mut out);
    out
}

fn memo() -> &'static Mutex<HashMap<FamilySpec, Vec<YPoly>>> {
    static MEMO: OnceLock<Mutex<HashMap<FamilySpec, Vec<YPoly>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `(U_0, ..., U_n)` from the family's recursion, with `U_0 = 1`,
/// `U_1 = -y` and `U_m = 0` for `m < 0`.
pub fn recursion_sequence(spec: FamilySpec, n: usize) -> Result<Vec<YPoly>> {
    spec.validate()?;
    let mut guard = memo().lock().unwrap_or_else(|e| e.into_inner());
    let u = guard.entry(spec).or_insert_with(|| vec![YPoly::one(), -YPoly::y()]);
    while u.len() <= n {
        let next = recursion_step(spec, u.len(), u);
        u.push(next);
    }
    Ok(u[..=n].to_vec())
}

/// [`recursion_sequence`] without the process-wide cache.
pub fn recursion_sequence_uncached(spec: FamilySpec, n: usize) -> Result<Vec<YPoly>> {
    spec.validate()?;
    let mut u = vec![YPoly::one(), -YPoly::y()];
    while u.len() <= n {
        let next = recursion_step(spec, u.len(), &u);
        u.push(next);
    }
    u.truncate(n + 1);
    Ok(u)
}

/// `U_{Γ,n}(y)` from the family's recursion.
pub fn recursion_u(spec: FamilySpec, n: usize) -> Result<YPoly> {
    Ok(recursion_sequence(spec, n)?.pop().expect("sequence includes n"))
}

/// `(-y)^k`.
fn neg_y_pow(k: usize) -> YPoly {
    YPoly::monomial(if k % 2 == 0 { 1 } else { -1 }, k)
}

fn one_minus_y(p: &YPoly) -> YPoly {
    p - &p.shift(1)
}

fn recursion_step(spec: FamilySpec, n: usize, u: &[YPoly]) -> YPoly {
    let n_i = n as i64;
    let zero = YPoly::zero();
    let g = |m: i64| -> &YPoly {
        if m < 0 {
            &zero
        } else {
            &u[m as usize]
        }
    };
    let bin = |a: i64, b: i64| binomial(a, b);
    let mut r = YPoly::zero();
    match spec {
        FamilySpec::Pair1324And123 => {
            r -= &g(n_i - 1).shift(1);
            r -= &g(n_i - 2).shift(1);
            for k in 2..=n / 2 {
                r += &(&neg_y_pow(k) * g(n_i - 2 * k as i64)).scale(&catalan(k as u64 - 1));
            }
        }
        FamilySpec::Patterns1324p { p } => {
            let step = p as i64 - 2;
            for k in 1..=step {
                r -= &g(n_i - k).shift(1);
            }
            // Repeated-chain terms; the first factor has length at least 2.
            for k in 2..=step {
                let mut m = 2usize;
                while n_i - k - (m as i64 - 1) * step >= 0 {
                    r += &(&neg_y_pow(m) * g(n_i - k - (m as i64 - 1) * step));
                    m += 1;
                }
            }
        }
        FamilySpec::GammaK1K2 { k1, k2 } => {
            let (small, big) = (k1.min(k2) as i64, k1.max(k2) as i64);
            r = one_minus_y(g(n_i - 1));
            // The bracket counts fixed points of size n - big with a long
            // first brick, so it is empty when n <= big.
            if n_i > big {
                let mut inner = g(n_i - big).clone();
                for i in 1..small {
                    inner += &g(n_i - big - i).shift(1);
                }
                r -= &inner.shift(1).scale(&bin(n_i - 2, k1 as i64 - 1));
            }
        }
        FamilySpec::GammaK1K1S { k1, s } => {
            let k1 = k1 as i64;
            for j in 1..k1 {
                r -= &g(n_i - j).shift(1);
            }
            for p in 0..=(s as i64 - k1) {
                let b = bin(n_i - p - 2, k1 - 1);
                let mut t = g(n_i - p - k1).scale(&(BigInt::one() + &b));
                for a in 1..k1 {
                    t += &g(n_i - p - k1 - a).shift(1).scale(&b);
                }
                r -= &t.shift(1);
            }
        }
        FamilySpec::Tau1432 => {
            r = one_minus_y(g(n_i - 1));
            r -= &g(n_i - 3).shift(2).scale(&bin(n_i - 2, 2));
        }
        FamilySpec::Tau142536 => {
            r = one_minus_y(g(n_i - 1));
            for k in 1..=(n_i - 2) / 6 {
                r += &g(n_i - 6 * k - 1).shift(3 * k as usize).scale(&hankel_catalan_h(2 * k as usize));
            }
            for k in 1..=n_i / 6 {
                let inner = g(n_i - 6 * k + 2) + &g(n_i - 6 * k + 1).shift(1);
                r -= &inner.shift(3 * k as usize - 1).scale(&hankel_catalan_h(2 * k as usize - 1));
            }
        }
        FamilySpec::Tau162534 => {
            r = one_minus_y(g(n_i - 1));
            for k in 1..=n_i / 6 {
                r -= &g(n_i - 6 * k + 1).shift(3 * k as usize - 1).scale(&bin(n_i - 3 * k - 1, 3 * k - 1));
            }
            for k in 1..=(n_i - 2) / 6 {
                r += &g(n_i - 6 * k - 1).shift(3 * k as usize).scale(&bin(n_i - 3 * k - 2, 3 * k));
            }
        }
        FamilySpec::Set14253And15243 => {
            r = one_minus_y(g(n_i - 1));
            // Correction terms start once a length-5 pattern fits.
            if n_i >= 5 {
                let inner = g(n_i - 4) + &one_minus_y(g(n_i - 5)).scale(&BigInt::from(n_i - 5));
                r -= &inner.shift(2).scale(&BigInt::from(n_i - 3));
                r += &g(n_i - 6).shift(3).scale(&BigInt::from((n_i - 3) * (n_i - 5) * (n_i - 6)));
            }
        }
    }
    r
}

/// Determinant by fraction-free (Bareiss) elimination.
fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * if n == 0 { BigInt::one() } else { m[n - 1][n - 1].clone() }
}

/// The Catalan-Hankel determinant `H_i`.
///
/// With `k = ceil(i / 2)` the matrix is `k x k`, holding `C_{3(c-r)+2}` on and
/// above the diagonal and -1 just below it; for odd `i` the last column is
/// replaced by `C_{3(k-1-r)+1}`.
pub fn hankel_catalan_h(i: usize) -> BigInt {
    assert!(i >= 1, "H_i is defined for i >= 1");
    let k = i.div_ceil(2);
    let entry = |r: usize, c: usize| {
        if i % 2 == 1 && c == k - 1 {
            catalan(3 * (k - 1 - r) as u64 + 1)
        } else if c >= r {
            catalan(3 * (c - r) as u64 + 2)
        } else if c + 1 == r {
            BigInt::from(-1)
        } else {
            BigInt::zero()
        }
    };
    let m: Vec<Vec<BigInt>> = (0..k).map(|r| (0..k).map(|c| entry(r, c)).collect()).collect();
    determinant(m)
}

/// Families and parities with a closed formula for `U_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    Gamma222Even,
    Gamma222Odd,
    Pair1324And123Even,
    Pair1324And123Odd,
}

impl ClosedForm {
    /// The closed form for `family` matching the parity of `n`, if any.
    pub fn for_family(family: FamilySpec, n: usize) -> Option<ClosedForm> {
        let even = n % 2 == 0;
        match family {
            FamilySpec::GammaK1K1S { k1: 2, s: 2 } => Some(if even { Self::Gamma222Even } else { Self::Gamma222Odd }),
            FamilySpec::Pair1324And123 => Some(if even { Self::Pair1324And123Even } else { Self::Pair1324And123Odd }),
            _ => None,
        }
    }

    fn wants_even(self) -> bool {
        matches!(self, Self::Gamma222Even | Self::Pair1324And123Even)
    }
}

/// Exact division; a remainder means the formula was mistranscribed.
fn exact_div(a: BigInt, b: i64) -> Result<BigInt> {
    let (q, r) = a.div_rem(&BigInt::from(b));
    if !r.is_zero() {
        return Err(Error::Arithmetic(format!("{a} is not divisible by {b}")));
    }
    Ok(q)
}

/// `U_n(y)` from a closed formula.
pub fn closed_form_u(form: ClosedForm, n: usize) -> Result<YPoly> {
    if form.wants_even() != (n % 2 == 0) {
        return Err(Error::InvalidInput(format!("{form:?} does not apply to n = {n}")));
    }
    let h = (n / 2) as i64;
    let mut out = YPoly::zero();
    match form {
        // U_{2h}(-y) = sum_i (2h-1)!!_{h-i} y^{h+i}, U_{2h+1}(-y) = sum_i (2h)!!_{h-i} y^{h+1+i}
        ClosedForm::Gamma222Even | ClosedForm::Gamma222Odd => {
            let (base, offset) = if form == ClosedForm::Gamma222Even { (2 * h - 1, 0) } else { (2 * h, 1) };
            for i in 0..=h {
                let c = double_falling_factorial(base, (h - i) as u64);
                out += &YPoly::monomial(c, (h + i + offset) as usize);
            }
            Ok(out.negate_y())
        }
        ClosedForm::Pair1324And123Even => {
            for k in 0..=h {
                let c = exact_div(BigInt::from(2 * k + 1) * binomial(2 * h, h - k), h + k + 1)?;
                out += &neg_y_pow((h + k) as usize).scale(&c);
            }
            Ok(out)
        }
        ClosedForm::Pair1324And123Odd => {
            for k in 0..=h {
                let c = exact_div(BigInt::from(2 * (k + 1)) * binomial(2 * h + 1, h - k), h + k + 2)?;
                out += &neg_y_pow((h + k + 1) as usize).scale(&c);
            }
            Ok(out)
        }
    }
}

/// Lowest-power coefficient of `U_{Γ_{2,2,s},n}(-y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowestCoeff {
    pub exponent: usize,
    pub coeff: BigInt,
}

/// The lowest coefficient of `U_{Γ_{2,2,s},n}(-y)` from the product
/// formulas for `n ≡ 0` and `n ≡ -1 (mod s)`, plus the first-order
/// recursion for `n ≡ 1 (mod 3)` when `s = 3`.
///
/// `Ok(None)` marks a residue class no formula covers.
pub fn lowest_coeff(s: usize, n: usize) -> Result<Option<LowestCoeff>> {
    if s < 3 {
        return Err(Error::InvalidParameters { family: format!("Gamma_{{2,2,{s}}}"), reason: "s must be at least 3".into() });
    }
    let prod = |q: usize, f: &dyn Fn(usize) -> usize| (1..=q).fold(BigInt::one(), |acc, i| acc * f(i));
    let (q, r) = (n / s, n % s);
    if q >= 1 && r == 0 {
        let coeff = prod(q, &|i| (i - 1) * s + 1);
        return Ok(Some(LowestCoeff { exponent: q, coeff }));
    }
    if q >= 1 && r == s - 1 {
        let coeff = prod(q, &|i| (i + 1) * s + 1);
        return Ok(Some(LowestCoeff { exponent: q + 1, coeff }));
    }
    if s == 3 && q >= 1 && r == 1 {
        // A_1 = 5, A_k = (3k - 1) A_{k-1} + 3k prod_{i<k} (3i + 4)
        let mut a = BigInt::from(5);
        for k in 2..=q {
            a = a * (3 * k - 1) + prod(k - 1, &|i| 3 * i + 4) * (3 * k);
        }
        return Ok(Some(LowestCoeff { exponent: q + 1, coeff: a }));
    }
    Ok(None)
}
