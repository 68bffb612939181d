//! Ground-truth enumeration of permutations with no consecutive pattern match.
//!
//! Two independent oracles live here: depth-first enumeration of `S_n` with
//! pruning, and a transfer-matrix count over standardized prefixes that keeps
//! only the relative ranks of the last `max_len - 1` entries.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::egf::{egf_reciprocal, EgfSeries};
use crate::error::{Error, Result};
use crate::perm::{PatternSet, Permutation};
use crate::poly::{XYPoly, YPoly};

/// Largest `n` enumerated without an explicit override.
pub const ENUMERATION_CAP: usize = 13;

/// Hard limit imposed by the bitmask representation.
const HARD_LIMIT: usize = 63;

fn check_cap(n: usize, allow_above_cap: bool) -> Result<()> {
    if n > HARD_LIMIT || (n > ENUMERATION_CAP && !allow_above_cap) {
        let cap = if allow_above_cap { HARD_LIMIT } else { ENUMERATION_CAP };
        return Err(Error::EnumerationCap { n, cap });
    }
    Ok(())
}

/// Lexicographic stream of the permutations of `S_n` with no match.
pub struct NmIter<'a> {
    gamma: &'a PatternSet,
    n: u32,
    seq: Vec<u32>,
    used: u64,
    next: Vec<u32>,
    done: bool,
}

impl Iterator for NmIter<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Permutation::identity(0));
        }
        loop {
            let depth = self.seq.len();
            if depth == self.n as usize {
                let out = Permutation::from_vec_unchecked(self.seq.clone());
                self.pop();
                return Some(out);
            }
            let mut v = self.next[depth];
            let mut placed = false;
            while v <= self.n {
                if self.used & (1 << v) == 0 {
                    self.seq.push(v);
                    if !self.gamma.has_match_ending_at_last(&self.seq) {
                        self.used |= 1 << v;
                        self.next[depth] = v + 1;
                        self.next[depth + 1] = 1;
                        placed = true;
                        break;
                    }
                    self.seq.pop();
                }
                v += 1;
            }
            if !placed {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.pop();
            }
        }
    }
}

impl NmIter<'_> {
    fn pop(&mut self) {
        if let Some(u) = self.seq.pop() {
            self.used &= !(1 << u);
        }
    }
}

/// Streams `NM_n(gamma)` in lexicographic order; errors above [`ENUMERATION_CAP`].
pub fn enumerate_nm(n: usize, gamma: &PatternSet) -> Result<NmIter<'_>> {
    enumerate_nm_with(n, gamma, false)
}

pub fn enumerate_nm_with(n: usize, gamma: &PatternSet, allow_above_cap: bool) -> Result<NmIter<'_>> {
    check_cap(n, allow_above_cap)?;
    Ok(NmIter { gamma, n: n as u32, seq: Vec::with_capacity(n), used: 0, next: vec![1; n + 1], done: false })
}

/// Counts indexed by `[lrmin][des]`.
type Tally = Vec<Vec<u64>>;

struct Dfs<'a> {
    gamma: &'a PatternSet,
    n: u32,
    seq: Vec<u32>,
    tally: Tally,
}

impl Dfs<'_> {
    fn go(&mut self, used: u64, min: u32, lrmin: usize, des: usize) {
        if self.seq.len() == self.n as usize {
            self.tally[lrmin][des] += 1;
            return;
        }
        let last = *self.seq.last().expect("first entry is placed by the caller");
        for v in 1..=self.n {
            if used & (1 << v) != 0 {
                continue;
            }
            self.seq.push(v);
            if !self.gamma.has_match_ending_at_last(&self.seq) {
                let new_min = v < min;
                self.go(used | 1 << v, min.min(v), lrmin + new_min as usize, des + (last > v) as usize);
            }
            self.seq.pop();
        }
    }
}

fn tally(n: usize, gamma: &PatternSet) -> Tally {
    let empty = || vec![vec![0u64; n.max(1)]; n + 1];
    if n == 0 {
        return empty();
    }
    (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut dfs = Dfs { gamma, n: n as u32, seq: vec![first], tally: empty() };
            if !gamma.has_match_ending_at_last(&dfs.seq) {
                dfs.go(1 << first, first, 1, 0);
            }
            dfs.tally
        })
        .reduce(empty, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        })
}

/// `NM_{gamma,n}(x, y) = sum x^lrmin y^(1 + des)`, with `NM_0 = 1`.
pub fn nm_polynomial(n: usize, gamma: &PatternSet) -> Result<XYPoly> {
    nm_polynomial_with(n, gamma, false)
}

pub fn nm_polynomial_with(n: usize, gamma: &PatternSet, allow_above_cap: bool) -> Result<XYPoly> {
    check_cap(n, allow_above_cap)?;
    if n == 0 {
        return Ok(XYPoly::one());
    }
    let mut out = XYPoly::zero();
    for (l, row) in tally(n, gamma).into_iter().enumerate() {
        for (d, c) in row.into_iter().enumerate() {
            out.add_term(l, d + 1, BigInt::from(c));
        }
    }
    Ok(out)
}

/// `NM_{gamma,n}(1, y)`.
pub fn nm_polynomial_y(n: usize, gamma: &PatternSet) -> Result<YPoly> {
    Ok(nm_polynomial(n, gamma)?.eval_x(&BigInt::from(1)))
}

/// The series `sum_n NM_{gamma,n}(1, y) t^n / n!` up to `order`.
pub fn nm_series_y(gamma: &PatternSet, order: usize) -> Result<EgfSeries<YPoly>> {
    check_cap(order, false)?;
    let coeffs = (0..=order).map(|n| nm_polynomial_y(n, gamma)).collect::<Result<Vec<_>>>()?;
    EgfSeries::new(coeffs)
}

/// `(U_0, ..., U_N)` from `1 / NM_gamma(t, 1, y)` by brute force.
pub fn u_from_inversion(gamma: &PatternSet, order: usize) -> Result<Vec<YPoly>> {
    let nm = nm_series_y(gamma, order)?;
    Ok(egf_reciprocal(&nm, order)?.into_coeffs())
}

const RANK_BITS: u32 = 5;

fn unpack(key: u64, len: usize, out: &mut Vec<u32>) {
    out.clear();
    out.extend((0..len).map(|i| ((key >> (RANK_BITS * i as u32)) & 31) as u32));
}

fn pack(ranks: &[u32]) -> u64 {
    ranks.iter().enumerate().fold(0, |k, (i, &r)| k | (r as u64) << (RANK_BITS * i as u32))
}

/// `NM_{gamma,n}(1, y)` for `n = 0..=order` by a prefix transfer count.
///
/// State: ranks, within the standardized prefix, of its last `max_len - 1`
/// entries. Appending rank `j` shifts every rank `>= j` up by one, and only
/// windows ending at the new entry can create a match.
pub fn nm_y_polynomials_dp(gamma: &PatternSet, order: usize) -> Result<Vec<YPoly>> {
    let keep = gamma.max_len() - 1;
    if order >= 31 || RANK_BITS as usize * keep > 64 {
        return Err(Error::InvalidInput("prefix count supports n < 31 and patterns up to length 13".into()));
    }
    let mut out = vec![YPoly::one()];
    // descent counts per state
    let mut states: HashMap<u64, Vec<u128>> = HashMap::from([(0, vec![1])]);
    for i in 1..=order {
        let prev_len = (i - 1).min(keep);
        let merged = states
            .par_iter()
            .fold(HashMap::<u64, Vec<u128>>::new, |mut acc, (&key, counts)| {
                let mut tail = Vec::with_capacity(keep + 1);
                unpack(key, prev_len, &mut tail);
                let mut grown = Vec::with_capacity(keep + 1);
                for j in 1..=i as u32 {
                    grown.clear();
                    grown.extend(tail.iter().map(|&r| if r >= j { r + 1 } else { r }));
                    grown.push(j);
                    if gamma.has_match_ending_at_last(&grown) {
                        continue;
                    }
                    let descent = tail.last().is_some_and(|&r| r >= j) as usize;
                    let start = grown.len().saturating_sub(keep);
                    let slot = acc.entry(pack(&grown[start..])).or_default();
                    if slot.len() < counts.len() + descent {
                        slot.resize(counts.len() + descent, 0);
                    }
                    for (d, &c) in counts.iter().enumerate() {
                        slot[d + descent] += c;
                    }
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    let slot = a.entry(k).or_default();
                    if slot.len() < v.len() {
                        slot.resize(v.len(), 0);
                    }
                    for (d, c) in v.into_iter().enumerate() {
                        slot[d] += c;
                    }
                }
                a
            });
        states = merged;
        let mut total: Vec<BigInt> = vec![BigInt::from(0)];
        for counts in states.values() {
            if total.len() < counts.len() + 1 {
                total.resize(counts.len() + 1, BigInt::from(0));
            }
            for (d, &c) in counts.iter().enumerate() {
                total[d + 1] += c;
            }
        }
        out.push(YPoly::from_coeffs(total));
    }
    Ok(out)
}

/// `(U_0, ..., U_N)` by inverting the prefix-count series.
pub fn u_from_inversion_dp(gamma: &PatternSet, order: usize) -> Result<Vec<YPoly>> {
    let nm = EgfSeries::new(nm_y_polynomials_dp(gamma, order)?)?;
    Ok(egf_reciprocal(&nm, order)?.into_coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> PatternSet {
        PatternSet::parse(s).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let g = set("123");
        let all: Vec<String> = enumerate_nm(3, &g).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(all, ["132", "213", "231", "312", "321"]);
        assert_eq!(enumerate_nm(0, &g).unwrap().count(), 1);
        assert!(matches!(enumerate_nm(14, &g), Err(Error::EnumerationCap { n: 14, cap: 13 })));
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(nm_polynomial(1, &set("1324")).unwrap(), XYPoly::monomial(1, 1, 1));
        let p = nm_polynomial(2, &set("1324,1423")).unwrap();
        assert_eq!(p, "xy + x^2y^2".parse().unwrap());
        assert_eq!(nm_polynomial(2, &set("12")).unwrap(), XYPoly::monomial(1, 2, 2));
        assert_eq!(nm_polynomial(0, &set("12")).unwrap(), XYPoly::one());
    }

    #[test]
    fn inversion_examples() {
        let u = u_from_inversion(&set("1324,1423"), 4).unwrap();
        assert_eq!(u[4].negate_y(), "y + 5y^2 + 3y^3 + y^4".parse().unwrap());
        let u = u_from_inversion(&set("1324,123"), 6).unwrap();
        assert_eq!(u[6].negate_y(), "5y^3 + 9y^4 + 5y^5 + y^6".parse().unwrap());
        assert_eq!(u[1], "-y".parse().unwrap());
    }

    #[test]
    fn prefix_count_agrees_with_enumeration() {
        for s in ["1324,123", "1432", "14253,15243", "12", "132"] {
            let g = set(s);
            let dp = nm_y_polynomials_dp(&g, 8).unwrap();
            for (n, p) in dp.iter().enumerate() {
                assert_eq!(*p, nm_polynomial_y(n, &g).unwrap(), "{s} n={n}");
            }
        }
    }
}
