//! Permutations, order reduction and consecutive pattern matching.
//!
//! Positions are 1-indexed wherever they leave this module.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest pattern the packed window keys can hold.
pub const MAX_PATTERN_LEN: usize = 16;

/// A sequence of distinct positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Wraps `values` after checking they are positive and pairwise distinct.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(values.len());
        for &v in &values {
            if v == 0 {
                return Err(Error::InvalidInput("permutation entries must be positive".into()));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidInput(format!("repeated entry {v}")));
            }
        }
        Ok(Permutation(values))
    }

    /// Like [`Permutation::new`] but also requires the value set `{1, ..., n}`.
    pub fn standard(values: Vec<u32>) -> Result<Self> {
        let p = Permutation::new(values)?;
        if !p.is_standard() {
            return Err(Error::InvalidInput(format!("{p} is not a permutation of 1..={}", p.len())));
        }
        Ok(p)
    }

    /// Caller guarantees the values are distinct and positive.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_standard(&self) -> bool {
        let n = self.0.len() as u32;
        self.0.iter().all(|&v| v >= 1 && v <= n)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of positions `i` with `p_i > p_{i+1}`.
    pub fn descents(&self) -> usize {
        descents(&self.0)
    }

    /// Number of entries smaller than everything before them.
    pub fn lr_minima(&self) -> usize {
        lr_minima(&self.0)
    }

    /// `i -> n + 1 - p_{n+1-i}`.
    pub fn reverse_complement(&self) -> Self {
        let n = self.0.len() as u32;
        Permutation(self.0.iter().rev().map(|&v| n + 1 - v).collect())
    }
}

pub(crate) fn descents(s: &[u32]) -> usize {
    s.windows(2).filter(|w| w[0] > w[1]).count()
}

pub(crate) fn lr_minima(s: &[u32]) -> usize {
    let mut min = u32::MAX;
    let mut count = 0;
    for &v in s {
        if v < min {
            min = v;
            count += 1;
        }
    }
    count
}

impl fmt::Display for Permutation {
    /// Single digits are run together (`1324`); otherwise entries are space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.0.iter().all(|&v| v <= 9);
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `1324`, `1 3 2 4` or `1,3,2,4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<u32> = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| Error::InvalidInput(format!("bad entry {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::InvalidInput(format!("bad entry {c:?}"))))
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

/// The standard permutation order-isomorphic to `seq`.
pub fn reduce(seq: &[i64]) -> Result<Permutation> {
    let mut idx: Vec<usize> = (0..seq.len()).collect();
    idx.sort_by_key(|&i| seq[i]);
    let mut out = vec![0u32; seq.len()];
    for (rank, w) in idx.iter().enumerate() {
        if rank > 0 && seq[idx[rank - 1]] == seq[*w] {
            return Err(Error::InvalidInput(format!("repeated entry {}", seq[*w])));
        }
        out[*w] = rank as u32 + 1;
    }
    Ok(Permutation(out))
}

/// Packs the reduction of a window of distinct values into a `u64`, four bits per entry.
#[inline]
pub(crate) fn window_key(w: &[u32]) -> u64 {
    let mut key = 0u64;
    for (i, &a) in w.iter().enumerate() {
        let rank = w.iter().filter(|&&b| b < a).count() as u64;
        key |= rank << (4 * i);
    }
    key
}

/// A normalized set of consecutive patterns, each starting with 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    patterns: BTreeSet<Permutation>,
    keys: BTreeMap<usize, HashSet<u64>>,
    identity_member: Option<usize>,
    max_descents: usize,
}

impl PatternSet {
    /// Validates the patterns and drops every identity longer than the
    /// shortest one; this leaves the avoidance classes unchanged.
    pub fn normalize<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = Permutation>,
    {
        let mut patterns = BTreeSet::new();
        for p in raw {
            if !p.is_standard() {
                return Err(Error::InvalidInput(format!("pattern {p} is not a standard permutation")));
            }
            if p.len() < 2 || p.len() > MAX_PATTERN_LEN {
                return Err(Error::InvalidInput(format!(
                    "pattern {p} has length {}; supported lengths are 2..={MAX_PATTERN_LEN}",
                    p.len()
                )));
            }
            if p.values()[0] != 1 {
                return Err(Error::PatternNotStartingWithOne(p.to_string()));
            }
            patterns.insert(p);
        }
        if patterns.is_empty() {
            return Err(Error::InvalidInput("empty pattern set".into()));
        }
        let identity_member = patterns.iter().filter(|p| p.is_identity()).map(|p| p.len()).min();
        if let Some(s) = identity_member {
            patterns.retain(|p| !p.is_identity() || p.len() == s);
        }
        let mut keys: BTreeMap<usize, HashSet<u64>> = BTreeMap::new();
        for p in &patterns {
            keys.entry(p.len()).or_default().insert(window_key(p.values()));
        }
        let max_descents = patterns.iter().map(|p| p.descents()).max().unwrap_or(0);
        Ok(PatternSet { patterns, keys, identity_member, max_descents })
    }

    /// Parses patterns such as `"1324,123"` or `"1324 123"`.
    pub fn parse(list: &str) -> Result<Self> {
        let parts: Vec<Permutation> = list
            .split([',', ' ', ';'])
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        PatternSet::normalize(parts)
    }

    pub fn patterns(&self) -> impl Iterator<Item = &Permutation> {
        self.patterns.iter()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn min_len(&self) -> usize {
        *self.keys.keys().next().expect("pattern set is non-empty")
    }

    pub fn max_len(&self) -> usize {
        *self.keys.keys().next_back().expect("pattern set is non-empty")
    }

    /// Length of the identity pattern, if one is present.
    pub fn identity_member(&self) -> Option<usize> {
        self.identity_member
    }

    pub fn max_descents(&self) -> usize {
        self.max_descents
    }

    /// Whether the window reduces to a member of the set.
    pub fn is_match(&self, window: &[u32]) -> bool {
        self.keys.get(&window.len()).is_some_and(|ks| ks.contains(&window_key(window)))
    }

    /// Whether some match starts at 0-based index `start`.
    pub fn matches_at(&self, seq: &[u32], start: usize) -> bool {
        self.keys.iter().any(|(&l, ks)| start + l <= seq.len() && ks.contains(&window_key(&seq[start..start + l])))
    }

    /// Whether some match ends at the last entry of `prefix`.
    pub fn has_match_ending_at_last(&self, prefix: &[u32]) -> bool {
        let n = prefix.len();
        self.keys.iter().any(|(&l, ks)| l <= n && ks.contains(&window_key(&prefix[n - l..])))
    }

    /// Whether some match lies entirely inside `seq[lo..hi]`.
    pub fn has_match_within(&self, seq: &[u32], lo: usize, hi: usize) -> bool {
        (lo..hi).any(|s| self.keys.iter().any(|(&l, ks)| s + l <= hi && ks.contains(&window_key(&seq[s..s + l]))))
    }

    /// Whether some match inside `seq[lo..hi]` covers both `a` and `a + 1`.
    pub(crate) fn has_match_covering_pair(&self, seq: &[u32], lo: usize, hi: usize, a: usize) -> bool {
        (lo..=a).any(|s| {
            self.keys.iter().any(|(&l, ks)| s + l <= hi && s + l > a + 1 && ks.contains(&window_key(&seq[s..s + l])))
        })
    }

    /// 1-indexed starting positions of every match, each listed once.
    pub fn match_positions(&self, seq: &[u32]) -> Vec<usize> {
        (0..seq.len()).filter(|&i| self.matches_at(seq, i)).map(|i| i + 1).collect()
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Descents, left-to-right minima and match positions of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stats {
    pub des: usize,
    pub lrmin: usize,
    pub match_positions: Vec<usize>,
}

pub fn stats(p: &Permutation, gamma: &PatternSet) -> Result<Stats> {
    if !p.is_standard() {
        return Err(Error::InvalidInput(format!("{p} is not a standard permutation")));
    }
    Ok(Stats { des: p.descents(), lrmin: p.lr_minima(), match_positions: gamma.match_positions(p.values()) })
}
