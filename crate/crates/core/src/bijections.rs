//! Lattice paths, two-row standard tableaux, and the maps from fixed points
//! of the `{1324, 123}` involution to ballot-type path classes.
//!
//! Fixed points for `{1324, 123}` have bricks of size 1 and 2 only. Runs of
//! size-2 bricks read as two-row tableaux (first entries in the first row),
//! and value `i` always corresponds to step `i` of the image path.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::perm::{PatternSet, Permutation};
use crate::tabloids::{fixed_points, involution_step, FilledBrickTabloid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// `(1, 1)`.
    U,
    /// `(1, -1)`.
    D,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
        }
    }

    fn flip(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
        }
    }
}

/// A path of up and down steps starting at height 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights after each prefix, starting with 0.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = vec![0];
        for s in &self.steps {
            h.push(h.last().unwrap() + s.delta());
        }
        h
    }

    pub fn end_height(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    pub fn min_height(&self) -> i64 {
        *self.heights().iter().min().unwrap()
    }

    /// 0-based indices of the down steps that end at height 0.
    pub fn downs_to_zero(&self) -> Vec<usize> {
        let h = self.heights();
        (0..self.steps.len()).filter(|&i| self.steps[i] == Step::D && h[i + 1] == 0).collect()
    }

    /// Mirror image in the horizontal axis.
    pub fn flipped(&self) -> Self {
        LatticePath { steps: self.steps.iter().map(|s| s.flip()).collect() }
    }

    pub fn is_dyck(&self) -> bool {
        self.end_height() == 0 && self.min_height() >= 0
    }

    /// Length `2n + 1`, ends at height `2k + 1`, never below 0.
    pub fn is_t_path(&self, n: usize, k: usize) -> bool {
        self.len() == 2 * n + 1 && self.end_height() == 2 * k as i64 + 1 && self.min_height() >= 0
    }

    /// Length `2n`, ends at 0, exactly `k` down steps ending at height 0.
    pub fn is_r_path(&self, n: usize, k: usize) -> bool {
        self.len() == 2 * n && self.end_height() == 0 && self.downs_to_zero().len() == k
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::U => "U",
                Step::D => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::U),
                'D' | 'd' => Ok(Step::D),
                _ => Err(Error::InvalidInput(format!("bad step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath::new)
    }
}

/// All step sequences of the given length.
fn all_paths(len: usize) -> impl Iterator<Item = LatticePath> {
    (0u64..1 << len).map(move |mask| {
        LatticePath::new((0..len).map(|i| if mask >> (len - 1 - i) & 1 == 0 { Step::U } else { Step::D }).collect())
    })
}

pub fn dyck_paths(r: usize) -> Vec<LatticePath> {
    all_paths(2 * r).filter(LatticePath::is_dyck).collect()
}

pub fn t_paths(n: usize, k: usize) -> Vec<LatticePath> {
    all_paths(2 * n + 1).filter(|p| p.is_t_path(n, k)).collect()
}

pub fn r_paths(n: usize, k: usize) -> Vec<LatticePath> {
    all_paths(2 * n).filter(|p| p.is_r_path(n, k)).collect()
}

/// A standard tableau of shape `(r, r)` on any `2r` distinct integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoRowSyt {
    first: Vec<u32>,
    second: Vec<u32>,
}

impl TwoRowSyt {
    /// Rows must have equal length and increase, and each first-row entry
    /// must be below the entry over it.
    pub fn new(first: Vec<u32>, second: Vec<u32>) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidInput(format!("not a two-row tableau: {why}")));
        if first.len() != second.len() {
            return bad("rows differ in length");
        }
        if first.windows(2).any(|w| w[0] >= w[1]) || second.windows(2).any(|w| w[0] >= w[1]) {
            return bad("rows must increase");
        }
        if first.iter().zip(&second).any(|(a, b)| a >= b) {
            return bad("columns must increase");
        }
        let mut all: Vec<u32> = first.iter().chain(&second).copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return bad("entries repeat");
        }
        Ok(TwoRowSyt { first, second })
    }

    pub fn first_row(&self) -> &[u32] {
        &self.first
    }

    pub fn second_row(&self) -> &[u32] {
        &self.second
    }

    pub fn width(&self) -> usize {
        self.first.len()
    }
}

/// Step `i` is up exactly when the `i`-th smallest entry is in the first row.
pub fn syt_to_dyck(t: &TwoRowSyt) -> LatticePath {
    let mut tagged: Vec<(u32, Step)> =
        t.first.iter().map(|&v| (v, Step::U)).chain(t.second.iter().map(|&v| (v, Step::D))).collect();
    tagged.sort_unstable();
    LatticePath::new(tagged.into_iter().map(|(_, s)| s).collect())
}

/// Inverse of [`syt_to_dyck`] with entries `1..=2r`.
pub fn dyck_to_syt(p: &LatticePath) -> Result<TwoRowSyt> {
    let values: Vec<u32> = (1..=p.len() as u32).collect();
    dyck_to_syt_on(p, &values)
}

/// Inverse of [`syt_to_dyck`] with the given increasing entries.
pub fn dyck_to_syt_on(p: &LatticePath, values: &[u32]) -> Result<TwoRowSyt> {
    if !p.is_dyck() {
        return Err(Error::InvalidInput(format!("{p} is not a Dyck path")));
    }
    if values.len() != p.len() || values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput("need one increasing value per step".into()));
    }
    let (mut first, mut second) = (Vec::new(), Vec::new());
    for (s, &v) in p.steps.iter().zip(values) {
        match s {
            Step::U => first.push(v),
            Step::D => second.push(v),
        }
    }
    TwoRowSyt::new(first, second)
}

/// All standard tableaux of shape `(r, r)` on `1..=2r`.
pub fn two_row_syts(r: usize) -> Vec<TwoRowSyt> {
    dyck_paths(r).iter().map(|p| dyck_to_syt(p).expect("Dyck paths map to tableaux")).collect()
}

fn pair_gamma() -> PatternSet {
    PatternSet::parse("1324,123").expect("valid patterns")
}

/// Splits a fixed point into the tableaux of its size-2 runs; one more run
/// than there are size-1 bricks.
fn runs_of(o: &FilledBrickTabloid) -> Result<Vec<TwoRowSyt>> {
    let gamma = pair_gamma();
    let checked = FilledBrickTabloid::new(o.bricks().to_vec(), o.perm().clone(), &gamma)?;
    if involution_step(&checked, &gamma)? != checked {
        return Err(Error::NotInClass("not a fixed point of the {1324,123} involution".into()));
    }
    let s = o.perm().values();
    let mut runs = Vec::new();
    let (mut first, mut second) = (Vec::new(), Vec::new());
    for (lo, hi) in o.ranges() {
        match hi - lo {
            1 => runs.push(TwoRowSyt::new(std::mem::take(&mut first), std::mem::take(&mut second))?),
            2 => {
                first.push(s[lo]);
                second.push(s[lo + 1]);
            }
            _ => return Err(Error::NotInClass("bricks must have size 1 or 2".into())),
        }
    }
    runs.push(TwoRowSyt::new(first, second)?);
    Ok(runs)
}

/// Rebuilds a fixed point from run tableaux separated by size-1 bricks.
/// `segments[i]` is the Dyck path of run `i`; a singleton follows every run
/// but the last.
fn rebuild(segments: &[LatticePath]) -> Result<FilledBrickTabloid> {
    let mut next = 1u32;
    let (mut bricks, mut perm) = (Vec::new(), Vec::new());
    for (i, seg) in segments.iter().enumerate() {
        let values: Vec<u32> = (next..next + seg.len() as u32).collect();
        next += seg.len() as u32;
        let t = dyck_to_syt_on(seg, &values)?;
        for (a, b) in t.first.iter().zip(&t.second) {
            bricks.push(2);
            perm.extend([*a, *b]);
        }
        if i + 1 < segments.len() {
            bricks.push(1);
            perm.push(next);
            next += 1;
        }
    }
    let gamma = pair_gamma();
    let o = FilledBrickTabloid::new(bricks, Permutation::standard(perm)?, &gamma)?;
    if involution_step(&o, &gamma)? != o {
        return Err(Error::NotInClass("reconstruction is not a fixed point".into()));
    }
    Ok(o)
}

/// Fixed points of size `2n + 1` with `2k + 1` bricks of size 1.
pub fn theta_domain(n: usize, k: usize) -> Result<Vec<FilledBrickTabloid>> {
    domain(2 * n + 1, 2 * k + 1)
}

/// Fixed points of size `2n` with `2k` bricks of size 1.
pub fn beta_domain(n: usize, k: usize) -> Result<Vec<FilledBrickTabloid>> {
    domain(2 * n, 2 * k)
}

fn domain(size: usize, singletons: usize) -> Result<Vec<FilledBrickTabloid>> {
    let mut v = fixed_points(&pair_gamma(), size)?;
    v.retain(|o| o.bricks().iter().filter(|&&b| b == 1).count() == singletons);
    Ok(v)
}

/// `P_1 U P_2 U ... P_{2k+1} U P_{2k+2}` where `P_i` is the Dyck path of the
/// run before the `i`-th size-1 brick.
pub fn theta_map(o: &FilledBrickTabloid) -> Result<LatticePath> {
    if o.n() % 2 == 0 {
        return Err(Error::NotInClass("odd size required".into()));
    }
    let runs = runs_of(o)?;
    let mut steps = Vec::with_capacity(o.n());
    for (i, t) in runs.iter().enumerate() {
        steps.extend(syt_to_dyck(t).steps);
        if i + 1 < runs.len() {
            steps.push(Step::U);
        }
    }
    Ok(LatticePath::new(steps))
}

/// Factors the path at the last up step reaching each level `1..=2k+1`.
pub fn theta_inverse(p: &LatticePath) -> Result<FilledBrickTabloid> {
    let end = p.end_height();
    if p.len() % 2 == 0 || p.min_height() < 0 || end < 1 || end % 2 == 0 {
        return Err(Error::NotInClass(format!("{p} is not in any T(n,k)")));
    }
    let h = p.heights();
    let mut cuts = Vec::new();
    for level in 1..=end {
        let last = (0..p.len()).rev().find(|&i| p.steps[i] == Step::U && h[i + 1] == level);
        cuts.push(last.expect("a path ending above a level crosses it"));
    }
    let mut segments = Vec::new();
    let mut lo = 0;
    for &c in &cuts {
        segments.push(LatticePath::new(p.steps[lo..c].to_vec()));
        lo = c + 1;
    }
    segments.push(LatticePath::new(p.steps[lo..].to_vec()));
    rebuild(&segments)
}

/// `flip(P_1) U P_2 D flip(P_3) U P_4 D ... P_{2k} D flip(P_{2k+1})`.
pub fn beta_map(o: &FilledBrickTabloid) -> Result<LatticePath> {
    if o.n() % 2 == 1 {
        return Err(Error::NotInClass("even size required".into()));
    }
    let runs = runs_of(o)?;
    let mut steps = Vec::with_capacity(o.n());
    for (i, t) in runs.iter().enumerate() {
        let path = syt_to_dyck(t);
        // Runs 1, 3, 5, ... (0-based even) are flipped.
        if i % 2 == 0 {
            steps.extend(path.flipped().steps);
        } else {
            steps.extend(path.steps);
        }
        if i + 1 < runs.len() {
            steps.push(if i % 2 == 0 { Step::U } else { Step::D });
        }
    }
    Ok(LatticePath::new(steps))
}

/// Cuts at each down step `f_i` ending at 0 and at the rightmost up step
/// `e_i` leaving 0 between `f_{i-1}` and `f_i`.
pub fn beta_inverse(p: &LatticePath) -> Result<FilledBrickTabloid> {
    if p.len() % 2 == 1 || p.end_height() != 0 {
        return Err(Error::NotInClass(format!("{p} is not in any R(n,k)")));
    }
    let h = p.heights();
    let downs = p.downs_to_zero();
    let mut segments = Vec::new();
    let mut lo = 0;
    for &f in &downs {
        let e = (lo..f)
            .rev()
            .find(|&i| p.steps[i] == Step::U && h[i] == 0)
            .ok_or_else(|| Error::NotInClass(format!("{p} has no up step from 0 before step {f}")))?;
        segments.push(LatticePath::new(p.steps[lo..e].to_vec()).flipped());
        segments.push(LatticePath::new(p.steps[e + 1..f].to_vec()));
        lo = f + 1;
    }
    segments.push(LatticePath::new(p.steps[lo..].to_vec()).flipped());
    rebuild(&segments)
}

/// Permutations of `S_{2k}` with a 1324-match at every odd position
/// `1, 3, ..., 2k - 3`, in lexicographic order.
pub fn chain_match_permutations(k: usize) -> Result<Vec<Permutation>> {
    if !(2..=16).contains(&k) {
        return Err(Error::InvalidInput(format!("k = {k} outside 2..=16")));
    }
    let n = 2 * k;
    let target = PatternSet::parse("1324").expect("valid pattern");
    let mut out = Vec::new();
    fn go(n: usize, used: u64, seq: &mut Vec<u32>, target: &PatternSet, out: &mut Vec<Permutation>) {
        let i = seq.len();
        if i == n {
            out.push(Permutation::from_vec_unchecked(seq.clone()));
            return;
        }
        for v in 1..=n as u32 {
            if used >> v & 1 == 1 {
                continue;
            }
            seq.push(v);
            // A window starting at even 0-based index s ends at s + 3, which is odd.
            let ok = i < 3 || i % 2 == 0 || target.is_match(&seq[i - 3..]);
            if ok {
                go(n, used | 1 << v, seq, target, out);
            }
            seq.pop();
        }
    }
    go(n, 0, &mut Vec::with_capacity(n), &target, &mut out);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathKind {
    T,
    R,
}

/// `2(k+1) C(2n+1, n-k) / (n+k+2)` for T, `(2k+1) C(2n, n-k) / (n+k+1)` for R.
pub fn path_closed_form(kind: PathKind, n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::InvalidInput(format!("k = {k} exceeds n = {n}")));
    }
    let (n, k) = (n as i64, k as i64);
    let (num, den) = match kind {
        PathKind::T => (BigInt::from(2 * (k + 1)) * binomial(2 * n + 1, n - k), n + k + 2),
        PathKind::R => (BigInt::from(2 * k + 1) * binomial(2 * n, n - k), n + k + 1),
    };
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(Error::Arithmetic(format!("{num} is not divisible by {den}")));
    }
    Ok(q)
}

/// Exhaustive count of the path class, checked against the closed form.
pub fn path_census(kind: PathKind, n: usize, k: usize) -> Result<BigInt> {
    let count = match kind {
        PathKind::T => t_paths(n, k).len(),
        PathKind::R => r_paths(n, k).len(),
    };
    let count = BigInt::from(count);
    let formula = path_closed_form(kind, n, k)?;
    if count != formula {
        return Err(Error::Arithmetic(format!("{kind:?}({n},{k}): counted {count}, formula gives {formula}")));
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        let t = TwoRowSyt::new(vec![1], vec![2]).unwrap();
        assert_eq!(syt_to_dyck(&t), path("UD"));
        assert_eq!(two_row_syts(3).len(), 5);
        let mut p2: Vec<String> = two_row_syts(2).iter().map(|t| syt_to_dyck(t).to_string()).collect();
        p2.sort();
        assert_eq!(p2, ["UDUD", "UUDD"]);
        assert!(TwoRowSyt::new(vec![2], vec![1]).is_err());
        assert!(dyck_to_syt(&path("DU")).is_err());
    }

    #[test]
    fn theta_examples() {
        let mut images: Vec<String> =
            theta_domain(1, 0).unwrap().iter().map(|o| theta_map(o).unwrap().to_string()).collect();
        images.sort();
        assert_eq!(images, ["UDU", "UUD"]);
        let all_single = theta_domain(3, 3).unwrap();
        assert_eq!(all_single.len(), 1);
        assert_eq!(theta_map(&all_single[0]).unwrap(), path("UUUUUUU"));
    }

    #[test]
    fn beta_examples() {
        let d = beta_domain(1, 0).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].bricks(), &[2]);
        assert_eq!(beta_map(&d[0]).unwrap(), path("DU"));
        let d = beta_domain(3, 3).unwrap();
        assert_eq!(beta_map(&d[0]).unwrap(), path("UDUDUD"));
    }

    #[test]
    fn chain_counts() {
        let two: Vec<String> = chain_match_permutations(2).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(two, ["1324"]);
        assert_eq!(chain_match_permutations(3).unwrap().len(), 2);
        assert_eq!(chain_match_permutations(4).unwrap().len(), 5);
    }

    #[test]
    fn census_examples() {
        assert_eq!(path_census(PathKind::T, 1, 0).unwrap(), BigInt::from(2));
        assert_eq!(path_census(PathKind::R, 2, 2).unwrap(), BigInt::from(1));
        assert_eq!(path_census(PathKind::R, 2, 0).unwrap(), BigInt::from(2));
    }
}
