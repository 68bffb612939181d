//! Filled brick tabloids, the split/merge involution and its fixed points.
//!
//! An object is a composition `B` of `n` together with `σ ∈ S_n` such that no
//! pattern match lies inside a single brick. Within-brick descents carry the
//! label `y` and brick-final cells carry `-y`, so the signed weight of an
//! object is `(-1)^#bricks y^(#bricks + #within-brick descents)`.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{PatternSet, Permutation};
use crate::poly::YPoly;
use crate::reciprocity::compositions;

/// The label carried by a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    None,
    /// A descent inside a brick.
    Y,
    /// The last cell of a brick.
    MinusY,
}

/// `sign * y^y_exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedWeight {
    pub sign: i8,
    pub y_exponent: usize,
}

impl SignedWeight {
    pub fn to_ypoly(self) -> YPoly {
        YPoly::monomial(self.sign as i64, self.y_exponent)
    }
}

/// A pair `(B, σ)` with no match inside any brick.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FilledBrickTabloid {
    bricks: Vec<usize>,
    perm: Permutation,
}

pub(crate) fn require_supported(gamma: &PatternSet) -> Result<()> {
    if gamma.max_descents() > 1 {
        return Err(Error::UnsupportedFamily(format!(
            "{gamma} has a pattern with {} descents; the involution needs at most one",
            gamma.max_descents()
        )));
    }
    Ok(())
}

fn brick_ranges(bricks: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    bricks.iter().scan(0, |lo, &b| {
        let r = (*lo, *lo + b);
        *lo += b;
        Some(r)
    })
}

fn has_match_in_a_brick(gamma: &PatternSet, bricks: &[usize], s: &[u32]) -> bool {
    brick_ranges(bricks).any(|(lo, hi)| gamma.has_match_within(s, lo, hi))
}

impl FilledBrickTabloid {
    /// Checks that `bricks` is a composition of `n = perm.len()`, that
    /// `perm` is standard and that no match sits inside a brick.
    pub fn new(bricks: Vec<usize>, perm: Permutation, gamma: &PatternSet) -> Result<Self> {
        if bricks.contains(&0) || bricks.iter().sum::<usize>() != perm.len() {
            return Err(Error::InvalidInput(format!("{bricks:?} is not a composition of {}", perm.len())));
        }
        if !perm.is_standard() {
            return Err(Error::InvalidInput(format!("{perm} is not a standard permutation")));
        }
        if has_match_in_a_brick(gamma, &bricks, perm.values()) {
            return Err(Error::NotInClass(format!("a brick of {bricks:?} contains a match of {gamma} in {perm}")));
        }
        Ok(FilledBrickTabloid { bricks, perm })
    }

    pub(crate) fn from_parts(bricks: Vec<usize>, perm: Vec<u32>) -> Self {
        FilledBrickTabloid { bricks, perm: Permutation::from_vec_unchecked(perm) }
    }

    pub fn bricks(&self) -> &[usize] {
        &self.bricks
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn num_bricks(&self) -> usize {
        self.bricks.len()
    }

    /// Half-open cell ranges `[lo, hi)` of the bricks, 0-based.
    pub fn ranges(&self) -> Vec<(usize, usize)> {
        brick_ranges(&self.bricks).collect()
    }

    pub fn labels(&self) -> Vec<Label> {
        let s = self.perm.values();
        let mut out = vec![Label::None; s.len()];
        for (lo, hi) in brick_ranges(&self.bricks) {
            for c in lo..hi - 1 {
                if s[c] > s[c + 1] {
                    out[c] = Label::Y;
                }
            }
            out[hi - 1] = Label::MinusY;
        }
        out
    }

    pub fn signed_weight(&self) -> SignedWeight {
        let s = self.perm.values();
        let inner = brick_ranges(&self.bricks).map(|(lo, hi)| (lo..hi - 1).filter(|&c| s[c] > s[c + 1]).count()).sum::<usize>();
        let k = self.bricks.len();
        SignedWeight { sign: if k % 2 == 0 { 1 } else { -1 }, y_exponent: k + inner }
    }

    /// Two text rows: the entries with `|` between bricks, then the labels.
    pub fn render(&self) -> String {
        let w = self.n().to_string().len().max(2);
        let labels = self.labels();
        let (mut top, mut bottom) = (String::from("|"), String::from("|"));
        for (lo, hi) in brick_ranges(&self.bricks) {
            for (v, label) in self.perm.values()[lo..hi].iter().zip(&labels[lo..hi]) {
                let _ = write!(top, " {v:>w$}");
                let l = match label {
                    Label::None => "",
                    Label::Y => "y",
                    Label::MinusY => "-y",
                };
                let _ = write!(bottom, " {l:>w$}");
            }
            top.push_str(" |");
            bottom.push_str(" |");
        }
        format!("{top}\n{bottom}")
    }
}

/// One step of the split/merge map.
///
/// Scanning cells left to right, the first within-brick descent splits its
/// brick right after it; the first brick-final cell that is larger than the
/// next cell merges its brick with the next one when the union holds no
/// match. With neither, the object is a fixed point.
pub fn involution_step(o: &FilledBrickTabloid, gamma: &PatternSet) -> Result<FilledBrickTabloid> {
    require_supported(gamma)?;
    let s = o.perm.values();
    let ranges = o.ranges();
    for (b, &(lo, hi)) in ranges.iter().enumerate() {
        for c in lo..hi - 1 {
            if s[c] > s[c + 1] {
                let mut bricks = o.bricks.clone();
                bricks.splice(b..=b, [c + 1 - lo, hi - c - 1]);
                return Ok(FilledBrickTabloid { bricks, perm: o.perm.clone() });
            }
        }
        if let Some(&(_, hi2)) = ranges.get(b + 1) {
            if s[hi - 1] > s[hi] && !gamma.has_match_within(s, lo, hi2) {
                let mut bricks = o.bricks.clone();
                bricks.splice(b..=b + 1, [hi2 - lo]);
                return Ok(FilledBrickTabloid { bricks, perm: o.perm.clone() });
            }
        }
    }
    Ok(o.clone())
}

/// All objects with the given brick lengths, in lexicographic order of `σ`.
pub fn objects_with_bricks(gamma: &PatternSet, bricks: &[usize]) -> Result<Vec<FilledBrickTabloid>> {
    require_supported(gamma)?;
    let n = bricks.iter().sum::<usize>();
    let mut brick_start = Vec::with_capacity(n);
    for (lo, hi) in brick_ranges(bricks) {
        brick_start.extend(std::iter::repeat(lo).take(hi - lo));
    }
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(n);
    fn go(
        gamma: &PatternSet,
        n: usize,
        brick_start: &[usize],
        bricks: &[usize],
        used: u64,
        seq: &mut Vec<u32>,
        out: &mut Vec<FilledBrickTabloid>,
    ) {
        let i = seq.len();
        if i == n {
            out.push(FilledBrickTabloid::from_parts(bricks.to_vec(), seq.clone()));
            return;
        }
        for v in 1..=n as u32 {
            if used >> v & 1 == 1 {
                continue;
            }
            seq.push(v);
            if !gamma.has_match_ending_at_last(&seq[brick_start[i]..]) {
                go(gamma, n, brick_start, bricks, used | 1 << v, seq, out);
            }
            seq.pop();
        }
    }
    go(gamma, n, &brick_start, bricks, 0, &mut seq, &mut out);
    Ok(out)
}

/// Every object of size `n`, grouped by composition.
pub fn enumerate_objects(gamma: &PatternSet, n: usize) -> Result<impl Iterator<Item = FilledBrickTabloid> + '_> {
    require_supported(gamma)?;
    Ok(compositions(n).into_iter().flat_map(move |b| objects_with_bricks(gamma, &b).expect("family checked above")))
}

/// `Σ sgn(O) W(O)` over every object of size `n`.
pub fn signed_sum_over_objects(gamma: &PatternSet, n: usize) -> Result<YPoly> {
    require_supported(gamma)?;
    let parts: Vec<YPoly> = compositions(n)
        .into_par_iter()
        .map(|b| {
            let mut counts: Vec<i64> = vec![0; n + 1];
            for o in objects_with_bricks(gamma, &b).expect("family checked above") {
                let w = o.signed_weight();
                counts[w.y_exponent] += w.sign as i64;
            }
            YPoly::from_i64s(&counts)
        })
        .collect();
    Ok(parts.iter().fold(YPoly::zero(), |acc, p| &acc + p))
}

/// Calls `f(bricks, σ)` for every fixed point of the involution.
///
/// Bricks of a fixed point increase and their minima increase, so a fixed
/// point is a set partition of `[n]` listed block by block in order of
/// minima. The remaining conditions: an identity pattern of length `k + 1`
/// caps brick length at `k`, and every drop between adjacent bricks lies
/// inside a match contained in their union.
pub fn for_each_fixed_point<F>(gamma: &PatternSet, n: usize, mut f: F) -> Result<()>
where
    F: FnMut(&[usize], &[u32]),
{
    require_supported(gamma)?;
    let cap = gamma.identity_member().map_or(usize::MAX, |len| len - 1);
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut seq = Vec::with_capacity(n);
    let mut sizes = Vec::with_capacity(n);
    #[allow(clippy::too_many_arguments)]
    fn go<F: FnMut(&[usize], &[u32])>(
        v: u32,
        n: u32,
        cap: usize,
        gamma: &PatternSet,
        blocks: &mut Vec<Vec<u32>>,
        seq: &mut Vec<u32>,
        sizes: &mut Vec<usize>,
        f: &mut F,
    ) {
        if v > n {
            seq.clear();
            sizes.clear();
            for b in blocks.iter() {
                seq.extend_from_slice(b);
                sizes.push(b.len());
            }
            let mut lo = 0;
            for w in sizes.windows(2) {
                let (mid, hi) = (lo + w[0], lo + w[0] + w[1]);
                if seq[mid - 1] > seq[mid] && !gamma.has_match_covering_pair(seq, lo, hi, mid - 1) {
                    return;
                }
                lo = mid;
            }
            f(sizes, seq);
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i].len() < cap {
                blocks[i].push(v);
                go(v + 1, n, cap, gamma, blocks, seq, sizes, f);
                blocks[i].pop();
            }
        }
        blocks.push(vec![v]);
        go(v + 1, n, cap, gamma, blocks, seq, sizes, f);
        blocks.pop();
    }
    go(1, n as u32, cap, gamma, &mut blocks, &mut seq, &mut sizes, &mut f);
    Ok(())
}

/// The fixed points, built from their characterization rather than by
/// filtering all objects.
pub fn fixed_points(gamma: &PatternSet, n: usize) -> Result<Vec<FilledBrickTabloid>> {
    let mut out = Vec::new();
    for_each_fixed_point(gamma, n, |b, s| out.push(FilledBrickTabloid::from_parts(b.to_vec(), s.to_vec())))?;
    Ok(out)
}

/// `Σ (-y)^#bricks` over the fixed points; equals `U_{Γ,n}(y)`.
pub fn fixed_point_signed_sum(gamma: &PatternSet, n: usize) -> Result<YPoly> {
    partial_fixed_point_sum(gamma, n, None)
}

/// The part of [`fixed_point_signed_sum`] from fixed points whose first
/// brick has length `r`.
pub fn fixed_point_sum_by_first_brick(gamma: &PatternSet, n: usize, r: usize) -> Result<YPoly> {
    if r == 0 || r > n {
        return Err(Error::InvalidInput(format!("first brick length {r} outside 1..={n}")));
    }
    partial_fixed_point_sum(gamma, n, Some(r))
}

fn partial_fixed_point_sum(gamma: &PatternSet, n: usize, first: Option<usize>) -> Result<YPoly> {
    let mut counts = vec![0i64; n + 1];
    for_each_fixed_point(gamma, n, |b, _| {
        if first.is_none() || b.first().copied() == first {
            counts[b.len()] += if b.len() % 2 == 0 { 1 } else { -1 };
        }
    })?;
    Ok(YPoly::from_i64s(&counts))
}
