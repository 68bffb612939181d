//! Shape checks on coefficient sequences: strict log-concavity, unimodality
//! and the location of the largest coefficient.
//!
//! Coefficients are read over the contiguous range from the lowest to the
//! highest nonzero exponent. These are finite checks of a conjecture, not
//! proofs of anything.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::poly::YPoly;
use crate::reciprocity::{recursion_sequence, FamilySpec};

fn support(p: &YPoly) -> &[BigInt] {
    match (p.lowest_exponent(), p.degree()) {
        (Some(lo), Some(hi)) => &p.coeffs()[lo..=hi],
        _ => &[],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogConcavity {
    pub log_concave: bool,
    /// Exponent `i` of the first `a_{i-1} a_{i+1} >= a_i^2`.
    pub first_violation: Option<usize>,
}

/// Strict log-concavity `a_{i-1} a_{i+1} < a_i^2` at every interior index.
pub fn is_log_concave(p: &YPoly) -> LogConcavity {
    let lo = p.lowest_exponent().unwrap_or(0);
    let a = support(p);
    let first_violation = (1..a.len().saturating_sub(1)).find(|&i| &a[i - 1] * &a[i + 1] >= &a[i] * &a[i]).map(|i| i + lo);
    LogConcavity { log_concave: first_violation.is_none(), first_violation }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Unimodality {
    pub unimodal: bool,
    /// Exponents where the largest coefficient occurs.
    pub argmax_exponents: Vec<usize>,
}

/// Weakly rising then weakly falling.
pub fn is_unimodal(p: &YPoly) -> Unimodality {
    let lo = p.lowest_exponent().unwrap_or(0);
    let a = support(p);
    let mut i = 0;
    while i + 1 < a.len() && a[i] <= a[i + 1] {
        i += 1;
    }
    while i + 1 < a.len() && a[i] >= a[i + 1] {
        i += 1;
    }
    let unimodal = i + 1 >= a.len();
    let argmax_exponents = match a.iter().max() {
        Some(m) => a.iter().enumerate().filter(|(_, c)| *c == m).map(|(i, _)| i + lo).collect(),
        None => Vec::new(),
    };
    Unimodality { unimodal, argmax_exponents }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub family: String,
    pub n: usize,
    pub log_concave: bool,
    pub unimodal: bool,
    pub argmax_exponents: Vec<usize>,
}

/// One row per `n` in `n_min..=n_max` for `U_{Γ,n}(-y)` from the recursion.
pub fn survey(spec: FamilySpec, n_min: usize, n_max: usize) -> Result<Vec<SurveyRow>> {
    let u = recursion_sequence(spec, n_max)?;
    Ok((n_min.max(1)..=n_max)
        .map(|n| {
            let p = u[n].negate_y();
            let lc = is_log_concave(&p);
            let um = is_unimodal(&p);
            SurveyRow {
                family: spec.to_string(),
                n,
                log_concave: lc.log_concave,
                unimodal: um.unimodal,
                argmax_exponents: um.argmax_exponents,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> YPoly {
        s.parse().unwrap()
    }

    #[test]
    fn log_concave_examples() {
        assert!(is_log_concave(&p("y + 14y^2 + 36y^3 + 19y^4 + 5y^5 + y^6")).log_concave);
        let lc = is_log_concave(&p("1 + y + y^2"));
        assert_eq!(lc, LogConcavity { log_concave: false, first_violation: Some(1) });
        assert!(is_log_concave(&p("3y + 7y^2")).log_concave);
        assert!(!is_log_concave(&p("y + 65y^2 + 36y^3 + 84y^4")).log_concave);
        assert!(!is_log_concave(&p("y + y^3")).log_concave);
    }

    #[test]
    fn unimodal_examples() {
        let u = is_unimodal(&p("y + 65y^2 + 36y^3 + 84y^4"));
        assert!(!u.unimodal);
        assert_eq!(u.argmax_exponents, vec![4]);
        assert!(is_unimodal(&p("7")).unimodal);
        assert!(is_unimodal(&YPoly::zero()).unimodal);
        let u = is_unimodal(&p("y + 3y^2 + 3y^3 + y^4"));
        assert!(u.unimodal);
        assert_eq!(u.argmax_exponents, vec![2, 3]);
    }

    #[test]
    fn survey_rows() {
        let rows = survey(FamilySpec::GammaK1K2 { k1: 2, k2: 2 }, 18, 19).unwrap();
        assert_eq!(rows[0].argmax_exponents, vec![8]);
        assert_eq!(rows[1].argmax_exponents, vec![9]);
        assert!(rows.iter().all(|r| r.log_concave && r.unimodal));
    }
}
