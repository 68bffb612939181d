use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use gammatch_core::bijections::{
    beta_domain, beta_inverse, beta_map, chain_match_permutations, dyck_to_syt, path_census, r_paths, syt_to_dyck,
    t_paths, theta_domain, theta_inverse, theta_map, two_row_syts, PathKind,
};
use gammatch_core::brute_force::u_from_inversion;
use gammatch_core::combinat::catalan;
use gammatch_core::fixtures::all_fixtures;
use gammatch_core::reciprocity::{
    closed_form_u, compositions, lowest_coeff, recursion_sequence, theta_h_direct, ClosedForm,
};
use gammatch_core::tabloids::{fixed_point_signed_sum, fixed_points, involution_step, objects_with_bricks, signed_sum_over_objects};
use gammatch_core::{FamilySpec, PatternSet, YPoly};

use crate::Suite;

/// Outcome of one check: `Err` carries the expected-vs-got detail.
type Outcome = Result<(), String>;

struct Report {
    failures: usize,
}

impl Report {
    fn record(&mut self, suite: &str, check: &str, outcome: Outcome) {
        match outcome {
            Ok(()) => println!("PASS {suite} {check}"),
            Err(detail) => {
                self.failures += 1;
                println!("FAIL {suite} {check}: {detail}");
            }
        }
    }
}

fn same(label: &str, expected: &YPoly, got: &YPoly) -> Outcome {
    if expected == got {
        Ok(())
    } else {
        Err(format!("{label}: expected {expected}, got {got}"))
    }
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

/// Runs the suite and reports whether every check passed.
pub(crate) fn run(suite: Suite, n_max: Option<usize>) -> bool {
    let mut report = Report { failures: 0 };
    let suites: &[Suite] = match suite {
        Suite::All => &[Suite::Tables, Suite::Triangle, Suite::Involution, Suite::Bijections, Suite::ClosedForms],
        Suite::Tables => &[Suite::Tables],
        Suite::Triangle => &[Suite::Triangle],
        Suite::Involution => &[Suite::Involution],
        Suite::Bijections => &[Suite::Bijections],
        Suite::ClosedForms => &[Suite::ClosedForms],
    };
    for s in suites {
        match s {
            Suite::Tables => tables(&mut report, n_max.unwrap_or(usize::MAX)),
            Suite::Triangle => triangle(&mut report, n_max.unwrap_or(8)),
            Suite::Involution => involution(&mut report, n_max.unwrap_or(6)),
            Suite::Bijections => bijections(&mut report, n_max.unwrap_or(4)),
            Suite::ClosedForms => closed_forms(&mut report, n_max.unwrap_or(30)),
            Suite::All => unreachable!("expanded above"),
        }
    }
    println!("{} failure(s)", report.failures);
    report.failures == 0
}

fn tables(report: &mut Report, n_max: usize) {
    for f in all_fixtures() {
        for e in &f.errata {
            println!("NOTE tables {} n={}: printed y^{} coefficient contradicts enumeration; checking against {}", f.id, e.n, e.exponent, e.corrected);
        }
        for (n, expected) in f.corrected_rows().into_iter().filter(|(n, _)| *n <= n_max) {
            let outcome = recursion_sequence(f.family, n).map_err(err).and_then(|u| same("U_n(-y)", &expected, &u[n].negate_y()));
            report.record("tables", &format!("{} n={n}", f.id), outcome);
        }
    }
}

fn triangle_families() -> Vec<FamilySpec> {
    use FamilySpec::*;
    vec![
        Pair1324And123,
        Patterns1324p { p: 5 },
        Patterns1324p { p: 6 },
        GammaK1K2 { k1: 2, k2: 2 },
        GammaK1K2 { k1: 2, k2: 3 },
        GammaK1K2 { k1: 3, k2: 2 },
        GammaK1K2 { k1: 6, k2: 4 },
        GammaK1K1S { k1: 2, s: 2 },
        GammaK1K1S { k1: 2, s: 3 },
        GammaK1K1S { k1: 3, s: 4 },
    ]
}

fn triangle_family(spec: FamilySpec, n_max: usize) -> Outcome {
    let g = spec.pattern_set().map_err(err)?;
    let inv = u_from_inversion(&g, n_max).map_err(err)?;
    let rec = recursion_sequence(spec, n_max).map_err(err)?;
    for n in 1..=n_max {
        same(&format!("n={n} recursion"), &inv[n], &rec[n])?;
        same(&format!("n={n} theta_h_direct"), &inv[n], &theta_h_direct(&g, n).map_err(err)?)?;
        same(&format!("n={n} fixed points"), &inv[n], &fixed_point_signed_sum(&g, n).map_err(err)?)?;
    }
    Ok(())
}

fn triangle(report: &mut Report, n_max: usize) {
    let outcomes: Vec<_> = triangle_families().into_par_iter().map(|spec| (spec, triangle_family(spec, n_max))).collect();
    for (spec, outcome) in outcomes {
        report.record("triangle", &format!("{spec} n<={n_max}"), outcome);
    }
}

fn involution_at(g: &PatternSet, n: usize) -> Outcome {
    let fixed: Result<Vec<_>, String> = compositions(n)
        .into_par_iter()
        .map(|bricks| {
            let mut fixed = Vec::new();
            for o in objects_with_bricks(g, &bricks).map_err(err)? {
                let image = involution_step(&o, g).map_err(err)?;
                if image == o {
                    fixed.push(o);
                    continue;
                }
                let (a, b) = (o.signed_weight(), image.signed_weight());
                if involution_step(&image, g).map_err(err)? != o || a.sign != -b.sign || a.y_exponent != b.y_exponent {
                    return Err(format!("not a sign-reversing, weight-preserving involution at\n{}", o.render()));
                }
            }
            Ok(fixed)
        })
        .collect();
    let by_filter: BTreeSet<_> = fixed?.into_iter().flatten().collect();
    let constructed: BTreeSet<_> = fixed_points(g, n).map_err(err)?.into_iter().collect();
    if by_filter != constructed {
        return Err(format!("{} fixed points by filtering, {} constructed", by_filter.len(), constructed.len()));
    }
    same("signed sum", &fixed_point_signed_sum(g, n).map_err(err)?, &signed_sum_over_objects(g, n).map_err(err)?)
}

fn involution(report: &mut Report, n_max: usize) {
    use FamilySpec::*;
    let families =
        [Pair1324And123, GammaK1K2 { k1: 2, k2: 2 }, GammaK1K1S { k1: 2, s: 2 }, GammaK1K2 { k1: 2, k2: 3 }, Patterns1324p { p: 5 }];
    for spec in families {
        let Ok(g) = spec.pattern_set() else { continue };
        for n in 1..=n_max {
            report.record("involution", &format!("{spec} n={n}"), involution_at(&g, n));
        }
    }
}

fn theta_round_trip(n: usize, k: usize) -> Outcome {
    let mut image = BTreeSet::new();
    for o in theta_domain(n, k).map_err(err)? {
        let p = theta_map(&o).map_err(err)?;
        if !p.is_t_path(n, k) || theta_inverse(&p).map_err(err)? != o {
            return Err(format!("fails at {p}"));
        }
        image.insert(p.to_string());
    }
    let all: BTreeSet<_> = t_paths(n, k).iter().map(|p| p.to_string()).collect();
    if image == all {
        Ok(())
    } else {
        Err(format!("hits {} of {} paths", image.len(), all.len()))
    }
}

fn beta_round_trip(n: usize, k: usize) -> Outcome {
    let mut image = BTreeSet::new();
    for o in beta_domain(n, k).map_err(err)? {
        let p = beta_map(&o).map_err(err)?;
        if !p.is_r_path(n, k) || beta_inverse(&p).map_err(err)? != o {
            return Err(format!("fails at {p}"));
        }
        image.insert(p.to_string());
    }
    let all: BTreeSet<_> = r_paths(n, k).iter().map(|p| p.to_string()).collect();
    if image == all {
        Ok(())
    } else {
        Err(format!("hits {} of {} paths", image.len(), all.len()))
    }
}

fn bijections(report: &mut Report, n_max: usize) {
    for r in 0..=n_max {
        let tableaux = two_row_syts(r);
        let outcome = if BigInt::from(tableaux.len()) != catalan(r as u64) {
            Err(format!("{} tableaux, expected {}", tableaux.len(), catalan(r as u64)))
        } else {
            tableaux
                .iter()
                .try_for_each(|t| match dyck_to_syt(&syt_to_dyck(t)) {
                    Ok(back) if &back == t => Ok(()),
                    _ => Err(format!("round trip fails at {}", syt_to_dyck(t))),
                })
        };
        report.record("bijections", &format!("phi r={r}"), outcome);
    }
    for n in 0..=n_max {
        for k in 0..=n {
            report.record("bijections", &format!("theta n={n} k={k}"), theta_round_trip(n, k));
            if n >= 1 {
                report.record("bijections", &format!("beta n={n} k={k}"), beta_round_trip(n, k));
            }
            report.record("bijections", &format!("census T n={n} k={k}"), path_census(PathKind::T, n, k).map(|_| ()).map_err(err));
            if n >= 1 {
                report.record("bijections", &format!("census R n={n} k={k}"), path_census(PathKind::R, n, k).map(|_| ()).map_err(err));
            }
        }
    }
    for k in 2..=(n_max + 1).min(6) {
        let outcome = chain_match_permutations(k).map_err(err).and_then(|v| {
            let expected = catalan(k as u64 - 1);
            if BigInt::from(v.len()) == expected {
                Ok(())
            } else {
                Err(format!("{} permutations, expected C_{} = {expected}", v.len(), k - 1))
            }
        });
        report.record("bijections", &format!("chain k={k}"), outcome);
    }
}

fn closed_forms(report: &mut Report, n_max: usize) {
    for spec in [FamilySpec::GammaK1K1S { k1: 2, s: 2 }, FamilySpec::Pair1324And123] {
        let outcome = recursion_sequence(spec, n_max).map_err(err).and_then(|rec| {
            (1..=n_max).try_for_each(|n| {
                let form = ClosedForm::for_family(spec, n).ok_or("no formula")?;
                same(&format!("n={n}"), &rec[n], &closed_form_u(form, n).map_err(err)?)
            })
        });
        report.record("closed-forms", &format!("{spec} n<={n_max}"), outcome);
    }
    for s in 3..=5 {
        let outcome = recursion_sequence(FamilySpec::GammaK1K1S { k1: 2, s }, n_max).map_err(err).and_then(|rec| {
            (1..=n_max).try_for_each(|n| {
                let Some(lc) = lowest_coeff(s, n).map_err(err)? else { return Ok(()) };
                let p = rec[n].negate_y();
                match p.lowest_exponent() {
                    Some(e) if e == lc.exponent && p.coeff(e) == lc.coeff => Ok(()),
                    _ => Err(format!("n={n}: formula {}y^{}, recursion {p}", lc.coeff, lc.exponent)),
                }
            })
        });
        report.record("closed-forms", &format!("lowest coefficients Gamma_{{2,2,{s}}} n<={n_max}"), outcome);
    }
}
