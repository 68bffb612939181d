use gammatch_core::analysis::survey as survey_rows;
use gammatch_core::brute_force::{nm_polynomial, nm_polynomial_y, nm_y_polynomials_dp, u_from_inversion, u_from_inversion_dp};
use gammatch_core::egf::{egf_formal_x_power, egf_reciprocal, EgfSeries};
use gammatch_core::reciprocity::{closed_form_u, recursion_sequence, ClosedForm};
use gammatch_core::tabloids::fixed_point_signed_sum;
use gammatch_core::{Error, FamilySpec, Result, XYPoly, YPoly};

use crate::{ComputeArgs, Format, Method, SurveyArgs, What};

const CONJECTURE_NOTE: &str = "finite check of the log-concavity conjecture, not a proof";

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Recursion => "recursion",
        Method::Inversion => "inversion",
        Method::PrefixCount => "prefix-count",
        Method::FixedPoints => "fixed-points",
        Method::ClosedForm => "closed-form",
    }
}

fn unavailable(method: Method, spec: FamilySpec) -> Error {
    Error::MethodUnavailable { method: method_name(method).into(), family: spec.to_string() }
}

/// `U_m` for a single `m` by one method.
fn u_single(spec: FamilySpec, method: Method, m: usize) -> Result<YPoly> {
    if m == 0 {
        return Ok(YPoly::one());
    }
    match method {
        Method::FixedPoints => {
            let g = spec.pattern_set()?;
            if g.max_descents() > 1 {
                return Err(unavailable(method, spec));
            }
            fixed_point_signed_sum(&g, m)
        }
        Method::ClosedForm => {
            let form = ClosedForm::for_family(spec, m).ok_or_else(|| unavailable(method, spec))?;
            closed_form_u(form, m)
        }
        _ => Ok(u_sequence(spec, method, m)?.swap_remove(m)),
    }
}

/// `(U_0, ..., U_n)` by one method.
fn u_sequence(spec: FamilySpec, method: Method, n: usize) -> Result<Vec<YPoly>> {
    match method {
        Method::Recursion => recursion_sequence(spec, n),
        Method::Inversion => u_from_inversion(&spec.pattern_set()?, n),
        Method::PrefixCount => u_from_inversion_dp(&spec.pattern_set()?, n),
        Method::FixedPoints | Method::ClosedForm => (0..=n).map(|m| u_single(spec, method, m)).collect(),
    }
}

fn nm_reciprocal(spec: FamilySpec, method: Method, n: usize) -> Result<EgfSeries<YPoly>> {
    egf_reciprocal(&EgfSeries::new(u_sequence(spec, method, n)?)?, n)
}

pub(crate) fn run(args: &ComputeArgs) -> Result<()> {
    let spec = args.family.spec()?;
    let n = args.n;
    let out = match args.what {
        What::U => {
            let u = u_single(spec, args.method, n)?;
            render_y(&if args.raw { u } else { u.negate_y() }, args.format)
        }
        What::Nm => {
            let p = match args.method {
                Method::Inversion => nm_polynomial_y(n, &spec.pattern_set()?)?,
                Method::PrefixCount => nm_y_polynomials_dp(&spec.pattern_set()?, n)?.swap_remove(n),
                m => nm_reciprocal(spec, m, n)?.coeff(n).clone(),
            };
            render_y(&p, args.format)
        }
        What::NmXy => {
            let p = match args.method {
                Method::Inversion => nm_polynomial(n, &spec.pattern_set()?)?,
                m => egf_formal_x_power(&nm_reciprocal(spec, m, n)?, n)?.coeff(n).clone(),
            };
            render_xy(&p, args.format)
        }
    };
    print!("{out}");
    Ok(())
}

fn render_y(p: &YPoly, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(p).expect("polynomials serialize")),
        _ => render_xy(&XYPoly::from(p), format),
    }
}

fn render_xy(p: &XYPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", serde_json::to_string(p).expect("polynomials serialize")),
        Format::Csv => {
            let mut s = String::from("x,y,c\n");
            for ((i, j), c) in p.terms() {
                s.push_str(&format!("{i},{j},{c}\n"));
            }
            s
        }
    }
}

pub(crate) fn survey(args: &SurveyArgs) -> Result<()> {
    let spec = args.family.spec()?;
    if args.n_min > args.n_max {
        return Err(Error::InvalidInput(format!("--n-min {} exceeds --n-max {}", args.n_min, args.n_max)));
    }
    let rows = survey_rows(spec, args.n_min, args.n_max)?;
    match args.format {
        Format::Json => {
            let doc = serde_json::json!({ "note": CONJECTURE_NOTE, "rows": rows });
            println!("{}", serde_json::to_string_pretty(&doc).expect("rows serialize"));
        }
        Format::Csv => {
            println!("# {CONJECTURE_NOTE}");
            println!("family,n,log_concave,unimodal,argmax_exponents");
            for r in &rows {
                let argmax: Vec<String> = r.argmax_exponents.iter().map(|e| e.to_string()).collect();
                println!("\"{}\",{},{},{},{}", r.family, r.n, r.log_concave, r.unimodal, argmax.join(";"));
            }
        }
        Format::Text => {
            println!("{spec}: U_n(-y), {CONJECTURE_NOTE}");
            println!("{:>4}  {:<11}  {:<8}  argmax", "n", "log-concave", "unimodal");
            for r in &rows {
                let argmax: Vec<String> = r.argmax_exponents.iter().map(|e| format!("y^{e}")).collect();
                println!("{:>4}  {:<11}  {:<8}  {}", r.n, r.log_concave, r.unimodal, argmax.join(", "));
            }
        }
    }
    Ok(())
}
