//! Published tables of `U_{Γ,n}(-y)`, kept as text under `fixtures/`.
//!
//! Each file has an `@family <id> [key=value ...]` header and rows
//! `n: polynomial`, transcribed as printed. `@erratum <n> <exponent> <value>`
//! records a printed coefficient that enumeration contradicts. Lines starting
//! with `#` are comments.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::YPoly;
use crate::reciprocity::{FamilyParams, FamilySpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub id: &'static str,
    pub family: FamilySpec,
    /// Rows `(n, U_n(-y))` as printed.
    pub rows: Vec<(usize, YPoly)>,
    pub errata: Vec<Erratum>,
}

/// A printed coefficient of `y^exponent` in row `n` that should read `corrected`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub n: usize,
    pub exponent: usize,
    pub corrected: BigInt,
}

impl Fixture {
    /// The rows with every erratum applied.
    pub fn corrected_rows(&self) -> Vec<(usize, YPoly)> {
        self.rows
            .iter()
            .map(|(n, p)| {
                let mut p = p.clone();
                for e in self.errata.iter().filter(|e| e.n == *n) {
                    let delta = &e.corrected - p.coeff(e.exponent);
                    p += &YPoly::monomial(delta, e.exponent);
                }
                (*n, p)
            })
            .collect()
    }
}

const SOURCES: &[(&str, &str)] = &[
    ("gamma22", include_str!("../fixtures/gamma22.txt")),
    ("gamma64", include_str!("../fixtures/gamma64.txt")),
    ("gamma222_even", include_str!("../fixtures/gamma222_even.txt")),
    ("gamma222_odd", include_str!("../fixtures/gamma222_odd.txt")),
    ("gamma223_3k", include_str!("../fixtures/gamma223_3k.txt")),
    ("gamma223_3k1", include_str!("../fixtures/gamma223_3k1.txt")),
    ("gamma223_3k2", include_str!("../fixtures/gamma223_3k2.txt")),
    ("pair1324_123", include_str!("../fixtures/pair1324_123.txt")),
];

/// Parses one fixture file.
pub fn parse_fixture(id: &'static str, text: &str) -> Result<Fixture> {
    let bad = |line: &str| Error::InvalidInput(format!("fixture {id}: bad line {line:?}"));
    let mut family = None;
    let mut rows = Vec::new();
    let mut errata = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        if let Some(rest) = line.strip_prefix("@family") {
            let mut words = rest.split_whitespace();
            let name = words.next().ok_or_else(|| bad(line))?;
            let mut params = FamilyParams::default();
            for kv in words {
                let (k, v) = kv.split_once('=').ok_or_else(|| bad(line))?;
                let v = Some(v.parse().map_err(|_| bad(line))?);
                match k {
                    "k1" => params.k1 = v,
                    "k2" => params.k2 = v,
                    "p" => params.p = v,
                    "s" => params.s = v,
                    _ => return Err(bad(line)),
                }
            }
            family = Some(FamilySpec::from_id(name, &params)?);
        } else if let Some(rest) = line.strip_prefix("@erratum") {
            let words: Vec<&str> = rest.split_whitespace().collect();
            let [n, exponent, corrected] = words[..] else { return Err(bad(line)) };
            errata.push(Erratum {
                n: n.parse().map_err(|_| bad(line))?,
                exponent: exponent.parse().map_err(|_| bad(line))?,
                corrected: corrected.parse().map_err(|_| bad(line))?,
            });
        } else {
            let (n, poly) = line.split_once(':').ok_or_else(|| bad(line))?;
            rows.push((n.trim().parse().map_err(|_| bad(line))?, poly.trim().parse()?));
        }
    }
    let family = family.ok_or_else(|| Error::InvalidInput(format!("fixture {id}: missing @family")))?;
    if let Some(e) = errata.iter().find(|e| !rows.iter().any(|(n, _)| *n == e.n)) {
        return Err(Error::InvalidInput(format!("fixture {id}: erratum for missing row {}", e.n)));
    }
    Ok(Fixture { id, family, rows, errata })
}

/// Every bundled table.
pub fn all_fixtures() -> Vec<Fixture> {
    SOURCES.iter().map(|(id, text)| parse_fixture(id, text).expect("bundled fixtures parse")).collect()
}

/// The bundled table with the given id.
pub fn fixture(id: &str) -> Option<Fixture> {
    all_fixtures().into_iter().find(|f| f.id == id)
}
