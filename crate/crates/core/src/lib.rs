//! Consecutive pattern avoidance through the reciprocity method.
//!
//! For a set `Γ` of patterns, `NM_{Γ,n}(x, y)` sums `x^lrmin y^(1+des)` over
//! permutations of `S_n` with no consecutive `Γ`-match, and
//! `NM_Γ(t, x, y) = (1 / U_Γ(t, y))^x`. The crate computes `U_{Γ,n}(y)` by
//! brute-force inversion, by brick tabloid fixed points and by explicit
//! recursions, and checks them against each other.

pub mod analysis;
pub mod bijections;
pub mod brute_force;
pub mod combinat;
pub mod egf;
pub mod error;
pub mod fixtures;
pub mod perm;
pub mod poly;
pub mod reciprocity;
pub mod tabloids;

pub use error::{Error, Result};
pub use perm::{PatternSet, Permutation};
pub use poly::{XYPoly, YPoly};
pub use reciprocity::FamilySpec;
pub use tabloids::FilledBrickTabloid;
