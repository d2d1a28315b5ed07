//! The product formulas, orbit identity, gamma expansions and generating
//! function as executable checks against enumeration.

mod batch;
mod checks;
mod closed_forms;
mod egf;
mod report;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::enumerate::EnumError;

pub use batch::{verify_all, verify_batch};
pub use checks::{
    brenti_check, corollary2_check, corollary2_report, corollary3_check, corollary4_check,
    expand_about_any_center, fixed_point_decomposition, gamma_strings, lemma1_check,
    theorem1_check, theorem2_check, theorem2_gamma, theorem4_check, theorem5_check, theorem6_check,
    GammaWitness,
};
pub use closed_forms::{
    brenti, cval_substitution, joint_substitutions, theorem1_joint, theorem6_cval,
};
pub use egf::{egf_check, egf_snki, SnkiTable};
pub use report::{Claim, Instance, Verdict, VerificationReport, Witness};

#[derive(Debug, Error)]
pub enum FormulaError {
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Unsupported(String),
}
