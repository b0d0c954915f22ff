//! Mechanical checks of statements about rational and irrational classes
//! and characters. Checks whose hypothesis does not hold return
//! [`Status::NotApplicable`] instead of a vacuous pass.

mod actions;
mod eigen;
mod sn;
mod theorems;
mod twogroups;

use serde::Serialize;
use serde_json::Value;

pub use actions::{
    brauer_check, column_analysis_check, galois_image_structure, row_analysis_check, GaloisView,
    ImageStructure,
};
pub use eigen::eigenvalue_property_check;
pub use sn::{
    abelian_subgroups, abelian_sn_check, elementary_divisors, s4_abelian_scan, s5_fixed_point_free_scan,
    symmetric_group,
};
pub use theorems::{theorem_a_check, theorem_b_check, theorem_c_bound_check};
pub use twogroups::maximal_class_2group_check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "Pass",
            Status::Fail => "Fail",
            Status::NotApplicable => "NotApplicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub group: String,
    pub check: String,
    pub status: Status,
    pub witness: Value,
}

impl CheckOutcome {
    pub fn new(group: impl Into<String>, check: &str, status: Status, witness: Value) -> Self {
        CheckOutcome {
            group: group.into(),
            check: check.to_string(),
            status,
            witness,
        }
    }

    pub fn pass(group: impl Into<String>, check: &str, witness: Value) -> Self {
        Self::new(group, check, Status::Pass, witness)
    }

    pub fn fail(group: impl Into<String>, check: &str, witness: Value) -> Self {
        Self::new(group, check, Status::Fail, witness)
    }

    /// `reason` names the hypothesis that does not hold.
    pub fn not_applicable(group: impl Into<String>, check: &str, reason: &str) -> Self {
        Self::new(group, check, Status::NotApplicable, serde_json::json!({ "reason": reason }))
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}
