use serde_json::json;

use super::CheckOutcome;
use crate::cyclo::prime_factors;
use crate::rationality::RationalityReport;

fn counts(r: &RationalityReport) -> serde_json::Value {
    json!({
        "rational_classes": r.rational_class_count(),
        "rational_characters": r.rational_character_count(),
        "irrational_classes": r.irrational_class_count,
        "irrational_characters": r.irrational_character_count,
    })
}

/// At most five irrational classes forces `|cl_Q(G)| = |Irr_Q(G)|`.
pub fn theorem_a_check(report: &RationalityReport) -> CheckOutcome {
    let name = report.group.as_str();
    if report.irrational_class_count > 5 {
        let mut w = counts(report);
        w["reason"] = json!("more than five irrational classes");
        return CheckOutcome::new(name, "theorem_a", super::Status::NotApplicable, w);
    }
    if report.rational_class_count() == report.rational_character_count() {
        CheckOutcome::pass(name, "theorem_a", counts(report))
    } else {
        CheckOutcome::fail(name, "theorem_a", counts(report))
    }
}

/// A solvable group with exactly 2 or 3 irrational classes has order
/// divisible only by primes in `{2, 3, 5, 7}`.
pub fn theorem_b_check(solvable: bool, report: &RationalityReport) -> CheckOutcome {
    let name = report.group.as_str();
    if !solvable {
        return CheckOutcome::not_applicable(name, "theorem_b", "group is not solvable");
    }
    let n = report.irrational_class_count;
    if n != 2 && n != 3 {
        return CheckOutcome::not_applicable(name, "theorem_b", "number of irrational classes is not 2 or 3");
    }
    let primes = prime_factors(report.order);
    let w = json!({
        "irrational_classes": n,
        "primes": primes,
        "seven_with_two_irrational_classes": n == 2 && report.order % 7 == 0,
    });
    if primes.iter().all(|p| [2, 3, 5, 7].contains(p)) {
        CheckOutcome::pass(name, "theorem_b", w)
    } else {
        CheckOutcome::fail(name, "theorem_b", w)
    }
}

/// `#Irr_irr <= n^2 / 2` for `n` irrational classes, and symmetrically.
pub fn theorem_c_bound_check(report: &RationalityReport) -> CheckOutcome {
    let name = report.group.as_str();
    let cl = report.irrational_class_count;
    let ch = report.irrational_character_count;
    let w = counts(report);
    if 2 * ch <= cl * cl && 2 * cl <= ch * ch {
        CheckOutcome::pass(name, "theorem_c", w)
    } else {
        CheckOutcome::fail(name, "theorem_c", w)
    }
}
