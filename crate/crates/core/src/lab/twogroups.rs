//! Rational classes of the dihedral, semidihedral and generalized
//! quaternion groups of order `2^(n+1)`.

use std::collections::BTreeSet;

use serde_json::json;

use super::CheckOutcome;
use crate::analysis::Analysis;
use crate::error::{LabError, TableError};
use crate::families::Family;

/// Checks, for each of the three families, that the rational classes are
/// exactly those of `1`, `y^(2^(n-1))`, `x`, `xy` and `y^(2^(n-2))`, where `y`
/// generates the cyclic subgroup of index 2 and `x` is the other generator.
pub fn maximal_class_2group_check(n: u32) -> Result<Vec<CheckOutcome>, LabError> {
    if !(3..=13).contains(&n) {
        return Err(LabError::InvalidParameter(format!("n = {n} is outside 3..=13")));
    }
    let mut out = Vec::new();
    for family in [Family::Dihedral(n), Family::Semidihedral(n), Family::Quaternion(n)] {
        let g = family.build()?;
        let name = g.name().to_string();
        let big = 1u64 << n;
        let gens = g.generators();
        let (y, x) = match (gens[0].order() == big, gens[1].order() == big) {
            (true, false) => (gens[0].clone(), gens[1].clone()),
            (false, true) => (gens[1].clone(), gens[0].clone()),
            _ => return Err(LabError::InvalidParameter(format!("{name}: no unique generator of order {big}"))),
        };
        let a = Analysis::run(g).map_err(|e| match e {
            TableError::Group(e) => LabError::Group(e),
            e => LabError::InvalidParameter(e.to_string()),
        })?;
        let classes = a.table.class_data();
        let class_of = |p: &crate::perm::Permutation| {
            classes.class_of_element(a.group.index_of(p).unwrap()).unwrap()
        };
        let listed = [
            ("1", y.pow(0)),
            ("y^(2^(n-1))", y.pow(1 << (n - 1))),
            ("x", x.clone()),
            ("xy", x.compose(&y)),
            ("y^(2^(n-2))", y.pow(1 << (n - 2))),
        ];
        let expected: BTreeSet<usize> = listed.iter().map(|(_, p)| class_of(p)).collect();
        let actual: BTreeSet<usize> = a.report.rational_classes.iter().copied().collect();
        let witness = json!({
            "n": n,
            "classes": classes.len(),
            "rational_classes": actual,
            "listed_classes": listed.iter().map(|(l, p)| json!({ "element": l, "class": class_of(p) })).collect::<Vec<_>>(),
        });
        out.push(if expected.len() == 5 && expected == actual {
            CheckOutcome::pass(name, "maximal_class_2group", witness)
        } else {
            CheckOutcome::fail(name, "maximal_class_2group", witness)
        });
    }
    Ok(out)
}
