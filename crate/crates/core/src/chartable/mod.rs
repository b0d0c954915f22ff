//! Ordinary character tables with exact cyclotomic entries.
//!
//! Rows are irreducible characters and columns follow the class order of
//! [`ClassData`]. Computed tables sort rows by degree, then by the compact
//! JSON text of the row, so equal groups always give byte-identical tables.
//! Imported tables keep the row order they were given.

mod dixon;
mod io;

use std::collections::HashSet;

use num_integer::Integer;

use crate::classes::ClassData;
use crate::cyclo::lift::{Accumulator, IntLift};
use crate::cyclo::{Cyclo, CycloJson, GaloisElement};
use crate::error::TableError;
use crate::group::PermGroup;

pub use io::{ClassJson, TableJson};

/// The prime and the `F_p` root of unity identified with `zeta_e` during a
/// Dixon-Schneider run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootChoice {
    pub prime: u64,
    pub exponent: u64,
    /// Image of `zeta_e` in `F_p`.
    pub root: u64,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    name: String,
    classes: ClassData,
    rows: Vec<Vec<Cyclo>>,
    /// Lifts of every entry to `Z[x]/(x^e - 1)`, `e = exp(G)`.
    lifts: Vec<Vec<IntLift>>,
    root: Option<RootChoice>,
}

impl PartialEq for CharacterTable {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.rows == other.rows
            && self.classes.group_order() == other.classes.group_order()
            && self.classes.exponent() == other.classes.exponent()
            && self.classes.sizes() == other.classes.sizes()
            && self.classes.power_table() == other.classes.power_table()
            && (0..self.len()).all(|i| self.classes.element_order(i) == other.classes.element_order(i))
    }
}

impl CharacterTable {
    pub fn compute(group: &PermGroup) -> Result<CharacterTable, TableError> {
        let classes = ClassData::compute(group);
        Self::compute_with_classes(group, classes)
    }

    pub fn compute_with_classes(
        group: &PermGroup,
        classes: ClassData,
    ) -> Result<CharacterTable, TableError> {
        let out = dixon::compute(group, &classes)?;
        let table = CharacterTable {
            name: group.name().to_string(),
            classes,
            rows: out.rows,
            lifts: out.lifts,
            root: Some(out.root),
        };
        table
            .validate()
            .map_err(|e| TableError::InternalInconsistency(format!("{}: {e}", table.name)))?;
        Ok(table)
    }

    /// Builds a table from externally supplied data, re-validating every
    /// invariant.
    pub fn from_parts(
        name: impl Into<String>,
        classes: ClassData,
        rows: Vec<Vec<Cyclo>>,
    ) -> Result<CharacterTable, TableError> {
        let e = classes.exponent() as u32;
        let k = classes.len();
        if rows.len() != k || rows.iter().any(|r| r.len() != k) {
            return Err(TableError::ValidationFailed(format!(
                "table is not square: {} rows for {k} classes",
                rows.len()
            )));
        }
        let mut lifts = Vec::with_capacity(k);
        for (a, row) in rows.iter().enumerate() {
            let mut lr = Vec::with_capacity(k);
            for (b, z) in row.iter().enumerate() {
                let l = IntLift::from_cyclo(z, e).ok_or_else(|| {
                    TableError::ValidationFailed(format!(
                        "entry ({a}, {b}) = {z} is not an integral element of Q(zeta_{e})"
                    ))
                })?;
                lr.push(l);
            }
            lifts.push(lr);
        }
        let table = CharacterTable {
            name: name.into(),
            classes,
            rows,
            lifts,
            root: None,
        };
        table.validate().map_err(TableError::ValidationFailed)?;
        Ok(table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn class_data(&self) -> &ClassData {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn order(&self) -> u64 {
        self.classes.group_order()
    }

    pub fn exponent(&self) -> u64 {
        self.classes.exponent()
    }

    pub fn rows(&self) -> &[Vec<Cyclo>] {
        &self.rows
    }

    pub fn row(&self, chi: usize) -> &[Cyclo] {
        &self.rows[chi]
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclo {
        &self.rows[chi][class]
    }

    pub fn lift(&self, chi: usize, class: usize) -> &IntLift {
        &self.lifts[chi][class]
    }

    pub fn root_choice(&self) -> Option<RootChoice> {
        self.root
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows
            .iter()
            .map(|r| {
                r[0].to_integer()
                    .and_then(|d| u64::try_from(d).ok())
                    .expect("validated degree")
            })
            .collect()
    }

    /// Checks every table invariant exactly; the error names the first
    /// violation found.
    pub fn validate(&self) -> Result<(), String> {
        let cd = &self.classes;
        let k = cd.len();
        let order = cd.group_order();
        let e = cd.exponent();
        if self.rows.len() != k || self.rows.iter().any(|r| r.len() != k) {
            return Err(format!("table is not square for {k} classes"));
        }
        validate_class_metadata(cd)?;

        for (a, row) in self.rows.iter().enumerate() {
            for (b, z) in row.iter().enumerate() {
                if e % z.conductor() as u64 != 0 {
                    return Err(format!(
                        "entry ({a}, {b}) has conductor {} not dividing exp(G) = {e}",
                        z.conductor()
                    ));
                }
                if !z.has_integral_coeffs() {
                    return Err(format!("entry ({a}, {b}) = {z} is not an algebraic integer"));
                }
            }
        }

        let mut degree_squares = 0u64;
        for (a, row) in self.rows.iter().enumerate() {
            let d = row[0]
                .to_integer()
                .and_then(|d| u64::try_from(d).ok())
                .filter(|&d| d > 0 && order % d == 0)
                .ok_or_else(|| format!("row {a} has identity value {} which is not a degree", row[0]))?;
            degree_squares += d * d;
        }
        if degree_squares != order {
            return Err(format!("sum of squared degrees is {degree_squares}, expected {order}"));
        }
        let one = Cyclo::one();
        if !self.rows.iter().any(|r| r.iter().all(|z| *z == one)) {
            return Err("no trivial character".into());
        }
        self.check_first_orthogonality()?;
        self.check_second_orthogonality()?;
        self.check_galois_stability()?;
        Ok(())
    }

    fn check_first_orthogonality(&self) -> Result<(), String> {
        let k = self.len();
        let e = self.exponent() as u32;
        for a in 0..k {
            for b in a..k {
                let mut acc = Accumulator::new(e);
                for i in 0..k {
                    acc.add_product_conj(&self.lifts[a][i], &self.lifts[b][i], self.classes.size(i) as i64);
                }
                let s = acc.finish().unwrap_or_else(|| {
                    (0..k)
                        .map(|i| {
                            Cyclo::from_integer(self.classes.size(i) as i64)
                                * &self.rows[a][i]
                                * self.rows[b][i].conj()
                        })
                        .sum()
                });
                let expect = if a == b { self.order() as i64 } else { 0 };
                if s != Cyclo::from_integer(expect) {
                    return Err(format!(
                        "first orthogonality fails for rows ({a}, {b}): got {s}, expected {expect}"
                    ));
                }
            }
        }
        Ok(())
    }

    fn check_second_orthogonality(&self) -> Result<(), String> {
        let k = self.len();
        let e = self.exponent() as u32;
        for i in 0..k {
            for j in i..k {
                let mut acc = Accumulator::new(e);
                for a in 0..k {
                    acc.add_product_conj(&self.lifts[a][i], &self.lifts[a][j], 1);
                }
                let s = acc.finish().unwrap_or_else(|| {
                    (0..k).map(|a| &self.rows[a][i] * &self.rows[a][j].conj()).sum()
                });
                let expect = if i == j {
                    self.classes.centralizer_order(i) as i64
                } else {
                    0
                };
                if s != Cyclo::from_integer(expect) {
                    return Err(format!(
                        "second orthogonality fails for classes ({i}, {j}): got {s}, expected {expect}"
                    ));
                }
            }
        }
        Ok(())
    }

    /// For each generator `r` of the units mod `exp(G)`: applying
    /// `zeta -> zeta^r` to a row gives the row composed with the power map
    /// `x -> x^r`, and that row is again in the table. Both properties pass
    /// from generators to the whole unit group.
    fn check_galois_stability(&self) -> Result<(), String> {
        let k = self.len();
        let rows: HashSet<&[Cyclo]> = self.rows.iter().map(|r| r.as_slice()).collect();
        for sigma in GaloisElement::unit_generators(self.exponent() as u32) {
            let r = sigma.r() as i64;
            for (a, row) in self.rows.iter().enumerate() {
                let image: Vec<Cyclo> = (0..k).map(|i| row[self.classes.power_map(i, r)].clone()).collect();
                for i in 0..k {
                    let direct = sigma.apply(&row[i]).map_err(|e| e.to_string())?;
                    if direct != image[i] {
                        return Err(format!(
                            "Galois action {sigma} on row {a} disagrees with the power map at class {i}"
                        ));
                    }
                }
                if !rows.contains(image.as_slice()) {
                    return Err(format!("Galois image of row {a} under {sigma} is not a row"));
                }
            }
        }
        Ok(())
    }
}

/// Compact JSON text of a row; the tie-break key of the row order.
pub(crate) fn row_key(row: &[Cyclo]) -> String {
    let js: Vec<CycloJson> = row.iter().map(CycloJson::from).collect();
    serde_json::to_string(&js).expect("plain data serializes")
}

fn validate_class_metadata(cd: &ClassData) -> Result<(), String> {
    let k = cd.len();
    if k == 0 {
        return Err("no classes".into());
    }
    if cd.size(0) != 1 || cd.element_order(0) != 1 {
        return Err("class 0 must be the identity class".into());
    }
    let total: u64 = cd.sizes().iter().sum();
    if total != cd.group_order() {
        return Err(format!("class sizes sum to {total}, not |G| = {}", cd.group_order()));
    }
    let e = cd.exponent();
    let lcm = (0..k).fold(1u64, |acc, i| acc.lcm(&cd.element_order(i)));
    if lcm != e {
        return Err(format!("exponent {e} is not the lcm {lcm} of the element orders"));
    }
    for i in 0..k {
        let (s, o) = (cd.size(i), cd.element_order(i));
        if s == 0 || cd.group_order() % s != 0 {
            return Err(format!("class {i} size {s} does not divide |G|"));
        }
        if cd.power_table()[i].len() != e as usize {
            return Err(format!("class {i} power map has the wrong length"));
        }
        if cd.power_table()[i].iter().any(|&c| c as usize >= k) {
            return Err(format!("class {i} power map points outside the table"));
        }
        if cd.power_map(i, 1) != i || cd.power_map(i, 0) != 0 {
            return Err(format!("class {i} power map is not the identity at 1 or trivial at 0"));
        }
        for d in 1..o {
            if cd.power_map(i, d as i64) == 0 {
                return Err(format!("class {i} power {d} is trivial below the element order {o}"));
            }
        }
        for r in 1..e as i64 {
            let j = cd.power_map(i, r);
            if (r as u64).gcd(&o) == 1 && (cd.size(j) != s || cd.element_order(j) != o) {
                return Err(format!("class {i} power {r} changes the class size or order"));
            }
            if j != cd.power_map(i, r % o as i64) {
                return Err(format!("class {i} power map is not periodic mod {o}"));
            }
            if cd.element_order(j) != o / (r as u64).gcd(&o) {
                return Err(format!("class {i} power {r} has the wrong element order"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn table(f: &str) -> CharacterTable {
        let g: Family = f.parse().unwrap();
        CharacterTable::compute(&g.build().unwrap()).unwrap()
    }

    #[test]
    fn s3() {
        let t = table("symmetric:3");
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        assert!(t.rows().iter().flatten().all(|z| z.is_rational()));
    }

    #[test]
    fn c3() {
        let t = table("cyclic:3");
        let z = Cyclo::zeta(3, 1);
        let z2 = Cyclo::zeta(3, 2);
        let one = Cyclo::one();
        let mut rows = t.rows().to_vec();
        rows.sort_by_key(|r| row_key(r));
        let mut expect = vec![
            vec![one.clone(), one.clone(), one.clone()],
            vec![one.clone(), z.clone(), z2.clone()],
            vec![one.clone(), z2, z],
        ];
        expect.sort_by_key(|r| row_key(r));
        assert_eq!(rows, expect);
    }

    #[test]
    fn q8_is_rational() {
        let t = table("quaternion:2");
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
        assert!(t.rows().iter().flatten().all(|z| z.to_integer().is_some()));
    }

    #[test]
    fn perturbed_table_is_rejected() {
        let t = table("symmetric:3");
        let mut rows = t.rows().to_vec();
        rows[2][1] = Cyclo::from_integer(1);
        let err = CharacterTable::from_parts("S3", t.class_data().clone(), rows).unwrap_err();
        assert!(matches!(err, TableError::ValidationFailed(_)));
    }

    #[test]
    fn computed_rows_are_in_canonical_order() {
        for f in ["dihedral:3", "alternating:5", "frobenius:21", "cyclic:12"] {
            let t = table(f);
            let keys: Vec<(u64, String)> = t
                .rows()
                .iter()
                .zip(t.degrees())
                .map(|(r, d)| (d, row_key(r)))
                .collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]), "{f}");
        }
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::from_generators("1", 1, vec![]).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(t.rows(), &[vec![Cyclo::one()]]);
    }
}
