//! The group corpus: family-built groups plus fixture files, per-group
//! check runs, and the aggregate scan report.

use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::analysis::Analysis;
use crate::error::GroupError;
use crate::families::Family;
use crate::group::PermGroup;
use crate::ingest::{read_group_file, Expected, GroupSpec};
use crate::lab::{
    brauer_check, column_analysis_check, galois_image_structure, row_analysis_check, theorem_a_check,
    theorem_b_check, theorem_c_bound_check, CheckOutcome, GaloisView, ImageStructure, Status,
};
use crate::rationality::{check_rationality_equivalences, RationalityReport};

#[derive(Clone, Debug)]
pub enum Source {
    Builtin(Family),
    File { path: PathBuf, spec: GroupSpec },
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub source: Source,
    pub tags: Vec<String>,
    pub expected: Option<Expected>,
}

impl CorpusEntry {
    pub fn from_family(family: Family) -> CorpusEntry {
        CorpusEntry {
            name: family.name(),
            source: Source::Builtin(family),
            tags: vec!["builtin".to_string()],
            expected: None,
        }
    }

    pub fn from_spec(spec: GroupSpec, path: &Path) -> CorpusEntry {
        CorpusEntry {
            name: spec.name.clone(),
            tags: spec.tags.clone(),
            expected: spec.expected.clone(),
            source: Source::File {
                path: path.to_path_buf(),
                spec,
            },
        }
    }

    /// `builtin:<family>` or the file path.
    pub fn source_label(&self) -> String {
        match &self.source {
            Source::Builtin(f) => format!("builtin:{f}"),
            Source::File { path, .. } => path.display().to_string(),
        }
    }

    /// Order known without building the group, if any.
    pub fn nominal_order(&self) -> Option<u64> {
        match &self.source {
            Source::Builtin(f) => Some(f.order()),
            Source::File { .. } => self.expected.as_ref().and_then(|e| e.order),
        }
    }

    pub fn build(&self) -> Result<PermGroup, GroupError> {
        match &self.source {
            Source::Builtin(f) => f.build(),
            Source::File { spec, .. } => spec.build(),
        }
    }
}

/// Family-built groups: cyclic groups up to order 64, the maximal-class
/// 2-groups up to order 64, symmetric groups up to `S5`, `A4`, `A5`, the
/// Klein group, the Frobenius groups of orders 20 and 21, products of two
/// cyclic groups up to order 64 and a few other direct products.
pub fn builtin() -> Vec<CorpusEntry> {
    use Family::*;
    let prod = |a: Family, b: Family| DirectProduct(Box::new(a), Box::new(b));
    let mut fams: Vec<Family> = (1..=64).map(Cyclic).collect();
    fams.extend((2..=5).map(Dihedral));
    fams.extend((3..=5).map(Semidihedral));
    fams.extend((2..=5).map(Quaternion));
    fams.extend((3..=5).map(Symmetric));
    fams.extend([Alternating(4), Alternating(5), Klein, Frobenius(20), Frobenius(21)]);
    for m in 2..=8u32 {
        for n in m..=64 / m {
            fams.push(prod(Cyclic(m), Cyclic(n)));
        }
    }
    let c = Cyclic;
    fams.extend([
        prod(prod(c(2), c(2)), c(2)),
        prod(prod(c(2), c(2)), c(4)),
        prod(prod(c(2), c(4)), c(4)),
        prod(prod(c(2), c(2)), c(8)),
        prod(prod(c(3), c(3)), c(3)),
        prod(prod(prod(c(2), c(2)), c(2)), c(2)),
        prod(Symmetric(3), c(2)),
        prod(Symmetric(3), c(3)),
        prod(Symmetric(3), Symmetric(3)),
        prod(Dihedral(2), c(2)),
        prod(Quaternion(2), c(2)),
        prod(Quaternion(2), c(3)),
        prod(Alternating(4), c(2)),
        prod(Frobenius(21), c(3)),
        prod(Frobenius(20), c(3)),
    ]);
    fams.into_iter().map(CorpusEntry::from_family).collect()
}

/// Fixture directory of the source tree.
pub fn default_fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Every `.json` and `.jsonl` group file directly inside `dir`, in file
/// name order. Subdirectories are not searched.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>, GroupError> {
    let read = std::fs::read_dir(dir).map_err(|e| GroupError::Malformed(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = Vec::new();
    for item in read {
        let path = item.map_err(|e| GroupError::Malformed(format!("{}: {e}", dir.display())))?.path();
        let ext = path.extension().and_then(|e| e.to_str());
        if path.is_file() && matches!(ext, Some("json") | Some("jsonl")) {
            paths.push(path);
        }
    }
    paths.sort();
    let mut out = Vec::new();
    for path in paths {
        for spec in read_group_file(&path)? {
            out.push(CorpusEntry::from_spec(spec, &path));
        }
    }
    Ok(out)
}

/// Builtin entries followed by those of `dir`; names must be unique.
pub fn assemble(dir: Option<&Path>) -> Result<Vec<CorpusEntry>, GroupError> {
    let mut entries = builtin();
    if let Some(dir) = dir {
        entries.extend(load_dir(dir)?);
    }
    let mut seen = HashSet::new();
    for e in &entries {
        if !seen.insert(e.name.as_str()) {
            return Err(GroupError::Malformed(format!("duplicate corpus entry `{}` ({})", e.name, e.source_label())));
        }
    }
    Ok(entries)
}

/// Entries of order at most `max_order`; entries without a nominal order
/// are built to find out.
pub fn select(entries: &[CorpusEntry], max_order: u64) -> Vec<CorpusEntry> {
    entries
        .iter()
        .filter(|e| match e.nominal_order() {
            Some(n) => n <= max_order,
            None => e.build().is_ok_and(|g| g.order() as u64 <= max_order),
        })
        .cloned()
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupCheck {
    TheoremA,
    TheoremB,
    TheoremC,
    Brauer,
    ColumnAnalysis,
    RowAnalysis,
    Orthogonality,
    Equivalence,
    Expected,
}

impl GroupCheck {
    pub const ALL: [GroupCheck; 9] = [
        GroupCheck::TheoremA,
        GroupCheck::TheoremB,
        GroupCheck::TheoremC,
        GroupCheck::Brauer,
        GroupCheck::ColumnAnalysis,
        GroupCheck::RowAnalysis,
        GroupCheck::Orthogonality,
        GroupCheck::Equivalence,
        GroupCheck::Expected,
    ];

    pub fn run(self, entry: &CorpusEntry, a: &Analysis) -> CheckOutcome {
        let name = entry.name.as_str();
        match self {
            GroupCheck::TheoremA => theorem_a_check(&a.report),
            GroupCheck::TheoremB => theorem_b_check(a.group.is_solvable(), &a.report),
            GroupCheck::TheoremC => theorem_c_bound_check(&a.report),
            GroupCheck::Brauer => brauer_check(name, &a.model),
            GroupCheck::ColumnAnalysis => column_analysis_check(&GaloisView::new(&a.table, &a.model)),
            GroupCheck::RowAnalysis => row_analysis_check(&GaloisView::new(&a.table, &a.model)),
            GroupCheck::Orthogonality => match a.table.validate() {
                Ok(()) => CheckOutcome::pass(
                    name,
                    "orthogonality",
                    json!({ "classes": a.table.len(), "degrees": a.table.degrees() }),
                ),
                Err(msg) => CheckOutcome::fail(name, "orthogonality", json!({ "error": msg })),
            },
            GroupCheck::Equivalence => {
                let eqs = check_rationality_equivalences(&a.group, &a.table, &a.model);
                match eqs.iter().find(|e| !e.agree) {
                    Some(bad) => CheckOutcome::fail(name, "equivalence", serde_json::to_value(bad).unwrap()),
                    None => CheckOutcome::pass(name, "equivalence", json!({ "classes": eqs.len() })),
                }
            }
            GroupCheck::Expected => expected_check(name, entry.expected.as_ref(), &a.report),
        }
    }
}

/// Compares every number present in `expected` with the computed report.
pub fn expected_check(name: &str, expected: Option<&Expected>, r: &RationalityReport) -> CheckOutcome {
    let Some(e) = expected else {
        return CheckOutcome::not_applicable(name, "expected", "no expected numbers");
    };
    let pairs: [(&str, Option<u64>, u64); 7] = [
        ("order", e.order, r.order),
        ("exponent", e.exponent, r.exponent),
        ("classes", e.classes.map(|x| x as u64), r.class_count as u64),
        ("rational_classes", e.rational_classes.map(|x| x as u64), r.rational_class_count() as u64),
        ("rational_characters", e.rational_characters.map(|x| x as u64), r.rational_character_count() as u64),
        ("irrational_classes", e.irrational_classes.map(|x| x as u64), r.irrational_class_count as u64),
        ("irrational_characters", e.irrational_characters.map(|x| x as u64), r.irrational_character_count as u64),
    ];
    let mut compared = serde_json::Map::new();
    let mut mismatches = Vec::new();
    for (field, want, got) in pairs {
        let Some(want) = want else { continue };
        compared.insert(field.to_string(), json!({ "expected": want, "actual": got }));
        if want != got {
            mismatches.push(field);
        }
    }
    if compared.is_empty() {
        return CheckOutcome::not_applicable(name, "expected", "no expected numbers");
    }
    let w = json!({ "compared": compared, "mismatches": mismatches, "provenance": e.provenance });
    if mismatches.is_empty() {
        CheckOutcome::pass(name, "expected", w)
    } else {
        CheckOutcome::fail(name, "expected", w)
    }
}

/// Everything recorded for one corpus entry.
#[derive(Clone, Debug, Serialize)]
pub struct GroupRecord {
    pub name: String,
    pub source: String,
    pub tags: Vec<String>,
    pub solvable: Option<bool>,
    pub image_structure: Option<ImageStructure>,
    pub report: Option<RationalityReport>,
    pub outcomes: Vec<CheckOutcome>,
    /// Set when the group could not be built or analyzed; such a record
    /// also carries a failing `analysis` outcome.
    pub error: Option<String>,
}

pub fn analyze_entry(entry: &CorpusEntry) -> Result<Analysis, String> {
    let mut group = entry.build().map_err(|e| e.to_string())?;
    group.set_name(entry.name.clone());
    Analysis::run(group).map_err(|e| e.to_string())
}

pub fn process_entry(entry: &CorpusEntry, checks: &[GroupCheck]) -> GroupRecord {
    let mut rec = GroupRecord {
        name: entry.name.clone(),
        source: entry.source_label(),
        tags: entry.tags.clone(),
        solvable: None,
        image_structure: None,
        report: None,
        outcomes: Vec::new(),
        error: None,
    };
    match analyze_entry(entry) {
        Ok(a) => {
            rec.solvable = Some(a.group.is_solvable());
            rec.image_structure = Some(galois_image_structure(&a.report));
            rec.outcomes = checks.iter().map(|c| c.run(entry, &a)).collect();
            rec.report = Some(a.report);
        }
        Err(msg) => {
            rec.outcomes.push(CheckOutcome::fail(&entry.name, "analysis", json!({ "error": msg })));
            rec.error = Some(msg);
        }
    }
    rec
}

/// Runs `checks` on every entry in parallel; records come back sorted by
/// name, so output does not depend on scheduling.
pub fn process(entries: &[CorpusEntry], checks: &[GroupCheck]) -> Vec<GroupRecord> {
    let mut out: Vec<GroupRecord> = entries.par_iter().map(|e| process_entry(e, checks)).collect();
    out.sort_by_cached_key(|r| natural_key(&r.name));
    out
}

/// Sort key comparing digit runs numerically, so `sg_32_9` precedes
/// `sg_32_10`.
pub fn natural_key(name: &str) -> Vec<(String, u64)> {
    let mut key = Vec::new();
    let mut text = String::new();
    let mut chars = name.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_ascii_digit() {
            let mut n = 0u64;
            while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                n = n.saturating_mul(10).saturating_add(d as u64);
                chars.next();
            }
            key.push((std::mem::take(&mut text), n));
        } else {
            text.push(c);
            chars.next();
        }
    }
    if !text.is_empty() {
        key.push((text, 0));
    }
    key
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Notable {
    pub group: String,
    pub order: u64,
    pub reason: String,
    pub irrational_classes: usize,
    pub irrational_characters: usize,
}

/// Groups whose irrational class and character counts differ, and solvable
/// groups with exactly two irrational classes and order divisible by 7.
pub fn notable(records: &[GroupRecord]) -> Vec<Notable> {
    let mut out = Vec::new();
    for rec in records {
        let Some(r) = &rec.report else { continue };
        let mut flag = |reason: &str| {
            out.push(Notable {
                group: rec.name.clone(),
                order: r.order,
                reason: reason.to_string(),
                irrational_classes: r.irrational_class_count,
                irrational_characters: r.irrational_character_count,
            })
        };
        if r.irrational_class_count != r.irrational_character_count {
            flag("irrational class and character counts differ");
            if r.rational_character_count() <= 5 {
                flag("at most 5 rational characters, yet counts differ");
            }
        }
        if rec.solvable == Some(true) && r.irrational_class_count == 2 && r.order % 7 == 0 {
            flag("solvable, two irrational classes, 7 divides the order");
        }
    }
    out
}

/// Published counts for three SmallGroups members, checked against the
/// fixture of the same name.
#[derive(Clone, Copy, Debug)]
pub struct Claim {
    pub group: &'static str,
    pub rational_classes: Option<usize>,
    pub rational_characters: Option<usize>,
    pub irrational_classes: Option<usize>,
    pub irrational_characters: Option<usize>,
}

pub const CLAIMS: [Claim; 3] = [
    Claim {
        group: "sg_32_42",
        rational_classes: None,
        rational_characters: None,
        irrational_classes: Some(6),
        irrational_characters: Some(4),
    },
    Claim {
        group: "sg_32_15",
        rational_classes: Some(4),
        rational_characters: Some(6),
        irrational_classes: None,
        irrational_characters: None,
    },
    Claim {
        group: "sg_672_128",
        rational_classes: Some(4),
        rational_characters: Some(6),
        irrational_classes: None,
        irrational_characters: None,
    },
];

/// One outcome per claim; NotApplicable when the fixture is not among
/// `entries`.
pub fn counterexample_checks(entries: &[CorpusEntry]) -> Vec<CheckOutcome> {
    CLAIMS
        .iter()
        .map(|claim| {
            let Some(entry) = entries.iter().find(|e| e.name == claim.group) else {
                return CheckOutcome::not_applicable(claim.group, "counterexample", "fixture file absent");
            };
            let a = match analyze_entry(entry) {
                Ok(a) => a,
                Err(msg) => return CheckOutcome::fail(claim.group, "counterexample", json!({ "error": msg })),
            };
            let expected = Expected {
                rational_classes: claim.rational_classes,
                rational_characters: claim.rational_characters,
                irrational_classes: claim.irrational_classes,
                irrational_characters: claim.irrational_characters,
                ..Expected::default()
            };
            let mut out = expected_check(claim.group, Some(&expected), &a.report);
            out.check = "counterexample".to_string();
            out.witness["provenance"] = json!(entry.source_label());
            out
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

impl Tally {
    pub fn add(&mut self, s: Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::NotApplicable => self.not_applicable += 1,
        }
    }
}

/// Pass/Fail/NotApplicable counts per check name.
pub fn tally<'a>(outcomes: impl IntoIterator<Item = &'a CheckOutcome>) -> BTreeMap<String, Tally> {
    let mut out: BTreeMap<String, Tally> = BTreeMap::new();
    for o in outcomes {
        out.entry(o.check.clone()).or_default().add(o.status);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub groups: Vec<GroupRecord>,
    pub counterexamples: Vec<CheckOutcome>,
    pub notable: Vec<Notable>,
    pub tallies: BTreeMap<String, Tally>,
}

impl ScanReport {
    pub fn build(entries: &[CorpusEntry]) -> ScanReport {
        let groups = process(entries, &GroupCheck::ALL);
        let counterexamples = counterexample_checks(entries);
        let notable = notable(&groups);
        let tallies = tally(groups.iter().flat_map(|g| &g.outcomes).chain(&counterexamples));
        ScanReport {
            groups,
            counterexamples,
            notable,
            tallies,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.tallies.values().any(|t| t.fail > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names_are_unique_and_within_64() {
        let b = builtin();
        let names: HashSet<&str> = b.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names.len(), b.len());
        assert!(b.iter().all(|e| e.nominal_order().unwrap() <= 120));
        assert!(names.contains("C64") && names.contains("Q64") && names.contains("F21"));
    }

    #[test]
    fn expected_mismatch_is_a_failure() {
        let e = CorpusEntry::from_family("cyclic:5".parse().unwrap());
        let a = analyze_entry(&e).unwrap();
        let good = Expected {
            rational_classes: Some(1),
            rational_characters: Some(1),
            ..Expected::default()
        };
        assert_eq!(expected_check("C5", Some(&good), &a.report).status, Status::Pass);
        let bad = Expected {
            irrational_classes: Some(3),
            ..Expected::default()
        };
        let out = expected_check("C5", Some(&bad), &a.report);
        assert_eq!(out.status, Status::Fail);
        assert_eq!(out.witness["mismatches"][0], "irrational_classes");
        assert_eq!(out.witness["compared"]["irrational_classes"]["actual"], 4);
        assert_eq!(expected_check("C5", None, &a.report).status, Status::NotApplicable);
    }

    #[test]
    fn absent_fixtures_are_not_applicable() {
        for o in counterexample_checks(&builtin()) {
            assert_eq!(o.status, Status::NotApplicable);
        }
    }

    #[test]
    fn records_are_sorted_and_notable_flags_counts() {
        let entries: Vec<CorpusEntry> = ["cyclic:5", "symmetric:3", "cyclic:3"]
            .iter()
            .map(|s| CorpusEntry::from_family(s.parse().unwrap()))
            .collect();
        let recs = process(&entries, &GroupCheck::ALL);
        let names: Vec<&str> = recs.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["C3", "C5", "S3"]);
        let mut names = vec!["sg_32_10", "sg_32_9", "sg_4_2", "C12", "C2xC6"];
        names.sort_by_cached_key(|n| natural_key(n));
        assert_eq!(names, ["C2xC6", "C12", "sg_4_2", "sg_32_9", "sg_32_10"]);
        assert!(recs.iter().all(|r| r.outcomes.iter().all(|o| !o.is_fail())));
        assert!(notable(&recs).is_empty());
    }
}
