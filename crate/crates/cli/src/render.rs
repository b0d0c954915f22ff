//! Plain-text output: aligned tables and short summaries.

use std::collections::BTreeMap;
use std::fmt::Write;

use galrat_core::corpus::{ScanReport, Tally};
use galrat_core::lab::{self, CheckOutcome, ImageStructure, Status};
use galrat_core::Analysis;

pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    /// Left-aligned columns; the rest are right-aligned.
    left: Vec<bool>,
}

impl Table {
    pub fn new(header: &[&str]) -> Table {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            left: vec![false; header.len()],
        }
    }

    pub fn left(mut self, cols: &[usize]) -> Table {
        for &c in cols {
            self.left[c] = true;
        }
        self
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let n = self.header.len();
        let mut width: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for r in &self.rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, cells: &[String]| {
            let mut s = String::new();
            for (i, c) in cells.iter().enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                if self.left[i] {
                    let _ = write!(s, "{c:<w$}", w = width[i]);
                } else {
                    let _ = write!(s, "{c:>w$}", w = width[i]);
                }
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(&mut out, &self.header);
        let rule: Vec<String> = (0..n).map(|i| "-".repeat(width[i])).collect();
        line(&mut out, &rule);
        for r in &self.rows {
            line(&mut out, r);
        }
        out
    }
}

pub fn image_text(s: &ImageStructure) -> String {
    match s {
        ImageStructure::Trivial => "trivial".into(),
        ImageStructure::Cyclic { order } => format!("cyclic of order {order}"),
        ImageStructure::KleinNormal => "Klein, fixed-point-free".into(),
        ImageStructure::KleinWithTransposition => "Klein, with a transposition".into(),
        ImageStructure::Other { order, points, abelian } => format!(
            "order {order} on {points} points, {}",
            if *abelian { "abelian" } else { "non-abelian" }
        ),
    }
}

pub fn analysis_text(a: &Analysis) -> String {
    let r = &a.report;
    let cd = a.table.class_data();
    let mut out = String::new();
    let _ = writeln!(out, "group {}", r.group);
    let facts = [
        ("order", r.order.to_string()),
        ("exponent", r.exponent.to_string()),
        ("classes", r.class_count.to_string()),
        ("rational classes", r.rational_class_count().to_string()),
        ("rational characters", r.rational_character_count().to_string()),
        ("irrational classes", r.irrational_class_count.to_string()),
        ("irrational characters", r.irrational_character_count.to_string()),
        ("solvable", a.group.is_solvable().to_string()),
        ("Galois image", image_text(&lab::galois_image_structure(r))),
    ];
    let w = facts.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in facts {
        let _ = writeln!(out, "  {k:<w$}  {v}");
    }
    out.push('\n');
    let mut t = Table::new(&["class", "order", "size", "centralizer", "field degree", "rational"]);
    for i in 0..cd.len() {
        t.row(vec![
            i.to_string(),
            cd.element_order(i).to_string(),
            cd.size(i).to_string(),
            cd.centralizer_order(i).to_string(),
            r.class_field_degrees[i].to_string(),
            if r.rational_classes.contains(&i) { "yes" } else { "no" }.into(),
        ]);
    }
    out.push_str(&t.render());
    out.push('\n');
    out
}

pub fn tally_table(tallies: &BTreeMap<String, Tally>) -> String {
    let mut t = Table::new(&["check", "pass", "fail", "n/a"]).left(&[0]);
    for (name, c) in tallies {
        t.row(vec![
            name.clone(),
            c.pass.to_string(),
            c.fail.to_string(),
            c.not_applicable.to_string(),
        ]);
    }
    t.render()
}

fn failures_text(outcomes: &[&CheckOutcome]) -> String {
    let mut out = String::new();
    let failed: Vec<&&CheckOutcome> = outcomes.iter().filter(|o| o.status == Status::Fail).collect();
    if failed.is_empty() {
        return out;
    }
    out.push_str("\nfailures\n");
    for o in failed {
        let _ = writeln!(out, "  {} {}: {}", o.group, o.check, o.witness);
    }
    out
}

pub fn verify_text(tallies: &BTreeMap<String, Tally>, outcomes: &[CheckOutcome]) -> String {
    let mut out = tally_table(tallies);
    out.push_str(&failures_text(&outcomes.iter().collect::<Vec<_>>()));
    out
}

pub fn scan_text(scan: &ScanReport) -> String {
    let mut out = format!("{} groups\n\n", scan.groups.len());
    out.push_str(&tally_table(&scan.tallies));

    out.push_str("\ncounterexample fixtures\n");
    let mut t = Table::new(&["group", "status", "detail"]).left(&[0, 1, 2]);
    for o in &scan.counterexamples {
        let detail = match o.status {
            Status::NotApplicable => o.witness["reason"].as_str().unwrap_or("").to_string(),
            _ => o.witness["compared"]
                .as_object()
                .map(|m| {
                    m.iter()
                        .map(|(k, v)| format!("{k} {}", v["actual"]))
                        .collect::<Vec<_>>()
                        .join(", ")
                })
                .unwrap_or_default(),
        };
        t.row(vec![o.group.clone(), o.status.to_string(), detail]);
    }
    out.push_str(&t.render());

    out.push_str("\nnotable\n");
    let mut t = Table::new(&["group", "order", "irr classes", "irr characters", "reason"]).left(&[0, 4]);
    for n in &scan.notable {
        t.row(vec![
            n.group.clone(),
            n.order.to_string(),
            n.irrational_classes.to_string(),
            n.irrational_characters.to_string(),
            n.reason.clone(),
        ]);
    }
    out.push_str(&t.render());

    let all: Vec<&CheckOutcome> = scan
        .groups
        .iter()
        .flat_map(|g| &g.outcomes)
        .chain(&scan.counterexamples)
        .collect();
    out.push_str(&failures_text(&all));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let mut t = Table::new(&["name", "n"]).left(&[0]);
        t.row(vec!["C5".into(), "5".into()]);
        t.row(vec!["SD16".into(), "16".into()]);
        assert_eq!(t.render(), "name   n\n----  --\nC5     5\nSD16  16\n");
    }
}
