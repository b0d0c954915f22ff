//! Group description files: one JSON object per file, or one per line in
//! `.jsonl` files.
//!
//! `{"name": str, "degree": int, "generators": [[int, ...], ...],
//!   "tags": [str], "expected": {...}}` with 0-based images.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::GroupError;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Reference numbers shipped with a fixture; every present field is compared
/// against the computed value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rational_classes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rational_characters: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irrational_classes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irrational_characters: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub tags: Vec<String>,
    pub expected: Option<Expected>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<PermGroup, GroupError> {
        PermGroup::from_generators(self.name.clone(), self.degree, self.generators.clone())
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::json!({
            "name": self.name,
            "degree": self.degree,
            "generators": self.generators.iter().map(|g| g.images().to_vec()).collect::<Vec<_>>(),
            "tags": self.tags,
        });
        if let Some(e) = &self.expected {
            v["expected"] = serde_json::to_value(e).unwrap();
        }
        v
    }
}

fn malformed(at: &str, msg: impl std::fmt::Display) -> GroupError {
    GroupError::Malformed(format!("{at}: {msg}"))
}

/// Parses one group object. `at` prefixes every error message (file and
/// line), followed by the offending field path.
pub fn parse_group(text: &str, at: &str) -> Result<GroupSpec, GroupError> {
    let v: Value = serde_json::from_str(text).map_err(|e| {
        malformed(at, format!("invalid JSON at line {} column {}: {e}", e.line(), e.column()))
    })?;
    group_from_value(&v, at)
}

pub fn group_from_value(v: &Value, at: &str) -> Result<GroupSpec, GroupError> {
    let obj = v.as_object().ok_or_else(|| malformed(at, "expected a JSON object"))?;
    for key in obj.keys() {
        if !["name", "degree", "generators", "tags", "expected"].contains(&key.as_str()) {
            return Err(malformed(at, format!("unknown field `{key}`")));
        }
    }
    let name = obj
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| malformed(at, "field `name` must be a string"))?
        .to_string();
    let degree = obj
        .get("degree")
        .and_then(Value::as_u64)
        .filter(|&d| d >= 1 && d <= u32::MAX as u64)
        .ok_or_else(|| malformed(at, "field `degree` must be a positive integer"))? as usize;
    let gens = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed(at, "field `generators` must be an array"))?;
    let mut generators = Vec::with_capacity(gens.len());
    for (gi, g) in gens.iter().enumerate() {
        let field = format!("generators[{gi}]");
        let arr = g
            .as_array()
            .ok_or_else(|| malformed(at, format!("`{field}` must be an array of point indices")))?;
        if arr.len() != degree {
            return Err(malformed(
                at,
                format!("`{field}` has {} images but the degree is {degree}", arr.len()),
            ));
        }
        let mut images = Vec::with_capacity(degree);
        for (pi, p) in arr.iter().enumerate() {
            let x = p
                .as_u64()
                .filter(|&x| (x as usize) < degree)
                .ok_or_else(|| malformed(at, format!("`{field}[{pi}]` = {p} is not a point below {degree}")))?;
            images.push(x as u32);
        }
        let perm = Permutation::from_images(images).map_err(|e| malformed(at, format!("`{field}`: {e}")))?;
        generators.push(perm);
    }
    let tags = match obj.get("tags") {
        None => Vec::new(),
        Some(t) => t
            .as_array()
            .and_then(|a| a.iter().map(|x| x.as_str().map(String::from)).collect::<Option<Vec<_>>>())
            .ok_or_else(|| malformed(at, "field `tags` must be an array of strings"))?,
    };
    let expected = match obj.get("expected") {
        None | Some(Value::Null) => None,
        Some(e) => Some(
            serde_json::from_value::<Expected>(e.clone())
                .map_err(|err| malformed(at, format!("field `expected`: {err}")))?,
        ),
    };
    Ok(GroupSpec {
        name,
        degree,
        generators,
        tags,
        expected,
    })
}

/// Reads a `.json` file (one group) or a `.jsonl` file (one group per
/// non-blank line).
pub fn read_group_file(path: &Path) -> Result<Vec<GroupSpec>, GroupError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GroupError::Malformed(format!("{}: {e}", path.display())))?;
    let shown = path.display().to_string();
    if path.extension().is_some_and(|e| e == "jsonl") {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| parse_group(l, &format!("{shown}:{}", i + 1)))
            .collect()
    } else {
        Ok(vec![parse_group(&text, &shown)?])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_group() {
        let g = parse_group(
            r#"{"name": "S3", "degree": 3, "generators": [[1,2,0],[1,0,2]], "tags": ["x"],
                "expected": {"order": 6, "provenance": "hand"}}"#,
            "t",
        )
        .unwrap();
        assert_eq!(g.build().unwrap().order(), 6);
        assert_eq!(g.expected.unwrap().order, Some(6));
    }

    #[test]
    fn errors_name_the_field() {
        let bad = |s: &str| parse_group(s, "f.jsonl:7").unwrap_err().to_string();
        let e = bad(r#"{"name": "x", "degree": 3, "generators": [[0,0,1]]}"#);
        assert!(e.contains("f.jsonl:7") && e.contains("generators[0]"), "{e}");
        let e = bad(r#"{"name": "x", "degree": 3, "generators": [[0,1,2],[0,1,5]]}"#);
        assert!(e.contains("generators[1][2]"), "{e}");
        let e = bad(r#"{"name": "x", "degree": 3, "generators": [[0,1]]}"#);
        assert!(e.contains("degree is 3"), "{e}");
        let e = bad(r#"{"name": "x", "degree": 3, "generators": []"#);
        assert!(e.contains("line 1"), "{e}");
        let e = bad(r#"{"name": "x", "degree": 3, "generators": [], "expected": {"oops": 1}}"#);
        assert!(e.contains("expected"), "{e}");
        let e = bad(r#"{"degree": 3, "generators": []}"#);
        assert!(e.contains("name"), "{e}");
    }

    #[test]
    fn round_trips_through_json() {
        let text = r#"{"name":"C2","degree":2,"generators":[[1,0]],"tags":[]}"#;
        let g = parse_group(text, "t").unwrap();
        let again = parse_group(&g.to_json().to_string(), "t").unwrap();
        assert_eq!(g, again);
    }
}
