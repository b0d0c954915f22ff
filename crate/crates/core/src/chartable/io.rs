//! Table JSON:
//! `{"group", "order", "exponent", "classes": [{"size", "order", "power_map": {k: idx}}], "rows"}`.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CharacterTable;
use crate::classes::{ClassData, ClassInfo};
use crate::cyclo::{Cyclo, CycloJson};
use crate::error::TableError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub group: String,
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassJson>,
    pub rows: Vec<Vec<CycloJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub size: u64,
    pub order: u64,
    /// Class of `x^k` for `k = 0 .. exponent - 1`; a JSON object keyed by `k`.
    #[serde(serialize_with = "ser_power_map", deserialize_with = "de_power_map")]
    pub power_map: Vec<u32>,
}

fn ser_power_map<S: Serializer>(pm: &[u32], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(pm.len()))?;
    for (k, v) in pm.iter().enumerate() {
        map.serialize_entry(&k.to_string(), v)?;
    }
    map.end()
}

fn de_power_map<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u32>, D::Error> {
    use serde::de::Error;
    let raw: BTreeMap<String, u32> = BTreeMap::deserialize(d)?;
    let mut keyed = BTreeMap::new();
    for (k, v) in raw {
        let k: usize = k
            .parse()
            .map_err(|_| D::Error::custom(format!("power map key {k:?} is not an integer")))?;
        keyed.insert(k, v);
    }
    if keyed.keys().copied().ne(0..keyed.len()) {
        return Err(D::Error::custom("power map keys must be exactly 0 .. exponent - 1"));
    }
    Ok(keyed.into_values().collect())
}

impl From<&CharacterTable> for TableJson {
    fn from(t: &CharacterTable) -> Self {
        let cd = t.class_data();
        TableJson {
            group: t.name().to_string(),
            order: cd.group_order(),
            exponent: cd.exponent(),
            classes: (0..cd.len())
                .map(|i| ClassJson {
                    size: cd.size(i),
                    order: cd.element_order(i),
                    power_map: cd.power_table()[i].clone(),
                })
                .collect(),
            rows: t
                .rows()
                .iter()
                .map(|r| r.iter().map(CycloJson::from).collect())
                .collect(),
        }
    }
}

impl CharacterTable {
    pub fn to_json(&self) -> TableJson {
        TableJson::from(self)
    }

    pub fn export_json(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("plain data serializes")
    }

    pub fn import_json(text: &str) -> Result<CharacterTable, TableError> {
        let j: TableJson = serde_json::from_str(text)?;
        CharacterTable::from_json(&j)
    }

    pub fn from_json(j: &TableJson) -> Result<CharacterTable, TableError> {
        if j.exponent == 0 || j.exponent > u32::MAX as u64 {
            return Err(TableError::ValidationFailed(format!("bad exponent {}", j.exponent)));
        }
        for (i, c) in j.classes.iter().enumerate() {
            if c.power_map.len() as u64 != j.exponent {
                return Err(TableError::ValidationFailed(format!(
                    "class {i} power map has {} entries, expected {}",
                    c.power_map.len(),
                    j.exponent
                )));
            }
            if c.order == 0 || j.exponent % c.order != 0 {
                return Err(TableError::ValidationFailed(format!(
                    "class {i} element order {} does not divide the exponent",
                    c.order
                )));
            }
        }
        let classes = ClassData::from_metadata(
            j.order,
            j.exponent,
            j.classes
                .iter()
                .map(|c| ClassInfo {
                    representative: None,
                    size: c.size,
                    element_order: c.order,
                })
                .collect(),
            j.classes.iter().map(|c| c.power_map.clone()).collect(),
        );
        let rows = j
            .rows
            .iter()
            .map(|r| r.iter().map(Cyclo::try_from).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        CharacterTable::from_parts(j.group.clone(), classes, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn round_trip() {
        for f in ["symmetric:3", "cyclic:5", "dihedral:3", "quaternion:2"] {
            let g = f.parse::<Family>().unwrap().build().unwrap();
            let t = CharacterTable::compute(&g).unwrap();
            let text = t.export_json();
            let back = CharacterTable::import_json(&text).unwrap();
            assert_eq!(back, t);
            assert_eq!(back.export_json(), text);
        }
    }

    #[test]
    fn power_map_keys_are_numeric() {
        let g = Family::Cyclic(12).build().unwrap();
        let text = CharacterTable::compute(&g).unwrap().export_json();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let pm = v["classes"][1]["power_map"].as_object().unwrap();
        assert_eq!(pm.len(), 12);
        assert!(pm.contains_key("11"));
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(CharacterTable::import_json("{"), Err(TableError::Json(_))));
        let g = Family::Symmetric(3).build().unwrap();
        let mut j = CharacterTable::compute(&g).unwrap().to_json();
        j.classes[1].power_map.pop();
        assert!(matches!(CharacterTable::from_json(&j), Err(TableError::ValidationFailed(_))));
    }
}
