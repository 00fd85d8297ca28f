//! Stable JSON form of a character table.
//!
//! ```json
//! {"format": 1, "prime": 3, "group_order": 72,
//!  "classes": [{"rep": [0,0,1,0,0,1], "size": 1, "centralizer": 72}, ...],
//!  "characters": [{"name": "trivial", "degree": 1, "indicator": 1,
//!                  "values": [{"n": 1, "coeffs": [["1","1"]]}, ...]}, ...]}
//! ```

use serde::{Deserialize, Serialize};

use crate::algebra::Cyclotomic;
use crate::character::CharacterTable;

/// Bumped whenever the document layout changes; readers reject other values.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    /// Canonical encoding `(v0, v1, a, b, c, d)` of the representative.
    pub rep: [u32; 6],
    pub size: u64,
    pub centralizer: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub name: String,
    pub degree: i64,
    pub indicator: i64,
    pub values: Vec<Cyclotomic>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub format: u32,
    pub prime: u32,
    pub group_order: u64,
    pub classes: Vec<ClassEntry>,
    pub characters: Vec<CharacterEntry>,
}

impl From<&CharacterTable> for TableDocument {
    fn from(table: &CharacterTable) -> Self {
        let ct = table.classes();
        TableDocument {
            format: FORMAT_VERSION,
            prime: table.prime(),
            group_order: ct.group_order() as u64,
            classes: (0..ct.len())
                .map(|k| ClassEntry {
                    rep: ct.rep(k).encoding(),
                    size: ct.size(k) as u64,
                    centralizer: ct.centralizer_order(k) as u64,
                })
                .collect(),
            characters: table
                .rows()
                .iter()
                .map(|r| CharacterEntry {
                    name: r.name.clone(),
                    degree: r.degree as i64,
                    indicator: r.indicator as i64,
                    values: r.function.values().to_vec(),
                })
                .collect(),
        }
    }
}

impl TableDocument {
    /// Shape checks for a document read back from disk.
    pub fn is_consistent(&self) -> bool {
        let n = self.classes.len();
        self.format == FORMAT_VERSION
            && self.characters.len() == n
            && self.characters.iter().all(|c| c.values.len() == n)
            && self.classes.iter().map(|c| c.size).sum::<u64>() == self.group_order
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::character_table;

    #[test]
    fn document_round_trip_p3() {
        let doc = TableDocument::from(&character_table(3).unwrap());
        assert_eq!(doc.format, 1);
        assert_eq!(doc.classes.len(), 6);
        assert_eq!(doc.classes[0].rep, [0, 0, 1, 0, 0, 1]);
        assert!(doc.is_consistent());
        let json = serde_json::to_string(&doc).unwrap();
        let back: TableDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn field_names_are_stable() {
        let doc = TableDocument::from(&character_table(3).unwrap());
        let v: serde_json::Value = serde_json::to_value(&doc).unwrap();
        for key in ["format", "prime", "group_order", "classes", "characters"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let row = &v["characters"][5];
        for key in ["name", "degree", "indicator", "values"] {
            assert!(row.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["classes"][0]["centralizer"], 72);
    }
}
