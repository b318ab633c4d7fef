//! Tabulated family data for the exceptional Weyl groups: the group attached
//! to each family, the lists `L(Γ'₀)` and `L'(Γ'₀)`, the almost special
//! labels, and the E8 dimension lists.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// The embedded data document, verbatim.
pub const DATA: &str = include_str!("../data/exceptional.json");

/// Family sizes with tabulated data.
pub const FAMILY_SIZES: [u32; 7] = [1, 2, 3, 4, 5, 11, 17];

/// The small groups that occur as `Γ_c`, `Γ'` or `Γ''`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GroupTag {
    S1,
    S2,
    S2Prime,
    S3,
    S3Prime,
    S4,
    S5,
    S2S2,
    S3S2,
    D8,
}

impl GroupTag {
    pub const ALL: [GroupTag; 10] = [
        GroupTag::S1,
        GroupTag::S2,
        GroupTag::S2Prime,
        GroupTag::S3,
        GroupTag::S3Prime,
        GroupTag::S4,
        GroupTag::S5,
        GroupTag::S2S2,
        GroupTag::S3S2,
        GroupTag::D8,
    ];

    pub fn order(self) -> u32 {
        match self {
            GroupTag::S1 => 1,
            GroupTag::S2 | GroupTag::S2Prime => 2,
            GroupTag::S3 | GroupTag::S3Prime => 6,
            GroupTag::S4 => 24,
            GroupTag::S5 => 120,
            GroupTag::S2S2 => 4,
            GroupTag::S3S2 => 12,
            GroupTag::D8 => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupTag::S1 => "S1",
            GroupTag::S2 => "S2",
            GroupTag::S2Prime => "S2'",
            GroupTag::S3 => "S3",
            GroupTag::S3Prime => "S3'",
            GroupTag::S4 => "S4",
            GroupTag::S5 => "S5",
            GroupTag::S2S2 => "S2S2",
            GroupTag::S3S2 => "S3S2",
            GroupTag::D8 => "D8",
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupTag::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| invalid(format!("unknown group tag {s:?}")))
    }
}

impl TryFrom<String> for GroupTag {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<GroupTag> for String {
    fn from(g: GroupTag) -> Self {
        g.name().to_string()
    }
}

/// An entry of an E8 dimension list; one entry is not known and is kept as
/// a placeholder, written `"?"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "serde_json::Value", into = "serde_json::Value")]
pub enum Dimension {
    Known(u32),
    Unknown,
}

impl Dimension {
    pub fn known(self) -> Option<u32> {
        match self {
            Dimension::Known(n) => Some(n),
            Dimension::Unknown => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Known(n) => write!(f, "{n}"),
            Dimension::Unknown => f.write_str("?"),
        }
    }
}

impl TryFrom<serde_json::Value> for Dimension {
    type Error = Error;

    fn try_from(v: serde_json::Value) -> Result<Self> {
        match &v {
            serde_json::Value::String(s) if s == "?" => Ok(Dimension::Unknown),
            serde_json::Value::Number(n) => n
                .as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .map(Dimension::Known)
                .ok_or_else(|| invalid(format!("bad dimension {v}"))),
            _ => Err(invalid(format!("bad dimension {v}"))),
        }
    }
}

impl From<Dimension> for serde_json::Value {
    fn from(d: Dimension) -> Self {
        match d {
            Dimension::Known(n) => n.into(),
            Dimension::Unknown => "?".into(),
        }
    }
}

/// The lists attached to one `Γ'₀`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeyLists {
    pub key: GroupTag,
    /// `L(Γ'₀)`: the groups `Γ''`.
    pub groups: Vec<GroupTag>,
    /// `L'(Γ'₀)`: labels `(x,σ)` of elements of `M(Γ_c)`, same order.
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e8_dims: Option<Vec<Dimension>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub size: u32,
    pub gamma: GroupTag,
    /// In the order the almost special labels are listed.
    pub keys: Vec<KeyLists>,
    pub almost_special: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DataDocument {
    pub version: u32,
    pub families: Vec<FamilyRecord>,
}

/// Outcome of the unique-maximum check for one key.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeyVerdict {
    pub key: GroupTag,
    pub orders: Vec<u32>,
    pub pass: bool,
}

fn document() -> &'static DataDocument {
    static DOC: OnceLock<DataDocument> = OnceLock::new();
    DOC.get_or_init(|| serde_json::from_str(DATA).expect("embedded family data parses"))
}

/// The parsed data document.
pub fn data() -> &'static DataDocument {
    document()
}

pub fn family(size: u32) -> Result<&'static FamilyRecord> {
    document()
        .families
        .iter()
        .find(|f| f.size == size)
        .ok_or(Error::UnknownFamily(size))
}

/// For every key, whether the largest group order in `L(Γ'₀)` occurs once
/// and in first position.
pub fn check_unique_max(record: &FamilyRecord) -> Vec<KeyVerdict> {
    record
        .keys
        .iter()
        .map(|k| {
            let orders: Vec<u32> = k.groups.iter().map(|g| g.order()).collect();
            let max = orders.iter().copied().max();
            let pass = match (max, orders.first()) {
                (Some(m), Some(&first)) => {
                    first == m && orders.iter().filter(|&&o| o == m).count() == 1
                }
                _ => false,
            };
            KeyVerdict {
                key: k.key,
                orders,
                pass,
            }
        })
        .collect()
}

/// First entry of each `L'(Γ'₀)`, in key order.
pub fn almost_special(record: &FamilyRecord) -> Vec<String> {
    record
        .keys
        .iter()
        .filter_map(|k| k.labels.first().cloned())
        .collect()
}

/// Shape checks: list lengths agree per key, keys are distinct, and the
/// stored almost special list equals the derived one.
pub fn check_record(record: &FamilyRecord) -> Result<()> {
    let mut seen = BTreeSet::new();
    for k in &record.keys {
        if !seen.insert(k.key) {
            return Err(Error::InternalConsistency(format!(
                "key {} repeated",
                k.key
            )));
        }
        if k.groups.len() != k.labels.len() {
            return Err(Error::InternalConsistency(format!(
                "key {}: {} groups but {} labels",
                k.key,
                k.groups.len(),
                k.labels.len()
            )));
        }
        if let Some(dims) = &k.e8_dims {
            if dims.len() != k.labels.len() {
                return Err(Error::InternalConsistency(format!(
                    "key {}: {} dimensions but {} labels",
                    k.key,
                    dims.len(),
                    k.labels.len()
                )));
            }
        }
    }
    if almost_special(record) != record.almost_special {
        return Err(Error::InternalConsistency(format!(
            "family {}: stored almost special list differs from first entries",
            record.size
        )));
    }
    Ok(())
}

/// The E8 dimension lists, keyed by `Γ'₀`. Only the family of size 17 has
/// them.
pub fn e8_lists(record: &FamilyRecord) -> Result<Vec<(GroupTag, Vec<Dimension>)>> {
    if record.size != 17 {
        return Err(invalid(format!(
            "dimension lists exist only for the family of size 17, not {}",
            record.size
        )));
    }
    record
        .keys
        .iter()
        .map(|k| {
            k.e8_dims.clone().map(|d| (k.key, d)).ok_or_else(|| {
                Error::InternalConsistency(format!("key {} has no dimensions", k.key))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn keys(record: &FamilyRecord) -> Vec<GroupTag> {
        record.keys.iter().map(|k| k.key).collect()
    }

    fn lists(record: &FamilyRecord, key: GroupTag) -> &KeyLists {
        record.keys.iter().find(|k| k.key == key).unwrap()
    }

    #[test]
    fn gamma_by_size() {
        use GroupTag::*;
        let expected = [
            (1, S1),
            (2, S2Prime),
            (3, S2),
            (4, S3Prime),
            (5, S3),
            (11, S4),
            (17, S5),
        ];
        for (size, gamma) in expected {
            assert_eq!(family(size).unwrap().gamma, gamma);
        }
        assert_eq!(family(6), Err(Error::UnknownFamily(6)));
    }

    #[test]
    fn group_orders() {
        use GroupTag::*;
        let orders: Vec<u32> = [S1, S2, S2Prime, S3, S3Prime, S4, S5, S2S2, S3S2, D8]
            .iter()
            .map(|g| g.order())
            .collect();
        assert_eq!(orders, vec![1, 2, 2, 6, 6, 24, 120, 4, 12, 8]);
    }

    #[test]
    fn record_examples() {
        use GroupTag::*;
        let f11 = family(11).unwrap();
        assert_eq!(lists(f11, S2S2).groups, vec![D8, S2S2]);
        let f17 = family(17).unwrap();
        assert_eq!(f17.almost_special.len(), 8);
        assert_eq!(f17.almost_special[6..], ["(g_4,1)", "(g_5,1)"]);
        let f1 = family(1).unwrap();
        assert_eq!(lists(f1, S1).groups, vec![S1]);
        assert_eq!(f1.almost_special, ["(1,1)"]);
    }

    #[test]
    fn unique_max_examples() {
        use GroupTag::*;
        let v17 = check_unique_max(family(17).unwrap());
        let s2 = v17.iter().find(|v| v.key == S2).unwrap();
        assert_eq!(s2.orders, vec![12, 4, 2]);
        assert!(s2.pass);
        let v11 = check_unique_max(family(11).unwrap());
        assert_eq!(
            v11.iter().find(|v| v.key == S2S2).unwrap().orders,
            vec![8, 4]
        );
        let v5 = check_unique_max(family(5).unwrap());
        assert_eq!(v5[0].orders, vec![6, 2, 1]);
        for size in FAMILY_SIZES {
            assert!(check_unique_max(family(size).unwrap())
                .iter()
                .all(|v| v.pass));
        }
    }

    #[test]
    fn unique_max_rejects_ties_and_late_maxima() {
        use GroupTag::*;
        let mut r = family(4).unwrap().clone();
        r.keys[0].groups = vec![S2, S3, S1];
        assert!(!check_unique_max(&r)[0].pass);
        r.keys[0].groups = vec![S3, S3Prime, S1];
        assert!(!check_unique_max(&r)[0].pass);
    }

    #[test]
    fn almost_special_examples() {
        assert_eq!(
            almost_special(family(4).unwrap()),
            ["(1,1)", "(g_2,1)", "(g_3,1)"]
        );
        assert_eq!(
            almost_special(family(11).unwrap()),
            [
                "(1,1)",
                "(g_2,1)",
                "(g'_2,1)",
                "(g_3,1)",
                "(g'_2,ε')",
                "(g_4,1)"
            ]
        );
        assert_eq!(almost_special(family(2).unwrap()), ["(1,1)", "(g_2,1)"]);
    }

    #[test]
    fn key_counts() {
        let counts: Vec<usize> = FAMILY_SIZES
            .iter()
            .map(|&s| family(s).unwrap().keys.len())
            .collect();
        assert_eq!(counts, vec![1, 2, 2, 3, 3, 6, 8]);
        for size in FAMILY_SIZES {
            check_record(family(size).unwrap()).unwrap();
        }
    }

    #[test]
    fn shared_lists_distinct_groups() {
        assert_eq!(family(2).unwrap().keys, family(3).unwrap().keys);
        assert_eq!(family(4).unwrap().keys, family(5).unwrap().keys);
        assert_ne!(family(2).unwrap().gamma, family(3).unwrap().gamma);
    }

    #[test]
    fn e8_examples() {
        use GroupTag::*;
        let f17 = family(17).unwrap();
        let e8 = e8_lists(f17).unwrap();
        let get = |k| e8.iter().find(|(key, _)| *key == k).unwrap().1.clone();
        let known = |v: Vec<Dimension>| v.into_iter().map(|d| d.known()).collect::<Vec<_>>();
        assert_eq!(known(get(S2)), vec![Some(7168), Some(5600), Some(448)]);
        assert_eq!(known(get(D8)), vec![Some(168)]);
        assert_eq!(known(get(S5)), vec![Some(420)]);
        assert_eq!(get(S1).last(), Some(&Dimension::Unknown));
        assert_eq!(keys(f17), vec![S1, S2, S2S2, S3, D8, S3S2, S4, S5]);
        assert!(e8_lists(family(11).unwrap()).is_err());
    }

    #[test]
    fn e8_dimensions_distinct() {
        let e8 = e8_lists(family(17).unwrap()).unwrap();
        let all: Vec<u32> = e8
            .iter()
            .flat_map(|(_, d)| d.iter().filter_map(|x| x.known()))
            .collect();
        let distinct: BTreeSet<u32> = all.iter().copied().collect();
        assert_eq!(all.len(), 17);
        assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn document_round_trips() {
        let doc = data();
        assert_eq!(doc.version, 1);
        let text = serde_json::to_string(doc).unwrap();
        let back: DataDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(&back, doc);
        assert!(text.contains("\"?\""));
    }
}
