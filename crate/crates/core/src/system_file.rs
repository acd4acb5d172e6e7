//! JSON system descriptions with named voters.
//!
//! ```json
//! {
//!   "voters": ["SNP", "Labour", "Conservative", "LibDem", "Green"],
//!   "rows": [{ "quota": 65, "weights": [47, 46, 17, 16, 2] }],
//!   "forbidden": [["SNP", "Labour"]]
//! }
//! ```
//!
//! `explicit_mwcs` (lists of voter names) may replace `rows`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::voting::{DecisionRule, ForbiddenCoalition, VotingSystem, WeightRow};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowSpec {
    pub quota: u64,
    pub weights: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub voters: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<RowSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit_mwcs: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub forbidden: Vec<Vec<String>>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSystem(msg.into())
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            invalid(format!("line {}, column {}: {e}", e.line(), e.column()))
        })
    }

    fn index_of(&self, name: &str, field: &str) -> Result<usize> {
        self.voters
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| invalid(format!("{field}: unknown voter `{name}`")))
    }

    fn name_set(&self, names: &[String], field: &str) -> Result<BTreeSet<usize>> {
        let mut set = BTreeSet::new();
        for name in names {
            if !set.insert(self.index_of(name, field)?) {
                return Err(invalid(format!("{field}: `{name}` listed twice")));
            }
        }
        Ok(set)
    }

    /// Adds a forbidden coalition given by voter names.
    pub fn forbid(&mut self, names: Vec<String>) {
        self.forbidden.push(names);
    }

    /// Validates the description and builds the voting system.
    pub fn to_system(&self) -> Result<VotingSystem> {
        if self.voters.is_empty() {
            return Err(invalid("voters: at least one voter is required"));
        }
        let mut seen = BTreeSet::new();
        for v in &self.voters {
            if v.trim().is_empty() {
                return Err(invalid("voters: names must be non-empty"));
            }
            if !seen.insert(v) {
                return Err(invalid(format!("voters: duplicate name `{v}`")));
            }
        }
        let rule = match (&self.rows, &self.explicit_mwcs) {
            (Some(_), Some(_)) => {
                return Err(invalid("give either `rows` or `explicit_mwcs`, not both"))
            }
            (None, None) => return Err(invalid("one of `rows` or `explicit_mwcs` is required")),
            (Some(rows), None) => {
                if rows.is_empty() {
                    return Err(invalid("rows: at least one row is required"));
                }
                let mut out = Vec::with_capacity(rows.len());
                for (r, row) in rows.iter().enumerate() {
                    if row.quota == 0 {
                        return Err(invalid(format!("rows[{r}].quota: must be at least 1")));
                    }
                    if row.weights.len() != self.voters.len() {
                        return Err(invalid(format!(
                            "rows[{r}].weights: {} weights for {} voters",
                            row.weights.len(),
                            self.voters.len()
                        )));
                    }
                    out.push(WeightRow::new(row.quota, row.weights.clone()));
                }
                DecisionRule::Weighted(out)
            }
            (None, Some(mwcs)) => DecisionRule::Coalitions(
                mwcs.iter()
                    .enumerate()
                    .map(|(i, names)| {
                        let field = format!("explicit_mwcs[{i}]");
                        if names.is_empty() {
                            return Err(invalid(format!("{field}: empty coalition")));
                        }
                        self.name_set(names, &field)
                    })
                    .collect::<Result<_>>()?,
            ),
        };
        let forbidden = self
            .forbidden
            .iter()
            .enumerate()
            .map(|(i, names)| {
                let field = format!("forbidden[{i}]");
                let set = self.name_set(names, &field)?;
                if set.len() < 2 {
                    return Err(invalid(format!("{field}: needs at least two voters")));
                }
                ForbiddenCoalition::new(set)
            })
            .collect::<Result<Vec<_>>>()?;
        VotingSystem::new(self.voters.clone(), rule, forbidden)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SCOTTISH: &str = r#"{
        "voters": ["SNP", "Labour", "Conservative", "LibDem", "Green"],
        "rows": [{"quota": 65, "weights": [47, 46, 17, 16, 2]}],
        "forbidden": [["SNP", "Labour"]]
    }"#;

    #[test]
    fn parses_named_system() {
        let sys = SystemFile::parse(SCOTTISH).unwrap().to_system().unwrap();
        assert_eq!(sys.n(), 5);
        assert_eq!(sys.forbidden().len(), 1);
        assert_eq!(sys.forbidden()[0].mask(), 0b11);
    }

    #[test]
    fn zero_quota_names_field() {
        let text = SCOTTISH.replace("65", "0");
        let err = SystemFile::parse(&text).unwrap().to_system().unwrap_err();
        assert!(err.to_string().contains("rows[0].quota"), "{err}");
    }

    #[test]
    fn unknown_forbidden_voter() {
        let text = SCOTTISH.replace(r#"["SNP", "Labour"]"#, r#"["SNP", "Tory"]"#);
        let err = SystemFile::parse(&text).unwrap().to_system().unwrap_err();
        assert!(err.to_string().contains("forbidden[0]: unknown voter `Tory`"), "{err}");
    }

    #[test]
    fn syntax_error_has_position() {
        let err = SystemFile::parse("{\n \"voters\": [1,").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn explicit_mwcs() {
        let text = r#"{"voters": ["A", "B", "C"], "explicit_mwcs": [["A", "B"], ["C"]]}"#;
        let sys = SystemFile::parse(text).unwrap().to_system().unwrap();
        assert!(matches!(sys.rule(), DecisionRule::Coalitions(s) if s.len() == 2));
        let both = r#"{"voters": ["A"], "explicit_mwcs": [["A"]], "rows": []}"#;
        assert!(SystemFile::parse(both).unwrap().to_system().is_err());
    }

    #[test]
    fn mismatched_weights() {
        let text = r#"{"voters": ["A", "B"], "rows": [{"quota": 1, "weights": [1]}]}"#;
        let err = SystemFile::parse(text).unwrap().to_system().unwrap_err();
        assert!(err.to_string().contains("rows[0].weights"), "{err}");
    }
}
