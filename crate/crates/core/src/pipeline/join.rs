use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{LabeledPair, ParaphrasePair};
use crate::error::{Error, Result};
use crate::labeling::LabelSource;
use crate::taxonomy::Emotion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RejectReason {
    /// A side was scored but no emotion cleared the threshold.
    Unlabeled,
    /// A side has no score record at all.
    MissingScores,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejected {
    pub id: String,
    pub reason: RejectReason,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct JoinResult {
    pub labeled: Vec<LabeledPair>,
    pub rejected: Vec<Rejected>,
}

/// Per-side decisions keyed by pair id.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SideLabels {
    pub input: HashMap<String, Option<Emotion>>,
    pub target: HashMap<String, Option<Emotion>>,
}

/// Splits one score or label file into input and target decisions. Record
/// ids must be `<pair id>:input` or `<pair id>:target`.
pub fn side_labels(records: &[LabelSource], threshold: f64) -> Result<SideLabels> {
    let mut out = SideLabels::default();
    for rec in records {
        let id = rec.id();
        let (side, pair_id) = if let Some(p) = id.strip_suffix(":input") {
            (&mut out.input, p)
        } else if let Some(p) = id.strip_suffix(":target") {
            (&mut out.target, p)
        } else {
            return Err(Error::InvalidPair {
                id: id.to_string(),
                reason: "score id must end in `:input` or `:target`",
            });
        };
        let label = rec.decide(threshold)?.label;
        if side.insert(pair_id.to_string(), label).is_some() {
            return Err(Error::DuplicateId(id.to_string()));
        }
    }
    Ok(out)
}

/// Attaches both labels to every pair that has them. A missing score record
/// takes precedence over a missing label when reporting rejections.
pub fn join_labels(pairs: &[ParaphrasePair], labels: &SideLabels) -> JoinResult {
    let mut out = JoinResult::default();
    for pair in pairs {
        let (input, target) = (labels.input.get(&pair.id), labels.target.get(&pair.id));
        let reason = match (input, target) {
            (Some(Some(e_i)), Some(Some(e_f))) => {
                out.labeled.push(LabeledPair::new(pair.clone(), *e_i, *e_f));
                continue;
            }
            (None, _) | (_, None) => RejectReason::MissingScores,
            _ => RejectReason::Unlabeled,
        };
        out.rejected.push(Rejected { id: pair.id.clone(), reason });
    }
    out
}
