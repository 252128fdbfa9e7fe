//! Reconstruction of paraphrase corpora into sentiment-lowering
//! emotion-transition data.
//!
//! The stages run in order: [`join_labels`], [`filter_transitions`],
//! [`orient_lowering`], [`split`], [`cap_few_shot`], then [`make_prefix`].
//! Each stage is a pure function of its input and keeps input order.

mod case_study;
mod import;
mod join;
mod prefix;
mod split;
mod stats;
mod transform;

use std::collections::HashSet;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jsonl;
use crate::taxonomy::{range_of, Emotion, SentimentRange};

pub use case_study::{case_study, CaseStudyRecord, CASE_STUDY_FRACTION};
pub use import::{import_mrpc, import_paws, import_quora, import_tsv};
pub use join::{join_labels, side_labels, JoinResult, RejectReason, Rejected, SideLabels};
pub use prefix::{make_prefix, parse_prefix, parse_prefix_as, ParsedPrefix, PrefixStyle, PrefixedExample, Transition};
pub use split::{cap_few_shot, split, DEFAULT_CAP_TEST, DEFAULT_CAP_TRAIN, DEFAULT_TRAIN_FRACTION};
pub use stats::{compute_stats, DatasetStats};
pub use transform::{filter_transitions, orient_lowering, reconstruct, IntensityOrder, OrientOptions, Reconstruction};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Paws,
    Mrpc,
    Quora,
    #[default]
    Other,
}

/// A paraphrase pair `(t_i, t_f)`. Both texts are non-blank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct ParaphrasePair {
    pub id: String,
    pub input_text: String,
    pub target_text: String,
    pub source: Source,
}

#[derive(Deserialize)]
struct RawPair {
    id: String,
    input_text: String,
    target_text: String,
    #[serde(default)]
    source: Source,
}

impl TryFrom<RawPair> for ParaphrasePair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        ParaphrasePair::new(raw.id, raw.input_text, raw.target_text, raw.source)
    }
}

impl ParaphrasePair {
    pub fn new(id: String, input_text: String, target_text: String, source: Source) -> Result<ParaphrasePair> {
        if input_text.trim().is_empty() {
            return Err(Error::InvalidPair { id, reason: "input_text is blank" });
        }
        if target_text.trim().is_empty() {
            return Err(Error::InvalidPair { id, reason: "target_text is blank" });
        }
        Ok(ParaphrasePair { id, input_text, target_text, source })
    }
}

/// A paraphrase pair with both sides labelled. Ranges always agree with the
/// emotions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLabeledPair")]
pub struct LabeledPair {
    #[serde(flatten)]
    pub pair: ParaphrasePair,
    pub input_emotion: Emotion,
    pub target_emotion: Emotion,
    pub input_range: SentimentRange,
    pub target_range: SentimentRange,
}

#[derive(Deserialize)]
struct RawLabeledPair {
    #[serde(flatten)]
    pair: ParaphrasePair,
    input_emotion: Emotion,
    target_emotion: Emotion,
    input_range: Option<SentimentRange>,
    target_range: Option<SentimentRange>,
}

impl TryFrom<RawLabeledPair> for LabeledPair {
    type Error = Error;

    fn try_from(raw: RawLabeledPair) -> Result<Self> {
        let out = LabeledPair::new(raw.pair, raw.input_emotion, raw.target_emotion);
        if raw.input_range.is_some_and(|r| r != out.input_range)
            || raw.target_range.is_some_and(|r| r != out.target_range)
        {
            return Err(Error::InvalidPair { id: out.pair.id, reason: "range does not match emotion" });
        }
        Ok(out)
    }
}

impl LabeledPair {
    pub fn new(pair: ParaphrasePair, input_emotion: Emotion, target_emotion: Emotion) -> LabeledPair {
        LabeledPair {
            pair,
            input_emotion,
            target_emotion,
            input_range: range_of(input_emotion),
            target_range: range_of(target_emotion),
        }
    }

    pub fn id(&self) -> &str {
        &self.pair.id
    }

    pub fn key(&self) -> TransitionKey {
        TransitionKey(self.input_emotion, self.target_emotion)
    }

    /// The same pair read in the other direction.
    pub fn flipped(&self) -> LabeledPair {
        let pair = ParaphrasePair {
            id: self.pair.id.clone(),
            input_text: self.pair.target_text.clone(),
            target_text: self.pair.input_text.clone(),
            source: self.pair.source,
        };
        LabeledPair::new(pair, self.target_emotion, self.input_emotion)
    }
}

/// `(e_i, e_f)`, the transition type used for capping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransitionKey(pub Emotion, pub Emotion);

/// Reads pairs from JSONL, rejecting duplicate ids.
pub fn read_pairs<R: BufRead>(reader: R) -> Result<Vec<ParaphrasePair>> {
    let pairs: Vec<ParaphrasePair> = jsonl::read(reader)?;
    check_unique(pairs.iter().map(|p| p.id.as_str()))?;
    Ok(pairs)
}

pub fn read_labeled<R: BufRead>(reader: R) -> Result<Vec<LabeledPair>> {
    let pairs: Vec<LabeledPair> = jsonl::read(reader)?;
    check_unique(pairs.iter().map(LabeledPair::id))?;
    Ok(pairs)
}

fn check_unique<'a>(ids: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(Error::DuplicateId(id.to_string()));
        }
    }
    Ok(())
}


#[cfg(test)]
mod tests {
    use super::*;
    use Emotion::*;

    #[test]
    fn pair_schema() {
        let p: ParaphrasePair =
            serde_json::from_str(r#"{"id":"1","input_text":"a","target_text":"b","source":"paws"}"#).unwrap();
        assert_eq!(p.source, Source::Paws);
        let p: ParaphrasePair = serde_json::from_str(r#"{"id":"1","input_text":"a","target_text":"b"}"#).unwrap();
        assert_eq!(p.source, Source::Other);
        assert!(serde_json::from_str::<ParaphrasePair>(r#"{"id":"1","input_text":" ","target_text":"b"}"#).is_err());
        assert!(serde_json::from_str::<ParaphrasePair>(
            r#"{"id":"1","input_text":"a","target_text":"b","source":"x"}"#
        )
        .is_err());
    }

    #[test]
    fn labeled_schema_round_trip() {
        let lp = fixtures::labeled("p", Anger, Disappointment);
        let json = serde_json::to_value(&lp).unwrap();
        assert_eq!(json["input_range"], "high_neg");
        assert_eq!(json["target_range"], "low_neg");
        assert_eq!(json["source"], "other");
        let back: LabeledPair = serde_json::from_value(json.clone()).unwrap();
        assert_eq!(back, lp);

        let mut bad = json;
        bad["target_range"] = "high_pos".into();
        assert!(serde_json::from_value::<LabeledPair>(bad).is_err());
    }

    #[test]
    fn flip_swaps_texts_and_emotions() {
        let lp = fixtures::labeled("p", Annoyance, Anger).flipped();
        assert_eq!((lp.input_emotion, lp.target_emotion), (Anger, Annoyance));
        assert_eq!(lp.pair.input_text, "p out");
        assert_eq!(lp.input_range, SentimentRange::HighNeg);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let text = "{\"id\":\"a\",\"input_text\":\"x\",\"target_text\":\"y\"}\n".repeat(2);
        assert!(matches!(read_pairs(text.as_bytes()), Err(Error::DuplicateId(id)) if id == "a"));
    }
}
