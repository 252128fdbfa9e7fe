//! Single-label decisions from multi-label classifier confidences.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::taxonomy::Emotion;

/// Default dominance threshold: a label is reported only when its confidence
/// is strictly over this value.
pub const DEFAULT_THRESHOLD: f64 = 0.5;

/// Classifier confidences per emotion. Absent emotions count as 0.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<String, f64>", into = "BTreeMap<String, f64>")]
pub struct EmotionScores {
    values: [f64; Emotion::COUNT],
}

impl EmotionScores {
    pub fn new() -> EmotionScores {
        EmotionScores::default()
    }

    pub fn from_pairs<I>(pairs: I) -> Result<EmotionScores>
    where
        I: IntoIterator<Item = (Emotion, f64)>,
    {
        let mut scores = EmotionScores::new();
        for (e, v) in pairs {
            scores.set(e, v)?;
        }
        Ok(scores)
    }

    pub fn set(&mut self, e: Emotion, value: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::InvalidConfidence { emotion: e.label().to_string(), value });
        }
        self.values[e.index()] = value;
        Ok(())
    }

    pub fn get(&self, e: Emotion) -> f64 {
        self.values[e.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Emotion, f64)> + '_ {
        Emotion::ALL.iter().map(|&e| (e, self.values[e.index()]))
    }

    /// Highest-confidence emotion, lowest canonical index on ties. `None` when
    /// every confidence is zero.
    pub fn argmax(&self) -> Option<(Emotion, f64)> {
        let mut best: Option<(Emotion, f64)> = None;
        for (e, v) in self.iter() {
            if v > best.map_or(0.0, |(_, b)| b) {
                best = Some((e, v));
            }
        }
        best
    }
}

impl TryFrom<BTreeMap<String, f64>> for EmotionScores {
    type Error = Error;

    fn try_from(map: BTreeMap<String, f64>) -> Result<Self> {
        let pairs = map.into_iter().map(|(k, v)| Ok((k.parse::<Emotion>()?, v))).collect::<Result<Vec<_>>>()?;
        EmotionScores::from_pairs(pairs)
    }
}

impl From<EmotionScores> for BTreeMap<String, f64> {
    fn from(scores: EmotionScores) -> Self {
        scores.iter().filter(|(_, v)| *v > 0.0).map(|(e, v)| (e.label().to_string(), v)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LabelDecision {
    pub label: Option<Emotion>,
    pub top_score: f64,
    pub threshold: f64,
}

/// Reports the dominant emotion when its confidence is strictly over
/// `threshold`; otherwise no label.
pub fn dominant_emotion(scores: &EmotionScores, threshold: f64) -> Result<LabelDecision> {
    if !(0.0..=1.0).contains(&threshold) {
        return Err(Error::InvalidThreshold(threshold));
    }
    let (label, top_score) = match scores.argmax() {
        Some((e, v)) if v > threshold => (Some(e), v),
        Some((_, v)) => (None, v),
        None => (None, 0.0),
    };
    Ok(LabelDecision { label, top_score, threshold })
}

/// One line of a classifier score file: `{"id", "text", "scores": {...}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreRecord {
    pub id: String,
    #[serde(default)]
    pub text: String,
    pub scores: EmotionScores,
}

/// One line of a label file, as written by `emograd label`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelRecord {
    pub id: String,
    #[serde(default)]
    pub text: String,
    pub label: Option<Emotion>,
    pub top_score: f64,
    pub threshold: f64,
}

impl LabelRecord {
    pub fn decision(&self) -> LabelDecision {
        LabelDecision { label: self.label, top_score: self.top_score, threshold: self.threshold }
    }
}

/// Either a raw score record or an already-decided label record.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum LabelSource {
    Scores(ScoreRecord),
    Decided(LabelRecord),
}

impl LabelSource {
    pub fn id(&self) -> &str {
        match self {
            LabelSource::Scores(r) => &r.id,
            LabelSource::Decided(r) => &r.id,
        }
    }

    /// Decision for this record. Score records are thresholded; label records
    /// keep the decision they were written with.
    pub fn decide(&self, threshold: f64) -> Result<LabelDecision> {
        match self {
            LabelSource::Scores(r) => dominant_emotion(&r.scores, threshold),
            LabelSource::Decided(r) => Ok(r.decision()),
        }
    }
}

pub fn label_record(record: &ScoreRecord, threshold: f64) -> Result<LabelRecord> {
    let decision = dominant_emotion(&record.scores, threshold)?;
    Ok(LabelRecord {
        id: record.id.clone(),
        text: record.text.clone(),
        label: decision.label,
        top_score: decision.top_score,
        threshold,
    })
}
