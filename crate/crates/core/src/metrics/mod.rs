//! Emotion-transition accuracy (Exact-SR, Exact-FE) and paraphrase quality
//! (BLEU, ROUGE-L, METEOR) over a shared tokenizer.

mod bleu;
mod exact;
mod meteor;
pub mod porter;
mod rouge;
mod tokenize;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labeling::{dominant_emotion, EmotionScores, DEFAULT_THRESHOLD};
use crate::taxonomy::{Emotion, IntensityTable};

pub use bleu::{bleu, sentence_bleu, MAX_ORDER};
pub use exact::{exact_scores, ExactScores};
pub use meteor::{meteor, meteor_details, meteor_formula, MeteorScore, DEFAULT_SEARCH_BUDGET};
pub use rouge::{lcs_len, rouge_l, rouge_l_beta};
pub use tokenize::tokenize;

/// One line of an evaluation file.
///
/// The predicted emotion is `prediction_emotion` when present, otherwise the
/// dominant emotion of `prediction_scores`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub id: String,
    pub prediction: String,
    pub reference: String,
    pub target_emotion: Emotion,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prediction_scores: Option<EmotionScores>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prediction_emotion: Option<Emotion>,
}

impl EvalRecord {
    pub fn predicted(&self, threshold: f64) -> Result<Option<Emotion>> {
        if self.prediction_emotion.is_some() {
            return Ok(self.prediction_emotion);
        }
        match &self.prediction_scores {
            Some(scores) => Ok(dominant_emotion(scores, threshold)?.label),
            None => Ok(None),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalOptions {
    /// Dominance threshold applied to `prediction_scores`.
    pub threshold: f64,
    /// ROUGE-L recall weight; 1 gives F1.
    pub rouge_beta: f64,
    pub meteor_budget: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { threshold: DEFAULT_THRESHOLD, rouge_beta: 1.0, meteor_budget: DEFAULT_SEARCH_BUDGET }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordScores {
    pub id: String,
    pub target_emotion: Emotion,
    pub prediction_emotion: Option<Emotion>,
    pub fe_match: bool,
    pub sr_match: bool,
    pub sentence_bleu: f64,
    pub rouge_l: f64,
    pub meteor: f64,
    pub meteor_matches: usize,
    pub meteor_chunks: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub n: usize,
    pub n_labeled: usize,
    pub exact_sr: f64,
    pub exact_fe: f64,
    pub bleu: f64,
    pub rouge_l: f64,
    pub meteor: f64,
    pub records: Vec<RecordScores>,
}

pub fn evaluate(records: &[EvalRecord], table: &IntensityTable) -> Result<EvalReport> {
    evaluate_with(records, table, &EvalOptions::default())
}

pub fn evaluate_with(records: &[EvalRecord], table: &IntensityTable, options: &EvalOptions) -> Result<EvalReport> {
    if records.is_empty() {
        return Err(Error::EmptyInput("evaluate"));
    }
    let mut refs = Vec::with_capacity(records.len());
    let mut hyps = Vec::with_capacity(records.len());
    let mut pairs = Vec::with_capacity(records.len());
    let mut details = Vec::with_capacity(records.len());
    for rec in records {
        let reference = tokenize(&rec.reference);
        let hypothesis = tokenize(&rec.prediction);
        let predicted = rec.predicted(options.threshold)?;
        let m = meteor_details(&reference, &hypothesis, options.meteor_budget);
        details.push(RecordScores {
            id: rec.id.clone(),
            target_emotion: rec.target_emotion,
            prediction_emotion: predicted,
            fe_match: predicted == Some(rec.target_emotion),
            sr_match: predicted.is_some_and(|p| table.range(p) == table.range(rec.target_emotion)),
            sentence_bleu: sentence_bleu(&reference, &hypothesis),
            rouge_l: rouge_l_beta(&reference, &hypothesis, options.rouge_beta),
            meteor: m.score,
            meteor_matches: m.matches,
            meteor_chunks: m.chunks,
        });
        pairs.push((rec.target_emotion, predicted));
        refs.push(reference);
        hyps.push(hypothesis);
    }
    let n = records.len();
    let exact = exact_scores(pairs, table)?;
    Ok(EvalReport {
        n,
        n_labeled: details.iter().filter(|d| d.prediction_emotion.is_some()).count(),
        exact_sr: exact.exact_sr,
        exact_fe: exact.exact_fe,
        bleu: bleu(&refs, &hyps)?,
        rouge_l: details.iter().map(|d| d.rouge_l).sum::<f64>() / n as f64,
        meteor: details.iter().map(|d| d.meteor).sum::<f64>() / n as f64,
        records: details,
    })
}

impl EvalReport {
    /// Aligned plain-text summary with the emotion-transition and
    /// paraphrasing column groups side by side. Scores are percentages.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let pct = |v: f64| format!("{:.2}", 100.0 * v);
        let _ = writeln!(out, "{:>6} {:>7} | {:^19} | {:^25}", "", "", "Emotion-Transition", "Paraphrasing");
        let _ = writeln!(
            out,
            "{:>6} {:>7} | {:>9} {:>9} | {:>7} {:>8} {:>8}",
            "n", "labeled", "Exact-SR", "Exact-FE", "BLEU", "ROUGE-L", "METEOR"
        );
        let _ = writeln!(
            out,
            "{:>6} {:>7} | {:>9} {:>9} | {:>7} {:>8} {:>8}",
            self.n,
            self.n_labeled,
            pct(self.exact_sr),
            pct(self.exact_fe),
            pct(self.bleu),
            pct(self.rouge_l),
            pct(self.meteor)
        );
        out
    }
}
