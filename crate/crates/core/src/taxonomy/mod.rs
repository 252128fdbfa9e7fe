//! The 28-label emotion taxonomy.
//!
//! Every emotion carries three fixed attributes: the adjacency cluster it
//! belongs to (11 clusters), the median VADER compound score measured over
//! emotion-labelled text, and the sentiment range (intensity tier plus
//! polarity) that median falls into. The tables here are hard-coded; the
//! tier thresholds in [`SentimentRange::from_median`] only cross-check them.

mod export;
mod graph;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use export::{ClusterEntry, EdgeEntry, EmotionEntry, RangeEntry, TaxonomyDocument};
pub use graph::{Edge, GraphOptions, TransitionGraph};

/// One of the 28 GoEmotions labels.
///
/// Discriminants are the canonical indices: alphabetical order with
/// `neutral` last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
#[repr(u8)]
pub enum Emotion {
    Admiration = 0,
    Amusement,
    Anger,
    Annoyance,
    Approval,
    Caring,
    Confusion,
    Curiosity,
    Desire,
    Disappointment,
    Disapproval,
    Disgust,
    Embarrassment,
    Excitement,
    Fear,
    Gratitude,
    Grief,
    Joy,
    Love,
    Nervousness,
    Optimism,
    Pride,
    Realization,
    Relief,
    Remorse,
    Sadness,
    Surprise,
    Neutral,
}

impl Emotion {
    pub const COUNT: usize = 28;

    /// All emotions in canonical index order.
    pub const ALL: [Emotion; Emotion::COUNT] = [
        Emotion::Admiration,
        Emotion::Amusement,
        Emotion::Anger,
        Emotion::Annoyance,
        Emotion::Approval,
        Emotion::Caring,
        Emotion::Confusion,
        Emotion::Curiosity,
        Emotion::Desire,
        Emotion::Disappointment,
        Emotion::Disapproval,
        Emotion::Disgust,
        Emotion::Embarrassment,
        Emotion::Excitement,
        Emotion::Fear,
        Emotion::Gratitude,
        Emotion::Grief,
        Emotion::Joy,
        Emotion::Love,
        Emotion::Nervousness,
        Emotion::Optimism,
        Emotion::Pride,
        Emotion::Realization,
        Emotion::Relief,
        Emotion::Remorse,
        Emotion::Sadness,
        Emotion::Surprise,
        Emotion::Neutral,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Emotion> {
        Emotion::ALL.get(index).copied()
    }

    pub fn label(self) -> &'static str {
        match self {
            Emotion::Admiration => "admiration",
            Emotion::Amusement => "amusement",
            Emotion::Anger => "anger",
            Emotion::Annoyance => "annoyance",
            Emotion::Approval => "approval",
            Emotion::Caring => "caring",
            Emotion::Confusion => "confusion",
            Emotion::Curiosity => "curiosity",
            Emotion::Desire => "desire",
            Emotion::Disappointment => "disappointment",
            Emotion::Disapproval => "disapproval",
            Emotion::Disgust => "disgust",
            Emotion::Embarrassment => "embarrassment",
            Emotion::Excitement => "excitement",
            Emotion::Fear => "fear",
            Emotion::Gratitude => "gratitude",
            Emotion::Grief => "grief",
            Emotion::Joy => "joy",
            Emotion::Love => "love",
            Emotion::Nervousness => "nervousness",
            Emotion::Optimism => "optimism",
            Emotion::Pride => "pride",
            Emotion::Realization => "realization",
            Emotion::Relief => "relief",
            Emotion::Remorse => "remorse",
            Emotion::Sadness => "sadness",
            Emotion::Surprise => "surprise",
            Emotion::Neutral => "neutral",
        }
    }

    pub fn is_neutral(self) -> bool {
        self == Emotion::Neutral
    }

    pub fn cluster(self) -> EmotionCluster {
        cluster_of(self)
    }

    pub fn range(self) -> SentimentRange {
        range_of(self)
    }

    pub fn median_score(self) -> f64 {
        median_score(self)
    }
}

impl fmt::Display for Emotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Emotion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Emotion::ALL.iter().copied().find(|e| e.label() == s).ok_or_else(|| Error::UnknownEmotion(s.to_string()))
    }
}

/// Five-way grouping of emotions by sentiment intensity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SentimentRange {
    HighNeg,
    LowNeg,
    Neutral,
    LowPos,
    HighPos,
}

impl SentimentRange {
    pub const ALL: [SentimentRange; 5] = [
        SentimentRange::HighNeg,
        SentimentRange::LowNeg,
        SentimentRange::Neutral,
        SentimentRange::LowPos,
        SentimentRange::HighPos,
    ];

    /// Magnitude independent of polarity: 0 for neutral, 1 for low, 2 for high.
    pub fn tier(self) -> u8 {
        match self {
            SentimentRange::Neutral => 0,
            SentimentRange::LowNeg | SentimentRange::LowPos => 1,
            SentimentRange::HighNeg | SentimentRange::HighPos => 2,
        }
    }

    pub fn polarity(self) -> i8 {
        match self {
            SentimentRange::HighNeg | SentimentRange::LowNeg => -1,
            SentimentRange::Neutral => 0,
            SentimentRange::LowPos | SentimentRange::HighPos => 1,
        }
    }

    /// Token used in range-style prefixes and file formats.
    pub fn token(self) -> &'static str {
        match self {
            SentimentRange::HighNeg => "high_neg",
            SentimentRange::LowNeg => "low_neg",
            SentimentRange::Neutral => "neutral",
            SentimentRange::LowPos => "low_pos",
            SentimentRange::HighPos => "high_pos",
        }
    }

    /// Quantizes a median compound score: `0` is neutral, `|m| >= 0.44` is
    /// high, anything else is low; the sign picks the polarity.
    pub fn from_median(median: f64) -> SentimentRange {
        if median == 0.0 {
            return SentimentRange::Neutral;
        }
        let high = median.abs() >= HIGH_TIER_THRESHOLD;
        match (median > 0.0, high) {
            (true, true) => SentimentRange::HighPos,
            (true, false) => SentimentRange::LowPos,
            (false, true) => SentimentRange::HighNeg,
            (false, false) => SentimentRange::LowNeg,
        }
    }

    pub fn members(self) -> impl Iterator<Item = Emotion> {
        Emotion::ALL.into_iter().filter(move |e| range_of(*e) == self)
    }
}

impl fmt::Display for SentimentRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for SentimentRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SentimentRange::ALL.iter().copied().find(|r| r.token() == s).ok_or_else(|| Error::UnknownRange(s.to_string()))
    }
}

/// Smallest |median| that counts as high intensity. Separates sadness/fear
/// (-0.4404) from nervousness (-0.3597) and amusement (0.4404) from relief
/// (0.4391).
pub const HIGH_TIER_THRESHOLD: f64 = 0.44;

/// An adjacency cluster, identified by its 1-based id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EmotionCluster(u8);

impl EmotionCluster {
    pub const COUNT: usize = 11;

    pub fn new(id: u8) -> Option<EmotionCluster> {
        (1..=EmotionCluster::COUNT as u8).contains(&id).then_some(EmotionCluster(id))
    }

    pub fn id(self) -> u8 {
        self.0
    }

    pub fn members(self) -> &'static [Emotion] {
        CLUSTERS[self.0 as usize - 1]
    }

    pub fn all() -> impl Iterator<Item = EmotionCluster> {
        (1..=EmotionCluster::COUNT as u8).map(EmotionCluster)
    }
}

use Emotion::*;

const CLUSTERS: [&[Emotion]; EmotionCluster::COUNT] = [
    &[Neutral],
    &[Amusement, Excitement, Joy, Love],
    &[Optimism, Desire, Caring],
    &[Pride, Admiration],
    &[Gratitude, Relief],
    &[Approval, Realization],
    &[Surprise, Curiosity, Confusion],
    &[Fear, Nervousness],
    &[Remorse, Embarrassment],
    &[Disappointment, Sadness, Grief],
    &[Disgust, Anger, Annoyance, Disapproval],
];

pub fn cluster_of(e: Emotion) -> EmotionCluster {
    let id = match e {
        Neutral => 1,
        Amusement | Excitement | Joy | Love => 2,
        Optimism | Desire | Caring => 3,
        Pride | Admiration => 4,
        Gratitude | Relief => 5,
        Approval | Realization => 6,
        Surprise | Curiosity | Confusion => 7,
        Fear | Nervousness => 8,
        Remorse | Embarrassment => 9,
        Disappointment | Sadness | Grief => 10,
        Disgust | Anger | Annoyance | Disapproval => 11,
    };
    EmotionCluster(id)
}

/// Median VADER compound score of texts labelled with `e`.
pub fn median_score(e: Emotion) -> f64 {
    match e {
        Grief => -0.5423,
        Anger => -0.5234,
        Disgust => -0.51805,
        Fear => -0.4404,
        Sadness => -0.4404,
        Nervousness => -0.3597,
        Disappointment => -0.3059,
        Annoyance => -0.296,
        Embarrassment => -0.26655,
        Remorse => -0.0772,
        Disapproval => -0.0644,
        Confusion | Curiosity | Realization | Surprise | Neutral => 0.0,
        Approval => 0.296,
        Caring => 0.3412,
        Desire => 0.4019,
        Relief => 0.4391,
        Amusement => 0.4404,
        Excitement => 0.4404,
        Pride => 0.4767,
        Optimism => 0.5081,
        Gratitude => 0.5574,
        Joy => 0.6008,
        Admiration => 0.6249,
        Love => 0.6369,
    }
}

pub fn range_of(e: Emotion) -> SentimentRange {
    match e {
        Anger | Disgust | Grief | Fear | Sadness => SentimentRange::HighNeg,
        Nervousness | Annoyance | Disappointment | Embarrassment | Remorse | Disapproval => SentimentRange::LowNeg,
        Confusion | Curiosity | Realization | Surprise | Neutral => SentimentRange::Neutral,
        Approval | Caring | Desire | Relief => SentimentRange::LowPos,
        Amusement | Excitement | Pride | Optimism | Gratitude | Joy | Admiration | Love => SentimentRange::HighPos,
    }
}

/// Emotion medians paired with the ranges they induce.
#[derive(Debug, Clone, PartialEq)]
pub struct IntensityTable {
    medians: [f64; Emotion::COUNT],
    ranges: [SentimentRange; Emotion::COUNT],
}

impl IntensityTable {
    /// The hard-coded reference table.
    pub fn reference() -> IntensityTable {
        IntensityTable { medians: Emotion::ALL.map(median_score), ranges: Emotion::ALL.map(range_of) }
    }

    /// Builds a table from measured medians, deriving ranges with
    /// [`SentimentRange::from_median`]. Every emotion must be present.
    pub fn from_medians(medians: &BTreeMap<Emotion, f64>) -> Result<IntensityTable> {
        let mut out = [0.0; Emotion::COUNT];
        for e in Emotion::ALL {
            out[e.index()] = *medians.get(&e).ok_or_else(|| Error::MissingMedian(e.label().to_string()))?;
        }
        Ok(IntensityTable { medians: out, ranges: out.map(SentimentRange::from_median) })
    }

    pub fn median(&self, e: Emotion) -> f64 {
        self.medians[e.index()]
    }

    pub fn range(&self, e: Emotion) -> SentimentRange {
        self.ranges[e.index()]
    }
}

impl Default for IntensityTable {
    fn default() -> Self {
        IntensityTable::reference()
    }
}
