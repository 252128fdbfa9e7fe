//! Emotion taxonomy, transition graph, dataset reconstruction and evaluation
//! metrics for fine-grained emotional paraphrasing.
//!
//! Modules build on each other in this order: [`taxonomy`] fixes the label
//! set and the sentiment-lowering graph; [`vader`] scores raw text; [`labeling`]
//! turns classifier confidences into single labels; [`pipeline`] reconstructs
//! transition datasets from labelled paraphrase pairs; [`metrics`] scores
//! generated paraphrases.

pub mod error;
pub mod jsonl;
pub mod labeling;
pub mod metrics;
pub mod pipeline;
pub mod taxonomy;
pub mod vader;

pub use error::{Error, Result};
pub use labeling::{dominant_emotion, EmotionScores, LabelDecision, DEFAULT_THRESHOLD};
pub use taxonomy::{Emotion, EmotionCluster, GraphOptions, IntensityTable, SentimentRange, TransitionGraph};
pub use vader::{PolarityScores, SentimentLexicon};
