use serde::{Deserialize, Serialize};

use super::{join_labels, LabeledPair, ParaphrasePair, Rejected, SideLabels};
use crate::pipeline::{compute_stats, DatasetStats};
use crate::taxonomy::{median_score, GraphOptions, TransitionGraph};

/// Keeps pairs whose two emotions differ and are both non-neutral.
pub fn filter_transitions(pairs: &[LabeledPair]) -> Vec<LabeledPair> {
    pairs
        .iter()
        .filter(|p| {
            p.input_emotion != p.target_emotion && !p.input_emotion.is_neutral() && !p.target_emotion.is_neutral()
        })
        .cloned()
        .collect()
}

/// How the intensity of two emotions is compared.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IntensityOrder {
    /// Sentiment-range tier (High 2, Low 1, Neutral 0).
    #[default]
    Tier,
    /// Absolute median compound score.
    Median,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientOptions {
    pub order: IntensityOrder,
    /// Drop oriented pairs that are not transition-graph edges.
    pub graph_valid_only: bool,
    /// Graph construction used with `graph_valid_only`.
    pub cross_cluster: bool,
}

/// Points every pair from higher to lower intensity, flipping texts and
/// emotions where needed. Pairs of equal intensity are dropped.
pub fn orient_lowering(pairs: &[LabeledPair], options: &OrientOptions) -> Vec<LabeledPair> {
    let graph = options
        .graph_valid_only
        .then(|| TransitionGraph::build_with(GraphOptions { cross_cluster: options.cross_cluster }));
    pairs
        .iter()
        .filter_map(|p| {
            let ordering = match options.order {
                IntensityOrder::Tier => p.input_range.tier().cmp(&p.target_range.tier()),
                IntensityOrder::Median => {
                    median_score(p.input_emotion).abs().total_cmp(&median_score(p.target_emotion).abs())
                }
            };
            match ordering {
                std::cmp::Ordering::Greater => Some(p.clone()),
                std::cmp::Ordering::Less => Some(p.flipped()),
                std::cmp::Ordering::Equal => None,
            }
        })
        .filter(|p| graph.as_ref().is_none_or(|g| g.contains(p.input_emotion, p.target_emotion)))
        .collect()
}

/// Every intermediate set of one reconstruction run.
#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub labeled: Vec<LabeledPair>,
    pub rejected: Vec<Rejected>,
    pub filtered: Vec<LabeledPair>,
    pub oriented: Vec<LabeledPair>,
    pub stats: DatasetStats,
}

/// Join, filter and orient in one pass.
pub fn reconstruct(pairs: &[ParaphrasePair], labels: &SideLabels, options: &OrientOptions) -> Reconstruction {
    let joined = join_labels(pairs, labels);
    let filtered = filter_transitions(&joined.labeled);
    let oriented = orient_lowering(&filtered, options);
    let stats = compute_stats(pairs.len(), &joined.labeled, &filtered, &oriented);
    Reconstruction { labeled: joined.labeled, rejected: joined.rejected, filtered, oriented, stats }
}
