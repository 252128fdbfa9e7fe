use serde::{Deserialize, Serialize};

use super::LabeledPair;

/// Pair counts at each reconstruction stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetStats {
    pub total: usize,
    /// Labelled pairs whose two emotions differ, neutral included.
    pub transiting_incl_neutral: usize,
    /// The same without neutral endpoints.
    pub transiting_excl_neutral: usize,
    pub intensity_lowering: usize,
}

pub fn compute_stats(
    total: usize,
    labeled: &[LabeledPair],
    filtered: &[LabeledPair],
    oriented: &[LabeledPair],
) -> DatasetStats {
    DatasetStats {
        total,
        transiting_incl_neutral: labeled.iter().filter(|p| p.input_emotion != p.target_emotion).count(),
        transiting_excl_neutral: filtered.len(),
        intensity_lowering: oriented.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::fixtures::pair;
    use crate::pipeline::{reconstruct, OrientOptions, SideLabels};
    use crate::taxonomy::Emotion::{self, *};

    #[test]
    fn six_pair_trace() {
        let pairs: Vec<_> =
            ["unlabeled", "same", "neutral-in", "neutral-out", "equal-tier", "rising"].into_iter().map(pair).collect();
        let mut labels = SideLabels::default();
        let mut set = |id: &str, a: Option<Emotion>, b: Option<Emotion>| {
            labels.input.insert(id.into(), a);
            labels.target.insert(id.into(), b);
        };
        set("unlabeled", None, Some(Joy));
        set("same", Some(Anger), Some(Anger));
        set("neutral-in", Some(Neutral), Some(Joy));
        set("neutral-out", Some(Fear), Some(Neutral));
        set("equal-tier", Some(Anger), Some(Sadness));
        set("rising", Some(Annoyance), Some(Anger));
        let r = reconstruct(&pairs, &labels, &OrientOptions::default());
        assert_eq!(
            r.stats,
            DatasetStats { total: 6, transiting_incl_neutral: 4, transiting_excl_neutral: 2, intensity_lowering: 1 }
        );
        assert_eq!(r.oriented[0].id(), "rising");
    }

    #[test]
    fn empty() {
        assert_eq!(compute_stats(0, &[], &[], &[]), DatasetStats::default());
    }
}
