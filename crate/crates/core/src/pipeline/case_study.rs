use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::LabeledPair;
use crate::error::{Error, Result};
use crate::taxonomy::{Emotion, TransitionGraph};

pub const CASE_STUDY_FRACTION: f64 = 0.35;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseStudyRecord {
    #[serde(flatten)]
    pub pair: LabeledPair,
    pub original_target_emotion: Emotion,
    /// Chosen for re-targeting.
    pub reselected: bool,
    /// The draw landed on neutral and the original target was kept.
    pub kept_original: bool,
}

/// Re-targets `ceil(fraction * n)` seeded-sampled pairs with a uniform draw
/// over the transition graph. A neutral draw keeps the original target.
pub fn case_study(
    pairs: &[LabeledPair],
    graph: &TransitionGraph,
    fraction: f64,
    seed: u64,
) -> Result<Vec<CaseStudyRecord>> {
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(Error::InvalidFraction(fraction));
    }
    let n = pairs.len();
    let k = ((n as f64 * fraction) - 1e-9).ceil().max(0.0) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = vec![false; n];
    for i in rand::seq::index::sample(&mut rng, n, k.min(n)) {
        chosen[i] = true;
    }

    Ok(pairs
        .iter()
        .zip(chosen)
        .map(|(p, reselect)| {
            let original = p.target_emotion;
            let mut record = CaseStudyRecord {
                pair: p.clone(),
                original_target_emotion: original,
                reselected: reselect,
                kept_original: false,
            };
            if reselect {
                let draw_seed = rng.next_u64();
                let drawn = graph.draw_target(p.input_emotion, draw_seed);
                let target = graph.select_target(p.input_emotion, draw_seed, Some(original)).unwrap_or(original);
                record.kept_original = drawn != Some(target);
                record.pair = LabeledPair::new(p.pair.clone(), p.input_emotion, target);
            }
            record
        })
        .collect())
}
