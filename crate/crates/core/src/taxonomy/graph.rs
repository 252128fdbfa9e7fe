use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{cluster_of, range_of, Emotion, EmotionCluster, SentimentRange};

/// Construction switches for [`TransitionGraph`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GraphOptions {
    /// Also allow lowering edges between clusters, as long as the target keeps
    /// the source polarity or is neutral-range.
    pub cross_cluster: bool,
}

/// A directed edge with the attributes that justify it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub source: Emotion,
    pub target: Emotion,
    pub source_cluster: EmotionCluster,
    pub source_range: SentimentRange,
    pub target_range: SentimentRange,
}

/// Sentiment-lowering emotion transitions.
///
/// `a -> b` exists when `b` sits in the same cluster as `a` at a strictly
/// lower tier, and `a -> neutral` exists for every `a != neutral`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionGraph {
    targets: [Vec<Emotion>; Emotion::COUNT],
    options: GraphOptions,
}

impl TransitionGraph {
    pub fn build() -> TransitionGraph {
        TransitionGraph::build_with(GraphOptions::default())
    }

    pub fn build_with(options: GraphOptions) -> TransitionGraph {
        let targets = std::array::from_fn(|i| {
            let source = Emotion::ALL[i];
            Emotion::ALL.into_iter().filter(|&target| allows(source, target, options)).collect()
        });
        TransitionGraph { targets, options }
    }

    pub fn options(&self) -> GraphOptions {
        self.options
    }

    /// Out-neighbours of `e` in canonical index order.
    pub fn lowering_targets(&self, e: Emotion) -> &[Emotion] {
        &self.targets[e.index()]
    }

    pub fn contains(&self, source: Emotion, target: Emotion) -> bool {
        self.lowering_targets(source).contains(&target)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        Emotion::ALL.into_iter().flat_map(move |source| {
            self.lowering_targets(source).iter().map(move |&target| Edge {
                source,
                target,
                source_cluster: cluster_of(source),
                source_range: range_of(source),
                target_range: range_of(target),
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        self.targets.iter().map(Vec::len).sum()
    }

    /// Uniform draw over [`lowering_targets`](Self::lowering_targets) from a
    /// generator seeded with `seed`. `None` when `e` has no targets.
    pub fn draw_target(&self, e: Emotion, seed: u64) -> Option<Emotion> {
        let targets = self.lowering_targets(e);
        if targets.is_empty() {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Some(targets[rng.random_range(0..targets.len())])
    }

    /// Draws a target for `e`. When the draw lands on `neutral` and a
    /// `fallback` is given, the fallback is returned instead; with no targets
    /// the fallback (if any) is returned as well.
    pub fn select_target(&self, e: Emotion, seed: u64, fallback: Option<Emotion>) -> Option<Emotion> {
        let drawn = self.draw_target(e, seed);
        match (drawn, fallback) {
            (Some(Emotion::Neutral) | None, Some(kept)) => Some(kept),
            _ => drawn,
        }
    }
}

fn allows(source: Emotion, target: Emotion, options: GraphOptions) -> bool {
    if source.is_neutral() || source == target {
        return false;
    }
    if target.is_neutral() {
        return true;
    }
    let (from, to) = (range_of(source), range_of(target));
    if to.tier() >= from.tier() {
        return false;
    }
    if cluster_of(source) == cluster_of(target) {
        return true;
    }
    options.cross_cluster && (to.polarity() == from.polarity() || to.tier() == 0)
}
