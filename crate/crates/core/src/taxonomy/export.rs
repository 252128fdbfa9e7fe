use serde::{Deserialize, Serialize};

use super::{cluster_of, median_score, range_of, Emotion, EmotionCluster, SentimentRange, TransitionGraph};

/// Audit view of the whole taxonomy, serialized by `export-taxonomy`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaxonomyDocument {
    pub emotions: Vec<EmotionEntry>,
    pub clusters: Vec<ClusterEntry>,
    pub ranges: Vec<RangeEntry>,
    pub cross_cluster_edges: bool,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmotionEntry {
    pub index: usize,
    pub label: Emotion,
    pub cluster: u8,
    pub median: f64,
    pub range: SentimentRange,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterEntry {
    pub id: u8,
    pub members: Vec<Emotion>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RangeEntry {
    pub range: SentimentRange,
    pub tier: u8,
    pub polarity: i8,
    pub members: Vec<Emotion>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub source: Emotion,
    pub target: Emotion,
    pub source_cluster: u8,
    pub source_range: SentimentRange,
    pub target_range: SentimentRange,
}

impl TaxonomyDocument {
    pub fn new(graph: &TransitionGraph) -> TaxonomyDocument {
        TaxonomyDocument {
            emotions: Emotion::ALL
                .iter()
                .map(|&e| EmotionEntry {
                    index: e.index(),
                    label: e,
                    cluster: cluster_of(e).id(),
                    median: median_score(e),
                    range: range_of(e),
                })
                .collect(),
            clusters: EmotionCluster::all()
                .map(|c| ClusterEntry { id: c.id(), members: c.members().to_vec() })
                .collect(),
            ranges: SentimentRange::ALL
                .iter()
                .map(|&r| RangeEntry {
                    range: r,
                    tier: r.tier(),
                    polarity: r.polarity(),
                    members: r.members().collect(),
                })
                .collect(),
            cross_cluster_edges: graph.options().cross_cluster,
            edges: graph
                .edges()
                .map(|e| EdgeEntry {
                    source: e.source,
                    target: e.target,
                    source_cluster: e.source_cluster.id(),
                    source_range: e.source_range,
                    target_range: e.target_range,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn document_shape() {
        let doc = TaxonomyDocument::new(&TransitionGraph::build());
        assert_eq!(doc.emotions.len(), 28);
        assert_eq!(doc.clusters.len(), 11);
        assert_eq!(doc.ranges.len(), 5);
        assert_eq!(doc.edges.len(), TransitionGraph::build().edge_count());

        let json = serde_json::to_value(&doc).unwrap();
        assert_eq!(json["emotions"][16]["label"], "grief");
        assert_eq!(json["emotions"][16]["median"], -0.5423);
        assert_eq!(json["emotions"][16]["range"], "high_neg");
        assert_eq!(json["clusters"][10]["members"][1], "anger");

        let back: TaxonomyDocument = serde_json::from_value(json).unwrap();
        assert_eq!(back, doc);
    }
}
