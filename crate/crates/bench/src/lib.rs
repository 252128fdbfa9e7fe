//! Synthetic inputs for the criterion benches.

use emograd_core::labeling::{LabelSource, ScoreRecord};
use emograd_core::metrics::EvalRecord;
use emograd_core::pipeline::{ParaphrasePair, Source};
use emograd_core::{Emotion, EmotionScores};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const WORDS: &[&str] = &[
    "the", "a", "service", "food", "movie", "was", "is", "not", "very", "really", "good", "bad", "great", "awful",
    "happy", "sad", "angry", "annoyed", "love", "hate", "kind", "of", "today", "again", "friends", "never", "lol",
    "terrible", "amazing", "but", "and", "so", "quite", "nervous", "grateful", "sorry", ":)", "!", "?", ",",
];

pub fn sentence(rng: &mut impl Rng, len: usize) -> String {
    let mut out = String::new();
    for i in 0..len {
        if i > 0 {
            out.push(' ');
        }
        let w = WORDS.choose(rng).copied().unwrap_or("the");
        if i == 0 || rng.random_bool(0.05) {
            out.push_str(&w.to_uppercase());
        } else {
            out.push_str(w);
        }
    }
    out
}

pub fn sentences(n: usize, len: usize, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| sentence(&mut rng, len)).collect()
}

/// Word-level perturbation of `text` by swaps and substitutions.
pub fn paraphrase(rng: &mut impl Rng, text: &str) -> String {
    let mut words: Vec<String> = text.split(' ').map(str::to_string).collect();
    for i in 0..words.len() {
        match rng.random_range(0..10) {
            0 => words[i] = WORDS.choose(rng).copied().unwrap_or("the").to_string(),
            1 if i + 1 < words.len() => words.swap(i, i + 1),
            _ => {}
        }
    }
    words.join(" ")
}

fn scores(rng: &mut impl Rng) -> EmotionScores {
    let top = Emotion::ALL[rng.random_range(0..Emotion::COUNT)];
    let other = Emotion::ALL[rng.random_range(0..Emotion::COUNT)];
    let mut s = EmotionScores::new();
    s.set(other, rng.random_range(0.0..0.3)).unwrap();
    s.set(top, rng.random_range(0.3..1.0)).unwrap();
    s
}

/// `n` pairs with one score record per side.
pub fn corpus(n: usize, seed: u64) -> (Vec<ParaphrasePair>, Vec<LabelSource>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(2 * n);
    for i in 0..n {
        let input = sentence(&mut rng, 12);
        let target = paraphrase(&mut rng, &input);
        let id = format!("p{i}");
        for side in ["input", "target"] {
            let scores = scores(&mut rng);
            labels.push(LabelSource::Scores(ScoreRecord { id: format!("{id}:{side}"), text: String::new(), scores }));
        }
        pairs.push(ParaphrasePair::new(id, input, target, Source::Other).unwrap());
    }
    (pairs, labels)
}

pub fn eval_records(n: usize, len: usize, seed: u64) -> Vec<EvalRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let reference = sentence(&mut rng, len);
            let prediction = paraphrase(&mut rng, &reference);
            EvalRecord {
                id: format!("r{i}"),
                prediction,
                reference,
                target_emotion: Emotion::ALL[rng.random_range(0..Emotion::COUNT)],
                prediction_scores: Some(scores(&mut rng)),
                prediction_emotion: None,
            }
        })
        .collect()
}
