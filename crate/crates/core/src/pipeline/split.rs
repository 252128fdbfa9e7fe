use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{LabeledPair, TransitionKey};
use crate::error::{Error, Result};

pub const DEFAULT_TRAIN_FRACTION: f64 = 0.8;
pub const DEFAULT_CAP_TRAIN: usize = 12;
pub const DEFAULT_CAP_TEST: usize = 3;

/// Seeded shuffle, then the first `floor(n * fraction)` items go to train.
pub fn split<T: Clone>(items: &[T], fraction: f64, seed: u64) -> Result<(Vec<T>, Vec<T>)> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(Error::InvalidFraction(fraction));
    }
    let mut shuffled = items.to_vec();
    shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    // The epsilon keeps products like 0.29 * 100 from flooring one short.
    let n_train = ((items.len() as f64 * fraction) + 1e-9).floor() as usize;
    let test = shuffled.split_off(n_train.min(items.len()));
    Ok((shuffled, test))
}

/// Keeps the first `cap_train` train pairs and the first `cap_test` test
/// pairs of every transition type.
pub fn cap_few_shot(
    train: &[LabeledPair],
    test: &[LabeledPair],
    cap_train: usize,
    cap_test: usize,
) -> (Vec<LabeledPair>, Vec<LabeledPair>) {
    (cap(train, cap_train), cap(test, cap_test))
}

fn cap(pairs: &[LabeledPair], limit: usize) -> Vec<LabeledPair> {
    let mut seen: HashMap<TransitionKey, usize> = HashMap::new();
    pairs
        .iter()
        .filter(|p| {
            let n = seen.entry(p.key()).or_default();
            *n += 1;
            *n <= limit
        })
        .cloned()
        .collect()
}
