use std::collections::HashMap;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 4;

/// Clipped n-gram matches and the hypothesis n-gram count (at least 1).
fn clipped_counts<S: AsRef<str>>(reference: &[S], hypothesis: &[S], n: usize) -> (u64, u64) {
    let hyp = ngrams(hypothesis, n);
    let refs = ngrams(reference, n);
    let matched = hyp.iter().map(|(g, &c)| c.min(refs.get(g).copied().unwrap_or(0))).sum();
    let total = hyp.values().sum::<u64>().max(1);
    (matched, total)
}

fn ngrams<S: AsRef<str>>(tokens: &[S], n: usize) -> HashMap<Vec<&str>, u64> {
    let mut counts = HashMap::new();
    for w in tokens.windows(n) {
        *counts.entry(w.iter().map(AsRef::as_ref).collect()).or_default() += 1;
    }
    counts
}

fn brevity_penalty(reference_len: usize, hypothesis_len: usize) -> f64 {
    if hypothesis_len > reference_len {
        1.0
    } else if hypothesis_len == 0 {
        0.0
    } else {
        (1.0 - reference_len as f64 / hypothesis_len as f64).exp()
    }
}

/// Uniformly weighted geometric mean of `precisions`, times `bp`.
fn combine(precisions: &[(f64, f64)], bp: f64) -> f64 {
    let log_sum: f64 = precisions.iter().map(|(m, t)| (m / t).ln() / MAX_ORDER as f64).sum();
    bp * log_sum.exp()
}

/// Corpus BLEU-4 with one reference per hypothesis.
///
/// Clipped n-gram counts are pooled over the corpus before dividing; every
/// record contributes at least one to each n-gram denominator. The score is
/// zero when any pooled precision is zero.
pub fn bleu<S: AsRef<str>>(references: &[Vec<S>], hypotheses: &[Vec<S>]) -> Result<f64> {
    if references.len() != hypotheses.len() {
        return Err(Error::LengthMismatch { references: references.len(), hypotheses: hypotheses.len() });
    }
    if hypotheses.is_empty() {
        return Err(Error::EmptyInput("bleu"));
    }
    let mut pooled = [(0u64, 0u64); MAX_ORDER];
    let (mut ref_len, mut hyp_len) = (0, 0);
    for (r, h) in references.iter().zip(hypotheses) {
        for (n, slot) in pooled.iter_mut().enumerate() {
            let (m, t) = clipped_counts(r, h, n + 1);
            slot.0 += m;
            slot.1 += t;
        }
        ref_len += r.len();
        hyp_len += h.len();
    }
    if pooled.iter().any(|&(m, _)| m == 0) {
        return Ok(0.0);
    }
    let precisions: Vec<(f64, f64)> = pooled.iter().map(|&(m, t)| (m as f64, t as f64)).collect();
    Ok(combine(&precisions, brevity_penalty(ref_len, hyp_len)))
}

/// Sentence BLEU-4 with add-one smoothing on the 2- to 4-gram precisions.
/// Zero when no unigram matches.
pub fn sentence_bleu<S: AsRef<str>>(reference: &[S], hypothesis: &[S]) -> f64 {
    let counts: Vec<(u64, u64)> = (1..=MAX_ORDER).map(|n| clipped_counts(reference, hypothesis, n)).collect();
    if counts[0].0 == 0 {
        return 0.0;
    }
    let precisions: Vec<(f64, f64)> = counts
        .iter()
        .enumerate()
        .map(|(i, &(m, t))| if i == 0 { (m as f64, t as f64) } else { (m as f64 + 1.0, t as f64 + 1.0) })
        .collect();
    combine(&precisions, brevity_penalty(reference.len(), hypothesis.len()))
}
