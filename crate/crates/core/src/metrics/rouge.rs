/// Length of the longest common subsequence.
pub fn lcs_len<S: PartialEq>(a: &[S], b: &[S]) -> usize {
    let mut row = vec![0usize; b.len() + 1];
    for x in a {
        let mut diag = 0;
        for (j, y) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if x == y { diag + 1 } else { up.max(row[j]) };
            diag = up;
        }
    }
    row[b.len()]
}

/// LCS-based F-measure `(1 + b^2) P R / (R + b^2 P)`; `beta = 1` is F1.
/// Zero when either side is empty.
pub fn rouge_l_beta<S: PartialEq>(reference: &[S], hypothesis: &[S], beta: f64) -> f64 {
    let lcs = lcs_len(reference, hypothesis);
    if lcs == 0 {
        return 0.0;
    }
    let p = lcs as f64 / hypothesis.len() as f64;
    let r = lcs as f64 / reference.len() as f64;
    let b2 = beta * beta;
    (1.0 + b2) * p * r / (r + b2 * p)
}

pub fn rouge_l<S: PartialEq>(reference: &[S], hypothesis: &[S]) -> f64 {
    rouge_l_beta(reference, hypothesis, 1.0)
}
