use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::taxonomy::{Emotion, IntensityTable};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExactScores {
    pub exact_sr: f64,
    pub exact_fe: f64,
}

/// Fraction of `(target, predicted)` pairs whose sentiment range (SR) and
/// fine-grained emotion (FE) match. Unlabelled predictions match neither.
pub fn exact_scores<I>(pairs: I, table: &IntensityTable) -> Result<ExactScores>
where
    I: IntoIterator<Item = (Emotion, Option<Emotion>)>,
{
    let (mut n, mut fe, mut sr) = (0usize, 0usize, 0usize);
    for (target, predicted) in pairs {
        n += 1;
        if let Some(p) = predicted {
            fe += (p == target) as usize;
            sr += (table.range(p) == table.range(target)) as usize;
        }
    }
    if n == 0 {
        return Err(Error::EmptyInput("exact_scores"));
    }
    Ok(ExactScores { exact_sr: sr as f64 / n as f64, exact_fe: fe as f64 / n as f64 })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use Emotion::*;

    fn run(pairs: &[(Emotion, Option<Emotion>)]) -> ExactScores {
        exact_scores(pairs.iter().copied(), &IntensityTable::reference()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(run(&[(Joy, Some(Joy)), (Fear, Some(Fear))]), ExactScores { exact_sr: 1.0, exact_fe: 1.0 });
        assert_eq!(run(&[(Anger, Some(Disgust))]), ExactScores { exact_sr: 1.0, exact_fe: 0.0 });
        let s = run(&[(Joy, Some(Joy)), (Fear, Some(Fear)), (Anger, Some(Grief)), (Relief, None)]);
        assert_eq!(s, ExactScores { exact_sr: 0.75, exact_fe: 0.5 });
        assert!(exact_scores([], &IntensityTable::reference()).is_err());
    }

    fn arb_pair() -> impl Strategy<Value = (Emotion, Option<Emotion>)> {
        let e = (0..Emotion::COUNT).prop_map(|i| Emotion::from_index(i).unwrap());
        (e.clone(), proptest::option::of(e))
    }

    proptest! {
        #[test]
        fn range_match_dominates(pairs in proptest::collection::vec(arb_pair(), 1..50)) {
            let s = run(&pairs);
            prop_assert!(s.exact_sr >= s.exact_fe);
            prop_assert!((0.0..=1.0).contains(&s.exact_sr));
        }
    }
}
