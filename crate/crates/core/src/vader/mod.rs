//! Rule-based sentiment intensity scoring.
//!
//! A port of the NLTK 3.10 VADER analyzer. Scores match the reference
//! implementation to floating-point rounding; see `tests/fixtures/vader_oracle.tsv`.
//! One deliberate difference: text with no scorable tokens yields
//! `neu = 1.0` (the reference reports all zeros) so that `neg + neu + pos = 1`
//! always holds.

mod lexicon;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::taxonomy::Emotion;

pub use lexicon::SentimentLexicon;

/// Mean intensity added by an ALL-CAPS token when the rest of the text is not
/// all caps.
pub const CAPS_INCREMENT: f64 = 0.733;
/// Booster/dampener bi-grams ("kind of", "sort of") found behind a word.
pub const BOOSTER_DECREMENT: f64 = -0.293;
/// Multiplier applied when a negation precedes a token.
pub const NEGATION_SCALAR: f64 = -0.74;
/// Per-`!` amplification, counted up to [`MAX_EXCLAMATIONS`].
pub const EXCLAMATION_INCREMENT: f64 = 0.292;
pub const MAX_EXCLAMATIONS: usize = 4;
/// Per-`?` amplification when there are two or three question marks.
pub const QUESTION_INCREMENT: f64 = 0.18;
/// Amplification for four or more question marks.
pub const QUESTION_CAP: f64 = 0.96;
/// Normalization constant in `s / sqrt(s^2 + alpha)`.
pub const ALPHA: f64 = 15.0;

const PUNCTUATION: [&str; 17] =
    [".", "!", "?", ",", ";", ":", "-", "'", "\"", "!!", "!!!", "??", "???", "?!?", "!?!", "?!?!", "!?!?"];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarityScores {
    pub neg: f64,
    pub neu: f64,
    pub pos: f64,
    pub compound: f64,
}

impl PolarityScores {
    pub const NEUTRAL: PolarityScores = PolarityScores { neg: 0.0, neu: 1.0, pos: 0.0, compound: 0.0 };
}

/// `score / sqrt(score^2 + alpha)`, mapping any real to (-1, 1).
pub fn normalize(score: f64) -> f64 {
    score / (score * score + ALPHA).sqrt()
}

pub fn score_text(lexicon: &SentimentLexicon, text: &str) -> PolarityScores {
    Scorer::new(lexicon, text).run()
}

impl SentimentLexicon {
    pub fn score(&self, text: &str) -> PolarityScores {
        score_text(self, text)
    }
}

/// Median compound score per emotion. Emotions absent from `corpus` are
/// omitted; even-sized groups take the mean of the two central values.
pub fn median_by_emotion<'a, I>(lexicon: &SentimentLexicon, corpus: I) -> BTreeMap<Emotion, f64>
where
    I: IntoIterator<Item = (&'a str, Emotion)>,
{
    let mut groups: BTreeMap<Emotion, Vec<f64>> = BTreeMap::new();
    for (text, emotion) in corpus {
        groups.entry(emotion).or_default().push(score_text(lexicon, text).compound);
    }
    groups.into_iter().map(|(e, mut values)| (e, median(&mut values))).collect()
}

pub(crate) fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    }
}

// Python's str.split() also breaks on the ASCII information separators.
fn is_py_space(c: char) -> bool {
    c.is_whitespace() || ('\u{1c}'..='\u{1f}').contains(&c)
}

// Python's str.isupper(): at least one cased character, none lowercase.
fn is_upper(s: &str) -> bool {
    s.chars().any(char::is_uppercase) && !s.chars().any(char::is_lowercase)
}

/// Whitespace tokens longer than one character, with a single leading or
/// trailing punctuation mark removed when what remains is a plain word of the
/// text. Contractions and emoticons survive.
fn tokenize(text: &str) -> Vec<&str> {
    let stripped: String = text.chars().filter(|c| !c.is_ascii_punctuation()).collect();
    let words: std::collections::HashSet<&str> =
        stripped.split(is_py_space).filter(|w| w.chars().count() > 1).collect();

    text.split(is_py_space)
        .filter(|w| w.chars().count() > 1)
        .map(|token| {
            PUNCTUATION
                .iter()
                .find_map(|p| token.strip_suffix(p).filter(|w| words.contains(w)))
                .or_else(|| PUNCTUATION.iter().find_map(|p| token.strip_prefix(p).filter(|w| words.contains(w))))
                .unwrap_or(token)
        })
        .collect()
}

struct Scorer<'a> {
    lexicon: &'a SentimentLexicon,
    text: &'a str,
    words: Vec<&'a str>,
    lower: Vec<String>,
    cap_differential: bool,
}

impl<'a> Scorer<'a> {
    fn new(lexicon: &'a SentimentLexicon, text: &'a str) -> Self {
        let words = tokenize(text);
        let lower = words.iter().map(|w| w.to_lowercase()).collect();
        let caps = words.iter().filter(|w| is_upper(w)).count();
        let cap_differential = caps > 0 && caps < words.len();
        Scorer { lexicon, text, words, lower, cap_differential }
    }

    fn run(&self) -> PolarityScores {
        let n = self.words.len();
        // Repeated tokens are scored at the position of their first occurrence.
        let mut first_index: HashMap<&str, usize> = HashMap::new();
        for (i, w) in self.words.iter().enumerate() {
            first_index.entry(w).or_insert(i);
        }

        let mut sentiments = Vec::with_capacity(n);
        for word in &self.words {
            let i = first_index[word];
            let lower = &self.lower[i];
            let kind_of = i + 1 < n && lower == "kind" && self.lower[i + 1] == "of";
            if kind_of || self.lexicon.booster(lower).is_some() {
                sentiments.push(0.0);
                continue;
            }
            sentiments.push(self.valence(i));
        }

        if let Some(but) = self.lower.iter().position(|w| w == "but") {
            for (j, s) in sentiments.iter_mut().enumerate() {
                if j < but {
                    *s *= 0.5;
                } else if j > but {
                    *s *= 1.5;
                }
            }
        }

        self.aggregate(&sentiments)
    }

    fn valence(&self, i: usize) -> f64 {
        let Some(mut valence) = self.lexicon.valence(&self.lower[i]) else {
            return 0.0;
        };
        if self.cap_differential && is_upper(self.words[i]) {
            valence += if valence > 0.0 { CAPS_INCREMENT } else { -CAPS_INCREMENT };
        }

        for distance in 0..3 {
            if i <= distance || self.lexicon.contains(&self.lower[i - distance - 1]) {
                continue;
            }
            let mut scalar = self.booster_scalar(i - distance - 1, valence);
            if scalar != 0.0 {
                scalar *= [1.0, 0.95, 0.9][distance];
            }
            valence += scalar;
            valence = self.negation_check(valence, distance, i);
            if distance == 2 {
                valence = self.idiom_check(valence, i);
            }
        }

        self.least_check(valence, i)
    }

    fn booster_scalar(&self, j: usize, valence: f64) -> f64 {
        let Some(mut scalar) = self.lexicon.booster(&self.lower[j]) else {
            return 0.0;
        };
        if valence < 0.0 {
            scalar = -scalar;
        }
        if self.cap_differential && is_upper(self.words[j]) {
            scalar += if valence > 0.0 { CAPS_INCREMENT } else { -CAPS_INCREMENT };
        }
        scalar
    }

    fn negated(&self, j: usize) -> bool {
        let w = &self.lower[j];
        self.lexicon.is_negation(w) || w.contains("n't")
    }

    fn negation_check(&self, valence: f64, distance: usize, i: usize) -> f64 {
        let w = &self.words;
        let so_or_this = |s: &str| s == "so" || s == "this";
        match distance {
            0 if self.negated(i - 1) => valence * NEGATION_SCALAR,
            1 if w[i - 2] == "never" && so_or_this(w[i - 1]) => valence * 1.5,
            1 if self.negated(i - 2) => valence * NEGATION_SCALAR,
            2 if (w[i - 3] == "never" && so_or_this(w[i - 2])) || so_or_this(w[i - 1]) => valence * 1.25,
            2 if self.negated(i - 3) => valence * NEGATION_SCALAR,
            _ => valence,
        }
    }

    fn idiom_check(&self, mut valence: f64, i: usize) -> f64 {
        let w = &self.words;
        let n = w.len();
        let one_zero = format!("{} {}", w[i - 1], w[i]);
        let two_one_zero = format!("{} {} {}", w[i - 2], w[i - 1], w[i]);
        let two_one = format!("{} {}", w[i - 2], w[i - 1]);
        let three_two_one = format!("{} {} {}", w[i - 3], w[i - 2], w[i - 1]);
        let three_two = format!("{} {}", w[i - 3], w[i - 2]);

        let behind = [&one_zero, &two_one_zero, &two_one, &three_two_one, &three_two];
        if let Some(v) = behind.iter().find_map(|s| self.lexicon.idiom(s)) {
            valence = v;
        }
        if n - 1 > i {
            if let Some(v) = self.lexicon.idiom(&format!("{} {}", w[i], w[i + 1])) {
                valence = v;
            }
        }
        if n - 1 > i + 1 {
            if let Some(v) = self.lexicon.idiom(&format!("{} {} {}", w[i], w[i + 1], w[i + 2])) {
                valence = v;
            }
        }
        if self.lexicon.booster(&three_two).is_some() || self.lexicon.booster(&two_one).is_some() {
            valence += BOOSTER_DECREMENT;
        }
        valence
    }

    fn least_check(&self, valence: f64, i: usize) -> f64 {
        let l = &self.lower;
        let least_before = |j: usize| !self.lexicon.contains(&l[j]) && l[j] == "least";
        if i > 1 && least_before(i - 1) {
            if l[i - 2] != "at" && l[i - 2] != "very" {
                return valence * NEGATION_SCALAR;
            }
            valence
        } else if i > 0 && least_before(i - 1) {
            valence * NEGATION_SCALAR
        } else {
            valence
        }
    }

    fn punctuation_amplifier(&self) -> f64 {
        let exclamations = self.text.matches('!').count().min(MAX_EXCLAMATIONS);
        let questions = self.text.matches('?').count();
        let question_amp = match questions {
            0 | 1 => 0.0,
            2 | 3 => questions as f64 * QUESTION_INCREMENT,
            _ => QUESTION_CAP,
        };
        exclamations as f64 * EXCLAMATION_INCREMENT + question_amp
    }

    fn aggregate(&self, sentiments: &[f64]) -> PolarityScores {
        if sentiments.is_empty() {
            return PolarityScores::NEUTRAL;
        }
        let amplifier = self.punctuation_amplifier();
        let mut total: f64 = sentiments.iter().sum();
        if total > 0.0 {
            total += amplifier;
        } else if total < 0.0 {
            total -= amplifier;
        }
        let compound = normalize(total);

        // Each non-neutral word counts one extra unit, matching neutral words.
        let mut pos_sum = 0.0;
        let mut neg_sum = 0.0;
        let mut neu_count = 0.0;
        for &s in sentiments {
            if s > 0.0 {
                pos_sum += s + 1.0;
            }
            if s < 0.0 {
                neg_sum += s - 1.0;
            }
            if s == 0.0 {
                neu_count += 1.0;
            }
        }
        if pos_sum > neg_sum.abs() {
            pos_sum += amplifier;
        } else if pos_sum < neg_sum.abs() {
            neg_sum -= amplifier;
        }
        let denom = pos_sum + neg_sum.abs() + neu_count;
        PolarityScores {
            neg: (neg_sum / denom).abs(),
            neu: (neu_count / denom).abs(),
            pos: (pos_sum / denom).abs(),
            compound,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compound(text: &str) -> f64 {
        score_text(SentimentLexicon::builtin(), text).compound
    }

    #[test]
    fn empty_text_is_neutral() {
        assert_eq!(score_text(SentimentLexicon::builtin(), ""), PolarityScores::NEUTRAL);
        assert_eq!(score_text(SentimentLexicon::builtin(), "a ! ?"), PolarityScores::NEUTRAL);
    }

    #[test]
    fn reference_sentences() {
        assert!((compound("VADER is smart, handsome, and funny.") - 0.8316).abs() < 1e-4);
        assert!((compound("VADER is not smart, handsome, nor funny.") + 0.7424).abs() < 1e-4);
    }

    #[test]
    fn tokenizer_strips_single_edge_punctuation() {
        assert_eq!(tokenize("funny. (smart) :) x"), vec!["funny", "(smart)", ":)"]);
        assert_eq!(tokenize("don't,  !!wow"), vec!["don't,", "wow"]);
        assert_eq!(tokenize("wow!!! ok"), vec!["wow", "ok"]);
    }

    #[test]
    fn python_isupper_semantics() {
        assert!(is_upper("SUX!"));
        assert!(is_upper("A1"));
        assert!(!is_upper("123"));
        assert!(!is_upper("Sux"));
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize(0.0), 0.0);
        assert!((normalize(1.0) - 1.0 / 16f64.sqrt()).abs() < 1e-15);
        assert!(normalize(1e6) < 1.0);
    }

    #[test]
    fn medians() {
        let lex = SentimentLexicon::builtin();
        let m = median_by_emotion(lex, [("", Emotion::Neutral)]);
        assert_eq!(m, BTreeMap::from([(Emotion::Neutral, 0.0)]));
        assert!(median_by_emotion(lex, []).is_empty());

        assert_eq!(median(&mut [0.4, -0.2, 0.0]), 0.0);
        assert_eq!(median(&mut [0.4, -0.2, 0.0, 0.2]), 0.1);
    }

    #[test]
    fn medians_group_by_emotion() {
        let lex = SentimentLexicon::builtin();
        let corpus = [("The book was good.", Emotion::Joy), ("the", Emotion::Joy), ("Today SUX!", Emotion::Anger)];
        let m = median_by_emotion(lex, corpus);
        assert_eq!(m.len(), 2);
        assert_eq!(m[&Emotion::Joy], lex.score("The book was good.").compound / 2.0);
        assert_eq!(m[&Emotion::Anger], lex.score("Today SUX!").compound);
    }
}
