use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::error::{Error, Result};

const BUILTIN_LEXICON: &str = include_str!("../../data/vader_lexicon.txt");
const BUILTIN_RULES: &str = include_str!("../../data/vader_rules.json");

/// Token valences plus the booster, negation and idiom tables.
#[derive(Debug, Clone, PartialEq)]
pub struct SentimentLexicon {
    valences: HashMap<String, f64>,
    boosters: HashMap<String, f64>,
    negations: HashSet<String>,
    idioms: HashMap<String, f64>,
}

/// JSON sidecar holding everything except token valences.
#[derive(Debug, Clone, Deserialize)]
struct Rules {
    negations: Vec<String>,
    boosters: BTreeMap<String, f64>,
    idioms: BTreeMap<String, f64>,
}

impl SentimentLexicon {
    /// The vendored lexicon and rule tables, parsed once.
    pub fn builtin() -> &'static SentimentLexicon {
        static LEXICON: OnceLock<SentimentLexicon> = OnceLock::new();
        LEXICON
            .get_or_init(|| SentimentLexicon::parse(BUILTIN_LEXICON, BUILTIN_RULES).expect("vendored lexicon is valid"))
    }

    /// Parses a `token<TAB>valence[<TAB>...]` lexicon and a JSON rules sidecar.
    pub fn parse(lexicon: &str, rules: &str) -> Result<SentimentLexicon> {
        let rules: Rules = serde_json::from_str(rules).map_err(Error::Rules)?;
        Ok(SentimentLexicon {
            valences: parse_valences(lexicon)?,
            boosters: rules.boosters.into_iter().collect(),
            negations: rules.negations.into_iter().collect(),
            idioms: rules.idioms.into_iter().collect(),
        })
    }

    /// Loads a lexicon file, with the vendored rules unless `rules` is given.
    pub fn load(lexicon: &Path, rules: Option<&Path>) -> Result<SentimentLexicon> {
        let lexicon = fs::read_to_string(lexicon)?;
        let rules = match rules {
            Some(path) => fs::read_to_string(path)?,
            None => BUILTIN_RULES.to_string(),
        };
        SentimentLexicon::parse(&lexicon, &rules)
    }

    pub fn valence(&self, token: &str) -> Option<f64> {
        self.valences.get(token).copied()
    }

    pub fn contains(&self, token: &str) -> bool {
        self.valences.contains_key(token)
    }

    pub fn booster(&self, token: &str) -> Option<f64> {
        self.boosters.get(token).copied()
    }

    pub fn is_negation(&self, token: &str) -> bool {
        self.negations.contains(token)
    }

    pub fn idiom(&self, phrase: &str) -> Option<f64> {
        self.idioms.get(phrase).copied()
    }

    pub fn len(&self) -> usize {
        self.valences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.valences.is_empty()
    }
}

fn parse_valences(text: &str) -> Result<HashMap<String, f64>> {
    let mut out = HashMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut cols = line.split('\t');
        let token = cols.next().unwrap_or_default();
        let value = cols
            .next()
            .ok_or_else(|| Error::Lexicon { line: n + 1, message: "expected `token<TAB>valence`".to_string() })?;
        if token.is_empty() {
            return Err(Error::Lexicon { line: n + 1, message: "empty token".to_string() });
        }
        let valence: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::Lexicon { line: n + 1, message: format!("valence `{value}` is not a number") })?;
        if !valence.is_finite() {
            return Err(Error::Lexicon { line: n + 1, message: "valence is not finite".to_string() });
        }
        out.insert(token.to_string(), valence);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads() {
        let lex = SentimentLexicon::builtin();
        assert_eq!(lex.len(), 7506);
        assert_eq!(lex.valence("good"), Some(1.9));
        assert_eq!(lex.booster("very"), Some(0.293));
        assert_eq!(lex.booster("kinda"), Some(-0.293));
        assert!(lex.is_negation("not"));
        assert_eq!(lex.idiom("the bomb"), Some(3.0));
    }

    #[test]
    fn extra_columns_are_ignored() {
        let lex = SentimentLexicon::parse("good\t1.9\t0.9\t[2, 2]\n\nbad\t-2.5\n", BUILTIN_RULES).unwrap();
        assert_eq!(lex.valence("good"), Some(1.9));
        assert_eq!(lex.valence("bad"), Some(-2.5));
        assert_eq!(lex.len(), 2);
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        let err = SentimentLexicon::parse("good\t1.9\nbad\n", BUILTIN_RULES).unwrap_err();
        assert!(matches!(err, Error::Lexicon { line: 2, .. }), "{err}");
        let err = SentimentLexicon::parse("a\t1\nb\t2\nc\tlots\n", BUILTIN_RULES).unwrap_err();
        assert!(matches!(err, Error::Lexicon { line: 3, .. }), "{err}");
        assert!(matches!(SentimentLexicon::parse("a\t1\n", "{\"negations\": 3}"), Err(Error::Rules(_))));
    }
}
