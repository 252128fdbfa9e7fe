use std::fmt;

use serde::{Deserialize, Serialize};

use super::LabeledPair;
use crate::error::{Error, Result};
use crate::taxonomy::{Emotion, SentimentRange};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrefixStyle {
    /// `anger to disappointment: `
    #[default]
    FineGrained,
    /// `high_neg to low_neg: `
    SentimentRange,
}

/// The head of a prefix: a pair of emotions or a pair of ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Transition {
    Emotions(Emotion, Emotion),
    Ranges(SentimentRange, SentimentRange),
}

impl Transition {
    pub fn of(pair: &LabeledPair, style: PrefixStyle) -> Transition {
        match style {
            PrefixStyle::FineGrained => Transition::Emotions(pair.input_emotion, pair.target_emotion),
            PrefixStyle::SentimentRange => Transition::Ranges(pair.input_range, pair.target_range),
        }
    }

    pub fn style(&self) -> PrefixStyle {
        match self {
            Transition::Emotions(..) => PrefixStyle::FineGrained,
            Transition::Ranges(..) => PrefixStyle::SentimentRange,
        }
    }

    /// `"<from> to <to>: "`
    pub fn prefix(&self) -> String {
        format!("{self}: ")
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transition::Emotions(a, b) => write!(f, "{a} to {b}"),
            Transition::Ranges(a, b) => write!(f, "{} to {}", a.token(), b.token()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixedExample {
    pub style: PrefixStyle,
    pub prefix: String,
    pub input_text: String,
    pub target_text: String,
}

impl PrefixedExample {
    pub fn source(&self) -> String {
        format!("{}{}", self.prefix, self.input_text)
    }

    /// `prefix_and_input<TAB>target`, with tabs and line breaks inside either
    /// field replaced by spaces so the row stays two columns.
    pub fn to_tsv(&self) -> String {
        format!("{}\t{}", tsv_field(&self.source()), tsv_field(&self.target_text))
    }
}

fn tsv_field(s: &str) -> String {
    s.chars().map(|c| if matches!(c, '\t' | '\n' | '\r') { ' ' } else { c }).collect()
}

pub fn make_prefix(pair: &LabeledPair, style: PrefixStyle) -> PrefixedExample {
    PrefixedExample {
        style,
        prefix: Transition::of(pair, style).prefix(),
        input_text: pair.pair.input_text.clone(),
        target_text: pair.pair.target_text.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedPrefix<'a> {
    pub transition: Transition,
    pub remainder: &'a str,
}

/// Parses `"<X> to <Y>: rest"`. Emotion heads are tried before range heads,
/// so the ambiguous `neutral to neutral` reads as emotions; use
/// [`parse_prefix_as`] when the style is known.
pub fn parse_prefix(text: &str) -> Result<ParsedPrefix<'_>> {
    parse_prefix_as(text, PrefixStyle::FineGrained).or_else(|e| match e {
        Error::MalformedPrefix { reason: UNKNOWN, .. } => {
            parse_prefix_as(text, PrefixStyle::SentimentRange).map_err(|_| e)
        }
        other => Err(other),
    })
}

const UNKNOWN: &str = "unknown emotion or range";

pub fn parse_prefix_as(text: &str, style: PrefixStyle) -> Result<ParsedPrefix<'_>> {
    let malformed = |token: &str, reason| Error::MalformedPrefix { token: token.to_string(), reason };
    let Some((head, remainder)) = text.split_once(": ") else {
        return Err(malformed(text.split(' ').next().unwrap_or_default(), "missing `: ` after head"));
    };
    let parts: Vec<&str> = head.split(' ').collect();
    let [from, to_word, to] = parts[..] else {
        return Err(malformed(head, "head must be `<from> to <to>`"));
    };
    if to_word != "to" {
        return Err(malformed(to_word, "expected `to`"));
    }
    let transition = match style {
        PrefixStyle::FineGrained => {
            let parse = |t: &str| t.parse::<Emotion>().map_err(|_| malformed(t, UNKNOWN));
            Transition::Emotions(parse(from)?, parse(to)?)
        }
        PrefixStyle::SentimentRange => {
            let parse = |t: &str| t.parse::<SentimentRange>().map_err(|_| malformed(t, UNKNOWN));
            Transition::Ranges(parse(from)?, parse(to)?)
        }
    };
    Ok(ParsedPrefix { transition, remainder })
}
