/// Lowercases `text` and splits it into alphanumeric runs and single
/// punctuation characters. Whitespace only separates.
///
/// ```
/// use emograd_core::metrics::tokenize;
/// assert_eq!(tokenize("He is angry."), ["he", "is", "angry", "."]);
/// assert_eq!(tokenize("don't stop"), ["don", "'", "t", "stop"]);
/// ```
pub fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut word = String::new();
    for c in text.chars().flat_map(char::to_lowercase) {
        if c.is_alphanumeric() {
            word.push(c);
            continue;
        }
        if !word.is_empty() {
            out.push(std::mem::take(&mut word));
        }
        if !c.is_whitespace() {
            out.push(c.to_string());
        }
    }
    if !word.is_empty() {
        out.push(word);
    }
    out
}
