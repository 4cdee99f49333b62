use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::word::UpWord;

/// Prints `w` as `u(v)`; for alphabets with longer symbols as `[u1,u2](v1,v2)`
/// with the bracket omitted for an empty spoke.
pub fn format_upword(w: &UpWord, alphabet: &Alphabet) -> String {
    let spoke = alphabet.join_word(w.spoke());
    let cycle = alphabet.join_word(w.cycle());
    if alphabet.is_single_char() || spoke.is_empty() {
        format!("{spoke}({cycle})")
    } else {
        format!("[{spoke}]({cycle})")
    }
}

/// Parses the output of [`format_upword`] (surrounding quotes and spaces are
/// ignored) and canonicalizes it.
pub fn parse_upword(text: &str, alphabet: &Alphabet) -> Result<UpWord> {
    let bad = |msg: &str| Error::InvalidArgument(format!("ultimately periodic word {text:?}: {msg}"));
    let t = text.trim().trim_matches(|c| c == '"' || c == '\'').trim();
    let (spoke, rest) = if let Some(after) = t.strip_prefix('[') {
        let end = after.find(']').ok_or_else(|| bad("missing ']'"))?;
        (&after[..end], &after[end + 1..])
    } else {
        let open = t.find('(').ok_or_else(|| bad("missing '('"))?;
        (&t[..open], &t[open..])
    };
    let cycle = rest
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| bad("cycle must be written as (v)"))?;
    let spoke = alphabet.parse_word(spoke)?;
    let cycle = alphabet.parse_word(cycle)?;
    if cycle.is_empty() {
        return Err(bad("empty cycle"));
    }
    UpWord::new(&spoke, &cycle)
}

/// Splits a comma-separated list of word literals, ignoring commas inside
/// brackets or parentheses.
pub fn split_upword_list(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out.retain(|s| !s.is_empty());
    out
}
