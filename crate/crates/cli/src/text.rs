//! The two-line braid text format:
//!
//! ```text
//! strands: 3
//! word: 1 -2 1 -2
//! ```

use std::fmt;

use weaving_core::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    MissingLine(&'static str),
    BadStrands(String),
    BadLetter(String),
    Invalid(weaving_core::Error),
    TrailingInput,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MissingLine(what) => write!(f, "expected a `{what}:` line"),
            ParseError::BadStrands(s) => write!(f, "bad strand count `{s}`"),
            ParseError::BadLetter(s) => write!(f, "bad letter `{s}`"),
            ParseError::Invalid(e) => write!(f, "{e}"),
            ParseError::TrailingInput => f.write_str("unexpected input after the word line"),
        }
    }
}

impl std::error::Error for ParseError {}

pub fn format_braid(b: &BraidWord) -> String {
    let word: Vec<String> = b.to_ints().iter().map(i32::to_string).collect();
    if word.is_empty() {
        format!("strands: {}\nword:\n", b.strands())
    } else {
        format!("strands: {}\nword: {}\n", b.strands(), word.join(" "))
    }
}

fn field<'a>(line: Option<&'a str>, key: &'static str) -> Result<&'a str, ParseError> {
    line.and_then(|l| l.trim().strip_prefix(key))
        .and_then(|rest| rest.strip_prefix(':'))
        .map(str::trim)
        .ok_or(ParseError::MissingLine(key))
}

pub fn parse_braid(text: &str) -> Result<BraidWord, ParseError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n = field(lines.next(), "strands")?;
    let strands: usize = n.parse().map_err(|_| ParseError::BadStrands(n.to_string()))?;
    let word = field(lines.next(), "word")?;
    if lines.next().is_some() {
        return Err(ParseError::TrailingInput);
    }
    let ints = word
        .split_whitespace()
        .map(|t| match t.parse::<i32>() {
            Ok(v) if v != 0 => Ok(v),
            _ => Err(ParseError::BadLetter(t.to_string())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    BraidWord::from_ints(strands, &ints).map_err(ParseError::Invalid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_eight_text() {
        let b = BraidWord::weaving(3, 2).unwrap();
        let t = format_braid(&b);
        assert_eq!(t, "strands: 3\nword: 1 -2 1 -2\n");
        assert_eq!(parse_braid(&t).unwrap(), b);
    }

    #[test]
    fn empty_word() {
        let b = BraidWord::trivial(2).unwrap();
        assert_eq!(parse_braid(&format_braid(&b)).unwrap(), b);
        assert_eq!(parse_braid("strands: 2\nword:").unwrap(), b);
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(parse_braid("word: 1"), Err(ParseError::MissingLine("strands")));
        assert_eq!(parse_braid("strands: x\nword: 1"), Err(ParseError::BadStrands("x".into())));
        assert_eq!(parse_braid("strands: 3\nword: 1 0"), Err(ParseError::BadLetter("0".into())));
        assert!(matches!(parse_braid("strands: 3\nword: 3"), Err(ParseError::Invalid(_))));
        assert_eq!(parse_braid("strands: 3\nword: 1\nword: 2"), Err(ParseError::TrailingInput));
    }
}
