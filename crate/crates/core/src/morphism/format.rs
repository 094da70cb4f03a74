//! Text format, one rule per line:
//!
//! ```text
//! # comment
//! alphabet: abcde
//! a -> abceacd
//! b -> ε
//! ```
//!
//! The optional `alphabet:` header fixes the codomain. `ε` on its own
//! denotes an empty image.

use std::fmt::Write;

use super::Morphism;
use crate::word::{is_valid_letter, Alphabet, Letter, Word};
use crate::{Error, Result};

const EMPTY_MARKER: char = 'ε';

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_morphism(text: &str) -> Result<Morphism> {
    let mut rules: Vec<(Letter, Word)> = Vec::new();
    let mut codomain: Option<(usize, Alphabet)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("alphabet:") {
            if codomain.is_some() {
                return Err(parse_error(line_no, "duplicate alphabet header"));
            }
            let letters: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
            let alphabet = letters
                .parse::<Alphabet>()
                .map_err(|e| parse_error(line_no, e.to_string()))?;
            codomain = Some((line_no, alphabet));
            continue;
        }
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| parse_error(line_no, "expected `<letter> -> <image>`"))?;
        let lhs = lhs.trim();
        let mut lhs_chars = lhs.chars();
        let letter = match (lhs_chars.next(), lhs_chars.next()) {
            (Some(c), None) if is_valid_letter(c) && c != EMPTY_MARKER => c,
            _ => {
                return Err(parse_error(
                    line_no,
                    format!("left-hand side must be one letter, got {lhs:?}"),
                ))
            }
        };
        if rules.iter().any(|(c, _)| *c == letter) {
            return Err(parse_error(
                line_no,
                format!("duplicate rule for letter {letter:?}"),
            ));
        }
        let rhs = rhs.trim();
        let image = if rhs.is_empty() {
            return Err(parse_error(
                line_no,
                "empty image; write ε for the empty word",
            ));
        } else if rhs == EMPTY_MARKER.to_string() {
            Word::empty()
        } else if rhs.contains(EMPTY_MARKER) {
            return Err(parse_error(line_no, "ε must stand alone as an image"));
        } else if rhs.chars().any(char::is_whitespace) {
            return Err(parse_error(
                line_no,
                "image must be a single run of letters",
            ));
        } else {
            rhs.parse::<Word>()
                .map_err(|e| parse_error(line_no, e.to_string()))?
        };
        rules.push((letter, image));
    }
    if rules.is_empty() {
        return Err(parse_error(text.lines().count().max(1), "no rules"));
    }
    let header_line = codomain.as_ref().map_or(1, |(l, _)| *l);
    Morphism::new(rules, codomain.map(|(_, a)| a))
        .map_err(|e| parse_error(header_line, e.to_string()))
}

/// Writes the alphabet header followed by one rule per domain letter, in
/// declaration order. Parsing the result gives back an equal morphism.
pub fn serialize_morphism(f: &Morphism) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "alphabet: {}", f.codomain());
    for (c, image) in f.domain().letters().iter().zip(f.images()) {
        if image.is_empty() {
            let _ = writeln!(out, "{c} -> {EMPTY_MARKER}");
        } else {
            let _ = writeln!(out, "{c} -> {image}");
        }
    }
    out
}
