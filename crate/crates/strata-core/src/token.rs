//! Lexical scanner splitting raw text into words, numbers, and
//! one-character symbol tokens.

use alloc::string::String;
use alloc::vec::Vec;

/// Lexical class of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    /// Maximal run of ASCII letters, optionally containing a single
    /// internal apostrophe.
    Word,
    /// Maximal run of ASCII digits with optional internal `.`/`,`
    /// separators flanked by digits on both sides.
    Number,
    /// Any other non-whitespace character, one token per character.
    Symbol,
}

/// One scanned token with its 0-based character offset in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub kind: TokenKind,
    pub offset: usize,
}

/// A `surface_TAG` token from pre-tagged input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedToken {
    pub surface: String,
    pub tag: String,
}

/// Scans `text` into a token stream.
///
/// Total: every non-whitespace character lands in exactly one token,
/// so concatenating surfaces with the skipped whitespace reconstructs
/// the input. Offsets are character indices and strictly increase.
pub fn tokenize(text: &str) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            let mut surface = String::new();
            let mut apostrophe_seen = false;
            while i < chars.len() {
                let c = chars[i];
                if c.is_ascii_alphabetic() {
                    surface.push(c);
                    i += 1;
                } else if c == '\''
                    && !apostrophe_seen
                    && i + 1 < chars.len()
                    && chars[i + 1].is_ascii_alphabetic()
                {
                    apostrophe_seen = true;
                    surface.push(c);
                    i += 1;
                } else {
                    break;
                }
            }
            tokens.push(Token {
                surface,
                kind: TokenKind::Word,
                offset: start,
            });
        } else if c.is_ascii_digit() {
            let start = i;
            let mut surface = String::new();
            while i < chars.len() {
                let c = chars[i];
                let grouping = (c == '.' || c == ',')
                    && i + 1 < chars.len()
                    && chars[i + 1].is_ascii_digit();
                if c.is_ascii_digit() || grouping {
                    surface.push(c);
                    i += 1;
                } else {
                    break;
                }
            }
            tokens.push(Token {
                surface,
                kind: TokenKind::Number,
                offset: start,
            });
        } else {
            let mut surface = String::new();
            surface.push(c);
            tokens.push(Token {
                surface,
                kind: TokenKind::Symbol,
                offset: i,
            });
            i += 1;
        }
    }
    tokens
}

/// Splits pre-tagged input into `surface`/`TAG` pairs.
///
/// Tokens are whitespace-separated and split at the last underscore,
/// so surfaces may themselves contain underscores. A chunk without an
/// underscore becomes a token with an empty tag (and is dropped by
/// the open-class filter).
pub fn tokenize_pretagged(text: &str) -> Vec<TaggedToken> {
    text.split_whitespace()
        .map(|chunk| match chunk.rsplit_once('_') {
            Some((surface, tag)) => TaggedToken {
                surface: String::from(surface),
                tag: String::from(tag),
            },
            None => TaggedToken {
                surface: String::from(chunk),
                tag: String::new(),
            },
        })
        .collect()
}
