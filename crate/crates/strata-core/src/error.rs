//! Crate-wide error type.

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

/// Errors produced by the segmentation pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An IDF table build was attempted over zero documents.
    EmptyCorpus,
    /// A document contained no non-empty paragraphs.
    NoParagraphs,
    /// An evaluation was attempted against an empty gold boundary set.
    EmptyGold,
    /// The tiling input has fewer content tokens than one window.
    TextShorterThanWindow { tokens: usize, window: usize },
    /// The tiling window size is zero, odd, or the stride is zero.
    BadTileConfig(String),
    /// A stemmer input contained something other than ASCII letters.
    NotAWord(String),
    /// A term vector was requested for a stem absent from the text
    /// statistics or the significance map.
    MissingStem(String),
    /// A structured text input (IDF table, boundary file, dendrogram
    /// JSON) failed to parse. Lines are 1-based.
    Parse { line: usize, message: String },
    /// An error raised while analyzing a specific paragraph (1-based).
    InParagraph { ordinal: usize, source: Box<Error> },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn in_paragraph(ordinal: usize, source: Error) -> Self {
        Error::InParagraph {
            ordinal,
            source: Box::new(source),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyCorpus => write!(f, "empty corpus"),
            Error::NoParagraphs => write!(f, "no paragraphs"),
            Error::EmptyGold => write!(f, "empty gold set"),
            Error::TextShorterThanWindow { tokens, window } => write!(
                f,
                "text shorter than window: {tokens} content tokens, window {window}"
            ),
            Error::BadTileConfig(msg) => write!(f, "bad tiling configuration: {msg}"),
            Error::NotAWord(word) => write!(f, "not a word: {word:?}"),
            Error::MissingStem(stem) => write!(f, "stem missing from text statistics: {stem:?}"),
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
            Error::InParagraph { ordinal, source } => {
                write!(f, "paragraph {ordinal}: {source}")
            }
        }
    }
}

impl core::error::Error for Error {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Error::InParagraph { source, .. } => Some(source),
            _ => None,
        }
    }
}
