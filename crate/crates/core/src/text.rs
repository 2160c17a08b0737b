//! Unicode-aware normalization, tokenization and sentence segmentation for
//! Modern Standard Arabic input.
//!
//! Offsets are counted in Unicode scalar values, not bytes, so any consumer
//! computes identical positions regardless of encoding.

use serde::{Deserialize, Serialize};

/// Arabic diacritic marks (tashkeel) removed during normalization.
const DIACRITICS_START: char = '\u{064B}';
const DIACRITICS_END: char = '\u{0652}';

/// Tatweel (elongation character), purely typographic.
const TATWEEL: char = '\u{0640}';

/// Punctuation inventory. Each of these becomes its own one-character token.
pub const PUNCTUATION: &[char] = &['؟', '?', '،', ',', '.', '!', ':'];

/// Sentence terminators, a subset of [`PUNCTUATION`].
pub const TERMINATORS: &[char] = &['؟', '?', '.', '!'];

/// Input text after [`normalize`]: no diacritics, no tatweel, single-space
/// separated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedText(String);

impl NormalizedText {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for NormalizedText {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TokenKind {
    Word,
    Punctuation,
}

/// A surface unit of one normalized sentence. `start..end` are scalar-value
/// offsets into the normalized text and `surface` equals that slice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub start: usize,
    pub end: usize,
    pub kind: TokenKind,
}

impl Token {
    pub fn is_word(&self) -> bool {
        self.kind == TokenKind::Word
    }

    /// True when this token is a single character from [`TERMINATORS`].
    pub fn is_terminator(&self) -> bool {
        self.kind == TokenKind::Punctuation
            && self.surface.chars().count() == 1
            && self
                .surface
                .chars()
                .next()
                .is_some_and(|c| TERMINATORS.contains(&c))
    }
}

/// One segmented sentence: ordered tokens, with the terminator (if any) as
/// the final token.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    pub tokens: Vec<Token>,
}

impl Sentence {
    /// The terminator token, when the sentence ends in one.
    pub fn terminator(&self) -> Option<&Token> {
        self.tokens.last().filter(|t| t.is_terminator())
    }

    /// Surfaces of the word tokens, in order.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.tokens
            .iter()
            .filter(|t| t.is_word())
            .map(|t| t.surface.as_str())
    }
}

fn is_diacritic(c: char) -> bool {
    (DIACRITICS_START..=DIACRITICS_END).contains(&c)
}

/// Arabic letters as understood by the tokenizer: the base MSAr alphabet
/// including hamza-bearing forms, plus the extended Arabic-script letters so
/// that loanwords stay in one piece.
pub fn is_arabic_letter(c: char) -> bool {
    matches!(c,
        '\u{0621}'..='\u{063A}'
        | '\u{0641}'..='\u{064A}'
        | '\u{0671}'..='\u{06D3}'
        | '\u{06D5}')
}

fn is_punctuation(c: char) -> bool {
    PUNCTUATION.contains(&c)
}

/// Normalize raw input: strip diacritics (U+064B–U+0652) and tatweel, then
/// collapse whitespace runs to a single space and trim the ends.
///
/// Hamza-bearing alef forms (أ إ آ) are preserved: the present-tense prefix
/// rule keys on the letter أ and folding it would destroy the trigger.
/// Idempotent and deterministic; empty input yields empty output.
pub fn normalize(raw: &str) -> NormalizedText {
    let mut out = String::with_capacity(raw.len());
    let mut pending_space = false;
    for c in raw.chars() {
        if is_diacritic(c) || c == TATWEEL {
            continue;
        }
        if c.is_whitespace() {
            pending_space = true;
            continue;
        }
        if pending_space && !out.is_empty() {
            out.push(' ');
        }
        pending_space = false;
        out.push(c);
    }
    NormalizedText(out)
}

/// Tokenize normalized text.
///
/// Words are maximal runs of Arabic letters; every character from the
/// punctuation inventory becomes its own one-character token; whitespace
/// separates and produces no token. Any other character (Latin letters,
/// digits, symbols) passes through as a single-character word token so
/// mixed-script input degrades gracefully.
pub fn tokenize(text: &NormalizedText) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut run_start: Option<usize> = None;
    let mut run = String::new();

    let flush = |run_start: &mut Option<usize>, run: &mut String, pos: usize, tokens: &mut Vec<Token>| {
        if let Some(start) = run_start.take() {
            tokens.push(Token {
                surface: std::mem::take(run),
                start,
                end: pos,
                kind: TokenKind::Word,
            });
        }
    };

    for (pos, c) in text.as_str().chars().enumerate() {
        if is_arabic_letter(c) {
            if run_start.is_none() {
                run_start = Some(pos);
            }
            run.push(c);
        } else if c.is_whitespace() {
            flush(&mut run_start, &mut run, pos, &mut tokens);
        } else if is_punctuation(c) {
            flush(&mut run_start, &mut run, pos, &mut tokens);
            tokens.push(Token {
                surface: c.to_string(),
                start: pos,
                end: pos + 1,
                kind: TokenKind::Punctuation,
            });
        } else {
            // Outside the alphabet and the inventory: a one-character word.
            flush(&mut run_start, &mut run, pos, &mut tokens);
            tokens.push(Token {
                surface: c.to_string(),
                start: pos,
                end: pos + 1,
                kind: TokenKind::Word,
            });
        }
    }
    let len = text.as_str().chars().count();
    flush(&mut run_start, &mut run, len, &mut tokens);
    tokens
}

/// Split a token stream into sentences after each terminator (؟ ? . !).
///
/// The terminator stays attached to the preceding sentence; a trailing
/// terminator-less run forms a final sentence. Fragments with no word token
/// (punctuation-only or empty) are dropped.
pub fn split_sentences(tokens: Vec<Token>) -> Vec<Sentence> {
    let mut sentences = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    for token in tokens {
        let terminates = token.is_terminator();
        current.push(token);
        if terminates {
            flush_sentence(&mut current, &mut sentences);
        }
    }
    flush_sentence(&mut current, &mut sentences);
    sentences
}

fn flush_sentence(current: &mut Vec<Token>, sentences: &mut Vec<Sentence>) {
    if current.iter().any(Token::is_word) {
        sentences.push(Sentence {
            tokens: std::mem::take(current),
        });
    } else {
        current.clear();
    }
}
