//! Lexicon-backed lightweight morphological analysis.
//!
//! Each word token gets a lemma, a part of speech and a verb-prefix feature.
//! Resolution is exact-match first; the prefix rules (future س, present
//! ت ن ي أ) only fire when the lexicon confirms an imperfective stem, which
//! keeps them from misfiring on the many nouns that happen to start with
//! those letters.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::rules::RuleSet;
use crate::text::{Token, TokenKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pos {
    Verb,
    Noun,
    Particle,
    Adverb,
    Adjective,
    Pronoun,
    Other,
}

impl Pos {
    fn parse(label: &str) -> Option<Pos> {
        match label {
            "Verb" => Some(Pos::Verb),
            "Noun" => Some(Pos::Noun),
            "Particle" => Some(Pos::Particle),
            "Adverb" => Some(Pos::Adverb),
            "Adjective" => Some(Pos::Adjective),
            "Pronoun" => Some(Pos::Pronoun),
            "Other" => Some(Pos::Other),
            _ => None,
        }
    }

    /// Disambiguation priority when one surface has several readings
    /// (lower wins, ties broken by lexicon file order).
    fn priority(self) -> u8 {
        match self {
            Pos::Verb => 0,
            Pos::Particle => 1,
            Pos::Adverb => 2,
            Pos::Noun => 3,
            Pos::Adjective => 4,
            Pos::Pronoun => 5,
            Pos::Other => 6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StemKind {
    PerfectiveStem,
    ImperfectiveStem,
    NotAVerbStem,
}

impl StemKind {
    fn parse(label: &str) -> Option<StemKind> {
        match label {
            "PerfectiveStem" => Some(StemKind::PerfectiveStem),
            "ImperfectiveStem" => Some(StemKind::ImperfectiveStem),
            "NotAVerbStem" => Some(StemKind::NotAVerbStem),
            _ => None,
        }
    }
}

/// One lexicon row: a surface (or verb stem), its lemma, part of speech and
/// stem kind. `line` is the 1-based row in the source file, kept for error
/// reporting and deterministic tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexiconEntry {
    pub surface: String,
    pub lemma: String,
    pub pos: Pos,
    pub stem_kind: StemKind,
    pub line: usize,
}

/// Immutable multi-map from surfaces to readings, exact-match lookup only.
#[derive(Debug, Clone)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
    by_surface: HashMap<String, Vec<usize>>,
    source_path: String,
}

impl Lexicon {
    /// Parse lexicon rows: UTF-8 TSV, four columns
    /// `surface<TAB>lemma<TAB>pos<TAB>stem-kind`, `#` comments.
    pub fn parse(text: &str, source_path: &str) -> Result<Lexicon, LexiconError> {
        let mut entries = Vec::new();
        let mut by_surface: HashMap<String, Vec<usize>> = HashMap::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw_line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = raw_line.split('\t').map(str::trim).collect();
            let [surface, lemma, pos_label, stem_label] = fields.as_slice() else {
                return Err(LexiconError::ColumnCount {
                    line,
                    found: fields.len(),
                });
            };
            if surface.is_empty() || lemma.is_empty() {
                return Err(LexiconError::EmptyField { line });
            }
            let pos = Pos::parse(pos_label).ok_or_else(|| LexiconError::UnknownPos {
                line,
                label: pos_label.to_string(),
            })?;
            let stem_kind =
                StemKind::parse(stem_label).ok_or_else(|| LexiconError::UnknownStemKind {
                    line,
                    label: stem_label.to_string(),
                })?;
            let is_verb = pos == Pos::Verb;
            let has_stem = stem_kind != StemKind::NotAVerbStem;
            if is_verb != has_stem {
                return Err(LexiconError::StemKindMismatch { line });
            }
            let index = entries.len();
            by_surface
                .entry(surface.to_string())
                .or_default()
                .push(index);
            entries.push(LexiconEntry {
                surface: surface.to_string(),
                lemma: lemma.to_string(),
                pos,
                stem_kind,
                line,
            });
        }
        Ok(Lexicon {
            entries,
            by_surface,
            source_path: source_path.to_string(),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn source_path(&self) -> &str {
        &self.source_path
    }

    /// All readings of a surface, in lexicon file order.
    pub fn lookup(&self, surface: &str) -> impl Iterator<Item = &LexiconEntry> {
        self.by_surface
            .get(surface)
            .into_iter()
            .flatten()
            .map(|&i| &self.entries[i])
    }

    /// Word surfaces known to the lexicon (for corpus sampling and demos).
    pub fn surfaces(&self) -> impl Iterator<Item = &str> {
        self.by_surface.keys().map(String::as_str)
    }

    fn best_reading(&self, surface: &str) -> Option<&LexiconEntry> {
        self.lookup(surface)
            .min_by_key(|entry| (entry.pos.priority(), entry.line))
    }

    fn imperfective_stem(&self, surface: &str) -> Option<&LexiconEntry> {
        self.lookup(surface)
            .find(|entry| entry.stem_kind == StemKind::ImperfectiveStem)
    }
}

/// Load a lexicon from a TSV file.
pub fn load_lexicon(path: &Path) -> Result<Lexicon, LexiconError> {
    let text = std::fs::read_to_string(path).map_err(|source| LexiconError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Lexicon::parse(&text, &path.display().to_string())
}

#[derive(Debug, thiserror::Error)]
pub enum LexiconError {
    #[error("cannot read lexicon file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("lexicon line {line}: expected 4 tab-separated columns, found {found}")]
    ColumnCount { line: usize, found: usize },
    #[error("lexicon line {line}: empty surface or lemma")]
    EmptyField { line: usize },
    #[error("lexicon line {line}: unknown part-of-speech label \"{label}\"")]
    UnknownPos { line: usize, label: String },
    #[error("lexicon line {line}: unknown stem kind \"{label}\"")]
    UnknownStemKind { line: usize, label: String },
    #[error("lexicon line {line}: verbs need a verb stem kind and non-verbs need NotAVerbStem")]
    StemKindMismatch { line: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerbPrefix {
    None,
    Future,
    Present,
}

/// Morphological reading of one word token. `token_index` is the position of
/// the token within its sentence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Analysis {
    pub token: Token,
    pub token_index: usize,
    pub lemma: String,
    pub pos: Pos,
    pub verb_prefix: VerbPrefix,
    pub matched_entry: Option<LexiconEntry>,
}

#[derive(Debug, thiserror::Error)]
pub enum AnalyzeError {
    #[error("analyze_token expects a word token, got punctuation {surface:?}")]
    PunctuationToken { surface: String },
}

/// Analyze one word token against the lexicon.
///
/// Resolution order, first match wins:
/// 1. exact surface match (highest-priority reading; the verb prefix then
///    derives from the entry's own stem kind, never from stripping);
/// 2. future prefix: leading س whose remainder has an imperfective reading;
/// 3. present prefix: leading ت/ن/ي/أ whose remainder has an imperfective
///    reading;
/// 4. unknown word: part of speech `Other`, the surface as its own lemma.
///
/// The prefix letters come from the [`RuleSet`] so the engine carries no
/// hard-coded Arabic outside the rule tables.
pub fn analyze_token(
    token: &Token,
    token_index: usize,
    lexicon: &Lexicon,
    rules: &RuleSet,
) -> Result<Analysis, AnalyzeError> {
    if token.kind != TokenKind::Word {
        return Err(AnalyzeError::PunctuationToken {
            surface: token.surface.clone(),
        });
    }
    let surface = token.surface.as_str();
    let analysis = |lemma: &str, pos, verb_prefix, entry: Option<&LexiconEntry>| Analysis {
        token: token.clone(),
        token_index,
        lemma: lemma.to_string(),
        pos,
        verb_prefix,
        matched_entry: entry.cloned(),
    };

    if let Some(entry) = lexicon.best_reading(surface) {
        let first = surface.chars().next();
        let verb_prefix = match (entry.stem_kind, first) {
            (StemKind::ImperfectiveStem, Some(c)) if rules.is_present_prefix(c) => {
                VerbPrefix::Present
            }
            _ => VerbPrefix::None,
        };
        return Ok(analysis(&entry.lemma, entry.pos, verb_prefix, Some(entry)));
    }

    let mut chars = surface.chars();
    if let Some(first) = chars.next() {
        let remainder = chars.as_str();
        if !remainder.is_empty() {
            if first == rules.future_prefix {
                if let Some(stem) = lexicon.imperfective_stem(remainder) {
                    return Ok(analysis(&stem.lemma, Pos::Verb, VerbPrefix::Future, Some(stem)));
                }
            }
            if rules.is_present_prefix(first) {
                if let Some(stem) = lexicon.imperfective_stem(remainder) {
                    return Ok(analysis(&stem.lemma, Pos::Verb, VerbPrefix::Present, Some(stem)));
                }
            }
        }
    }

    Ok(analysis(surface, Pos::Other, VerbPrefix::None, None))
}

/// Analyze all word tokens of a sentence; punctuation gets no analysis.
pub fn analyze_sentence(
    sentence: &crate::text::Sentence,
    lexicon: &Lexicon,
    rules: &RuleSet,
) -> Vec<Analysis> {
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_word())
        .map(|(i, t)| {
            analyze_token(t, i, lexicon, rules).expect("word tokens always analyze")
        })
        .collect()
}
