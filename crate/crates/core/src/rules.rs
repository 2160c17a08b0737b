//! The declarative rule inventory: prefixes, particles, adverbs and emphasis
//! words consumed by morphological analysis and feature extraction.
//!
//! The compiled-in defaults carry the full inventory; an optional override
//! file can extend or re-map triggers, which keeps the rule tables auditable
//! without touching code.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use crate::features::Tense;

/// Trigger tables for the rule engine. Word triggers are matched against
/// whole token surfaces; prefix triggers against the first letter of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    /// Prefix letter marking the future tense (default س).
    pub future_prefix: char,
    /// Prefix letters marking the present tense (default ت ن ي أ).
    pub present_prefixes: BTreeSet<char>,
    /// Negation particles and the tense each one implies.
    pub negation_particles: BTreeMap<String, Tense>,
    /// Question adverbs and their interrogative labels.
    pub question_adverbs: BTreeMap<String, String>,
    /// Question-mark characters accepted as interrogative terminators.
    pub question_marks: BTreeSet<char>,
    /// Particles introducing the conditional form.
    pub conditional_particles: BTreeSet<String>,
    /// Words expressing emphasis, kept as dedicated gloss tokens.
    pub emphasis_words: BTreeSet<String>,
}

impl Default for RuleSet {
    fn default() -> Self {
        let mut negation_particles = BTreeMap::new();
        negation_particles.insert("لا".to_string(), Tense::Present);
        negation_particles.insert("ليس".to_string(), Tense::Present);
        negation_particles.insert("لن".to_string(), Tense::Future);
        negation_particles.insert("لم".to_string(), Tense::Past);

        let mut question_adverbs = BTreeMap::new();
        question_adverbs.insert("هل".to_string(), "YES-NO".to_string());
        question_adverbs.insert("من".to_string(), "WHO".to_string());
        question_adverbs.insert("أين".to_string(), "WHERE".to_string());
        question_adverbs.insert("متى".to_string(), "WHEN".to_string());
        question_adverbs.insert("ماذا".to_string(), "WHAT".to_string());
        question_adverbs.insert("كيف".to_string(), "HOW".to_string());

        RuleSet {
            future_prefix: 'س',
            present_prefixes: ['ت', 'ن', 'ي', 'أ'].into_iter().collect(),
            negation_particles,
            question_adverbs,
            question_marks: ['؟', '?'].into_iter().collect(),
            conditional_particles: ["إذا".to_string(), "لو".to_string()]
                .into_iter()
                .collect(),
            emphasis_words: ["جدا".to_string(), "مرارا".to_string()]
                .into_iter()
                .collect(),
        }
    }
}

impl RuleSet {
    /// The tense implied by a negation particle, when `word` is one.
    pub fn negation_tense(&self, word: &str) -> Option<Tense> {
        self.negation_particles.get(word).copied()
    }

    pub fn is_negation(&self, word: &str) -> bool {
        self.negation_particles.contains_key(word)
    }

    /// The interrogative label for a question adverb, when `word` is one.
    pub fn question_label(&self, word: &str) -> Option<&str> {
        self.question_adverbs.get(word).map(String::as_str)
    }

    pub fn is_conditional(&self, word: &str) -> bool {
        self.conditional_particles.contains(word)
    }

    pub fn is_emphasis(&self, word: &str) -> bool {
        self.emphasis_words.contains(word)
    }

    pub fn is_question_mark(&self, c: char) -> bool {
        self.question_marks.contains(&c)
    }

    pub fn is_present_prefix(&self, c: char) -> bool {
        self.present_prefixes.contains(&c)
    }

    /// Merge override lines into this rule set, then re-validate.
    ///
    /// Format: `category<TAB>trigger[<TAB>value]`, one rule per line, `#`
    /// comments. `negation` and `question-adverb` take a value column
    /// (a tense, resp. a label); the other categories take none.
    pub fn apply_overrides(&mut self, text: &str) -> Result<(), RuleError> {
        for (idx, raw_line) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw_line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = raw_line.split('\t').map(str::trim).collect();
            let (category, trigger, value) = match fields.as_slice() {
                [c, t] => (*c, *t, None),
                [c, t, v] => (*c, *t, Some(*v)),
                _ => {
                    return Err(RuleError::ColumnCount {
                        line,
                        found: fields.len(),
                    })
                }
            };
            if trigger.is_empty() {
                return Err(RuleError::EmptyTrigger { line });
            }
            match category {
                "negation" => {
                    let value = value.ok_or(RuleError::MissingValue { line })?;
                    let tense = parse_mapped_tense(value)
                        .ok_or_else(|| RuleError::InvalidTense {
                            line,
                            value: value.to_string(),
                        })?;
                    self.negation_particles.insert(trigger.to_string(), tense);
                }
                "question-adverb" => {
                    let value = value.ok_or(RuleError::MissingValue { line })?;
                    self.question_adverbs
                        .insert(trigger.to_string(), value.to_string());
                }
                "conditional" => {
                    reject_value(value, line)?;
                    self.conditional_particles.insert(trigger.to_string());
                }
                "emphasis" => {
                    reject_value(value, line)?;
                    self.emphasis_words.insert(trigger.to_string());
                }
                "question-mark" => {
                    reject_value(value, line)?;
                    self.question_marks.insert(single_char(trigger, line)?);
                }
                "future-prefix" => {
                    reject_value(value, line)?;
                    self.future_prefix = single_char(trigger, line)?;
                }
                "present-prefix" => {
                    reject_value(value, line)?;
                    self.present_prefixes.insert(single_char(trigger, line)?);
                }
                other => {
                    return Err(RuleError::UnknownCategory {
                        line,
                        category: other.to_string(),
                    })
                }
            }
        }
        self.validate()
    }

    /// Check the rule-set invariants: no empty category and no word trigger
    /// claimed by two categories.
    pub fn validate(&self) -> Result<(), RuleError> {
        let categories: [(&str, Vec<&String>); 4] = [
            ("negation", self.negation_particles.keys().collect()),
            ("question-adverb", self.question_adverbs.keys().collect()),
            ("conditional", self.conditional_particles.iter().collect()),
            ("emphasis", self.emphasis_words.iter().collect()),
        ];
        for (name, words) in &categories {
            if words.is_empty() {
                return Err(RuleError::EmptyCategory {
                    category: name.to_string(),
                });
            }
        }
        if self.present_prefixes.is_empty() {
            return Err(RuleError::EmptyCategory {
                category: "present-prefix".to_string(),
            });
        }
        if self.question_marks.is_empty() {
            return Err(RuleError::EmptyCategory {
                category: "question-mark".to_string(),
            });
        }
        let mut seen: BTreeMap<&str, &str> = BTreeMap::new();
        for (name, words) in &categories {
            for word in words {
                if let Some(first) = seen.insert(word.as_str(), name) {
                    return Err(RuleError::OverlappingTrigger {
                        word: word.to_string(),
                        first: first.to_string(),
                        second: name.to_string(),
                    });
                }
            }
        }
        Ok(())
    }
}

fn reject_value(value: Option<&str>, line: usize) -> Result<(), RuleError> {
    match value {
        None => Ok(()),
        Some(_) => Err(RuleError::ColumnCount { line, found: 3 }),
    }
}

fn single_char(trigger: &str, line: usize) -> Result<char, RuleError> {
    let mut chars = trigger.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(RuleError::NotOneCharacter {
            line,
            value: trigger.to_string(),
        }),
    }
}

/// Tenses a negation particle may map to (never `Unspecified`).
fn parse_mapped_tense(value: &str) -> Option<Tense> {
    match value {
        "Past" => Some(Tense::Past),
        "Present" => Some(Tense::Present),
        "Future" => Some(Tense::Future),
        _ => None,
    }
}

/// Build the default rule set and merge the override file at `path`.
pub fn load_rules(path: &Path) -> Result<RuleSet, RuleError> {
    let text = std::fs::read_to_string(path).map_err(|source| RuleError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut rules = RuleSet::default();
    rules.apply_overrides(&text)?;
    Ok(rules)
}

#[derive(Debug, thiserror::Error)]
pub enum RuleError {
    #[error("cannot read rules file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("rules line {line}: unknown category \"{category}\"")]
    UnknownCategory { line: usize, category: String },
    #[error("rules line {line}: expected 2 or 3 tab-separated fields matching the category, found {found}")]
    ColumnCount { line: usize, found: usize },
    #[error("rules line {line}: empty trigger")]
    EmptyTrigger { line: usize },
    #[error("rules line {line}: this category requires a value column")]
    MissingValue { line: usize },
    #[error("rules line {line}: invalid tense \"{value}\" (expected Past, Present or Future)")]
    InvalidTense { line: usize, value: String },
    #[error("rules line {line}: \"{value}\" must be a single character")]
    NotOneCharacter { line: usize, value: String },
    #[error("rule category \"{category}\" must not be empty")]
    EmptyCategory { category: String },
    #[error("trigger \"{word}\" appears in two categories ({first} and {second})")]
    OverlappingTrigger {
        word: String,
        first: String,
        second: String,
    },
}
