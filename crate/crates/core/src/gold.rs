//! Gold-corpus parsing and exact-match evaluation.
//!
//! A gold record pairs a source sentence with its hand-annotated expected
//! features (and optionally the expected glosses). [`evaluate`] runs the
//! pipeline over every source and reports per-category accuracy plus a
//! human-readable diff for each mismatch.

use std::path::Path;

use crate::features::{Mood, Polarity, Tense};
use crate::morph::Lexicon;
use crate::pipeline::process_text;
use crate::rules::RuleSet;

/// One annotated corpus sentence. TSV columns: source, tense, mood,
/// polarity, emphasis (semicolon-joined, `-` for none), optional glosses
/// (space-joined).
#[derive(Debug, Clone, PartialEq)]
pub struct GoldRecord {
    pub source: String,
    pub tense: Tense,
    pub mood: Mood,
    pub polarity: Polarity,
    pub emphasis: Vec<String>,
    pub glosses: Option<Vec<String>>,
    pub line: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum GoldError {
    #[error("cannot read gold corpus {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("gold line {line}: expected 5 or 6 tab-separated columns, found {found}")]
    ColumnCount { line: usize, found: usize },
    #[error("gold line {line}: empty source sentence")]
    EmptySource { line: usize },
    #[error("gold line {line}: invalid tense \"{value}\"")]
    BadTense { line: usize, value: String },
    #[error("gold line {line}: invalid mood \"{value}\"")]
    BadMood { line: usize, value: String },
    #[error("gold line {line}: invalid polarity \"{value}\"")]
    BadPolarity { line: usize, value: String },
}

fn parse_tense(value: &str, line: usize) -> Result<Tense, GoldError> {
    match value {
        "Past" => Ok(Tense::Past),
        "Present" => Ok(Tense::Present),
        "Future" => Ok(Tense::Future),
        "Unspecified" => Ok(Tense::Unspecified),
        _ => Err(GoldError::BadTense {
            line,
            value: value.to_string(),
        }),
    }
}

fn parse_mood(value: &str, line: usize) -> Result<Mood, GoldError> {
    match value {
        "Declarative" => Ok(Mood::Declarative),
        "Conditional" => Ok(Mood::Conditional),
        _ => match value.strip_prefix("Interrogative:") {
            Some(label) if !label.is_empty() => Ok(Mood::Interrogative(label.to_string())),
            _ => Err(GoldError::BadMood {
                line,
                value: value.to_string(),
            }),
        },
    }
}

fn parse_polarity(value: &str, line: usize) -> Result<Polarity, GoldError> {
    match value {
        "Affirmative" => Ok(Polarity::Affirmative),
        _ => match value.strip_prefix("Negative:") {
            Some(particle) if !particle.is_empty() => {
                Ok(Polarity::Negative(particle.to_string()))
            }
            _ => Err(GoldError::BadPolarity {
                line,
                value: value.to_string(),
            }),
        },
    }
}

fn parse_word_list(value: &str) -> Vec<String> {
    if value.is_empty() || value == "-" {
        return Vec::new();
    }
    value
        .split(';')
        .filter(|w| !w.is_empty())
        .map(str::to_string)
        .collect()
}

/// Parse gold records from TSV text; `#` comments and blank lines skipped.
pub fn parse_gold(text: &str) -> Result<Vec<GoldRecord>, GoldError> {
    let mut records = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw_line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw_line.split('\t').map(str::trim).collect();
        let (source, tense, mood, polarity, emphasis, glosses) = match fields.as_slice() {
            [s, t, m, p, e] => (*s, *t, *m, *p, *e, None),
            [s, t, m, p, e, g] => (*s, *t, *m, *p, *e, Some(*g)),
            _ => {
                return Err(GoldError::ColumnCount {
                    line,
                    found: fields.len(),
                })
            }
        };
        if source.is_empty() {
            return Err(GoldError::EmptySource { line });
        }
        let glosses = glosses.and_then(|g| {
            if g.is_empty() || g == "-" {
                None
            } else {
                Some(g.split_whitespace().map(str::to_string).collect())
            }
        });
        records.push(GoldRecord {
            source: source.to_string(),
            tense: parse_tense(tense, line)?,
            mood: parse_mood(mood, line)?,
            polarity: parse_polarity(polarity, line)?,
            emphasis: parse_word_list(emphasis),
            glosses,
            line,
        });
    }
    Ok(records)
}

/// Load a gold corpus from a TSV file.
pub fn load_gold(path: &Path) -> Result<Vec<GoldRecord>, GoldError> {
    let text = std::fs::read_to_string(path).map_err(|source| GoldError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_gold(&text)
}

/// One mismatch between expected and produced values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diff {
    pub line: usize,
    pub source: String,
    pub field: &'static str,
    pub expected: String,
    pub actual: String,
}

/// Exact-match accuracies per category plus the mismatch list.
#[derive(Debug, Clone, Default)]
pub struct EvalReport {
    pub total: usize,
    pub tense_correct: usize,
    pub mood_correct: usize,
    pub polarity_correct: usize,
    pub emphasis_correct: usize,
    /// Records that carried expected glosses, and how many matched.
    pub gloss_total: usize,
    pub gloss_correct: usize,
    pub diffs: Vec<Diff>,
}

impl EvalReport {
    pub fn tense_accuracy(&self) -> f64 {
        ratio(self.tense_correct, self.total)
    }

    pub fn mood_accuracy(&self) -> f64 {
        ratio(self.mood_correct, self.total)
    }

    pub fn polarity_accuracy(&self) -> f64 {
        ratio(self.polarity_correct, self.total)
    }

    pub fn emphasis_accuracy(&self) -> f64 {
        ratio(self.emphasis_correct, self.total)
    }

    pub fn gloss_accuracy(&self) -> Option<f64> {
        (self.gloss_total > 0).then(|| ratio(self.gloss_correct, self.gloss_total))
    }

    pub fn all_perfect(&self) -> bool {
        self.diffs.is_empty()
    }

    /// Human-readable report: one accuracy line per category, then diffs.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("sentences\t{}\n", self.total));
        out.push_str(&format!(
            "tense accuracy\t{:.4}\t({}/{})\n",
            self.tense_accuracy(),
            self.tense_correct,
            self.total
        ));
        out.push_str(&format!(
            "mood accuracy\t{:.4}\t({}/{})\n",
            self.mood_accuracy(),
            self.mood_correct,
            self.total
        ));
        out.push_str(&format!(
            "polarity accuracy\t{:.4}\t({}/{})\n",
            self.polarity_accuracy(),
            self.polarity_correct,
            self.total
        ));
        out.push_str(&format!(
            "emphasis accuracy\t{:.4}\t({}/{})\n",
            self.emphasis_accuracy(),
            self.emphasis_correct,
            self.total
        ));
        if let Some(acc) = self.gloss_accuracy() {
            out.push_str(&format!(
                "gloss accuracy\t{:.4}\t({}/{})\n",
                acc, self.gloss_correct, self.gloss_total
            ));
        }
        for diff in &self.diffs {
            out.push_str(&format!(
                "mismatch line {}\t{}\t{}: expected {}, got {}\n",
                diff.line, diff.source, diff.field, diff.expected, diff.actual
            ));
        }
        out
    }
}

fn ratio(correct: usize, total: usize) -> f64 {
    if total == 0 {
        0.0
    } else {
        correct as f64 / total as f64
    }
}

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error("empty corpus")]
    EmptyCorpus,
}

/// Evaluate the pipeline against a gold corpus, field by field.
pub fn evaluate(
    gold: &[GoldRecord],
    lexicon: &Lexicon,
    rules: &RuleSet,
) -> Result<EvalReport, EvalError> {
    if gold.is_empty() {
        return Err(EvalError::EmptyCorpus);
    }
    let mut report = EvalReport {
        total: gold.len(),
        ..EvalReport::default()
    };
    for record in gold {
        let results = process_text(&record.source, lexicon, rules);
        let Some(result) = results.first() else {
            for field in ["tense", "mood", "polarity", "emphasis"] {
                report.diffs.push(Diff {
                    line: record.line,
                    source: record.source.clone(),
                    field,
                    expected: "a sentence".to_string(),
                    actual: "no sentence produced".to_string(),
                });
            }
            continue;
        };
        let features = &result.features;

        check(
            &mut report.tense_correct,
            &mut report.diffs,
            record,
            "tense",
            features.tense == record.tense,
            record.tense.to_string(),
            features.tense.to_string(),
        );
        check(
            &mut report.mood_correct,
            &mut report.diffs,
            record,
            "mood",
            features.mood == record.mood,
            record.mood.to_string(),
            features.mood.to_string(),
        );
        check(
            &mut report.polarity_correct,
            &mut report.diffs,
            record,
            "polarity",
            features.polarity == record.polarity,
            record.polarity.to_string(),
            features.polarity.to_string(),
        );
        check(
            &mut report.emphasis_correct,
            &mut report.diffs,
            record,
            "emphasis",
            features.emphasis == record.emphasis,
            record.emphasis.join(";"),
            features.emphasis.join(";"),
        );
        if let Some(expected_glosses) = &record.glosses {
            report.gloss_total += 1;
            let actual: Vec<String> = result
                .gloss
                .glosses
                .iter()
                .map(|g| g.gloss.clone())
                .collect();
            check(
                &mut report.gloss_correct,
                &mut report.diffs,
                record,
                "glosses",
                &actual == expected_glosses,
                expected_glosses.join(" "),
                actual.join(" "),
            );
        }
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn check(
    correct: &mut usize,
    diffs: &mut Vec<Diff>,
    record: &GoldRecord,
    field: &'static str,
    matched: bool,
    expected: String,
    actual: String,
) {
    if matched {
        *correct += 1;
    } else {
        diffs.push(Diff {
            line: record.line,
            source: record.source.clone(),
            field,
            expected,
            actual,
        });
    }
}
