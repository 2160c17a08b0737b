//! Brute-force trigger scanner used to cross-check the rule engine.
//!
//! Deliberately shares no code with `ishara_core::features`: it carries its
//! own copies of the trigger tables and resolves precedence by enumerating
//! every candidate and picking the minimum, instead of returning early.

use ishara_core::morph::{Analysis, Pos, VerbPrefix};
use ishara_core::text::Sentence;
use ishara_core::{Mood, Polarity, Tense};

const NEGATION: [(&str, Tense); 4] = [
    ("لا", Tense::Present),
    ("ليس", Tense::Present),
    ("لن", Tense::Future),
    ("لم", Tense::Past),
];

const QUESTION_ADVERBS: [(&str, &str); 6] = [
    ("هل", "YES-NO"),
    ("من", "WHO"),
    ("أين", "WHERE"),
    ("متى", "WHEN"),
    ("ماذا", "WHAT"),
    ("كيف", "HOW"),
];

const CONDITIONALS: [&str; 2] = ["إذا", "لو"];
const EMPHASIS: [&str; 2] = ["جدا", "مرارا"];
const QUESTION_MARKS: [char; 2] = ['؟', '?'];

pub struct OracleFeatures {
    pub tense: Tense,
    pub mood: Mood,
    pub polarity: Polarity,
    pub emphasis: Vec<String>,
}

pub fn scan(sentence: &Sentence, analyses: &[Analysis]) -> OracleFeatures {
    OracleFeatures {
        tense: scan_tense(analyses),
        mood: scan_mood(sentence, analyses),
        polarity: scan_polarity(analyses),
        emphasis: scan_emphasis(analyses),
    }
}

fn scan_tense(analyses: &[Analysis]) -> Tense {
    // Enumerate all (rank, position, tense) candidates; lowest wins.
    let mut candidates: Vec<(u8, usize, Tense)> = Vec::new();
    for (position, analysis) in analyses.iter().enumerate() {
        let surface = analysis.token.surface.as_str();
        for (particle, tense) in NEGATION {
            if surface == particle {
                candidates.push((0, position, tense));
            }
        }
        match analysis.verb_prefix {
            VerbPrefix::Future => candidates.push((1, position, Tense::Future)),
            VerbPrefix::Present => candidates.push((1, position, Tense::Present)),
            VerbPrefix::None => {
                if analysis.pos == Pos::Verb {
                    candidates.push((2, position, Tense::Past));
                }
            }
        }
    }
    candidates
        .into_iter()
        .min_by_key(|&(rank, position, _)| (rank, position))
        .map_or(Tense::Unspecified, |(_, _, tense)| tense)
}

fn scan_mood(sentence: &Sentence, analyses: &[Analysis]) -> Mood {
    let mut adverb_labels: Vec<(usize, &str)> = Vec::new();
    for (position, analysis) in analyses.iter().enumerate() {
        for (adverb, label) in QUESTION_ADVERBS {
            if analysis.token.surface == adverb {
                adverb_labels.push((position, label));
            }
        }
    }
    let has_mark = sentence
        .tokens
        .last()
        .filter(|t| !t.is_word())
        .and_then(|t| t.surface.chars().next())
        .is_some_and(|c| QUESTION_MARKS.contains(&c));
    if let Some(&(_, label)) = adverb_labels.iter().min_by_key(|&&(pos, _)| pos) {
        return Mood::Interrogative(label.to_string());
    }
    if has_mark {
        return Mood::Interrogative("YES-NO".to_string());
    }
    let conditional = analyses
        .iter()
        .any(|a| CONDITIONALS.contains(&a.token.surface.as_str()));
    if conditional {
        Mood::Conditional
    } else {
        Mood::Declarative
    }
}

fn scan_polarity(analyses: &[Analysis]) -> Polarity {
    let mut hits: Vec<(usize, &str)> = Vec::new();
    for (position, analysis) in analyses.iter().enumerate() {
        for (particle, _) in NEGATION {
            if analysis.token.surface == particle {
                hits.push((position, particle));
            }
        }
    }
    hits.into_iter()
        .min_by_key(|&(pos, _)| pos)
        .map_or(Polarity::Affirmative, |(_, particle)| {
            Polarity::Negative(particle.to_string())
        })
}

fn scan_emphasis(analyses: &[Analysis]) -> Vec<String> {
    analyses
        .iter()
        .filter(|a| EMPHASIS.contains(&a.token.surface.as_str()))
        .map(|a| a.token.surface.clone())
        .collect()
}
