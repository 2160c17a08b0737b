//! Sentence-level feature extraction: tense, mood, polarity and emphasis.
//!
//! Every decision is backed by an [`Evidence`] entry naming the deciding
//! token and the rule that fired, so downstream stages (and the evaluation
//! harness) can explain each annotation.

use serde::{Deserialize, Serialize};

use crate::morph::{Analysis, Pos, VerbPrefix};
use crate::rules::RuleSet;
use crate::text::Sentence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tense {
    Past,
    Present,
    Future,
    Unspecified,
}

impl std::fmt::Display for Tense {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Tense::Past => "Past",
            Tense::Present => "Present",
            Tense::Future => "Future",
            Tense::Unspecified => "Unspecified",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mood {
    Declarative,
    /// Interrogative with its label (YES-NO, WHO, WHERE, WHEN, WHAT, HOW or
    /// a custom label from a rule override).
    Interrogative(String),
    Conditional,
}

impl std::fmt::Display for Mood {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mood::Declarative => f.write_str("Declarative"),
            Mood::Interrogative(label) => write!(f, "Interrogative:{label}"),
            Mood::Conditional => f.write_str("Conditional"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Polarity {
    Affirmative,
    /// Negative with the particle that triggered it.
    Negative(String),
}

impl std::fmt::Display for Polarity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Polarity::Affirmative => f.write_str("Affirmative"),
            Polarity::Negative(p) => write!(f, "Negative:{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FeatureKind {
    Tense,
    Mood,
    Polarity,
    Emphasis,
}

/// Why a feature value was chosen: the deciding token and the rule name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub feature: FeatureKind,
    pub token_index: usize,
    pub rule: &'static str,
}

impl Evidence {
    fn new(feature: FeatureKind, token_index: usize, rule: &'static str) -> Evidence {
        Evidence {
            feature,
            token_index,
            rule,
        }
    }
}

/// The extracted feature bundle for one sentence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SentenceFeatures {
    pub tense: Tense,
    pub mood: Mood,
    pub polarity: Polarity,
    /// Emphasis words found, in sentence order, duplicates preserved.
    pub emphasis: Vec<String>,
    pub evidence: Vec<Evidence>,
}

/// Detect the sentence tense.
///
/// Precedence: a negation particle fixes the tense outright (particles are
/// unambiguous words, prefixes only heuristic); otherwise the first verb
/// carrying a prefix decides; otherwise any verb means past (the default
/// reading of a bare verb); no verb at all leaves the tense unspecified.
pub fn detect_tense(analyses: &[Analysis], rules: &RuleSet) -> (Tense, Vec<Evidence>) {
    if let Some((a, tense)) = analyses
        .iter()
        .find_map(|a| rules.negation_tense(&a.token.surface).map(|t| (a, t)))
    {
        let ev = Evidence::new(FeatureKind::Tense, a.token_index, "negation-particle");
        return (tense, vec![ev]);
    }
    for a in analyses {
        match a.verb_prefix {
            VerbPrefix::Future => {
                let ev = Evidence::new(FeatureKind::Tense, a.token_index, "future-prefix");
                return (Tense::Future, vec![ev]);
            }
            VerbPrefix::Present => {
                let ev = Evidence::new(FeatureKind::Tense, a.token_index, "present-prefix");
                return (Tense::Present, vec![ev]);
            }
            VerbPrefix::None => {}
        }
    }
    if let Some(a) = analyses.iter().find(|a| a.pos == Pos::Verb) {
        let ev = Evidence::new(FeatureKind::Tense, a.token_index, "default-past");
        return (Tense::Past, vec![ev]);
    }
    (Tense::Unspecified, Vec::new())
}

/// Negative when a negation particle occurs; the first occurrence wins.
pub fn detect_polarity(analyses: &[Analysis], rules: &RuleSet) -> (Polarity, Vec<Evidence>) {
    match analyses
        .iter()
        .find(|a| rules.is_negation(&a.token.surface))
    {
        Some(a) => {
            let ev = Evidence::new(FeatureKind::Polarity, a.token_index, "negation-particle");
            (Polarity::Negative(a.token.surface.clone()), vec![ev])
        }
        None => (Polarity::Affirmative, Vec::new()),
    }
}

/// Detect the sentence mood.
///
/// A question-mark terminator or a question adverb makes the sentence
/// interrogative (adverb label first, YES-NO when only the mark is present)
/// and takes precedence over a conditional particle; otherwise a conditional
/// particle makes it conditional; otherwise declarative.
pub fn detect_mood(
    sentence: &Sentence,
    analyses: &[Analysis],
    rules: &RuleSet,
) -> (Mood, Vec<Evidence>) {
    let adverb = analyses
        .iter()
        .find_map(|a| rules.question_label(&a.token.surface).map(|l| (a, l)));
    let mark = sentence.terminator().and_then(|t| {
        let c = t.surface.chars().next()?;
        rules
            .is_question_mark(c)
            .then_some(sentence.tokens.len() - 1)
    });
    if adverb.is_some() || mark.is_some() {
        let mut evidence = Vec::new();
        if let Some((a, _)) = adverb {
            evidence.push(Evidence::new(
                FeatureKind::Mood,
                a.token_index,
                "question-adverb",
            ));
        }
        if let Some(index) = mark {
            evidence.push(Evidence::new(FeatureKind::Mood, index, "question-mark"));
        }
        let label = adverb.map_or("YES-NO", |(_, l)| l);
        return (Mood::Interrogative(label.to_string()), evidence);
    }
    if let Some(a) = analyses
        .iter()
        .find(|a| rules.is_conditional(&a.token.surface))
    {
        let ev = Evidence::new(FeatureKind::Mood, a.token_index, "conditional-particle");
        return (Mood::Conditional, vec![ev]);
    }
    (Mood::Declarative, Vec::new())
}

/// All emphasis words, in sentence order, duplicates preserved.
pub fn detect_emphasis(analyses: &[Analysis], rules: &RuleSet) -> (Vec<String>, Vec<Evidence>) {
    let mut words = Vec::new();
    let mut evidence = Vec::new();
    for a in analyses {
        if rules.is_emphasis(&a.token.surface) {
            words.push(a.token.surface.clone());
            evidence.push(Evidence::new(
                FeatureKind::Emphasis,
                a.token_index,
                "emphasis-word",
            ));
        }
    }
    (words, evidence)
}

/// Run all four detectors and bundle their results.
pub fn extract_features(
    sentence: &Sentence,
    analyses: &[Analysis],
    rules: &RuleSet,
) -> SentenceFeatures {
    let (tense, tense_ev) = detect_tense(analyses, rules);
    let (mood, mood_ev) = detect_mood(sentence, analyses, rules);
    let (polarity, polarity_ev) = detect_polarity(analyses, rules);
    let (emphasis, emphasis_ev) = detect_emphasis(analyses, rules);
    let evidence = [tense_ev, mood_ev, polarity_ev, emphasis_ev].concat();
    SentenceFeatures {
        tense,
        mood,
        polarity,
        emphasis,
        evidence,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morph::{analyze_sentence, Lexicon};
    use crate::text::{normalize, split_sentences, tokenize};

    const LEXICON: &str = "\
ذهب\tذهب\tVerb\tPerfectiveStem
يذهب\tذهب\tVerb\tImperfectiveStem
أذهب\tذهب\tVerb\tImperfectiveStem
كتب\tكتب\tVerb\tPerfectiveStem
يكتب\tكتب\tVerb\tImperfectiveStem
تحب\tحب\tVerb\tImperfectiveStem
أحب\tحب\tVerb\tImperfectiveStem
أكره\tكره\tVerb\tImperfectiveStem
تسافر\tسافر\tVerb\tImperfectiveStem
وصلت\tوصل\tVerb\tPerfectiveStem
درست\tدرس\tVerb\tPerfectiveStem
نجحت\tنجح\tVerb\tPerfectiveStem
الولد\tولد\tNoun\tNotAVerbStem
القراءة\tقراءة\tNoun\tNotAVerbStem
الطقس\tطقس\tNoun\tNotAVerbStem
جميل\tجميل\tAdjective\tNotAVerbStem
غدا\tغدا\tAdverb\tNotAVerbStem
هل\tهل\tParticle\tNotAVerbStem
لا\tلا\tParticle\tNotAVerbStem
لن\tلن\tParticle\tNotAVerbStem
لم\tلم\tParticle\tNotAVerbStem
ولا\tولا\tParticle\tNotAVerbStem
إذا\tإذا\tParticle\tNotAVerbStem
متى\tمتى\tAdverb\tNotAVerbStem
جدا\tجدا\tAdverb\tNotAVerbStem
";

    fn run(input: &str) -> SentenceFeatures {
        let lexicon = Lexicon::parse(LEXICON, "<test>").unwrap();
        let rules = RuleSet::default();
        let sentences = split_sentences(tokenize(&normalize(input)));
        assert_eq!(sentences.len(), 1, "expected one sentence in {input:?}");
        let analyses = analyze_sentence(&sentences[0], &lexicon, &rules);
        extract_features(&sentences[0], &analyses, &rules)
    }

    #[test]
    fn negation_particle_sets_future() {
        let f = run("لن أذهب");
        assert_eq!(f.tense, Tense::Future);
        assert_eq!(f.polarity, Polarity::Negative("لن".to_string()));
    }

    #[test]
    fn bare_verb_defaults_to_past() {
        let f = run("كتب الولد");
        assert_eq!(f.tense, Tense::Past);
        assert_eq!(f.mood, Mood::Declarative);
        assert_eq!(f.polarity, Polarity::Affirmative);
    }

    #[test]
    fn no_verb_means_unspecified() {
        let f = run("قلم جميل");
        assert_eq!(f.tense, Tense::Unspecified);
    }

    #[test]
    fn future_prefix_sets_future() {
        let f = run("سيذهب");
        assert_eq!(f.tense, Tense::Future);
        assert_eq!(f.evidence[0].rule, "future-prefix");
    }

    #[test]
    fn negation_beats_prefix_and_cites_the_particle() {
        // Ill-formed on purpose: the particle rule must win and the evidence
        // must point at the particle token, not the prefixed verb.
        let f = run("لن سيذهب");
        assert_eq!(f.tense, Tense::Future);
        let ev = f
            .evidence
            .iter()
            .find(|e| e.feature == FeatureKind::Tense)
            .unwrap();
        assert_eq!(ev.token_index, 0);
        assert_eq!(ev.rule, "negation-particle");
    }

    #[test]
    fn first_negation_particle_wins() {
        let f = run("لا أحب ولا أكره");
        assert_eq!(f.polarity, Polarity::Negative("لا".to_string()));
        let ev = f
            .evidence
            .iter()
            .find(|e| e.feature == FeatureKind::Polarity)
            .unwrap();
        assert_eq!(ev.token_index, 0);
        assert_eq!(f.tense, Tense::Present);
    }

    #[test]
    fn affirmative_without_particle() {
        let f = run("كتب");
        assert_eq!(f.polarity, Polarity::Affirmative);
    }

    #[test]
    fn question_adverb_labels_the_mood() {
        let f = run("هل تحب القراءة؟");
        assert_eq!(f.mood, Mood::Interrogative("YES-NO".to_string()));
        assert_eq!(f.tense, Tense::Present);

        let f = run("متى وصلت؟");
        assert_eq!(f.mood, Mood::Interrogative("WHEN".to_string()));
        assert_eq!(f.tense, Tense::Past);
    }

    #[test]
    fn question_adverb_without_mark_still_interrogative() {
        let f = run("هل تحب القراءة");
        assert_eq!(f.mood, Mood::Interrogative("YES-NO".to_string()));
    }

    #[test]
    fn mark_only_question_gets_yes_no() {
        let f = run("كتب الولد؟");
        assert_eq!(f.mood, Mood::Interrogative("YES-NO".to_string()));
        let ev = f
            .evidence
            .iter()
            .find(|e| e.feature == FeatureKind::Mood)
            .unwrap();
        assert_eq!(ev.rule, "question-mark");
        assert_eq!(ev.token_index, 2);
    }

    #[test]
    fn conditional_particle_detected() {
        let f = run("إذا درست نجحت");
        assert_eq!(f.mood, Mood::Conditional);
        assert_eq!(f.tense, Tense::Past);
    }

    #[test]
    fn declarative_without_triggers() {
        let f = run("كتب الولد.");
        assert_eq!(f.mood, Mood::Declarative);
    }

    #[test]
    fn interrogative_beats_conditional() {
        let f = run("متى تسافر إذا نجحت");
        assert_eq!(f.mood, Mood::Interrogative("WHEN".to_string()));
    }

    #[test]
    fn emphasis_words_collected_in_order() {
        let f = run("الطقس جميل جدا");
        assert_eq!(f.emphasis, ["جدا"]);
        assert_eq!(run("كتب").emphasis, Vec::<String>::new());
        assert_eq!(run("جدا جدا").emphasis, ["جدا", "جدا"]);
    }

    #[test]
    fn composed_features() {
        let f = run("لن أذهب غدا");
        assert_eq!(f.tense, Tense::Future);
        assert_eq!(f.mood, Mood::Declarative);
        assert_eq!(f.polarity, Polarity::Negative("لن".to_string()));
        assert!(f.emphasis.is_empty());

        let f = run("هل ستسافر؟");
        assert_eq!(f.tense, Tense::Future);
        assert_eq!(f.mood, Mood::Interrogative("YES-NO".to_string()));
        assert_eq!(f.polarity, Polarity::Affirmative);
    }

    #[test]
    fn evidence_points_at_existing_tokens() {
        for input in ["لن أذهب غدا", "هل ستسافر؟", "إذا درست نجحت", "جدا جدا"] {
            let lexicon = Lexicon::parse(LEXICON, "<test>").unwrap();
            let rules = RuleSet::default();
            let sentences = split_sentences(tokenize(&normalize(input)));
            let analyses = analyze_sentence(&sentences[0], &lexicon, &rules);
            let f = extract_features(&sentences[0], &analyses, &rules);
            for ev in &f.evidence {
                assert!(ev.token_index < sentences[0].tokens.len(), "{input:?}");
            }
        }
    }

    #[test]
    fn first_prefix_verb_decides_between_prefixes() {
        let f = run("يذهب الولد ثم سيذهب");
        assert_eq!(f.tense, Tense::Present);
        let ev = f
            .evidence
            .iter()
            .find(|e| e.feature == FeatureKind::Tense)
            .unwrap();
        assert_eq!(ev.token_index, 0);
    }

    #[test]
    fn replacing_a_trigger_in_rules_and_input_is_symmetric() {
        let lexicon = Lexicon::parse(LEXICON, "<test>").unwrap();
        let baseline_rules = RuleSet::default();
        let mut swapped_rules = RuleSet::default();
        let tense = swapped_rules.negation_particles.remove("لن").unwrap();
        swapped_rules
            .negation_particles
            .insert("قبقب".to_string(), tense);

        let run_with = |rules: &RuleSet, input: &str| {
            let sentences = split_sentences(tokenize(&normalize(input)));
            let analyses = analyze_sentence(&sentences[0], &lexicon, rules);
            extract_features(&sentences[0], &analyses, rules)
        };
        let base = run_with(&baseline_rules, "لن أذهب");
        let swapped = run_with(&swapped_rules, "قبقب أذهب");
        assert_eq!(base.tense, swapped.tense);
        assert_eq!(base.mood, swapped.mood);
        assert_eq!(swapped.polarity, Polarity::Negative("قبقب".to_string()));
        assert_eq!(base.evidence, swapped.evidence);
    }
}
