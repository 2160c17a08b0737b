//! Gloss generation: turn an analyzed sentence plus its features into the
//! annotated gloss representation, and render it as inline text, JSON or TSV.
//!
//! Question words stay in the gloss stream (sign languages sign them
//! manually) while negation and conditionality are absorbed into sentence
//! tags, mirroring the manual / non-manual divide the animation stage needs.
//! Source order is preserved; no sign-order syntax is invented here.

use serde::{Deserialize, Serialize};

use crate::features::{Mood, Polarity, SentenceFeatures, Tense};
use crate::morph::{Analysis, Pos};
use crate::rules::RuleSet;
use crate::text::Sentence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GlossRole {
    #[serde(rename = "content")]
    Content,
    #[serde(rename = "question_word")]
    QuestionWord,
    #[serde(rename = "emphasis")]
    EmphasisMarker,
}

/// One gloss: a lemma plus the index of the source token in its sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlossToken {
    pub gloss: String,
    pub role: GlossRole,
    pub source: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DropReason {
    #[serde(rename = "absorbed-into-tag")]
    AbsorbedIntoTag,
    #[serde(rename = "punctuation")]
    Punctuation,
    #[serde(rename = "pronoun")]
    Pronoun,
}

/// A token that produced no gloss, and why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dropped {
    pub source: usize,
    pub reason: DropReason,
}

/// The annotated gloss for one sentence: ordered glosses, sentence-level
/// tags, and an account of every token that was not glossed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlossSentence {
    pub glosses: Vec<GlossToken>,
    pub tags: Vec<String>,
    pub dropped: Vec<Dropped>,
}

#[derive(Debug, thiserror::Error)]
pub enum GlossError {
    #[error("analyses do not match the sentence (expected one analysis per word token)")]
    MismatchedInputs,
}

/// Sentence-level tags implied by a feature bundle, in canonical order:
/// tense, NEG, Q:/COND, EMPH.
pub fn feature_tags(features: &SentenceFeatures) -> Vec<String> {
    let mut tags = Vec::new();
    match features.tense {
        Tense::Past => tags.push("PAST".to_string()),
        Tense::Present => tags.push("PRESENT".to_string()),
        Tense::Future => tags.push("FUTURE".to_string()),
        Tense::Unspecified => {}
    }
    if matches!(features.polarity, Polarity::Negative(_)) {
        tags.push("NEG".to_string());
    }
    match &features.mood {
        Mood::Interrogative(label) => tags.push(format!("Q:{label}")),
        Mood::Conditional => tags.push("COND".to_string()),
        Mood::Declarative => {}
    }
    if !features.emphasis.is_empty() {
        tags.push("EMPH".to_string());
    }
    tags
}

/// Generate the gloss sentence.
///
/// Content words carry their lemma in source order; question adverbs are
/// kept as [`GlossRole::QuestionWord`], emphasis words as
/// [`GlossRole::EmphasisMarker`]; negation particles, conditional particles
/// and other function particles are absorbed into the sentence tags;
/// punctuation and pronouns are dropped with their own reasons. Every token
/// of the sentence is accounted for exactly once, in `glosses` or `dropped`.
pub fn generate_gloss(
    sentence: &Sentence,
    analyses: &[Analysis],
    features: &SentenceFeatures,
    rules: &RuleSet,
) -> Result<GlossSentence, GlossError> {
    let word_count = sentence.tokens.iter().filter(|t| t.is_word()).count();
    if analyses.len() != word_count {
        return Err(GlossError::MismatchedInputs);
    }
    for a in analyses {
        let matches_token = sentence
            .tokens
            .get(a.token_index)
            .is_some_and(|t| t.is_word() && t.surface == a.token.surface);
        if !matches_token {
            return Err(GlossError::MismatchedInputs);
        }
    }

    let mut glosses = Vec::new();
    let mut dropped = Vec::new();
    let mut analysis_iter = analyses.iter();
    for (index, token) in sentence.tokens.iter().enumerate() {
        if !token.is_word() {
            dropped.push(Dropped {
                source: index,
                reason: DropReason::Punctuation,
            });
            continue;
        }
        let analysis = analysis_iter.next().expect("one analysis per word");
        let surface = token.surface.as_str();
        if rules.question_label(surface).is_some() {
            glosses.push(GlossToken {
                gloss: analysis.lemma.clone(),
                role: GlossRole::QuestionWord,
                source: index,
            });
        } else if rules.is_emphasis(surface) {
            glosses.push(GlossToken {
                gloss: analysis.lemma.clone(),
                role: GlossRole::EmphasisMarker,
                source: index,
            });
        } else if rules.is_negation(surface) || rules.is_conditional(surface) {
            dropped.push(Dropped {
                source: index,
                reason: DropReason::AbsorbedIntoTag,
            });
        } else {
            match analysis.pos {
                Pos::Particle => dropped.push(Dropped {
                    source: index,
                    reason: DropReason::AbsorbedIntoTag,
                }),
                Pos::Pronoun => dropped.push(Dropped {
                    source: index,
                    reason: DropReason::Pronoun,
                }),
                _ => glosses.push(GlossToken {
                    gloss: analysis.lemma.clone(),
                    role: GlossRole::Content,
                    source: index,
                }),
            }
        }
    }

    Ok(GlossSentence {
        glosses,
        tags: feature_tags(features),
        dropped,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    InlineText,
    Json,
    Tsv,
}

impl RenderFormat {
    pub fn parse(label: &str) -> Option<RenderFormat> {
        match label {
            "inline" => Some(RenderFormat::InlineText),
            "json" => Some(RenderFormat::Json),
            "tsv" => Some(RenderFormat::Tsv),
            _ => None,
        }
    }
}

/// Render one gloss sentence.
///
/// Inline: tags in square brackets prefixing the space-joined glosses,
/// e.g. `[FUTURE][NEG] ذهب`. JSON: one object, fixed key order, Arabic left
/// unescaped; round-trips through [`parse_json`]. TSV: glosses, a tab, then
/// comma-joined tags.
pub fn render(gloss: &GlossSentence, format: RenderFormat) -> String {
    match format {
        RenderFormat::InlineText => {
            let tags: String = gloss.tags.iter().map(|t| format!("[{t}]")).collect();
            let words = joined_glosses(gloss);
            match (tags.is_empty(), words.is_empty()) {
                (false, false) => format!("{tags} {words}"),
                (false, true) => tags,
                _ => words,
            }
        }
        RenderFormat::Json => {
            serde_json::to_string(gloss).expect("gloss serialization cannot fail")
        }
        RenderFormat::Tsv => format!("{}\t{}", joined_glosses(gloss), gloss.tags.join(",")),
    }
}

fn joined_glosses(gloss: &GlossSentence) -> String {
    gloss
        .glosses
        .iter()
        .map(|g| g.gloss.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parse a JSON rendering back into a [`GlossSentence`].
pub fn parse_json(text: &str) -> Result<GlossSentence, serde_json::Error> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::extract_features;
    use crate::morph::{analyze_sentence, Lexicon};
    use crate::text::{normalize, split_sentences, tokenize};

    const LEXICON: &str = "\
ذهب\tذهب\tVerb\tPerfectiveStem
أذهب\tذهب\tVerb\tImperfectiveStem
تحب\tحب\tVerb\tImperfectiveStem
القراءة\tقراءة\tNoun\tNotAVerbStem
الطقس\tطقس\tNoun\tNotAVerbStem
جميل\tجميل\tAdjective\tNotAVerbStem
في\tفي\tParticle\tNotAVerbStem
البيت\tبيت\tNoun\tNotAVerbStem
هو\tهو\tPronoun\tNotAVerbStem
هل\tهل\tParticle\tNotAVerbStem
لن\tلن\tParticle\tNotAVerbStem
جدا\tجدا\tAdverb\tNotAVerbStem
";

    fn gloss_of(input: &str) -> GlossSentence {
        let lexicon = Lexicon::parse(LEXICON, "<test>").unwrap();
        let rules = RuleSet::default();
        let sentences = split_sentences(tokenize(&normalize(input)));
        assert_eq!(sentences.len(), 1);
        let analyses = analyze_sentence(&sentences[0], &lexicon, &rules);
        let features = extract_features(&sentences[0], &analyses, &rules);
        generate_gloss(&sentences[0], &analyses, &features, &rules).unwrap()
    }

    #[test]
    fn negation_absorbed_into_tag() {
        let g = gloss_of("لن أذهب");
        let texts: Vec<&str> = g.glosses.iter().map(|t| t.gloss.as_str()).collect();
        assert_eq!(texts, ["ذهب"]);
        assert_eq!(g.tags, ["FUTURE", "NEG"]);
        assert_eq!(
            g.dropped,
            [Dropped {
                source: 0,
                reason: DropReason::AbsorbedIntoTag
            }]
        );
    }

    #[test]
    fn question_word_is_kept_and_tagged() {
        let g = gloss_of("هل تحب القراءة؟");
        let texts: Vec<(&str, GlossRole)> = g
            .glosses
            .iter()
            .map(|t| (t.gloss.as_str(), t.role))
            .collect();
        assert_eq!(
            texts,
            [
                ("هل", GlossRole::QuestionWord),
                ("حب", GlossRole::Content),
                ("قراءة", GlossRole::Content),
            ]
        );
        assert_eq!(g.tags, ["PRESENT", "Q:YES-NO"]);
        assert_eq!(
            g.dropped,
            [Dropped {
                source: 3,
                reason: DropReason::Punctuation
            }]
        );
    }

    #[test]
    fn unknown_word_glosses_itself() {
        let g = gloss_of("قلم");
        assert_eq!(g.glosses.len(), 1);
        assert_eq!(g.glosses[0].gloss, "قلم");
        assert!(g.tags.is_empty());
        assert!(g.dropped.is_empty());
    }

    #[test]
    fn emphasis_word_kept_with_marker_role() {
        let g = gloss_of("الطقس جميل جدا");
        assert_eq!(g.glosses[2].role, GlossRole::EmphasisMarker);
        assert_eq!(g.tags, ["EMPH"]);
    }

    #[test]
    fn function_particles_and_pronouns_are_dropped() {
        let g = gloss_of("هو في البيت");
        let texts: Vec<&str> = g.glosses.iter().map(|t| t.gloss.as_str()).collect();
        assert_eq!(texts, ["بيت"]);
        assert_eq!(g.dropped[0].reason, DropReason::Pronoun);
        assert_eq!(g.dropped[1].reason, DropReason::AbsorbedIntoTag);
    }

    #[test]
    fn every_token_is_accounted_for() {
        for input in ["لن أذهب", "هل تحب القراءة؟", "الطقس جميل جدا."] {
            let lexicon = Lexicon::parse(LEXICON, "<test>").unwrap();
            let rules = RuleSet::default();
            let sentences = split_sentences(tokenize(&normalize(input)));
            let analyses = analyze_sentence(&sentences[0], &lexicon, &rules);
            let features = extract_features(&sentences[0], &analyses, &rules);
            let g = generate_gloss(&sentences[0], &analyses, &features, &rules).unwrap();
            assert_eq!(
                g.glosses.len() + g.dropped.len(),
                sentences[0].tokens.len(),
                "{input:?}"
            );
            let mut sources: Vec<usize> = g
                .glosses
                .iter()
                .map(|t| t.source)
                .chain(g.dropped.iter().map(|d| d.source))
                .collect();
            sources.sort_unstable();
            let expected: Vec<usize> = (0..sentences[0].tokens.len()).collect();
            assert_eq!(sources, expected, "{input:?}");
        }
    }

    #[test]
    fn gloss_order_follows_source_order() {
        let g = gloss_of("هل تحب القراءة؟");
        let sources: Vec<usize> = g.glosses.iter().map(|t| t.source).collect();
        let mut sorted = sources.clone();
        sorted.sort_unstable();
        assert_eq!(sources, sorted);
    }

    #[test]
    fn mismatched_analyses_are_a_usage_error() {
        let lexicon = Lexicon::parse(LEXICON, "<test>").unwrap();
        let rules = RuleSet::default();
        let sentences = split_sentences(tokenize(&normalize("لن أذهب")));
        let analyses = analyze_sentence(&sentences[0], &lexicon, &rules);
        let features = extract_features(&sentences[0], &analyses, &rules);
        let err = generate_gloss(&sentences[0], &analyses[..1], &features, &rules).unwrap_err();
        assert!(matches!(err, GlossError::MismatchedInputs));
    }

    #[test]
    fn inline_rendering() {
        assert_eq!(
            render(&gloss_of("لن أذهب"), RenderFormat::InlineText),
            "[FUTURE][NEG] ذهب"
        );
        assert_eq!(render(&gloss_of("قلم"), RenderFormat::InlineText), "قلم");
    }

    #[test]
    fn tsv_rendering() {
        assert_eq!(
            render(&gloss_of("لن أذهب"), RenderFormat::Tsv),
            "ذهب\tFUTURE,NEG"
        );
    }

    #[test]
    fn json_rendering_schema_and_round_trip() {
        let g = gloss_of("هل تحب القراءة؟");
        let json = render(&g, RenderFormat::Json);
        // Fixed key order, Arabic unescaped.
        assert!(json.starts_with("{\"glosses\":[{\"gloss\":\"هل\",\"role\":\"question_word\",\"source\":0}"));
        assert!(json.contains("\"tags\":[\"PRESENT\",\"Q:YES-NO\"]"));
        assert!(json.contains("\"dropped\":[{\"source\":3,\"reason\":\"punctuation\"}]"));
        assert_eq!(parse_json(&json).unwrap(), g);
    }
}
