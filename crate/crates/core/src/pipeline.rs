//! Stage composition: normalize → tokenize → split → analyze → extract →
//! gloss → render, for whole strings and for streams.
//!
//! [`run_pipeline`] is streaming: it buffers only the current unterminated
//! sentence, so memory stays bounded per sentence regardless of input size.

use std::io::{BufRead, Write};

use crate::features::{extract_features, SentenceFeatures};
use crate::gloss::{generate_gloss, render, GlossSentence, RenderFormat};
use crate::morph::{analyze_sentence, Analysis, Lexicon};
use crate::rules::RuleSet;
use crate::text::{normalize, split_sentences, tokenize, Sentence, TERMINATORS};

/// Everything the pipeline derives for one sentence.
#[derive(Debug, Clone)]
pub struct SentenceResult {
    pub sentence: Sentence,
    pub analyses: Vec<Analysis>,
    pub features: SentenceFeatures,
    pub gloss: GlossSentence,
}

/// Run the full pipeline over one already-segmented sentence.
pub fn process_sentence(sentence: Sentence, lexicon: &Lexicon, rules: &RuleSet) -> SentenceResult {
    let analyses = analyze_sentence(&sentence, lexicon, rules);
    let features = extract_features(&sentence, &analyses, rules);
    let gloss = generate_gloss(&sentence, &analyses, &features, rules)
        .expect("pipeline-produced analyses always match their sentence");
    SentenceResult {
        sentence,
        analyses,
        features,
        gloss,
    }
}

/// Run the full pipeline over a text, one result per sentence in input order.
pub fn process_text(text: &str, lexicon: &Lexicon, rules: &RuleSet) -> Vec<SentenceResult> {
    split_sentences(tokenize(&normalize(text)))
        .into_iter()
        .map(|sentence| process_sentence(sentence, lexicon, rules))
        .collect()
}

/// Stream `input` through the pipeline, writing one rendered record per
/// sentence to `output`.
///
/// Sentences may span input lines; a chunk is flushed as soon as its
/// terminator arrives, and a trailing terminator-less run is flushed at
/// end of input.
pub fn run_pipeline<R: BufRead, W: Write>(
    input: R,
    mut output: W,
    lexicon: &Lexicon,
    rules: &RuleSet,
    format: RenderFormat,
) -> std::io::Result<()> {
    let mut residual = String::new();
    for line in input.lines() {
        residual.push_str(&line?);
        residual.push('\n');
        while let Some(pos) = residual.find(TERMINATORS) {
            let term_len = residual[pos..].chars().next().map_or(0, char::len_utf8);
            let rest = residual.split_off(pos + term_len);
            let chunk = std::mem::replace(&mut residual, rest);
            emit_chunk(&chunk, &mut output, lexicon, rules, format)?;
        }
    }
    emit_chunk(&residual, &mut output, lexicon, rules, format)?;
    output.flush()
}

fn emit_chunk<W: Write>(
    chunk: &str,
    output: &mut W,
    lexicon: &Lexicon,
    rules: &RuleSet,
    format: RenderFormat,
) -> std::io::Result<()> {
    for result in process_text(chunk, lexicon, rules) {
        writeln!(output, "{}", render(&result.gloss, format))?;
    }
    Ok(())
}
