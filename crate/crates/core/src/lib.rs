//! ishara-core: rule-based translation of Modern Standard Arabic text into an
//! annotated sign-language gloss.
//!
//! The pipeline runs in four stages:
//!
//! 1. [`text`] — Unicode normalization, tokenization, sentence segmentation.
//! 2. [`morph`] — lexicon-backed analysis: lemma, part of speech, verb prefix.
//! 3. [`features`] — tense / mood / polarity / emphasis extraction driven by a
//!    declarative [`rules::RuleSet`].
//! 4. [`gloss`] — gloss token generation plus inline / JSON / TSV rendering.
//!
//! [`pipeline`] wires the stages together for streaming use and [`gold`]
//! provides the evaluation harness over hand-annotated corpora.

pub mod features;
pub mod gloss;
pub mod gold;
pub mod morph;
pub mod pipeline;
pub mod rules;
pub mod text;

pub use features::{extract_features, Mood, Polarity, SentenceFeatures, Tense};
pub use gloss::{generate_gloss, render, GlossSentence, RenderFormat};
pub use gold::{evaluate, EvalReport, GoldRecord};
pub use morph::{analyze_sentence, Analysis, Lexicon};
pub use pipeline::{process_text, run_pipeline, SentenceResult};
pub use rules::RuleSet;
pub use text::{normalize, split_sentences, tokenize, Sentence, Token, TokenKind};
