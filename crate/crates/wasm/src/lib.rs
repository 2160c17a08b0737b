//! Browser bindings for the demo page: a [`Translator`] with the seed
//! lexicon baked in, exposing translate / inspect / evaluate.

use wasm_bindgen::prelude::*;

use ishara_core::gloss::RenderFormat;
use ishara_core::gold::parse_gold;
use ishara_core::{evaluate, process_text, render, Lexicon, RuleSet};

const SEED_LEXICON: &str = include_str!("../../../data/lexicon.tsv");

#[wasm_bindgen]
pub struct Translator {
    lexicon: Lexicon,
    rules: RuleSet,
}

#[wasm_bindgen]
impl Translator {
    /// Build a translator over the bundled seed lexicon and default rules.
    #[wasm_bindgen(constructor)]
    pub fn new() -> Result<Translator, JsError> {
        let lexicon = Lexicon::parse(SEED_LEXICON, "<bundled>")
            .map_err(|e| JsError::new(&e.to_string()))?;
        Ok(Translator {
            lexicon,
            rules: RuleSet::default(),
        })
    }

    /// Merge rule overrides (`category<TAB>trigger[<TAB>value]` lines) into
    /// the default tables.
    pub fn apply_rule_overrides(&mut self, overrides: &str) -> Result<(), JsError> {
        let mut rules = RuleSet::default();
        rules
            .apply_overrides(overrides)
            .map_err(|e| JsError::new(&e.to_string()))?;
        self.rules = rules;
        Ok(())
    }

    /// Translate text; one rendered record per sentence, newline separated.
    /// `format` is `inline`, `json` or `tsv`.
    pub fn translate(&self, text: &str, format: &str) -> Result<String, JsError> {
        let format = RenderFormat::parse(format)
            .ok_or_else(|| JsError::new(&format!("unknown format \"{format}\"")))?;
        Ok(process_text(text, &self.lexicon, &self.rules)
            .iter()
            .map(|r| render(&r.gloss, format))
            .collect::<Vec<_>>()
            .join("\n"))
    }

    /// Full pipeline introspection as JSON: per sentence the tokens,
    /// analyses, features and gloss, for the demo page to render.
    pub fn inspect(&self, text: &str) -> Result<String, JsError> {
        let sentences: Vec<serde_json::Value> = process_text(text, &self.lexicon, &self.rules)
            .iter()
            .map(|r| {
                serde_json::json!({
                    "tokens": r.sentence.tokens,
                    "analyses": r.analyses,
                    "features": r.features,
                    "gloss": r.gloss,
                    "inline": render(&r.gloss, RenderFormat::InlineText),
                })
            })
            .collect();
        serde_json::to_string(&sentences).map_err(|e| JsError::new(&e.to_string()))
    }

    /// Evaluate a gold corpus (TSV text) and return the plain-text report.
    pub fn evaluate_corpus(&self, gold_tsv: &str) -> Result<String, JsError> {
        let gold = parse_gold(gold_tsv).map_err(|e| JsError::new(&e.to_string()))?;
        let report = evaluate(&gold, &self.lexicon, &self.rules)
            .map_err(|e| JsError::new(&e.to_string()))?;
        Ok(report.render())
    }

    /// Number of lexicon entries bundled into this build.
    pub fn lexicon_size(&self) -> usize {
        self.lexicon.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_translator_works() {
        let translator = Translator::new().unwrap();
        assert!(translator.lexicon_size() >= 100);
        assert_eq!(
            translator.translate("لن أذهب", "inline").unwrap(),
            "[FUTURE][NEG] ذهب"
        );
    }

    #[test]
    fn inspect_returns_json_per_sentence() {
        let translator = Translator::new().unwrap();
        let json = translator.inspect("هل تحب القراءة؟").unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value.as_array().unwrap().len(), 1);
        assert_eq!(value[0]["inline"], "[PRESENT][Q:YES-NO] هل حب قراءة");
    }

    #[test]
    fn evaluate_corpus_reports_accuracy() {
        let translator = Translator::new().unwrap();
        let report = translator
            .evaluate_corpus("لن أذهب\tFuture\tDeclarative\tNegative:لن\t-\n")
            .unwrap();
        assert!(report.contains("tense accuracy\t1.0000"));
    }
}
