//! Command-line front end: `translate` runs the text → gloss pipeline,
//! `analyze` dumps per-token analyses as JSON for debugging, `eval` scores
//! the pipeline against a gold corpus.
//!
//! Exit codes: 0 success, 1 I/O or configuration error, 2 gold-corpus
//! parse error. Diagnostics go to stderr; only payload goes to stdout.

use std::io::{BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ishara_core::gloss::RenderFormat;
use ishara_core::gold::{load_gold, parse_gold, GoldRecord};
use ishara_core::morph::load_lexicon;
use ishara_core::rules::load_rules;
use ishara_core::{evaluate, process_text, run_pipeline, Lexicon, RuleSet};

const EXIT_CONFIG: u8 = 1;
const EXIT_GOLD: u8 = 2;

#[derive(Parser)]
#[command(
    name = "ishara",
    about = "Rule-based Modern Standard Arabic to sign-language gloss transpiler",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Translate Arabic text into annotated glosses, one line per sentence.
    Translate(PipelineArgs),
    /// Emit per-token morphological analyses as JSON, one object per sentence.
    Analyze(PipelineArgs),
    /// Evaluate against a gold corpus (read from --input) and print a report.
    Eval(PipelineArgs),
}

#[derive(Args)]
struct PipelineArgs {
    /// Lexicon TSV: surface<TAB>lemma<TAB>pos<TAB>stem-kind.
    #[arg(long, value_name = "PATH")]
    lexicon: PathBuf,

    /// Optional rule overrides: category<TAB>trigger[<TAB>value].
    #[arg(long, value_name = "PATH")]
    rules: Option<PathBuf>,

    /// Output format for `translate`.
    #[arg(long, value_name = "inline|json|tsv", default_value = "inline")]
    format: String,

    /// Input file, or "-" for stdin.
    #[arg(long, value_name = "PATH|-", default_value = "-")]
    input: String,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl std::fmt::Display) -> Failure {
        Failure {
            code: EXIT_CONFIG,
            message: message.to_string(),
        }
    }

    fn gold(message: impl std::fmt::Display) -> Failure {
        Failure {
            code: EXIT_GOLD,
            message: message.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are not errors; anything else is a
            // configuration problem per the exit-code contract.
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(EXIT_CONFIG);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("ishara: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Translate(args) => {
            let (lexicon, rules) = load_config(&args)?;
            let format = RenderFormat::parse(&args.format)
                .ok_or_else(|| Failure::config(format!("unknown format \"{}\"", args.format)))?;
            let stdout = std::io::stdout();
            let writer = std::io::BufWriter::new(stdout.lock());
            with_input(&args.input, |reader| {
                run_pipeline(reader, writer, &lexicon, &rules, format).map_err(Failure::config)
            })
        }
        Command::Analyze(args) => {
            let (lexicon, rules) = load_config(&args)?;
            let text = read_input(&args.input)?;
            analyze(&text, &lexicon, &rules)
        }
        Command::Eval(args) => {
            let (lexicon, rules) = load_config(&args)?;
            let gold = load_gold_input(&args.input)?;
            let report = evaluate(&gold, &lexicon, &rules).map_err(Failure::gold)?;
            print!("{}", report.render());
            Ok(())
        }
    }
}

fn load_config(args: &PipelineArgs) -> Result<(Lexicon, RuleSet), Failure> {
    let lexicon = load_lexicon(&args.lexicon).map_err(Failure::config)?;
    let rules = match &args.rules {
        Some(path) => load_rules(path).map_err(Failure::config)?,
        None => RuleSet::default(),
    };
    Ok((lexicon, rules))
}

fn with_input<F>(input: &str, f: F) -> Result<(), Failure>
where
    F: FnOnce(Box<dyn BufRead>) -> Result<(), Failure>,
{
    if input == "-" {
        let stdin = std::io::stdin();
        f(Box::new(stdin.lock()))
    } else {
        let file = std::fs::File::open(input)
            .map_err(|e| Failure::config(format!("cannot read input {input}: {e}")))?;
        f(Box::new(BufReader::new(file)))
    }
}

fn read_input(input: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if input == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::config(format!("cannot read stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(input)
            .map_err(|e| Failure::config(format!("cannot read input {input}: {e}")))?;
    }
    Ok(text)
}

fn load_gold_input(input: &str) -> Result<Vec<GoldRecord>, Failure> {
    if input == "-" {
        let text = read_input(input)?;
        parse_gold(&text).map_err(Failure::gold)
    } else {
        load_gold(std::path::Path::new(input)).map_err(|e| {
            // Unreadable file is an I/O problem, not a corpus problem.
            if matches!(e, ishara_core::gold::GoldError::Io { .. }) {
                Failure::config(e)
            } else {
                Failure::gold(e)
            }
        })
    }
}

fn analyze(text: &str, lexicon: &Lexicon, rules: &RuleSet) -> Result<(), Failure> {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    for (index, result) in process_text(text, lexicon, rules).iter().enumerate() {
        let record = serde_json::json!({
            "sentence": index,
            "analyses": result.analyses,
            "features": result.features,
        });
        writeln!(out, "{record}").map_err(Failure::config)?;
    }
    out.flush().map_err(Failure::config)
}
