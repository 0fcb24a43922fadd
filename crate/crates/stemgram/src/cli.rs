//! Command-line front end.
//!
//! Four subcommands: `index stats` inspects a corpus, `stem` stems words
//! against one, `eval` compares two stemmers from a pairs file, and
//! `selftest` runs the bundled fixtures end to end. All output is
//! deterministic; running a command twice produces identical bytes.
//!
//! Exit codes: 0 success, 2 input error (unreadable or malformed files, bad
//! flags), 3 validation mismatch (stored distances that disagree with
//! recomputation, or a failed self-test check).

use std::fmt;
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::corpus::{entries_from_raw_text, parse_corpus_tsv, CorpusEntry, PrefixFrequencyIndex};
use crate::evaluate::report::compare_report;
use crate::evaluate::{parse_pairs_tsv, validate_expected, StemPair};
use crate::fixtures;
use crate::stemmer::{stem, stem_batch, Delta, StemmerConfig, StopReason, TraceStep, MIN_WORD_LEN};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_VALIDATION_MISMATCH: i32 = 3;

/// How many of the most frequent 4-character prefixes `index stats` shows.
const TOP_PREFIX_COUNT: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "stemgram",
    version,
    about = "Corpus-driven statistical stemming and stemmer evaluation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect a corpus index.
    #[command(subcommand)]
    Index(IndexCommand),
    /// Stem words against a corpus.
    Stem(StemArgs),
    /// Compare two stemmers over a pairs file.
    Eval(EvalArgs),
    /// Run the bundled fixtures end to end.
    Selftest(SelftestArgs),
}

#[derive(Debug, Subcommand)]
pub enum IndexCommand {
    /// Summarize a corpus: entries, tokens, dominant prefixes.
    Stats(IndexStatsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Debug, Args)]
pub struct IndexStatsArgs {
    /// Corpus file: word<TAB>count rows, or raw text with --raw-text.
    #[arg(long)]
    pub corpus: PathBuf,
    /// Treat the corpus file as raw text to tokenize and count.
    #[arg(long)]
    pub raw_text: bool,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: OutputFormat,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StemArgs {
    /// Corpus file: word<TAB>count rows, or raw text with --raw-text.
    #[arg(long)]
    pub corpus: PathBuf,
    /// Treat the corpus file as raw text to tokenize and count.
    #[arg(long)]
    pub raw_text: bool,
    /// Words to stem.
    #[arg(required = true)]
    pub words: Vec<String>,
    /// Deviation threshold Γ.
    #[arg(long, default_value_t = 0)]
    pub gamma: u64,
    /// Treat prefix counts below this value as 0.
    #[arg(long, default_value_t = 0)]
    pub floor: u64,
    /// Run unknown words through the phases instead of passing them through.
    #[arg(long)]
    pub no_oov_passthrough: bool,
    /// Show every phase-1 step and the stop reason per word.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: OutputFormat,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Pairs file: word<TAB>stem_a<TAB>stem_b rows, optionally with
    /// expected distances in columns 4 and 5.
    pub pairs: PathBuf,
    /// Significance level for the signed-rank test.
    #[arg(long, default_value_t = 0.05, value_parser = parse_alpha)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: OutputFormat,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    let alpha: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if alpha > 0.0 && alpha < 1.0 {
        Ok(alpha)
    } else {
        Err(format!(
            "alpha must be strictly between 0 and 1, got {alpha}"
        ))
    }
}

/// A command failure carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT_ERROR,
            message: message.into(),
        }
    }

    pub fn code(&self) -> i32 {
        self.code
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError::input(format!("i/o error: {err}"))
    }
}

/// Dispatch a parsed command line. Output goes to `out` unless the command
/// carries `--out`. The `Ok` value is the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Index(IndexCommand::Stats(args)) => {
            with_output(&args.out, out, |w| cmd_index_stats(args, w))
        }
        Command::Stem(args) => with_output(&args.out, out, |w| cmd_stem(args, w)),
        Command::Eval(args) => with_output(&args.out, out, |w| cmd_eval(args, w)),
        Command::Selftest(args) => with_output(&args.out, out, |w| cmd_selftest(w)),
    }
}

fn with_output<F>(path: &Option<PathBuf>, fallback: &mut dyn Write, f: F) -> Result<i32, CliError>
where
    F: FnOnce(&mut dyn Write) -> Result<i32, CliError>,
{
    match path {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::input(format!("cannot create {}: {e}", path.display())))?;
            let mut writer = BufWriter::new(file);
            let code = f(&mut writer)?;
            writer.flush()?;
            Ok(code)
        }
        None => f(fallback),
    }
}

fn load_entries(path: &Path, raw_text: bool) -> Result<Vec<CorpusEntry>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    if raw_text {
        Ok(entries_from_raw_text(&text))
    } else {
        parse_corpus_tsv(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }
}

fn load_index(path: &Path, raw_text: bool) -> Result<PrefixFrequencyIndex, CliError> {
    Ok(PrefixFrequencyIndex::from_entries(load_entries(
        path, raw_text,
    )?))
}

pub fn cmd_index_stats(args: &IndexStatsArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let index = load_index(&args.corpus, args.raw_text)?;
    let top = index.top_prefixes(MIN_WORD_LEN, TOP_PREFIX_COUNT);
    match args.format {
        OutputFormat::Tsv => {
            writeln!(
                out,
                "entries={} tokens={}",
                index.entry_count(),
                index.total_tokens()
            )?;
            writeln!(out, "# prefix\tcount")?;
            for (prefix, count) in &top {
                writeln!(out, "{prefix}\t{count}")?;
            }
        }
        OutputFormat::Json => {
            writeln!(out, "{{")?;
            writeln!(out, "  \"entries\": {},", index.entry_count())?;
            writeln!(out, "  \"tokens\": {},", index.total_tokens())?;
            writeln!(out, "  \"top_prefixes\": [")?;
            for (i, (prefix, count)) in top.iter().enumerate() {
                let comma = if i + 1 < top.len() { "," } else { "" };
                writeln!(
                    out,
                    "    {{\"prefix\": \"{}\", \"count\": {}}}{}",
                    json_escape(prefix),
                    count,
                    comma
                )?;
            }
            writeln!(out, "  ]")?;
            writeln!(out, "}}")?;
        }
    }
    Ok(EXIT_OK)
}

fn delta_tsv(step: &TraceStep) -> String {
    match step.delta {
        None => "-".to_string(),
        Some(delta) => delta.to_string(),
    }
}

fn delta_json(step: &TraceStep) -> String {
    match step.delta {
        None => "null".to_string(),
        Some(Delta::NegativeInfinity) => "\"-inf\"".to_string(),
        Some(Delta::Finite(v)) => v.to_string(),
    }
}

pub fn cmd_stem(args: &StemArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let index = load_index(&args.corpus, args.raw_text)?;
    let config = StemmerConfig {
        gamma: args.gamma,
        frequency_floor: args.floor,
        oov_passthrough: !args.no_oov_passthrough,
    };
    let mut results = Vec::with_capacity(args.words.len());
    for (i, outcome) in stem_batch(&index, &args.words, &config)
        .into_iter()
        .enumerate()
    {
        match outcome {
            Ok(result) => results.push(result),
            Err(err) => {
                return Err(CliError::input(format!(
                    "word {} ({:?}): {err}",
                    i + 1,
                    args.words[i]
                )))
            }
        }
    }

    match args.format {
        OutputFormat::Tsv => {
            for result in &results {
                writeln!(out, "{}\t{}", result.word, result.stem)?;
                if args.trace {
                    for step in &result.trace.steps {
                        writeln!(
                            out,
                            "# i={} F={} lambda={} delta={} psi={}",
                            step.ngram_len,
                            step.frequency,
                            step.lambda,
                            delta_tsv(step),
                            step.psi_after
                        )?;
                    }
                    writeln!(
                        out,
                        "# stop={} phase2={}",
                        result.trace.stop_reason, result.trace.phase2_applied
                    )?;
                }
            }
        }
        OutputFormat::Json => {
            writeln!(out, "[")?;
            for (i, result) in results.iter().enumerate() {
                let comma = if i + 1 < results.len() { "," } else { "" };
                if args.trace {
                    writeln!(out, "  {{")?;
                    writeln!(out, "    \"word\": \"{}\",", json_escape(&result.word))?;
                    writeln!(out, "    \"stem\": \"{}\",", json_escape(&result.stem))?;
                    writeln!(out, "    \"trace\": {{")?;
                    writeln!(
                        out,
                        "      \"stop_reason\": \"{}\",",
                        result.trace.stop_reason
                    )?;
                    writeln!(
                        out,
                        "      \"phase2_applied\": {},",
                        result.trace.phase2_applied
                    )?;
                    writeln!(out, "      \"steps\": [")?;
                    for (j, step) in result.trace.steps.iter().enumerate() {
                        let step_comma = if j + 1 < result.trace.steps.len() {
                            ","
                        } else {
                            ""
                        };
                        writeln!(
                            out,
                            "        {{\"i\": {}, \"frequency\": {}, \"lambda\": {}, \"delta\": {}, \"psi\": {}}}{}",
                            step.ngram_len,
                            step.frequency,
                            step.lambda,
                            delta_json(step),
                            step.psi_after,
                            step_comma
                        )?;
                    }
                    writeln!(out, "      ]")?;
                    writeln!(out, "    }}")?;
                    writeln!(out, "  }}{comma}")?;
                } else {
                    writeln!(
                        out,
                        "  {{\"word\": \"{}\", \"stem\": \"{}\"}}{}",
                        json_escape(&result.word),
                        json_escape(&result.stem),
                        comma
                    )?;
                }
            }
            writeln!(out, "]")?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = fs::read_to_string(&args.pairs)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", args.pairs.display())))?;
    let rows = parse_pairs_tsv(&text)
        .map_err(|e| CliError::input(format!("{}: {e}", args.pairs.display())))?;
    if rows.is_empty() {
        return Err(CliError::input(format!(
            "{}: no data rows",
            args.pairs.display()
        )));
    }
    let pairs: Vec<StemPair> = rows.iter().map(|r| r.pair.clone()).collect();
    let report = compare_report(&pairs, args.alpha).map_err(|e| CliError::input(e.to_string()))?;
    let mismatches = validate_expected(&rows);
    let rows_checked = rows
        .iter()
        .filter(|r| r.expected_ld_a.is_some() || r.expected_ld_b.is_some())
        .count();

    match args.format {
        OutputFormat::Tsv => {
            write!(out, "{}", report.to_tsv(false))?;
            writeln!(out, "expected_ld_rows\t{rows_checked}")?;
            writeln!(out, "expected_ld_mismatches\t{}", mismatches.len())?;
            for mismatch in &mismatches {
                writeln!(out, "# mismatch: {mismatch}")?;
            }
        }
        OutputFormat::Json => {
            writeln!(out, "{{")?;
            writeln!(out, "  \"n\": {},", report.n)?;
            writeln!(out, "  \"n_r\": {},", report.n_r)?;
            writeln!(out, "  \"w\": {:.6},", report.w)?;
            writeln!(out, "  \"z\": {:.6},", report.z)?;
            writeln!(out, "  \"p_two_sided\": {:.6},", report.p_two_sided)?;
            writeln!(out, "  \"alpha\": {:.6},", report.alpha)?;
            writeln!(out, "  \"reject_null\": {},", report.reject_null)?;
            writeln!(out, "  \"mean_ld_a\": {:.6},", report.mean_ld_a)?;
            writeln!(out, "  \"mean_ld_b\": {:.6},", report.mean_ld_b)?;
            writeln!(
                out,
                "  \"identical_stem_count\": {},",
                report.identical_stem_count
            )?;
            writeln!(out, "  \"expected_ld_rows\": {rows_checked},")?;
            if mismatches.is_empty() {
                writeln!(out, "  \"expected_ld_mismatches\": []")?;
            } else {
                writeln!(out, "  \"expected_ld_mismatches\": [")?;
                for (i, m) in mismatches.iter().enumerate() {
                    let comma = if i + 1 < mismatches.len() { "," } else { "" };
                    writeln!(
                        out,
                        "    {{\"row\": {}, \"word\": \"{}\", \"column\": \"{}\", \"stored\": {}, \"recomputed\": {}}}{}",
                        m.row,
                        json_escape(&m.word),
                        m.column,
                        m.stored,
                        m.recomputed,
                        comma
                    )?;
                }
                writeln!(out, "  ]")?;
            }
            writeln!(out, "}}")?;
        }
    }

    if mismatches.is_empty() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_VALIDATION_MISMATCH)
    }
}

type CheckResult = Result<String, String>;

fn check_eval_sample_distances() -> CheckResult {
    let rows = fixtures::eval_sample_rows();
    if rows.len() != 100 {
        return Err(format!("expected 100 rows, found {}", rows.len()));
    }
    let mismatches = validate_expected(&rows);
    if let Some(first) = mismatches.first() {
        return Err(format!(
            "{} of 100 recorded distances disagree; first: {first}",
            mismatches.len()
        ));
    }
    Ok("100/100 recorded distances match recomputation".to_string())
}

fn check_eval_sample_signed_rank() -> CheckResult {
    let rows = fixtures::eval_sample_rows();
    let pairs: Vec<StemPair> = rows.iter().map(|r| r.pair.clone()).collect();
    let report = compare_report(&pairs, 0.05).map_err(|e| e.to_string())?;
    if report.n_r != 40 {
        return Err(format!("expected n_r=40, got {}", report.n_r));
    }
    if (report.w - 92.0).abs() > 1e-9 {
        return Err(format!("expected W=92, got {}", report.w));
    }
    if !(0.44..=0.64).contains(&report.p_two_sided) {
        return Err(format!(
            "p={:.6} outside the expected [0.44, 0.64] window",
            report.p_two_sided
        ));
    }
    if report.reject_null {
        return Err("the test rejected the null at alpha=0.05".to_string());
    }
    Ok(format!(
        "W=92, n_r=40, p={:.6}, null retained at alpha=0.05",
        report.p_two_sided
    ))
}

fn check_juggling_trace() -> CheckResult {
    let index = fixtures::juggling_index();
    let result = stem(&index, "juggling", &StemmerConfig::default()).map_err(|e| e.to_string())?;
    if result.stem != "juggl" {
        return Err(format!("expected stem \"juggl\", got {:?}", result.stem));
    }
    let steps = &result.trace.steps;
    let expected = [(5, 729, 186, 4), (6, 328, 401, 5)];
    if steps.len() != expected.len() {
        return Err(format!("expected 2 trace steps, got {}", steps.len()));
    }
    for (step, (i, f, lambda, psi)) in steps.iter().zip(expected) {
        if step.ngram_len != i
            || step.frequency != f
            || step.lambda != lambda
            || step.psi_after != psi
        {
            return Err(format!("unexpected step at i={}: {step:?}", step.ngram_len));
        }
    }
    if steps[1].delta != Some(Delta::Finite(215)) {
        return Err(format!(
            "expected delta +215 at i=6, got {:?}",
            steps[1].delta
        ));
    }
    if result.trace.stop_reason != StopReason::PositiveSecondDeviation {
        return Err(format!(
            "unexpected stop reason {}",
            result.trace.stop_reason
        ));
    }
    Ok("juggling -> juggl (lambda 186 then 401, delta +215 stops at i=6)".to_string())
}

fn check_cluster(index: &PrefixFrequencyIndex, words: &[&str], expected_stem: &str) -> CheckResult {
    let config = StemmerConfig::default();
    for word in words {
        let result = stem(index, word, &config).map_err(|e| e.to_string())?;
        if result.stem != expected_stem {
            return Err(format!(
                "{word} stemmed to {:?}, expected {expected_stem:?}",
                result.stem
            ));
        }
    }
    Ok(format!(
        "{} words conflate to \"{expected_stem}\"",
        words.len()
    ))
}

fn check_cluster_en() -> CheckResult {
    check_cluster(
        &fixtures::clusters_en_index(),
        &[
            "create", "creates", "creating", "created", "creation", "creative",
        ],
        "creat",
    )
}

fn check_cluster_es() -> CheckResult {
    check_cluster(
        &fixtures::clusters_es_index(),
        &["trabajan", "trabajar", "trabajado", "trabajador"],
        "traba",
    )
}

fn check_cluster_pt() -> CheckResult {
    check_cluster(
        &fixtures::clusters_pt_index(),
        &["dificil", "dificilmente"],
        "dific",
    )
}

fn check_oov_passthrough() -> CheckResult {
    let index = fixtures::juggling_index();
    let result = stem(&index, "zyzzyva", &StemmerConfig::default()).map_err(|e| e.to_string())?;
    if result.stem != "zyzzyva" {
        return Err(format!("unknown word was altered to {:?}", result.stem));
    }
    if result.trace.stop_reason != StopReason::OovPassthrough {
        return Err(format!(
            "unexpected stop reason {}",
            result.trace.stop_reason
        ));
    }
    Ok("unknown words pass through unchanged".to_string())
}

fn check_report_determinism() -> CheckResult {
    let pairs: Vec<StemPair> = fixtures::eval_sample_rows()
        .iter()
        .map(|r| r.pair.clone())
        .collect();
    let first = compare_report(&pairs, 0.05).map_err(|e| e.to_string())?;
    let second = compare_report(&pairs, 0.05).map_err(|e| e.to_string())?;
    if first.to_tsv(true) != second.to_tsv(true) || first.to_json(true) != second.to_json(true) {
        return Err("two runs serialized differently".to_string());
    }
    Ok("repeated runs serialize to identical bytes".to_string())
}

type Check = (&'static str, fn() -> CheckResult);

pub fn cmd_selftest(out: &mut dyn Write) -> Result<i32, CliError> {
    let checks: [Check; 8] = [
        ("eval-sample-distances", check_eval_sample_distances),
        ("eval-sample-signed-rank", check_eval_sample_signed_rank),
        ("juggling-trace", check_juggling_trace),
        ("cluster-conflation-en", check_cluster_en),
        ("cluster-conflation-es", check_cluster_es),
        ("cluster-conflation-pt", check_cluster_pt),
        ("oov-passthrough", check_oov_passthrough),
        ("report-determinism", check_report_determinism),
    ];
    let mut failures = 0;
    for (name, check) in checks {
        match check() {
            Ok(detail) => writeln!(out, "ok {name}: {detail}")?,
            Err(detail) => {
                failures += 1;
                writeln!(out, "FAIL {name}: {detail}")?;
            }
        }
    }
    writeln!(
        out,
        "selftest: {} checks, {failures} failures",
        checks.len()
    )?;
    if failures == 0 {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_VALIDATION_MISMATCH)
    }
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}
