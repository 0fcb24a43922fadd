//! Language-independent statistical stemming.
//!
//! stemgram strips suffixes without knowing anything about the language:
//! it watches how the corpus frequency of a word's prefixes decays as the
//! prefixes grow, and cuts where the decay pattern says the stem ends. The
//! same crate carries the evaluation half: Levenshtein stripping distances
//! and a Wilcoxon signed-rank test for comparing two stemmers on a shared
//! word sample.
//!
//! # Quick start
//!
//! ```
//! use stemgram::{stem, CorpusEntry, PrefixFrequencyIndex, StemmerConfig};
//!
//! let index = PrefixFrequencyIndex::from_entries(vec![
//!     CorpusEntry::new("create", 10).unwrap(),
//!     CorpusEntry::new("creates", 8).unwrap(),
//!     CorpusEntry::new("creating", 6).unwrap(),
//!     CorpusEntry::new("created", 9).unwrap(),
//!     CorpusEntry::new("creation", 7).unwrap(),
//!     CorpusEntry::new("creative", 5).unwrap(),
//! ]);
//! let config = StemmerConfig::default();
//! assert_eq!(stem(&index, "creating", &config).unwrap().stem, "creat");
//! ```
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! * `cargo run --example quickstart` - build an index, stem words
//! * `cargo run --example trace_walkthrough` - follow every phase-1 step
//! * `cargo run --example cluster_conflation` - inflection clusters in
//!   three languages collapsing to shared stems
//! * `cargo run --example corpus_stats` - inspect an index
//! * `cargo run --example config_effects` - what gamma, the frequency
//!   floor and passthrough change
//! * `cargo run --example evaluate_stemmers` - the bundled 100-word
//!   comparison, end to end
//!
//! The same functionality is scriptable through the `stemgram` binary; see
//! the README for the command-line surface.

pub mod cli;
pub mod corpus;
pub mod evaluate;
pub mod fixtures;
pub mod stemmer;

pub use corpus::{
    entries_from_raw_text, normalize_token, parse_corpus_tsv, tokenize_text, CorpusEntry,
    CorpusError, PrefixFrequencyIndex,
};
pub use evaluate::report::{compare_report, ReportDocument};
pub use evaluate::wilcoxon::{
    wilcoxon_exact, wilcoxon_signed_rank, wilcoxon_signed_rank_with, WilcoxonMethod,
    WilcoxonOptions, WilcoxonResult,
};
pub use evaluate::{
    levenshtein, paired_distances, parse_pairs_tsv, validate_expected, DistanceRecord, EvalError,
    LdMismatch, PairRow, StemColumn, StemPair,
};
pub use stemmer::{
    ngram_profile, second_order_deviation, stem, stem_batch, Delta, Lambda, NGramProfile,
    StemError, StemResult, StemTrace, StemmerConfig, StopReason, TraceStep, MIN_WORD_LEN,
};
