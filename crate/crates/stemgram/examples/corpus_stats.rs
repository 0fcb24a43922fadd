//! Inspect a corpus index: sizes, dominant prefixes, point lookups.
//!
//! Pass a corpus TSV path to inspect your own file; without arguments the
//! bundled English cluster corpus is used.

use std::env;
use std::fs;

use stemgram::fixtures::CLUSTERS_EN_TSV;
use stemgram::{parse_corpus_tsv, PrefixFrequencyIndex};

fn main() {
    let text = match env::args().nth(1) {
        Some(path) => fs::read_to_string(&path).unwrap_or_else(|e| {
            eprintln!("cannot read {path}: {e}");
            std::process::exit(2);
        }),
        None => CLUSTERS_EN_TSV.to_string(),
    };
    let entries = parse_corpus_tsv(&text).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });
    // Longest word in the corpus, for the decay demo below.
    let longest = entries
        .iter()
        .map(|e| e.word().to_string())
        .max_by_key(|w| (w.chars().count(), std::cmp::Reverse(w.clone())))
        .unwrap_or_default();
    let index = PrefixFrequencyIndex::from_entries(entries);

    println!(
        "entries={} tokens={}",
        index.entry_count(),
        index.total_tokens()
    );

    println!("\nmost frequent 4-character prefixes:");
    for (prefix, count) in index.top_prefixes(4, 10) {
        println!("  {prefix:<10} {count}");
    }

    if !longest.is_empty() {
        println!("\nfrequency decay along {longest:?}:");
        let width = longest.chars().count().max(10);
        for (depth, count) in index.prefix_counts(&longest).iter().enumerate() {
            let prefix: String = longest.chars().take(depth + 1).collect();
            println!("  {prefix:<width$} {count}");
        }
    }
}
