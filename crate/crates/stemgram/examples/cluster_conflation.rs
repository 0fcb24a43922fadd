//! Inflection clusters in three languages collapsing to shared stems.
//!
//! Nothing below is language-specific: the same statistics cut English,
//! Spanish and Portuguese surface forms down to a common prefix, purely
//! from the corpus counts.

use stemgram::fixtures::{clusters_en_index, clusters_es_index, clusters_pt_index};
use stemgram::{stem, PrefixFrequencyIndex, StemmerConfig};

fn show(label: &str, index: &PrefixFrequencyIndex, words: &[&str]) {
    let config = StemmerConfig::default();
    println!("{label}:");
    for word in words {
        let result = stem(index, word, &config).unwrap();
        println!("  {:<14} -> {}", result.word, result.stem);
    }
    println!();
}

fn main() {
    show(
        "English",
        &clusters_en_index(),
        &[
            "create", "creates", "creating", "created", "creation", "creative",
        ],
    );
    show(
        "Spanish",
        &clusters_es_index(),
        &["trabajan", "trabajar", "trabajado", "trabajador"],
    );
    show(
        "Portuguese",
        &clusters_pt_index(),
        &["dificil", "dificilmente"],
    );
}
