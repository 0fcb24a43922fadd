//! Follow the stemmer through every decision it makes for one word.
//!
//! The bundled corpus puts a frequency cliff after "juggl": 915 tokens share
//! "jugg", 729 share "juggl", and only 328 continue to "juggli". The trace
//! shows the first-order deviation spiking at the cliff and the positive
//! second-order deviation stopping the scan one step later.

use stemgram::fixtures::juggling_index;
use stemgram::{ngram_profile, stem, StemmerConfig};

fn main() {
    let index = juggling_index();
    let config = StemmerConfig::default();
    let word = "juggling";

    let profile = ngram_profile(&index, word, &config).unwrap();
    println!("prefix frequencies of {word:?}:");
    for i in 4..=profile.word_len() {
        let prefix: String = word.chars().take(i).collect();
        println!("  F_{i} {prefix:<9} = {}", profile.frequency(i).unwrap());
    }

    let result = stem(&index, word, &config).unwrap();
    println!("\nphase-1 scan:");
    println!(
        "  {:>2} {:>5} {:>7} {:>6} {:>4}",
        "i", "F_i", "lambda", "delta", "psi"
    );
    for step in &result.trace.steps {
        let delta = step.delta.map_or("-".to_string(), |d| d.to_string());
        println!(
            "  {:>2} {:>5} {:>7} {:>6} {:>4}",
            step.ngram_len, step.frequency, step.lambda, delta, step.psi_after
        );
    }
    println!("\nstopped: {}", result.trace.stop_reason);
    println!("phase 2 applied: {}", result.trace.phase2_applied);
    println!("{} -> {}", result.word, result.stem);
}
