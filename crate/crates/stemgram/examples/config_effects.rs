//! What the three configuration knobs actually change.
//!
//! The same word is stemmed under different configurations against the
//! bundled juggling corpus (prefix counts 915 -> 729 -> 328 after "jugg").

use stemgram::fixtures::juggling_index;
use stemgram::{stem, PrefixFrequencyIndex, StemmerConfig};

fn show(index: &PrefixFrequencyIndex, word: &str, label: &str, config: &StemmerConfig) {
    let result = stem(index, word, config).unwrap();
    println!(
        "  {label:<26} {} -> {:<9} ({})",
        result.word, result.stem, result.trace.stop_reason
    );
}

fn main() {
    let index = juggling_index();
    let defaults = StemmerConfig::default();

    println!("gamma (deviation threshold):");
    show(&index, "juggling", "gamma=0 (default)", &defaults);
    // 186 and 401 both stay below 500, so psi follows i instead of i-1.
    show(
        &index,
        "juggling",
        "gamma=500",
        &StemmerConfig {
            gamma: 500,
            ..defaults
        },
    );

    println!("\nfrequency floor:");
    show(&index, "juggling", "floor=0 (default)", &defaults);
    // A floor of 400 zeroes the 328-count tail, sharpening the cliff.
    show(
        &index,
        "juggling",
        "floor=400",
        &StemmerConfig {
            frequency_floor: 400,
            ..defaults
        },
    );

    println!("\nout-of-vocabulary words:");
    show(&index, "zebra", "passthrough (default)", &defaults);
    show(
        &index,
        "zebra",
        "no passthrough",
        &StemmerConfig {
            oov_passthrough: false,
            ..defaults
        },
    );
}
