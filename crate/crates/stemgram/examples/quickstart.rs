//! Build an index from a handful of counted words and stem against it.

use stemgram::{stem, CorpusEntry, PrefixFrequencyIndex, StemmerConfig};

fn main() {
    let entries = vec![
        ("create", 10),
        ("creates", 8),
        ("creating", 6),
        ("created", 9),
        ("creation", 7),
        ("creative", 5),
    ];
    let index = PrefixFrequencyIndex::from_entries(
        entries
            .into_iter()
            .map(|(word, count)| CorpusEntry::new(word, count).unwrap()),
    );

    let config = StemmerConfig::default();
    for word in [
        "create", "creates", "creating", "created", "creation", "creative", "cat", "zebra",
    ] {
        let result = stem(&index, word, &config).unwrap();
        println!(
            "{:<10} -> {:<8} ({})",
            result.word, result.stem, result.trace.stop_reason
        );
    }
}
