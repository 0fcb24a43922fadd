//! The bundled 100-word stemmer comparison, end to end.
//!
//! Each row of the sample carries a word and the stems two stemmers gave
//! it: a suffix-rule stemmer (a) and the prefix-frequency stemmer (b). The
//! stripping amount per stem is its Levenshtein distance from the word; the
//! signed-rank test then asks whether the paired distances differ
//! systematically. They do not: the test retains the null comfortably, so
//! on this sample the statistical stemmer strips like the rule-based one.

use stemgram::fixtures::eval_sample_rows;
use stemgram::{compare_report, validate_expected, StemPair};

fn main() {
    let rows = eval_sample_rows();

    // The sample ships with recorded distances; confirm them first.
    let mismatches = validate_expected(&rows);
    println!(
        "recorded distances: {}/{} rows confirmed",
        rows.len() - mismatches.len(),
        rows.len()
    );
    for mismatch in &mismatches {
        println!("  {mismatch}");
    }

    let pairs: Vec<StemPair> = rows.iter().map(|r| r.pair.clone()).collect();
    let report = compare_report(&pairs, 0.05).unwrap();

    println!("\nsigned-rank comparison:");
    print!("{}", report.to_tsv(false));

    println!("\nverdict:");
    if report.reject_null {
        println!(
            "  the two stemmers strip differently (p = {:.6})",
            report.p_two_sided
        );
    } else {
        println!(
            "  no systematic difference detected (p = {:.6} at alpha = {:.2})",
            report.p_two_sided, report.alpha
        );
    }
}
