//! Wilcoxon signed-rank test for paired samples.
//!
//! Given paired observations `(x_i, y_i)`, the differences `d_i = x_i - y_i`
//! are computed, zeros are discarded, and the absolute values of the
//! survivors are ranked (ties get the average of the ranks they straddle).
//! The statistic is `W = |Σ sign(d_i) · rank(|d_i|)|`; under the null
//! hypothesis that the differences are symmetric around zero, every sign
//! pattern is equally likely, which gives `W` mean 0 and variance
//! `N_r (N_r + 1)(2 N_r + 1) / 6` over the `N_r` retained pairs.
//!
//! [`wilcoxon_signed_rank`] approximates the null distribution with a
//! normal; [`wilcoxon_exact`] enumerates all `2^N_r` sign patterns instead,
//! which is reasonable up to `N_r = 20`.

use super::EvalError;

/// Largest reduced sample the exact enumeration accepts.
pub const EXACT_ENUMERATION_LIMIT: usize = 20;

/// How a p-value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WilcoxonMethod {
    NormalApprox,
    ExactEnumeration,
}

impl WilcoxonMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            WilcoxonMethod::NormalApprox => "normal-approx",
            WilcoxonMethod::ExactEnumeration => "exact-enumeration",
        }
    }
}

impl std::fmt::Display for WilcoxonMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a signed-rank test.
#[derive(Debug, Clone, PartialEq)]
pub struct WilcoxonResult {
    /// `|Σ sign · rank|`.
    pub w: f64,
    /// Number of pairs left after discarding zero differences.
    pub n_r: usize,
    /// Standardized statistic under the plain normal approximation (shown
    /// for reference even when the p-value came from enumeration).
    pub z: f64,
    pub p_two_sided: f64,
    pub method: WilcoxonMethod,
}

/// Optional refinements of the normal approximation. Both default to off.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WilcoxonOptions {
    /// Subtract 0.5 from `W` before standardizing: `z = (W - 0.5) / σ`.
    pub continuity_correction: bool,
    /// Use the variance of the realized (tie-averaged) ranks, `Σ rank_i²`,
    /// instead of the tie-free closed form.
    pub tie_correction: bool,
}

/// Signed average ranks of the nonzero differences: `(sign, rank)` per
/// retained pair, in input order.
fn signed_ranks(x: &[f64], y: &[f64]) -> Result<Vec<(f64, f64)>, EvalError> {
    if x.len() != y.len() {
        return Err(EvalError::LengthMismatch {
            x: x.len(),
            y: y.len(),
        });
    }
    let diffs: Vec<f64> = x
        .iter()
        .zip(y)
        .map(|(xi, yi)| xi - yi)
        .filter(|d| *d != 0.0)
        .collect();
    let n = diffs.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| diffs[a].abs().total_cmp(&diffs[b].abs()));

    let mut ranks = vec![0.0f64; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && diffs[order[j]].abs() == diffs[order[i]].abs() {
            j += 1;
        }
        // Positions i..j (0-based) share ranks i+1..=j, averaging to their
        // midpoint.
        let avg = (i + 1 + j) as f64 / 2.0;
        for &k in &order[i..j] {
            ranks[k] = avg;
        }
        i = j;
    }
    Ok(diffs
        .iter()
        .zip(ranks)
        .map(|(d, r)| (d.signum(), r))
        .collect())
}

fn zero_result(method: WilcoxonMethod) -> WilcoxonResult {
    WilcoxonResult {
        w: 0.0,
        n_r: 0,
        z: 0.0,
        p_two_sided: 1.0,
        method,
    }
}

/// Signed-rank test with the plain normal approximation.
pub fn wilcoxon_signed_rank(x: &[f64], y: &[f64]) -> Result<WilcoxonResult, EvalError> {
    wilcoxon_signed_rank_with(x, y, WilcoxonOptions::default())
}

/// Signed-rank test with explicit approximation options.
pub fn wilcoxon_signed_rank_with(
    x: &[f64],
    y: &[f64],
    options: WilcoxonOptions,
) -> Result<WilcoxonResult, EvalError> {
    let signed = signed_ranks(x, y)?;
    let n_r = signed.len();
    if n_r == 0 {
        return Ok(zero_result(WilcoxonMethod::NormalApprox));
    }
    let w = signed.iter().map(|(s, r)| s * r).sum::<f64>().abs();
    let variance = if options.tie_correction {
        signed.iter().map(|(_, r)| r * r).sum::<f64>()
    } else {
        let n = n_r as f64;
        n * (n + 1.0) * (2.0 * n + 1.0) / 6.0
    };
    let numerator = if options.continuity_correction {
        (w - 0.5).max(0.0)
    } else {
        w
    };
    let z = numerator / variance.sqrt();
    Ok(WilcoxonResult {
        w,
        n_r,
        z,
        p_two_sided: two_sided_p(z),
        method: WilcoxonMethod::NormalApprox,
    })
}

/// Signed-rank test by exhausting all sign patterns.
///
/// The p-value is the exact null probability of a statistic at least as
/// large as the observed `W`, conditional on the realized ranks. Rejects
/// samples with more than [`EXACT_ENUMERATION_LIMIT`] nonzero differences.
/// The reported `z` is the plain normal standardization, for comparison.
pub fn wilcoxon_exact(x: &[f64], y: &[f64]) -> Result<WilcoxonResult, EvalError> {
    let signed = signed_ranks(x, y)?;
    let n_r = signed.len();
    if n_r == 0 {
        return Ok(zero_result(WilcoxonMethod::ExactEnumeration));
    }
    if n_r > EXACT_ENUMERATION_LIMIT {
        return Err(EvalError::SampleTooLarge {
            n_r,
            limit: EXACT_ENUMERATION_LIMIT,
        });
    }

    // Average ranks are multiples of 1/2, so doubled ranks are integers and
    // the whole enumeration runs in exact arithmetic.
    let doubled: Vec<i64> = signed
        .iter()
        .map(|(_, r)| (r * 2.0).round() as i64)
        .collect();
    let w2: i64 = signed
        .iter()
        .zip(&doubled)
        .map(|((s, _), &r2)| if *s > 0.0 { r2 } else { -r2 })
        .sum::<i64>()
        .abs();

    // Gray-code walk over the 2^n sign patterns: each step flips one sign,
    // updating the running sum in O(1).
    let total = 1u64 << n_r;
    let mut sum: i64 = -doubled.iter().sum::<i64>();
    let mut hits: u64 = u64::from(sum.abs() >= w2);
    for mask in 1..total {
        let bit = mask.trailing_zeros() as usize;
        let gray = mask ^ (mask >> 1);
        if gray & (1 << bit) != 0 {
            sum += 2 * doubled[bit];
        } else {
            sum -= 2 * doubled[bit];
        }
        if sum.abs() >= w2 {
            hits += 1;
        }
    }

    let w = w2 as f64 / 2.0;
    let n = n_r as f64;
    let sigma = (n * (n + 1.0) * (2.0 * n + 1.0) / 6.0).sqrt();
    Ok(WilcoxonResult {
        w,
        n_r,
        z: w / sigma,
        p_two_sided: hits as f64 / total as f64,
        method: WilcoxonMethod::ExactEnumeration,
    })
}

fn two_sided_p(z: f64) -> f64 {
    (2.0 * (1.0 - normal_cdf(z))).clamp(0.0, 1.0)
}

fn normal_cdf(z: f64) -> f64 {
    0.5 * (1.0 + erf(z / std::f64::consts::SQRT_2))
}

/// Abramowitz & Stegun 7.1.26 rational approximation; absolute error below
/// 1.5e-7, plenty for p-values reported to six decimals.
fn erf(x: f64) -> f64 {
    let a1 = 0.254829592;
    let a2 = -0.284496736;
    let a3 = 1.421413741;
    let a4 = -1.453152027;
    let a5 = 1.061405429;
    let p = 0.3275911;

    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    let x = x.abs();
    let t = 1.0 / (1.0 + p * x);
    let y = 1.0 - ((((a5 * t + a4) * t + a3) * t + a2) * t + a1) * t * (-x * x).exp();
    sign * y
}
