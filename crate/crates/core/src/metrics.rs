//! Local heterogeneity measures. An ant compares two 3x3 intensity windows
//! and obtains a score in [0, 1]: 0 for identical neighborhoods, 1 for
//! maximal disagreement. Two interchangeable metrics are provided: an
//! ordinal one built on Ulam's distance between rank permutations, and a
//! statistical one combining mean, variance and histogram differences.

use crate::habitat::Window9;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Largest possible |mean difference| between two 8-bit windows.
pub const MAX_MEAN_DIFF: f64 = 255.0;
/// Largest possible |variance difference|: a half-0/half-255 window has
/// population variance 127.5^2 = 16256.25, against a constant window's 0.
pub const MAX_VARIANCE_DIFF: f64 = 16256.25;
/// Largest possible histogram distance: two disjoint 9-pixel histograms.
pub const MAX_HISTOGRAM_DIFF: f64 = 18.0;

/// Ranks 1..=9 of the nine window cells, positionally aligned with
/// [`Window9`] order. Always a true permutation: tied intensities are
/// ranked in raster-scan order (NW first, SE last).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RankPermutation([u8; 9]);

impl RankPermutation {
    pub fn identity() -> Self {
        Self([1, 2, 3, 4, 5, 6, 7, 8, 9])
    }

    pub fn ranks(&self) -> &[u8; 9] {
        &self.0
    }

    /// Element order reversed: entry i becomes entry n - i + 1.
    pub fn reversed(&self) -> Self {
        let mut r = self.0;
        r.reverse();
        Self(r)
    }
}

impl fmt::Display for RankPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

/// Ranks each cell among the nine window intensities, breaking ties by
/// raster position so the result is a permutation even on flat windows.
pub fn rank_window(w: &Window9) -> RankPermutation {
    let v = w.values();
    let mut ranks = [0u8; 9];
    for i in 0..9 {
        let mut rank = 1u8;
        for j in 0..9 {
            if v[j] < v[i] || (v[j] == v[i] && j < i) {
                rank += 1;
            }
        }
        ranks[i] = rank;
    }
    RankPermutation(ranks)
}

/// Composition permutation: entry i is the rank (in the second window) of
/// the cell that holds rank i + 1 in the first window.
pub fn compose(first: &RankPermutation, second: &RankPermutation) -> RankPermutation {
    let mut s = [0u8; 9];
    for (pos, &rank) in first.0.iter().enumerate() {
        s[usize::from(rank) - 1] = second.0[pos];
    }
    RankPermutation(s)
}

/// Length of the longest strictly increasing subsequence.
pub fn lis_length(values: &[u8]) -> usize {
    // Patience tails: tails[k] is the smallest possible final element of an
    // increasing subsequence of length k + 1.
    let mut tails: Vec<u8> = Vec::with_capacity(values.len());
    for &v in values {
        let slot = match tails.binary_search(&v) {
            Ok(i) | Err(i) => i,
        };
        if slot == tails.len() {
            tails.push(v);
        } else {
            tails[slot] = v;
        }
    }
    tails.len()
}

/// Ordinal correlation of two windows derived from Ulam distances.
///
/// `delta1` is the Ulam distance from the composition permutation to the
/// identity (n minus its LIS length); `delta2` the distance to the reverse
/// identity, computed on the reversed composition. `tau_u` and `tau_r`
/// rescale them into [-1, 1] and `tau = (tau_u - tau_r) / 2`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct UlamCorrelation {
    pub tau: f64,
    pub tau_u: f64,
    pub tau_r: f64,
    pub delta1: u8,
    pub delta2: u8,
}

pub fn ulam_correlation(w1: &Window9, w2: &Window9) -> UlamCorrelation {
    let s = compose(&rank_window(w1), &rank_window(w2));
    let delta1 = (9 - lis_length(s.ranks())) as u8;
    let delta2 = (9 - lis_length(s.reversed().ranks())) as u8;
    let tau_u = 1.0 - 2.0 * f64::from(delta1) / 8.0;
    let tau_r = 1.0 - 2.0 * f64::from(delta2) / 8.0;
    UlamCorrelation { tau: (tau_u - tau_r) / 2.0, tau_u, tau_r, delta1, delta2 }
}

#[derive(Error, Debug, PartialEq)]
pub enum WeightError {
    #[error("metric weights must be finite and non-negative, got ({0}, {1}, {2})")]
    Invalid(f64, f64, f64),
    #[error("metric weights must not all be zero")]
    AllZero,
}

/// Weights of the three statistical terms. Construction normalizes them to
/// sum to one, so arbitrary non-negative user weights stay a convex
/// combination.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct MetricWeights {
    a: f64,
    b: f64,
    c: f64,
}

impl MetricWeights {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, WeightError> {
        let ok = |w: f64| w.is_finite() && w >= 0.0;
        if !(ok(a) && ok(b) && ok(c)) {
            return Err(WeightError::Invalid(a, b, c));
        }
        let sum = a + b + c;
        if sum <= 0.0 {
            return Err(WeightError::AllZero);
        }
        // Already-normalized weights pass through unchanged, so
        // normalization is idempotent bit for bit.
        if (sum - 1.0).abs() <= 1e-12 {
            return Ok(Self { a, b, c });
        }
        Ok(Self { a: a / sum, b: b / sum, c: c / sum })
    }

    /// Equal weighting of all three terms.
    pub fn thirds() -> Self {
        Self { a: 1.0 / 3.0, b: 1.0 / 3.0, c: 1.0 / 3.0 }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

impl Default for MetricWeights {
    fn default() -> Self {
        Self::thirds()
    }
}

/// Breakdown of the statistical measure, each term already scaled to [0, 1].
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct StatTerms {
    pub mean_term: f64,
    pub variance_term: f64,
    pub histogram_term: f64,
    pub value: f64,
}

fn window_stats(w: &Window9) -> (f64, f64) {
    let mut sum = 0u32;
    let mut sum_sq = 0u32;
    for &v in w.values() {
        sum += u32::from(v);
        sum_sq += u32::from(v) * u32::from(v);
    }
    let mean = f64::from(sum) / 9.0;
    // Population variance over the nine cells.
    let variance = (f64::from(sum_sq) - 9.0 * mean * mean) / 9.0;
    (mean, variance)
}

pub fn stat_delta_terms(w1: &Window9, w2: &Window9, weights: &MetricWeights) -> StatTerms {
    let (m1, v1) = window_stats(w1);
    let (m2, v2) = window_stats(w2);

    // Signed histogram: +1 per w1 pixel, -1 per w2 pixel.
    let mut hist = [0i8; 256];
    for &v in w1.values() {
        hist[usize::from(v)] += 1;
    }
    for &v in w2.values() {
        hist[usize::from(v)] -= 1;
    }
    let s: u32 = hist.iter().map(|&d| u32::from(d.unsigned_abs())).sum();

    let mean_term = (m1 - m2).abs() / MAX_MEAN_DIFF;
    let variance_term = (v1 - v2).abs() / MAX_VARIANCE_DIFF;
    let histogram_term = f64::from(s) / MAX_HISTOGRAM_DIFF;
    let value = (weights.a * mean_term + weights.b * variance_term + weights.c * histogram_term)
        / (weights.a + weights.b + weights.c);
    StatTerms { mean_term, variance_term, histogram_term, value }
}

/// Statistical difference of two windows in [0, 1]: a weighted combination
/// of mean, variance and histogram discrepancies, each normalized by its
/// analytic worst case over 8-bit windows.
pub fn stat_delta(w1: &Window9, w2: &Window9, weights: &MetricWeights) -> f64 {
    stat_delta_terms(w1, w2, weights).value
}

#[derive(Error, Debug, PartialEq, Eq)]
#[error("unknown metric `{0}`; expected `stat` or `ulam`")]
pub struct ParseMetricError(String);

/// Which heterogeneity measure drives the extra pheromone deposition.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum MetricKind {
    #[default]
    Statistical,
    Ulam,
}

impl FromStr for MetricKind {
    type Err = ParseMetricError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "stat" | "statistical" => Ok(Self::Statistical),
            "ulam" => Ok(Self::Ulam),
            other => Err(ParseMetricError(other.to_owned())),
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Statistical => write!(f, "stat"),
            Self::Ulam => write!(f, "ulam"),
        }
    }
}

/// Heterogeneity in [0, 1]. For the ordinal metric the raw correlation is
/// kept alongside; perfect agreement (tau = 1) maps to 0 and perfect
/// disagreement (tau = -1) to 1, so both metrics plug into deposition the
/// same way.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct HeterogeneityScore {
    pub value: f64,
    pub raw_tau: Option<f64>,
}

pub fn heterogeneity(
    w1: &Window9,
    w2: &Window9,
    metric: MetricKind,
    weights: &MetricWeights,
) -> HeterogeneityScore {
    match metric {
        MetricKind::Statistical => {
            HeterogeneityScore { value: stat_delta(w1, w2, weights), raw_tau: None }
        }
        MetricKind::Ulam => {
            let tau = ulam_correlation(w1, w2).tau;
            HeterogeneityScore { value: (1.0 - tau) / 2.0, raw_tau: Some(tau) }
        }
    }
}
