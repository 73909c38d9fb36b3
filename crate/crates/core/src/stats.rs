//! Nonparametric comparison of per-window score distributions.
//!
//! Wilcoxon signed-rank (exact below 26 effective pairs, normal approximation
//! with continuity correction above), Benjamini-Hochberg step-up adjustment,
//! Cliff's delta with the usual magnitude bands, and the better/tie/worse
//! verdict that needs both a significant adjusted p-value and a non-trivial
//! effect size.

use std::cmp::Ordering;
use std::fmt;

use statrs::distribution::{ContinuousCDF, Normal};

/// Largest effective sample size handled by the exact null distribution.
pub const EXACT_MAX_N: usize = 25;
pub const SIGNIFICANCE: f64 = 0.05;
/// |delta| below this is negligible.
pub const NEGLIGIBLE_DELTA: f64 = 0.147;
const SMALL_DELTA: f64 = 0.33;
const MEDIUM_DELTA: f64 = 0.474;

/// Treatment of zero paired differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZeroMethod {
    /// Discard zeros before ranking.
    #[default]
    Wilcoxon,
    /// Rank zeros with the rest, then drop their ranks.
    Pratt,
}

/// Alternative hypothesis about the paired differences `a - b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alternative {
    #[default]
    TwoSided,
    /// `a` tends to be larger.
    Greater,
    /// `a` tends to be smaller.
    Less,
}

/// How verdict p-values are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sidedness {
    #[default]
    TwoSided,
    /// One-sided test in the direction of Cliff's delta.
    Directional,
}

impl std::str::FromStr for Sidedness {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "two-sided" | "two_sided" | "two" => Ok(Sidedness::TwoSided),
            "directional" | "one-sided" | "one_sided" | "one" => Ok(Sidedness::Directional),
            other => Err(format!("unknown sidedness `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TestOptions {
    pub zeros: ZeroMethod,
    pub sidedness: Sidedness,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WilcoxonResult {
    pub p_value: f64,
    /// Sum of ranks of positive differences.
    pub w_plus: f64,
    /// Number of nonzero differences.
    pub n: usize,
    pub exact: bool,
    /// Every difference was zero; `p_value` is 1.
    pub degenerate: bool,
}

/// Average ranks (1-based) of `values`, ties sharing their mean rank.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = rank;
        }
        i = j + 1;
    }
    ranks
}

/// Two-sided paired Wilcoxon signed-rank test on `a - b`.
pub fn wilcoxon_signed_rank(a: &[f64], b: &[f64]) -> WilcoxonResult {
    wilcoxon_signed_rank_with(a, b, ZeroMethod::Wilcoxon)
}

pub fn wilcoxon_signed_rank_with(a: &[f64], b: &[f64], zeros: ZeroMethod) -> WilcoxonResult {
    wilcoxon_test(a, b, zeros, Alternative::TwoSided)
}

pub fn wilcoxon_test(a: &[f64], b: &[f64], zeros: ZeroMethod, alt: Alternative) -> WilcoxonResult {
    assert_eq!(a.len(), b.len(), "paired samples must have equal length");
    let diffs: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let ranked: Vec<f64> = match zeros {
        ZeroMethod::Wilcoxon => diffs.iter().copied().filter(|d| *d != 0.0).collect(),
        ZeroMethod::Pratt => diffs.clone(),
    };
    let ranks = average_ranks(&ranked.iter().map(|d| d.abs()).collect::<Vec<_>>());
    let (signs, ranks): (Vec<f64>, Vec<f64>) = ranked
        .iter()
        .zip(&ranks)
        .filter(|(d, _)| **d != 0.0)
        .map(|(d, r)| (d.signum(), *r))
        .unzip();
    let n = ranks.len();
    if n == 0 {
        return WilcoxonResult {
            p_value: 1.0,
            w_plus: 0.0,
            n: 0,
            exact: true,
            degenerate: true,
        };
    }
    let w_plus: f64 = signs
        .iter()
        .zip(&ranks)
        .filter(|(s, _)| **s > 0.0)
        .map(|(_, r)| r)
        .sum();
    if n <= EXACT_MAX_N {
        WilcoxonResult {
            p_value: exact_p(&ranks, w_plus, alt),
            w_plus,
            n,
            exact: true,
            degenerate: false,
        }
    } else {
        WilcoxonResult {
            p_value: normal_p(&ranks, w_plus, alt),
            w_plus,
            n,
            exact: false,
            degenerate: false,
        }
    }
}

/// Exact p from the sign-flip null distribution of W+, computed by counting
/// subsets of doubled (hence integral) ranks.
fn exact_p(ranks: &[f64], w_plus: f64, alt: Alternative) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|r| (r * 2.0).round() as usize).collect();
    let total: usize = doubled.iter().sum();
    let mut counts = vec![0u64; total + 1];
    counts[0] = 1;
    let mut reach = 0;
    for &r in &doubled {
        for s in (0..=reach).rev() {
            if counts[s] > 0 {
                counts[s + r] += counts[s];
            }
        }
        reach += r;
    }
    let w = (w_plus * 2.0).round() as usize;
    let all = 2f64.powi(ranks.len() as i32);
    let lower: u64 = counts[..=w].iter().sum();
    let upper: u64 = counts[w..].iter().sum();
    match alt {
        Alternative::TwoSided => (2.0 * lower.min(upper) as f64 / all).min(1.0),
        Alternative::Greater => upper as f64 / all,
        Alternative::Less => lower as f64 / all,
    }
}

fn normal_p(ranks: &[f64], w_plus: f64, alt: Alternative) -> f64 {
    let n = ranks.len() as f64;
    let mean = n * (n + 1.0) / 4.0;
    // tie correction from groups of equal ranks
    let mut sorted = ranks.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    let var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term / 48.0;
    if var <= 0.0 {
        return 1.0;
    }
    let sd = var.sqrt();
    let normal = Normal::new(0.0, 1.0).expect("standard normal");
    match alt {
        Alternative::TwoSided => {
            let z = ((w_plus - mean).abs() - 0.5).max(0.0) / sd;
            (2.0 * normal.sf(z)).clamp(0.0, 1.0)
        }
        Alternative::Greater => normal.sf((w_plus - mean - 0.5) / sd),
        Alternative::Less => normal.cdf((w_plus - mean + 0.5) / sd),
    }
}

/// Benjamini-Hochberg adjusted p-values, returned in input order.
pub fn bh_adjust(pvals: &[f64]) -> Vec<f64> {
    let m = pvals.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| pvals[a].total_cmp(&pvals[b]));
    let mut adjusted = vec![0.0; m];
    let mut running = 1.0f64;
    for (pos, &i) in order.iter().enumerate().rev() {
        let k = (pos + 1) as f64;
        running = running.min(pvals[i] * m as f64 / k);
        adjusted[i] = running.min(1.0);
    }
    adjusted
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Magnitude {
    Negligible,
    Small,
    Medium,
    Large,
}

impl Magnitude {
    pub fn of(delta: f64) -> Self {
        let d = delta.abs();
        if d < NEGLIGIBLE_DELTA {
            Magnitude::Negligible
        } else if d < SMALL_DELTA {
            Magnitude::Small
        } else if d < MEDIUM_DELTA {
            Magnitude::Medium
        } else {
            Magnitude::Large
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Magnitude::Negligible => "negligible",
            Magnitude::Small => "small",
            Magnitude::Medium => "medium",
            Magnitude::Large => "large",
        }
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Cliff's delta: P(a > b) - P(a < b) over all cross pairs.
///
/// Counts dominance by binary search into the sorted `b`, so it runs in
/// O((n + m) log m).
pub fn cliffs_delta(a: &[f64], b: &[f64]) -> (f64, Magnitude) {
    assert!(
        !a.is_empty() && !b.is_empty(),
        "Cliff's delta needs nonempty samples"
    );
    let mut sorted = b.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut dominance: i64 = 0;
    for &x in a {
        let below = sorted.partition_point(|&y| y < x) as i64;
        let not_above = sorted.partition_point(|&y| y <= x) as i64;
        let above = sorted.len() as i64 - not_above;
        dominance += below - above;
    }
    let delta = dominance as f64 / (a.len() * b.len()) as f64;
    (delta, Magnitude::of(delta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Better,
    Tie,
    Worse,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::Better => "BETTER",
            Color::Tie => "TIE",
            Color::Worse => "WORSE",
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Color::Better => Color::Worse,
            Color::Worse => Color::Better,
            Color::Tie => Color::Tie,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Better/tie/worse from A's side given an adjusted p and Cliff's delta (A vs B).
pub fn color(adjusted_p: f64, delta: f64) -> Color {
    if adjusted_p >= SIGNIFICANCE || delta.abs() < NEGLIGIBLE_DELTA {
        return Color::Tie;
    }
    match delta.partial_cmp(&0.0) {
        Some(Ordering::Greater) => Color::Better,
        Some(Ordering::Less) => Color::Worse,
        _ => Color::Tie,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonVerdict {
    pub learner: String,
    pub baseline: String,
    pub p_value: f64,
    pub p_adjusted: f64,
    pub delta: f64,
    pub magnitude: Magnitude,
    pub color: Color,
    /// Number of paired windows.
    pub pairs: usize,
}

/// Candidate samples aligned with the baseline by window ordinal.
pub struct Paired<'a> {
    pub learner: &'a str,
    pub learner_scores: &'a [f64],
    pub baseline_scores: &'a [f64],
}

/// Compares every candidate against its paired baseline, adjusting p-values
/// across the whole family.
pub fn compare_family(
    baseline: &str,
    family: &[Paired<'_>],
    options: TestOptions,
) -> Vec<ComparisonVerdict> {
    let effects: Vec<(f64, Magnitude)> = family
        .iter()
        .map(|c| {
            if c.learner_scores.is_empty() {
                (0.0, Magnitude::Negligible)
            } else {
                cliffs_delta(c.learner_scores, c.baseline_scores)
            }
        })
        .collect();
    let raw: Vec<f64> = family
        .iter()
        .zip(&effects)
        .map(|(c, &(delta, _))| {
            if c.learner_scores.is_empty() {
                return 1.0;
            }
            let alt = match options.sidedness {
                Sidedness::TwoSided => Alternative::TwoSided,
                Sidedness::Directional if delta > 0.0 => Alternative::Greater,
                Sidedness::Directional if delta < 0.0 => Alternative::Less,
                Sidedness::Directional => Alternative::TwoSided,
            };
            wilcoxon_test(c.learner_scores, c.baseline_scores, options.zeros, alt).p_value
        })
        .collect();
    let adjusted = bh_adjust(&raw);
    family
        .iter()
        .zip(effects)
        .zip(raw.iter().zip(&adjusted))
        .map(
            |((c, (delta, magnitude)), (&p, &p_adj))| ComparisonVerdict {
                learner: c.learner.to_string(),
                baseline: baseline.to_string(),
                p_value: p,
                p_adjusted: p_adj,
                delta,
                magnitude,
                color: color(p_adj, delta),
                pairs: c.learner_scores.len(),
            },
        )
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identical_samples() {
        let a = [0.1, 0.4, 0.3];
        let r = wilcoxon_signed_rank(&a, &a);
        assert_eq!(r.p_value, 1.0);
        assert!(r.degenerate);
    }

    #[test]
    fn three_positive_differences() {
        let r = wilcoxon_signed_rank(&[2.0, 3.0, 4.0], &[1.0, 1.0, 1.0]);
        assert!(r.exact);
        assert!((r.p_value - 0.25).abs() < 1e-15);
        assert_eq!(r.w_plus, 6.0);
    }

    #[test]
    fn large_sample_uses_normal_approximation() {
        let a: Vec<f64> = (0..40).map(|i| i as f64 + 0.5).collect();
        let b: Vec<f64> = (0..40).map(|i| i as f64).collect();
        let r = wilcoxon_signed_rank(&a, &b);
        assert!(!r.exact);
        assert!(r.p_value < 1e-6);
        let c: Vec<f64> = (0..40)
            .map(|i| if i % 2 == 0 { 1.0 } else { -1.0 })
            .collect();
        let r = wilcoxon_signed_rank(&c, &vec![0.0; 40]);
        assert!(r.p_value > 0.9);
    }

    #[test]
    fn pratt_keeps_zero_ranks() {
        let a = [0.0, 1.0, 2.0, 3.0];
        let b = [0.0, 0.0, 0.0, 0.0];
        let w = wilcoxon_signed_rank_with(&a, &b, ZeroMethod::Wilcoxon);
        let p = wilcoxon_signed_rank_with(&a, &b, ZeroMethod::Pratt);
        assert_eq!(w.w_plus, 6.0);
        assert_eq!(p.w_plus, 9.0);
        assert_eq!(p.n, 3);
    }

    #[test]
    fn bh_examples() {
        let adj = bh_adjust(&[0.01, 0.02, 0.04]);
        for (x, y) in adj.iter().zip([0.03, 0.03, 0.04]) {
            assert!((x - y).abs() < 1e-15);
        }
        assert_eq!(bh_adjust(&[0.2]), vec![0.2]);
        assert!(bh_adjust(&[0.05; 5])
            .iter()
            .all(|&p| (p - 0.05).abs() < 1e-15));
        assert_eq!(bh_adjust(&[0.9, 0.8]), vec![0.9, 0.9]);
        assert!(bh_adjust(&[]).is_empty());
    }

    #[test]
    fn cliffs_examples() {
        let (d, m) = cliffs_delta(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]);
        assert_eq!((d, m), (0.0, Magnitude::Negligible));
        let (d, m) = cliffs_delta(&[1.0, 2.0, 3.0], &[0.0, 0.0, 0.0]);
        assert_eq!((d, m), (1.0, Magnitude::Large));
        let (d, m) = cliffs_delta(&[1.0, 2.0], &[1.0, 3.0]);
        assert_eq!((d, m), (-0.25, Magnitude::Small));
    }

    #[test]
    fn magnitude_bands() {
        assert_eq!(Magnitude::of(0.146), Magnitude::Negligible);
        assert_eq!(Magnitude::of(-0.147), Magnitude::Small);
        assert_eq!(Magnitude::of(0.33), Magnitude::Medium);
        assert_eq!(Magnitude::of(0.474), Magnitude::Large);
    }

    #[test]
    fn verdict_gates() {
        assert_eq!(color(0.30, 0.9), Color::Tie);
        assert_eq!(color(0.01, 0.10), Color::Tie);
        assert_eq!(color(0.01, 0.50), Color::Better);
        assert_eq!(Magnitude::of(0.50), Magnitude::Large);
        assert_eq!(color(0.01, -0.50), Color::Worse);
        assert_eq!(color(0.05, 0.9), Color::Tie);
    }

    #[test]
    fn family_comparison() {
        let base: Vec<f64> = (0..20).map(|i| 0.3 + 0.001 * i as f64).collect();
        let good: Vec<f64> = base.iter().map(|v| v + 0.2).collect();
        let bad: Vec<f64> = base.iter().map(|v| v - 0.2).collect();
        let same = base.clone();
        let family = [
            Paired {
                learner: "good",
                learner_scores: &good,
                baseline_scores: &base,
            },
            Paired {
                learner: "bad",
                learner_scores: &bad,
                baseline_scores: &base,
            },
            Paired {
                learner: "same",
                learner_scores: &same,
                baseline_scores: &base,
            },
        ];
        let v = compare_family("base", &family, TestOptions::default());
        assert_eq!(v[0].color, Color::Better);
        assert_eq!(v[1].color, Color::Worse);
        assert_eq!(v[2].color, Color::Tie);
        assert!(v.iter().all(|x| x.p_adjusted >= x.p_value));
    }

    /// Two-sided p by enumerating all 2^n sign assignments.
    pub(crate) fn enumeration_p(ranks: &[f64], w_plus: f64) -> f64 {
        let n = ranks.len();
        let (mut le, mut ge) = (0u64, 0u64);
        for mask in 0u64..(1 << n) {
            let w: f64 = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| ranks[i])
                .sum();
            if w <= w_plus + 1e-9 {
                le += 1;
            }
            if w >= w_plus - 1e-9 {
                ge += 1;
            }
        }
        (2.0 * le.min(ge) as f64 / (1u64 << n) as f64).min(1.0)
    }

    #[test]
    fn one_sided_exact() {
        let (a, b) = ([2.0, 3.0, 4.0], [1.0, 1.0, 1.0]);
        let greater = wilcoxon_test(&a, &b, ZeroMethod::Wilcoxon, Alternative::Greater);
        let less = wilcoxon_test(&a, &b, ZeroMethod::Wilcoxon, Alternative::Less);
        assert_eq!(greater.p_value, 0.125);
        assert_eq!(less.p_value, 1.0);
    }

    #[test]
    fn one_sided_matches_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.random_range(1..11);
            let a: Vec<f64> = (0..n).map(|_| rng.random_range(0..6) as f64).collect();
            let b: Vec<f64> = (0..n).map(|_| rng.random_range(0..6) as f64).collect();
            let diffs: Vec<f64> = a
                .iter()
                .zip(&b)
                .map(|(x, y)| x - y)
                .filter(|d| *d != 0.0)
                .collect();
            if diffs.is_empty() {
                continue;
            }
            let ranks = average_ranks(&diffs.iter().map(|d| d.abs()).collect::<Vec<_>>());
            let w: f64 = diffs
                .iter()
                .zip(&ranks)
                .filter(|(d, _)| **d > 0.0)
                .map(|(_, r)| r)
                .sum();
            let m = diffs.len();
            let ge = (0u64..1 << m)
                .filter(|mask| {
                    let s: f64 = (0..m)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| ranks[i])
                        .sum();
                    s >= w - 1e-9
                })
                .count() as f64;
            let p = wilcoxon_test(&a, &b, ZeroMethod::Wilcoxon, Alternative::Greater).p_value;
            assert!((p - ge / (1u64 << m) as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn one_sided_normal_tails() {
        let a: Vec<f64> = (0..40)
            .map(|i| i as f64 + if i % 3 == 0 { -0.2 } else { 0.5 })
            .collect();
        let b: Vec<f64> = (0..40).map(|i| i as f64).collect();
        let two = wilcoxon_test(&a, &b, ZeroMethod::Wilcoxon, Alternative::TwoSided).p_value;
        let greater = wilcoxon_test(&a, &b, ZeroMethod::Wilcoxon, Alternative::Greater).p_value;
        let less = wilcoxon_test(&a, &b, ZeroMethod::Wilcoxon, Alternative::Less).p_value;
        assert!(greater < less);
        assert!((two - 2.0 * greater).abs() < 1e-12);
    }

    #[test]
    fn directional_family_halves_clear_cases() {
        let a = [0.9, 0.8, 0.85, 0.95, 0.7, 0.75, 0.9, 0.88];
        let b = [0.1, 0.2, 0.15, 0.3, 0.25, 0.05, 0.2, 0.1];
        let pair = [Paired {
            learner: "a",
            learner_scores: &a,
            baseline_scores: &b,
        }];
        let two = compare_family("b", &pair, TestOptions::default());
        let one = compare_family(
            "b",
            &pair,
            TestOptions {
                sidedness: Sidedness::Directional,
                ..TestOptions::default()
            },
        );
        assert_eq!(one[0].p_value * 2.0, two[0].p_value);
        assert_eq!(one[0].color, Color::Better);
    }

    #[test]
    fn exact_matches_enumeration_n10() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(10);
        for _ in 0..20 {
            let a: Vec<f64> = (0..10)
                .map(|_| rng.random_range(0..8) as f64 / 8.0)
                .collect();
            let b: Vec<f64> = (0..10)
                .map(|_| rng.random_range(0..8) as f64 / 8.0)
                .collect();
            let r = wilcoxon_signed_rank(&a, &b);
            let diffs: Vec<f64> = a
                .iter()
                .zip(&b)
                .map(|(x, y)| x - y)
                .filter(|d| *d != 0.0)
                .collect();
            let ranks = average_ranks(&diffs.iter().map(|d| d.abs()).collect::<Vec<_>>());
            let w: f64 = diffs
                .iter()
                .zip(&ranks)
                .filter(|(d, _)| **d > 0.0)
                .map(|(_, r)| r)
                .sum();
            let expected = if diffs.is_empty() {
                1.0
            } else {
                enumeration_p(&ranks, w)
            };
            assert!((r.p_value - expected).abs() < 1e-12);
        }
    }

    fn brute_delta(a: &[f64], b: &[f64]) -> f64 {
        let mut s = 0i64;
        for x in a {
            for y in b {
                s += (x > y) as i64 - (x < y) as i64;
            }
        }
        s as f64 / (a.len() * b.len()) as f64
    }

    proptest! {
        #[test]
        fn delta_matches_brute_force(
            a in prop::collection::vec(0u8..10, 1..30),
            b in prop::collection::vec(0u8..10, 1..30),
        ) {
            let a: Vec<f64> = a.into_iter().map(f64::from).collect();
            let b: Vec<f64> = b.into_iter().map(f64::from).collect();
            let (d, m) = cliffs_delta(&a, &b);
            prop_assert_eq!(d, brute_delta(&a, &b));
            prop_assert!((-1.0..=1.0).contains(&d));
            prop_assert_eq!(m, Magnitude::of(d));
            prop_assert_eq!(cliffs_delta(&b, &a).0, -d);
            let ta: Vec<f64> = a.iter().map(|v| v.exp() * 2.0).collect();
            let tb: Vec<f64> = b.iter().map(|v| v.exp() * 2.0).collect();
            prop_assert_eq!(cliffs_delta(&ta, &tb).0, d);
        }

        #[test]
        fn two_sided_is_twice_the_smaller_tail(
            a in prop::collection::vec(0u8..8, 1..20),
            b in prop::collection::vec(0u8..8, 1..20),
        ) {
            let n = a.len().min(b.len());
            let a: Vec<f64> = a[..n].iter().map(|&v| f64::from(v)).collect();
            let b: Vec<f64> = b[..n].iter().map(|&v| f64::from(v)).collect();
            let p = |alt| wilcoxon_test(&a, &b, ZeroMethod::Wilcoxon, alt).p_value;
            let (two, greater, less) = (p(Alternative::TwoSided), p(Alternative::Greater), p(Alternative::Less));
            prop_assert!((two - (2.0 * greater.min(less)).min(1.0)).abs() < 1e-12);
            prop_assert!(greater + less >= 1.0 - 1e-12);
        }

        #[test]
        fn bh_is_permutation_equivariant(p in prop::collection::vec(0.0f64..=1.0, 1..20), rot in 0usize..20) {
            let adj = bh_adjust(&p);
            let k = rot % p.len();
            let mut q = p.clone();
            q.rotate_left(k);
            let mut expected = adj.clone();
            expected.rotate_left(k);
            prop_assert_eq!(bh_adjust(&q), expected);
            for (a, raw) in adj.iter().zip(&p) {
                // p * m / m can round one ulp below p
                prop_assert!(*a >= raw * (1.0 - 1e-15) && *a <= 1.0);
            }
        }

        #[test]
        fn verdict_antisymmetric(
            a in prop::collection::vec(0u8..20, 3..25),
            shift in -5i8..5,
        ) {
            let a: Vec<f64> = a.into_iter().map(|v| f64::from(v) / 20.0).collect();
            let b: Vec<f64> = a.iter().enumerate().map(|(i, v)| v + f64::from(shift) * 0.01 * (i % 3) as f64).collect();
            let ab = compare_family("b", &[Paired { learner: "a", learner_scores: &a, baseline_scores: &b }], TestOptions::default());
            let ba = compare_family("a", &[Paired { learner: "b", learner_scores: &b, baseline_scores: &a }], TestOptions::default());
            prop_assert_eq!(ab[0].p_value, ba[0].p_value);
            prop_assert_eq!(ab[0].delta, -ba[0].delta);
            prop_assert_eq!(ab[0].color, ba[0].color.flipped());
        }
    }
}
