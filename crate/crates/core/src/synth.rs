//! Seeded synthetic change-metric corpora.
//!
//! Metric marginals loosely follow what commit-level corpora look like
//! (heavy-tailed churn and experience, small file counts) and the defect
//! label is drawn from a logistic model in churn, diffusion, fix flag and
//! developer experience. Used for tests, benches and demos when the real
//! corpora are not at hand.

use chrono::{Days, NaiveDate};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp, LogNormal, Poisson, StandardNormal};

use crate::data::{ChangeRecord, Dataset, MetricId, METRIC_COUNT};
use crate::supervised::derive_seed;

#[derive(Debug, Clone, PartialEq)]
pub struct SynthConfig {
    pub projects: usize,
    pub months: usize,
    pub changes_per_month: usize,
    pub seed: u64,
    pub start_year: i32,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            projects: 5,
            months: 24,
            changes_per_month: 200,
            seed: 20_240_601,
            start_year: 2001,
        }
    }
}

fn draw_record(rng: &mut ChaCha8Rng, date: NaiveDate, offset: f64) -> ChangeRecord {
    let poisson = |rng: &mut ChaCha8Rng, lambda: f64| Poisson::new(lambda).unwrap().sample(rng);
    let lognormal = |rng: &mut ChaCha8Rng, mu: f64, sigma: f64| {
        LogNormal::new(mu, sigma).unwrap().sample(rng).round()
    };

    // shared size factor: big changes touch more files, lines and older code
    let size: f64 = StandardNormal.sample(rng);
    let nf = 1.0 + poisson(rng, 1.5 * (0.6 * size).exp());
    let nd = nf.min(1.0 + poisson(rng, 0.6));
    let ns = nd.min(1.0 + poisson(rng, 0.2));
    let entropy = if nf > 1.0 {
        rng.random_range(0.0..nf.log2())
    } else {
        0.0
    };
    let la = if rng.random_bool(0.03) {
        0.0
    } else {
        lognormal(rng, 2.5 + 1.0 * size, 0.8)
    };
    let ld = if rng.random_bool(0.25) {
        0.0
    } else {
        lognormal(rng, 1.5 + 0.9 * size, 0.9)
    };
    let lt = if rng.random_bool(0.08) {
        0.0
    } else {
        lognormal(rng, 5.5 + 0.5 * size, 1.0)
    };
    let fix = if rng.random_bool(0.3) { 1.0 } else { 0.0 };
    let ndev = 1.0 + poisson(rng, 3.0);
    let age = (Exp::<f64>::new(1.0 / 60.0).unwrap().sample(rng) * 10.0).round() / 10.0;
    let nuc = 1.0 + poisson(rng, 4.0);
    let exp = lognormal(rng, 5.0, 1.5);
    let rexp = (exp * rng.random_range(0.05..0.5)).round();
    let sexp = (exp * rng.random_range(0.2..1.0)).round();

    let logit = -2.4 + offset + 0.35 * (1.0 + la + ld).ln() + 0.4 * nf.ln() + 0.5 * fix
        - 0.15 * (1.0 + exp).ln()
        + 0.2 * (1.0 + ndev).ln()
        - 0.1 * (1.0 + age).ln()
        + 0.05 * (1.0 + lt).ln();
    let p = 1.0 / (1.0 + (-logit).exp());

    let mut metrics = [0.0; METRIC_COUNT];
    for (m, v) in [
        (MetricId::Ns, ns),
        (MetricId::Nd, nd),
        (MetricId::Nf, nf),
        (MetricId::Entropy, entropy),
        (MetricId::La, la),
        (MetricId::Ld, ld),
        (MetricId::Lt, lt),
        (MetricId::Fix, fix),
        (MetricId::Ndev, ndev),
        (MetricId::Age, age),
        (MetricId::Nuc, nuc),
        (MetricId::Exp, exp),
        (MetricId::Rexp, rexp),
        (MetricId::Sexp, sexp),
    ] {
        metrics[m.index()] = v;
    }
    ChangeRecord {
        date,
        metrics,
        defective: rng.random_bool(p),
    }
}

pub fn synthetic_project(
    name: &str,
    months: usize,
    per_month: usize,
    seed: u64,
    start_year: i32,
) -> Dataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let offset = rng.random_range(-0.5..0.5);
    let mut records = Vec::with_capacity(months * per_month);
    for m in 0..months {
        let year = start_year + (m / 12) as i32;
        let month = (m % 12) as u32 + 1;
        let first = NaiveDate::from_ymd_opt(year, month, 1).expect("valid month");
        for _ in 0..per_month {
            let day = rng.random_range(0..28u64);
            let date = first.checked_add_days(Days::new(day)).expect("in range");
            records.push(draw_record(&mut rng, date, offset));
        }
    }
    Dataset::new(name, records).expect("nonempty synthetic project")
}

pub fn synthetic_corpus(cfg: &SynthConfig) -> Vec<Dataset> {
    (0..cfg.projects)
        .map(|i| {
            synthetic_project(
                &format!("synthetic{}", i + 1),
                cfg.months,
                cfg.changes_per_month,
                derive_seed(cfg.seed, i as u64),
                cfg.start_year,
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::group_by_month;

    #[test]
    fn shape_and_validity() {
        let ds = synthetic_project("p", 6, 50, 3, 2001);
        assert_eq!(ds.len(), 300);
        assert_eq!(group_by_month(&ds).len(), 6);
        assert!(ds.records.iter().all(|r| r.validate().is_ok()));
        let ratio = ds.defect_ratio();
        assert!(ratio > 0.05 && ratio < 0.7, "{ratio}");
    }

    #[test]
    fn seeded() {
        let a = synthetic_corpus(&SynthConfig {
            projects: 2,
            months: 3,
            changes_per_month: 10,
            ..SynthConfig::default()
        });
        let b = synthetic_corpus(&SynthConfig {
            projects: 2,
            months: 3,
            changes_per_month: 10,
            ..SynthConfig::default()
        });
        assert_eq!(a, b);
        assert_ne!(a[0].records, a[1].records);
    }
}
