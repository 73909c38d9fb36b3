use std::fmt;
use std::str::FromStr;

use crate::data::{ChangeRecord, MetricId, METRIC_COUNT};

/// Feature preprocessing applied before the EALR regression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Recipe {
    /// LA and LD divided by LT, LT and NUC divided by NF, then ln(1 + x)
    /// on every metric except the binary FIX flag.
    #[default]
    Kamei,
    /// Metrics as loaded.
    Raw,
}

impl Recipe {
    pub fn name(self) -> &'static str {
        match self {
            Recipe::Kamei => "kamei",
            Recipe::Raw => "raw",
        }
    }

    pub fn apply(self, record: &ChangeRecord) -> [f64; METRIC_COUNT] {
        let mut x = record.metrics;
        if self == Recipe::Raw {
            return x;
        }
        // a zero denominator leaves the numerator unscaled
        let per = |num: f64, den: f64| num / den.max(1.0);
        let lt = record.metric(MetricId::Lt);
        let nf = record.metric(MetricId::Nf);
        x[MetricId::La.index()] = per(record.metric(MetricId::La), lt);
        x[MetricId::Ld.index()] = per(record.metric(MetricId::Ld), lt);
        x[MetricId::Lt.index()] = per(lt, nf);
        x[MetricId::Nuc.index()] = per(record.metric(MetricId::Nuc), nf);
        for m in MetricId::ALL {
            if m != MetricId::Fix {
                x[m.index()] = x[m.index()].ln_1p();
            }
        }
        x
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Recipe {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "kamei" => Ok(Recipe::Kamei),
            "raw" => Ok(Recipe::Raw),
            other => Err(format!("unknown preprocessing recipe `{other}`")),
        }
    }
}

/// Row-major feature vectors for a slice of records.
pub fn feature_matrix(records: &[ChangeRecord], recipe: Recipe) -> Vec<[f64; METRIC_COUNT]> {
    records.iter().map(|r| recipe.apply(r)).collect()
}
