use crate::data::METRIC_COUNT;

/// Per-feature z-score parameters fitted on training data.
#[derive(Debug, Clone, PartialEq)]
pub struct Standardizer {
    pub mean: [f64; METRIC_COUNT],
    /// Population standard deviation, with zero replaced by one.
    pub scale: [f64; METRIC_COUNT],
}

impl Standardizer {
    pub fn fit(rows: &[[f64; METRIC_COUNT]]) -> Self {
        let n = rows.len().max(1) as f64;
        let mut mean = [0.0; METRIC_COUNT];
        for r in rows {
            for (m, v) in mean.iter_mut().zip(r) {
                *m += v;
            }
        }
        mean.iter_mut().for_each(|m| *m /= n);
        let mut scale = [0.0; METRIC_COUNT];
        for r in rows {
            for j in 0..METRIC_COUNT {
                scale[j] += (r[j] - mean[j]).powi(2);
            }
        }
        for s in &mut scale {
            *s = (*s / n).sqrt();
            if *s <= 0.0 || !s.is_finite() {
                *s = 1.0;
            }
        }
        Standardizer { mean, scale }
    }

    pub fn identity() -> Self {
        Standardizer {
            mean: [0.0; METRIC_COUNT],
            scale: [1.0; METRIC_COUNT],
        }
    }

    pub fn apply(&self, x: &[f64; METRIC_COUNT]) -> [f64; METRIC_COUNT] {
        std::array::from_fn(|j| (x[j] - self.mean[j]) / self.scale[j])
    }
}

/// Stored (standardized) training points.
#[derive(Debug, Clone, PartialEq)]
pub struct Knn {
    pub k: usize,
    points: Vec<[f64; METRIC_COUNT]>,
    labels: Vec<bool>,
}

impl Knn {
    pub fn new(k: usize, points: Vec<[f64; METRIC_COUNT]>, labels: Vec<bool>) -> Self {
        assert!(k >= 1);
        assert_eq!(points.len(), labels.len());
        Knn { k, points, labels }
    }

    /// Defective fraction among the k nearest training points (Euclidean;
    /// equal distances resolved by training order).
    pub fn predict(&self, x: &[f64; METRIC_COUNT]) -> f64 {
        if self.points.is_empty() {
            return 0.0;
        }
        let mut dist: Vec<(f64, usize)> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let d: f64 = p.iter().zip(x).map(|(a, b)| (a - b) * (a - b)).sum();
                (d, i)
            })
            .collect();
        let k = self.k.min(dist.len());
        let cmp = |a: &(f64, usize), b: &(f64, usize)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
        if k < dist.len() {
            dist.select_nth_unstable_by(k - 1, cmp);
        }
        let hits = dist[..k].iter().filter(|(_, i)| self.labels[*i]).count();
        hits as f64 / k as f64
    }
}
