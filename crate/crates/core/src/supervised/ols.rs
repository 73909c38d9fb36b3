//! Least squares with an unpenalized intercept.
//!
//! Columns are centred, so the intercept is recovered from the means and
//! constant columns get a zero slope. The centred system is solved by a thin
//! QR factorization followed by an SVD of R; singular values below the rank
//! tolerance are dropped, giving the least-norm solution when the design is
//! rank deficient.

use nalgebra::{DMatrix, DVector};

#[derive(Debug, Clone, PartialEq)]
pub struct LeastSquares {
    pub slopes: Vec<f64>,
    pub intercept: f64,
    /// Effective rank of the centred design.
    pub rank: usize,
    pub rank_deficient: bool,
}

const RANK_TOL: f64 = 1e-10;

/// Fits `y ≈ X·slopes + intercept`. `rows` must be nonempty and rectangular.
pub fn least_squares<R: AsRef<[f64]>>(rows: &[R], y: &[f64]) -> LeastSquares {
    assert!(!rows.is_empty(), "least squares needs at least one row");
    assert_eq!(rows.len(), y.len());
    let n = rows.len();
    let p = rows[0].as_ref().len();

    let mut means = vec![0.0; p];
    for r in rows {
        for (m, v) in means.iter_mut().zip(r.as_ref()) {
            *m += v;
        }
    }
    means.iter_mut().for_each(|m| *m /= n as f64);
    let y_mean = y.iter().sum::<f64>() / n as f64;

    let mut x = DMatrix::<f64>::from_fn(n, p, |i, j| rows[i].as_ref()[j] - means[j]);
    // scale columns to unit max-abs so the rank tolerance is scale free
    let scales: Vec<f64> = (0..p)
        .map(|j| {
            let s = x.column(j).amax();
            if s > 0.0 {
                s
            } else {
                1.0
            }
        })
        .collect();
    for (j, s) in scales.iter().enumerate() {
        x.column_mut(j).scale_mut(1.0 / s);
    }
    let yc = DVector::<f64>::from_iterator(n, y.iter().map(|v| v - y_mean));

    let (slopes_scaled, rank) = if p == 0 {
        (DVector::zeros(0), 0)
    } else {
        let qr = x.qr();
        let qty = qr.q().transpose() * &yc;
        let r = qr.r();
        let svd = r.svd(true, true);
        let smax = svd.singular_values.max();
        let tol = RANK_TOL * smax.max(f64::MIN_POSITIVE) * (n.max(p) as f64);
        let rank = svd.singular_values.iter().filter(|&&s| s > tol).count();
        let sol = if rank == 0 {
            DVector::zeros(p)
        } else {
            svd.solve(&qty, tol).expect("U and V were computed")
        };
        (sol, rank)
    };

    let slopes: Vec<f64> = slopes_scaled
        .iter()
        .zip(&scales)
        .map(|(b, s)| b / s)
        .collect();
    let intercept = y_mean - slopes.iter().zip(&means).map(|(b, m)| b * m).sum::<f64>();
    LeastSquares {
        slopes,
        intercept,
        rank,
        rank_deficient: rank < p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn exact_linear_target() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let rows: Vec<[f64; 2]> = (0..50)
            .map(|_| [rng.random_range(0.0..10.0), rng.random_range(0.0..10.0)])
            .collect();
        let y: Vec<f64> = rows.iter().map(|r| 2.0 * r[0] + 1.0).collect();
        let fit = least_squares(&rows, &y);
        assert!((fit.slopes[0] - 2.0).abs() < 1e-9);
        assert!(fit.slopes[1].abs() < 1e-9);
        assert!((fit.intercept - 1.0).abs() < 1e-9);
        assert!(!fit.rank_deficient);
    }

    #[test]
    fn constant_target() {
        let rows: Vec<[f64; 3]> = (0..10).map(|i| [i as f64, (i * i) as f64, 1.0]).collect();
        let fit = least_squares(&rows, &[4.5; 10]);
        assert!((fit.intercept - 4.5).abs() < 1e-12);
        assert!(fit.slopes.iter().all(|b| b.abs() < 1e-12));
        // the constant third column is dropped from the rank
        assert!(fit.rank_deficient);
    }

    #[test]
    fn duplicated_column_splits_evenly() {
        let rows: Vec<[f64; 2]> = (0..8).map(|i| [i as f64, i as f64]).collect();
        let y: Vec<f64> = (0..8).map(|i| 3.0 * i as f64).collect();
        let fit = least_squares(&rows, &y);
        assert!(fit.rank_deficient);
        assert_eq!(fit.rank, 1);
        assert!((fit.slopes[0] - 1.5).abs() < 1e-9);
        assert!((fit.slopes[1] - 1.5).abs() < 1e-9);
    }

    #[test]
    fn underdetermined_is_finite() {
        let rows = vec![[1.0, 2.0, 3.0], [2.0, 1.0, 0.0]];
        let fit = least_squares(&rows, &[1.0, 0.0]);
        assert!(fit.slopes.iter().all(|b| b.is_finite()));
        let pred: Vec<f64> = rows
            .iter()
            .map(|r| fit.intercept + r.iter().zip(&fit.slopes).map(|(a, b)| a * b).sum::<f64>())
            .collect();
        assert!((pred[0] - 1.0).abs() < 1e-9 && pred[1].abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn residual_orthogonal_to_design(seed in any::<u64>(), n in 20usize..80) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let rows: Vec<[f64; 4]> = (0..n)
                .map(|_| std::array::from_fn(|_| rng.random_range(-5.0..5.0)))
                .collect();
            let y: Vec<f64> = (0..n).map(|_| rng.random_range(-3.0..3.0)).collect();
            let fit = least_squares(&rows, &y);
            let resid: Vec<f64> = rows
                .iter()
                .zip(&y)
                .map(|(r, t)| t - fit.intercept - r.iter().zip(&fit.slopes).map(|(a, b)| a * b).sum::<f64>())
                .collect();
            let scale = rows.iter().flatten().map(|v| v.abs()).fold(1.0, f64::max)
                * y.iter().map(|v| v.abs()).fold(1.0, f64::max) * n as f64;
            // columns of the design including the intercept
            let mut worst = resid.iter().sum::<f64>().abs();
            for j in 0..4 {
                let dot: f64 = rows.iter().zip(&resid).map(|(r, e)| r[j] * e).sum();
                worst = worst.max(dot.abs());
            }
            prop_assert!(worst < 1e-6 * scale, "{worst}");
        }
    }
}
