use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exec::Execution;

use super::tree::{SplitCriterion, Tree, TreeConfig};

/// Bagged trees with random feature subsets at each split.
#[derive(Debug, Clone, PartialEq)]
pub struct Forest {
    trees: Vec<Tree>,
}

/// Per-tree seed: splitmix64 of the base seed offset by the tree index.
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed.wrapping_add(stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl Forest {
    pub fn fit<R: AsRef<[f64]> + Sync>(
        rows: &[R],
        labels: &[bool],
        n_trees: usize,
        min_leaf: usize,
        seed: u64,
        exec: Execution,
    ) -> Forest {
        assert!(n_trees >= 1, "a forest needs at least one tree");
        let n = rows.len();
        let p = rows.first().map_or(0, |r| r.as_ref().len());
        let mtry = ((p as f64).sqrt().floor() as usize).max(1);
        let config = TreeConfig {
            min_leaf,
            max_depth: 64,
            criterion: SplitCriterion::InfoGain,
            features_per_split: Some(mtry),
        };
        let ids: Vec<u64> = (0..n_trees as u64).collect();
        let trees = exec.map(&ids, |&t| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, t));
            let bootstrap: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
            Tree::fit(rows, labels, &bootstrap, config, Some(&mut rng))
        });
        Forest { trees }
    }

    /// Mean leaf defect rate across trees.
    pub fn predict(&self, x: &[f64]) -> f64 {
        self.trees.iter().map(|t| t.predict(x)).sum::<f64>() / self.trees.len() as f64
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}
