//! Fixtures shared by the benchmarks.

use hurewicz_core::{Int, IntMatrix};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A reproducible `rows × cols` matrix with entries in `[-bound, bound]`.
pub fn random_matrix(rows: usize, cols: usize, bound: i64, seed: u64) -> IntMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    IntMatrix::from_fn(rows, cols, |_, _| Int::from(rng.gen_range(-bound..=bound)))
}
