//! Inputs and naive reference kernels for the criterion benches.

use covrough::BoolMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_matrix(rows: usize, cols: usize, density: f64, seed: u64) -> BoolMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    BoolMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(density))
}

/// Entry-by-entry `•` product.
pub fn naive_bool_product(a: &BoolMatrix, b: &BoolMatrix) -> BoolMatrix {
    BoolMatrix::from_fn(a.rows(), b.cols(), |i, j| {
        (0..a.cols()).any(|k| a.get(i, k) && b.get(k, j))
    })
}

/// Entry-by-entry `⊙` product.
pub fn naive_impl_product(a: &BoolMatrix, b: &BoolMatrix) -> BoolMatrix {
    BoolMatrix::from_fn(a.rows(), b.cols(), |i, j| {
        (0..a.cols()).all(|k| !a.get(i, k) || b.get(k, j))
    })
}
