//! Shared fixtures for the benchmarks: deterministic schemes and matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fatpoints_core::configs::{gen_nine_case, gen_on_cubic, OnCubicKind, TorsionTarget};
use fatpoints_core::{ExactMatrix, FatPointScheme, Field};

pub const Q: u64 = 2_147_483_647;

/// A random dense matrix over the default prime field.
pub fn random_matrix(rows: usize, cols: usize, seed: u64) -> ExactMatrix {
    let field = Field::Prime(Q);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..rows * cols)
        .map(|_| field.from_u64(rng.gen_range(0..Q)))
        .collect();
    ExactMatrix::new(rows, cols, field, entries).expect("valid shape")
}

/// Nine general double points (the generic classification case).
pub fn nine_general_double(seed: u64) -> FatPointScheme {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gen_nine_case(8, "generic", Field::Prime(Q), &mut rng)
        .expect("generation succeeds")
        .expected_scheme()
}

/// Evenly distributed double points on a smooth cubic.
pub fn smooth_cubic_double(n: usize, seed: u64) -> FatPointScheme {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gen_on_cubic(
        OnCubicKind::Smooth,
        n,
        2,
        TorsionTarget::Generic,
        false,
        Field::Prime(Q),
        &mut rng,
    )
    .expect("generation succeeds")
    .scheme
}
