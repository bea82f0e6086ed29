//! Fixtures shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_ci::cisolver::{curve_blocks, random_chain, random_simplicial};
use toric_ci::{Configuration, SimplicialConfig};

/// The eight-vector configuration in `ℕ^3` with three proportional merges.
pub fn merge_example() -> SimplicialConfig {
    let c = Configuration::from_i64(
        3,
        &[
            vec![52, 0, 0],
            vec![0, 52, 0],
            vec![0, 0, 52],
            vec![20, 30, 100],
            vec![28, 42, 140],
            vec![30, 45, 150],
            vec![42, 63, 210],
            vec![52, 52, 78],
        ],
    )
    .expect("valid configuration");
    SimplicialConfig::new(c).expect("simplicial")
}

/// 27 vectors in `ℕ^8` with entries up to 4000: four curve blocks with chains
/// of length 5, 5, 5 and 4. Always a complete intersection.
pub fn scale_blocks(seed: u64) -> SimplicialConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chains: Vec<Vec<u64>> = [5, 5, 5, 4]
        .iter()
        .map(|&len| random_chain(&mut rng, len, 4000).expect("chain fits"))
        .collect();
    curve_blocks(&chains).expect("valid blocks")
}

/// Axis vectors plus 19 random vectors in `ℕ^8`, entries up to 4000.
pub fn scale_random(seed: u64) -> SimplicialConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_simplicial(&mut rng, 8, 19, 4000).expect("valid parameters")
}
