use proptest::test_runner::{Config, RngSeed};

/// Fixed seed and no regression files, so every run sees the same cases.
pub fn seeded(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..Config::default()
    }
}
