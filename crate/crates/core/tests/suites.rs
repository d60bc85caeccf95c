use std::time::Instant;

use confluence_core::checks::{run_suite, Suite, SuiteConfig};

fn run(suite: Suite, cfg: SuiteConfig) {
    let start = Instant::now();
    let outcomes = run_suite(suite, &cfg);
    for o in &outcomes {
        println!("{o}");
    }
    println!("{suite:?}: {:.2?}", start.elapsed());
    assert!(outcomes.iter().all(|o| o.passed()));
}

#[test]
fn algebra_suite() {
    run(Suite::Algebra, SuiteConfig::default());
}

#[test]
fn regularization_suite() {
    run(
        Suite::Regularization,
        SuiteConfig {
            max_weight: 6,
            ..SuiteConfig::default()
        },
    );
}

#[test]
fn phi_suite() {
    run(Suite::Phi, SuiteConfig::default());
}

#[test]
fn numeric_suite() {
    run(
        Suite::Numeric,
        SuiteConfig {
            max_weight: 5,
            samples: 50,
            seed: SuiteConfig::DEFAULT_SEED,
        },
    );
}
