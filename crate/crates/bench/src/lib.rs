//! Shared inputs for the pipeline benchmarks.

use unicyclic_core::fixtures::{fixture, Base, Coefficient, Fixture};
use unicyclic_core::hopf::Kind;
use unicyclic_core::FieldSpec;

/// The benchmarked data with the truncation each one is run at.
pub fn cases() -> Vec<(Fixture, usize)> {
    let q = FieldSpec::Rationals;
    let mk = |kind, base, top| {
        (
            fixture(kind, base, Coefficient::Trivial, q).expect("bundled fixture"),
            top,
        )
    };
    vec![
        mk(Kind::MA, Base::Ground, 6),
        mk(Kind::MC, Base::Cyclic(2), 4),
        mk(Kind::CA, Base::Cyclic(3), 3),
        mk(Kind::CC, Base::Sweedler, 2),
    ]
}

/// A short label for benchmark ids.
pub fn label(f: &Fixture, top: usize) -> String {
    format!("{} N={top}", f.name)
}
