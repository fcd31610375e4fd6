//! Fixtures shared by the criterion benchmarks.

use semigraphs::{FamilySpec, Semigroup};

/// Representative semigroups of increasing size, by construct name.
pub fn bench_semigroups() -> Vec<(&'static str, Semigroup)> {
    ["M(6,12)", "C(60)", "B(3)", "Zmult(30)", "C(6)xC(6)"]
        .into_iter()
        .map(|name| {
            let spec: FamilySpec = name.parse().expect("valid construct");
            (name, spec.build().expect("buildable construct"))
        })
        .collect()
}
