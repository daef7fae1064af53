//! Criterion benchmarks for the cohomology engine; see `benches/`.
