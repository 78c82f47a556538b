//! Criterion benchmarks for the construction, switching and clique pipeline. See `benches/`.
