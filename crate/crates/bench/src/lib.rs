//! Criterion benchmarks for `conifold-core`; see `benches/`.
