//! Criterion benchmarks for the hot kernels of `sumprod-core`; see `benches/`.
