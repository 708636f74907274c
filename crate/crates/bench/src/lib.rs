//! Criterion benchmarks for the symbolic kernel; see `benches/kernel.rs`.
