//! Benchmark-only crate; see `benches/reduction.rs`.
