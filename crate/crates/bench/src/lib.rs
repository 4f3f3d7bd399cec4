//! Benchmark-only crate; see `benches/constructions.rs`.
