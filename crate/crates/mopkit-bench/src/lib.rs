//! Benchmark-only crate; see the `calculus` bench target.
