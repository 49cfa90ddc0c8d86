//! Benchmarks for the search and canonical labeling live in `benches/`.
