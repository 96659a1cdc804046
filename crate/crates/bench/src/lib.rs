//! Shared inputs for the benchmarks.

use oddchar_core::oracle::odd_partitions;
use oddchar_core::{odd_labels, GLabel, Kappa, Partition};

pub fn odd_inputs(n: usize) -> Vec<Partition> {
    odd_partitions(n)
}

pub fn gl_inputs(n: usize, q: u64) -> Vec<GLabel> {
    odd_labels(n, q, Kappa::Plus).expect("q is an odd prime power")
}
