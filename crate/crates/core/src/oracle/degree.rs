use num_bigint::BigUint;
use num_traits::One;

use crate::partition::Partition;

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Degree of the irreducible character of `S_n` labelled by `lambda`,
/// by the hook length formula.
pub fn degree(lambda: &Partition) -> BigUint {
    let hooks = lambda.cells().fold(BigUint::one(), |acc, c| acc * lambda.hook_length(c) as u64);
    factorial(lambda.size()) / hooks
}

/// True if `lambda` labels an odd-degree character.
pub fn is_odd_partition(lambda: &Partition) -> bool {
    degree(lambda).bit(0)
}

/// Odd partitions of `n`, in the order of [`Partition::all`].
pub fn odd_partitions(n: usize) -> Vec<Partition> {
    Partition::all(n).into_iter().filter(is_odd_partition).collect()
}

/// Partitions of `n - 1` obtained by removing one corner cell.
pub fn branch_restrict(lambda: &Partition) -> Vec<Partition> {
    let parts = lambda.parts();
    (0..parts.len())
        .filter(|&i| i + 1 == parts.len() || parts[i] > parts[i + 1])
        .map(|i| {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            Partition::from_parts_unchecked(smaller)
        })
        .collect()
}
