//! Brute-force oracles for characters of symmetric groups and their
//! restrictions. Nothing here depends on the correspondence modules.

pub mod degree;
pub mod exterior;
pub mod lr;
pub mod murnaghan;
pub mod perm_group;

pub use degree::{branch_restrict, degree, factorial, is_odd_partition, odd_partitions};
pub use lr::lr_coefficient;
pub use murnaghan::{mn_value, CycleType, MnOracle};
pub use perm_group::{restriction_multiplicities, sylow2_subgroup, LinearCharacter, Permutation, PermutationGroup};
