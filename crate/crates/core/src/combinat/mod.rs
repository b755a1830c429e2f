//! Partitions, multipartitions, tableaux and permutations.

mod partition;
mod perm;
mod tableau;

pub use partition::{HookData, MultiPartition, Partition};
pub use perm::Permutation;
pub use tableau::{young_subgroup, young_subgroup_generators, Cell, Flavor, Tableau};
