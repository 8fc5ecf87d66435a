//! Brute-force finite group engine over permutation groups.
//!
//! This is the ground truth that the formula-based `zm` module is checked
//! against: every quantity here comes from explicit element lists.

mod bitset;
pub mod builders;
mod group;
mod permutation;

use thiserror::Error;

pub use bitset::BitSet;
pub use builders::{
    alternating_group, cyclic_group, dicyclic_group, dihedral_group, metacyclic_group,
    symmetric_group,
};
pub use group::{
    direct_product, generate_group, FiniteGroup, Subgroup, DEFAULT_ORDER_CAP,
    DEFAULT_SUBGROUP_CAP,
};
pub use permutation::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("order cap exceeded: group has more than {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("subgroup cap exceeded: more than {cap} subgroups")]
    SubgroupCapExceeded { cap: usize },
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("element index {index} out of range for group of order {order}")]
    InvalidIndex { index: usize, order: usize },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("invalid group parameters: {0}")]
    InvalidParameters(String),
}

impl GroupError {
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            GroupError::OrderCapExceeded { .. } | GroupError::SubgroupCapExceeded { .. }
        )
    }
}
