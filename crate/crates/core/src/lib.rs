//! Subgroup-sum functions on finite groups and the metacyclic ZM-groups.
//!
//! For a finite group `G`, `φ(G)` counts the elements whose order equals the
//! exponent of `G`, and `S(G)` sums `φ(H)` over every subgroup `H`. The crate
//! computes both by brute force over permutation groups ([`group_engine`]),
//! computes `S` for `ZM(m, n, r)` from its subgroup-lattice parametrization
//! ([`zm`]), and cross-checks `S(G) >= |G|` (with equality exactly for groups
//! whose Sylow subgroups are all cyclic) over a corpus of small groups
//! ([`verifier`]).

pub mod cli;
pub mod group_engine;
pub mod numtheory;
pub mod verifier;
pub mod zm;
