//! Brute-force reference implementations.
//!
//! Every function here follows a definition literally and enumerates the whole
//! search space (axes, orderings, trees, subsets). They are meant as ground
//! truth for tests and refuse inputs above explicit size caps.

mod deletion;
mod domains;
mod enumerate;
mod euclid;
mod rules;

pub use deletion::{
    brute_alt_partition_sc_in_order, brute_c1p, brute_clone_sets, brute_crossing_edges, brute_deletion,
    brute_swap_distance, brute_width, Deletion, Domain,
};
pub use domains::{
    brute_gs, brute_restrictions, brute_sc, brute_sc_on_tree, brute_sp, brute_sp_on_tree, contract, is_gs,
    is_sc_in_order, is_sc_on_tree, is_sp, is_sp_on_tree, vote_sp_on, Restrictions,
};
pub use enumerate::{permutations, prufer_trees, set_partitions};
pub use euclid::brute_one_euclidean;
pub use rules::{brute_cc, brute_kemeny, brute_strong_young, cc_score, CcMode};

use thiserror::Error;

/// An input exceeded the enumeration cap of an oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what} is {got}, above the oracle cap of {cap}")]
pub struct TooLarge {
    pub what: &'static str,
    pub got: usize,
    pub cap: usize,
}

pub type Result<T> = std::result::Result<T, TooLarge>;

pub(crate) fn cap(what: &'static str, got: usize, cap: usize) -> Result<()> {
    if got > cap {
        Err(TooLarge { what, got, cap })
    } else {
        Ok(())
    }
}
