//! Core data model for strict-order preference profiles.
//!
//! Alternatives and voters are dense, zero-based integer ids. A [`Profile`]
//! stores `n` complete rankings over `m` alternatives, most preferred first.
//! Everything here is immutable after construction.

mod axis;
mod error;
mod kendall;
mod majority;
mod profile;
mod rank;

pub use axis::{Axis, VoterOrdering};
pub use error::ProfileError;
pub use kendall::{count_inversions, kendall_tau, kendall_tau_with_positions};
pub use majority::{condorcet_winners, majority_relation, CondorcetWinners, MajorityRelation};
pub use profile::Profile;
pub use rank::RankIndex;

/// Checks that `seq` is a permutation of `0..len`.
pub fn is_permutation(seq: &[usize], len: usize) -> bool {
    if seq.len() != len {
        return false;
    }
    let mut seen = vec![false; len];
    for &x in seq {
        if x >= len || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}
