//! How far a profile is from a structured domain: deletions, swaps,
//! crossing graphs and structured width.

mod alternatives;
mod crossing;
mod swap;
mod voters;
mod width;

pub use alternatives::{sp_alt_deletion, sp_alt_deletion_fixed_axis, SP_ALT_DELETION_LIMIT};
pub use crossing::{crossing_graph, sc_alt_deletion_exact, sc_alt_partition, CrossingGraph};
pub use swap::swap_distance_to_axis;
pub use voters::{
    sc_voter_deletion, sc_voter_deletion_given_order, sp_voter_deletion, SearchMode, SP_EXACT_VOTER_LIMIT,
};
pub use width::{contract_blocks, structured_width, Width, WidthDomain, WIDTH_ALTERNATIVE_LIMIT};

use prefstruct_core::Profile;

use crate::winners::Witness;

/// What a deletion removes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Removed {
    Voters,
    Alternatives,
}

/// The outcome of a deletion: removed ids (ascending) and a witness for the
/// surviving profile, written in the survivor's own ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionResult {
    pub removed: Removed,
    pub deleted: Vec<usize>,
    pub witness: Witness,
}

impl DeletionResult {
    /// Ids that survive, ascending.
    pub fn kept(&self, p: &Profile) -> Vec<usize> {
        let total = match self.removed {
            Removed::Voters => p.n(),
            Removed::Alternatives => p.m(),
        };
        let mut gone = vec![false; total];
        self.deleted.iter().for_each(|&x| gone[x] = true);
        (0..total).filter(|&x| !gone[x]).collect()
    }

    /// The profile left after the deletion.
    pub fn survivor(&self, p: &Profile) -> Profile {
        let kept = self.kept(p);
        match self.removed {
            Removed::Voters => p.restrict_voters(&kept).expect("at least one voter survives"),
            Removed::Alternatives => p.restrict_alternatives(&kept).expect("at least one alternative survives").0,
        }
    }

    /// Re-checks the witness against the surviving profile.
    pub fn is_sound(&self, p: &Profile) -> bool {
        let q = self.survivor(p);
        match &self.witness {
            Witness::Axis(axis) => {
                axis.len() == q.m() && crate::recognition::is_single_peaked_on(&q, axis).is_ok()
            }
            Witness::Order(order) => {
                order.len() == q.n()
                    && crate::recognition::is_single_crossing_given_order(&q.permuted(order).expect("same size")).is_ok()
            }
        }
    }
}
