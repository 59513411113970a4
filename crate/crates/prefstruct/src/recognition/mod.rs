//! Domain membership tests with witnesses and forbidden-pattern certificates.

mod c1p;
mod certificate;
mod clones;
mod combined;
mod gs;
mod restriction;
mod sc;
mod sp;
mod tree;

pub use c1p::{c1p_check, recognize_sp_via_c1p, BinaryMatrix};
pub use certificate::{Certificate, CertificateKind};
pub use clones::{clone_sets, maximal_clone_sets};
pub use combined::{recognize_single_caved, recognize_spsc};
pub use gs::{recognize_group_separable, GsDecomposition};
pub use restriction::{value_restriction_report, RestrictionReport};
pub use sc::{is_single_crossing, is_single_crossing_given_order, recognize_single_crossing, sc_certificate};
pub use sp::{
    all_single_peaked_axes, common_prefixes, is_single_peaked, is_single_peaked_on, recognize_single_peaked,
    sp_certificate, AxisFamily, LocalValley,
};
pub use tree::{
    is_single_crossing_on_tree, is_single_peaked_on_tree, recognize_sc_on_tree, recognize_sp_on_tree, Tree,
    SC_TREE_DISTINCT_LIMIT,
};
