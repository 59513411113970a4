use prefstruct_core::{Axis, Profile, VoterOrdering};

use super::certificate::Certificate;
use super::sc::{recognize_single_crossing, sc_certificate};
use super::sp::recognize_single_peaked;

/// An axis on which the reversed profile is single-peaked.
pub fn recognize_single_caved(p: &Profile) -> Result<Axis, Certificate> {
    recognize_single_peaked(&p.reversed())
}

/// Both witnesses when `p` is single-peaked and single-crossing; otherwise
/// a certificate against whichever property fails first.
pub fn recognize_spsc(p: &Profile) -> Result<(Axis, VoterOrdering), Certificate> {
    let axis = recognize_single_peaked(p)?;
    match recognize_single_crossing(p) {
        Some(order) => Ok((axis, order)),
        None => Err(sc_certificate(p).expect("profile is not single-crossing")),
    }
}
