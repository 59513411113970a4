//! Election outcomes that become easy on structured profiles.

mod cc;
mod kemeny;

pub use cc::{
    cc_egalitarian_sp, cc_sc, cc_score, cc_utilitarian_sp, CcMode, Committee, RankBoundCommittee, ScoringVector,
};
pub use kemeny::{kemeny_structured, kemeny_structured_with_limit, KemenyRankings, KEMENY_DEFAULT_LIMIT};

use prefstruct_core::{majority_relation, Axis, Profile, VoterOrdering};

use crate::error::{Error, Result};
use crate::recognition::{is_single_crossing_given_order, is_single_peaked_on};

/// An ordering that certifies a profile's structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The profile is single-peaked on this axis.
    Axis(Axis),
    /// The profile is single-crossing in this voter order.
    Order(VoterOrdering),
}

pub(crate) fn require_sp(p: &Profile, axis: &Axis) -> Result<()> {
    if axis.len() != p.m() {
        return Err(Error::Precondition(format!("axis has {} alternatives, profile has {}", axis.len(), p.m())));
    }
    is_single_peaked_on(p, axis).map_err(|v| {
        Error::Precondition(format!("voter {} has a valley on {:?}", v.voter, v.alternatives))
    })
}

pub(crate) fn require_sc(p: &Profile, order: &VoterOrdering) -> Result<Profile> {
    if order.len() != p.n() {
        return Err(Error::Precondition(format!("ordering has {} voters, profile has {}", order.len(), p.n())));
    }
    let arranged = p.permuted(order)?;
    is_single_crossing_given_order(&arranged)
        .map_err(|i| Error::Precondition(format!("not single-crossing at ordered position {i}")))?;
    Ok(arranged)
}

fn require_witness(p: &Profile, witness: &Witness) -> Result<()> {
    match witness {
        Witness::Axis(axis) => require_sp(p, axis),
        Witness::Order(order) => require_sc(p, order).map(|_| ()),
    }
}

/// The weak Condorcet winners of a single-peaked profile: the stretch of
/// the axis between the two median peaks, listed in axis order.
pub fn median_voter_winners(p: &Profile, axis: &Axis) -> Result<Vec<usize>> {
    require_sp(p, axis)?;
    let n = p.n();
    let mut peaks: Vec<usize> = (0..n).map(|i| axis.position(p.top(i))).collect();
    peaks.sort_unstable();
    let lo = peaks[n.div_ceil(2) - 1];
    let hi = peaks[(n + 2) / 2 - 1];
    Ok(axis.order()[lo..=hi].to_vec())
}

/// Median, along `axis`, of the reported peaks together with `n - 1` fixed
/// phantom peaks.
pub fn generalized_median(peaks: &[usize], phantoms: &[usize], axis: &Axis) -> Result<usize> {
    if peaks.is_empty() || phantoms.len() + 1 != peaks.len() {
        return Err(Error::Invalid(format!("{} peaks need {} phantoms, got {}", peaks.len(), peaks.len().saturating_sub(1), phantoms.len())));
    }
    if let Some(&bad) = peaks.iter().chain(phantoms).find(|&&a| a >= axis.len()) {
        return Err(Error::Invalid(format!("alternative {bad} is not on the axis")));
    }
    let mut all: Vec<usize> = peaks.iter().chain(phantoms).map(|&a| axis.position(a)).collect();
    all.sort_unstable();
    Ok(axis.order()[all[peaks.len() - 1]])
}

/// Winners under the strong Young rule and their common score.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungWinners {
    /// Ascending ids.
    pub winners: Vec<usize>,
    /// Voters deleted: 0 or 1 on structured profiles.
    pub score: usize,
}

/// Strong Young winners of a single-peaked or single-crossing profile.
///
/// A strong Condorcet winner scores 0. Otherwise deleting one voter always
/// suffices on these domains, so the winners are exactly the strong
/// Condorcet winners of the `n` one-voter-smaller profiles.
pub fn strong_young_winners_structured(p: &Profile, witness: &Witness) -> Result<YoungWinners> {
    require_witness(p, witness)?;
    let majority = majority_relation(p);
    if let Some(w) = majority.condorcet_winners().strong {
        return Ok(YoungWinners { winners: vec![w], score: 0 });
    }
    let (n, m) = (p.n(), p.m());
    let rank = p.rank_index();
    let mut winners = vec![false; m];
    for i in 0..n {
        // margins after removing voter i: 2 * wins > n - 1
        for (a, won) in winners.iter_mut().enumerate() {
            *won = *won
                || (0..m).all(|b| b == a || 2 * (majority.wins(a, b) - rank.prefers(i, a, b) as usize) > n - 1);
        }
    }
    let winners: Vec<usize> = (0..m).filter(|&a| winners[a]).collect();
    if winners.is_empty() {
        return Err(Error::Precondition("no alternative wins after deleting one voter".into()));
    }
    Ok(YoungWinners { winners, score: 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use prefstruct_core::condorcet_winners;
    use prefstruct_oracle::{brute_strong_young, permutations, vote_sp_on};

    fn profile(rows: &[&str]) -> Profile {
        Profile::from_letter_rows(rows).unwrap()
    }

    /// Six voters with peaks a, a, b, d, d, e on a..e.
    fn six_peaks() -> Profile {
        profile(&["abcde", "abcde", "bcade", "dceba", "dcbea", "edcba"])
    }

    #[test]
    fn median_interval_of_six_peaks() {
        let p = six_peaks();
        let axis = Axis::identity(5);
        assert_eq!(median_voter_winners(&p, &axis).unwrap(), vec![1, 2, 3]);
        assert_eq!(condorcet_winners(&p).weak, vec![1, 2, 3]);
    }

    #[test]
    fn median_single_voter_and_odd() {
        let p = profile(&["cbad"]);
        assert_eq!(median_voter_winners(&p, &Axis::identity(4)).unwrap(), vec![2]);
        let p = profile(&["abcd", "bcda", "cbad"]);
        assert_eq!(median_voter_winners(&p, &Axis::identity(4)).unwrap(), vec![1]);
        assert!(median_voter_winners(&profile(&["acbd"]), &Axis::identity(4)).is_err());
    }

    #[test]
    fn generalized_median_cases() {
        let axis = Axis::identity(5);
        let peaks = [0, 0, 1, 3, 3, 4];
        assert_eq!(generalized_median(&peaks, &[0; 5], &axis).unwrap(), 0);
        assert_eq!(generalized_median(&peaks, &[4; 5], &axis).unwrap(), 4);
        assert_eq!(generalized_median(&[0, 4], &[2], &axis).unwrap(), 2);
        assert!(generalized_median(&peaks, &[4; 4], &axis).is_err());
    }

    #[test]
    fn young_on_even_single_peaked() {
        let p = profile(&["bac", "bac", "cba", "cba"]);
        let y = strong_young_winners_structured(&p, &Witness::Axis(Axis::identity(3))).unwrap();
        assert_eq!(y, YoungWinners { winners: vec![1, 2], score: 1 });
        let (want, score) = brute_strong_young(&p).unwrap();
        assert_eq!((want, score), (y.winners, y.score));
    }

    #[test]
    fn young_matches_oracle_on_single_peaked_profiles() {
        let axis: Vec<usize> = (0..4).collect();
        let sp: Vec<Vec<usize>> = permutations(4).into_iter().filter(|v| vote_sp_on(v, &axis)).collect();
        for a in &sp {
            for b in &sp {
                for c in &sp {
                    for d in sp.iter().step_by(3) {
                        let p = Profile::new(vec![a.clone(), b.clone(), c.clone(), d.clone()]).unwrap();
                        let y = strong_young_winners_structured(&p, &Witness::Axis(Axis::identity(4))).unwrap();
                        assert_eq!(brute_strong_young(&p).unwrap(), (y.winners, y.score));
                    }
                }
            }
        }
    }
}
