//! One-dimensional Euclidean embeddings.
//!
//! A profile is 1-Euclidean when voters and alternatives can be placed on a
//! line so that every voter prefers nearer alternatives. Recognition first
//! finds a compatible axis and then solves a small linear feasibility
//! problem along it in exact rational arithmetic.

mod simplex;

use prefstruct_core::{kendall_tau_with_positions, Axis, Profile, VoterOrdering};

use crate::recognition::{
    all_single_peaked_axes, recognize_single_crossing, sc_certificate, AxisFamily, Certificate,
};
use crate::Rational;

pub use simplex::LpScalar;
use simplex::{feasible_point, Feasibility};
#[cfg(test)]
use simplex::rational;

/// Default cap on the bit length of any intermediate rational.
pub const DEFAULT_MAX_BITS: u64 = 1 << 16;

/// Positions for every voter and every alternative.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding<T = Rational> {
    voters: Vec<T>,
    alternatives: Vec<T>,
}

impl<T: LpScalar> Embedding<T> {
    pub fn new(voters: Vec<T>, alternatives: Vec<T>) -> Self {
        Embedding { voters, alternatives }
    }

    pub fn voters(&self) -> &[T] {
        &self.voters
    }

    pub fn alternatives(&self) -> &[T] {
        &self.alternatives
    }

    /// Alternatives ordered by coordinate (ties by id).
    pub fn axis(&self) -> Axis {
        let mut order: Vec<usize> = (0..self.alternatives.len()).collect();
        order.sort_by(|&a, &b| {
            self.alternatives[a].partial_cmp(&self.alternatives[b]).expect("comparable").then(a.cmp(&b))
        });
        Axis::new(order).expect("permutation")
    }

    /// Whether every voter strictly prefers each alternative to every one
    /// it ranks lower by distance.
    pub fn validate(&self, p: &Profile) -> bool {
        if self.voters.len() != p.n() || self.alternatives.len() != p.m() {
            return false;
        }
        p.votes().zip(&self.voters).all(|(vote, x)| {
            let dist = |a: usize| (x.clone() - self.alternatives[a].clone()).abs();
            vote.windows(2).all(|w| dist(w[0]) < dist(w[1]))
        })
    }
}

/// An axis that keeps the profile single-crossing when it is placed before
/// the first voter and its reverse after the last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleAxis {
    pub axis: Axis,
    /// A single-crossing order of the voters that the axis extends.
    pub voter_order: VoterOrdering,
}

/// Why a profile has no 1-Euclidean embedding.
#[derive(Debug, Clone, PartialEq)]
pub enum NotEuclidean {
    NotSinglePeaked(Certificate),
    NotSingleCrossing(Certificate),
    /// Single-peaked and single-crossing, but no positions exist along the
    /// compatible axis.
    Infeasible(CompatibleAxis),
    /// The exact solver exceeded its bit budget.
    TooLarge { bits: u64 },
}

/// Builds a compatible axis from the family of all single-peaked axes.
///
/// With `v` and `w` the first and last votes of a single-crossing order, an
/// axis in the family is compatible exactly when it orders every pair on
/// which `v` and `w` disagree the way `v` does. Each such pair pins the
/// parity of the reversals at the innermost common prefix holding both
/// alternatives. Levels left free are oriented to agree with `v` on as many
/// pairs as possible.
pub fn compatible_axis(p: &Profile) -> Option<CompatibleAxis> {
    let family = all_single_peaked_axes(p).ok()?;
    let voter_order = recognize_single_crossing(p)?;
    let ids = voter_order.as_slice();
    let first = p.rank_index();
    let (v, w) = (ids[0], ids[ids.len() - 1]);
    let axis = orient(&family, |a, b| first.prefers(v, a, b), |a, b| first.prefers(v, a, b) != first.prefers(w, a, b))?;
    debug_assert!(along_axis(p, &axis).is_some());
    Some(CompatibleAxis { axis, voter_order })
}

fn orient(
    family: &AxisFamily,
    wants_before: impl Fn(usize, usize) -> bool,
    pinned: impl Fn(usize, usize) -> bool,
) -> Option<Axis> {
    let base = family.base();
    let m = base.len();
    let t = family.log2_len();
    let mut level = vec![usize::MAX; m];
    for (j, prefix) in family.prefixes().iter().enumerate().rev() {
        prefix.iter().for_each(|&a| level[a] = j);
    }
    let mut required: Vec<Option<bool>> = vec![None; t];
    let mut votes = vec![0i64; t];
    for a in 0..m {
        for b in 0..m {
            if a == b || !wants_before(a, b) {
                continue;
            }
            // parity of reversals needed to put `a` before `b`
            let flip = base.position(a) > base.position(b);
            let l = level[a].max(level[b]);
            if l == usize::MAX {
                if flip && pinned(a, b) {
                    return None;
                }
                continue;
            }
            if pinned(a, b) {
                match required[l] {
                    Some(s) if s != flip => return None,
                    _ => required[l] = Some(flip),
                }
            }
            votes[l] += if flip { 1 } else { -1 };
        }
    }
    let parity: Vec<bool> = (0..t).map(|l| required[l].unwrap_or(votes[l] > 0)).collect();
    let flags: Vec<bool> = (0..t).map(|l| if l + 1 < t { parity[l] ^ parity[l + 1] } else { parity[l] }).collect();
    Some(family.axis(&flags))
}

/// Sorts the distinct votes by distance from `axis`, and checks that every
/// pair's supporters form a prefix of that order. Returns the distinct
/// profile, the group of voters behind each vote, and for each pair
/// `(axis position i < j)` how many leading votes prefer the left one.
struct AlongAxis {
    distinct: Profile,
    groups: Vec<Vec<usize>>,
    /// `(left, right, supporters of left)`
    splits: Vec<(usize, usize, usize)>,
}

fn along_axis(p: &Profile, axis: &Axis) -> Option<AlongAxis> {
    let (distinct, groups) = p.dedup();
    let m = p.m();
    let mut apos = vec![0; m];
    for (r, &a) in axis.order().iter().enumerate() {
        apos[a] = r;
    }
    let dist: Vec<usize> = distinct.votes().map(|v| kendall_tau_with_positions(&apos, v)).collect();
    let mut order: Vec<usize> = (0..distinct.n()).collect();
    order.sort_by_key(|&i| dist[i]);
    if order.windows(2).any(|w| dist[w[0]] == dist[w[1]]) {
        return None;
    }
    let distinct = distinct.permuted(&VoterOrdering::new(order.clone()).expect("permutation")).expect("same size");
    let groups: Vec<Vec<usize>> = order.iter().map(|&i| groups[i].clone()).collect();
    let rank = distinct.rank_index();
    let k = distinct.n();
    let mut splits = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (axis.order()[i], axis.order()[j]);
            let t = (0..k).take_while(|&v| rank.prefers(v, a, b)).count();
            if (t..k).any(|v| rank.prefers(v, a, b)) {
                return None;
            }
            splits.push((i, j, t));
        }
    }
    Some(AlongAxis { distinct, groups, splits })
}

/// Looks for an embedding whose alternatives appear in `axis` order.
///
/// Distinct votes must sit in increasing Kendall-tau distance from the
/// axis, so each pair's midpoint only has to clear the last voter
/// preferring its left end and the first voter preferring its right end.
/// All constraints keep a gap of one.
pub fn embed_along<T: LpScalar>(p: &Profile, axis: &Axis, max_bits: u64) -> Result<Option<Embedding<T>>, u64> {
    let Some(along) = along_axis(p, axis) else {
        return Ok(None);
    };
    let k = along.distinct.n();
    let m = p.m();
    let vars = k + m;
    let int = |v: i64| T::from_i64(v).expect("small integer");
    let mut rows: Vec<Vec<T>> = Vec::new();
    let mut rhs = Vec::new();
    let mut row = |entries: &[(usize, i64)], bound: i64| {
        let mut r = vec![T::zero(); vars];
        for &(j, c) in entries {
            r[j] = r[j].clone() + int(c);
        }
        rows.push(r);
        rhs.push(int(bound));
    };
    for j in 0..m.saturating_sub(1) {
        row(&[(k + j, 1), (k + j + 1, -1)], -1);
    }
    for &(i, j, t) in &along.splits {
        if t >= 1 {
            row(&[(t - 1, 2), (k + i, -1), (k + j, -1)], -2);
        }
        if t < k {
            row(&[(k + i, 1), (k + j, 1), (t, -2)], -2);
        }
    }
    let x = match feasible_point(&rows, &rhs, max_bits) {
        // no constraints at all: everything at the origin
        Feasibility::Feasible(x) if x.is_empty() => vec![T::zero(); vars],
        Feasibility::Feasible(x) => x,
        Feasibility::Infeasible => return Ok(None),
        Feasibility::TooLarge(bits) => return Err(bits),
    };
    let mut voters = vec![T::zero(); p.n()];
    for (g, group) in along.groups.iter().enumerate() {
        group.iter().for_each(|&i| voters[i] = x[g].clone());
    }
    let mut alternatives = vec![T::zero(); m];
    for (r, &a) in axis.order().iter().enumerate() {
        alternatives[a] = x[k + r].clone();
    }
    Ok(Some(Embedding { voters, alternatives }))
}

/// Decides 1-Euclidean membership with exact rationals.
pub fn recognize_1_euclidean(p: &Profile) -> Result<Embedding, NotEuclidean> {
    recognize_1_euclidean_with(p, DEFAULT_MAX_BITS)
}

/// As [`recognize_1_euclidean`], over any scalar and with an explicit bit
/// budget (ignored by fixed-width scalars).
pub fn recognize_1_euclidean_with<T: LpScalar>(p: &Profile, max_bits: u64) -> Result<Embedding<T>, NotEuclidean> {
    all_single_peaked_axes(p).map_err(NotEuclidean::NotSinglePeaked)?;
    let Some(compatible) = compatible_axis(p) else {
        let cert = sc_certificate(p).expect("single-peaked profile without a compatible axis is not single-crossing");
        return Err(NotEuclidean::NotSingleCrossing(cert));
    };
    match embed_along::<T>(p, &compatible.axis, max_bits) {
        Ok(Some(e)) => Ok(e),
        Ok(None) => Err(NotEuclidean::Infeasible(compatible)),
        Err(bits) => Err(NotEuclidean::TooLarge { bits }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use prefstruct_oracle::{brute_one_euclidean, permutations};

    fn profile(rows: &[&str]) -> Profile {
        Profile::from_letter_rows(rows).unwrap()
    }

    fn q(v: i64) -> Rational {
        rational(v)
    }

    #[test]
    fn bad_axis_example() {
        let p = profile(&["bcad", "cbda"]);
        let c = compatible_axis(&p).unwrap();
        assert_eq!(c.axis.order(), &[0, 1, 2, 3]);
        let e = recognize_1_euclidean(&p).unwrap();
        assert!(e.validate(&p));
        let printed = Embedding::new(vec![q(-1), q(1)], vec![q(-4), q(-1), q(1), q(4)]);
        assert!(printed.validate(&p));
        // the sibling axis d b c a admits nothing
        let sibling = Axis::new(vec![3, 1, 2, 0]).unwrap();
        assert_eq!(embed_along::<Rational>(&p, &sibling, DEFAULT_MAX_BITS), Ok(None));
    }

    #[test]
    fn spsc_but_not_euclidean() {
        let p = profile(&["bcdeaf", "decbaf", "defcba"]);
        let c = compatible_axis(&p).unwrap();
        let order = c.axis.order().to_vec();
        assert!(order == [0, 1, 2, 3, 4, 5] || order == [5, 4, 3, 2, 1, 0]);
        assert!(matches!(recognize_1_euclidean(&p), Err(NotEuclidean::Infeasible(_))));
    }

    #[test]
    fn single_vote_axis_is_the_vote() {
        let p = profile(&["cadb"]);
        assert_eq!(compatible_axis(&p).unwrap().axis.order(), &[2, 0, 3, 1]);
    }

    #[test]
    fn cycle_is_rejected_as_not_single_peaked() {
        let p = profile(&["abc", "bca", "cab"]);
        assert!(matches!(recognize_1_euclidean(&p), Err(NotEuclidean::NotSinglePeaked(_))));
    }

    #[test]
    fn float_solver_agrees_on_examples() {
        let p = profile(&["bcad", "cbda"]);
        let e = recognize_1_euclidean_with::<f64>(&p, 0).unwrap();
        assert!(e.validate(&p));
        assert!(recognize_1_euclidean_with::<f64>(&profile(&["bcdeaf", "decbaf", "defcba"]), 0).is_err());
    }

    #[test]
    fn matches_oracle_on_small_profiles() {
        let perms = permutations(4);
        for u in perms.iter().step_by(3) {
            for v in &perms {
                for w in perms.iter().step_by(4) {
                    let p = Profile::new(vec![u.clone(), v.clone(), w.clone()]).unwrap();
                    let got = recognize_1_euclidean(&p);
                    assert_eq!(got.is_ok(), brute_one_euclidean(&p).unwrap(), "{p:?}");
                    if let Ok(e) = got {
                        assert!(e.validate(&p));
                    }
                }
            }
        }
    }

    #[test]
    fn every_compatible_axis_decides_alike() {
        let perms = permutations(5);
        for u in perms.iter().step_by(11) {
            for v in perms.iter().step_by(7) {
                let p = Profile::new(vec![u.clone(), v.clone()]).unwrap();
                let Ok(family) = all_single_peaked_axes(&p) else { continue };
                let outcomes: Vec<bool> = family
                    .axes()
                    .filter(|a| along_axis(&p, a).is_some())
                    .map(|a| embed_along::<Rational>(&p, &a, DEFAULT_MAX_BITS).unwrap().is_some())
                    .collect();
                assert!(!outcomes.is_empty() || compatible_axis(&p).is_none());
                assert!(outcomes.windows(2).all(|w| w[0] == w[1]), "{p:?}");
            }
        }
    }
}
