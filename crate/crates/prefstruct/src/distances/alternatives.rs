use prefstruct_core::{Axis, Profile};

use super::{DeletionResult, Removed};
use crate::error::{limit, Error, Result};
use crate::recognition::{recognize_single_peaked, sp_certificate};
use crate::winners::Witness;

/// Largest `m` accepted by [`sp_alt_deletion`].
pub const SP_ALT_DELETION_LIMIT: usize = 12;

/// Keeps as many alternatives as possible so that the rest is single-peaked
/// on `axis` (restricted). `O(nm^3)`.
///
/// `best[j][l]` is the largest kept set inside the first `l + 1` axis
/// places whose last two members are places `j < l`. A set extends to
/// `l` through `j` from predecessor `k` when no voter has a valley at
/// `(k, j, l)`; checking consecutive triples suffices.
pub fn sp_alt_deletion_fixed_axis(p: &Profile, axis: &Axis) -> Result<DeletionResult> {
    let m = p.m();
    if axis.len() != m {
        return Err(Error::Precondition(format!("axis has {} alternatives, profile has {m}", axis.len())));
    }
    let kept_places = longest_valley_free(p, axis);
    let mut kept: Vec<usize> = kept_places.iter().map(|&t| axis.order()[t]).collect();
    kept.sort_unstable();
    let deleted = complement(&kept, m);
    let (_, mapping) = p.restrict_alternatives(&kept)?;
    Ok(DeletionResult { removed: Removed::Alternatives, deleted, witness: Witness::Axis(axis.restricted(&mapping)) })
}

/// Axis places of a largest valley-free subset, in axis order.
fn longest_valley_free(p: &Profile, axis: &Axis) -> Vec<usize> {
    let m = p.m();
    if m <= 2 {
        return (0..m).collect();
    }
    let rank = p.rank_index();
    let at = axis.order();
    // ranks[t * n + i]: voter i's rank of the alternative at place t
    let n = p.n();
    let mut ranks = vec![0usize; m * n];
    for t in 0..m {
        for i in 0..n {
            ranks[t * n + i] = rank.pos(i, at[t]);
        }
    }
    let valley_free = |k: usize, j: usize, l: usize| {
        let (rk, rj, rl) = (&ranks[k * n..(k + 1) * n], &ranks[j * n..(j + 1) * n], &ranks[l * n..(l + 1) * n]);
        (0..n).all(|i| rj[i] < rk[i] || rj[i] < rl[i])
    };
    const NONE: usize = usize::MAX;
    let mut best = vec![0usize; m * m];
    let mut from = vec![NONE; m * m];
    let mut top = (2, 0, 1);
    for l in 1..m {
        for j in 0..l {
            let mut size = 2;
            let mut pred = NONE;
            for k in 0..j {
                if best[k * m + j] + 1 > size && valley_free(k, j, l) {
                    size = best[k * m + j] + 1;
                    pred = k;
                }
            }
            best[j * m + l] = size;
            from[j * m + l] = pred;
            if size > top.0 {
                top = (size, j, l);
            }
        }
    }
    let (_, mut j, mut l) = top;
    let mut places = vec![l, j];
    while from[j * m + l] != NONE {
        let k = from[j * m + l];
        places.push(k);
        (j, l) = (k, j);
    }
    places.reverse();
    places
}

fn complement(kept: &[usize], total: usize) -> Vec<usize> {
    let mut keep = vec![false; total];
    kept.iter().for_each(|&x| keep[x] = true);
    (0..total).filter(|&x| !keep[x]).collect()
}

/// Fewest alternatives to delete so that the profile becomes single-peaked
/// on some axis; exact, for `m <= SP_ALT_DELETION_LIMIT`.
///
/// The fixed-axis table, run with each distinct vote as the axis, gives an
/// upper bound. Below it, an iterative-deepening search branches on the
/// alternatives of a forbidden pattern, one of which must go.
pub fn sp_alt_deletion(p: &Profile) -> Result<DeletionResult> {
    limit("alternatives", p.m(), SP_ALT_DELETION_LIMIT)?;
    let m = p.m();
    let (distinct, _) = p.dedup();
    let mut bound = m - 1;
    let mut best: Vec<usize> = (1..m).collect();
    for vote in distinct.votes().take(32) {
        let axis = Axis::new(vote.to_vec()).expect("votes are permutations");
        let mut kept: Vec<usize> = longest_valley_free(p, &axis).iter().map(|&t| vote[t]).collect();
        kept.sort_unstable();
        if m - kept.len() < bound {
            bound = m - kept.len();
            best = complement(&kept, m);
        }
    }
    let mut deleted = Vec::new();
    for depth in 0..bound {
        if hit_patterns(p, &mut deleted, depth) {
            best = deleted;
            break;
        }
    }
    best.sort_unstable();
    let kept = complement(&best, m);
    let (q, _) = p.restrict_alternatives(&kept)?;
    let axis = recognize_single_peaked(&q).expect("survivor is single-peaked");
    Ok(DeletionResult { removed: Removed::Alternatives, deleted: best, witness: Witness::Axis(axis) })
}

fn hit_patterns(p: &Profile, deleted: &mut Vec<usize>, budget: usize) -> bool {
    let kept = complement(&{
        let mut d = deleted.clone();
        d.sort_unstable();
        d
    }, p.m());
    let (q, mapping) = p.restrict_alternatives(&kept).expect("something survives");
    let Some(cert) = sp_certificate(&q) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let mut options: Vec<usize> = cert.alternatives.iter().map(|&a| mapping[a]).collect();
    options.sort_unstable();
    options.dedup();
    for a in options {
        deleted.push(a);
        if hit_patterns(p, deleted, budget - 1) {
            return true;
        }
        deleted.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use prefstruct_oracle::{brute_deletion, permutations, Deletion, Domain};

    fn profile(rows: &[&str]) -> Profile {
        Profile::from_letter_rows(rows).unwrap()
    }

    #[test]
    fn single_peaked_profile_keeps_everything() {
        let p = profile(&["abcd", "bcda", "cbad"]);
        let r = sp_alt_deletion_fixed_axis(&p, &Axis::identity(4)).unwrap();
        assert!(r.deleted.is_empty());
        assert!(r.is_sound(&p));
    }

    #[test]
    fn figure_profile_on_alphabetical_axis() {
        let p = profile(&["bacdefg", "defcbga", "cedbfag"]);
        let r = sp_alt_deletion_fixed_axis(&p, &Axis::identity(7)).unwrap();
        let (want, _) = brute_deletion(&p, &Domain::SinglePeakedOn((0..7).collect()), Deletion::Alternatives).unwrap();
        assert_eq!(r.deleted.len(), want);
        assert!(r.is_sound(&p));
    }

    #[test]
    fn fixed_axis_matches_oracle() {
        let perms = permutations(5);
        for (x, u) in perms.iter().enumerate().step_by(7) {
            for v in perms.iter().step_by(5) {
                let p = Profile::new(vec![u.clone(), v.clone()]).unwrap();
                let axis = &perms[(x * 13) % perms.len()];
                let r = sp_alt_deletion_fixed_axis(&p, &Axis::new(axis.clone()).unwrap()).unwrap();
                let (want, _) = brute_deletion(&p, &Domain::SinglePeakedOn(axis.clone()), Deletion::Alternatives).unwrap();
                assert_eq!(r.deleted.len(), want, "{p:?} on {axis:?}");
                assert!(r.is_sound(&p));
            }
        }
    }

    #[test]
    fn free_axis_matches_oracle() {
        let perms = permutations(5);
        for u in perms.iter().step_by(9) {
            for v in perms.iter().step_by(4) {
                for w in perms.iter().step_by(23) {
                    let p = Profile::new(vec![u.clone(), v.clone(), w.clone()]).unwrap();
                    let r = sp_alt_deletion(&p).unwrap();
                    let (want, _) = brute_deletion(&p, &Domain::SinglePeaked, Deletion::Alternatives).unwrap();
                    assert_eq!(r.deleted.len(), want, "{p:?}");
                    assert!(r.is_sound(&p));
                }
            }
        }
    }
}
