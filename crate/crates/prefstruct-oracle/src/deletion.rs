use prefstruct_core::Profile;

use crate::domains::{contract, is_sc_in_order, is_sp};
use crate::{cap, permutations, set_partitions, Result};

/// Target domains for the deletion and width oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Domain {
    SinglePeaked,
    /// Single-peaked on the given axis (restricted to survivors).
    SinglePeakedOn(Vec<usize>),
    SingleCrossing,
    /// Single-crossing with the voters in their current order.
    SingleCrossingInOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Deletion {
    Voters,
    Alternatives,
}

fn has_sp_axis(p: &Profile) -> bool {
    permutations(p.m()).iter().any(|axis| is_sp(p, axis))
}

fn has_sc_order(p: &Profile) -> bool {
    let (distinct, _) = p.dedup();
    permutations(distinct.n())
        .iter()
        .any(|perm| is_sc_in_order(&distinct.restrict_voters(perm).expect("valid voters")))
}

fn member(p: &Profile, domain: &Domain, alt_mapping: &[usize]) -> bool {
    match domain {
        Domain::SinglePeaked => has_sp_axis(p),
        Domain::SinglePeakedOn(axis) => {
            let mut new_id = vec![usize::MAX; axis.len()];
            for (j, &a) in alt_mapping.iter().enumerate() {
                new_id[a] = j;
            }
            let restricted: Vec<usize> = axis.iter().filter(|&&a| new_id[a] != usize::MAX).map(|&a| new_id[a]).collect();
            is_sp(p, &restricted)
        }
        Domain::SingleCrossing => has_sc_order(p),
        Domain::SingleCrossingInOrder => is_sc_in_order(p),
    }
}

/// Smallest set of voters or alternatives whose removal puts the profile in
/// `domain`, scanning candidate sets by size then lexicographically.
/// At least one voter or alternative always survives.
pub fn brute_deletion(p: &Profile, domain: &Domain, mode: Deletion) -> Result<(usize, Vec<usize>)> {
    let size = match mode {
        Deletion::Voters => p.n(),
        Deletion::Alternatives => p.m(),
    };
    cap("2^size", 1usize.checked_shl(size as u32).unwrap_or(usize::MAX), 1 << 17)?;
    if matches!(domain, Domain::SinglePeaked) {
        cap("alternatives", p.m(), 8)?;
    }
    if matches!(domain, Domain::SingleCrossing) {
        cap("voters", p.n(), 8)?;
    }
    let mut masks: Vec<u32> = (0..(1u32 << size) - 1).collect();
    masks.sort_by_key(|&mask| (mask.count_ones(), mask.reverse_bits()));
    for mask in masks {
        let deleted: Vec<usize> = (0..size).filter(|&x| mask >> x & 1 == 1).collect();
        let kept: Vec<usize> = (0..size).filter(|&x| mask >> x & 1 == 0).collect();
        let ok = match mode {
            Deletion::Voters => member(&p.restrict_voters(&kept).expect("non-empty"), domain, &(0..p.m()).collect::<Vec<_>>()),
            Deletion::Alternatives => {
                let (q, mapping) = p.restrict_alternatives(&kept).expect("non-empty");
                member(&q, domain, &mapping)
            }
        };
        if ok {
            return Ok((deleted.len(), deleted));
        }
    }
    unreachable!("a single survivor is always in every domain")
}

/// A partition of the alternatives into at most `k` classes, each of which
/// induces a profile single-crossing in the given voter order.
pub fn brute_alt_partition_sc_in_order(p: &Profile, k: usize) -> Result<Option<Vec<Vec<usize>>>> {
    cap("alternatives", p.m(), 10)?;
    for labels in set_partitions(p.m()) {
        let blocks = labels.iter().max().map_or(0, |&x| x + 1);
        if blocks > k {
            continue;
        }
        let classes: Vec<Vec<usize>> =
            (0..blocks).map(|b| (0..p.m()).filter(|&a| labels[a] == b).collect()).collect();
        if classes.iter().all(|c| is_sc_in_order(&p.restrict_alternatives(c).expect("non-empty").0)) {
            return Ok(Some(classes));
        }
    }
    Ok(None)
}

/// Pairs `(a, b)`, `a < b`, whose relative order changes at least twice
/// along the voter sequence.
pub fn brute_crossing_edges(p: &Profile) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..p.m() {
        for b in a + 1..p.m() {
            let prefs: Vec<bool> = p
                .votes()
                .map(|v| v.iter().position(|&x| x == a) < v.iter().position(|&x| x == b))
                .collect();
            if prefs.windows(2).filter(|w| w[0] != w[1]).count() >= 2 {
                out.push((a, b));
            }
        }
    }
    out
}

/// Fewest adjacent swaps turning `vote` into some vote single-peaked on `axis`.
pub fn brute_swap_distance(vote: &[usize], axis: &[usize]) -> Result<usize> {
    cap("alternatives", vote.len(), 8)?;
    let m = vote.len();
    let before = |v: &[usize], a: usize, b: usize| v.iter().position(|&x| x == a) < v.iter().position(|&x| x == b);
    let mut best = usize::MAX;
    for u in permutations(m) {
        if !crate::vote_sp_on(&u, axis) {
            continue;
        }
        let mut d = 0;
        for a in 0..m {
            for b in a + 1..m {
                if before(&u, a, b) != before(vote, a, b) {
                    d += 1;
                }
            }
        }
        best = best.min(d);
    }
    Ok(best)
}

/// All sets of 2..m-1 alternatives that appear contiguously in every vote,
/// as ascending id lists in ascending bitmask order.
pub fn brute_clone_sets(p: &Profile) -> Result<Vec<Vec<usize>>> {
    cap("alternatives", p.m(), 14)?;
    let m = p.m();
    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        let size = mask.count_ones() as usize;
        if size < 2 || size == m {
            continue;
        }
        let contiguous = p.votes().all(|v| {
            let first = v.iter().position(|&a| mask >> a & 1 == 1).expect("non-empty");
            v[first..first + size].iter().all(|&a| mask >> a & 1 == 1)
        });
        if contiguous {
            out.push((0..m).filter(|&a| mask >> a & 1 == 1).collect());
        }
    }
    Ok(out)
}

/// Minimum over partitions of the alternatives into contiguous blocks whose
/// contraction lies in `domain` (single-peaked or single-crossing) of the
/// largest block size, with one optimal partition.
pub fn brute_width(p: &Profile, domain: &Domain) -> Result<(usize, Vec<Vec<usize>>)> {
    cap("alternatives", p.m(), 8)?;
    if matches!(domain, Domain::SingleCrossing) {
        cap("distinct votes", p.dedup().0.n(), 8)?;
    }
    let mut best: Option<(usize, Vec<Vec<usize>>)> = None;
    for labels in set_partitions(p.m()) {
        let blocks = labels.iter().max().map_or(0, |&x| x + 1);
        let classes: Vec<Vec<usize>> =
            (0..blocks).map(|b| (0..p.m()).filter(|&a| labels[a] == b).collect()).collect();
        let width = classes.iter().map(Vec::len).max().unwrap_or(0);
        if best.as_ref().is_some_and(|(w, _)| *w <= width) {
            continue;
        }
        let Some(q) = contract(p, &classes) else {
            continue;
        };
        let ok = match domain {
            Domain::SinglePeaked => has_sp_axis(&q),
            Domain::SingleCrossing => has_sc_order(&q),
            _ => panic!("width is defined for the free single-peaked and single-crossing domains"),
        };
        if ok {
            best = Some((width, classes));
        }
    }
    Ok(best.expect("the one-block partition always qualifies"))
}

/// A column order putting each row's ones in one run, trying all orders.
pub fn brute_c1p(rows: &[Vec<bool>]) -> Result<Option<Vec<usize>>> {
    let cols = rows.first().map_or(0, Vec::len);
    cap("columns", cols, 9)?;
    Ok(permutations(cols).into_iter().find(|order| {
        rows.iter().all(|row| {
            let ones: Vec<usize> = (0..cols).filter(|&k| row[order[k]]).collect();
            ones.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(rows: &[&str]) -> Profile {
        Profile::from_letter_rows(rows).unwrap()
    }

    fn crossing_example() -> Profile {
        profile(&["abcde", "adcbe", "baced", "abcde"])
    }

    #[test]
    fn crossing_graph_edges() {
        assert_eq!(brute_crossing_edges(&crossing_example()), vec![(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)]);
    }

    #[test]
    fn deleting_the_cover() {
        let (k, del) = brute_deletion(&crossing_example(), &Domain::SingleCrossingInOrder, Deletion::Alternatives).unwrap();
        assert_eq!((k, del), (2, vec![1, 3]));
    }

    #[test]
    fn partition_needs_three_classes() {
        assert!(brute_alt_partition_sc_in_order(&crossing_example(), 2).unwrap().is_none());
        assert!(brute_alt_partition_sc_in_order(&crossing_example(), 3).unwrap().is_some());
    }

    #[test]
    fn one_deletion_fixes_the_square() {
        let p = profile(&["abcd", "abdc", "bacd", "badc"]);
        assert_eq!(brute_deletion(&p, &Domain::SingleCrossing, Deletion::Voters).unwrap().0, 1);
        let cyc = profile(&["abc", "bca", "cab"]);
        assert_eq!(brute_deletion(&cyc, &Domain::SinglePeaked, Deletion::Voters).unwrap().0, 1);
    }

    #[test]
    fn swap_distance_zero_for_sp_votes() {
        assert_eq!(brute_swap_distance(&[2, 1, 3, 0], &[0, 1, 2, 3]).unwrap(), 0);
        assert_eq!(brute_swap_distance(&[0, 3, 1, 2], &[0, 1, 2, 3]).unwrap(), 2);
    }

    #[test]
    fn clone_sets_of_one_vote_are_runs() {
        let sets = brute_clone_sets(&profile(&["abcd"])).unwrap();
        assert_eq!(sets.len(), 3 + 2);
    }

    #[test]
    fn c1p_small() {
        let tri = vec![vec![true, true, false], vec![false, true, true], vec![true, false, true]];
        assert!(brute_c1p(&tri).unwrap().is_none());
    }
}
