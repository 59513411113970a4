use std::collections::HashMap;

use prefstruct_core::{majority_relation, Profile};

/// Explicit rankings returned by [`kemeny_structured`] unless told otherwise.
pub const KEMENY_DEFAULT_LIMIT: usize = 128;

/// Distinct memo entries allowed while counting linear extensions.
const COUNT_BUDGET: usize = 1 << 18;

/// Kemeny rankings of a profile whose strict majority relation is acyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KemenyRankings {
    /// Every linear extension of the strict majority relation, when the
    /// counter finished within its budget and without overflow.
    pub count: Option<u128>,
    /// The first rankings in lexicographic order of alternative ids.
    pub rankings: Vec<Vec<usize>>,
    /// True when more rankings exist than were listed.
    pub truncated: bool,
}

/// [`kemeny_structured_with_limit`] with the default limit.
pub fn kemeny_structured(p: &Profile) -> Option<KemenyRankings> {
    kemeny_structured_with_limit(p, KEMENY_DEFAULT_LIMIT)
}

/// When the strict majority relation has no cycle, the Kemeny rankings are
/// exactly its linear extensions. Returns `None` on a cycle.
pub fn kemeny_structured_with_limit(p: &Profile, limit: usize) -> Option<KemenyRankings> {
    let majority = majority_relation(p);
    if majority.strict_cycle().is_some() {
        return None;
    }
    let m = p.m();
    let above: Vec<Vec<usize>> =
        (0..m).map(|b| (0..m).filter(|&a| majority.strict_beats(a, b)).collect()).collect();
    let mut rankings = Vec::new();
    let mut truncated = false;
    let mut blockers: Vec<usize> = above.iter().map(Vec::len).collect();
    let mut prefix = Vec::with_capacity(m);
    let mut placed = vec![false; m];
    extend(&beaten_by(&above, m), &mut blockers, &mut placed, &mut prefix, limit, &mut rankings, &mut truncated);
    let count = count_extensions(&above, m);
    Some(KemenyRankings { count, rankings, truncated })
}

/// `below[a]` lists the alternatives `a` strictly beats.
fn beaten_by(above: &[Vec<usize>], m: usize) -> Vec<Vec<usize>> {
    let mut below = vec![Vec::new(); m];
    for (b, list) in above.iter().enumerate() {
        for &a in list {
            below[a].push(b);
        }
    }
    below
}

fn extend(
    below: &[Vec<usize>],
    blockers: &mut [usize],
    placed: &mut [bool],
    prefix: &mut Vec<usize>,
    limit: usize,
    out: &mut Vec<Vec<usize>>,
    truncated: &mut bool,
) {
    if prefix.len() == blockers.len() {
        if out.len() < limit {
            out.push(prefix.clone());
        } else {
            *truncated = true;
        }
        return;
    }
    for a in 0..blockers.len() {
        if *truncated {
            return;
        }
        if placed[a] || blockers[a] > 0 {
            continue;
        }
        placed[a] = true;
        prefix.push(a);
        below[a].iter().for_each(|&b| blockers[b] -= 1);
        extend(below, blockers, placed, prefix, limit, out, truncated);
        below[a].iter().for_each(|&b| blockers[b] += 1);
        prefix.pop();
        placed[a] = false;
    }
}

/// Counts linear extensions by memoising on the set still to be placed.
fn count_extensions(above: &[Vec<usize>], m: usize) -> Option<u128> {
    let words = m.div_ceil(64).max(1);
    let mut memo: HashMap<Vec<u64>, u128> = HashMap::new();
    let full: Vec<u64> = (0..words)
        .map(|w| {
            let bits = (m - 64 * w).min(64);
            if bits == 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            }
        })
        .collect();
    fn go(
        left: &mut Vec<u64>,
        above: &[Vec<usize>],
        memo: &mut HashMap<Vec<u64>, u128>,
    ) -> Option<u128> {
        if left.iter().all(|&w| w == 0) {
            return Some(1);
        }
        if let Some(&c) = memo.get(left.as_slice()) {
            return Some(c);
        }
        if memo.len() >= COUNT_BUDGET {
            return None;
        }
        let has = |left: &[u64], a: usize| left[a / 64] >> (a % 64) & 1 == 1;
        let mut total: u128 = 0;
        for a in 0..above.len() {
            if !has(left, a) || above[a].iter().any(|&b| has(left, b)) {
                continue;
            }
            left[a / 64] &= !(1u64 << (a % 64));
            let sub = go(left, above, memo);
            left[a / 64] |= 1u64 << (a % 64);
            total = total.checked_add(sub?)?;
        }
        memo.insert(left.clone(), total);
        Some(total)
    }
    let mut left = full;
    go(&mut left, above, &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use prefstruct_oracle::brute_kemeny;

    fn profile(rows: &[&str]) -> Profile {
        Profile::from_letter_rows(rows).unwrap()
    }

    #[test]
    fn odd_single_peaked_has_one_ranking() {
        let k = kemeny_structured(&profile(&["abcd", "bcda", "cbad"])).unwrap();
        assert_eq!(k.rankings, vec![vec![1, 2, 0, 3]]);
        assert_eq!(k.count, Some(1));
    }

    #[test]
    fn cycle_is_not_applicable() {
        assert!(kemeny_structured(&profile(&["abc", "bca", "cab"])).is_none());
    }

    #[test]
    fn even_profile_lists_all_extensions() {
        let p = profile(&["bac", "bac", "cba", "cba"]);
        let k = kemeny_structured(&p).unwrap();
        assert_eq!(k.rankings, vec![vec![1, 0, 2], vec![1, 2, 0], vec![2, 1, 0]]);
        assert_eq!(k.count, Some(3));
        let (mut want, _) = brute_kemeny(&p).unwrap();
        want.sort();
        assert_eq!(k.rankings, want);
    }

    #[test]
    fn limit_truncates() {
        // a vote and its reverse tie every pair
        let p = profile(&["abcde", "edcba"]);
        let k = kemeny_structured_with_limit(&p, 10).unwrap();
        assert_eq!(k.count, Some(120));
        assert_eq!(k.rankings.len(), 10);
        assert!(k.truncated);
    }
}
