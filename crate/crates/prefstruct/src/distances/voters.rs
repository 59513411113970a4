use prefstruct_core::{kendall_tau_with_positions, Profile, VoterOrdering};

use super::{DeletionResult, Removed};
use crate::error::{limit, Result};
use crate::recognition::{recognize_single_peaked, sp_certificate};
use crate::winners::Witness;

/// Strategy for [`sp_voter_deletion`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Branch and bound; minimum deletion.
    Exact,
    /// Deletes the voters of forbidden patterns until none is left. Each
    /// pattern has at most three voters and any solution must hit every
    /// pattern found, so this is within a factor of three of the minimum.
    Heuristic,
}

/// Most distinct votes [`sp_voter_deletion`] accepts in exact mode.
pub const SP_EXACT_VOTER_LIMIT: usize = 40;

fn positions(vote: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; vote.len()];
    for (r, &a) in vote.iter().enumerate() {
        pos[a] = r;
    }
    pos
}

/// All pairwise Kendall-tau distances, row-major.
fn distances(p: &Profile) -> Vec<usize> {
    let n = p.n();
    let pos: Vec<Vec<usize>> = p.votes().map(positions).collect();
    let mut d = vec![0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let k = kendall_tau_with_positions(&pos[i], p.vote(j));
            d[i * n + j] = k;
            d[j * n + i] = k;
        }
    }
    d
}

/// Fewest voters to delete so that the rest, kept in the given order, is
/// single-crossing.
///
/// With the first survivor `f` fixed, `y` may follow `x` exactly when the
/// pairs `f` and `x` disagree on are among those `f` and `y` disagree on,
/// which is the equality `K(f,x) + K(x,y) = K(f,y)`. The best chain is a
/// longest path in that order. `O(n^2 m log m + n^3)`.
pub fn sc_voter_deletion_given_order(p: &Profile) -> DeletionResult {
    let n = p.n();
    let d = distances(p);
    let mut best: Vec<usize> = vec![0];
    for f in 0..n {
        // chain[x]: longest chain from f ending at x; prev for recovery
        let mut chain = vec![0usize; n];
        let mut prev = vec![usize::MAX; n];
        chain[f] = 1;
        for y in f + 1..n {
            for x in f..y {
                if chain[x] > 0 && chain[x] + 1 > chain[y] && d[f * n + x] + d[x * n + y] == d[f * n + y] {
                    chain[y] = chain[x] + 1;
                    prev[y] = x;
                }
            }
        }
        let end = (f..n).max_by_key(|&x| (chain[x], std::cmp::Reverse(x))).expect("f itself");
        if chain[end] > best.len() {
            let mut kept = vec![end];
            while prev[*kept.last().unwrap()] != usize::MAX {
                kept.push(prev[*kept.last().unwrap()]);
            }
            kept.reverse();
            best = kept;
        }
    }
    let survivors = best.len();
    DeletionResult {
        removed: Removed::Voters,
        deleted: complement(&best, n),
        witness: Witness::Order(VoterOrdering::identity(survivors)),
    }
}

fn complement(kept: &[usize], total: usize) -> Vec<usize> {
    let mut keep = vec![false; total];
    kept.iter().for_each(|&x| keep[x] = true);
    (0..total).filter(|&x| !keep[x]).collect()
}

/// Fewest voters to delete so that the rest is single-crossing in some
/// order.
///
/// Works on distinct votes weighted by multiplicity: identical votes never
/// conflict, so each is kept or dropped as a group. For every candidate
/// leftmost vote the surviving votes form a chain under inclusion of their
/// disagreement sets with it, and the heaviest chain is a longest path when
/// votes are taken by increasing distance. `O(k^2 m log m + k^3)` for `k`
/// distinct votes.
pub fn sc_voter_deletion(p: &Profile) -> DeletionResult {
    let (distinct, groups) = p.dedup();
    let k = distinct.n();
    let d = distances(&distinct);
    let weight: Vec<usize> = groups.iter().map(Vec::len).collect();
    let mut best: (usize, Vec<usize>) = (0, Vec::new());
    for f in 0..k {
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&x| (d[f * k + x], x));
        let mut chain = vec![0usize; k];
        let mut prev = vec![usize::MAX; k];
        chain[f] = weight[f];
        for (t, &y) in order.iter().enumerate().skip(1) {
            for &x in &order[..t] {
                let dy = d[f * k + y];
                if chain[x] > 0 && chain[x] + weight[y] > chain[y] && d[f * k + x] < dy && d[f * k + x] + d[x * k + y] == dy {
                    chain[y] = chain[x] + weight[y];
                    prev[y] = x;
                }
            }
        }
        let end = (0..k).max_by_key(|&x| (chain[x], std::cmp::Reverse(x))).expect("non-empty");
        if chain[end] > best.0 {
            let mut path = vec![end];
            while prev[*path.last().unwrap()] != usize::MAX {
                path.push(prev[*path.last().unwrap()]);
            }
            path.reverse();
            best = (chain[end], path);
        }
    }
    let kept_in_order: Vec<usize> = best.1.iter().flat_map(|&g| groups[g].iter().copied()).collect();
    let mut kept = kept_in_order.clone();
    kept.sort_unstable();
    let order = kept_in_order.iter().map(|v| kept.binary_search(v).expect("kept")).collect();
    DeletionResult {
        removed: Removed::Voters,
        deleted: complement(&kept, p.n()),
        witness: Witness::Order(VoterOrdering::new(order).expect("permutation of survivors")),
    }
}

/// Fewest voters to delete so that the rest is single-peaked.
pub fn sp_voter_deletion(p: &Profile, mode: SearchMode) -> Result<DeletionResult> {
    let deleted = match mode {
        SearchMode::Heuristic => peel_patterns(p),
        SearchMode::Exact => exact_sp_voter_deletion(p)?,
    };
    let kept = complement(&deleted, p.n());
    let q = p.restrict_voters(&kept)?;
    let axis = recognize_single_peaked(&q).expect("survivor is single-peaked");
    Ok(DeletionResult { removed: Removed::Voters, deleted, witness: Witness::Axis(axis) })
}

fn peel_patterns(p: &Profile) -> Vec<usize> {
    let mut kept: Vec<usize> = (0..p.n()).collect();
    loop {
        let q = p.restrict_voters(&kept).expect("a pattern leaves at least one voter");
        let Some(cert) = sp_certificate(&q) else {
            return complement(&kept, p.n());
        };
        let mut gone: Vec<usize> = cert.voters.iter().map(|&i| kept[i]).collect();
        gone.sort_unstable();
        if gone.len() == kept.len() {
            // a lone voter is always single-peaked
            gone.remove(0);
        }
        kept.retain(|i| gone.binary_search(i).is_err());
    }
}

/// Branch and bound over groups of identical votes: each forbidden pattern
/// forces one of its groups out. Once a branch drops group `g` and fails,
/// later siblings keep `g`, so each deletion set is visited once.
fn exact_sp_voter_deletion(p: &Profile) -> Result<Vec<usize>> {
    let (distinct, groups) = p.dedup();
    limit("distinct votes", distinct.n(), SP_EXACT_VOTER_LIMIT)?;
    let weight: Vec<usize> = groups.iter().map(Vec::len).collect();
    let heuristic = peel_patterns(&distinct);
    let mut search = Search {
        p: &distinct,
        weight: &weight,
        best_cost: heuristic.iter().map(|&g| weight[g]).sum(),
        best: heuristic,
        dropped: vec![false; distinct.n()],
        pinned: vec![false; distinct.n()],
    };
    search.run(0);
    let mut deleted: Vec<usize> = search.best.iter().flat_map(|&g| groups[g].iter().copied()).collect();
    deleted.sort_unstable();
    Ok(deleted)
}

struct Search<'a> {
    p: &'a Profile,
    weight: &'a [usize],
    best_cost: usize,
    best: Vec<usize>,
    dropped: Vec<bool>,
    pinned: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self, cost: usize) {
        if cost >= self.best_cost {
            return;
        }
        let kept: Vec<usize> = (0..self.p.n()).filter(|&g| !self.dropped[g]).collect();
        let q = self.p.restrict_voters(&kept).expect("a pattern leaves at least one vote");
        let Some(cert) = sp_certificate(&q) else {
            self.best_cost = cost;
            self.best = (0..self.p.n()).filter(|&g| self.dropped[g]).collect();
            return;
        };
        let mut options: Vec<usize> = cert.voters.iter().map(|&i| kept[i]).collect();
        options.sort_unstable();
        options.dedup();
        let mut pinned_here = Vec::new();
        for g in options {
            if self.pinned[g] {
                continue;
            }
            self.dropped[g] = true;
            self.run(cost + self.weight[g]);
            self.dropped[g] = false;
            self.pinned[g] = true;
            pinned_here.push(g);
        }
        for g in pinned_here {
            self.pinned[g] = false;
        }
    }
}
