//! Chamberlin-Courant committees on single-peaked and single-crossing
//! profiles.

use num_traits::PrimInt;
use prefstruct_core::{Axis, Profile, RankIndex, VoterOrdering};

use super::{require_sc, require_sp};
use crate::error::{Error, Result};

/// Points `w_1 >= w_2 >= ... >= w_m >= 0` for each rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoringVector<T = u64> {
    weights: Vec<T>,
}

impl<T: PrimInt> ScoringVector<T> {
    pub fn new(weights: Vec<T>) -> Result<Self> {
        if weights.iter().any(|&w| w < T::zero()) {
            return Err(Error::Invalid("scores must be non-negative".into()));
        }
        if weights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("scores must be non-increasing".into()));
        }
        Ok(ScoringVector { weights })
    }

    /// `(m-1, m-2, ..., 0)`.
    pub fn borda(m: usize) -> Self {
        let weights = (0..m).rev().map(|v| T::from(v).expect("Borda score fits the scalar")).collect();
        ScoringVector { weights }
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Score of zero-based rank `r`.
    pub fn at(&self, r: usize) -> T {
        self.weights[r]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CcMode {
    /// Sum over voters of the best member's score.
    Utilitarian,
    /// Minimum over voters of the best member's score.
    Egalitarian,
}

/// A committee with its score.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Committee<T = u64> {
    /// Ascending ids.
    pub members: Vec<usize>,
    pub score: T,
}

/// A committee in which every voter finds a member among its top
/// `rank_bound` alternatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankBoundCommittee {
    pub members: Vec<usize>,
    pub rank_bound: usize,
}

/// Chamberlin-Courant score of `members`, straight from the definition.
pub fn cc_score<T: PrimInt>(p: &Profile, members: &[usize], w: &ScoringVector<T>, mode: CcMode) -> T {
    let mut inside = vec![false; p.m()];
    members.iter().for_each(|&a| inside[a] = true);
    let per_voter = p.votes().map(|v| w.at(v.iter().position(|&a| inside[a]).expect("non-empty committee")));
    match mode {
        CcMode::Utilitarian => per_voter.fold(T::zero(), |s, x| s + x),
        CcMode::Egalitarian => per_voter.min().unwrap_or_else(T::zero),
    }
}

fn check_sizes<T>(p: &Profile, k: usize, w: Option<&ScoringVector<T>>) -> Result<()> {
    if k == 0 || k > p.m() {
        return Err(Error::Precondition(format!("committee size {k} is outside 1..={}", p.m())));
    }
    if let Some(w) = w {
        if w.weights.len() != p.m() {
            return Err(Error::Precondition(format!("scoring vector has {} entries for {} alternatives", w.weights.len(), p.m())));
        }
    }
    Ok(())
}

/// Lexicographically smallest optimal committee (as a sorted id list).
///
/// `hits(forced, lo, a)` must say whether some optimal committee contains
/// every forced alternative, draws its other members from ids `>= lo`, and
/// includes at least one id in `lo..=a`. That is monotone in `a`, so each
/// next member is the least `a` where it holds, found by binary search.
fn lex_min_committee(m: usize, k: usize, mut hits: impl FnMut(&[bool], usize, usize) -> bool) -> Vec<usize> {
    let mut forced = vec![false; m];
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    while chosen.len() < k {
        let from = chosen.last().map_or(0, |&a| a + 1);
        // enough ids must remain above the answer
        let (mut lo, mut hi) = (from, m - (k - chosen.len()));
        while lo < hi {
            let mid = (lo + hi) / 2;
            if hits(&forced, from, mid) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        forced[lo] = true;
        chosen.push(lo);
    }
    chosen
}

/// Utilitarian Chamberlin-Courant on a profile single-peaked on `axis`.
///
/// Walking the axis left to right, a new member only helps voters who
/// prefer it to the previous member, and those voters prefer it to every
/// earlier member too. So the table over (rightmost member, size) needs
/// just the pairwise gains. `O(m^2 n + k m^2)` per evaluation; ties go to
/// the lexicographically smallest committee.
pub fn cc_utilitarian_sp<T: PrimInt>(p: &Profile, axis: &Axis, k: usize, w: &ScoringVector<T>) -> Result<Committee<T>> {
    check_sizes(p, k, Some(w))?;
    require_sp(p, axis)?;
    let m = p.m();
    let rank = p.rank_index();
    let at = axis.order();
    let mut base = vec![T::zero(); m];
    let mut gain = vec![T::zero(); m * m];
    let mut score = vec![T::zero(); m];
    for i in 0..p.n() {
        for (t, &a) in at.iter().enumerate() {
            score[t] = w.at(rank.pos(i, a));
            base[t] = base[t] + score[t];
        }
        for t in 1..m {
            let st = score[t];
            let row = &mut gain[t * m..t * m + t];
            for (g, &sp) in row.iter_mut().zip(&score[..t]) {
                if st > sp {
                    *g = *g + (st - sp);
                }
            }
        }
    }
    let all = vec![true; m];
    let none = vec![false; m];
    let best = sp_util_value(&base, &gain, &all, &none, None, k).expect("k <= m");
    let members = lex_min_committee(m, k, |forced_ids, from, a| {
        let allowed: Vec<bool> = at.iter().map(|&x| forced_ids[x] || x >= from).collect();
        let forced: Vec<bool> = at.iter().map(|&x| forced_ids[x]).collect();
        let marked: Vec<bool> = at.iter().map(|&x| !forced_ids[x] && (from..=a).contains(&x)).collect();
        sp_util_value(&base, &gain, &allowed, &forced, Some(&marked), k) == Some(best)
    });
    let score = cc_score(p, &members, w, CcMode::Utilitarian);
    debug_assert!(score == best);
    Ok(Committee { members, score })
}

/// Best total over committees of exactly `k` members drawn from `allowed`
/// that include every `forced` position and, when `marked` is given, at
/// least one marked position (all indexed by axis position).
fn sp_util_value<T: PrimInt>(
    base: &[T],
    gain: &[T],
    allowed: &[bool],
    forced: &[bool],
    marked: Option<&[bool]>,
    k: usize,
) -> Option<T> {
    let m = base.len();
    let first_forced = forced.iter().position(|&f| f).unwrap_or(m);
    let last_forced = forced.iter().rposition(|&f| f);
    // next_forced[p]: first forced position strictly after p
    let mut next_forced = vec![m; m];
    for p in (0..m.saturating_sub(1)).rev() {
        next_forced[p] = if forced[p + 1] { p + 1 } else { next_forced[p + 1] };
    }
    let mark = |t: usize| marked.is_some_and(|mk| mk[t]) as usize;
    // z[(t, j, h)]: rightmost member at t, j members, h = marked member seen
    let idx = |t: usize, j: usize, h: usize| (t * (k + 1) + j) * 2 + h;
    let mut z: Vec<Option<T>> = vec![None; m * (k + 1) * 2];
    for t in 0..m {
        if allowed[t] && t <= first_forced {
            z[idx(t, 1, mark(t))] = Some(base[t]);
        }
    }
    for j in 2..=k {
        for t in 0..m {
            if !allowed[t] {
                continue;
            }
            for p in 0..t {
                if next_forced[p] < t {
                    continue;
                }
                for h in 0..2 {
                    if let Some(v) = z[idx(p, j - 1, h)] {
                        let cand = v + gain[t * m + p];
                        let cell = &mut z[idx(t, j, h.max(mark(t)))];
                        if cell.is_none_or(|b| cand > b) {
                            *cell = Some(cand);
                        }
                    }
                }
            }
        }
    }
    let need = marked.is_some() as usize;
    let z = &z;
    (0..m)
        .filter(|&t| last_forced.is_none_or(|l| t >= l))
        .flat_map(|t| (need..2).filter_map(move |h| z[idx(t, k, h)]))
        .max()
}

/// Egalitarian committee on a single-peaked profile: the least `b` such
/// that `k` alternatives meet every voter's top-`b` set, found by binary
/// search. Top-`b` sets are axis intervals, so each test is a greedy
/// interval stabbing.
pub fn cc_egalitarian_sp(p: &Profile, axis: &Axis, k: usize) -> Result<RankBoundCommittee> {
    check_sizes::<u64>(p, k, None)?;
    require_sp(p, axis)?;
    let m = p.m();
    let stab = Stabbing::new(p, axis);
    let none = vec![false; m];
    let all = vec![true; m];
    let (mut lo, mut hi) = (1, m);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if stab.feasible(mid, &all, &none, k) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let b = lo;
    let at = axis.order();
    // The next member is the least id that can join the chosen ones while
    // the rest come from ids above the previous member.
    let mut forced_ids = vec![false; m];
    let mut members: Vec<usize> = Vec::with_capacity(k);
    while members.len() < k {
        let from = members.last().map_or(0, |&a| a + 1);
        let next = (from..m)
            .find(|&q| {
                forced_ids[q] = true;
                let allowed: Vec<bool> = at.iter().map(|&x| forced_ids[x] || x >= from).collect();
                let forced: Vec<bool> = at.iter().map(|&x| forced_ids[x]).collect();
                let ok = m - q > k - members.len() - 1 && stab.feasible(b, &allowed, &forced, k);
                forced_ids[q] = ok;
                ok
            })
            .expect("the rank bound is attainable");
        members.push(next);
    }
    Ok(RankBoundCommittee { members, rank_bound: b })
}

struct Stabbing<'a> {
    p: &'a Profile,
    position: Vec<usize>,
}

impl Stabbing<'_> {
    fn new<'a>(p: &'a Profile, axis: &Axis) -> Stabbing<'a> {
        let position = (0..p.m()).map(|a| axis.position(a)).collect();
        Stabbing { p, position }
    }

    /// Whether at most `k` points, including every forced one and otherwise
    /// allowed, meet each voter's top-`b` interval (positions on the axis).
    fn feasible(&self, b: usize, allowed: &[bool], forced: &[bool], k: usize) -> bool {
        let m = allowed.len();
        let mut prefix_forced = vec![0usize; m + 1];
        for t in 0..m {
            prefix_forced[t + 1] = prefix_forced[t] + forced[t] as usize;
        }
        let mut prev_allowed = vec![usize::MAX; m];
        for t in 0..m {
            let free = allowed[t] && !forced[t];
            prev_allowed[t] = if free { t } else if t > 0 { prev_allowed[t - 1] } else { usize::MAX };
        }
        let mut intervals: Vec<(usize, usize)> = self
            .p
            .votes()
            .map(|v| {
                let (mut l, mut r) = (usize::MAX, 0);
                for &a in &v[..b] {
                    l = l.min(self.position[a]);
                    r = r.max(self.position[a]);
                }
                (l, r)
            })
            .filter(|&(l, r)| prefix_forced[r + 1] == prefix_forced[l])
            .collect();
        intervals.sort_unstable_by_key(|&(_, r)| r);
        let mut budget = k - prefix_forced[m];
        let mut last: Option<usize> = None;
        for (l, r) in intervals {
            if last.is_some_and(|x| x >= l) {
                continue;
            }
            let point = prev_allowed[r];
            if point == usize::MAX || point < l || budget == 0 {
                return false;
            }
            budget -= 1;
            last = Some(point);
        }
        true
    }
}

/// Chamberlin-Courant on a profile single-crossing in `order`.
///
/// In such a profile each member's supporters form an interval of the
/// voter order, so the optimum splits the voters into at most `k`
/// consecutive districts, each served by its best alternative.
/// `O(n^2 (m + k))` per evaluation.
pub fn cc_sc<T: PrimInt>(
    p: &Profile,
    order: &VoterOrdering,
    k: usize,
    w: &ScoringVector<T>,
    mode: CcMode,
) -> Result<Committee<T>> {
    check_sizes(p, k, Some(w))?;
    let arranged = require_sc(p, order)?;
    let m = p.m();
    let rank = arranged.rank_index();
    let all = vec![true; m];
    let none = vec![false; m];
    let best = sc_value(&rank, arranged.n(), w, mode, &all, &none, None, k);
    let members = lex_min_committee(m, k, |forced, from, a| {
        let allowed: Vec<bool> = (0..m).map(|x| forced[x] || x >= from).collect();
        let marked: Vec<bool> = (0..m).map(|x| !forced[x] && (from..=a).contains(&x)).collect();
        sc_value(&rank, arranged.n(), w, mode, &allowed, forced, Some(&marked), k) == best
    });
    let score = cc_score(p, &members, w, mode);
    debug_assert!(score == best);
    Ok(Committee { members, score })
}

/// Optimal district split: forced alternatives serve districts for free,
/// other allowed ones use up the remaining committee seats. With `marked`,
/// at least one district must be served by a marked alternative.
#[allow(clippy::too_many_arguments)]
fn sc_value<T: PrimInt>(
    rank: &RankIndex,
    n: usize,
    w: &ScoringVector<T>,
    mode: CcMode,
    allowed: &[bool],
    forced: &[bool],
    marked: Option<&[bool]>,
    k: usize,
) -> T {
    let m = allowed.len();
    let seats = k - forced.iter().filter(|&&f| f).count();
    let (unit, join): (T, fn(T, T) -> T) = match mode {
        CcMode::Utilitarian => (T::zero(), |a, b| a + b),
        CcMode::Egalitarian => (T::max_value(), |a, b| a.min(b)),
    };
    let is_marked = |a: usize| marked.is_some_and(|mk| mk[a]);
    // f[(j, s, h)]: best over the first j voters using s paid districts,
    // h = some district served by a marked alternative
    let width = seats + 1;
    let idx = |j: usize, s: usize, h: usize| (j * width + s) * 2 + h;
    let mut f: Vec<Option<T>> = vec![None; (n + 1) * width * 2];
    f[idx(0, 0, 0)] = Some(unit);
    let mut acc = vec![unit; m];
    for i in 0..n {
        acc.iter_mut().for_each(|x| *x = unit);
        for j in i + 1..=n {
            let voter = j - 1;
            // best free, paid and paid-marked alternative for voters i..j
            let mut best: [Option<T>; 3] = [None; 3];
            for a in 0..m {
                if !allowed[a] {
                    continue;
                }
                acc[a] = join(acc[a], w.at(rank.pos(voter, a)));
                let slot = if forced[a] { 0 } else if is_marked(a) { 2 } else { 1 };
                if best[slot].is_none_or(|b| acc[a] > b) {
                    best[slot] = Some(acc[a]);
                }
            }
            for s in 0..width {
                for h in 0..2 {
                    let Some(prev) = f[idx(i, s, h)] else { continue };
                    let mut relax = |s2: usize, h2: usize, v: T| {
                        let cell = &mut f[idx(j, s2, h2)];
                        if cell.is_none_or(|c| v > c) {
                            *cell = Some(v);
                        }
                    };
                    if let Some(v) = best[0] {
                        relax(s, h, join(prev, v));
                    }
                    if s + 1 < width {
                        if let Some(v) = best[1] {
                            relax(s + 1, h, join(prev, v));
                        }
                        if let Some(v) = best[2] {
                            relax(s + 1, 1, join(prev, v));
                        }
                    }
                }
            }
        }
    }
    // a spare seat can hold a marked alternative that serves nobody
    let any_marked = marked.is_some_and(|mk| mk.iter().any(|&x| x));
    let done = |s: usize, h: usize| marked.is_none() || h == 1 || (any_marked && s + 1 < width);
    let f = &f;
    (0..width)
        .flat_map(|s| (0..2).filter(move |&h| done(s, h)).filter_map(move |h| f[idx(n, s, h)]))
        .max()
        .unwrap_or_else(T::min_value)
}
