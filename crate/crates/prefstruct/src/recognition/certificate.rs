use prefstruct_core::{Profile, RankIndex};
use serde::Serialize;

/// The forbidden pattern a [`Certificate`] instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// Voters `[i, j, k]`, alternatives `[a, b, c]`: voter `i` ranks `a`
    /// below `b` and `c`, voter `j` ranks `b` below `a` and `c`, voter `k`
    /// ranks `c` below `a` and `b`.
    SpAlphaBetaGamma,
    /// Voters `[i, j]`, alternatives `[a, b, c, d]`: `{a, d} > b > c` for
    /// voter `i` and `{c, d} > b > a` for voter `j`.
    SpValleyPair,
    /// Voters `[i, j, k]`, alternatives `[a, b, c, d, e, f]`:
    /// `b > a, c > d, e > f` for `i`; `a > b, d > c, e > f` for `j`;
    /// `a > b, c > d, f > e` for `k`.
    ScGamma,
    /// Voters `[i, j, k, l]`, alternatives `[a, b, c, d]`: the four voters
    /// show all four combinations of the pair orders on `(a, b)` and
    /// `(c, d)`, namely `(a > b, c > d)`, `(b > a, c > d)`, `(a > b, d > c)`
    /// and `(b > a, d > c)`.
    ScDelta,
    /// Voters `[i, j, k]`, alternatives `[a, b, c]`: `a > b > c`,
    /// `b > c > a` and `c > a > b`.
    VrCondorcet,
}

/// A small sub-profile proving that a profile lies outside a domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub voters: Vec<usize>,
    pub alternatives: Vec<usize>,
}

impl Certificate {
    pub fn new(kind: CertificateKind, voters: Vec<usize>, alternatives: Vec<usize>) -> Self {
        Certificate { kind, voters, alternatives }
    }

    /// Checks the pattern against the profile.
    pub fn validate(&self, p: &Profile) -> bool {
        let shape_ok = match self.kind {
            CertificateKind::SpAlphaBetaGamma | CertificateKind::VrCondorcet => (3, 3),
            CertificateKind::SpValleyPair => (2, 4),
            CertificateKind::ScGamma => (3, 6),
            CertificateKind::ScDelta => (4, 4),
        } == (self.voters.len(), self.alternatives.len());
        if !shape_ok
            || self.voters.iter().any(|&i| i >= p.n())
            || self.alternatives.iter().any(|&a| a >= p.m())
        {
            return false;
        }
        self.validate_with(&p.rank_index())
    }

    /// Checks the pattern with constant-time rank lookups. The caller must
    /// ensure ids are in range and the id lists have the kind's lengths.
    pub fn validate_with(&self, rank: &RankIndex) -> bool {
        let v = &self.voters;
        let x = &self.alternatives;
        let pr = |i: usize, a: usize, b: usize| x[a] != x[b] && rank.prefers(v[i], x[a], x[b]);
        match self.kind {
            CertificateKind::SpAlphaBetaGamma => {
                distinct(x)
                    && pr(0, 1, 0)
                    && pr(0, 2, 0)
                    && pr(1, 0, 1)
                    && pr(1, 2, 1)
                    && pr(2, 0, 2)
                    && pr(2, 1, 2)
            }
            CertificateKind::SpValleyPair => {
                distinct(x)
                    && pr(0, 0, 1)
                    && pr(0, 3, 1)
                    && pr(0, 1, 2)
                    && pr(1, 2, 1)
                    && pr(1, 3, 1)
                    && pr(1, 1, 0)
            }
            CertificateKind::ScGamma => {
                pr(0, 1, 0)
                    && pr(0, 2, 3)
                    && pr(0, 4, 5)
                    && pr(1, 0, 1)
                    && pr(1, 3, 2)
                    && pr(1, 4, 5)
                    && pr(2, 0, 1)
                    && pr(2, 2, 3)
                    && pr(2, 5, 4)
            }
            CertificateKind::ScDelta => {
                pr(0, 0, 1)
                    && pr(0, 2, 3)
                    && pr(1, 1, 0)
                    && pr(1, 2, 3)
                    && pr(2, 0, 1)
                    && pr(2, 3, 2)
                    && pr(3, 1, 0)
                    && pr(3, 3, 2)
            }
            CertificateKind::VrCondorcet => {
                distinct(x)
                    && pr(0, 0, 1)
                    && pr(0, 1, 2)
                    && pr(1, 1, 2)
                    && pr(1, 2, 0)
                    && pr(2, 2, 0)
                    && pr(2, 0, 1)
            }
        }
    }
}

fn distinct(xs: &[usize]) -> bool {
    xs.iter().enumerate().all(|(k, a)| !xs[..k].contains(a))
}

/// Smallest voter set (at most a few voters) whose sub-profile still fails
/// `member`. Assumes `member` is inherited by voter subsets and that `p`
/// fails it.
///
/// Each round binary-searches the shortest prefix of the remaining pool that
/// fails together with the voters already fixed; the last voter of that
/// prefix belongs to every failing subset of it and is fixed.
pub(crate) fn shrink_voters(p: &Profile, member: impl Fn(&Profile) -> bool) -> Vec<usize> {
    let mut fixed: Vec<usize> = Vec::new();
    let mut pool: Vec<usize> = (0..p.n()).collect();
    let fails = |ids: &[usize]| !member(&p.restrict_voters(ids).expect("non-empty voter set"));
    loop {
        if !fixed.is_empty() && fails(&fixed) {
            fixed.sort_unstable();
            return fixed;
        }
        let with = |k: usize| {
            let mut ids = fixed.clone();
            ids.extend_from_slice(&pool[..k]);
            ids
        };
        let (mut lo, mut hi) = (1, pool.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            if fails(&with(mid)) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        fixed.push(pool[lo - 1]);
        pool.truncate(lo - 1);
    }
}

/// Greedily drops alternatives while the restriction keeps failing `member`.
/// The result is an inclusion-minimal failing set, in ascending id order.
pub(crate) fn shrink_alternatives(p: &Profile, member: impl Fn(&Profile) -> bool) -> Vec<usize> {
    let mut keep: Vec<usize> = (0..p.m()).collect();
    let mut k = 0;
    while k < keep.len() {
        let mut trial = keep.clone();
        trial.remove(k);
        if !trial.is_empty() && !member(&p.restrict_alternatives(&trial).expect("non-empty").0) {
            keep = trial;
        } else {
            k += 1;
        }
    }
    keep
}

/// Searches a tiny profile (original voter ids `voters`, alternative ids
/// `alts`) for an instance of one of the three-alternative or four-alternative
/// single-peaked and Condorcet patterns, reporting ids of `p`.
pub(crate) fn match_pattern(
    p: &Profile,
    voters: &[usize],
    alts: &[usize],
    kinds: &[CertificateKind],
) -> Option<Certificate> {
    let rank = p.rank_index();
    for &kind in kinds {
        let (nv, na) = match kind {
            CertificateKind::SpAlphaBetaGamma | CertificateKind::VrCondorcet => (3, 3),
            CertificateKind::SpValleyPair => (2, 4),
            CertificateKind::ScGamma | CertificateKind::ScDelta => {
                if let Some(c) = match_crossing(&rank, voters, alts, kind) {
                    return Some(c);
                }
                continue;
            }
        };
        let mut found = None;
        for_each_tuple(voters, nv, &mut |vs| {
            for_each_tuple(alts, na, &mut |xs| {
                let cert = Certificate::new(kind, vs.to_vec(), xs.to_vec());
                if cert.validate_with(&rank) {
                    found = Some(cert);
                    return true;
                }
                false
            })
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Crossing patterns, found pair by pair: for each unordered alternative
/// pair, record which of the candidate voters prefer the smaller id.
fn match_crossing(rank: &RankIndex, voters: &[usize], alts: &[usize], kind: CertificateKind) -> Option<Certificate> {
    let mut pairs = Vec::new();
    for (k, &a) in alts.iter().enumerate() {
        for &b in &alts[k + 1..] {
            pairs.push((a, b));
        }
    }
    // orients a pair as (x, y) with voter `i` preferring y
    let flipped_for = |i: usize, (a, b): (usize, usize)| if rank.prefers(i, a, b) { (b, a) } else { (a, b) };
    let mut found = None;
    match kind {
        CertificateKind::ScGamma => {
            for_each_tuple(voters, 3, &mut |vs| {
                let odd = |who: usize, others: [usize; 2]| {
                    pairs.iter().copied().find(|&(a, b)| {
                        let w = rank.prefers(vs[who], a, b);
                        others.iter().all(|&o| rank.prefers(vs[o], a, b) != w)
                    })
                };
                let (Some(p0), Some(p1), Some(p2)) = (odd(0, [1, 2]), odd(1, [0, 2]), odd(2, [0, 1])) else {
                    return false;
                };
                let (a, b) = flipped_for(vs[0], p0);
                let (c, d) = flipped_for(vs[1], p1);
                let (e, f) = flipped_for(vs[2], p2);
                found = Some(Certificate::new(kind, vs.to_vec(), vec![a, b, c, d, e, f]));
                true
            });
        }
        CertificateKind::ScDelta => {
            'outer: for (s, &p1) in pairs.iter().enumerate() {
                for &p2 in &pairs[s + 1..] {
                    let mut slot = [None; 4];
                    for &i in voters {
                        let code = (!rank.prefers(i, p1.0, p1.1)) as usize + 2 * (!rank.prefers(i, p2.0, p2.1)) as usize;
                        slot[code].get_or_insert(i);
                    }
                    if let [Some(i), Some(j), Some(k), Some(l)] = slot {
                        found = Some(Certificate::new(kind, vec![i, j, k, l], vec![p1.0, p1.1, p2.0, p2.1]));
                        break 'outer;
                    }
                }
            }
        }
        _ => unreachable!("only crossing patterns"),
    }
    found.filter(|c| c.validate_with(rank))
}

/// Calls `f` on ordered `len`-tuples of distinct entries of `pool` until it returns true.
fn for_each_tuple(pool: &[usize], len: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(pool: &[usize], len: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == len {
            return f(cur);
        }
        for &x in pool {
            if cur.contains(&x) {
                continue;
            }
            cur.push(x);
            if rec(pool, len, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(pool, len, &mut Vec::with_capacity(len), f)
}
