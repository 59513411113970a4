use prefstruct_core::{Axis, Profile, VoterOrdering};

use crate::{cap, permutations, prufer_trees, Result};

fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (k, &a) in order.iter().enumerate() {
        pos[a] = k;
    }
    pos
}

/// A vote is single-peaked on the axis when, on each side of its top, an
/// alternative nearer the top is preferred to one farther away.
pub fn vote_sp_on(vote: &[usize], axis: &[usize]) -> bool {
    let rank = positions(vote);
    let at = positions(axis);
    let peak = at[vote[0]];
    for a in 0..vote.len() {
        for b in 0..vote.len() {
            let (pa, pb) = (at[a], at[b]);
            let between = (peak <= pb && pb < pa) || (pa < pb && pb <= peak);
            if between && rank[b] > rank[a] {
                return false;
            }
        }
    }
    true
}

pub fn is_sp(p: &Profile, axis: &[usize]) -> bool {
    p.votes().all(|v| vote_sp_on(v, axis))
}

/// Every axis on which `p` is single-peaked. Tries all `m!` orders.
pub fn brute_sp(p: &Profile) -> Result<Vec<Axis>> {
    cap("alternatives", p.m(), 9)?;
    Ok(permutations(p.m())
        .into_iter()
        .filter(|axis| is_sp(p, axis))
        .map(|axis| Axis::new(axis).expect("permutation"))
        .collect())
}

/// Each pair of alternatives changes its relative order at most once along
/// the voter sequence.
pub fn is_sc_in_order(p: &Profile) -> bool {
    let ranks: Vec<Vec<usize>> = p.votes().map(positions).collect();
    for a in 0..p.m() {
        for b in a + 1..p.m() {
            let flips = ranks.windows(2).filter(|w| (w[0][a] < w[0][b]) != (w[1][a] < w[1][b])).count();
            if flips > 1 {
                return false;
            }
        }
    }
    true
}

/// Every ordering of the distinct votes under which the profile is
/// single-crossing. Voters sharing a vote are kept together in id order.
pub fn brute_sc(p: &Profile) -> Result<Vec<VoterOrdering>> {
    let (distinct, groups) = p.dedup();
    cap("distinct votes", distinct.n(), 8)?;
    let mut out = Vec::new();
    for perm in permutations(distinct.n()) {
        if is_sc_in_order(&distinct.restrict_voters(&perm).expect("valid voters")) {
            let order = perm.iter().flat_map(|&g| groups[g].iter().copied()).collect();
            out.push(VoterOrdering::new(order).expect("permutation"));
        }
    }
    Ok(out)
}

fn tree_path(edges: &[(usize, usize)], k: usize, from: usize, to: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![usize::MAX; k];
    let mut stack = vec![from];
    parent[from] = from;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = parent[x];
        path.push(x);
    }
    path
}

/// For every alternative `b`, each alternative on the path from the voter's
/// top to `b` is preferred to `b`.
pub fn is_sp_on_tree(p: &Profile, edges: &[(usize, usize)]) -> bool {
    let m = p.m();
    p.votes().all(|vote| {
        let rank = positions(vote);
        (0..m).all(|b| tree_path(edges, m, vote[0], b).iter().all(|&a| a == b || rank[a] < rank[b]))
    })
}

/// Some tree on the alternatives on which `p` is single-peaked.
pub fn brute_sp_on_tree(p: &Profile) -> Result<Option<Vec<(usize, usize)>>> {
    cap("alternatives", p.m(), 7)?;
    Ok(prufer_trees(p.m()).into_iter().find(|t| is_sp_on_tree(p, t)))
}

fn connected_within(edges: &[(usize, usize)], members: &[bool]) -> bool {
    let k = members.len();
    let Some(start) = (0..k).find(|&v| members[v]) else {
        return true;
    };
    let mut seen = vec![false; k];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            for (u, v) in [(a, b), (b, a)] {
                if u == x && members[v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    (0..k).all(|v| !members[v] || seen[v])
}

/// For each pair of alternatives, both the voters preferring the first and
/// those preferring the second form connected parts of the voter tree.
pub fn is_sc_on_tree(p: &Profile, edges: &[(usize, usize)]) -> bool {
    let ranks: Vec<Vec<usize>> = p.votes().map(positions).collect();
    for a in 0..p.m() {
        for b in a + 1..p.m() {
            let side: Vec<bool> = ranks.iter().map(|r| r[a] < r[b]).collect();
            let other: Vec<bool> = side.iter().map(|s| !s).collect();
            if !connected_within(edges, &side) || !connected_within(edges, &other) {
                return false;
            }
        }
    }
    true
}

/// Some tree on the voters on which `p` is single-crossing.
pub fn brute_sc_on_tree(p: &Profile) -> Result<Option<Vec<(usize, usize)>>> {
    cap("voters", p.n(), 7)?;
    Ok(prufer_trees(p.n()).into_iter().find(|t| is_sc_on_tree(p, t)))
}

fn splits(p: &Profile, set: u32) -> bool {
    let ranks: Vec<Vec<usize>> = p.votes().map(positions).collect();
    // proper non-empty subsets of `set`
    let mut sub = (set - 1) & set;
    while sub != 0 {
        let rest = set & !sub;
        let ok = ranks.iter().all(|r| {
            let above = |x: u32, y: u32| {
                (0..p.m()).filter(|a| x >> a & 1 == 1).all(|a| (0..p.m()).filter(|b| y >> b & 1 == 1).all(|b| r[a] < r[b]))
            };
            above(sub, rest) || above(rest, sub)
        });
        if ok {
            return true;
        }
        sub = (sub - 1) & set;
    }
    false
}

/// Every set of at least two alternatives splits into two blocks that each
/// voter ranks one wholly above the other.
pub fn is_gs(p: &Profile) -> bool {
    let full = (1u32 << p.m()) - 1;
    (1..=full).filter(|s| s.count_ones() >= 2).all(|s| splits(p, s))
}

pub fn brute_gs(p: &Profile) -> Result<bool> {
    cap("alternatives", p.m(), 8)?;
    Ok(is_gs(p))
}

/// Which of the value/best/medium/worst restrictions hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Restrictions {
    pub value: bool,
    pub best: bool,
    pub medium: bool,
    pub worst: bool,
}

pub fn brute_restrictions(p: &Profile) -> Restrictions {
    let ranks: Vec<Vec<usize>> = p.votes().map(positions).collect();
    let mut out = Restrictions { value: true, best: true, medium: true, worst: true };
    let m = p.m();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let triple = [a, b, c];
                // seen[x][place] for x in the triple
                let mut seen = [[false; 3]; 3];
                for r in &ranks {
                    for (x, &alt) in triple.iter().enumerate() {
                        let place = triple.iter().filter(|&&y| r[y] < r[alt]).count();
                        seen[x][place] = true;
                    }
                }
                let never = |place: usize| (0..3).any(|x| !seen[x][place]);
                out.best &= never(0);
                out.medium &= never(1);
                out.worst &= never(2);
                out.value &= never(0) || never(1) || never(2);
            }
        }
    }
    out
}

/// Contracts each block to one alternative (ids follow block order). Returns
/// `None` unless every block is contiguous in every vote.
pub fn contract(p: &Profile, blocks: &[Vec<usize>]) -> Option<Profile> {
    let mut block_of = vec![0; p.m()];
    for (j, block) in blocks.iter().enumerate() {
        for &a in block {
            block_of[a] = j;
        }
    }
    let mut votes = Vec::with_capacity(p.n());
    for vote in p.votes() {
        let mut seq: Vec<usize> = Vec::with_capacity(blocks.len());
        for &a in vote {
            let j = block_of[a];
            if seq.last() != Some(&j) {
                if seq.contains(&j) {
                    return None;
                }
                seq.push(j);
            }
        }
        votes.push(seq);
    }
    Some(Profile::new(votes).expect("contracted votes are permutations"))
}
