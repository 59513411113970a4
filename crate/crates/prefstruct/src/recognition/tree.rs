use prefstruct_core::{kendall_tau_with_positions, Profile};

use crate::error::{limit, Result};

/// An undirected tree on vertices `0..len`, stored as an edge list with each
/// edge written `(smaller, larger)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    len: usize,
    edges: Vec<(usize, usize)>,
}

impl Tree {
    /// Accepts the edge list only if it forms a spanning tree.
    pub fn new(len: usize, edges: Vec<(usize, usize)>) -> Option<Tree> {
        if len == 0 || edges.len() + 1 != len || edges.iter().any(|&(a, b)| a >= len || b >= len || a == b) {
            return None;
        }
        let mut root: Vec<usize> = (0..len).collect();
        fn find(root: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for &(a, b) in &edges {
            let (ra, rb) = (find(&mut root, a), find(&mut root, b));
            if ra == rb {
                return None;
            }
            root[ra] = rb;
        }
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        Some(Tree { len, edges })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// True when the tree is a path.
    pub fn is_path(&self) -> bool {
        self.adjacency().iter().all(|nb| nb.len() <= 2)
    }

    /// Number of tree edges with both ends in `members`; a vertex set is
    /// connected exactly when this equals its size minus one.
    fn inner_edges(&self, members: &[bool]) -> usize {
        self.edges.iter().filter(|&&(a, b)| members[a] && members[b]).count()
    }
}

/// Whether every prefix of every vote induces a connected subtree, which
/// characterizes single-peakedness on `tree`. Runs in `O(nm)`.
pub fn is_single_peaked_on_tree(p: &Profile, tree: &Tree) -> bool {
    if tree.len() != p.m() {
        return false;
    }
    let adj = tree.adjacency();
    let mut seen = vec![false; p.m()];
    p.votes().all(|vote| {
        seen.iter_mut().for_each(|s| *s = false);
        seen[vote[0]] = true;
        vote[1..].iter().all(|&a| {
            let joined = adj[a].iter().any(|&b| seen[b]);
            seen[a] = true;
            joined
        })
    })
}

/// Builds a tree on the alternatives on which `p` is single-peaked, if any.
///
/// Repeatedly takes an alternative that some voter ranks last among those
/// left, and joins it to the smallest-id alternative every voter accepts as
/// its neighbour: one ranked above it, or the voter's second choice when it
/// is that voter's top. `O(m^2 n)`.
pub fn recognize_sp_on_tree(p: &Profile) -> Option<Tree> {
    let m = p.m();
    let n = p.n();
    let mut alive = vec![true; m];
    let mut left = m;
    let mut edges = Vec::with_capacity(m.saturating_sub(1));
    let mut count = vec![0usize; m];
    while left >= 3 {
        let last = *p.vote(0).iter().rev().find(|&&a| alive[a]).expect("alternatives remain");
        count.iter_mut().for_each(|c| *c = 0);
        for vote in p.votes() {
            let mut live = vote.iter().copied().filter(|&a| alive[a]);
            let top = live.next().expect("alternatives remain");
            if top == last {
                count[live.next().expect("at least three remain")] += 1;
            } else {
                count[top] += 1;
                for c in live.take_while(|&c| c != last) {
                    count[c] += 1;
                }
            }
        }
        let b = (0..m).find(|&c| alive[c] && c != last && count[c] == n)?;
        edges.push((last, b));
        alive[last] = false;
        left -= 1;
    }
    let rest: Vec<usize> = (0..m).filter(|&a| alive[a]).collect();
    if rest.len() == 2 {
        edges.push((rest[0], rest[1]));
    }
    let tree = Tree::new(m, edges).expect("one edge per removed leaf");
    is_single_peaked_on_tree(p, &tree).then_some(tree)
}

/// Whether, for every pair of alternatives, the voters preferring either
/// one form a connected part of `tree` (a tree on the voters).
pub fn is_single_crossing_on_tree(p: &Profile, tree: &Tree) -> bool {
    if tree.len() != p.n() {
        return false;
    }
    let rank = p.rank_index();
    let mut side = vec![false; p.n()];
    for a in 0..p.m() {
        for b in a + 1..p.m() {
            let mut size = 0;
            for (i, s) in side.iter_mut().enumerate() {
                *s = rank.prefers(i, a, b);
                size += *s as usize;
            }
            let inside = tree.inner_edges(&side);
            side.iter_mut().for_each(|s| *s = !*s);
            let outside = tree.inner_edges(&side);
            let ok_in = size == 0 || inside + 1 == size;
            let ok_out = size == p.n() || outside + 1 == p.n() - size;
            if !ok_in || !ok_out {
                return false;
            }
        }
    }
    true
}

/// Most distinct votes `recognize_sc_on_tree` accepts.
pub const SC_TREE_DISTINCT_LIMIT: usize = 4096;

/// Builds a tree on the voters on which `p` is single-crossing, if any.
///
/// On distinct votes the candidate is the graph joining two votes when no
/// third vote lies between them in the Kendall-tau sense; the profile is
/// single-crossing on a tree exactly when this graph is a tree. Voters with
/// identical votes are then hung off their representative as a chain.
pub fn recognize_sc_on_tree(p: &Profile) -> Result<Option<Tree>> {
    let (distinct, groups) = p.dedup();
    let k = distinct.n();
    limit("distinct votes", k, SC_TREE_DISTINCT_LIMIT)?;
    let positions: Vec<Vec<usize>> = distinct
        .votes()
        .map(|v| {
            let mut pos = vec![0; v.len()];
            for (r, &a) in v.iter().enumerate() {
                pos[a] = r;
            }
            pos
        })
        .collect();
    let mut dist = vec![0usize; k * k];
    for i in 0..k {
        for j in i + 1..k {
            let d = kendall_tau_with_positions(&positions[i], distinct.vote(j));
            dist[i * k + j] = d;
            dist[j * k + i] = d;
        }
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let dij = dist[i * k + j];
            let between = (0..k).any(|l| l != i && l != j && dist[i * k + l] + dist[l * k + j] == dij);
            if !between {
                edges.push((groups[i][0], groups[j][0]));
                if edges.len() >= k {
                    return Ok(None);
                }
            }
        }
    }
    for group in &groups {
        edges.extend(group.windows(2).map(|w| (w[0], w[1])));
    }
    let Some(tree) = Tree::new(p.n(), edges) else {
        return Ok(None);
    };
    debug_assert!(is_single_crossing_on_tree(p, &tree));
    Ok(Some(tree))
}
