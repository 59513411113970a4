use prefstruct_core::{Profile, VoterOrdering};

use super::{DeletionResult, Removed};
use crate::winners::Witness;

/// Pairs of alternatives whose relative order flips more than once along
/// the voter sequence. Edges are `(a, b)` with `a < b`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingGraph {
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
}

impl CrossingGraph {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.m];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// `O(nm^2)`.
pub fn crossing_graph(p: &Profile) -> CrossingGraph {
    let m = p.m();
    let rank = p.rank_index();
    let mut flips = vec![0u8; m * m];
    for i in 1..p.n() {
        for a in 0..m {
            for b in a + 1..m {
                if rank.prefers(i - 1, a, b) != rank.prefers(i, a, b) {
                    let f = &mut flips[a * m + b];
                    *f = f.saturating_add(1);
                }
            }
        }
    }
    let edges = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).filter(|&(a, b)| flips[a * m + b] >= 2).collect();
    CrossingGraph { m, edges }
}

/// Deletes a minimum vertex cover of the crossing graph if one of size at
/// most `k` exists, so the rest is single-crossing in the given order.
pub fn sc_alt_deletion_exact(p: &Profile, k: usize) -> Option<DeletionResult> {
    let g = crossing_graph(p);
    let k = k.min(p.m() - 1);
    (0..=k).find_map(|size| {
        let mut taken = vec![false; g.m];
        cover_within(&g.edges, &mut taken, size, 0).then(|| DeletionResult {
            removed: Removed::Alternatives,
            deleted: (0..g.m).filter(|&a| taken[a]).collect(),
            witness: Witness::Order(VoterOrdering::identity(p.n())),
        })
    })
}

/// Branches on the two ends of the first uncovered edge; every cover
/// contains one of them.
fn cover_within(edges: &[(usize, usize)], taken: &mut [bool], budget: usize, from: usize) -> bool {
    let Some(offset) = edges[from..].iter().position(|&(a, b)| !taken[a] && !taken[b]) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let (a, b) = edges[from + offset];
    for x in [a, b] {
        taken[x] = true;
        if cover_within(edges, taken, budget - 1, from + offset + 1) {
            return true;
        }
        taken[x] = false;
    }
    false
}

/// Splits the alternatives into at most `k` classes, each single-crossing in
/// the given voter order, by properly colouring the crossing graph.
/// Classes are listed by their smallest member.
pub fn sc_alt_partition(p: &Profile, k: usize) -> Option<Vec<Vec<usize>>> {
    let g = crossing_graph(p);
    let adj = g.adjacency();
    let mut color = vec![usize::MAX; g.m];
    if !colour(&adj, &mut color, 0, 0, k) {
        return None;
    }
    let used = color.iter().max().map_or(0, |&c| c + 1);
    Some((0..used).map(|c| (0..g.m).filter(|&a| color[a] == c).collect()).collect())
}

/// Colours vertices in id order. A vertex may open at most one new colour,
/// which removes colour-permutation symmetry.
fn colour(adj: &[Vec<usize>], color: &mut [usize], v: usize, used: usize, k: usize) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 0..(used + 1).min(k) {
        if adj[v].iter().any(|&u| color[u] == c) {
            continue;
        }
        color[v] = c;
        if colour(adj, color, v + 1, used.max(c + 1), k) {
            return true;
        }
    }
    color[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::is_single_crossing_given_order;
    use prefstruct_oracle::{brute_alt_partition_sc_in_order, brute_crossing_edges, brute_deletion, permutations, Deletion, Domain};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn example() -> Profile {
        Profile::from_letter_rows(&["abcde", "adcbe", "baced", "abcde"]).unwrap()
    }

    #[test]
    fn example_graph_cover_and_colouring() {
        let p = example();
        let g = crossing_graph(&p);
        assert_eq!(g.edges, vec![(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)]);
        let r = sc_alt_deletion_exact(&p, 2).unwrap();
        assert_eq!(r.deleted, vec![1, 3]);
        assert!(r.is_sound(&p));
        assert!(sc_alt_deletion_exact(&p, 1).is_none());
        assert!(sc_alt_partition(&p, 2).is_none());
        let parts = sc_alt_partition(&p, 3).unwrap();
        assert_eq!(parts.len(), 3);
        for part in &parts {
            assert!(is_single_crossing_given_order(&p.restrict_alternatives(part).unwrap().0).is_ok());
        }
    }

    #[test]
    fn empty_graph_iff_single_crossing_in_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let perms = permutations(4);
        for _ in 0..300 {
            let votes: Vec<Vec<usize>> = (0..4).map(|_| perms.choose(&mut rng).unwrap().clone()).collect();
            let p = Profile::new(votes).unwrap();
            let g = crossing_graph(&p);
            assert_eq!(g.edges, brute_crossing_edges(&p));
            assert_eq!(g.is_empty(), is_single_crossing_given_order(&p).is_ok());
            assert_eq!(sc_alt_deletion_exact(&p, 0).is_some(), g.is_empty());
        }
    }

    #[test]
    fn exact_searches_match_oracles() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let perms = permutations(6);
        for _ in 0..60 {
            let votes: Vec<Vec<usize>> = (0..5).map(|_| perms.choose(&mut rng).unwrap().clone()).collect();
            let p = Profile::new(votes).unwrap();
            let (want, _) = brute_deletion(&p, &Domain::SingleCrossingInOrder, Deletion::Alternatives).unwrap();
            let r = sc_alt_deletion_exact(&p, 6).unwrap();
            assert_eq!(r.deleted.len(), want);
            assert!(r.is_sound(&p));
            for k in 1..=3 {
                let want = brute_alt_partition_sc_in_order(&p, k).unwrap().is_some();
                assert_eq!(sc_alt_partition(&p, k).is_some(), want);
            }
        }
    }

    #[test]
    fn planted_graph_is_recovered() {
        // Swapping an alternative pair that is adjacent in the base vote and
        // swapping it back makes exactly that pair cross twice.
        let m = 6;
        let planted = [(0, 1), (1, 2), (4, 5)];
        let base: Vec<usize> = (0..m).collect();
        let mut votes = vec![base.clone()];
        for &(a, b) in &planted {
            let mut v = base.clone();
            v.swap(a, b);
            votes.push(v);
            votes.push(base.clone());
        }
        let p = Profile::new(votes).unwrap();
        assert_eq!(crossing_graph(&p).edges, planted.to_vec());
    }
}
