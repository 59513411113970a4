use prefstruct_core::Profile;

/// Every clone set: a set of at least two but fewer than `m` alternatives
/// that appears contiguously in every vote. Each set is listed in ascending
/// id order; the list is sorted.
///
/// Candidates are the contiguous runs of voter 0's ranking; a run is a clone
/// set when, in every other vote, its members span exactly as many places as
/// there are members. `O(m^2 n)`.
pub fn clone_sets(p: &Profile) -> Vec<Vec<usize>> {
    let m = p.m();
    let rank = p.rank_index();
    let first = p.vote(0);
    let mut out = Vec::new();
    let mut lo = vec![0usize; p.n()];
    let mut hi = vec![0usize; p.n()];
    for s in 0..m {
        for i in 0..p.n() {
            lo[i] = rank.pos(i, first[s]);
            hi[i] = lo[i];
        }
        for e in s + 1..m {
            let size = e - s + 1;
            if size == m {
                break;
            }
            let mut contiguous = true;
            for i in 0..p.n() {
                let r = rank.pos(i, first[e]);
                lo[i] = lo[i].min(r);
                hi[i] = hi[i].max(r);
                contiguous &= hi[i] - lo[i] + 1 == size;
            }
            if contiguous {
                let mut set = first[s..=e].to_vec();
                set.sort_unstable();
                out.push(set);
            }
        }
    }
    out.sort();
    out
}

/// Clone sets not contained in a larger clone set.
pub fn maximal_clone_sets(p: &Profile) -> Vec<Vec<usize>> {
    let all = clone_sets(p);
    let contains = |big: &[usize], small: &[usize]| small.iter().all(|a| big.binary_search(a).is_ok());
    all.iter()
        .filter(|s| !all.iter().any(|t| t.len() > s.len() && contains(t, s)))
        .cloned()
        .collect()
}
