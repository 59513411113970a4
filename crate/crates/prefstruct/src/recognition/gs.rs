use prefstruct_core::{Profile, RankIndex};

/// A binary tree over the alternatives in which every internal node splits
/// its leaves into two blocks, each voter ranking one block wholly above
/// the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GsDecomposition {
    Leaf(usize),
    /// The first child is the block voter 0 ranks higher.
    Split(Box<GsDecomposition>, Box<GsDecomposition>),
}

impl GsDecomposition {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            GsDecomposition::Leaf(a) => out.push(*a),
            GsDecomposition::Split(x, y) => {
                x.collect(out);
                y.collect(out);
            }
        }
    }

    /// Every internal node has at least one leaf child.
    pub fn is_caterpillar(&self) -> bool {
        match self {
            GsDecomposition::Leaf(_) => true,
            GsDecomposition::Split(x, y) => match (x.as_ref(), y.as_ref()) {
                (GsDecomposition::Leaf(_), rest) | (rest, GsDecomposition::Leaf(_)) => rest.is_caterpillar(),
                _ => false,
            },
        }
    }

    /// Re-checks every split voter by voter and that the leaves are exactly
    /// the alternatives of `p`.
    pub fn validate(&self, p: &Profile) -> bool {
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        if leaves != (0..p.m()).collect::<Vec<_>>() {
            return false;
        }
        self.splits_hold(&p.rank_index(), p.n())
    }

    fn splits_hold(&self, rank: &RankIndex, n: usize) -> bool {
        match self {
            GsDecomposition::Leaf(_) => true,
            GsDecomposition::Split(x, y) => {
                let (xs, ys) = (x.leaves(), y.leaves());
                let ok = (0..n).all(|i| {
                    let hi = |s: &[usize]| s.iter().map(|&a| rank.pos(i, a)).max().unwrap_or(0);
                    let lo = |s: &[usize]| s.iter().map(|&a| rank.pos(i, a)).min().unwrap_or(0);
                    hi(&xs) < lo(&ys) || hi(&ys) < lo(&xs)
                });
                ok && x.splits_hold(rank, n) && y.splits_hold(rank, n)
            }
        }
    }
}

/// Splits the alternatives recursively. For a set `C`, the only candidate
/// blocks are the prefixes of voter 0's ranking of `C`; a prefix qualifies
/// when every voter ranks it entirely at the top or entirely at the bottom
/// of `C`. Any qualifying prefix will do, since the domain is closed under
/// restriction. `O(nm^2)`.
pub fn recognize_group_separable(p: &Profile) -> Option<GsDecomposition> {
    let rank = p.rank_index();
    let all: Vec<usize> = p.vote(0).to_vec();
    split(p, &rank, all)
}

fn split(p: &Profile, rank: &RankIndex, set: Vec<usize>) -> Option<GsDecomposition> {
    if set.len() == 1 {
        return Some(GsDecomposition::Leaf(set[0]));
    }
    let size = set.len();
    // relative position of each member within every voter's ranking of `set`
    let mut relative = vec![0usize; p.n() * size];
    let mut members: Vec<(usize, usize)> = Vec::with_capacity(size);
    for i in 0..p.n() {
        members.clear();
        members.extend(set.iter().enumerate().map(|(k, &a)| (rank.pos(i, a), k)));
        members.sort_unstable();
        for (r, &(_, k)) in members.iter().enumerate() {
            relative[i * size + k] = r;
        }
    }
    let mut hi = vec![0usize; p.n()];
    let mut lo = vec![usize::MAX; p.n()];
    for k in 0..size - 1 {
        let mut ok = true;
        for i in 0..p.n() {
            let r = relative[i * size + k];
            hi[i] = hi[i].max(r);
            lo[i] = lo[i].min(r);
            ok &= hi[i] == k || lo[i] == size - 1 - k;
        }
        if ok {
            let (first, second) = set.split_at(k + 1);
            let x = split(p, rank, first.to_vec())?;
            let y = split(p, rank, second.to_vec())?;
            return Some(GsDecomposition::Split(Box::new(x), Box::new(y)));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use prefstruct_oracle::{is_gs, permutations};

    fn cities() -> Profile {
        let names = ["Austin", "Bergen", "Calgary", "Lisbon", "Madrid", "Nice"];
        let rows = [
            ["Austin", "Calgary", "Bergen", "Nice", "Madrid", "Lisbon"],
            ["Nice", "Madrid", "Lisbon", "Bergen", "Austin", "Calgary"],
            ["Calgary", "Austin", "Nice", "Madrid", "Lisbon", "Bergen"],
            ["Bergen", "Lisbon", "Madrid", "Nice", "Calgary", "Austin"],
        ];
        let votes = rows
            .iter()
            .map(|row| row.iter().map(|c| names.iter().position(|n| n == c).unwrap()).collect())
            .collect();
        Profile::new(votes).unwrap()
    }

    #[test]
    fn cities_are_group_separable() {
        let p = cities();
        let d = recognize_group_separable(&p).unwrap();
        assert!(d.validate(&p));
    }

    #[test]
    fn two_voter_failure() {
        let p = Profile::from_letter_rows(&["abcd", "cadb"]).unwrap();
        assert!(recognize_group_separable(&p).is_none());
    }

    #[test]
    fn matches_oracle_on_two_voters_of_four() {
        let perms = permutations(4);
        for u in &perms {
            for v in &perms {
                let p = Profile::new(vec![u.clone(), v.clone()]).unwrap();
                let got = recognize_group_separable(&p);
                assert_eq!(got.is_some(), is_gs(&p));
                if let Some(d) = got {
                    assert!(d.validate(&p));
                }
            }
        }
    }
}
