use crate::Profile;

/// Pairwise win counts: `wins(a, b)` voters rank `a` above `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorityRelation {
    m: usize,
    n: usize,
    wins: Vec<usize>,
}

impl MajorityRelation {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn wins(&self, a: usize, b: usize) -> usize {
        self.wins[a * self.m + b]
    }

    /// At least as many voters prefer `a` to `b` as the other way round.
    /// Both directions hold on a tie.
    pub fn weak_beats(&self, a: usize, b: usize) -> bool {
        self.wins(a, b) >= self.wins(b, a)
    }

    pub fn strict_beats(&self, a: usize, b: usize) -> bool {
        self.wins(a, b) > self.wins(b, a)
    }

    /// A triple `(a, b, c)` with `a > b` and `b > c` strictly but not `a > c`,
    /// or `None` when the strict relation is transitive.
    pub fn transitivity_violation(&self) -> Option<[usize; 3]> {
        for a in 0..self.m {
            for b in 0..self.m {
                if !self.strict_beats(a, b) {
                    continue;
                }
                for c in 0..self.m {
                    if c != a && self.strict_beats(b, c) && !self.strict_beats(a, c) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// Whether the strict majority relation is transitive (and hence acyclic).
    pub fn is_strict_majority_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    /// A directed cycle of the strict majority relation, if any.
    pub fn strict_cycle(&self) -> Option<Vec<usize>> {
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; self.m];
        let mut parent = vec![usize::MAX; self.m];
        for root in 0..self.m {
            if state[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            state[root] = 1;
            while let Some(&mut (a, ref mut next)) = stack.last_mut() {
                if *next == self.m {
                    state[a] = 2;
                    stack.pop();
                    continue;
                }
                let b = *next;
                *next += 1;
                if !self.strict_beats(a, b) {
                    continue;
                }
                match state[b] {
                    0 => {
                        state[b] = 1;
                        parent[b] = a;
                        stack.push((b, 0));
                    }
                    1 => {
                        let mut cycle = vec![a];
                        let mut x = a;
                        while x != b {
                            x = parent[x];
                            cycle.push(x);
                        }
                        cycle.reverse();
                        return Some(cycle);
                    }
                    _ => {}
                }
            }
        }
        None
    }
}

/// Pairwise win counts of `p`, in `O(n m^2)`.
pub fn majority_relation(p: &Profile) -> MajorityRelation {
    let m = p.m();
    let mut wins = vec![0; m * m];
    for vote in p.votes() {
        for (r, &a) in vote.iter().enumerate() {
            let row = &mut wins[a * m..(a + 1) * m];
            for &b in &vote[r + 1..] {
                row[b] += 1;
            }
        }
    }
    MajorityRelation { m, n: p.n(), wins }
}

/// Weak and strong Condorcet winners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondorcetWinners {
    /// Alternatives that weakly beat every other alternative, ascending.
    pub weak: Vec<usize>,
    /// The alternative that strictly beats every other one, if it exists.
    pub strong: Option<usize>,
}

pub fn condorcet_winners(p: &Profile) -> CondorcetWinners {
    winners_of(&majority_relation(p))
}

impl MajorityRelation {
    pub fn condorcet_winners(&self) -> CondorcetWinners {
        winners_of(self)
    }
}

fn winners_of(r: &MajorityRelation) -> CondorcetWinners {
    let m = r.m();
    let weak: Vec<usize> = (0..m).filter(|&a| (0..m).all(|b| b == a || r.weak_beats(a, b))).collect();
    let strong = (0..m).find(|&a| (0..m).all(|b| b == a || r.strict_beats(a, b)));
    CondorcetWinners { weak, strong }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(rows: &[&str]) -> Profile {
        Profile::from_letter_rows(rows).unwrap()
    }

    #[test]
    fn condorcet_cycle_is_detected() {
        let r = majority_relation(&profile(&["abc", "bca", "cab"]));
        assert!(r.strict_beats(0, 1) && r.strict_beats(1, 2) && r.strict_beats(2, 0));
        assert_eq!(r.transitivity_violation(), Some([0, 1, 2]));
        assert_eq!(r.strict_cycle().map(|c| c.len()), Some(3));
        assert_eq!(r.condorcet_winners().weak, Vec::<usize>::new());
    }

    #[test]
    fn six_voter_profile_with_two_weak_winners() {
        // columns of the six-voter table, top to bottom
        let p = profile(&["acdeb", "abdec", "ecdab", "bacde", "decba", "becda"]);
        let r = majority_relation(&p);
        let (a, b, c, d, e) = (0, 1, 2, 3, 4);
        assert!(r.strict_beats(c, d) && r.strict_beats(d, e) && r.strict_beats(e, c));
        for x in [a, b] {
            for y in [c, d, e] {
                assert!(r.weak_beats(x, y));
            }
        }
        // a and c split three against three
        assert!(!r.strict_beats(a, c) && !r.strict_beats(c, a));
        let w = condorcet_winners(&p);
        assert_eq!(w.weak, vec![a, b]);
        assert_eq!(w.strong, None);
    }

    #[test]
    fn one_voter_majority_is_the_vote() {
        let p = profile(&["cab"]);
        let r = majority_relation(&p);
        assert!(r.strict_beats(2, 0) && r.strict_beats(0, 1) && r.strict_beats(2, 1));
        assert!(r.is_strict_majority_transitive());
        assert_eq!(condorcet_winners(&p), CondorcetWinners { weak: vec![2], strong: Some(2) });
    }

    #[test]
    fn even_ties_are_kept_both_ways() {
        let r = majority_relation(&profile(&["ab", "ba"]));
        assert!(r.weak_beats(0, 1) && r.weak_beats(1, 0));
        assert!(!r.strict_beats(0, 1) && !r.strict_beats(1, 0));
        assert_eq!(r.wins(0, 1) + r.wins(1, 0), 2);
        assert_eq!(r.wins(0, 0), 0);
    }

    #[test]
    fn median_profile_has_three_weak_winners() {
        // peaks a, a, b, d, d, e on the axis a..e
        let p = profile(&["abcde", "abcde", "bacde", "dceba", "decba", "edcba"]);
        assert_eq!(condorcet_winners(&p).weak, vec![1, 2, 3]);
    }

    #[test]
    fn quasi_transitive_even_profile() {
        let r = majority_relation(&profile(&["bac", "bac", "cba", "cba"]));
        assert!(r.weak_beats(0, 2) && r.weak_beats(2, 1));
        assert!(r.strict_beats(1, 0));
        assert!(r.is_strict_majority_transitive());
        assert_eq!(r.condorcet_winners().weak, vec![1, 2]);
    }
}
