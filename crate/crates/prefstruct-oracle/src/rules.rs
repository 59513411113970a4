use prefstruct_core::Profile;

use crate::{cap, permutations, Result};

/// All rankings maximizing the number of (voter, pair) agreements, with that
/// maximum.
pub fn brute_kemeny(p: &Profile) -> Result<(Vec<Vec<usize>>, usize)> {
    cap("alternatives", p.m(), 7)?;
    let m = p.m();
    let mut agree = vec![vec![0usize; m]; m];
    for vote in p.votes() {
        for i in 0..m {
            for j in i + 1..m {
                agree[vote[i]][vote[j]] += 1;
            }
        }
    }
    let mut best = Vec::new();
    let mut best_score = 0;
    for ranking in permutations(m) {
        let mut score = 0;
        for i in 0..m {
            for j in i + 1..m {
                score += agree[ranking[i]][ranking[j]];
            }
        }
        if score > best_score || best.is_empty() {
            best.clear();
            best_score = score;
        }
        if score == best_score {
            best.push(ranking);
        }
    }
    Ok((best, best_score))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcMode {
    Utilitarian,
    Egalitarian,
}

/// Chamberlin-Courant score of `committee` under scoring vector `w`.
pub fn cc_score(p: &Profile, committee: &[usize], w: &[u64], mode: CcMode) -> u64 {
    let per_voter = p.votes().map(|vote| {
        let r = vote.iter().position(|a| committee.contains(a)).expect("non-empty committee");
        w[r]
    });
    match mode {
        CcMode::Utilitarian => per_voter.sum(),
        CcMode::Egalitarian => per_voter.min().unwrap_or(0),
    }
}

fn committees(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in start..m {
            if m - a < k - cur.len() {
                break;
            }
            cur.push(a);
            rec(a + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}

fn binomial(m: usize, k: usize) -> usize {
    let mut c: u128 = 1;
    for i in 0..k.min(m - k) {
        c = c * (m - i) as u128 / (i + 1) as u128;
    }
    c.min(usize::MAX as u128) as usize
}

/// Every optimal committee of size `k` (ascending ids, lexicographic order)
/// and the optimal score.
pub fn brute_cc(p: &Profile, k: usize, w: &[u64], mode: CcMode) -> Result<(Vec<Vec<usize>>, u64)> {
    assert!(k >= 1 && k <= p.m() && w.len() == p.m(), "committee size or scoring vector out of range");
    cap("candidate committees", binomial(p.m(), k), 100_000)?;
    let mut best = Vec::new();
    let mut best_score = 0;
    for committee in committees(p.m(), k) {
        let score = cc_score(p, &committee, w, mode);
        if best.is_empty() || score > best_score {
            best.clear();
            best_score = score;
        }
        if score == best_score {
            best.push(committee);
        }
    }
    Ok((best, best_score))
}

/// Strong Young: the fewest voters to delete (keeping at least one) so that
/// the alternative beats every other by a strict majority. Returns the
/// alternatives with the lowest such count and that count.
pub fn brute_strong_young(p: &Profile) -> Result<(Vec<usize>, usize)> {
    cap("voters", p.n(), 12)?;
    let (n, m) = (p.n(), p.m());
    let ranks: Vec<Vec<usize>> = p
        .votes()
        .map(|v| {
            let mut r = vec![0; m];
            for (k, &a) in v.iter().enumerate() {
                r[a] = k;
            }
            r
        })
        .collect();
    let mut score = vec![usize::MAX; m];
    for mask in 1u32..(1 << n) {
        let deleted = n - mask.count_ones() as usize;
        for (a, s) in score.iter_mut().enumerate() {
            if *s <= deleted {
                continue;
            }
            let wins = (0..m).filter(|&b| b != a).all(|b| {
                let (mut for_a, mut for_b) = (0, 0);
                for (i, r) in ranks.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        if r[a] < r[b] {
                            for_a += 1;
                        } else {
                            for_b += 1;
                        }
                    }
                }
                for_a > for_b
            });
            if wins {
                *s = deleted;
            }
        }
    }
    let best = *score.iter().min().expect("m >= 1");
    Ok(((0..m).filter(|&a| score[a] == best).collect(), best))
}
