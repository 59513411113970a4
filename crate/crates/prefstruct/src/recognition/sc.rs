use prefstruct_core::{kendall_tau_with_positions, Profile, VoterOrdering};

use super::certificate::{match_pattern, shrink_alternatives, shrink_voters, Certificate, CertificateKind};

fn positions(vote: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; vote.len()];
    for (r, &a) in vote.iter().enumerate() {
        pos[a] = r;
    }
    pos
}

/// Checks that the voters, in their current order, form a single-crossing
/// sequence. On failure returns the first index `i` such that voters `i` and
/// `i + 1` break the chain of triangle equalities from voter 0.
///
/// Uses `K(v_0, v_i) + K(v_i, v_{i+1}) = K(v_0, v_{i+1})` for every `i`, in
/// `O(nm log m)`.
pub fn is_single_crossing_given_order(p: &Profile) -> Result<(), usize> {
    let first = positions(p.vote(0));
    let mut to_prev = 0;
    let mut prev = first.clone();
    for i in 0..p.n() - 1 {
        let next = p.vote(i + 1);
        let step = kendall_tau_with_positions(&prev, next);
        let to_next = kendall_tau_with_positions(&first, next);
        if to_prev + step != to_next {
            return Err(i);
        }
        to_prev = to_next;
        prev = positions(next);
    }
    Ok(())
}

/// Orders the voters so that the profile is single-crossing, if possible.
///
/// Voter 0 and some voter `s` with a different vote anchor the line. Every
/// voter gets a signed distance from voter 0: positive when it lies on the
/// same side as `s`, negative otherwise. Sorting by it and checking the
/// result decides membership in `O(nm log m)`. Voters with equal votes stay
/// in id order.
pub fn recognize_single_crossing(p: &Profile) -> Option<VoterOrdering> {
    let n = p.n();
    let m = p.m();
    let first = p.vote(0);
    let Some(s) = (1..n).find(|&i| p.vote(i) != first) else {
        return Some(VoterOrdering::identity(n));
    };
    let pos_first = positions(first);
    let pos_s = positions(p.vote(s));
    let k_fs = kendall_tau_with_positions(&pos_first, p.vote(s)) as i64;
    let mut score = Vec::with_capacity(n);
    for vote in p.votes() {
        let k_f = kendall_tau_with_positions(&pos_first, vote) as i64;
        let k_s = kendall_tau_with_positions(&pos_s, vote) as i64;
        if k_fs == k_f + k_s || k_f == k_fs + k_s {
            score.push(k_f);
        } else if k_s == k_f + k_fs {
            score.push(-k_f);
        } else {
            return None;
        }
    }
    let order = if n >= m { bucket_order(&score, m) } else { sorted_order(&score) };
    let arranged = p.permuted(&VoterOrdering::new(order.clone()).expect("sorting yields a permutation")).expect("same size");
    is_single_crossing_given_order(&arranged).ok()?;
    debug_assert!(order.windows(2).all(|w| score[w[0]] != score[w[1]] || p.vote(w[0]) == p.vote(w[1])));
    Some(VoterOrdering::new(order).expect("permutation"))
}

fn sorted_order(score: &[i64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..score.len()).collect();
    order.sort_by_key(|&i| score[i]);
    order
}

/// Stable counting sort; scores lie in `[-C(m,2), C(m,2)]`.
fn bucket_order(score: &[i64], m: usize) -> Vec<usize> {
    let span = (m * m.saturating_sub(1) / 2) as i64;
    let mut buckets = vec![0usize; 2 * span as usize + 2];
    for &s in score {
        buckets[(s + span) as usize + 1] += 1;
    }
    for k in 1..buckets.len() {
        buckets[k] += buckets[k - 1];
    }
    let mut order = vec![0; score.len()];
    for (i, &s) in score.iter().enumerate() {
        let slot = &mut buckets[(s + span) as usize];
        order[*slot] = i;
        *slot += 1;
    }
    order
}

pub fn is_single_crossing(p: &Profile) -> bool {
    recognize_single_crossing(p).is_some()
}

/// A forbidden sub-profile when `p` is not single-crossing: at most four
/// voters and six alternatives are isolated by shrinking, then the two
/// patterns are matched pair by pair.
pub fn sc_certificate(p: &Profile) -> Option<Certificate> {
    if is_single_crossing(p) {
        return None;
    }
    let voters = shrink_voters(p, is_single_crossing);
    let sub = p.restrict_voters(&voters).expect("non-empty");
    let alts = shrink_alternatives(&sub, is_single_crossing);
    let cert = match_pattern(p, &voters, &alts, &[CertificateKind::ScDelta, CertificateKind::ScGamma]);
    debug_assert!(cert.is_some(), "a profile without a single-crossing order contains a forbidden pattern");
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use prefstruct_oracle::{brute_sc, is_sc_in_order, permutations};

    fn profile(rows: &[&str]) -> Profile {
        Profile::from_letter_rows(rows).unwrap()
    }

    #[test]
    fn five_voter_sequence_is_single_crossing() {
        assert!(is_single_crossing_given_order(&profile(&["abcd", "badc", "bdac", "dbca", "dcba"])).is_ok());
        assert!(is_single_crossing_given_order(&profile(&["abcd", "abdc", "bacd", "badc"])).is_err());
        assert!(is_single_crossing_given_order(&profile(&["abc", "abc"])).is_ok());
    }

    #[test]
    fn square_profile_gets_a_delta_certificate() {
        let p = profile(&["abcd", "abdc", "bacd", "badc"]);
        assert!(recognize_single_crossing(&p).is_none());
        let cert = sc_certificate(&p).unwrap();
        assert_eq!(cert.kind, CertificateKind::ScDelta);
        assert!(cert.validate(&p));
        let mut pairs = [cert.alternatives[..2].to_vec(), cert.alternatives[2..].to_vec()];
        for pair in pairs.iter_mut() {
            pair.sort_unstable();
        }
        pairs.sort();
        assert_eq!(pairs, [vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn three_voter_profile_orders() {
        let p = profile(&["abc", "cab", "cba"]);
        let order = recognize_single_crossing(&p).unwrap();
        assert!(is_sc_in_order(&p.permuted(&order).unwrap()));
    }

    #[test]
    fn exhaustive_three_voters_three_alternatives() {
        let perms = permutations(3);
        for a in &perms {
            for b in &perms {
                for c in &perms {
                    let p = Profile::new(vec![a.clone(), b.clone(), c.clone()]).unwrap();
                    let want = !brute_sc(&p).unwrap().is_empty();
                    match recognize_single_crossing(&p) {
                        Some(order) => {
                            assert!(want);
                            assert!(is_sc_in_order(&p.permuted(&order).unwrap()));
                        }
                        None => {
                            assert!(!want);
                            assert!(sc_certificate(&p).unwrap().validate(&p));
                        }
                    }
                }
            }
        }
    }
}
