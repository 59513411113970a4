use crate::{is_permutation, ProfileError};

/// Number of alternative pairs on which `u` and `v` disagree.
///
/// Runs a merge-sort inversion count in `O(m log m)`.
pub fn kendall_tau(u: &[usize], v: &[usize]) -> Result<usize, ProfileError> {
    if u.len() != v.len() {
        return Err(ProfileError::LengthMismatch { left: u.len(), right: v.len() });
    }
    if !is_permutation(u, u.len()) || !is_permutation(v, v.len()) {
        return Err(ProfileError::NotPermutation { voter: 0, m: u.len() });
    }
    let mut pos_u = vec![0; u.len()];
    for (r, &a) in u.iter().enumerate() {
        pos_u[a] = r;
    }
    Ok(kendall_tau_with_positions(&pos_u, v))
}

/// Kendall-tau distance when the first ranking is given as a position table
/// (`pos_u[a]` = position of `a`). Inputs are assumed valid.
pub fn kendall_tau_with_positions(pos_u: &[usize], v: &[usize]) -> usize {
    let mut seq: Vec<usize> = v.iter().map(|&a| pos_u[a]).collect();
    count_inversions(&mut seq)
}

/// Counts pairs `i < j` with `seq[i] > seq[j]`, sorting `seq` as a side effect.
pub fn count_inversions(seq: &mut [usize]) -> usize {
    let mut buf = seq.to_vec();
    sort_count(seq, &mut buf)
}

fn sort_count(seq: &mut [usize], buf: &mut [usize]) -> usize {
    let len = seq.len();
    if len < 2 {
        return 0;
    }
    let mid = len / 2;
    let mut count = {
        let (left, right) = seq.split_at_mut(mid);
        let (bl, br) = buf.split_at_mut(mid);
        sort_count(left, bl) + sort_count(right, br)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < len {
        if seq[i] <= seq[j] {
            buf[k] = seq[i];
            i += 1;
        } else {
            buf[k] = seq[j];
            count += mid - i;
            j += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&seq[i..mid]);
    k += mid - i;
    buf[k..k + len - j].copy_from_slice(&seq[j..len]);
    seq.copy_from_slice(&buf[..len]);
    count
}
