use prefstruct_core::Axis;

/// Fewest adjacent swaps turning `vote` into a vote single-peaked on
/// `axis`. `O(m^3)`.
///
/// With the axis `a_1 .. a_m`, let `A(i, j)` be `a_1..a_i` together with
/// `a_j..a_m`. A single-peaked vote, read from the bottom, peels the axis
/// from its ends; read from the top, it grows an interval, so what remains
/// below any prefix is such an `A(i, j)` and is ranked starting from its
/// inner end `a_i` or `a_j`. `left[i][j]` and `right[i][j]` hold the best
/// cost for `A(i, j)` starting from `a_i` and from `a_j`; moving that start
/// to the top costs the number of members of `A(i, j)` above it.
pub fn swap_distance_to_axis(vote: &[usize], axis: &Axis) -> usize {
    let m = vote.len();
    assert_eq!(axis.len(), m, "vote and axis cover the same alternatives");
    if m <= 2 {
        return 0;
    }
    let mut pos = vec![0usize; m];
    for (r, &a) in vote.iter().enumerate() {
        pos[a] = r;
    }
    // p[t]: vote position of the alternative at axis place t (1-based t)
    let p: Vec<usize> = std::iter::once(usize::MAX).chain(axis.order().iter().map(|&a| pos[a])).collect();
    const INF: usize = usize::MAX / 4;
    // indices i in 0..=m, j in 1..=m+1 with i < j
    let idx = |i: usize, j: usize| i * (m + 2) + j;
    let mut left = vec![INF; (m + 1) * (m + 2)];
    let mut right = vec![INF; (m + 1) * (m + 2)];
    // above(i, j, t): members of A(i, j) ranked above the alternative at t
    let above = |i: usize, j: usize, t: usize| {
        (1..=i).chain(j..=m).filter(|&u| u != t && p[u] < p[t]).count()
    };
    // process sets from small to large: size = i + (m - j + 1)
    for size in 1..=m {
        for i in 0..=size.min(m) {
            let right_part = size - i;
            if right_part > m {
                continue;
            }
            let j = m + 1 - right_part;
            if i >= j {
                continue;
            }
            let rest = |i2: usize, j2: usize| -> usize {
                if i2 == 0 && j2 == m + 1 {
                    0
                } else {
                    left[idx(i2, j2)].min(right[idx(i2, j2)])
                }
            };
            let from_left = (i >= 1).then(|| above(i, j, i) + rest(i - 1, j));
            let from_right = (j <= m).then(|| above(i, j, j) + rest(i, j + 1));
            if let Some(v) = from_left {
                left[idx(i, j)] = v;
            }
            if let Some(v) = from_right {
                right[idx(i, j)] = v;
            }
        }
    }
    // full sets A(i, i + 1) for every peak
    (0..=m).map(|i| left[idx(i, i + 1)].min(right[idx(i, i + 1)])).min().expect("at least one peak")
}

#[cfg(test)]
mod tests {
    use super::*;
    use prefstruct_oracle::{brute_swap_distance, permutations, vote_sp_on};

    #[test]
    fn zero_exactly_on_single_peaked_votes() {
        let axis = Axis::identity(5);
        for v in permutations(5) {
            assert_eq!(swap_distance_to_axis(&v, &axis) == 0, vote_sp_on(&v, axis.order()));
        }
    }

    #[test]
    fn decreasing_along_axis_is_free() {
        let axis = Axis::new(vec![3, 1, 0, 2]).unwrap();
        assert_eq!(swap_distance_to_axis(&[2, 0, 1, 3], &axis), 0);
    }

    #[test]
    fn matches_oracle_for_small_votes() {
        for m in 3..=6 {
            let perms = permutations(m);
            let axis_ids = &perms[perms.len() / 3];
            let axis = Axis::new(axis_ids.clone()).unwrap();
            for v in perms.iter().step_by(if m == 6 { 7 } else { 1 }) {
                assert_eq!(swap_distance_to_axis(v, &axis), brute_swap_distance(v, axis_ids).unwrap(), "{v:?}");
            }
        }
    }
}
