use num_traits::AsPrimitive;
use prefstruct_core::{Axis, Profile};

use super::certificate::{match_pattern, shrink_alternatives, shrink_voters, Certificate, CertificateKind};

/// A voter ranking the middle alternative of three axis neighbours below
/// both of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalValley {
    pub voter: usize,
    pub alternatives: [usize; 3],
}

/// Checks every vote for a local valley along `axis`; the first one found
/// (lowest voter, leftmost triple) is returned as the error.
pub fn is_single_peaked_on(p: &Profile, axis: &Axis) -> Result<(), LocalValley> {
    assert_eq!(axis.len(), p.m(), "axis and profile disagree on the number of alternatives");
    let order = axis.order();
    let mut pos = vec![0; p.m()];
    for (i, vote) in p.votes().enumerate() {
        for (r, &a) in vote.iter().enumerate() {
            pos[a] = r;
        }
        for w in order.windows(3) {
            if pos[w[1]] > pos[w[0]] && pos[w[1]] > pos[w[2]] {
                return Err(LocalValley { voter: i, alternatives: [w[0], w[1], w[2]] });
            }
        }
    }
    Ok(())
}

/// Finds an axis on which `p` is single-peaked, or a forbidden sub-profile.
///
/// Runs in `O(mn)`: alternatives are placed from the outside in, each round
/// taking the alternatives some voter ranks last among those still unplaced.
/// Free choices go to the left end.
pub fn recognize_single_peaked(p: &Profile) -> Result<Axis, Certificate> {
    match place(p, true) {
        Ok(order) => {
            let axis = Axis::new(order).expect("placement is a permutation");
            debug_assert!(is_single_peaked_on(p, &axis).is_ok());
            Ok(axis)
        }
        Err(direct) => Err(direct
            .filter(|c| c.validate(p))
            .unwrap_or_else(|| search_certificate(p).expect("a profile without an axis contains a forbidden pattern"))),
    }
}

/// Membership only, without certificate bookkeeping.
pub fn is_single_peaked(p: &Profile) -> bool {
    place(p, false).is_ok()
}

/// A forbidden sub-profile when `p` is not single-peaked.
pub fn sp_certificate(p: &Profile) -> Option<Certificate> {
    recognize_single_peaked(p).err()
}

/// Shrinks to a minimal failing sub-profile (at most three voters and four
/// alternatives) and matches the two patterns against it.
fn search_certificate(p: &Profile) -> Option<Certificate> {
    if is_single_peaked(p) {
        return None;
    }
    let voters = shrink_voters(p, is_single_peaked);
    let sub = p.restrict_voters(&voters).expect("non-empty");
    let alts = shrink_alternatives(&sub, is_single_peaked);
    match_pattern(p, &voters, &alts, &[CertificateKind::SpAlphaBetaGamma, CertificateKind::SpValleyPair])
}

/// Votes and positions in the narrowest integer type that fits `m`, so that
/// large profiles stay cache-friendly during the placement rounds.
struct Table<T> {
    m: usize,
    votes: Vec<T>,
    pos: Vec<T>,
}

impl<T: AsPrimitive<usize>> Table<T>
where
    usize: AsPrimitive<T>,
{
    fn new(p: &Profile) -> Self {
        let m = p.m();
        let mut votes = Vec::with_capacity(p.n() * m);
        let mut pos = vec![0usize.as_(); p.n() * m];
        for (i, vote) in p.votes().enumerate() {
            for (r, &a) in vote.iter().enumerate() {
                votes.push(a.as_());
                pos[i * m + a] = r.as_();
            }
        }
        Table { m, votes, pos }
    }

    #[inline]
    fn at(&self, i: usize, k: usize) -> usize {
        self.votes[i * self.m + k].as_()
    }

    #[inline]
    fn pos(&self, i: usize, a: usize) -> usize {
        self.pos[i * self.m + a].as_()
    }

    #[inline]
    fn prefers(&self, i: usize, a: usize, b: usize) -> bool {
        self.pos(i, a) < self.pos(i, b)
    }
}

fn place(p: &Profile, certify: bool) -> Result<Vec<usize>, Option<Certificate>> {
    if p.m() <= 1 << 8 {
        Placement::new(p, &Table::<u8>::new(p)).run(certify)
    } else if p.m() <= 1 << 16 {
        Placement::new(p, &Table::<u16>::new(p)).run(certify)
    } else {
        Placement::new(p, &Table::<u32>::new(p)).run(certify)
    }
}

struct Placement<'a, T> {
    p: &'a Profile,
    table: &'a Table<T>,
    removed: Vec<bool>,
    remaining: usize,
    /// index of each voter's best unplaced alternative
    top: Vec<usize>,
    /// index of each voter's worst unplaced alternative
    bottom: Vec<usize>,
    /// a voter that ranked the alternative last when it was placed
    placer: Vec<usize>,
    stamp: Vec<usize>,
    round: usize,
}

/// A bottom-ranked alternative and a voter ranking it last.
type Bottom = (usize, usize);

impl<'a, T: AsPrimitive<usize>> Placement<'a, T>
where
    usize: AsPrimitive<T>,
{
    fn new(p: &'a Profile, table: &'a Table<T>) -> Self {
        Placement {
            p,
            table,
            removed: vec![false; p.m()],
            remaining: p.m(),
            top: vec![0; p.n()],
            bottom: vec![p.m() - 1; p.n()],
            placer: vec![usize::MAX; p.m()],
            stamp: vec![usize::MAX; p.m()],
            round: 0,
        }
    }

    fn top_of(&mut self, i: usize) -> usize {
        while self.removed[self.table.at(i, self.top[i])] {
            self.top[i] += 1;
        }
        self.table.at(i, self.top[i])
    }

    /// The distinct last-ranked unplaced alternatives, stopping at three.
    fn bottoms(&mut self) -> Vec<Bottom> {
        self.round += 1;
        let mut out = Vec::with_capacity(3);
        for i in 0..self.p.n() {
            while self.removed[self.table.at(i, self.bottom[i])] {
                self.bottom[i] -= 1;
            }
            let b = self.table.at(i, self.bottom[i]);
            if self.stamp[b] != self.round {
                self.stamp[b] = self.round;
                out.push((b, i));
                if out.len() == 3 {
                    break;
                }
            }
        }
        out
    }

    fn remove(&mut self, set: &[Bottom]) {
        for &(a, i) in set {
            self.removed[a] = true;
            self.placer[a] = i;
        }
        self.remaining -= set.len();
    }

    fn run(mut self, certify: bool) -> Result<Vec<usize>, Option<Certificate>> {
        let three = |b: &[Bottom]| {
            certify.then(|| {
                Certificate::new(CertificateKind::SpAlphaBetaGamma, vec![b[0].1, b[1].1, b[2].1], vec![b[0].0, b[1].0, b[2].0])
            })
        };
        let mut left = Vec::new();
        // stored innermost-last
        let mut right = Vec::new();
        while self.remaining > 0 && right.is_empty() {
            let b = self.bottoms();
            if b.len() == 3 {
                return Err(three(&b));
            }
            left.push(b[0].0);
            if let Some(&(y, _)) = b.get(1) {
                right.push(y);
            }
            self.remove(&b);
        }
        while self.remaining >= 2 {
            let l = *left.last().expect("left side is non-empty");
            let r = *right.last().expect("right side is non-empty");
            let b = self.bottoms();
            if b.len() == 3 {
                return Err(three(&b));
            }
            // witnesses: (alternative, voter) pairs for membership in L and R
            let mut wl: [Option<usize>; 2] = [None; 2];
            let mut wr: [Option<usize>; 2] = [None; 2];
            let open = |w: &[Option<usize>; 2]| b.iter().zip(w).any(|(_, s)| s.is_none());
            for i in 0..self.p.n() {
                if !open(&wl) && !open(&wr) {
                    break;
                }
                let top = self.top_of(i);
                let rk = self.table;
                let (to_r, to_l) = (rk.pos(i, r), rk.pos(i, l));
                for (k, &(x, _)) in b.iter().enumerate() {
                    if top == x {
                        continue;
                    }
                    let at = rk.pos(i, x);
                    if wl[k].is_none() && to_r < at && at < to_l {
                        wl[k] = Some(i);
                    }
                    if wr[k].is_none() && to_l < at && at < to_r {
                        wr[k] = Some(i);
                    }
                }
            }
            let in_l: Vec<Bottom> = b.iter().zip(wl).filter_map(|(&(x, _), w)| w.map(|i| (x, i))).collect();
            let in_r: Vec<Bottom> = b.iter().zip(wr).filter_map(|(&(x, _), w)| w.map(|i| (x, i))).collect();
            if in_l.len() > 1 {
                return Err(certify.then(|| self.two_on_one_side(&b, &in_l, r, l)).flatten());
            }
            if in_r.len() > 1 {
                return Err(certify.then(|| self.two_on_one_side(&b, &in_r, l, r)).flatten());
            }
            if let (Some(&(x, i)), Some(&(y, j))) = (in_l.first(), in_r.first()) {
                if x == y {
                    return Err(certify.then(|| self.both_sides(&b, x, i, j, l, r)).flatten());
                }
            }
            let mut to_left = in_l.first().map(|&(x, _)| x);
            let mut to_right = in_r.first().map(|&(x, _)| x);
            for &(x, _) in &b {
                if to_left == Some(x) || to_right == Some(x) {
                    continue;
                }
                if to_left.is_none() {
                    to_left = Some(x);
                } else {
                    to_right = Some(x);
                }
            }
            left.extend(to_left);
            right.extend(to_right);
            self.remove(&b);
        }
        let mut order = left;
        order.extend((0..self.p.m()).filter(|&a| !self.removed[a]));
        order.extend(right.iter().rev());
        Ok(order)
    }

    /// Two bottom alternatives both qualify for the same side. `near` is the
    /// innermost alternative on the opposite end and `far` the innermost on
    /// this end, so each witness voter ranks `near > x > far`.
    fn two_on_one_side(&mut self, b: &[Bottom], side: &[Bottom], near: usize, far: usize) -> Option<Certificate> {
        let (a0, wa) = side[0];
        let (b0, wb) = side[1];
        let rk = self.table;
        let last_voter = |x: usize| b.iter().find(|&&(y, _)| y == x).map(|&(_, i)| i).expect("bottom alternative");
        let t = self.placer[near];
        let common = (0..self.p.n()).find(|&i| {
            let top = self.top_of(i);
            top != a0
                && top != b0
                && rk.prefers(i, near, a0)
                && rk.prefers(i, near, b0)
                && rk.prefers(i, a0, far)
                && rk.prefers(i, b0, far)
        });
        let cert = match common {
            Some(i) => {
                let x = self.top_of(i);
                let (a, bb) = if rk.prefers(i, a0, b0) { (a0, b0) } else { (b0, a0) };
                let k = last_voter(a);
                if rk.prefers(k, a, near) {
                    Certificate::new(CertificateKind::SpValleyPair, vec![i, k], vec![near, a, bb, x])
                } else {
                    Certificate::new(CertificateKind::SpAlphaBetaGamma, vec![t, k, i], vec![near, a, bb])
                }
            }
            None => Certificate::new(CertificateKind::SpAlphaBetaGamma, vec![wa, wb, t], vec![a0, b0, near]),
        };
        Some(cert)
    }

    /// One bottom alternative `x` qualifies for both sides, via voters `i`
    /// (`r > x > l`) and `j` (`l > x > r`).
    fn both_sides(&mut self, b: &[Bottom], x: usize, i: usize, j: usize, l: usize, r: usize) -> Option<Certificate> {
        let mut candidates: Vec<usize> = b.iter().map(|&(y, _)| y).filter(|&y| y != x).collect();
        candidates.push(self.top_of(i));
        candidates.push(self.top_of(j));
        let rk = self.table;
        let y = candidates.into_iter().find(|&y| y != x && rk.prefers(i, y, x) && rk.prefers(j, y, x))?;
        Some(Certificate::new(CertificateKind::SpValleyPair, vec![i, j], vec![r, x, l, y]))
    }
}

/// Every axis on which a profile is single-peaked, as a base axis plus the
/// nested common prefixes whose reversal produces the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisFamily {
    base: Axis,
    /// common prefixes of size at least two, innermost first
    prefixes: Vec<Vec<usize>>,
    /// the axis positions each prefix occupies, inclusive
    spans: Vec<(usize, usize)>,
}

impl AxisFamily {
    pub fn base(&self) -> &Axis {
        &self.base
    }

    /// The common prefixes `A_1 ⊂ A_2 ⊂ ... ⊂ A_t` (only those with at least
    /// two alternatives, since reversing a singleton changes nothing).
    pub fn prefixes(&self) -> &[Vec<usize>] {
        &self.prefixes
    }

    /// `t`, so the family holds `2^t` axes.
    pub fn log2_len(&self) -> usize {
        self.prefixes.len()
    }

    /// `2^t`, or `None` when that overflows.
    pub fn len(&self) -> Option<u128> {
        1u128.checked_shl(self.prefixes.len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The axis obtained by reversing, innermost first, each prefix whose
    /// flag is set.
    pub fn axis(&self, reverse: &[bool]) -> Axis {
        assert_eq!(reverse.len(), self.prefixes.len(), "one flag per prefix");
        let mut order = self.base.order().to_vec();
        for (&(s, e), &flip) in self.spans.iter().zip(reverse) {
            if flip {
                order[s..=e].reverse();
            }
        }
        Axis::new(order).expect("reversals keep a permutation")
    }

    /// All `2^t` axes. Only sensible for small `t`.
    pub fn axes(&self) -> impl Iterator<Item = Axis> + '_ {
        let t = self.prefixes.len();
        assert!(t < 64, "too many axes to enumerate");
        (0u64..1 << t).map(move |mask| {
            let flags: Vec<bool> = (0..t).map(|j| mask >> j & 1 == 1).collect();
            self.axis(&flags)
        })
    }
}

/// All single-peaked axes of `p` in compact form, or a certificate.
pub fn all_single_peaked_axes(p: &Profile) -> Result<AxisFamily, Certificate> {
    let base = recognize_single_peaked(p)?;
    let prefixes = common_prefixes(p);
    let spans = prefixes
        .iter()
        .map(|set| {
            let lo = set.iter().map(|&a| base.position(a)).min().expect("non-empty prefix");
            (lo, lo + set.len() - 1)
        })
        .collect();
    Ok(AxisFamily { base, prefixes, spans })
}

/// Sets of at least two alternatives that every voter ranks above all others,
/// smallest first.
pub fn common_prefixes(p: &Profile) -> Vec<Vec<usize>> {
    let m = p.m();
    let rank = p.rank_index();
    let first = p.vote(0);
    let mut reach = vec![0usize; p.n()];
    let mut out = Vec::new();
    for k in 0..m {
        let mut common = true;
        for (i, far) in reach.iter_mut().enumerate() {
            *far = (*far).max(rank.pos(i, first[k]));
            common &= *far == k;
        }
        if common && k >= 1 {
            out.push(first[..=k].to_vec());
        }
    }
    out
}
