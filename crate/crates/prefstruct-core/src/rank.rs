use crate::Profile;

/// Position table: `pos(i, a)` is the zero-based position of alternative `a`
/// in voter `i`'s ranking, so `rank(i, a) = pos(i, a) + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankIndex {
    m: usize,
    // u32 halves the footprint, which matters for large profiles
    pos: Vec<u32>,
}

impl RankIndex {
    pub fn new(p: &Profile) -> Self {
        let m = p.m();
        assert!(u32::try_from(m).is_ok(), "too many alternatives for a rank index");
        let mut pos = vec![0u32; p.n() * m];
        for (i, vote) in p.votes().enumerate() {
            let row = &mut pos[i * m..(i + 1) * m];
            for (r, &a) in vote.iter().enumerate() {
                row[a] = r as u32;
            }
        }
        RankIndex { m, pos }
    }

    /// One-based rank (1 = top).
    #[inline]
    pub fn rank(&self, i: usize, a: usize) -> usize {
        self.pos[i * self.m + a] as usize + 1
    }

    #[inline]
    pub fn pos(&self, i: usize, a: usize) -> usize {
        self.pos[i * self.m + a] as usize
    }

    /// Voter `i`'s whole position row, indexed by alternative.
    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.pos[i * self.m..(i + 1) * self.m]
    }

    /// True when voter `i` strictly prefers `a` to `b`.
    #[inline]
    pub fn prefers(&self, i: usize, a: usize, b: usize) -> bool {
        let row = i * self.m;
        self.pos[row + a] < self.pos[row + b]
    }
}
