use prefstruct_core::Profile;

use crate::error::{limit, Result};
use crate::recognition::{clone_sets, is_single_crossing, is_single_peaked};

/// Largest `m` accepted by [`structured_width`].
pub const WIDTH_ALTERNATIVE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WidthDomain {
    SinglePeaked,
    SingleCrossing,
}

/// A partition into blocks that every voter ranks contiguously, whose
/// contraction lies in the domain; `width` is the largest block size.
/// Blocks are ascending and listed by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Width {
    pub width: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl Width {
    /// Whether `blocks` partition the alternatives into sets that every voter
    /// ranks contiguously, with a contraction in `domain`.
    pub fn validate(&self, p: &Profile, domain: WidthDomain) -> bool {
        let mut seen = vec![false; p.m()];
        for &a in self.blocks.iter().flatten() {
            if a >= p.m() || std::mem::replace(&mut seen[a], true) {
                return false;
            }
        }
        if seen.contains(&false) || self.blocks.iter().map(Vec::len).max() != Some(self.width) {
            return false;
        }
        contract_blocks(p, &self.blocks).is_some_and(|q| in_domain(&q, domain))
    }
}

fn in_domain(q: &Profile, domain: WidthDomain) -> bool {
    match domain {
        WidthDomain::SinglePeaked => is_single_peaked(q),
        WidthDomain::SingleCrossing => is_single_crossing(q),
    }
}

/// Smallest width, found by trying `w = 1, 2, ...` and searching over
/// partitions into clone sets of size at most `w` and singletons. Bigger
/// blocks are tried first. Exponential in `m`.
pub fn structured_width(p: &Profile, domain: WidthDomain) -> Result<Width> {
    let m = p.m();
    limit("alternatives", m, WIDTH_ALTERNATIVE_LIMIT)?;
    let mut by_min: Vec<Vec<Vec<usize>>> = vec![Vec::new(); m];
    for set in clone_sets(p) {
        by_min[set[0]].push(set);
    }
    for sets in &mut by_min {
        sets.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
    }
    let accept = |q: &Profile| in_domain(q, domain);
    for w in 1..m {
        let mut search = Partition { p, by_min: &by_min, w, used: vec![false; m], blocks: Vec::new() };
        if search.run(&accept) {
            let mut blocks = search.blocks;
            blocks.sort();
            let width = blocks.iter().map(Vec::len).max().unwrap_or(0);
            return Ok(Width { width, blocks });
        }
    }
    Ok(Width { width: m, blocks: vec![(0..m).collect()] })
}

struct Partition<'a> {
    p: &'a Profile,
    by_min: &'a [Vec<Vec<usize>>],
    w: usize,
    used: Vec<bool>,
    blocks: Vec<Vec<usize>>,
}

impl Partition<'_> {
    fn run(&mut self, accept: &dyn Fn(&Profile) -> bool) -> bool {
        let Some(a) = self.used.iter().position(|&u| !u) else {
            return accept(&contract_blocks(self.p, &self.blocks).expect("clone sets are contiguous"));
        };
        let by_min = self.by_min;
        let options: Vec<&[usize]> = by_min[a]
            .iter()
            .filter(|s| s.len() <= self.w && s.iter().all(|&x| !self.used[x]))
            .map(Vec::as_slice)
            .chain(std::iter::once(std::slice::from_ref(&a)))
            .collect();
        for block in options {
            block.iter().for_each(|&x| self.used[x] = true);
            self.blocks.push(block.to_vec());
            if self.run(accept) {
                return true;
            }
            self.blocks.pop();
            block.iter().for_each(|&x| self.used[x] = false);
        }
        false
    }
}

/// Replaces each block by one alternative numbered by the block's index.
/// `None` unless the blocks partition the alternatives and every voter
/// ranks each block contiguously.
pub fn contract_blocks(p: &Profile, blocks: &[Vec<usize>]) -> Option<Profile> {
    let mut block_of = vec![usize::MAX; p.m()];
    for (b, block) in blocks.iter().enumerate() {
        for &a in block {
            if a >= p.m() || block_of[a] != usize::MAX {
                return None;
            }
            block_of[a] = b;
        }
    }
    if block_of.contains(&usize::MAX) {
        return None;
    }
    let votes = p
        .votes()
        .map(|vote| {
            let mut out: Vec<usize> = Vec::with_capacity(blocks.len());
            for &a in vote {
                if out.last() != Some(&block_of[a]) {
                    out.push(block_of[a]);
                }
            }
            out
        })
        .collect();
    // a block split in some vote shows up twice and is rejected here
    Profile::new(votes).ok()
}
