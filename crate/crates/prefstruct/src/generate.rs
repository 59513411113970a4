//! Seeded generators for random and extremal profiles.
//!
//! All randomness comes from `ChaCha8Rng` seeded with the given `u64`, so a
//! seed gives the same profile on every platform.

use num_bigint::BigInt;
use prefstruct_core::{Axis, Profile};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{limit, Error, Result};
use crate::euclidean::Embedding;
use crate::Rational;

/// Largest `m` accepted by [`gs_max_profile`].
pub const GS_MAX_ALTERNATIVES: usize = 16;

/// A generator and its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    ImpartialCulture,
    /// Single-peaked on the identity axis.
    SpUniform,
    ScMax,
    GsMax,
    CondorcetCycle,
    EuclidLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
}

impl GenSpec {
    /// Runs the generator. Extremal models ignore `n` and `seed`, and
    /// `CondorcetCycle` uses `m` as the number of voters too.
    pub fn generate(&self) -> Result<Profile> {
        let GenSpec { model, n, m, seed } = *self;
        match model {
            Model::ImpartialCulture => impartial_culture(n, m, seed),
            Model::SpUniform => sp_uniform_on_axis(n, m, seed, &Axis::identity(m)),
            Model::ScMax => max_sc_profile(m),
            Model::GsMax => gs_max_profile(m),
            Model::CondorcetCycle => condorcet_cycle_profile(m),
            Model::EuclidLine => euclid_line(n, m, seed).map(|(p, _)| p),
        }
    }
}

fn check_sizes(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::Precondition(format!("need at least one voter and one alternative, got n = {n}, m = {m}")));
    }
    Ok(())
}

/// `n` independent uniformly random votes.
pub fn impartial_culture(n: usize, m: usize, seed: u64) -> Result<Profile> {
    check_sizes(n, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let votes = (0..n)
        .map(|_| {
            let mut v: Vec<usize> = (0..m).collect();
            v.shuffle(&mut rng);
            v
        })
        .collect();
    Ok(Profile::new(votes)?)
}

/// `n` votes drawn uniformly from the `2^(m-1)` votes single-peaked on
/// `axis`: the vote is filled from the bottom, each time taking one of the
/// two ends of what is left of the axis with probability one half.
pub fn sp_uniform_on_axis(n: usize, m: usize, seed: u64, axis: &Axis) -> Result<Profile> {
    check_sizes(n, m)?;
    if axis.len() != m {
        return Err(Error::Precondition(format!("axis has {} alternatives, expected {m}", axis.len())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = axis.order();
    let votes = (0..n)
        .map(|_| {
            let (mut lo, mut hi) = (0, m - 1);
            let mut v = Vec::with_capacity(m);
            while lo < hi {
                if rng.gen::<bool>() {
                    v.push(order[lo]);
                    lo += 1;
                } else {
                    v.push(order[hi]);
                    hi -= 1;
                }
            }
            v.push(order[lo]);
            v.reverse();
            v
        })
        .collect();
    Ok(Profile::new(votes)?)
}

/// `C(m,2) + 1` distinct votes, single-crossing in order: starting from
/// `0, 1, ..., m-1`, alternative 0 sinks to the bottom one swap at a time,
/// then alternative 1, and so on.
pub fn max_sc_profile(m: usize) -> Result<Profile> {
    check_sizes(1, m)?;
    let mut v: Vec<usize> = (0..m).collect();
    let mut votes = vec![v.clone()];
    for sunk in 0..m {
        let floor = m - sunk;
        for at in 0..floor - 1 {
            v.swap(at, at + 1);
            votes.push(v.clone());
        }
    }
    Ok(Profile::new(votes)?)
}

/// `2^(m-1)` distinct group-separable votes: each vote over the first
/// `m - 1` alternatives is extended twice, with alternative `m - 1` first
/// and with it last.
pub fn gs_max_profile(m: usize) -> Result<Profile> {
    check_sizes(1, m)?;
    limit("alternatives", m, GS_MAX_ALTERNATIVES)?;
    let mut votes: Vec<Vec<usize>> = vec![vec![0]];
    for a in 1..m {
        votes = votes
            .into_iter()
            .flat_map(|v| {
                let mut first = vec![a];
                first.extend_from_slice(&v);
                let mut last = v;
                last.push(a);
                [first, last]
            })
            .collect();
    }
    Ok(Profile::new(votes)?)
}

/// `d` voters over `d` alternatives; voter `i` ranks `i, i+1, ...`
/// cyclically.
pub fn condorcet_cycle_profile(d: usize) -> Result<Profile> {
    if d < 3 {
        return Err(Error::Precondition(format!("a cycle needs at least three alternatives, got {d}")));
    }
    Ok(Profile::new((0..d).map(|i| (0..d).map(|k| (i + k) % d).collect()).collect())?)
}

/// Random voters and alternatives on a line with integer coordinates in
/// `0..8(m^2 + n)`, and the profile they induce. Alternatives are distinct
/// and a voter equidistant from two alternatives is redrawn.
pub fn euclid_line(n: usize, m: usize, seed: u64) -> Result<(Profile, Embedding)> {
    check_sizes(n, m)?;
    let range = 8 * (m * m + n) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut alternatives: Vec<i64> = Vec::with_capacity(m);
    while alternatives.len() < m {
        let y = rng.gen_range(0..range);
        if !alternatives.contains(&y) {
            alternatives.push(y);
        }
    }
    // 2x = y_a + y_b exactly when x is equidistant from a and b
    let mut midpoints: Vec<i64> = Vec::new();
    for (k, &a) in alternatives.iter().enumerate() {
        midpoints.extend(alternatives[k + 1..].iter().map(|&b| a + b));
    }
    midpoints.sort_unstable();
    let mut voters = Vec::with_capacity(n);
    while voters.len() < n {
        let x = rng.gen_range(0..range);
        if midpoints.binary_search(&(2 * x)).is_err() {
            voters.push(x);
        }
    }
    let votes = voters
        .iter()
        .map(|&x| {
            let mut v: Vec<usize> = (0..m).collect();
            v.sort_by_key(|&a| (alternatives[a] - x).abs());
            v
        })
        .collect();
    let exact = |xs: &[i64]| xs.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect();
    Ok((Profile::new(votes)?, Embedding::new(exact(&voters), exact(&alternatives))))
}
