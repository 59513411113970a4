use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use prefstruct_core::Profile;

use crate::{brute_sp, cap, Result};

type Row = (Vec<BigRational>, BigRational);

/// Whether some placement of voters and alternatives on a line makes every
/// voter prefer nearer alternatives.
///
/// Tries every axis on which the profile is single-peaked. For a fixed axis
/// the gaps between neighbouring alternatives are the unknowns; each voter's
/// point must lie above the midpoints of pairs it ranks rightward and below
/// those it ranks leftward, which reduces to linear inequalities between
/// midpoints. Feasibility is decided by Fourier-Motzkin elimination over
/// exact rationals.
pub fn brute_one_euclidean(p: &Profile) -> Result<bool> {
    cap("alternatives", p.m(), 6)?;
    let m = p.m();
    if m <= 2 {
        return Ok(true);
    }
    for axis in brute_sp(p)? {
        let order = axis.order();
        // mirror images give the same system
        if order[0] > order[m - 1] {
            continue;
        }
        if feasible(&system(p, order)) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn system(p: &Profile, order: &[usize]) -> Vec<Row> {
    let m = p.m();
    let gaps = m - 1;
    let mut at = vec![0; m];
    for (k, &a) in order.iter().enumerate() {
        at[a] = k;
    }
    // twice the midpoint of positions k < l, as gap coefficients
    let mid2 = |k: usize, l: usize| -> Vec<BigRational> {
        (0..gaps)
            .map(|t| {
                let c = (t < k) as i64 + (t < l) as i64;
                BigRational::from_integer(BigInt::from(c))
            })
            .collect()
    };
    let mut rows = Vec::new();
    for t in 0..gaps {
        let mut coef = vec![BigRational::zero(); gaps];
        coef[t] = BigRational::one();
        rows.push((coef, BigRational::one()));
    }
    for vote in p.votes() {
        let mut rank = vec![0; m];
        for (r, &a) in vote.iter().enumerate() {
            rank[a] = r;
        }
        let (mut lower, mut upper) = (Vec::new(), Vec::new());
        for k in 0..m {
            for l in k + 1..m {
                if rank[order[k]] < rank[order[l]] {
                    upper.push(mid2(k, l));
                } else {
                    lower.push(mid2(k, l));
                }
            }
        }
        // voter point x: x >= mid + 1 for lower, x <= mid - 1 for upper,
        // so 2*mid_u - 2*mid_l >= 4
        for u in &upper {
            for l in &lower {
                let coef = u.iter().zip(l).map(|(a, b)| a - b).collect();
                rows.push((coef, BigRational::from_integer(BigInt::from(4))));
            }
        }
    }
    rows
}

fn normalize(rows: Vec<Row>) -> Vec<Row> {
    let mut best: HashMap<Vec<BigRational>, BigRational> = HashMap::new();
    for (coef, rhs) in rows {
        let scale = coef.iter().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero);
        let (coef, rhs) = if scale.is_zero() {
            (coef, rhs)
        } else {
            (coef.iter().map(|c| c / &scale).collect(), rhs / &scale)
        };
        best.entry(coef).and_modify(|r| {
            if rhs > *r {
                *r = rhs.clone();
            }
        }).or_insert(rhs);
    }
    best.into_iter().collect()
}

/// Decides `coef . y >= rhs` for all rows by eliminating variables in turn.
fn feasible(rows: &[Row]) -> bool {
    let mut rows = normalize(rows.to_vec());
    let vars = rows.first().map(|r| r.0.len()).unwrap_or(0);
    for v in 0..vars {
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for row in rows {
            if row.0[v].is_positive() {
                pos.push(row);
            } else if row.0[v].is_negative() {
                neg.push(row);
            } else {
                keep.push(row);
            }
        }
        for (pc, pr) in &pos {
            for (nc, nr) in &neg {
                let (a, b) = (&pc[v], -&nc[v]);
                let coef = pc.iter().zip(nc).map(|(x, y)| x * &b + y * a).collect();
                keep.push((coef, pr * &b + nr * a));
            }
        }
        rows = normalize(keep);
    }
    rows.iter().all(|(_, rhs)| !rhs.is_positive())
}
