//! Dense-tableau phase-one simplex for `A x <= b, x >= 0`.

#[cfg(test)]
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed};

/// An ordered field the solver can pivot in.
pub trait LpScalar: Clone + PartialOrd + Signed + FromPrimitive + std::fmt::Debug {
    /// Values within this distance of zero count as zero.
    fn tolerance() -> Self {
        Self::zero()
    }

    /// Storage size, for bounding exact arithmetic. Zero for fixed-width types.
    fn bits(&self) -> u64 {
        0
    }
}

impl LpScalar for f64 {
    fn tolerance() -> Self {
        1e-9
    }
}

impl LpScalar for BigRational {
    fn bits(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }
}

/// Outcome of a feasibility solve.
#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Feasibility<T> {
    Feasible(Vec<T>),
    Infeasible,
    /// An intermediate value needed more bits than allowed.
    TooLarge(u64),
}

/// Finds `x >= 0` with `rows[r] . x <= rhs[r]` for every row. Bland's rule
/// keeps the pivoting finite.
pub(crate) fn feasible_point<T: LpScalar>(rows: &[Vec<T>], rhs: &[T], max_bits: u64) -> Feasibility<T> {
    let vars = rows.first().map_or(0, Vec::len);
    let r = rows.len();
    let eps = T::tolerance();
    // Columns: structural vars, one slack per row, one artificial per row
    // whose right-hand side is negative, then the right-hand side.
    let needs_art: Vec<bool> = rhs.iter().map(|b| *b < T::zero()).collect();
    let arts = needs_art.iter().filter(|&&x| x).count();
    let width = vars + r + arts + 1;
    let mut tab = vec![vec![T::zero(); width]; r];
    let mut basis = vec![0usize; r];
    let mut art = vars + r;
    for k in 0..r {
        let flip = needs_art[k];
        let sign = if flip { -T::one() } else { T::one() };
        for j in 0..vars {
            tab[k][j] = rows[k][j].clone() * sign.clone();
        }
        tab[k][vars + k] = sign.clone();
        tab[k][width - 1] = rhs[k].clone() * sign;
        if flip {
            tab[k][art] = T::one();
            basis[k] = art;
            art += 1;
        } else {
            basis[k] = vars + k;
        }
    }
    // objective: minimise the sum of artificials, kept as reduced costs
    let mut cost = vec![T::zero(); width];
    for k in 0..r {
        if needs_art[k] {
            for j in 0..width {
                if j < vars + r || j == width - 1 {
                    cost[j] = cost[j].clone() - tab[k][j].clone();
                }
            }
        }
    }
    while let Some(enter) = (0..width - 1).find(|&j| cost[j] < -eps.clone()) {
        let mut leave: Option<usize> = None;
        for k in 0..r {
            if tab[k][enter] > eps {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let lhs = tab[k][width - 1].clone() * tab[l][enter].clone();
                        let rhs = tab[l][width - 1].clone() * tab[k][enter].clone();
                        lhs < rhs || (lhs == rhs && basis[k] < basis[l])
                    }
                };
                if better {
                    leave = Some(k);
                }
            }
        }
        let Some(pivot_row) = leave else {
            // unbounded below cannot happen: artificials are non-negative
            break;
        };
        let pivot = tab[pivot_row][enter].clone();
        for v in tab[pivot_row].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        let row = tab[pivot_row].clone();
        for (k, line) in tab.iter_mut().enumerate() {
            if k == pivot_row || line[enter].is_zero() {
                continue;
            }
            let f = line[enter].clone();
            for (v, p) in line.iter_mut().zip(&row) {
                if !p.is_zero() {
                    *v = v.clone() - f.clone() * p.clone();
                }
            }
        }
        let f = cost[enter].clone();
        for (v, p) in cost.iter_mut().zip(&row) {
            if !p.is_zero() {
                *v = v.clone() - f.clone() * p.clone();
            }
        }
        basis[pivot_row] = enter;
        let widest = row.iter().map(LpScalar::bits).max().unwrap_or(0);
        if widest > max_bits {
            return Feasibility::TooLarge(widest);
        }
    }
    // the objective value is minus the last reduced-cost entry
    if -cost[width - 1].clone() > eps {
        return Feasibility::Infeasible;
    }
    let mut x = vec![T::zero(); vars];
    for k in 0..r {
        if basis[k] < vars {
            x[basis[k]] = tab[k][width - 1].clone();
        }
    }
    Feasibility::Feasible(x)
}

#[cfg(test)]
pub(crate) fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
