use prefstruct_core::Profile;

use super::certificate::{Certificate, CertificateKind};

/// Outcome of the value, best, medium and worst restriction tests. A `None`
/// field means the profile satisfies that restriction; otherwise it holds a
/// triple violating it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionReport {
    /// A Condorcet sub-profile on a triple where every alternative takes
    /// every place.
    pub value: Option<Certificate>,
    /// A triple in which every alternative is ranked first by someone.
    pub best: Option<[usize; 3]>,
    /// A triple in which every alternative is ranked second by someone.
    pub medium: Option<[usize; 3]>,
    /// A triple in which every alternative is ranked last by someone.
    pub worst: Option<[usize; 3]>,
}

impl RestrictionReport {
    pub fn is_value_restricted(&self) -> bool {
        self.value.is_none()
    }

    pub fn is_best_restricted(&self) -> bool {
        self.best.is_none()
    }

    pub fn is_medium_restricted(&self) -> bool {
        self.medium.is_none()
    }

    pub fn is_worst_restricted(&self) -> bool {
        self.worst.is_none()
    }
}

// The six orders of a triple (x, y, z) with x < y < z, as places of x, y, z.
const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Scans every triple once per voter, recording which of its six orders
/// occur (and a voter for each). `O(m^3 n)`.
pub fn value_restriction_report(p: &Profile) -> RestrictionReport {
    let m = p.m();
    let rank = p.rank_index();
    let mut report = RestrictionReport { value: None, best: None, medium: None, worst: None };
    for x in 0..m {
        for y in x + 1..m {
            for z in y + 1..m {
                let mut voter_for = [usize::MAX; 6];
                let mut found = 0;
                for i in 0..p.n() {
                    let (px, py, pz) = (rank.pos(i, x), rank.pos(i, y), rank.pos(i, z));
                    let places = [
                        (py < px) as usize + (pz < px) as usize,
                        (px < py) as usize + (pz < py) as usize,
                        (px < pz) as usize + (py < pz) as usize,
                    ];
                    let k = ORDERS.iter().position(|o| *o == places).expect("three distinct places");
                    if voter_for[k] == usize::MAX {
                        voter_for[k] = i;
                        found += 1;
                        if found == 6 {
                            break;
                        }
                    }
                }
                let triple = [x, y, z];
                let covers = |place: usize| {
                    (0..3).all(|alt| (0..6).any(|k| voter_for[k] != usize::MAX && ORDERS[k][alt] == place))
                };
                if report.best.is_none() && covers(0) {
                    report.best = Some(triple);
                }
                if report.medium.is_none() && covers(1) {
                    report.medium = Some(triple);
                }
                if report.worst.is_none() && covers(2) {
                    report.worst = Some(triple);
                }
                if report.value.is_none() && covers(0) && covers(1) && covers(2) {
                    report.value = condorcet_in(&voter_for, triple);
                    debug_assert!(report.value.is_some());
                }
            }
        }
    }
    report
}

/// One of the two cyclic families of orders, if all three of its members
/// occur.
fn condorcet_in(voter_for: &[usize; 6], [x, y, z]: [usize; 3]) -> Option<Certificate> {
    // x>y>z, y>z>x, z>x>y and x>z>y, z>y>x, y>x>z, as indices into ORDERS
    let forward = [0, 4, 3];
    let backward = [1, 5, 2];
    if forward.iter().all(|&k| voter_for[k] != usize::MAX) {
        let voters = forward.iter().map(|&k| voter_for[k]).collect();
        return Some(Certificate::new(CertificateKind::VrCondorcet, voters, vec![x, y, z]));
    }
    if backward.iter().all(|&k| voter_for[k] != usize::MAX) {
        let voters = backward.iter().map(|&k| voter_for[k]).collect();
        return Some(Certificate::new(CertificateKind::VrCondorcet, voters, vec![x, z, y]));
    }
    None
}
