//! JSON encodings of witnesses, certificates and results, shared by the
//! analysis report and the command-line tool.

use prefstruct_core::{Axis, VoterOrdering};
use serde_json::{json, Value};

use crate::distances::{DeletionResult, Removed, Width};
use crate::euclidean::{Embedding, NotEuclidean};
use crate::recognition::{Certificate, GsDecomposition, Tree};
use crate::winners::{Committee, KemenyRankings, Witness, YoungWinners};
use crate::Rational;

pub fn axis(a: &Axis) -> Value {
    json!({ "axis": a.order() })
}

pub fn order(o: &VoterOrdering) -> Value {
    json!({ "order": o.as_slice() })
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::Axis(a) => axis(a),
        Witness::Order(o) => order(o),
    }
}

pub fn axis_and_order(a: &Axis, o: &VoterOrdering) -> Value {
    json!({ "axis": a.order(), "order": o.as_slice() })
}

pub fn tree(t: &Tree) -> Value {
    json!({ "edges": t.edges().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>() })
}

/// A rational as `[numerator, denominator]` decimal strings.
pub fn rational(x: &Rational) -> Value {
    json!([x.numer().to_string(), x.denom().to_string()])
}

pub fn embedding(e: &Embedding) -> Value {
    json!({
        "voters": e.voters().iter().map(rational).collect::<Vec<_>>(),
        "alternatives": e.alternatives().iter().map(rational).collect::<Vec<_>>(),
    })
}

fn decomposition_tree(d: &GsDecomposition) -> Value {
    match d {
        GsDecomposition::Leaf(a) => json!(a),
        GsDecomposition::Split(x, y) => json!([decomposition_tree(x), decomposition_tree(y)]),
    }
}

/// Leaves are ids; a split is a two-element array.
pub fn decomposition(d: &GsDecomposition) -> Value {
    json!({ "decomposition": decomposition_tree(d) })
}

pub fn certificate(c: &Certificate) -> Value {
    json!({ "pattern": c.kind, "voters": c.voters, "alternatives": c.alternatives })
}

pub fn triple(t: &[usize; 3]) -> Value {
    json!({ "triple": t })
}

/// A non-membership reason that is not a forbidden pattern.
pub fn reason(tag: &str) -> Value {
    json!({ "reason": tag })
}

pub fn not_euclidean(e: &NotEuclidean) -> Value {
    match e {
        NotEuclidean::NotSinglePeaked(c) | NotEuclidean::NotSingleCrossing(c) => certificate(c),
        NotEuclidean::Infeasible(c) => {
            json!({ "reason": "no-embedding", "axis": c.axis.order(), "order": c.voter_order.as_slice() })
        }
        NotEuclidean::TooLarge { bits } => json!({ "reason": "solver-limit", "bits": bits }),
    }
}

pub fn committee(c: &Committee) -> Value {
    json!({ "committee": c.members, "score": c.score })
}

/// The count is a number when it fits in 64 bits and a decimal string
/// otherwise; it is null when too expensive to compute.
pub fn kemeny(k: &KemenyRankings) -> Value {
    let count = k.count.map(|c| u64::try_from(c).map_or_else(|_| json!(c.to_string()), |c| json!(c)));
    json!({ "rankings": k.rankings, "count": count, "truncated": k.truncated })
}

pub fn young(y: &YoungWinners) -> Value {
    json!({ "winners": y.winners, "score": y.score })
}

pub fn deletion(d: &DeletionResult) -> Value {
    let removed = match d.removed {
        Removed::Voters => "voters",
        Removed::Alternatives => "alternatives",
    };
    let mut v = json!({ "removed": removed, "deleted": d.deleted, "count": d.deleted.len() });
    if let (Value::Object(out), Value::Object(w)) = (&mut v, witness(&d.witness)) {
        out.extend(w);
    }
    v
}

pub fn width(w: &Width) -> Value {
    json!({ "width": w.width, "blocks": w.blocks })
}

/// Milliseconds, rounded to microseconds.
pub fn millis(d: std::time::Duration) -> Value {
    json!((d.as_secs_f64() * 1e6).round() / 1e3)
}

pub fn rank_bound_committee(c: &crate::winners::RankBoundCommittee) -> Value {
    json!({ "committee": c.members, "rank_bound": c.rank_bound })
}
