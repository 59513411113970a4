//! `--oracle` cross-checks. Inputs above an oracle's cap are skipped.

use prefstruct::io::{DomainEntry, DomainTag};
use prefstruct::winners::ScoringVector;
use prefstruct::{condorcet_winners, Axis, Profile};
use prefstruct_oracle as oracle;
use serde_json::Value;

use crate::{rule_name, Failure, Metric, ModeArg, Rule, Structure};

type Checked = Result<(), Failure>;

fn agree<T: PartialEq + std::fmt::Debug>(what: &str, fast: T, slow: T) -> Checked {
    if fast == slow {
        Ok(())
    } else {
        Err(Failure::internal(format!("oracle disagrees on {what}: got {fast:?}, expected {slow:?}")))
    }
}

pub(crate) fn domain_entry(p: &Profile, entry: &DomainEntry) -> Checked {
    let sp = |q: &Profile| oracle::brute_sp(q).map(|axes| !axes.is_empty());
    let sc = |q: &Profile| {
        if q.dedup().0.n() > 8 {
            return None;
        }
        oracle::brute_sc(q).ok().map(|orders| !orders.is_empty())
    };
    let expected = match entry.domain {
        DomainTag::SinglePeaked => sp(p).ok(),
        DomainTag::SingleCaved => sp(&p.reversed()).ok(),
        DomainTag::SingleCrossing => sc(p),
        DomainTag::SinglePeakedSingleCrossing => match (sp(p).ok(), sc(p)) {
            (Some(a), Some(b)) => Some(a && b),
            _ => None,
        },
        DomainTag::OneEuclidean => oracle::brute_one_euclidean(p).ok(),
        DomainTag::SinglePeakedOnTree => oracle::brute_sp_on_tree(p).ok().map(|t| t.is_some()),
        DomainTag::SingleCrossingOnTree => oracle::brute_sc_on_tree(p).ok().map(|t| t.is_some()),
        DomainTag::GroupSeparable => oracle::brute_gs(p).ok(),
        DomainTag::ValueRestricted => Some(oracle::brute_restrictions(p).value),
        DomainTag::BestRestricted => Some(oracle::brute_restrictions(p).best),
        DomainTag::MediumRestricted => Some(oracle::brute_restrictions(p).medium),
        DomainTag::WorstRestricted => Some(oracle::brute_restrictions(p).worst),
    };
    match expected {
        Some(want) => agree(&format!("{:?} membership", entry.domain), entry.member, want),
        None => Ok(()),
    }
}

fn ids(v: &Value) -> Vec<usize> {
    v.as_array().map(|a| a.iter().filter_map(Value::as_u64).map(|x| x as usize).collect()).unwrap_or_default()
}

pub(crate) fn winners(p: &Profile, rule: Rule, k: usize, w: &ScoringVector, value: &Value) -> Checked {
    if value["applicable"] != Value::Bool(true) {
        return Ok(());
    }
    let name = rule_name(rule);
    match rule {
        Rule::Median => {
            let mut got = ids(&value["winners"]);
            got.sort_unstable();
            agree(name, got, condorcet_winners(p).weak)
        }
        Rule::Kemeny => {
            if value["truncated"] == Value::Bool(true) {
                return Ok(());
            }
            let Ok((mut want, _)) = oracle::brute_kemeny(p) else { return Ok(()) };
            let mut got: Vec<Vec<usize>> = value["rankings"].as_array().into_iter().flatten().map(ids).collect();
            got.sort();
            want.sort();
            agree(name, got, want)
        }
        Rule::CcUtil | Rule::CcEgal => {
            let mode = if rule == Rule::CcUtil { oracle::CcMode::Utilitarian } else { oracle::CcMode::Egalitarian };
            let Ok((best, score)) = oracle::brute_cc(p, k, w.weights(), mode) else { return Ok(()) };
            agree(&format!("{name} score"), value["score"].as_u64(), Some(score))?;
            let committee = ids(&value["committee"]);
            agree(&format!("{name} optimality"), best.contains(&committee), true)
        }
        Rule::Young => {
            let Ok((want, score)) = oracle::brute_strong_young(p) else { return Ok(()) };
            agree(name, (ids(&value["winners"]), value["score"].as_u64()), (want, Some(score as u64)))
        }
    }
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn distance(
    p: &Profile,
    domain: Structure,
    metric: Metric,
    axis: Option<&Axis>,
    k: Option<usize>,
    given_order: bool,
    mode: ModeArg,
    value: &Value,
) -> Checked {
    use oracle::{Deletion, Domain};
    let count = value["count"].as_u64().map(|c| c as usize);
    let optimum = |d: Domain, del: Deletion| oracle::brute_deletion(p, &d, del).ok().map(|(c, _)| c);
    match (domain, metric) {
        (Structure::SinglePeaked, Metric::VoterDel) => {
            let Some(best) = optimum(Domain::SinglePeaked, Deletion::Voters) else { return Ok(()) };
            match mode {
                ModeArg::Exact => agree("voter deletion", count, Some(best)),
                ModeArg::Heuristic => agree("heuristic ratio", count.is_some_and(|c| c <= 3 * best), true),
            }
        }
        (Structure::SingleCrossing, Metric::VoterDel) => {
            let d = if given_order { Domain::SingleCrossingInOrder } else { Domain::SingleCrossing };
            optimum(d, Deletion::Voters).map_or(Ok(()), |best| agree("voter deletion", count, Some(best)))
        }
        (Structure::SinglePeaked, Metric::AltDel) => {
            let d = axis.map_or(Domain::SinglePeaked, |a| Domain::SinglePeakedOn(a.order().to_vec()));
            optimum(d, Deletion::Alternatives).map_or(Ok(()), |best| agree("alternative deletion", count, Some(best)))
        }
        (Structure::SingleCrossing, Metric::AltDel) => {
            let Some(best) = optimum(Domain::SingleCrossingInOrder, Deletion::Alternatives) else { return Ok(()) };
            let budget = k.unwrap_or(p.m() - 1);
            agree("alternative deletion", count, (best <= budget).then_some(best))
        }
        (Structure::SingleCrossing, Metric::AltPartition) => {
            let Some(k) = k else { return Ok(()) };
            let Ok(want) = oracle::brute_alt_partition_sc_in_order(p, k) else { return Ok(()) };
            agree("alternative partition", value["feasible"].as_bool(), Some(want.is_some()))
        }
        (Structure::SinglePeaked, Metric::Swap) => {
            let Some(axis) = axis else { return Ok(()) };
            let got = ids(&value["per_voter"]);
            for (i, vote) in p.votes().enumerate() {
                if let Ok(want) = oracle::brute_swap_distance(vote, axis.order()) {
                    agree(&format!("swap distance of voter {i}"), got[i], want)?;
                }
            }
            Ok(())
        }
        (domain, Metric::Width) => {
            let d = match domain {
                Structure::SinglePeaked => Domain::SinglePeaked,
                Structure::SingleCrossing => Domain::SingleCrossing,
            };
            let Ok((want, _)) = oracle::brute_width(p, &d) else { return Ok(()) };
            agree("width", value["width"].as_u64(), Some(want as u64))
        }
        _ => Ok(()),
    }
}
