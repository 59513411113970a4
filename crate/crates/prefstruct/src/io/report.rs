use std::time::Instant;

use prefstruct_core::Profile;
use serde::Serialize;
use serde_json::Value;

use super::json;
use crate::euclidean::recognize_1_euclidean;
use crate::recognition::{
    recognize_group_separable, recognize_sc_on_tree, recognize_single_caved, recognize_single_crossing,
    recognize_single_peaked, recognize_sp_on_tree, sc_certificate, value_restriction_report,
};

/// Bumped whenever the report layout changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DomainTag {
    SinglePeaked,
    SingleCaved,
    SingleCrossing,
    SinglePeakedSingleCrossing,
    #[serde(rename = "1-euclidean")]
    OneEuclidean,
    SinglePeakedOnTree,
    SingleCrossingOnTree,
    GroupSeparable,
    ValueRestricted,
    BestRestricted,
    MediumRestricted,
    WorstRestricted,
}

/// One domain's verdict: members carry a witness, non-members a
/// certificate. `wall_time_ms` is the only field that varies between runs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DomainEntry {
    pub domain: DomainTag,
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    pub wall_time_ms: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub alternatives: usize,
    pub voters: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub domains: Vec<DomainEntry>,
}

impl AnalysisReport {
    pub fn entry(&self, domain: DomainTag) -> Option<&DomainEntry> {
        self.domains.iter().find(|e| e.domain == domain)
    }
}

fn timed(domain: DomainTag, run: impl FnOnce() -> Result<Value, Value>) -> DomainEntry {
    let start = Instant::now();
    let outcome = run();
    let wall_time_ms = json::millis(start.elapsed());
    match outcome {
        Ok(w) => DomainEntry { domain, member: true, witness: Some(w), certificate: None, wall_time_ms },
        Err(c) => DomainEntry { domain, member: false, witness: None, certificate: Some(c), wall_time_ms },
    }
}

/// Runs every recognizer. Single-peakedness and single-crossingness are
/// computed first and their results reused by the combined domains; the
/// embedding search only runs when both hold.
pub fn analyze(p: &Profile) -> AnalysisReport {
    let mut domains = Vec::new();
    let mut sp = None;
    domains.push(timed(DomainTag::SinglePeaked, || {
        let r = recognize_single_peaked(p);
        sp = Some(r.clone());
        r.map(|a| json::axis(&a)).map_err(|c| json::certificate(&c))
    }));
    let sp = sp.expect("ran above");
    domains.push(timed(DomainTag::SingleCaved, || {
        recognize_single_caved(p).map(|a| json::axis(&a)).map_err(|c| json::certificate(&c))
    }));
    let mut sc = None;
    domains.push(timed(DomainTag::SingleCrossing, || {
        let r = recognize_single_crossing(p).ok_or_else(|| sc_certificate(p).expect("not single-crossing"));
        sc = Some(r.clone());
        r.map(|o| json::order(&o)).map_err(|c| json::certificate(&c))
    }));
    let sc = sc.expect("ran above");
    domains.push(timed(DomainTag::SinglePeakedSingleCrossing, || match (&sp, &sc) {
        (Ok(a), Ok(o)) => Ok(json::axis_and_order(a, o)),
        (Err(c), _) | (_, Err(c)) => Err(json::certificate(c)),
    }));
    domains.push(timed(DomainTag::OneEuclidean, || match (&sp, &sc) {
        (Ok(_), Ok(_)) => recognize_1_euclidean(p).map(|e| json::embedding(&e)).map_err(|e| json::not_euclidean(&e)),
        (Err(c), _) | (_, Err(c)) => Err(json::certificate(c)),
    }));
    domains.push(timed(DomainTag::SinglePeakedOnTree, || match &sp {
        // a path is a tree
        Ok(a) => Ok(json::tree(&path(a.order()))),
        Err(_) => recognize_sp_on_tree(p).map(|t| json::tree(&t)).ok_or_else(|| json::reason("no-tree")),
    }));
    domains.push(timed(DomainTag::SingleCrossingOnTree, || sc_on_tree(p)));
    domains.push(timed(DomainTag::GroupSeparable, || gs(p)));
    let triples = triples(p);
    let mut restriction = None;
    domains.push(timed(DomainTag::ValueRestricted, || {
        let r = value_restriction_report(p);
        let out = match &r.value {
            None => Ok(triples.clone()),
            Some(c) => Err(json::certificate(c)),
        };
        restriction = Some(r);
        out
    }));
    let r = restriction.expect("ran above");
    for (tag, found) in [
        (DomainTag::BestRestricted, r.best),
        (DomainTag::MediumRestricted, r.medium),
        (DomainTag::WorstRestricted, r.worst),
    ] {
        domains.push(timed(tag, || match found {
            None => Ok(triples.clone()),
            Some(t) => Err(json::triple(&t)),
        }));
    }
    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        alternatives: p.m(),
        voters: p.n(),
        names: p.names().map(<[String]>::to_vec),
        domains,
    }
}

/// Runs the recognizer for one domain on its own.
pub fn recognize_domain(p: &Profile, domain: DomainTag) -> DomainEntry {
    let sp = || recognize_single_peaked(p);
    let sc = || recognize_single_crossing(p).ok_or_else(|| sc_certificate(p).expect("not single-crossing"));
    timed(domain, || match domain {
        DomainTag::SinglePeaked => sp().map(|a| json::axis(&a)).map_err(|c| json::certificate(&c)),
        DomainTag::SingleCaved => recognize_single_caved(p).map(|a| json::axis(&a)).map_err(|c| json::certificate(&c)),
        DomainTag::SingleCrossing => sc().map(|o| json::order(&o)).map_err(|c| json::certificate(&c)),
        DomainTag::SinglePeakedSingleCrossing => crate::recognition::recognize_spsc(p)
            .map(|(a, o)| json::axis_and_order(&a, &o))
            .map_err(|c| json::certificate(&c)),
        DomainTag::OneEuclidean => recognize_1_euclidean(p).map(|e| json::embedding(&e)).map_err(|e| json::not_euclidean(&e)),
        DomainTag::SinglePeakedOnTree => match sp() {
            Ok(a) => Ok(json::tree(&path(a.order()))),
            Err(_) => recognize_sp_on_tree(p).map(|t| json::tree(&t)).ok_or_else(|| json::reason("no-tree")),
        },
        DomainTag::SingleCrossingOnTree => sc_on_tree(p),
        DomainTag::GroupSeparable => gs(p),
        DomainTag::ValueRestricted
        | DomainTag::BestRestricted
        | DomainTag::MediumRestricted
        | DomainTag::WorstRestricted => {
            let r = value_restriction_report(p);
            let found = match domain {
                DomainTag::ValueRestricted => return r.value.map_or_else(|| Ok(triples(p)), |c| Err(json::certificate(&c))),
                DomainTag::BestRestricted => r.best,
                DomainTag::MediumRestricted => r.medium,
                _ => r.worst,
            };
            found.map_or_else(|| Ok(triples(p)), |t| Err(json::triple(&t)))
        }
    })
}

fn triples(p: &Profile) -> Value {
    let m = p.m();
    serde_json::json!({ "triples_checked": m * m.saturating_sub(1) * m.saturating_sub(2) / 6 })
}

fn sc_on_tree(p: &Profile) -> Result<Value, Value> {
    match recognize_sc_on_tree(p) {
        Ok(Some(t)) => Ok(json::tree(&t)),
        Ok(None) => Err(json::reason("no-tree")),
        Err(e) => Err(serde_json::json!({ "reason": "too-large", "message": e.to_string() })),
    }
}

fn gs(p: &Profile) -> Result<Value, Value> {
    recognize_group_separable(p).map(|d| json::decomposition(&d)).ok_or_else(|| json::reason("no-split"))
}

fn path(order: &[usize]) -> crate::recognition::Tree {
    let edges = order.windows(2).map(|w| (w[0], w[1])).collect();
    crate::recognition::Tree::new(order.len(), edges).expect("a path spans its vertices")
}

/// Compact JSON with a fixed key order.
pub fn report_to_json(r: &AnalysisReport) -> String {
    serde_json::to_string(r).expect("reports serialize")
}
