//! The `prefstruct` command-line tool.
//!
//! Exit codes: 0 when the query was answered (whether or not the profile is
//! a member), 1 for usage, input and precondition errors, 2 when an
//! internal check fails (including `--oracle` disagreements).

mod check;
mod pretty;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use prefstruct::distances::{
    sc_alt_deletion_exact, sc_alt_partition, sc_voter_deletion, sc_voter_deletion_given_order, sp_alt_deletion,
    sp_alt_deletion_fixed_axis, sp_voter_deletion, structured_width, swap_distance_to_axis, SearchMode, WidthDomain,
};
use prefstruct::generate::{GenSpec, Model};
use prefstruct::io::{self, json, DomainTag};
use prefstruct::recognition::{recognize_single_crossing, recognize_single_peaked};
use prefstruct::winners::{
    cc_egalitarian_sp, cc_sc, cc_score, cc_utilitarian_sp, kemeny_structured, median_voter_winners,
    strong_young_winners_structured, CcMode, ScoringVector, Witness,
};
use prefstruct::{Axis, Profile};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "prefstruct", version, about = "Recognize structured preference profiles and exploit the structure")]
pub struct Cli {
    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Cross-check answers against brute-force oracles when the input is small
    /// (also enabled by PREFSTRUCT_ORACLE=1).
    #[arg(long, global = true)]
    pub oracle: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test membership in one domain; prints a witness or a certificate.
    Recognize {
        #[arg(long, value_enum)]
        domain: DomainArg,
        /// Profile file, or '-' for standard input.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Run every recognizer and print one report per input file.
    Analyze {
        #[arg(default_value = "-")]
        inputs: Vec<String>,
    },
    /// Compute winners, using a single-peaked axis or single-crossing order
    /// found in the profile.
    Winners {
        #[arg(long, value_enum)]
        rule: Rule,
        /// Committee size for the Chamberlin-Courant rules.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Scores::Borda)]
        scores: Scores,
        /// Score per rank position for `--scores custom`, best first.
        #[arg(long, value_delimiter = ',')]
        weights: Vec<u64>,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Measure the distance to a domain.
    Distance {
        #[arg(long, value_enum)]
        domain: Structure,
        #[arg(long, value_enum)]
        metric: Metric,
        /// Fixed axis as 1-based ids (`alt-del` and `swap` on single-peaked).
        #[arg(long, value_delimiter = ',')]
        axis: Option<Vec<usize>>,
        /// Budget for single-crossing `alt-del` and class count for `alt-partition`.
        #[arg(long)]
        k: Option<usize>,
        /// Search strategy for single-peaked `voter-del`.
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        /// Keep the voters in file order (single-crossing `voter-del`).
        #[arg(long)]
        given_order: bool,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Write a generated profile in the file format.
    Generate {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainArg {
    SinglePeaked,
    SingleCaved,
    SingleCrossing,
    Spsc,
    #[value(name = "1-euclidean")]
    OneEuclidean,
    SpTree,
    ScTree,
    GroupSeparable,
    ValueRestricted,
    BestRestricted,
    MediumRestricted,
    WorstRestricted,
}

impl DomainArg {
    fn tag(self) -> DomainTag {
        match self {
            DomainArg::SinglePeaked => DomainTag::SinglePeaked,
            DomainArg::SingleCaved => DomainTag::SingleCaved,
            DomainArg::SingleCrossing => DomainTag::SingleCrossing,
            DomainArg::Spsc => DomainTag::SinglePeakedSingleCrossing,
            DomainArg::OneEuclidean => DomainTag::OneEuclidean,
            DomainArg::SpTree => DomainTag::SinglePeakedOnTree,
            DomainArg::ScTree => DomainTag::SingleCrossingOnTree,
            DomainArg::GroupSeparable => DomainTag::GroupSeparable,
            DomainArg::ValueRestricted => DomainTag::ValueRestricted,
            DomainArg::BestRestricted => DomainTag::BestRestricted,
            DomainArg::MediumRestricted => DomainTag::MediumRestricted,
            DomainArg::WorstRestricted => DomainTag::WorstRestricted,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    Median,
    Kemeny,
    CcUtil,
    CcEgal,
    Young,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scores {
    Borda,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Structure {
    #[value(name = "single-peaked", alias = "sp")]
    SinglePeaked,
    #[value(name = "single-crossing", alias = "sc")]
    SingleCrossing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    VoterDel,
    AltDel,
    AltPartition,
    Swap,
    Width,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Heuristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    ImpartialCulture,
    SpUniform,
    ScMax,
    GsMax,
    CondorcetCycle,
    EuclidLine,
}

/// A failed command: exit status and message.
#[derive(Debug)]
pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub(crate) fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    pub(crate) fn internal(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<prefstruct::Error> for Failure {
    fn from(e: prefstruct::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    let oracle = cli.oracle || std::env::var("PREFSTRUCT_ORACLE").is_ok_and(|v| v == "1");
    let result = catch_unwind(AssertUnwindSafe(|| execute(&cli, oracle, stdin, stdout)))
        .unwrap_or_else(|_| Err(Failure::internal("internal error: a consistency check failed")));
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn read_input(name: &str, stdin: &mut dyn Read) -> Outcome<Profile> {
    let text = if name == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(name).map_err(|e| Failure::usage(format!("cannot read {name}: {e}")))?
    };
    io::parse_profile(&text).map_err(|e| Failure::usage(format!("{name}: {e}")))
}

fn emit(out: &mut dyn Write, value: &Value, pretty: bool) -> Outcome<()> {
    let text = if pretty { pretty::render(value) } else { value.to_string() };
    writeln!(out, "{text}").map_err(|e| Failure::usage(format!("cannot write output: {e}")))
}

fn execute(cli: &Cli, oracle: bool, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Outcome<()> {
    match &cli.command {
        Command::Recognize { domain, input } => {
            let p = read_input(input, stdin)?;
            let entry = io::recognize_domain(&p, domain.tag());
            if oracle {
                check::domain_entry(&p, &entry)?;
            }
            emit(stdout, &serde_json::to_value(&entry).expect("entries serialize"), cli.pretty)
        }
        Command::Analyze { inputs } => {
            for input in inputs {
                let p = read_input(input, stdin)?;
                let report = io::analyze(&p);
                if oracle {
                    for entry in &report.domains {
                        check::domain_entry(&p, entry)?;
                    }
                }
                let value = serde_json::to_value(&report).expect("reports serialize");
                if cli.pretty {
                    emit(stdout, &value, true)?;
                } else {
                    writeln!(stdout, "{}", io::report_to_json(&report)).map_err(|e| Failure::usage(e.to_string()))?;
                }
            }
            Ok(())
        }
        Command::Winners { rule, k, scores, weights, input } => {
            let p = read_input(input, stdin)?;
            let w = match scores {
                Scores::Borda => ScoringVector::borda(p.m()),
                Scores::Custom => {
                    if weights.len() != p.m() {
                        return Err(Failure::usage(format!("--weights needs {} values, got {}", p.m(), weights.len())));
                    }
                    ScoringVector::new(weights.clone())?
                }
            };
            let value = winners(&p, *rule, *k, &w)?;
            if oracle {
                check::winners(&p, *rule, *k, &w, &value)?;
            }
            emit(stdout, &value, cli.pretty)
        }
        Command::Distance { domain, metric, axis, k, mode, given_order, input } => {
            let p = read_input(input, stdin)?;
            let axis = axis.as_deref().map(|ids| parse_axis(ids, p.m())).transpose()?;
            let value = distance(&p, *domain, *metric, axis.as_ref(), *k, *mode, *given_order)?;
            if oracle {
                check::distance(&p, *domain, *metric, axis.as_ref(), *k, *given_order, *mode, &value)?;
            }
            emit(stdout, &value, cli.pretty)
        }
        Command::Generate { model, n, m, seed, output } => {
            let model = match model {
                ModelArg::ImpartialCulture => Model::ImpartialCulture,
                ModelArg::SpUniform => Model::SpUniform,
                ModelArg::ScMax => Model::ScMax,
                ModelArg::GsMax => Model::GsMax,
                ModelArg::CondorcetCycle => Model::CondorcetCycle,
                ModelArg::EuclidLine => Model::EuclidLine,
            };
            let p = GenSpec { model, n: *n, m: *m, seed: *seed }.generate()?;
            let text = io::write_profile(&p);
            match output {
                Some(path) => std::fs::write(path, text)
                    .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
                None => stdout.write_all(text.as_bytes()).map_err(|e| Failure::usage(e.to_string())),
            }
        }
    }
}

fn parse_axis(ids: &[usize], m: usize) -> Outcome<Axis> {
    if ids.contains(&0) {
        return Err(Failure::usage("--axis ids are 1-based"));
    }
    Axis::new(ids.iter().map(|a| a - 1).collect())
        .ok()
        .filter(|a| a.len() == m)
        .ok_or_else(|| Failure::usage(format!("--axis must list each of the {m} alternatives once")))
}

/// A single-peaked axis if there is one, else a single-crossing order.
fn structure(p: &Profile) -> Result<Witness, Value> {
    match recognize_single_peaked(p) {
        Ok(axis) => Ok(Witness::Axis(axis)),
        Err(sp) => match recognize_single_crossing(p) {
            Some(order) => Ok(Witness::Order(order)),
            None => Err(json!({ "reason": "neither single-peaked nor single-crossing", "single_peaked": json::certificate(&sp) })),
        },
    }
}

fn not_applicable(rule: &str, why: Value) -> Value {
    json!({ "rule": rule, "applicable": false, "certificate": why })
}

fn with_witness(mut value: Value, witness: &Witness) -> Value {
    if let (Value::Object(out), Value::Object(w)) = (&mut value, json::witness(witness)) {
        out.extend(w);
    }
    value
}

pub(crate) fn rule_name(rule: Rule) -> &'static str {
    match rule {
        Rule::Median => "median",
        Rule::Kemeny => "kemeny",
        Rule::CcUtil => "cc-util",
        Rule::CcEgal => "cc-egal",
        Rule::Young => "young",
    }
}

fn winners(p: &Profile, rule: Rule, k: usize, w: &ScoringVector) -> Outcome<Value> {
    let name = rule_name(rule);
    if rule == Rule::Kemeny {
        return Ok(match kemeny_structured(p) {
            Some(r) => {
                let mut v = json!({ "rule": name, "applicable": true });
                if let (Value::Object(out), Value::Object(extra)) = (&mut v, json::kemeny(&r)) {
                    out.extend(extra);
                }
                v
            }
            None => not_applicable(name, json::reason("majority-cycle")),
        });
    }
    let witness = match (rule, structure(p)) {
        (Rule::Median, _) => match recognize_single_peaked(p) {
            Ok(axis) => Witness::Axis(axis),
            Err(c) => return Ok(not_applicable(name, json::certificate(&c))),
        },
        (_, Ok(w)) => w,
        (_, Err(why)) => return Ok(not_applicable(name, why)),
    };
    let body = match (rule, &witness) {
        (Rule::Median, Witness::Axis(axis)) => json!({ "winners": median_voter_winners(p, axis)? }),
        (Rule::Young, _) => json::young(&strong_young_winners_structured(p, &witness)?),
        (Rule::CcUtil, Witness::Axis(axis)) => json::committee(&cc_utilitarian_sp(p, axis, k, w)?),
        (Rule::CcEgal, Witness::Axis(axis)) => {
            let c = cc_egalitarian_sp(p, axis, k)?;
            let score = cc_score(p, &c.members, w, CcMode::Egalitarian);
            json!({ "committee": c.members, "score": score, "rank_bound": c.rank_bound })
        }
        (Rule::CcUtil | Rule::CcEgal, Witness::Order(order)) => {
            let mode = if rule == Rule::CcUtil { CcMode::Utilitarian } else { CcMode::Egalitarian };
            json::committee(&cc_sc(p, order, k, w, mode)?)
        }
        _ => unreachable!("median always has an axis"),
    };
    let mut v = json!({ "rule": name, "applicable": true });
    if let (Value::Object(out), Value::Object(extra)) = (&mut v, body) {
        out.extend(extra);
    }
    Ok(with_witness(v, &witness))
}

fn distance(
    p: &Profile,
    domain: Structure,
    metric: Metric,
    axis: Option<&Axis>,
    k: Option<usize>,
    mode: ModeArg,
    given_order: bool,
) -> Outcome<Value> {
    let mode = match mode {
        ModeArg::Exact => SearchMode::Exact,
        ModeArg::Heuristic => SearchMode::Heuristic,
    };
    let value = match (domain, metric) {
        (Structure::SinglePeaked, Metric::VoterDel) => json::deletion(&sp_voter_deletion(p, mode)?),
        (Structure::SingleCrossing, Metric::VoterDel) if given_order => json::deletion(&sc_voter_deletion_given_order(p)),
        (Structure::SingleCrossing, Metric::VoterDel) => json::deletion(&sc_voter_deletion(p)),
        (Structure::SinglePeaked, Metric::AltDel) => match axis {
            Some(axis) => json::deletion(&sp_alt_deletion_fixed_axis(p, axis)?),
            None => json::deletion(&sp_alt_deletion(p)?),
        },
        (Structure::SingleCrossing, Metric::AltDel) => {
            let budget = k.unwrap_or(p.m() - 1);
            match sc_alt_deletion_exact(p, budget) {
                Some(d) => json::deletion(&d),
                None => json!({ "removed": "alternatives", "feasible": false, "budget": budget }),
            }
        }
        (Structure::SingleCrossing, Metric::AltPartition) => {
            let k = k.ok_or_else(|| Failure::usage("alt-partition needs --k"))?;
            match sc_alt_partition(p, k) {
                Some(classes) => json!({ "feasible": true, "classes": classes }),
                None => json!({ "feasible": false, "classes": Value::Null }),
            }
        }
        (Structure::SinglePeaked, Metric::Swap) => {
            let axis = axis.ok_or_else(|| Failure::usage("swap needs --axis"))?;
            let per_voter: Vec<usize> = p.votes().map(|v| swap_distance_to_axis(v, axis)).collect();
            json!({ "axis": axis.order(), "total": per_voter.iter().sum::<usize>(), "per_voter": per_voter })
        }
        (domain, Metric::Width) => {
            let d = match domain {
                Structure::SinglePeaked => WidthDomain::SinglePeaked,
                Structure::SingleCrossing => WidthDomain::SingleCrossing,
            };
            json::width(&structured_width(p, d)?)
        }
        (Structure::SinglePeaked, Metric::AltPartition) => {
            return Err(Failure::usage("alt-partition is only available for single-crossing"))
        }
        (Structure::SingleCrossing, Metric::Swap) => {
            return Err(Failure::usage("swap is only available for single-peaked with a fixed axis"))
        }
    };
    Ok(value)
}
