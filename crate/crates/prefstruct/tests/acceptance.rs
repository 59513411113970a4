//! Acceptance suite. Runs without the libtest harness so that every criterion
//! prints exactly one PASS or FAIL line; the process exits non-zero if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use prefstruct::distances::{
    contract_blocks, crossing_graph, sc_alt_deletion_exact, sc_alt_partition, sc_voter_deletion,
    sc_voter_deletion_given_order, sp_alt_deletion, sp_alt_deletion_fixed_axis, sp_voter_deletion,
    structured_width, swap_distance_to_axis, SearchMode, Width, WidthDomain,
};
use prefstruct::euclidean::{compatible_axis, recognize_1_euclidean, Embedding, NotEuclidean};
use prefstruct::generate::{euclid_line, gs_max_profile, max_sc_profile, sp_uniform_on_axis};
use prefstruct::recognition::{
    all_single_peaked_axes, clone_sets, is_single_crossing_given_order, is_single_peaked_on, maximal_clone_sets,
    recognize_group_separable, recognize_sc_on_tree, recognize_single_caved, recognize_single_crossing,
    recognize_single_peaked, recognize_sp_on_tree, recognize_sp_via_c1p, recognize_spsc, sc_certificate,
    value_restriction_report, CertificateKind,
};
use prefstruct::winners::{
    cc_egalitarian_sp, cc_sc, cc_utilitarian_sp, kemeny_structured, median_voter_winners,
    strong_young_winners_structured, CcMode, ScoringVector, Witness,
};
use prefstruct::{condorcet_winners, majority_relation, Axis, Profile, Rational};
use prefstruct_oracle as oracle;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Collects failures; keeps the first few messages for the report.
#[derive(Default)]
struct Tally {
    checks: u64,
    failures: u64,
    messages: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.messages.len() < 5 {
                self.messages.push(what());
            }
        }
    }

    fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn letters(rows: &[&str]) -> Profile {
    Profile::from_letter_rows(rows).expect("well-formed rows")
}

fn random_vote(rng: &mut ChaCha8Rng, m: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..m).collect();
    v.shuffle(rng);
    v
}

fn impartial(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Profile {
    Profile::new((0..n).map(|_| random_vote(rng, m)).collect()).expect("valid votes")
}

fn random_sp(rng: &mut ChaCha8Rng, n: usize, m: usize) -> (Profile, Axis) {
    let axis = Axis::new(random_vote(rng, m)).expect("permutation");
    let p = sp_uniform_on_axis(n, m, rng.gen(), &axis).expect("valid sizes");
    (p, axis)
}

/// Every vote along a random sequence of adjacent swaps from a random vote
/// to its reverse, each pair swapped once.
fn sc_path(rng: &mut ChaCha8Rng, m: usize) -> Vec<Vec<usize>> {
    let start = random_vote(rng, m);
    let mut pos = vec![0; m];
    for (k, &a) in start.iter().enumerate() {
        pos[a] = k;
    }
    let mut cur = start;
    let mut path = vec![cur.clone()];
    loop {
        let open: Vec<usize> = (0..m.saturating_sub(1)).filter(|&i| pos[cur[i]] < pos[cur[i + 1]]).collect();
        let Some(&i) = open.choose(rng) else { break };
        cur.swap(i, i + 1);
        path.push(cur.clone());
    }
    path
}

/// A single-crossing profile in path order, and the same voters shuffled.
fn random_sc(rng: &mut ChaCha8Rng, n: usize, m: usize) -> (Profile, Profile) {
    let path = sc_path(rng, m);
    let mut picks: Vec<usize> = (0..n).map(|_| rng.gen_range(0..path.len())).collect();
    picks.sort_unstable();
    let ordered = Profile::new(picks.iter().map(|&k| path[k].clone()).collect()).expect("valid votes");
    let mut shuffled: Vec<usize> = (0..n).collect();
    shuffled.shuffle(rng);
    let mixed = ordered.restrict_voters(&shuffled).expect("valid voters");
    (ordered, mixed)
}

enum Split {
    Leaf(usize),
    Node(Box<Split>, Box<Split>),
}

fn random_split(rng: &mut ChaCha8Rng, items: &[usize]) -> Split {
    if items.len() == 1 {
        return Split::Leaf(items[0]);
    }
    let cut = rng.gen_range(1..items.len());
    Split::Node(Box::new(random_split(rng, &items[..cut])), Box::new(random_split(rng, &items[cut..])))
}

fn split_vote(rng: &mut ChaCha8Rng, s: &Split, out: &mut Vec<usize>) {
    match s {
        Split::Leaf(a) => out.push(*a),
        Split::Node(l, r) => {
            if rng.gen() {
                split_vote(rng, l, out);
                split_vote(rng, r, out);
            } else {
                split_vote(rng, r, out);
                split_vote(rng, l, out);
            }
        }
    }
}

/// Votes that each order the two sides of every node of one random
/// hierarchy as wholes, hence group-separable.
fn random_gs(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Profile {
    let items = random_vote(rng, m);
    let tree = random_split(rng, &items);
    let votes = (0..n)
        .map(|_| {
            let mut v = Vec::with_capacity(m);
            split_vote(rng, &tree, &mut v);
            v
        })
        .collect();
    Profile::new(votes).expect("valid votes")
}

fn relabel(rng: &mut ChaCha8Rng, p: &Profile) -> Profile {
    let map = random_vote(rng, p.m());
    Profile::new(p.votes().map(|v| v.iter().map(|&a| map[a]).collect()).collect()).expect("valid votes")
}

fn random_restriction(rng: &mut ChaCha8Rng, p: &Profile) -> Profile {
    let voters: Vec<usize> = (0..p.n()).filter(|_| rng.gen_bool(0.6)).collect();
    let voters = if voters.is_empty() { vec![rng.gen_range(0..p.n())] } else { voters };
    let alts: Vec<usize> = (0..p.m()).filter(|_| rng.gen_bool(0.7)).collect();
    let alts = if alts.is_empty() { vec![rng.gen_range(0..p.m())] } else { alts };
    p.restrict_voters(&voters).expect("valid voters").restrict_alternatives(&alts).expect("valid alternatives").0
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn rational(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

// ---------------------------------------------------------------------------
// 1. worked examples

fn worked_examples() -> Tally {
    let mut t = Tally::default();
    let (a, b, c, d, e) = (0, 1, 2, 3, 4);

    let cycle = letters(&["abc", "bca", "cab"]);
    t.check(majority_relation(&cycle).strict_cycle().is_some(), || "cycle: no majority cycle".into());
    match recognize_single_peaked(&cycle) {
        Ok(axis) => t.check(false, || format!("cycle: accepted as single-peaked on {axis:?}")),
        Err(cert) => t.check(cert.kind == CertificateKind::SpAlphaBetaGamma && cert.validate(&cycle), || {
            format!("cycle: bad certificate {cert:?}")
        }),
    }
    match value_restriction_report(&cycle).value {
        Some(cert) => t.check(cert.kind == CertificateKind::VrCondorcet && cert.validate(&cycle), || {
            format!("cycle: bad value-restriction certificate {cert:?}")
        }),
        None => t.check(false, || "cycle: reported value-restricted".into()),
    }

    let fig = letters(&["bacdefg", "defcbga", "cedbfag"]);
    let v12 = fig.restrict_voters(&[0, 1]).unwrap();
    let v13 = fig.restrict_voters(&[0, 2]).unwrap();
    t.check(is_single_peaked_on(&v12, &Axis::identity(7)).is_ok(), || "figure: (v1,v2) not SP on a..g".into());
    t.check(recognize_single_peaked(&v12).is_ok(), || "figure: (v1,v2) rejected".into());
    t.check(is_single_peaked_on(&fig.restrict_voters(&[2]).unwrap(), &Axis::identity(7)).is_err(), || {
        "figure: v3 accepted on a..g".into()
    });
    t.check(recognize_single_peaked(&v13).is_err_and(|cert| cert.validate(&v13)), || {
        "figure: (v1,v3) accepted or certificate invalid".into()
    });

    let median = letters(&["abcde", "abcde", "bcade", "dceba", "dcbea", "edcba"]);
    t.check(condorcet_winners(&median).weak == vec![b, c, d], || "median example: weak winners".into());
    t.check(median_voter_winners(&median, &Axis::identity(5)).ok() == Some(vec![b, c, d]), || {
        "median example: median-voter winners".into()
    });

    let sc8 = letters(&["abcd", "badc", "bdac", "dbca", "dcba"]);
    t.check(is_single_crossing_given_order(&sc8).is_ok(), || "single-crossing example: not SC in order".into());

    let sc_not_sp = letters(&["abc", "cab", "cba"]);
    let order = recognize_single_crossing(&sc_not_sp).map(|o| o.as_slice().to_vec());
    t.check(order == Some(vec![0, 1, 2]) || order == Some(vec![2, 1, 0]), || {
        format!("SC-not-SP example: ordering {order:?}")
    });
    t.check(recognize_single_peaked(&sc_not_sp).is_err(), || "SC-not-SP example: accepted as SP".into());

    let sp_not_sc = letters(&["abcd", "abdc", "bacd", "badc"]);
    t.check(is_single_peaked_on(&sp_not_sc, &Axis::new(vec![c, b, a, d]).unwrap()).is_ok(), || {
        "SP-not-SC example: not SP on c b a d".into()
    });
    t.check(recognize_single_crossing(&sp_not_sc).is_none(), || "SP-not-SC example: accepted as SC".into());
    t.check(
        sc_certificate(&sp_not_sc)
            .is_some_and(|cert| cert.kind == CertificateKind::ScDelta && cert.validate(&sp_not_sc)),
        || "SP-not-SC example: missing delta certificate".into(),
    );

    let axes = letters(&["cdbefgahi", "dcbeafgih", "cdebafghi"]);
    let family = all_single_peaked_axes(&axes);
    t.check(family.as_ref().ok().and_then(|f| f.len()) == Some(16), || "all-axes example: family size".into());
    if let Ok(f) = &family {
        let ours: BTreeSet<Vec<usize>> = f.axes().map(|x| x.order().to_vec()).collect();
        let brute: BTreeSet<Vec<usize>> =
            oracle::brute_sp(&axes).unwrap().into_iter().map(|x| x.order().to_vec()).collect();
        t.check(ours.len() == 16 && ours == brute, || "all-axes example: axes differ from enumeration".into());
    }

    let spsc = letters(&["bcdeaf", "decbaf", "defcba"]);
    t.check(recognize_spsc(&spsc).is_ok(), || "SPSC example: rejected".into());
    t.check(matches!(recognize_1_euclidean(&spsc), Err(NotEuclidean::Infeasible(_))), || {
        "SPSC example: not rejected as infeasible".into()
    });

    let bad_axis = letters(&["bcad", "cbda"]);
    t.check(recognize_1_euclidean(&bad_axis).is_ok_and(|emb| emb.validate(&bad_axis)), || {
        "bad-axis example: no valid embedding".into()
    });
    t.check(compatible_axis(&bad_axis).is_some_and(|ca| ca.axis.order() == [a, b, c, d]), || {
        "bad-axis example: compatible axis".into()
    });
    let printed = Embedding::new(vec![rational(-1), rational(1)], vec![rational(-4), rational(-1), rational(1), rational(4)]);
    t.check(printed.validate(&bad_axis), || "bad-axis example: printed positions rejected".into());

    let tree_sc = letters(&["acbd", "abcd", "abdc", "bacd"]);
    let tree = recognize_sc_on_tree(&tree_sc).ok().flatten();
    t.check(tree.as_ref().is_some_and(|t| t.edges() == [(0, 1), (1, 2), (1, 3)]), || {
        format!("SC-on-tree example: tree {tree:?}")
    });
    let without_hub = tree_sc.restrict_voters(&[0, 2, 3]).unwrap();
    t.check(recognize_sc_on_tree(&without_hub).is_ok_and(|t| t.is_none()), || {
        "SC-on-tree example: accepted without v2".into()
    });

    let crossing = letters(&["abcde", "adcbe", "baced", "abcde"]);
    t.check(crossing_graph(&crossing).edges == vec![(a, b), (b, c), (b, d), (c, d), (d, e)], || {
        "crossing example: edge set".into()
    });
    t.check(sc_alt_deletion_exact(&crossing, 2).is_some_and(|r| r.deleted == vec![b, d] && r.is_sound(&crossing)), || {
        "crossing example: cover".into()
    });
    t.check(sc_alt_deletion_exact(&crossing, 1).is_none(), || "crossing example: cover of size 1".into());
    t.check(sc_alt_partition(&crossing, 2).is_none(), || "crossing example: 2-partition".into());
    t.check(sc_alt_partition(&crossing, 3).is_some_and(|parts| parts.len() <= 3), || {
        "crossing example: no 3-partition".into()
    });

    let width = letters(&["abcdgfehi", "abcdihefg", "efgabcdhi"]);
    let drawn = vec![vec![0, 1, 2, 3], vec![4, 5, 6], vec![7, 8]];
    t.check(maximal_clone_sets(&width) == drawn, || "width example: clone blocks".into());
    let drawn_width = Width { width: 4, blocks: drawn.clone() };
    t.check(drawn_width.validate(&width, WidthDomain::SinglePeaked), || "width example: drawn partition invalid".into());
    let contracted = contract_blocks(&width, &drawn).map(|q| q.votes().map(<[usize]>::to_vec).collect::<Vec<_>>());
    t.check(contracted == Some(vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2]]), || {
        format!("width example: contraction {contracted:?}")
    });
    let best = structured_width(&width, WidthDomain::SinglePeaked).unwrap();
    t.check(best.width == 3 && best.validate(&width, WidthDomain::SinglePeaked), || {
        format!("width example: minimum {best:?}")
    });
    t
}

// ---------------------------------------------------------------------------
// 2. agreement with brute force

fn ids(axis: &Axis) -> Vec<usize> {
    axis.order().to_vec()
}

fn oracle_checks(t: &mut Tally, p: &Profile, rng: &mut ChaCha8Rng) {
    let m = p.m();
    let show = || format!("{:?}", p.votes().collect::<Vec<_>>());

    let brute_axes = oracle::brute_sp(p).unwrap();
    let sp = recognize_single_peaked(p);
    t.check(sp.is_ok() == !brute_axes.is_empty(), || format!("single-peaked on {}", show()));
    match &sp {
        Ok(axis) => t.check(oracle::is_sp(p, axis.order()), || format!("single-peaked axis on {}", show())),
        Err(cert) => t.check(cert.validate(p), || format!("single-peaked certificate on {}", show())),
    }
    if let Ok(family) = all_single_peaked_axes(p) {
        let ours: BTreeSet<Vec<usize>> = family.axes().map(|x| ids(&x)).collect();
        let brute: BTreeSet<Vec<usize>> = brute_axes.iter().map(ids).collect();
        t.check(ours == brute, || format!("axis family on {}", show()));
    }
    t.check(recognize_sp_via_c1p(p).is_some() == sp.is_ok(), || format!("consecutive-ones route on {}", show()));
    let caved = !oracle::brute_sp(&p.reversed()).unwrap().is_empty();
    t.check(recognize_single_caved(p).is_ok() == caved, || format!("single-caved on {}", show()));

    let sc = recognize_single_crossing(p);
    let brute_sc = !oracle::brute_sc(p).unwrap().is_empty();
    t.check(sc.is_some() == brute_sc, || format!("single-crossing on {}", show()));
    if let Some(order) = &sc {
        t.check(oracle::is_sc_in_order(&p.permuted(order).unwrap()), || format!("single-crossing order on {}", show()));
    }
    t.check(recognize_spsc(p).is_ok() == (sp.is_ok() && brute_sc), || format!("SPSC on {}", show()));
    t.check(is_single_crossing_given_order(p).is_ok() == oracle::is_sc_in_order(p), || {
        format!("single-crossing in order on {}", show())
    });

    let euclid = recognize_1_euclidean(p);
    t.check(euclid.is_ok() == oracle::brute_one_euclidean(p).unwrap(), || format!("1-Euclidean on {}", show()));
    if let Ok(emb) = &euclid {
        t.check(emb.validate(p), || format!("1-Euclidean embedding on {}", show()));
    }

    let sp_tree = recognize_sp_on_tree(p);
    t.check(sp_tree.is_some() == oracle::brute_sp_on_tree(p).unwrap().is_some(), || format!("SP on tree on {}", show()));
    if let Some(tree) = &sp_tree {
        t.check(oracle::is_sp_on_tree(p, tree.edges()), || format!("SP tree on {}", show()));
    }
    let sc_tree = recognize_sc_on_tree(p).unwrap();
    t.check(sc_tree.is_some() == oracle::brute_sc_on_tree(p).unwrap().is_some(), || format!("SC on tree on {}", show()));
    if let Some(tree) = &sc_tree {
        t.check(oracle::is_sc_on_tree(p, tree.edges()), || format!("SC tree on {}", show()));
    }

    let gs = recognize_group_separable(p);
    t.check(gs.is_some() == oracle::brute_gs(p).unwrap(), || format!("group-separable on {}", show()));
    if let Some(dec) = &gs {
        t.check(dec.validate(p), || format!("group-separable decomposition on {}", show()));
    }

    let ours = value_restriction_report(p);
    let brute = oracle::brute_restrictions(p);
    t.check(
        (ours.is_value_restricted(), ours.is_best_restricted(), ours.is_medium_restricted(), ours.is_worst_restricted())
            == (brute.value, brute.best, brute.medium, brute.worst),
        || format!("restrictions on {}", show()),
    );

    t.check(sorted(clone_sets(p)) == sorted(oracle::brute_clone_sets(p).unwrap()), || format!("clone sets on {}", show()));

    // rules
    match kemeny_structured(p) {
        Some(k) => {
            t.check(majority_relation(p).strict_cycle().is_none(), || format!("Kemeny applicability on {}", show()));
            let (best, _) = oracle::brute_kemeny(p).unwrap();
            t.check(k.count == Some(best.len() as u128), || format!("Kemeny count on {}", show()));
            if !k.truncated {
                t.check(sorted(k.rankings) == sorted(best), || format!("Kemeny rankings on {}", show()));
            }
        }
        None => t.check(majority_relation(p).strict_cycle().is_some(), || format!("Kemeny refused on {}", show())),
    }
    let borda = ScoringVector::<u64>::borda(m);
    let mut custom: Vec<u64> = (0..m).map(|_| rng.gen_range(0..10)).collect();
    custom.sort_unstable_by(|x, y| y.cmp(x));
    let custom = ScoringVector::new(custom).unwrap();
    for k in 1..=m.min(3) {
        for w in [&borda, &custom] {
            let (util, util_score) = oracle::brute_cc(p, k, w.weights(), oracle::CcMode::Utilitarian).unwrap();
            let (egal, egal_score) = oracle::brute_cc(p, k, w.weights(), oracle::CcMode::Egalitarian).unwrap();
            if let Ok(axis) = &sp {
                let c = cc_utilitarian_sp(p, axis, k, w).unwrap();
                t.check(c.score == util_score && c.members == util[0], || format!("CC utilitarian SP k={k} on {}", show()));
            }
            if let Some(order) = &sc {
                let c = cc_sc(p, order, k, w, CcMode::Utilitarian).unwrap();
                t.check(c.score == util_score && c.members == util[0], || format!("CC utilitarian SC k={k} on {}", show()));
                let c = cc_sc(p, order, k, w, CcMode::Egalitarian).unwrap();
                t.check(c.score == egal_score && c.members == egal[0], || format!("CC egalitarian SC k={k} on {}", show()));
            }
        }
        if let Ok(axis) = &sp {
            let c = cc_egalitarian_sp(p, axis, k).unwrap();
            let (egal, egal_score) = oracle::brute_cc(p, k, borda.weights(), oracle::CcMode::Egalitarian).unwrap();
            t.check(c.rank_bound as u64 == m as u64 - egal_score && c.members == egal[0], || {
                format!("CC egalitarian SP k={k} on {}", show())
            });
        }
    }
    let witness = sp.as_ref().ok().cloned().map(Witness::Axis).or_else(|| sc.clone().map(Witness::Order));
    if let Some(witness) = &witness {
        let y = strong_young_winners_structured(p, witness).unwrap();
        t.check((y.winners, y.score) == oracle::brute_strong_young(p).unwrap(), || format!("strong Young on {}", show()));
    }
    if let Ok(axis) = &sp {
        let mut got = median_voter_winners(p, axis).unwrap();
        got.sort_unstable();
        t.check(got == condorcet_winners(p).weak, || format!("median voter on {}", show()));
    }

    // distances
    if m <= 5 {
        let axis = Axis::new(random_vote(rng, m)).unwrap();
        for vote in p.votes() {
            t.check(swap_distance_to_axis(vote, &axis) == oracle::brute_swap_distance(vote, axis.order()).unwrap(), || {
                format!("swap distance of {vote:?} to {axis:?}")
            });
        }
    }
    use oracle::{Deletion, Domain};
    let best = |d: Domain, del: Deletion| oracle::brute_deletion(p, &d, del).unwrap().0;

    let r = sp_voter_deletion(p, SearchMode::Exact).unwrap();
    t.check(r.deleted.len() == best(Domain::SinglePeaked, Deletion::Voters) && r.is_sound(p), || {
        format!("SP voter deletion on {}", show())
    });
    let r = sc_voter_deletion(p);
    t.check(r.deleted.len() == best(Domain::SingleCrossing, Deletion::Voters) && r.is_sound(p), || {
        format!("SC voter deletion on {}", show())
    });
    let r = sc_voter_deletion_given_order(p);
    t.check(r.deleted.len() == best(Domain::SingleCrossingInOrder, Deletion::Voters) && r.is_sound(p), || {
        format!("SC voter deletion in order on {}", show())
    });
    let r = sp_alt_deletion(p).unwrap();
    t.check(r.deleted.len() == best(Domain::SinglePeaked, Deletion::Alternatives) && r.is_sound(p), || {
        format!("SP alternative deletion on {}", show())
    });
    let axis = Axis::new(random_vote(rng, m)).unwrap();
    let r = sp_alt_deletion_fixed_axis(p, &axis).unwrap();
    let want = best(Domain::SinglePeakedOn(ids(&axis)), Deletion::Alternatives);
    t.check(r.deleted.len() == want && r.is_sound(p), || format!("SP alternative deletion on {axis:?} for {}", show()));
    let cover = best(Domain::SingleCrossingInOrder, Deletion::Alternatives);
    for k in 0..m {
        let r = sc_alt_deletion_exact(p, k);
        let ok = match &r {
            Some(r) => r.deleted.len() == cover && r.is_sound(p),
            None => cover > k,
        };
        t.check(ok, || format!("SC alternative deletion k={k} on {}", show()));
    }
    for k in 1..=m.min(3) {
        let ours = sc_alt_partition(p, k);
        let brute = oracle::brute_alt_partition_sc_in_order(p, k).unwrap();
        let valid = ours.as_ref().is_none_or(|parts| {
            parts.len() <= k
                && parts.iter().all(|c| oracle::is_sc_in_order(&p.restrict_alternatives(c).unwrap().0))
        });
        t.check(ours.is_some() == brute.is_some() && valid, || format!("SC partition k={k} on {}", show()));
    }
    t.check(crossing_graph(p).edges == oracle::brute_crossing_edges(p), || format!("crossing graph on {}", show()));
    for (domain, brute_domain) in [(WidthDomain::SinglePeaked, Domain::SinglePeaked), (WidthDomain::SingleCrossing, Domain::SingleCrossing)] {
        let w = structured_width(p, domain).unwrap();
        let (want, _) = oracle::brute_width(p, &brute_domain).unwrap();
        t.check(w.width == want && w.validate(p, domain), || format!("{domain:?} width on {}", show()));
    }
}

fn oracle_equivalence() -> Tally {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for case in 0..10_000 {
        let m = rng.gen_range(1..=6);
        let n = rng.gen_range(1..=6);
        let p = match case % 4 {
            0 => impartial(&mut rng, n, m),
            1 => random_sp(&mut rng, n, m).0,
            2 => random_sc(&mut rng, n, m).1,
            _ => random_gs(&mut rng, n, m),
        };
        oracle_checks(&mut t, &p, &mut rng);
    }
    let perms = oracle::permutations(3);
    for n in 1..=3u32 {
        for code in 0..6usize.pow(n) {
            let votes = (0..n).map(|i| perms[code / 6usize.pow(i) % 6].clone()).collect();
            oracle_checks(&mut t, &Profile::new(votes).unwrap(), &mut rng);
        }
    }
    t
}

// ---------------------------------------------------------------------------
// 3. structural properties

fn structural_theorems() -> Tally {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    const CASES: usize = 1000;

    for _ in 0..CASES {
        let n = 2 * rng.gen_range(0..8) + 1;
        let m = rng.gen_range(2..=8);
        let (p, axis) = random_sp(&mut rng, n, m);
        let maj = majority_relation(&p);
        let strong = maj.condorcet_winners().strong;
        t.check(maj.is_strict_majority_transitive(), || "SP odd n: intransitive majority".into());
        t.check(strong.is_some() && median_voter_winners(&p, &axis).unwrap() == vec![strong.unwrap()], || {
            "SP odd n: median voter differs from the Condorcet winner".into()
        });

        let (_, mixed) = random_sc(&mut rng, n, m);
        let maj = majority_relation(&mixed);
        let order = recognize_single_crossing(&mixed).expect("generated profile is single-crossing");
        let median = mixed.vote(order.as_slice()[n / 2]);
        t.check(maj.is_strict_majority_transitive(), || "SC odd n: intransitive majority".into());
        t.check(maj.condorcet_winners().strong == Some(median[0]), || "SC odd n: median voter top".into());
        let represents = (0..m).all(|x| (x + 1..m).all(|y| maj.strict_beats(median[x], median[y])));
        t.check(represents, || "SC odd n: median voter does not rank like the majority".into());
    }

    for _ in 0..CASES {
        let (n, m) = (rng.gen_range(1..=6), rng.gen_range(1..=7));
        let (p, _) = random_sp(&mut rng, n, m);
        let family = all_single_peaked_axes(&p).unwrap();
        let t_len = family.log2_len();
        let brute = oracle::brute_sp(&p).unwrap().len() as u128;
        t.check(family.len() == Some(1u128 << t_len) && brute == 1u128 << t_len && t_len == family.prefixes().len(), || {
            format!("axis family: 2^{t_len} vs {brute} axes")
        });
    }

    for _ in 0..CASES {
        let m = rng.gen_range(1..=9);
        let n = rng.gen_range(1..=60);
        let (ordered, _) = random_sc(&mut rng, n, m);
        t.check(ordered.dedup().0.n() <= m * (m - 1) / 2 + 1, || "SC: too many distinct votes".into());
        let max = relabel(&mut rng, &max_sc_profile(m).unwrap());
        t.check(max.dedup().0.n() == m * (m - 1) / 2 + 1 && recognize_single_crossing(&max).is_some(), || {
            format!("max SC profile for m={m}")
        });
    }

    for _ in 0..CASES {
        let m = rng.gen_range(1..=10);
        let p = relabel(&mut rng, &gs_max_profile(m).unwrap());
        let distinct = p.dedup().0.n();
        t.check(distinct == 1 << (m - 1) && recognize_group_separable(&p).is_some_and(|d| d.validate(&p)), || {
            format!("GS max profile for m={m}: {distinct} votes")
        });
    }

    for seed in 0..CASES as u64 {
        let (p, emb) = euclid_line(rng.gen_range(1..=12), rng.gen_range(1..=8), seed).unwrap();
        t.check(emb.validate(&p) && recognize_spsc(&p).is_ok(), || format!("Euclidean seed {seed}: not SPSC"));
    }

    let mut narcissistic = 0;
    while narcissistic < CASES {
        let m = rng.gen_range(2..=7);
        let path = sc_path(&mut rng, m);
        let tops: BTreeSet<usize> = path.iter().map(|v| v[0]).collect();
        if tops.len() < m {
            continue;
        }
        // keep one vote per top plus random others, in path order
        let mut keep: Vec<usize> = (0..path.len()).filter(|_| rng.gen_bool(0.4)).collect();
        for a in 0..m {
            keep.push(path.iter().position(|v| v[0] == a).unwrap());
        }
        keep.sort_unstable();
        keep.dedup();
        let p = Profile::new(keep.iter().map(|&k| path[k].clone()).collect()).unwrap();
        let axis = Axis::new(p.vote(0).to_vec()).unwrap();
        t.check(is_single_peaked_on(&p, &axis).is_ok(), || "narcissistic SC: not SP on the first vote".into());
        narcissistic += 1;
    }

    for _ in 0..CASES {
        let (n, m) = (rng.gen_range(1..=10), rng.gen_range(1..=8));
        let (sp, _) = random_sp(&mut rng, n, m);
        t.check(recognize_single_peaked(&random_restriction(&mut rng, &sp)).is_ok(), || "SP heredity".into());
        let (_, sc) = random_sc(&mut rng, n, m);
        t.check(recognize_single_crossing(&random_restriction(&mut rng, &sc)).is_some(), || "SC heredity".into());
        let gs = random_gs(&mut rng, n, m);
        t.check(recognize_group_separable(&random_restriction(&mut rng, &gs)).is_some(), || "GS heredity".into());
    }
    t
}

// ---------------------------------------------------------------------------
// 4. running time

fn fastest(runs: usize, mut f: impl FnMut()) -> Duration {
    (0..runs)
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed()
        })
        .min()
        .expect("at least one run")
}

fn performance() -> (Tally, String) {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let identity = Axis::identity(100);

    let big = sp_uniform_on_axis(100_000, 100, 1, &identity).unwrap();
    let sp_time = fastest(1, || t.check(recognize_single_peaked(&big).is_ok(), || "large SP rejected".into()));
    t.check(sp_time < Duration::from_secs(1), || format!("SP n=100000 m=100 took {sp_time:?}"));

    let (_, sc) = random_sc(&mut rng, 10_000, 100);
    let sc_time = fastest(1, || t.check(recognize_single_crossing(&sc).is_some(), || "large SC rejected".into()));
    t.check(sc_time < Duration::from_secs(5), || format!("SC n=10000 m=100 took {sc_time:?}"));

    let cc = sp_uniform_on_axis(2_000, 200, 2, &Axis::identity(200)).unwrap();
    let w = ScoringVector::<u64>::borda(200);
    let cc_time = fastest(1, || {
        let c = cc_utilitarian_sp(&cc, &Axis::identity(200), 20, &w);
        t.check(c.is_ok_and(|c| c.members.len() == 20), || "CC committee size".into());
    });
    t.check(cc_time < Duration::from_secs(10), || format!("CC n=2000 m=200 k=20 took {cc_time:?}"));

    let half = big.restrict_voters(&(0..50_000).collect::<Vec<_>>()).unwrap();
    let t1 = fastest(5, || drop(recognize_single_peaked(&half)));
    let t2 = fastest(5, || drop(recognize_single_peaked(&big)));
    let ratio = t2.as_secs_f64() / t1.as_secs_f64();
    t.check(ratio <= 2.5, || format!("SP scaling ratio {ratio:.2}"));

    let summary = format!("SP {sp_time:.2?}, SC {sc_time:.2?}, CC {cc_time:.2?}, doubling ratio {ratio:.2}");
    (t, summary)
}

// ---------------------------------------------------------------------------
// 5. certificates and witnesses

fn certificate_fuzz() -> Tally {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    const TARGET: usize = 10_000;
    let (mut sp_out, mut sc_out, mut vr_out) = (0, 0, 0);
    let mut round = 0usize;
    while sp_out < TARGET || sc_out < TARGET || vr_out < TARGET {
        round += 1;
        let (n, m) = (rng.gen_range(2..=8), rng.gen_range(3..=8));
        let p = match round % 5 {
            0 => random_sp(&mut rng, n, m).0,
            1 => random_sc(&mut rng, n, m).1,
            _ => impartial(&mut rng, n, m),
        };
        let show = || format!("{:?}", p.votes().collect::<Vec<_>>());
        match recognize_single_peaked(&p) {
            Ok(axis) => t.check(oracle::is_sp(&p, axis.order()), || format!("SP axis on {}", show())),
            Err(cert) => {
                sp_out += 1;
                t.check(cert.validate(&p), || format!("SP certificate {cert:?} on {}", show()));
            }
        }
        match recognize_single_crossing(&p) {
            Some(order) => t.check(oracle::is_sc_in_order(&p.permuted(&order).unwrap()), || format!("SC order on {}", show())),
            None => {
                sc_out += 1;
                let cert = sc_certificate(&p);
                t.check(cert.as_ref().is_some_and(|c| c.validate(&p)), || format!("SC certificate {cert:?} on {}", show()));
            }
        }
        match value_restriction_report(&p).value {
            None => t.check(oracle::brute_restrictions(&p).value, || format!("VR member on {}", show())),
            Some(cert) => {
                vr_out += 1;
                t.check(cert.kind == CertificateKind::VrCondorcet && cert.validate(&p), || {
                    format!("VR certificate {cert:?} on {}", show())
                });
            }
        }
    }
    t
}

// ---------------------------------------------------------------------------

fn report(number: usize, name: &str, t: &Tally, extra: &str) -> bool {
    let verdict = if t.passed() { "PASS" } else { "FAIL" };
    let extra = if extra.is_empty() { String::new() } else { format!("; {extra}") };
    println!("criterion {number} ({name}): {verdict} [{} checks, {} failures{extra}]", t.checks, t.failures);
    for msg in &t.messages {
        println!("    {msg}");
    }
    t.passed()
}

fn main() -> ExitCode {
    let mut all = true;
    all &= report(1, "worked examples", &worked_examples(), "");
    all &= report(2, "oracle equivalence", &oracle_equivalence(), "");
    all &= report(3, "structural theorems", &structural_theorems(), "");
    let (perf, timings) = performance();
    all &= report(4, "performance", &perf, &timings);
    all &= report(5, "certificate soundness", &certificate_fuzz(), "");
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
