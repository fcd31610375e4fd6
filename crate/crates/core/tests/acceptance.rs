//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

use semigraphs::characterizations::{predicate, Structural, TheoremId};
use semigraphs::constructors::{make_brandt, make_monogenic, make_zn_mult, signs_semigroup};
use semigraphs::enumeration::{build_corpus, fuzz_theorems_with, run_verification, CorpusEntry};
use semigraphs::graphs::{
    build_graph, graphs_equal, is_complete, GraphKind, GraphSet, SimpleGraph,
};
use semigraphs::{
    cyclic_subgroups, enumeration, idempotents, is_monogenic, s_f_partition, CensusConfig,
    FamilySpec, Semigroup,
};

/// Semigroups of order 1..=4 up to isomorphism (OEIS A027851).
const CENSUS_COUNTS: [usize; 4] = [1, 5, 24, 188];
const CHAIN_BUDGET: Duration = Duration::from_secs(5 * 60);
const CENSUS_BUDGET: Duration = Duration::from_secs(10 * 60);

type Outcome = Result<String, String>;

fn corpus_config() -> CensusConfig {
    CensusConfig {
        max_order: 4,
        up_to_iso: true,
        worker_count: 1,
        include_families: true,
        exhaustive_bound: 8,
    }
}

fn spanning_chain(corpus: &[CorpusEntry]) -> Outcome {
    let start = Instant::now();
    let mut violations = Vec::new();
    for entry in corpus {
        if let Some((lower, upper, (x, y))) = GraphSet::build(&entry.semigroup).chain_violation() {
            violations.push(format!("{}: {lower} edge ({x},{y}) missing from {upper}", entry.name));
        }
    }
    let elapsed = start.elapsed();
    if !violations.is_empty() {
        return Err(format!("{} violations, first: {}", violations.len(), violations[0]));
    }
    if elapsed > CHAIN_BUDGET {
        return Err(format!("took {elapsed:?}, budget {CHAIN_BUDGET:?}"));
    }
    Ok(format!("{} semigroups, 0 violations in {elapsed:.2?}", corpus.len()))
}

fn soundness() -> Outcome {
    let run = run_verification(&corpus_config(), &Structural).map_err(|e| e.to_string())?;
    let bad: Vec<_> = run.mismatches().collect();
    if let Some(first) = bad.first() {
        return Err(format!(
            "{} mismatches, first: {} {} predicate={} graph={} witness={:?}",
            bad.len(),
            first.construct,
            first.report.theorem,
            first.report.predicate_verdict,
            first.report.graph_verdict,
            first.report.witness
        ));
    }
    let alternates = run.rows.iter().filter(|r| r.report.alternate.is_some()).count();
    Ok(format!("{} ({} rows with a second formulation)", run.summary(), alternates))
}

fn golden(name: &str) -> Result<SimpleGraph, String> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    SimpleGraph::from_json(&text).map_err(|e| e.to_string())
}

fn figure_fixtures() -> Outcome {
    let m32 = make_monogenic(3, 2).unwrap();
    let m26 = make_monogenic(2, 6).unwrap();
    let z4 = make_zn_mult(4).unwrap();
    let signs = signs_semigroup();
    let b2 = make_brandt(2).unwrap();

    let fixtures: [(&str, &Semigroup, GraphKind); 10] = [
        ("figure1_enhanced.json", &m32, GraphKind::EnhancedPower),
        ("figure1_cyclic.json", &m32, GraphKind::Cyclic),
        ("figure2_cyclic.json", &m26, GraphKind::Cyclic),
        ("figure2_power.json", &m26, GraphKind::Power),
        ("figure3_commuting.json", &z4, GraphKind::Commuting),
        ("figure3_cyclic.json", &z4, GraphKind::Cyclic),
        ("figure4_commuting.json", &signs, GraphKind::Commuting),
        ("figure4_enhanced.json", &signs, GraphKind::EnhancedPower),
        ("figure5_commuting.json", &b2, GraphKind::Commuting),
        ("figure5_power.json", &b2, GraphKind::Power),
    ];
    for (file, s, kind) in fixtures {
        let expected = golden(file)?;
        let built = build_graph(s, kind);
        if expected.kind() != kind || !graphs_equal(&built, &expected).map_err(|e| e.to_string())? {
            return Err(format!("{file}: built {:?}", built.edges()));
        }
    }

    let g = |s: &Semigroup, k| build_graph(s, k);
    let missing = |gr: &SimpleGraph| -> BTreeSet<(usize, usize)> {
        let n = gr.order();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !gr.adjacent(u, v))
            .collect()
    };
    // ids: M(m,r) id i is a^(i+1); Signs 0->-1, 1->0, 2->1; B(2) id 1 is (1,1)
    let checks = [
        ("fig1 P_e complete with 6 edges", {
            let pe = g(&m32, GraphKind::EnhancedPower);
            is_complete(&pe) && pe.edge_count() == 6
        }),
        (
            "fig1 Γ misses exactly a²–a³",
            missing(&g(&m32, GraphKind::Cyclic)) == BTreeSet::from([(1, 2)]),
        ),
        ("fig2 Γ complete with 21 edges", {
            let gamma = g(&m26, GraphKind::Cyclic);
            is_complete(&gamma) && gamma.edge_count() == 21
        }),
        ("fig2 Pow ≠ Γ with a² ≁ a³", {
            let pow = g(&m26, GraphKind::Power);
            !graphs_equal(&pow, &g(&m26, GraphKind::Cyclic)).unwrap() && !pow.adjacent(1, 2)
        }),
        (
            "fig3 P_c complete, 0 ≁ 1 in Γ",
            is_complete(&g(&z4, GraphKind::Commuting)) && !g(&z4, GraphKind::Cyclic).adjacent(0, 1),
        ),
        (
            "fig4 P_c complete, 0 ≁ 1 in P_e",
            is_complete(&g(&signs, GraphKind::Commuting))
                && !g(&signs, GraphKind::EnhancedPower).adjacent(1, 2),
        ),
        (
            "fig5 0 ~ (1,1) in P_c, not in Pow",
            g(&b2, GraphKind::Commuting).adjacent(0, 1) && !g(&b2, GraphKind::Power).adjacent(0, 1),
        ),
    ];
    for (name, ok) in checks {
        if !ok {
            return Err(format!("{name} does not hold"));
        }
    }
    Ok("10 golden graphs match, 7 figure claims hold".into())
}

fn census_counts() -> Outcome {
    let mut counts = Vec::new();
    let mut order4_time = Duration::ZERO;
    for n in 1..=4 {
        let start = Instant::now();
        let members = enumeration::enumerate_semigroups(n, true).map_err(|e| e.to_string())?;
        if n == 4 {
            order4_time = start.elapsed();
        }
        counts.push(members.len());
    }
    if counts != CENSUS_COUNTS {
        return Err(format!("counts {counts:?}, expected {CENSUS_COUNTS:?}"));
    }
    if order4_time > CENSUS_BUDGET {
        return Err(format!("order 4 took {order4_time:?}"));
    }
    Ok(format!("counts {counts:?}; order 4 in {order4_time:.2?}"))
}

fn structural_invariants(corpus: &[CorpusEntry]) -> Outcome {
    let mut elements = 0;
    for entry in corpus {
        let s = &entry.semigroup;
        let idem = idempotents(s);
        for a in s.elements() {
            elements += 1;
            let orbit = &s.profile(a).orbit_set;
            let count = orbit.iter().filter(|&x| idem.contains(x)).count();
            if count != 1 {
                return Err(format!("{}: <{a}> holds {count} idempotents", entry.name));
            }
        }
        for group in cyclic_subgroups(s) {
            if !is_group(s, &group.to_vec()) {
                return Err(format!("{}: index-1 orbit {group:?} is not a group", entry.name));
            }
            if is_monogenic(s, &group).map_err(|e| e.to_string())?.is_none() {
                return Err(format!("{}: cyclic subgroup {group:?} is not monogenic", entry.name));
            }
        }
        let blocks: Vec<_> = s_f_partition(s).into_values().collect();
        let covered: usize = blocks.iter().map(|b| b.len()).sum();
        let disjoint = blocks
            .iter()
            .enumerate()
            .all(|(i, b)| blocks[i + 1..].iter().all(|c| b.is_disjoint(c)));
        if covered != s.order() || !disjoint {
            return Err(format!("{}: S_f blocks do not partition S", entry.name));
        }
    }
    Ok(format!("{elements} elements across {} semigroups", corpus.len()))
}

/// Closed, has an identity, and every member has an inverse.
fn is_group(s: &Semigroup, members: &[usize]) -> bool {
    let closed = members
        .iter()
        .all(|&x| members.iter().all(|&y| members.contains(&s.product(x, y))));
    let identity = members
        .iter()
        .copied()
        .find(|&e| members.iter().all(|&x| s.product(e, x) == x && s.product(x, e) == x));
    closed
        && identity.is_some_and(|e| {
            members
                .iter()
                .all(|&x| members.iter().any(|&y| s.product(x, y) == e && s.product(y, x) == e))
        })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn distinct_prime_factors(mut n: usize) -> usize {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            count += 1;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    count + usize::from(n > 1)
}

fn group_corollaries(corpus: &[CorpusEntry]) -> Outcome {
    let mut groups = 0;
    for entry in corpus {
        let Ok(spec) = entry.name.parse::<FamilySpec>() else { continue };
        let is_group = match &spec {
            FamilySpec::CyclicGroup(_) => true,
            FamilySpec::Monogenic { index, .. } => *index == 1,
            FamilySpec::DirectProduct(a, b) => {
                matches!((a.as_ref(), b.as_ref()), (FamilySpec::CyclicGroup(_), FamilySpec::CyclicGroup(_)))
            }
            _ => false,
        };
        if !is_group {
            continue;
        }
        groups += 1;
        let s = &entry.semigroup;
        let gs = GraphSet::build(s);
        if !graphs_equal(&gs.cyclic, &gs.enhanced).unwrap() {
            return Err(format!("{}: Γ ≠ P_e", entry.name));
        }
        if let FamilySpec::CyclicGroup(n) = spec {
            let expect = distinct_prime_factors(n) <= 1;
            if is_complete(&gs.power) != expect {
                return Err(format!("C({n}): Pow complete = {}", is_complete(&gs.power)));
            }
        }
        if let FamilySpec::DirectProduct(a, b) = &spec {
            let (FamilySpec::CyclicGroup(a), FamilySpec::CyclicGroup(b)) = (a.as_ref(), b.as_ref()) else {
                unreachable!()
            };
            let has_cpxcp = gcd(*a, *b) > 1;
            let equal = graphs_equal(&gs.enhanced, &gs.commuting).unwrap();
            if equal == has_cpxcp {
                return Err(format!("C({a})xC({b}): P_e = P_c is {equal}"));
            }
        }
    }
    Ok(format!("{groups} constructed groups"))
}

fn negative_control() -> Outcome {
    let corrupted = |s: &Semigroup, t: TheoremId| {
        let honest = predicate(s, t);
        if t == TheoremId::GammaEqPc { !honest } else { honest }
    };
    let bad = fuzz_theorems_with(&CensusConfig::families_only(), &corrupted).map_err(|e| e.to_string())?;
    match bad.first() {
        None => Err("corrupted predicate went unnoticed".into()),
        Some(first) if bad.iter().all(|r| r.report.theorem == TheoremId::GammaEqPc && r.report.witness.is_some()) => {
            Ok(format!(
                "{} mismatches reported, first {} {} witness {}",
                bad.len(),
                first.construct,
                first.report.theorem,
                first.report.witness.as_ref().unwrap()
            ))
        }
        Some(_) => Err("mismatches name the wrong theorem or lack a witness".into()),
    }
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let corpus = build_corpus(&corpus_config()).expect("corpus builds");
    let criteria: Vec<Criterion> = vec![
        ("1 spanning chain Pow ⪯ Γ ⪯ P_e ⪯ P_c", Box::new(|| spanning_chain(&corpus))),
        ("2 theorem soundness", Box::new(soundness)),
        ("3 figure fixtures", Box::new(figure_fixtures)),
        ("4 census counts", Box::new(census_counts)),
        ("5 idempotent, cyclic subgroup and S_f invariants", Box::new(|| structural_invariants(&corpus))),
        ("6 group corollaries", Box::new(|| group_corollaries(&corpus))),
        ("7 negative control", Box::new(negative_control)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
