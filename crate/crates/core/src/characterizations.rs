//! Structural predicates for when each graph is complete and when two of
//! the graphs coincide, plus a verifier that checks every predicate against
//! the graphs themselves.
//!
//! None of the predicates here build a graph; they read only monogenic
//! profiles, idempotents, maximal subgroups and subsemigroup closures.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{build_graph, is_complete, GraphKind, GraphSet, SimpleGraph};
use crate::structure::{
    closure, cyclic_subgroups, find_cpxcp_subgroup, idempotents, is_commutative, is_prime_power,
    monogenic_generator, monogenic_generator_of, CpxCpWitness,
};
use crate::{Element, ElementSet, Semigroup};

/// Default upper bound on the order for exhaustive commutative-subsemigroup search.
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 8;

/// Environment variable overriding [`DEFAULT_EXHAUSTIVE_BOUND`].
pub const EXHAUSTIVE_BOUND_VAR: &str = "SEMIGRAPHS_MAX_EXHAUSTIVE";

pub fn exhaustive_bound_from_env() -> usize {
    std::env::var(EXHAUSTIVE_BOUND_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_EXHAUSTIVE_BOUND)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    PeComplete,
    GammaComplete,
    PowComplete,
    PcComplete,
    PeEqGamma,
    GammaEqPow,
    PeEqPow,
    GammaEqPc,
    PeEqPc,
    PowEqPc,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::PeComplete,
        TheoremId::GammaComplete,
        TheoremId::PowComplete,
        TheoremId::PcComplete,
        TheoremId::PeEqGamma,
        TheoremId::GammaEqPow,
        TheoremId::PeEqPow,
        TheoremId::GammaEqPc,
        TheoremId::PeEqPc,
        TheoremId::PowEqPc,
    ];

    /// Graphs whose completeness (one kind) or equality (two kinds) the
    /// theorem characterizes.
    pub fn graphs(self) -> (GraphKind, Option<GraphKind>) {
        use GraphKind::*;
        match self {
            TheoremId::PeComplete => (EnhancedPower, None),
            TheoremId::GammaComplete => (Cyclic, None),
            TheoremId::PowComplete => (Power, None),
            TheoremId::PcComplete => (Commuting, None),
            TheoremId::PeEqGamma => (EnhancedPower, Some(Cyclic)),
            TheoremId::GammaEqPow => (Cyclic, Some(Power)),
            TheoremId::PeEqPow => (EnhancedPower, Some(Power)),
            TheoremId::GammaEqPc => (Cyclic, Some(Commuting)),
            TheoremId::PeEqPc => (EnhancedPower, Some(Commuting)),
            TheoremId::PowEqPc => (Power, Some(Commuting)),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            TheoremId::PeComplete => "P_e complete",
            TheoremId::GammaComplete => "Gamma complete",
            TheoremId::PowComplete => "Pow complete",
            TheoremId::PcComplete => "P_c complete",
            TheoremId::PeEqGamma => "P_e = Gamma",
            TheoremId::GammaEqPow => "Gamma = Pow",
            TheoremId::PeEqPow => "P_e = Pow",
            TheoremId::GammaEqPc => "Gamma = P_c",
            TheoremId::PeEqPc => "P_e = P_c",
            TheoremId::PowEqPc => "Pow = P_c",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `M(m, r)` with `m <= 2`, or `m = 3` and `r` odd. For `m = 3` the two
/// phrasings "r odd" and "3 + r even" are the same parity test.
fn cyclic_graph_complete_shape(index: usize, period: usize) -> bool {
    index <= 2 || (index == 3 && period % 2 == 1)
}

fn power_graph_complete_shape(index: usize, period: usize) -> bool {
    is_prime_power(period) && cyclic_graph_complete_shape(index, period)
}

pub fn pe_complete_pred(s: &Semigroup) -> bool {
    monogenic_generator_of(s).is_some()
}

pub fn gamma_complete_pred(s: &Semigroup) -> bool {
    monogenic_generator_of(s).is_some_and(|a| {
        let p = s.profile(a);
        cyclic_graph_complete_shape(p.index, p.period)
    })
}

pub fn pow_complete_pred(s: &Semigroup) -> bool {
    monogenic_generator_of(s).is_some_and(|a| {
        let p = s.profile(a);
        power_graph_complete_shape(p.index, p.period)
    })
}

/// The monogenic subsemigroups `<a>` form a chain under inclusion.
pub fn chain_condition(s: &Semigroup) -> bool {
    let profiles = s.profiles();
    profiles.iter().enumerate().all(|(i, p)| {
        profiles[i + 1..]
            .iter()
            .all(|q| p.orbit_set.is_subset(&q.orbit_set) || q.orbit_set.is_subset(&p.orbit_set))
    })
}

pub fn pc_complete_pred(s: &Semigroup) -> bool {
    is_commutative(s)
}

pub fn pe_eq_gamma_pred(s: &Semigroup) -> bool {
    s.profiles()
        .iter()
        .all(|p| cyclic_graph_complete_shape(p.index, p.period))
}

/// Every cyclic subgroup has prime-power order.
pub fn gamma_eq_pow_pred(s: &Semigroup) -> bool {
    cyclic_subgroups(s).iter().all(|g| is_prime_power(g.len()))
}

/// Every element has prime-power period.
pub fn gamma_eq_pow_by_periods(s: &Semigroup) -> bool {
    s.profiles().iter().all(|p| is_prime_power(p.period))
}

/// Every `<a>` is `M(m, p^n)` with `m <= 2`, or `m = 3` and `p` odd. A
/// period of 1 is treated like an odd prime power here.
pub fn pe_eq_pow_pred(s: &Semigroup) -> bool {
    s.profiles()
        .iter()
        .all(|p| power_graph_complete_shape(p.index, p.period))
}

/// How [`gamma_eq_pc_pred`] searches commutative subsemigroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommutativeSearch {
    /// Only the closures `<x, y>` of commuting pairs.
    TwoGenerated,
    /// Every commutative subsemigroup, for orders up to `bound`.
    Exhaustive { bound: usize },
}

/// Every commutative subsemigroup is monogenic.
pub fn gamma_eq_pc_pred(s: &Semigroup, mode: CommutativeSearch) -> Result<bool> {
    match mode {
        CommutativeSearch::TwoGenerated => Ok(non_monogenic_commuting_pair(s).is_none()),
        CommutativeSearch::Exhaustive { bound } => {
            Ok(non_monogenic_commutative_subsemigroup(s, bound)?.is_none())
        }
    }
}

/// Commuting `x != y` whose closure is not monogenic.
pub fn non_monogenic_commuting_pair(s: &Semigroup) -> Option<(Element, Element)> {
    let n = s.order();
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| s.commutes(x, y))
        .find(|&(x, y)| monogenic_generator(s, &closure(s, [x, y])).is_none())
}

/// Walks the commutative subsemigroups of `s`, returning the first one that
/// is not monogenic.
pub fn non_monogenic_commutative_subsemigroup(
    s: &Semigroup,
    bound: usize,
) -> Result<Option<ElementSet>> {
    let mut found = None;
    visit_commutative_subsemigroups(s, bound, |set| {
        if monogenic_generator(s, set).is_none() {
            found = Some(set.clone());
            false
        } else {
            true
        }
    })?;
    Ok(found)
}

/// All commutative subsemigroups, sorted by size and members.
pub fn commutative_subsemigroups(s: &Semigroup, bound: usize) -> Result<Vec<ElementSet>> {
    let mut all = Vec::new();
    visit_commutative_subsemigroups(s, bound, |set| {
        all.push(set.clone());
        true
    })?;
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
    Ok(all)
}

/// Each commutative subsemigroup is reached by adding, one at a time,
/// elements that commute with everything collected so far and closing.
/// `visit` returns false to stop early.
fn visit_commutative_subsemigroups(
    s: &Semigroup,
    bound: usize,
    mut visit: impl FnMut(&ElementSet) -> bool,
) -> Result<()> {
    let n = s.order();
    if n > bound {
        return Err(Error::TooLargeForExhaustive(n, bound));
    }
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut stack: Vec<ElementSet> = Vec::new();
    for a in s.elements() {
        let orbit = s.profile(a).orbit_set.clone();
        if seen.insert(orbit.clone()) {
            stack.push(orbit);
        }
    }
    while let Some(set) = stack.pop() {
        if !visit(&set) {
            return Ok(());
        }
        for x in s.elements().filter(|&x| !set.contains(x)) {
            if set.iter().all(|y| s.commutes(x, y)) {
                let grown = closure(s, set.iter().chain([x]));
                if seen.insert(grown.clone()) {
                    stack.push(grown);
                }
            }
        }
    }
    Ok(())
}

/// Which of the three conditions for `P_e = P_c` fail.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PeEqPcClauses {
    /// (i) distinct commuting idempotents.
    pub commuting_idempotents: Option<(Element, Element)>,
    /// (ii) a subgroup `C_p x C_p`.
    pub cpxcp: Option<CpxCpWitness>,
    /// (iii) commuting `x, y`, one of index above 1, in no common `<z>`.
    pub uncovered_pair: Option<(Element, Element)>,
}

impl PeEqPcClauses {
    pub fn all_hold(&self) -> bool {
        self.commuting_idempotents.is_none() && self.cpxcp.is_none() && self.uncovered_pair.is_none()
    }

    pub fn describe(&self) -> Option<String> {
        if let Some((e, f)) = self.commuting_idempotents {
            Some(format!("clause (i): idempotents {e} and {f} commute"))
        } else if let Some(w) = self.cpxcp {
            Some(format!(
                "clause (ii): {} and {} generate C_{p} x C_{p}",
                w.x,
                w.y,
                p = w.prime
            ))
        } else {
            self.uncovered_pair
                .map(|(x, y)| format!("clause (iii): {x} and {y} commute but share no <z>"))
        }
    }
}

pub fn pe_eq_pc_clauses(s: &Semigroup) -> PeEqPcClauses {
    let idem = idempotents(s).to_vec();
    let commuting_idempotents = idem
        .iter()
        .enumerate()
        .flat_map(|(i, &e)| idem[i + 1..].iter().map(move |&f| (e, f)))
        .find(|&(e, f)| s.commutes(e, f));

    let profiles = s.profiles();
    let n = s.order();
    let uncovered_pair = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| {
            s.commutes(x, y) && (profiles[x].index > 1 || profiles[y].index > 1)
        })
        .find(|&(x, y)| {
            !profiles
                .iter()
                .any(|z| z.orbit_set.contains(x) && z.orbit_set.contains(y))
        });

    PeEqPcClauses {
        commuting_idempotents,
        cpxcp: find_cpxcp_subgroup(s),
        uncovered_pair,
    }
}

pub fn pe_eq_pc_pred(s: &Semigroup) -> bool {
    pe_eq_pc_clauses(s).all_hold()
}

/// Prime-power cyclic subgroups and monogenic commutative subsemigroups.
pub fn pow_eq_pc_pred(s: &Semigroup) -> bool {
    gamma_eq_pow_pred(s)
        && gamma_eq_pc_pred(s, CommutativeSearch::TwoGenerated).expect("two-generated never fails")
}

/// Structural verdict for `theorem`.
pub fn predicate(s: &Semigroup, theorem: TheoremId) -> bool {
    match theorem {
        TheoremId::PeComplete => pe_complete_pred(s),
        TheoremId::GammaComplete => gamma_complete_pred(s),
        TheoremId::PowComplete => pow_complete_pred(s),
        TheoremId::PcComplete => pc_complete_pred(s),
        TheoremId::PeEqGamma => pe_eq_gamma_pred(s),
        TheoremId::GammaEqPow => gamma_eq_pow_pred(s),
        TheoremId::PeEqPow => pe_eq_pow_pred(s),
        TheoremId::GammaEqPc => gamma_eq_pc_pred(s, CommutativeSearch::TwoGenerated)
            .expect("two-generated never fails"),
        TheoremId::PeEqPc => pe_eq_pc_pred(s),
        TheoremId::PowEqPc => pow_eq_pc_pred(s),
    }
}

/// Source of predicate verdicts for [`verify_with`]. Replacing it lets a
/// test feed deliberately wrong verdicts through the verifier.
pub trait Predicates: Sync {
    fn verdict(&self, s: &Semigroup, theorem: TheoremId) -> bool;
}

/// The structural predicates of this module.
#[derive(Debug, Clone, Copy, Default)]
pub struct Structural;

impl Predicates for Structural {
    fn verdict(&self, s: &Semigroup, theorem: TheoremId) -> bool {
        predicate(s, theorem)
    }
}

impl<F: Fn(&Semigroup, TheoremId) -> bool + Sync> Predicates for F {
    fn verdict(&self, s: &Semigroup, theorem: TheoremId) -> bool {
        self(s, theorem)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Pair([Element; 2]),
    Note(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Pair([x, y]) => write!(f, "pair ({x},{y})"),
            Witness::Note(s) => f.write_str(s),
        }
    }
}

/// An independent second formulation evaluated alongside the predicate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternateCheck {
    pub name: String,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    #[serde(rename = "predicate")]
    pub predicate_verdict: bool,
    #[serde(rename = "graph")]
    pub graph_verdict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternate: Option<AlternateCheck>,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    pub fn is_mismatch(&self) -> bool {
        self.predicate_verdict != self.graph_verdict
            || self
                .alternate
                .as_ref()
                .is_some_and(|a| a.verdict != self.predicate_verdict)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Orders up to this also run the exhaustive commutative search.
    pub exhaustive_bound: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive_bound: DEFAULT_EXHAUSTIVE_BOUND,
        }
    }
}

fn alternate_check(s: &Semigroup, theorem: TheoremId, options: &VerifyOptions) -> Option<AlternateCheck> {
    let (name, verdict) = match theorem {
        TheoremId::PowComplete => ("chain condition", chain_condition(s)),
        TheoremId::GammaEqPow => ("prime-power periods", gamma_eq_pow_by_periods(s)),
        TheoremId::GammaEqPc if s.order() <= options.exhaustive_bound => (
            "exhaustive commutative search",
            gamma_eq_pc_pred(
                s,
                CommutativeSearch::Exhaustive {
                    bound: options.exhaustive_bound,
                },
            )
            .expect("order within bound"),
        ),
        _ => return None,
    };
    Some(AlternateCheck {
        name: name.to_string(),
        verdict,
    })
}

fn graph_verdict(theorem: TheoremId, graphs: impl Fn(GraphKind) -> SimpleGraph) -> (bool, Option<(Element, Element)>) {
    let (first, second) = theorem.graphs();
    let g = graphs(first);
    let pair = match second {
        None => g.first_missing_pair(),
        Some(kind) => g
            .first_difference(&graphs(kind))
            .expect("graphs of one semigroup"),
    };
    (pair.is_none(), pair)
}

fn assemble(
    s: &Semigroup,
    theorem: TheoremId,
    predicate_verdict: bool,
    (graph_verdict, pair): (bool, Option<(Element, Element)>),
    options: &VerifyOptions,
) -> VerificationReport {
    let alternate = alternate_check(s, theorem, options);
    let mut report = VerificationReport {
        theorem,
        predicate_verdict,
        graph_verdict,
        alternate,
        witness: pair.map(|(x, y)| Witness::Pair([x, y])),
    };
    if let Some(alt) = &report.alternate {
        if alt.verdict != predicate_verdict && report.witness.is_none() {
            report.witness = Some(Witness::Note(format!(
                "{} gives {} but the predicate gives {}",
                alt.name, alt.verdict, predicate_verdict
            )));
        }
    }
    if report.witness.is_none() && predicate_verdict != graph_verdict {
        let note = match theorem {
            TheoremId::PeEqPc => pe_eq_pc_clauses(s).describe(),
            _ => None,
        }
        .unwrap_or_else(|| format!("predicate {predicate_verdict} but graphs give {graph_verdict}"));
        report.witness = Some(Witness::Note(note));
    }
    report
}

/// Checks one theorem on `s`, building only the graphs it needs.
pub fn verify(s: &Semigroup, theorem: TheoremId) -> VerificationReport {
    let options = VerifyOptions {
        exhaustive_bound: exhaustive_bound_from_env(),
    };
    let graph = graph_verdict(theorem, |k| build_graph(s, k));
    assemble(s, theorem, predicate(s, theorem), graph, &options)
}

/// Checks every theorem on `s` against one shared set of graphs.
pub fn verify_all(s: &Semigroup, options: &VerifyOptions) -> Vec<VerificationReport> {
    verify_all_with(s, &GraphSet::build(s), &Structural, options)
}

pub fn verify_all_with(
    s: &Semigroup,
    graphs: &GraphSet,
    predicates: &dyn Predicates,
    options: &VerifyOptions,
) -> Vec<VerificationReport> {
    TheoremId::ALL
        .iter()
        .map(|&t| verify_with(s, graphs, t, predicates, options))
        .collect()
}

pub fn verify_with(
    s: &Semigroup,
    graphs: &GraphSet,
    theorem: TheoremId,
    predicates: &dyn Predicates,
    options: &VerifyOptions,
) -> VerificationReport {
    let graph = graph_verdict(theorem, |k| graphs.get(k).clone());
    assemble(s, theorem, predicates.verdict(s, theorem), graph, options)
}

/// Completeness of each graph, in [`GraphKind::ALL`] order.
pub fn completeness(graphs: &GraphSet) -> [(GraphKind, bool); 4] {
    GraphKind::ALL.map(|k| (k, is_complete(graphs.get(k))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::graphs::{commuting_graph, cyclic_graph, enhanced_power_graph, graphs_equal, power_graph};

    fn c(n: usize) -> Semigroup {
        make_cyclic_group(n).unwrap()
    }

    fn m(index: usize, period: usize) -> Semigroup {
        make_monogenic(index, period).unwrap()
    }

    fn klein() -> Semigroup {
        make_direct_product(&c(2), &c(2))
    }

    #[test]
    fn pe_complete_examples() {
        assert!(pe_complete_pred(&m(3, 2)));
        assert!(!pe_complete_pred(&make_zn_mult(4).unwrap()));
        assert!(pe_complete_pred(&c(1)));
    }

    #[test]
    fn gamma_complete_examples() {
        assert!(gamma_complete_pred(&m(2, 6)));
        assert!(!gamma_complete_pred(&m(3, 2)));
        assert!(gamma_complete_pred(&m(3, 3)));
        assert!(is_complete(&cyclic_graph(&m(3, 3))));
    }

    #[test]
    fn pow_complete_examples() {
        assert!(pow_complete_pred(&m(2, 9)) && chain_condition(&m(2, 9)));
        assert!(is_complete(&power_graph(&m(2, 9))));
        assert!(!pow_complete_pred(&m(2, 6)) && !chain_condition(&m(2, 6)));
        for p in [2, 3, 5, 7, 11, 13] {
            assert!(pow_complete_pred(&c(p)) && chain_condition(&c(p)));
        }
    }

    #[test]
    fn pc_complete_examples() {
        assert!(pc_complete_pred(&signs_semigroup()));
        assert!(!pc_complete_pred(&make_brandt(2).unwrap()));
        assert!(pc_complete_pred(&m(5, 4)));
    }

    #[test]
    fn pe_eq_gamma_examples() {
        assert!(pe_eq_gamma_pred(&make_direct_product(&c(4), &c(6))));
        assert!(!pe_eq_gamma_pred(&m(3, 2)));
        let b2 = make_brandt(2).unwrap();
        assert!(pe_eq_gamma_pred(&b2));
        assert!(graphs_equal(&enhanced_power_graph(&b2), &cyclic_graph(&b2)).unwrap());
    }

    #[test]
    fn gamma_eq_pow_examples() {
        assert!(!gamma_eq_pow_pred(&c(12)));
        assert!(!graphs_equal(&power_graph(&c(12)), &cyclic_graph(&c(12))).unwrap());
        assert!(gamma_eq_pow_pred(&c(8)));
        assert!(!gamma_eq_pow_pred(&m(2, 6)));
        for s in [c(12), c(8), m(2, 6), make_zn_mult(15).unwrap()] {
            assert_eq!(gamma_eq_pow_pred(&s), gamma_eq_pow_by_periods(&s));
        }
    }

    #[test]
    fn pe_eq_pow_examples() {
        assert!(pe_eq_pow_pred(&c(9)));
        assert!(!pe_eq_pow_pred(&m(3, 2)));
        assert!(pe_eq_pow_pred(&m(3, 3)));
        assert!(pe_eq_pow_pred(&m(3, 1)));
        let s = m(3, 1);
        assert!(graphs_equal(&enhanced_power_graph(&s), &power_graph(&s)).unwrap());
    }

    #[test]
    fn gamma_eq_pc_examples() {
        let bound = CommutativeSearch::Exhaustive { bound: 8 };
        for (s, expected) in [
            (make_zn_mult(4).unwrap(), false),
            (c(7), true),
            (m(2, 3), true),
            (klein(), false),
        ] {
            assert_eq!(gamma_eq_pc_pred(&s, CommutativeSearch::TwoGenerated).unwrap(), expected);
            assert_eq!(gamma_eq_pc_pred(&s, bound).unwrap(), expected);
        }
        assert_eq!(
            gamma_eq_pc_pred(&c(9), bound).unwrap_err(),
            Error::TooLargeForExhaustive(9, 8)
        );
    }

    #[test]
    fn commutative_subsemigroups_of_z4() {
        let z4 = make_zn_mult(4).unwrap();
        let all: Vec<Vec<Element>> = commutative_subsemigroups(&z4, 8)
            .unwrap()
            .iter()
            .map(ElementSet::to_vec)
            .collect();
        // closed subsets of Z4 under multiplication
        let expected: Vec<Vec<Element>> = vec![
            vec![0],
            vec![1],
            vec![0, 1],
            vec![0, 2],
            vec![1, 3],
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 1, 2, 3],
        ];
        assert_eq!(all, expected);
    }

    #[test]
    fn pe_eq_pc_examples() {
        let k = pe_eq_pc_clauses(&klein());
        assert!(k.commuting_idempotents.is_none() && k.cpxcp.is_some());
        let signs = pe_eq_pc_clauses(&signs_semigroup());
        assert_eq!(signs.commuting_idempotents, Some((1, 2)));
        assert!(pe_eq_pc_pred(&c(6)));
        assert!(!pe_eq_pc_pred(&klein()));
    }

    #[test]
    fn pow_eq_pc_examples() {
        assert!(!pow_eq_pc_pred(&make_brandt(2).unwrap()));
        assert!(pow_eq_pc_pred(&c(4)));
        assert!(!pow_eq_pc_pred(&c(6)));
        let c4 = c(4);
        assert!(graphs_equal(&power_graph(&c4), &commuting_graph(&c4)).unwrap());
    }

    #[test]
    fn verify_examples() {
        let r = verify(&m(3, 2), TheoremId::PeComplete);
        assert!(r.predicate_verdict && r.graph_verdict && r.witness.is_none());

        let r = verify(&make_zn_mult(4).unwrap(), TheoremId::GammaEqPc);
        assert!(!r.predicate_verdict && !r.graph_verdict);
        assert!(!r.is_mismatch());
        assert_eq!(r.witness, Some(Witness::Pair([0, 1])));

        for t in TheoremId::ALL {
            let r = verify(&c(1), t);
            assert!(r.predicate_verdict && r.graph_verdict, "{t}");
        }
    }

    #[test]
    fn corrupted_predicate_is_caught() {
        let s = m(3, 2);
        let graphs = GraphSet::build(&s);
        let liar = |s: &Semigroup, t: TheoremId| !predicate(s, t);
        let r = verify_with(&s, &graphs, TheoremId::GammaComplete, &liar, &VerifyOptions::default());
        assert!(r.is_mismatch());
        assert_eq!(r.witness, Some(Witness::Pair([1, 2])));
    }

    #[test]
    fn report_json_shape() {
        let r = verify(&make_zn_mult(4).unwrap(), TheoremId::GammaEqPc);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["theorem"], "GammaEqPc");
        assert_eq!(v["predicate"], false);
        assert_eq!(v["graph"], false);
        assert_eq!(v["witness"]["pair"], serde_json::json!([0, 1]));
    }
}
