//! Exhaustive census of small semigroups and the theorem fuzzer that runs
//! every characterization over the census and the built-in families.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::characterizations::{
    verify_all_with, Predicates, Structural, TheoremId, VerificationReport, VerifyOptions,
    DEFAULT_EXHAUSTIVE_BOUND,
};
use crate::constructors::FamilySpec;
use crate::error::{Error, Result};
use crate::graphs::GraphSet;
use crate::Semigroup;

/// Largest order the census supports.
pub const MAX_CENSUS_ORDER: usize = 5;

const UNSET: usize = usize::MAX;

/// Backtracking state over a partially filled Cayley table.
struct TableSearch {
    n: usize,
    table: Vec<usize>,
}

impl TableSearch {
    fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// Checks every triple for which the freshly assigned cell `(x, y)`
    /// is one of the four products `ab`, `bc`, `(ab)c`, `a(bc)` and whose
    /// other products are already assigned.
    fn consistent_at(&self, x: usize, y: usize) -> bool {
        let n = self.n;
        let v = self.get(x, y);
        let agree = |l: usize, r: usize| l == UNSET || r == UNSET || l == r;
        for c in 0..n {
            // (a, b) = (x, y)
            let bc = self.get(y, c);
            if bc != UNSET && !agree(self.get(v, c), self.get(x, bc)) {
                return false;
            }
            // (b, c) = (x, y), reusing c as a
            let ab = self.get(c, x);
            if ab != UNSET && !agree(self.get(ab, y), self.get(c, v)) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                // ab = x, c = y
                if self.get(a, b) == x {
                    let bc = self.get(b, y);
                    if bc != UNSET && !agree(v, self.get(a, bc)) {
                        return false;
                    }
                }
                // a = x, bc = y with (b, c) = (a, b) of this loop
                if self.get(a, b) == y {
                    let xa = self.get(x, a);
                    if xa != UNSET && !agree(self.get(xa, b), v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, cell: usize, emit: &mut dyn FnMut(&[usize])) {
        let n = self.n;
        if cell == n * n {
            emit(&self.table);
            return;
        }
        for v in 0..n {
            self.table[cell] = v;
            if self.consistent_at(cell / n, cell % n) {
                self.run(cell + 1, emit);
            }
        }
        self.table[cell] = UNSET;
    }
}

/// All permutations of `0..n`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Compares the relabeling of `table` by `perm` against `table`, row-major.
fn compare_relabeled(n: usize, table: &[usize], perm: &[usize], inverse: &[usize]) -> std::cmp::Ordering {
    for i in 0..n {
        for j in 0..n {
            let relabeled = perm[table[inverse[i] * n + inverse[j]]];
            match relabeled.cmp(&table[i * n + j]) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
    }
    std::cmp::Ordering::Equal
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Precomputed permutations for the canonical-form filter.
pub struct Relabelings {
    n: usize,
    perms: Vec<(Vec<usize>, Vec<usize>)>,
}

impl Relabelings {
    pub fn new(n: usize) -> Self {
        Relabelings {
            n,
            perms: permutations(n)
                .into_iter()
                .map(|p| {
                    let inv = inverse(&p);
                    (p, inv)
                })
                .collect(),
        }
    }

    /// True iff no relabeling yields a lexicographically smaller table.
    pub fn is_canonical(&self, table: &[usize]) -> bool {
        self.perms
            .iter()
            .all(|(p, q)| compare_relabeled(self.n, table, p, q) != std::cmp::Ordering::Less)
    }

    pub fn automorphism_count(&self, table: &[usize]) -> usize {
        self.perms
            .iter()
            .filter(|(p, q)| compare_relabeled(self.n, table, p, q) == std::cmp::Ordering::Equal)
            .count()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_CENSUS_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    Ok(())
}

/// Calls `emit` with each associative table of order `n` whose first row is
/// assigned to this worker, in lexicographic order.
fn search_partition(
    n: usize,
    up_to_iso: bool,
    worker: usize,
    workers: usize,
    emit: &mut dyn FnMut(&[usize]),
) {
    let relabelings = up_to_iso.then(|| Relabelings::new(n));
    let mut filter = |t: &[usize]| {
        if relabelings.as_ref().is_none_or(|r| r.is_canonical(t)) {
            emit(t);
        }
    };
    // first rows in lexicographic order, dealt round-robin
    for (k, row) in (0..n)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .enumerate()
    {
        if k % workers != worker {
            continue;
        }
        let mut search = TableSearch {
            n,
            table: vec![UNSET; n * n],
        };
        let mut ok = true;
        for (y, &v) in row.iter().enumerate() {
            search.table[y] = v;
            if !search.consistent_at(0, y) {
                ok = false;
                break;
            }
        }
        if ok {
            search.run(n, &mut filter);
        }
    }
}

/// Streams every semigroup of order `n` to `visit`, lexicographically by
/// row-major table. With `up_to_iso`, only the lexicographically least
/// table of each isomorphism class is produced.
pub fn for_each_semigroup(n: usize, up_to_iso: bool, mut visit: impl FnMut(Semigroup)) -> Result<()> {
    check_order(n)?;
    search_partition(n, up_to_iso, 0, 1, &mut |t| {
        visit(Semigroup::from_flat(n, t.to_vec()).expect("search emits associative tables"))
    });
    Ok(())
}

pub fn enumerate_semigroups(n: usize, up_to_iso: bool) -> Result<Vec<Semigroup>> {
    enumerate_semigroups_parallel(n, up_to_iso, 1)
}

/// Splits the search by first table row across `workers` threads and
/// merges the results in the same order as the sequential search.
pub fn enumerate_semigroups_parallel(n: usize, up_to_iso: bool, workers: usize) -> Result<Vec<Semigroup>> {
    check_order(n)?;
    let workers = workers.max(1);
    let mut tables: Vec<Vec<usize>> = if workers == 1 {
        let mut out = Vec::new();
        search_partition(n, up_to_iso, 0, 1, &mut |t| out.push(t.to_vec()));
        out
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        let mut out = Vec::new();
                        search_partition(n, up_to_iso, w, workers, &mut |t| out.push(t.to_vec()));
                        out
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("census worker panicked"))
                .collect()
        })
    };
    tables.sort();
    tables.dedup();
    Ok(tables
        .into_iter()
        .map(|t| Semigroup::from_flat(n, t).expect("search emits associative tables"))
        .collect())
}

/// Settings for [`fuzz_theorems`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusConfig {
    /// Census orders `1..=max_order` are included; 0 skips the census.
    pub max_order: usize,
    pub up_to_iso: bool,
    pub worker_count: usize,
    /// Also run over [`family_corpus`].
    pub include_families: bool,
    pub exhaustive_bound: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            max_order: 4,
            up_to_iso: true,
            worker_count: 1,
            include_families: true,
            exhaustive_bound: DEFAULT_EXHAUSTIVE_BOUND,
        }
    }
}

impl CensusConfig {
    pub fn census_only(max_order: usize) -> Self {
        CensusConfig {
            max_order,
            include_families: false,
            ..Self::default()
        }
    }

    pub fn families_only() -> Self {
        CensusConfig {
            max_order: 0,
            ..Self::default()
        }
    }
}

/// The named families the theorems are checked on:
/// `M(m,r)` for `m <= 6, r <= 12`, `C(n)` for `n <= 60`, `B(n)` for `n <= 3`,
/// `Zmult(n)` for `n <= 30`, `C(a)xC(b)` for `a, b <= 6`, and the signs semigroup.
pub fn family_corpus() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for index in 1..=6 {
        for period in 1..=12 {
            specs.push(FamilySpec::Monogenic { index, period });
        }
    }
    specs.extend((1..=60).map(FamilySpec::CyclicGroup));
    specs.extend((1..=3).map(FamilySpec::Brandt));
    specs.extend((1..=30).map(FamilySpec::ZnMult));
    for a in 1..=6 {
        for b in 1..=6 {
            specs.push(FamilySpec::product(
                FamilySpec::CyclicGroup(a),
                FamilySpec::CyclicGroup(b),
            ));
        }
    }
    specs.push(FamilySpec::Signs);
    specs
}

/// A named member of the verification corpus.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub semigroup: Semigroup,
}

pub fn census_name(order: usize, position: usize) -> String {
    format!("census({order})#{position}")
}

/// Census members (largest order first) followed by families, as configured.
pub fn build_corpus(config: &CensusConfig) -> Result<Vec<CorpusEntry>> {
    let mut corpus = Vec::new();
    for n in (1..=config.max_order).rev() {
        let members = enumerate_semigroups_parallel(n, config.up_to_iso, config.worker_count)?;
        corpus.extend(members.into_iter().enumerate().map(|(i, s)| CorpusEntry {
            name: census_name(n, i),
            semigroup: s,
        }));
    }
    if config.include_families {
        for spec in family_corpus() {
            corpus.push(CorpusEntry {
                name: spec.to_string(),
                semigroup: spec.build()?,
            });
        }
    }
    Ok(corpus)
}

/// One theorem checked on one corpus member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub construct: String,
    #[serde(flatten)]
    pub report: VerificationReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRun {
    /// Census members per order.
    pub census_counts: BTreeMap<usize, usize>,
    pub family_count: usize,
    /// Every row, sorted by construct and theorem.
    pub rows: Vec<ReportRow>,
}

impl VerificationRun {
    pub fn semigroup_count(&self) -> usize {
        self.census_counts.values().sum::<usize>() + self.family_count
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| r.report.is_mismatch())
    }

    /// `"10 theorems × 24+5+1 semigroups, 0 mismatches"`, largest census order first.
    pub fn summary(&self) -> String {
        let mut parts: Vec<String> = self
            .census_counts
            .iter()
            .rev()
            .map(|(_, c)| c.to_string())
            .collect();
        if self.family_count > 0 {
            parts.push(self.family_count.to_string());
        }
        format!(
            "{} theorems × {} semigroups, {} mismatches",
            TheoremId::ALL.len(),
            parts.join("+"),
            self.mismatches().count()
        )
    }
}

/// Verifies every theorem on every corpus member, fanning out over
/// `config.worker_count` threads. Row order does not depend on the worker count.
pub fn run_verification(config: &CensusConfig, predicates: &dyn Predicates) -> Result<VerificationRun> {
    let corpus = build_corpus(config)?;
    let options = VerifyOptions {
        exhaustive_bound: config.exhaustive_bound,
    };
    let mut census_counts = BTreeMap::new();
    for e in &corpus {
        if e.name.starts_with("census(") {
            *census_counts.entry(e.semigroup.order()).or_insert(0) += 1;
        }
    }
    let family_count = corpus.len() - census_counts.values().sum::<usize>();

    let next = AtomicUsize::new(0);
    let rows = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..config.worker_count.max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(entry) = corpus.get(i) else { break };
                let graphs = GraphSet::build(&entry.semigroup);
                let reports = verify_all_with(&entry.semigroup, &graphs, predicates, &options);
                let mut local: Vec<ReportRow> = reports
                    .into_iter()
                    .map(|report| ReportRow {
                        construct: entry.name.clone(),
                        report,
                    })
                    .collect();
                rows.lock().expect("rows lock").append(&mut local);
            });
        }
    });
    let mut rows = rows.into_inner().expect("rows lock");
    rows.sort_by(|a, b| {
        a.construct
            .cmp(&b.construct)
            .then(a.report.theorem.cmp(&b.report.theorem))
    });
    Ok(VerificationRun {
        census_counts,
        family_count,
        rows,
    })
}

/// Mismatching rows only; empty means every theorem held on the corpus.
pub fn fuzz_theorems(config: &CensusConfig) -> Result<Vec<ReportRow>> {
    fuzz_theorems_with(config, &Structural)
}

pub fn fuzz_theorems_with(config: &CensusConfig, predicates: &dyn Predicates) -> Result<Vec<ReportRow>> {
    let run = run_verification(config, predicates)?;
    Ok(run.rows.into_iter().filter(|r| r.report.is_mismatch()).collect())
}
