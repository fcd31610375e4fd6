//! The power, cyclic, enhanced power and commuting graphs of a semigroup.

use std::collections::HashMap;
use std::fmt::{self, Write};
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::{closure, monogenic_generator};
use crate::{Element, ElementSet, Semigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Power,
    Cyclic,
    #[serde(rename = "enhanced")]
    EnhancedPower,
    Commuting,
}

impl GraphKind {
    pub const ALL: [GraphKind; 4] = [
        GraphKind::Power,
        GraphKind::Cyclic,
        GraphKind::EnhancedPower,
        GraphKind::Commuting,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Power => "power",
            GraphKind::Cyclic => "cyclic",
            GraphKind::EnhancedPower => "enhanced",
            GraphKind::Commuting => "commuting",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "power" | "pow" => Ok(GraphKind::Power),
            "cyclic" | "gamma" => Ok(GraphKind::Cyclic),
            "enhanced" | "enhanced-power" | "pe" => Ok(GraphKind::EnhancedPower),
            "commuting" | "pc" => Ok(GraphKind::Commuting),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// Undirected loop-free graph on the elements of a semigroup.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    kind: GraphKind,
    source: Option<u64>,
    names: Option<Vec<String>>,
    rows: Vec<FixedBitSet>,
}

impl SimpleGraph {
    fn empty(s: &Semigroup, kind: GraphKind) -> Self {
        SimpleGraph {
            kind,
            source: Some(s.fingerprint()),
            names: s.names().map(<[String]>::to_vec),
            rows: vec![FixedBitSet::with_capacity(s.order()); s.order()],
        }
    }

    /// Loops are ignored.
    fn connect(&mut self, x: Element, y: Element) {
        if x != y {
            self.rows[x].insert(y);
            self.rows[y].insert(x);
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn adjacent(&self, x: Element, y: Element) -> bool {
        self.rows[x].contains(y)
    }

    pub fn neighbors(&self, x: Element) -> impl Iterator<Item = Element> + '_ {
        self.rows[x].ones()
    }

    pub fn degree(&self, x: Element) -> usize {
        self.rows[x].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Element, Element)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// First non-adjacent pair of distinct vertices, if the graph is not complete.
    pub fn first_missing_pair(&self) -> Option<(Element, Element)> {
        let n = self.order();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| !self.adjacent(u, v))
    }

    /// First pair adjacent in exactly one of the two graphs.
    pub fn first_difference(&self, other: &SimpleGraph) -> Result<Option<(Element, Element)>> {
        self.check_source(other)?;
        let n = self.order();
        Ok((0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| self.adjacent(u, v) != other.adjacent(u, v)))
    }

    fn check_source(&self, other: &SimpleGraph) -> Result<()> {
        let same_source = match (self.source, other.source) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        };
        if self.order() != other.order() || !same_source {
            return Err(Error::SourceMismatch);
        }
        Ok(())
    }

    fn label(&self, x: Element) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => format!("e{x}"),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph {} {{", self.kind).unwrap();
        for x in 0..self.order() {
            let label = self.label(x).replace('\\', "\\\\").replace('"', "\\\"");
            writeln!(out, "  {x} [label=\"{label}\"];").unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_graph_file(&self) -> GraphFile {
        GraphFile {
            order: self.order(),
            kind: self.kind,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_graph_file()).expect("graph serializes")
    }

    /// Re-imports an exported graph. The result is detached from any
    /// semigroup, so it compares against graphs of any source of equal order.
    pub fn from_graph_file(file: &GraphFile) -> Result<Self> {
        let n = file.order;
        let mut g = SimpleGraph {
            kind: file.kind,
            source: None,
            names: None,
            rows: vec![FixedBitSet::with_capacity(n); n],
        };
        for &[u, v] in &file.edges {
            if u >= n || v >= n || u == v {
                return Err(Error::Json(format!("invalid edge [{u},{v}] for order {n}")));
            }
            g.connect(u, v);
        }
        Ok(g)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_graph_file(&serde_json::from_str(text)?)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("kind", &self.kind)
            .field("order", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

/// JSON export schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub order: usize,
    pub kind: GraphKind,
    pub edges: Vec<[Element; 2]>,
}

/// `x ~ y` iff one is a positive power of the other.
pub fn power_graph(s: &Semigroup) -> SimpleGraph {
    let mut g = SimpleGraph::empty(s, GraphKind::Power);
    for p in s.profiles() {
        for &x in &p.orbit {
            g.connect(p.generator, x);
        }
    }
    g
}

/// `x ~ y` iff `<x, y>` is monogenic.
pub fn cyclic_graph(s: &Semigroup) -> SimpleGraph {
    let mut g = SimpleGraph::empty(s, GraphKind::Cyclic);
    let mut verdicts: HashMap<ElementSet, bool> = HashMap::new();
    for x in s.elements() {
        for y in x + 1..s.order() {
            let closed = closure(s, [x, y]);
            let monogenic = *verdicts
                .entry(closed)
                .or_insert_with_key(|c| monogenic_generator(s, c).is_some());
            if monogenic {
                g.connect(x, y);
            }
        }
    }
    g
}

/// `x ~ y` iff both lie in one monogenic subsemigroup `<z>`.
pub fn enhanced_power_graph(s: &Semigroup) -> SimpleGraph {
    let mut g = SimpleGraph::empty(s, GraphKind::EnhancedPower);
    for p in s.profiles() {
        for (i, &x) in p.orbit.iter().enumerate() {
            for &y in &p.orbit[i + 1..] {
                g.connect(x, y);
            }
        }
    }
    g
}

/// `x ~ y` iff `xy = yx`.
pub fn commuting_graph(s: &Semigroup) -> SimpleGraph {
    let mut g = SimpleGraph::empty(s, GraphKind::Commuting);
    for x in s.elements() {
        for y in x + 1..s.order() {
            if s.commutes(x, y) {
                g.connect(x, y);
            }
        }
    }
    g
}

pub fn build_graph(s: &Semigroup, kind: GraphKind) -> SimpleGraph {
    match kind {
        GraphKind::Power => power_graph(s),
        GraphKind::Cyclic => cyclic_graph(s),
        GraphKind::EnhancedPower => enhanced_power_graph(s),
        GraphKind::Commuting => commuting_graph(s),
    }
}

/// Any two distinct vertices are adjacent; vacuously true for order <= 1.
pub fn is_complete(g: &SimpleGraph) -> bool {
    g.first_missing_pair().is_none()
}

pub fn graphs_equal(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<bool> {
    g1.check_source(g2)?;
    Ok(g1.rows == g2.rows)
}

/// `g1 ⪯ g2`: same vertices and every edge of `g1` is an edge of `g2`.
pub fn is_spanning_subgraph(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<bool> {
    g1.check_source(g2)?;
    Ok(g1.rows.iter().zip(&g2.rows).all(|(a, b)| a.is_subset(b)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

pub fn export_graph(g: &SimpleGraph, format: &str) -> Result<String> {
    Ok(match format.parse()? {
        ExportFormat::Dot => g.to_dot(),
        ExportFormat::Json => g.to_json(),
    })
}

/// All four graphs of one semigroup.
#[derive(Debug, Clone)]
pub struct GraphSet {
    pub power: SimpleGraph,
    pub cyclic: SimpleGraph,
    pub enhanced: SimpleGraph,
    pub commuting: SimpleGraph,
}

impl GraphSet {
    pub fn build(s: &Semigroup) -> Self {
        GraphSet {
            power: power_graph(s),
            cyclic: cyclic_graph(s),
            enhanced: enhanced_power_graph(s),
            commuting: commuting_graph(s),
        }
    }

    pub fn get(&self, kind: GraphKind) -> &SimpleGraph {
        match kind {
            GraphKind::Power => &self.power,
            GraphKind::Cyclic => &self.cyclic,
            GraphKind::EnhancedPower => &self.enhanced,
            GraphKind::Commuting => &self.commuting,
        }
    }

    /// First link of `Pow ⪯ Γ ⪯ P_e ⪯ P_c` that fails, with an offending edge.
    pub fn chain_violation(&self) -> Option<(GraphKind, GraphKind, (Element, Element))> {
        let chain = [&self.power, &self.cyclic, &self.enhanced, &self.commuting];
        chain.windows(2).find_map(|pair| {
            let (lower, upper) = (pair[0], pair[1]);
            lower
                .edges()
                .into_iter()
                .find(|&(u, v)| !upper.adjacent(u, v))
                .map(|e| (lower.kind, upper.kind, e))
        })
    }
}
