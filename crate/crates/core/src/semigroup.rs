use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profile::MonogenicProfile;
use crate::{Element, ElementSet};

/// A finite semigroup given by its Cayley table over the dense ids `0..order`.
///
/// Construction validates closure and associativity, so every other
/// operation in the crate may assume a valid table. Per-element monogenic
/// profiles are computed on first use and cached.
#[derive(Clone)]
pub struct Semigroup {
    order: usize,
    table: Vec<Element>,
    names: Option<Vec<String>>,
    profiles: OnceLock<Vec<MonogenicProfile>>,
}

/// On-disk form of a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

/// Checks closure and then associativity, reporting the first failing
/// triple in lexicographic order.
pub fn validate_table(order: usize, table: &[Vec<usize>]) -> Result<Semigroup> {
    if order == 0 {
        return Err(Error::EmptyTable);
    }
    if table.len() != order {
        return Err(Error::BadRowCount {
            order,
            rows: table.len(),
        });
    }
    let mut flat = Vec::with_capacity(order * order);
    for (x, row) in table.iter().enumerate() {
        if row.len() != order {
            return Err(Error::BadShape {
                order,
                row: x,
                len: row.len(),
            });
        }
        for (y, &value) in row.iter().enumerate() {
            if value >= order {
                return Err(Error::OutOfRangeEntry { x, y, value, order });
            }
            flat.push(value);
        }
    }
    Semigroup::from_flat(order, flat)
}

impl Semigroup {
    /// Builds from a row-major flat table of length `order * order`.
    pub fn from_flat(order: usize, table: Vec<Element>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        if table.len() != order * order {
            return Err(Error::BadRowCount {
                order,
                rows: table.len() / order,
            });
        }
        if let Some(i) = table.iter().position(|&v| v >= order) {
            return Err(Error::OutOfRangeEntry {
                x: i / order,
                y: i % order,
                value: table[i],
                order,
            });
        }
        let s = Semigroup {
            order,
            table,
            names: None,
            profiles: OnceLock::new(),
        };
        s.check_associative()?;
        Ok(s)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.product(x, y);
                for z in 0..n {
                    let left = self.product(xy, z);
                    let right = self.product(x, self.product(y, z));
                    if left != right {
                        return Err(Error::NotAssociative {
                            x,
                            y,
                            z,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::BadNames {
                order: self.order,
                found: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn product(&self, x: Element, y: Element) -> Element {
        self.table[x * self.order + y]
    }

    /// Bounds-checked variant of [`Semigroup::product`].
    pub fn try_product(&self, x: Element, y: Element) -> Result<Element> {
        for e in [x, y] {
            if e >= self.order {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    order: self.order,
                });
            }
        }
        Ok(self.product(x, y))
    }

    pub fn row(&self, x: Element) -> &[Element] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn flat_table(&self) -> &[Element] {
        &self.table
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of `x`: its name when present, otherwise `e{x}`.
    pub fn label(&self, x: Element) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => format!("e{x}"),
        }
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn commutes(&self, x: Element, y: Element) -> bool {
        self.product(x, y) == self.product(y, x)
    }

    pub fn is_idempotent(&self, x: Element) -> bool {
        self.product(x, x) == x
    }

    /// Profiles of every element, indexed by element id.
    pub fn profiles(&self) -> &[MonogenicProfile] {
        self.profiles
            .get_or_init(|| self.elements().map(|a| MonogenicProfile::compute(self, a)).collect())
    }

    pub fn profile(&self, a: Element) -> &MonogenicProfile {
        &self.profiles()[a]
    }

    /// Stable fingerprint of the table, used to tell graphs of different
    /// semigroups apart.
    pub fn fingerprint(&self) -> u64 {
        // FNV-1a over order and entries.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for v in std::iter::once(self.order).chain(self.table.iter().copied()) {
            for b in (v as u64).to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        }
        h
    }

    pub fn to_table_file(&self) -> TableFile {
        TableFile {
            order: self.order,
            table: self.table.chunks(self.order).map(<[_]>::to_vec).collect(),
            names: self.names.clone(),
        }
    }

    pub fn from_table_file(file: &TableFile) -> Result<Self> {
        let s = validate_table(file.order, &file.table)?;
        match &file.names {
            Some(names) => s.with_names(names.clone()),
            None => Ok(s),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: TableFile = serde_json::from_str(text)?;
        Self::from_table_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_table_file()).expect("table serializes")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json(&text)
    }
}

impl PartialEq for Semigroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for Semigroup {}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semigroup")
            .field("order", &self.order)
            .field("table", &self.table)
            .finish()
    }
}
