//! Named semigroup families with fixed element-id layouts.
//!
//! | family           | order      | id layout                                  |
//! |------------------|------------|--------------------------------------------|
//! | `M(m,r)`         | `m+r-1`    | id `i` is `a^(i+1)`                        |
//! | `C(n)`           | `n`        | `M(1,n)`; the identity is id `n-1`         |
//! | `B(n)`           | `n^2+1`    | id 0 is zero, `(i,j)` is `(i-1)*n + j`     |
//! | `Zmult(n)`       | `n`        | id `i` is the residue `i`                  |
//! | `Signs`          | 3          | `0 -> -1`, `1 -> 0`, `2 -> 1`              |
//! | `AxB`            | `|A|*|B|`  | `(a,b)` is `a*|B| + b`                     |

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::Semigroup;

fn build(order: usize, names: Vec<String>, op: impl Fn(usize, usize) -> usize) -> Result<Semigroup> {
    let table = (0..order * order).map(|i| op(i / order, i % order)).collect();
    Semigroup::from_flat(order, table)?.with_names(names)
}

/// `M(m, r) = <a : a^m = a^(m+r)>`.
pub fn make_monogenic(index: usize, period: usize) -> Result<Semigroup> {
    if index < 1 || period < 1 {
        return Err(Error::InvalidParameters(format!(
            "M({index},{period}) needs index >= 1 and period >= 1"
        )));
    }
    let order = index + period - 1;
    let reduce = |s: usize| {
        if s < index + period {
            s
        } else {
            index + (s - index) % period
        }
    };
    let names = (1..=order)
        .map(|k| if k == 1 { "a".to_string() } else { format!("a^{k}") })
        .collect();
    build(order, names, |i, j| reduce(i + j + 2) - 1)
}

pub fn make_cyclic_group(n: usize) -> Result<Semigroup> {
    if n < 1 {
        return Err(Error::InvalidParameters("C(n) needs n >= 1".into()));
    }
    make_monogenic(1, n)
}

pub fn make_brandt(n: usize) -> Result<Semigroup> {
    if n < 1 {
        return Err(Error::InvalidParameters("B(n) needs n >= 1".into()));
    }
    let order = n * n + 1;
    let pair = |id: usize| ((id - 1) / n, (id - 1) % n);
    let mut names = vec!["0".to_string()];
    names.extend((1..order).map(|id| {
        let (i, j) = pair(id);
        format!("({},{})", i + 1, j + 1)
    }));
    build(order, names, |x, y| {
        if x == 0 || y == 0 {
            return 0;
        }
        let ((i, j), (k, l)) = (pair(x), pair(y));
        if j == k {
            i * n + l + 1
        } else {
            0
        }
    })
}

pub fn make_zn_mult(n: usize) -> Result<Semigroup> {
    if n < 1 {
        return Err(Error::InvalidParameters("Zmult(n) needs n >= 1".into()));
    }
    build(n, (0..n).map(|i| i.to_string()).collect(), |x, y| x * y % n)
}

/// `{-1, 0, 1}` under ordinary multiplication.
pub fn signs_semigroup() -> Semigroup {
    const VALUES: [i8; 3] = [-1, 0, 1];
    let id = |v: i8| VALUES.iter().position(|&w| w == v).unwrap();
    build(
        3,
        VALUES.iter().map(|v| v.to_string()).collect(),
        |x, y| id(VALUES[x] * VALUES[y]),
    )
    .expect("signs table is a semigroup")
}

pub fn make_direct_product(a: &Semigroup, b: &Semigroup) -> Semigroup {
    let nb = b.order();
    let names = (0..a.order() * nb)
        .map(|id| format!("({},{})", a.label(id / nb), b.label(id % nb)))
        .collect();
    build(a.order() * nb, names, |x, y| {
        a.product(x / nb, y / nb) * nb + b.product(x % nb, y % nb)
    })
    .expect("direct product of semigroups is a semigroup")
}

/// A semigroup named by family and parameters, or by a table file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Monogenic { index: usize, period: usize },
    CyclicGroup(usize),
    Brandt(usize),
    ZnMult(usize),
    Signs,
    DirectProduct(Box<FamilySpec>, Box<FamilySpec>),
    FromFile(PathBuf),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Semigroup> {
        match self {
            FamilySpec::Monogenic { index, period } => make_monogenic(*index, *period),
            FamilySpec::CyclicGroup(n) => make_cyclic_group(*n),
            FamilySpec::Brandt(n) => make_brandt(*n),
            FamilySpec::ZnMult(n) => make_zn_mult(*n),
            FamilySpec::Signs => Ok(signs_semigroup()),
            FamilySpec::DirectProduct(a, b) => Ok(make_direct_product(&a.build()?, &b.build()?)),
            FamilySpec::FromFile(path) => Semigroup::load(path),
        }
    }

    pub fn product(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::DirectProduct(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Monogenic { index, period } => write!(f, "M({index},{period})"),
            FamilySpec::CyclicGroup(n) => write!(f, "C({n})"),
            FamilySpec::Brandt(n) => write!(f, "B({n})"),
            FamilySpec::ZnMult(n) => write!(f, "Zmult({n})"),
            FamilySpec::Signs => write!(f, "Signs"),
            FamilySpec::DirectProduct(a, b) => write!(f, "{a}x{b}"),
            FamilySpec::FromFile(p) => write!(f, "{}", p.display()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Grammar, case-insensitive: `factor ("x" factor)*` where a factor is
    /// `name "(" int ("," int)* ")"` or `Signs`. Inputs ending in `.json`
    /// or containing a path separator name a table file.
    fn from_str(input: &str) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed.to_ascii_lowercase().ends_with(".json") || trimmed.contains(['/', '\\']) {
            return Ok(FamilySpec::FromFile(PathBuf::from(trimmed)));
        }
        let bad = |reason: &str| Error::BadConstruct {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = trimmed
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_lowercase();
        if compact.is_empty() {
            return Err(bad("empty construct"));
        }
        let mut factors = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        for (i, c) in compact.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(bad("unbalanced parentheses"));
                    }
                }
                'x' if depth == 0 => {
                    factors.push(&compact[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(bad("unbalanced parentheses"));
        }
        factors.push(&compact[start..]);
        let mut specs = factors.into_iter().map(|f| parse_factor(f).map_err(|r| bad(&r)));
        let first = specs.next().expect("at least one factor")?;
        specs.try_fold(first, |acc, next| Ok(FamilySpec::product(acc, next?)))
    }
}

fn parse_factor(text: &str) -> std::result::Result<FamilySpec, String> {
    if text.is_empty() {
        return Err("empty factor".into());
    }
    let (name, args) = match text.find('(') {
        Some(open) => {
            let inner = text[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| format!("{text:?} must end with ')'"))?;
            let args = if inner.is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|a| a.parse::<usize>().map_err(|_| format!("bad integer {a:?}")))
                    .collect::<std::result::Result<Vec<_>, _>>()?
            };
            (&text[..open], args)
        }
        None => (text, Vec::new()),
    };
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(format!("{name} takes {n} argument(s), got {}", args.len()))
        }
    };
    match name {
        "m" => arity(2).map(|_| FamilySpec::Monogenic {
            index: args[0],
            period: args[1],
        }),
        "c" => arity(1).map(|_| FamilySpec::CyclicGroup(args[0])),
        "b" => arity(1).map(|_| FamilySpec::Brandt(args[0])),
        "zmult" => arity(1).map(|_| FamilySpec::ZnMult(args[0])),
        "signs" => arity(0).map(|_| FamilySpec::Signs),
        other => Err(format!("unknown family {other:?}")),
    }
}
