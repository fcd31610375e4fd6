//! Subsemigroup closure and the structural invariants built on it.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::{Element, ElementSet, Semigroup};

/// Least product-closed superset of `generators`.
pub fn generated(s: &Semigroup, generators: &ElementSet) -> Result<ElementSet> {
    if generators.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    Ok(closure(s, generators.iter()))
}

/// Closure of a nonempty list of elements. Every new element is multiplied
/// on both sides by every member collected so far.
pub(crate) fn closure(s: &Semigroup, generators: impl IntoIterator<Item = Element>) -> ElementSet {
    let mut set = ElementSet::empty(s.order());
    let mut members = Vec::new();
    for g in generators {
        if set.insert(g) {
            members.push(g);
        }
    }
    let mut next = 0;
    while next < members.len() {
        let u = members[next];
        next += 1;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for p in [s.product(u, v), s.product(v, u)] {
                if set.insert(p) {
                    members.push(p);
                }
            }
        }
    }
    set
}

pub fn idempotents(s: &Semigroup) -> ElementSet {
    ElementSet::from_elements(s.order(), s.elements().filter(|&e| s.is_idempotent(e)))
}

pub fn is_commutative(s: &Semigroup) -> bool {
    s.elements()
        .all(|x| (x + 1..s.order()).all(|y| s.commutes(x, y)))
}

/// Fails with [`Error::NotClosed`] on the first product escaping `subset`.
pub fn check_closed(s: &Semigroup, subset: &ElementSet) -> Result<()> {
    for x in subset.iter() {
        for y in subset.iter() {
            let product = s.product(x, y);
            if !subset.contains(product) {
                return Err(Error::NotClosed { x, y, product });
            }
        }
    }
    Ok(())
}

/// Least `a` in a closed subset whose powers exhaust it, if any.
pub fn is_monogenic(s: &Semigroup, subset: &ElementSet) -> Result<Option<Element>> {
    if subset.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    check_closed(s, subset)?;
    Ok(monogenic_generator(s, subset))
}

/// Same as [`is_monogenic`] without the closure check.
pub(crate) fn monogenic_generator(s: &Semigroup, closed: &ElementSet) -> Option<Element> {
    let size = closed.len();
    // the orbit of a member never leaves a closed set, so equal size means equal set
    closed.iter().find(|&a| s.profile(a).order() == size)
}

/// The whole semigroup is monogenic.
pub fn monogenic_generator_of(s: &Semigroup) -> Option<Element> {
    s.elements().find(|&a| s.profile(a).order() == s.order())
}

/// Groups elements by the idempotent their powers reach.
pub fn s_f_partition(s: &Semigroup) -> BTreeMap<Element, ElementSet> {
    let mut blocks: BTreeMap<Element, ElementSet> = BTreeMap::new();
    for a in s.elements() {
        blocks
            .entry(s.profile(a).idempotent)
            .or_insert_with(|| ElementSet::empty(s.order()))
            .insert(a);
    }
    blocks
}

/// The group of units of the monoid `fSf`, i.e. the largest subgroup with
/// identity `f`.
pub fn maximal_subgroup_at(s: &Semigroup, f: Element) -> Result<ElementSet> {
    if f >= s.order() {
        return Err(Error::ElementOutOfRange {
            element: f,
            order: s.order(),
        });
    }
    if !s.is_idempotent(f) {
        return Err(Error::NotIdempotent(f));
    }
    let fixed: Vec<Element> = s
        .elements()
        .filter(|&x| s.product(x, f) == x && s.product(f, x) == x)
        .collect();
    let group = ElementSet::from_elements(
        s.order(),
        fixed.iter().copied().filter(|&x| {
            fixed
                .iter()
                .any(|&y| s.product(x, y) == f && s.product(y, x) == f)
        }),
    );
    debug_assert!(check_closed(s, &group).is_ok());
    Ok(group)
}

/// Distinct orbits of index-1 elements, sorted by size and then by members.
pub fn cyclic_subgroups(s: &Semigroup) -> Vec<ElementSet> {
    let mut groups: Vec<ElementSet> = s
        .profiles()
        .iter()
        .filter(|p| p.index == 1)
        .map(|p| p.orbit_set.clone())
        .collect();
    groups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
    groups.dedup();
    groups
}

/// A commuting pair `x, y` of equal prime order `p` inside one maximal
/// subgroup with `y` outside `<x>`; they generate a copy of `C_p x C_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CpxCpWitness {
    pub x: Element,
    pub y: Element,
    pub prime: usize,
}

pub fn find_cpxcp_subgroup(s: &Semigroup) -> Option<CpxCpWitness> {
    for f in idempotents(s).iter() {
        let group = maximal_subgroup_at(s, f).expect("f is idempotent");
        let members: Vec<Element> = group
            .iter()
            .filter(|&x| is_prime(s.profile(x).order()))
            .collect();
        for (i, &x) in members.iter().enumerate() {
            let px = s.profile(x);
            for &y in &members[i + 1..] {
                if s.profile(y).order() == px.order() && s.commutes(x, y) && !px.contains(y) {
                    return Some(CpxCpWitness {
                        x,
                        y,
                        prime: px.order(),
                    });
                }
            }
        }
    }
    None
}

pub fn has_cpxcp_subgroup(s: &Semigroup) -> bool {
    find_cpxcp_subgroup(s).is_some()
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// True for `p^k` with `p` prime and `k >= 0`, so 1 counts.
pub fn is_prime_power(n: usize) -> bool {
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).expect("n >= 2 has a divisor");
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}
