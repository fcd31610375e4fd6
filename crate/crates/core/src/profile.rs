use crate::{Element, ElementSet, Semigroup};

/// Index, period and powers of a single element.
///
/// `orbit[k]` holds `a^(k+1)`, so the orbit has `index + period - 1`
/// pairwise distinct entries and the kernel is its tail of length `period`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonogenicProfile {
    pub generator: Element,
    pub index: usize,
    pub period: usize,
    pub orbit: Vec<Element>,
    pub orbit_set: ElementSet,
    pub idempotent: Element,
}

impl MonogenicProfile {
    pub(crate) fn compute(s: &Semigroup, a: Element) -> Self {
        // first_seen[x] = exponent at which x first appeared
        let mut first_seen = vec![0usize; s.order()];
        let mut orbit = Vec::new();
        let mut power = a;
        let mut exponent = 1;
        let (index, period) = loop {
            let seen = first_seen[power];
            if seen != 0 {
                break (seen, exponent - seen);
            }
            first_seen[power] = exponent;
            orbit.push(power);
            power = s.product(power, a);
            exponent += 1;
        };
        // a^k is idempotent iff k >= index and period divides k
        let k = index.div_ceil(period) * period;
        let idempotent = orbit[k - 1];
        let orbit_set = ElementSet::from_elements(s.order(), orbit.iter().copied());
        MonogenicProfile {
            generator: a,
            index,
            period,
            orbit,
            orbit_set,
            idempotent,
        }
    }

    /// The cyclic group `{a^m, ..., a^(m+r-1)}`.
    pub fn kernel(&self) -> &[Element] {
        &self.orbit[self.index - 1..]
    }

    pub fn kernel_set(&self) -> ElementSet {
        ElementSet::from_elements(self.orbit_set.universe(), self.kernel().iter().copied())
    }

    /// `a^exponent` for any positive exponent, via the normal form
    /// `a^s = a^(m + (s - m) mod r)` for `s >= m`.
    pub fn power(&self, exponent: usize) -> Element {
        assert!(exponent >= 1, "exponents start at 1");
        let reduced = if exponent < self.index + self.period {
            exponent
        } else {
            self.index + (exponent - self.index) % self.period
        };
        self.orbit[reduced - 1]
    }

    /// Number of elements of the orbit, `m + r - 1`.
    pub fn order(&self) -> usize {
        self.orbit.len()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.orbit_set.contains(x)
    }
}

/// Index, period, powers, kernel and idempotent of `a`.
pub fn monogenic_profile(s: &Semigroup, a: Element) -> crate::Result<MonogenicProfile> {
    if a >= s.order() {
        return Err(crate::Error::ElementOutOfRange {
            element: a,
            order: s.order(),
        });
    }
    Ok(s.profile(a).clone())
}
