use alloc::vec::Vec;
use core::fmt;

/// A set of facet indices (0-based), stored as a bitmask.
///
/// Displayed 1-based, e.g. `{1,3}`, to match facet line numbering in
/// polytope files.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FacetSet(u64);

impl FacetSet {
    pub const fn empty() -> Self {
        FacetSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        FacetSet(bits)
    }

    pub fn singleton(i: usize) -> Self {
        FacetSet(1 << i)
    }

    /// All facets `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            FacetSet(u64::MAX)
        } else {
            FacetSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        FacetSet(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn with(self, i: usize) -> Self {
        FacetSet(self.0 | (1 << i))
    }

    pub fn union(self, other: FacetSet) -> Self {
        FacetSet(self.0 | other.0)
    }

    pub fn intersection(self, other: FacetSet) -> Self {
        FacetSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: FacetSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits & (1 << i) != 0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `0..n` with exactly `size` elements, in increasing
    /// bitmask order.
    pub fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = FacetSet> {
        let limit: u64 = if n >= 64 { u64::MAX } else { 1 << n };
        // Gosper's hack walks same-popcount masks in increasing order
        let mut next = if size == 0 {
            Some(0u64)
        } else if size > n {
            None
        } else {
            Some((1u64 << size) - 1)
        };
        core::iter::from_fn(move || {
            let cur = next?;
            if size > 0 && cur >= limit {
                return None;
            }
            next = if cur == 0 {
                None
            } else {
                let c = cur & cur.wrapping_neg();
                let r = cur.wrapping_add(c);
                if r == 0 {
                    None
                } else {
                    Some((((r ^ cur) >> 2) / c) | r)
                }
            };
            Some(FacetSet(cur))
        })
    }
}

impl fmt::Display for FacetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for FacetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
