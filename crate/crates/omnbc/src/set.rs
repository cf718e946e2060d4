//! Ground-set elements and small element sets.
//!
//! Elements are 1-based indices `e_1, e_2, ...` into an ordered ground set;
//! the total order used everywhere in this crate is the index order.
//! [`ElemSet`] is a bitset over at most [`ElemSet::MAX_ELEMENTS`] elements,
//! which is plenty for the instance sizes this crate targets.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// A ground-set element, identified by its 1-based index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Element(u32);

impl Element {
    /// Creates the element `e_index`.
    ///
    /// Panics if `index` is zero or exceeds [`ElemSet::MAX_ELEMENTS`].
    pub fn new(index: usize) -> Element {
        assert!(
            (1..=ElemSet::MAX_ELEMENTS).contains(&index),
            "element index {index} out of range 1..={}",
            ElemSet::MAX_ELEMENTS
        );
        Element(index as u32)
    }

    /// The 1-based index of this element.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A set of elements, stored as a bitmask (bit `i-1` set iff `e_i` is in the set).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u64);

impl ElemSet {
    /// Largest element index representable.
    pub const MAX_ELEMENTS: usize = 64;

    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn empty() -> ElemSet {
        ElemSet(0)
    }

    pub fn singleton(e: Element) -> ElemSet {
        ElemSet(1 << (e.0 - 1))
    }

    /// The prefix set `{e_1, ..., e_k}`.
    pub fn prefix(k: usize) -> ElemSet {
        assert!(k <= Self::MAX_ELEMENTS);
        if k == 0 {
            ElemSet(0)
        } else {
            ElemSet(u64::MAX >> (64 - k))
        }
    }

    /// The full ground set `{e_1, ..., e_m}`.
    pub fn full(m: usize) -> ElemSet {
        Self::prefix(m)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: Element) -> bool {
        self.0 & (1 << (e.0 - 1)) != 0
    }

    pub fn with(self, e: Element) -> ElemSet {
        ElemSet(self.0 | (1 << (e.0 - 1)))
    }

    pub fn without(self, e: Element) -> ElemSet {
        ElemSet(self.0 & !(1 << (e.0 - 1)))
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: ElemSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<Element> {
        if self.0 == 0 {
            None
        } else {
            Some(Element(self.0.trailing_zeros() + 1))
        }
    }

    /// Largest element, if any. This is the maximum with respect to the
    /// ground-set order.
    pub fn max(self) -> Option<Element> {
        if self.0 == 0 {
            None
        } else {
            Some(Element(64 - self.0.leading_zeros()))
        }
    }

    /// Iterates elements in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = Element> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros();
                bits &= bits - 1;
                Some(Element(i + 1))
            }
        })
    }

    /// Sort key realizing lexicographic order of characteristic vectors
    /// `(chi_1, ..., chi_m)`: the vector is read with `e_1` most significant.
    pub fn lex_key(self, m: usize) -> u64 {
        assert!(m <= Self::MAX_ELEMENTS);
        if m == 0 {
            return 0;
        }
        self.0.reverse_bits() >> (64 - m)
    }

    /// All subsets of `ground` in lexicographic order of characteristic vectors.
    pub fn subsets_lex(ground: ElemSet) -> impl Iterator<Item = ElemSet> {
        let elems: Vec<Element> = ground.iter().collect();
        let n = elems.len();
        (0u64..(1u64 << n)).map(move |code| {
            // bit j of `code` (from the most significant of the n positions)
            // decides membership of elems[j]
            let mut s = ElemSet::empty();
            for (j, &e) in elems.iter().enumerate() {
                if code & (1 << (n - 1 - j)) != 0 {
                    s = s.with(e);
                }
            }
            s
        })
    }
}

impl BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: ElemSet) -> ElemSet {
        self.union(rhs)
    }
}

impl BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: ElemSet) -> ElemSet {
        self.intersection(rhs)
    }
}

impl Sub for ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: ElemSet) -> ElemSet {
        self.difference(rhs)
    }
}

impl FromIterator<Element> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> ElemSet {
        let mut s = ElemSet::empty();
        for e in iter {
            s = s.with(e);
        }
        s
    }
}

impl fmt::Display for ElemSet {
    /// Paper-style rendering: `e1e3` for `{e_1, e_3}`, `∅` for the empty set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        for e in self.iter() {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Convenience constructor used pervasively in tests: `elems(&[1, 3])` is `{e1, e3}`.
pub fn elems(indices: &[usize]) -> ElemSet {
    indices.iter().map(|&i| Element::new(i)).collect()
}
