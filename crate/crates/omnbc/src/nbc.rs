//! Broken circuits and NBC subsets of an ordered matroid.
//!
//! The order is always the element-index order. A broken circuit is a circuit
//! with its maximal element removed; a subset is NBC if it contains no broken
//! circuit. A loop produces the empty broken circuit, so a matroid with a
//! loop has no NBC subsets at all (not even the empty set).

use crate::om::Matroid;
use crate::set::{Element, ElemSet};

/// A broken circuit together with the maximal element that was removed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BrokenCircuit {
    /// The circuit minus its maximum.
    pub elements: ElemSet,
    /// The removed maximum; `elements ∪ {source_max}` is a circuit.
    pub source_max: Element,
}

impl Matroid {
    /// All broken circuits, one per circuit. Distinct circuits may produce
    /// equal element sets; they are kept separately here for provenance and
    /// deduplicated by [`Matroid::broken_circuit_sets`] for membership tests.
    pub fn broken_circuits(&self) -> Vec<BrokenCircuit> {
        self.circuits()
            .iter()
            .map(|&c| {
                let max = c.max().expect("circuits are nonempty");
                BrokenCircuit {
                    elements: c.without(max),
                    source_max: max,
                }
            })
            .collect()
    }

    /// The distinct broken-circuit element sets.
    pub fn broken_circuit_sets(&self) -> Vec<ElemSet> {
        let mut sets: Vec<ElemSet> = self
            .broken_circuits()
            .into_iter()
            .map(|b| b.elements)
            .collect();
        sets.sort();
        sets.dedup();
        sets
    }

    /// True iff `s` contains no broken circuit.
    pub fn is_nbc(&self, s: ElemSet) -> bool {
        assert!(s.is_subset_of(self.ground()), "NBC query outside ground set");
        !self
            .broken_circuit_sets()
            .iter()
            .any(|&b| b.is_subset_of(s))
    }

    /// If `s` is not NBC, some broken circuit contained in it.
    pub fn contained_broken_circuit(&self, s: ElemSet) -> Option<ElemSet> {
        self.broken_circuit_sets()
            .into_iter()
            .find(|&b| b.is_subset_of(s))
    }

    /// All NBC subsets, in lexicographic order of characteristic vectors.
    ///
    /// The search prunes a branch as soon as the partial set contains a broken
    /// circuit; NBC-ness is downward closed, so this is exhaustive.
    pub fn enumerate_nbc(&self) -> Vec<ElemSet> {
        let broken = self.broken_circuit_sets();
        if broken.iter().any(|b| b.is_empty()) {
            // A loop breaks every subset.
            return Vec::new();
        }
        let elements: Vec<Element> = self.ground().iter().collect();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, ElemSet::empty())];
        // Depth-first, excluding each element before including it: leaves are
        // visited exactly in lexicographic order of characteristic vectors.
        while let Some((depth, current)) = stack.pop() {
            if depth == elements.len() {
                out.push(current);
                continue;
            }
            let e = elements[depth];
            let extended = current.with(e);
            if !broken
                .iter()
                .any(|&b| b.contains(e) && b.is_subset_of(extended))
            {
                stack.push((depth + 1, extended));
            }
            stack.push((depth + 1, current));
        }
        out
    }
}
