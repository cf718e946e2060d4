//! Matroids and oriented matroids given by their (signed) circuits.
//!
//! An oriented matroid is stored as the full collection of signed circuits,
//! both signs of every circuit explicitly present. Minors keep the global
//! element indices of the original ground set: deleting or contracting never
//! re-indexes, so `e_k` means the same element before and after taking a
//! minor. Both choices keep the stepwise bijection code free of index
//! bookkeeping.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::set::{Element, ElemSet};

/// A signed subset `X = (X^+, X^-)` with disjoint positive and negative parts.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedSubset {
    pos: ElemSet,
    neg: ElemSet,
}

impl SignedSubset {
    /// Builds a signed subset; the two parts must be disjoint.
    pub fn new(pos: ElemSet, neg: ElemSet) -> Result<SignedSubset, OmError> {
        if !pos.is_disjoint_from(neg) {
            return Err(OmError::OverlappingSigns {
                overlap: pos.intersection(neg),
            });
        }
        Ok(SignedSubset { pos, neg })
    }

    pub fn positive(&self) -> ElemSet {
        self.pos
    }

    pub fn negative(&self) -> ElemSet {
        self.neg
    }

    /// The support `X^+ ∪ X^-`.
    pub fn support(&self) -> ElemSet {
        self.pos | self.neg
    }

    /// The opposite `-X = (X^-, X^+)`.
    pub fn opposite(&self) -> SignedSubset {
        SignedSubset {
            pos: self.neg,
            neg: self.pos,
        }
    }

    /// True iff `X^- = ∅` (and the subset is nonempty).
    pub fn is_positive(&self) -> bool {
        self.neg.is_empty() && !self.pos.is_empty()
    }

    /// Sign reversal on `a`: `X^+ := (X^+ - a) ∪ (X^- ∩ a)` and symmetrically.
    pub fn reorient(&self, a: ElemSet) -> SignedSubset {
        SignedSubset {
            pos: (self.pos - a) | (self.neg & a),
            neg: (self.neg - a) | (self.pos & a),
        }
    }

    /// Restriction away from `x`: `X \ x = (X^+ - x, X^- - x)`.
    pub fn restrict_away(&self, x: ElemSet) -> SignedSubset {
        SignedSubset {
            pos: self.pos - x,
            neg: self.neg - x,
        }
    }
}

impl fmt::Display for SignedSubset {
    /// Paper-style `(e1e2, e4)` with `∅` for an empty part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.pos, self.neg)
    }
}

impl fmt::Debug for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Violation of one of the signed-circuit axioms, with witnesses.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum OmAxiomViolation {
    #[error("axiom C1 violated: the empty signed subset is listed as a circuit")]
    EmptySigned,
    #[error("axiom C2 violated: {circuit} is a circuit but its opposite is not")]
    MissingOpposite { circuit: SignedSubset },
    #[error("axiom C3 violated: support of {inner} is contained in support of {outer}, but the circuits are neither equal nor opposite")]
    SupportComparable {
        inner: SignedSubset,
        outer: SignedSubset,
    },
    #[error("axiom C4 violated: no weak elimination of {element} between {x} and {y}")]
    NoElimination {
        x: SignedSubset,
        y: SignedSubset,
        element: Element,
    },
}

/// Violation of one of the (unsigned) circuit axioms, with witnesses.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum MatroidAxiomViolation {
    #[error("axiom C1 violated: the empty set is listed as a circuit")]
    EmptyCircuit,
    #[error("axiom C2 violated: circuit {inner} is properly contained in circuit {outer}")]
    ProperContainment { inner: ElemSet, outer: ElemSet },
    #[error("axiom C3 violated: no circuit inside {x} ∪ {y} - {element}")]
    NoExchange {
        x: ElemSet,
        y: ElemSet,
        element: Element,
    },
}

/// Errors raised by construction and validation of (oriented) matroids.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum OmError {
    #[error("element {element} out of range 1..={bound}")]
    ElementOutOfRange { element: Element, bound: usize },
    #[error("ground set size {m} exceeds the supported maximum {max}")]
    GroundTooLarge { m: usize, max: usize },
    #[error("positive and negative parts overlap on {overlap}")]
    OverlappingSigns { overlap: ElemSet },
    #[error(transparent)]
    Axiom(#[from] OmAxiomViolation),
    #[error(transparent)]
    MatroidAxiom(#[from] MatroidAxiomViolation),
}

/// Checks the signed-circuit axioms (C1)-(C4) for `circuits` over `{e_1..e_m}`.
///
/// Returns the first violated axiom together with witnessing circuits. The
/// (C4) check is an exhaustive scan over all pairs and all eliminable
/// elements, which is affordable at the instance sizes this crate targets.
pub fn validate_om_axioms(circuits: &[SignedSubset], m: usize) -> Result<(), OmError> {
    if m > ElemSet::MAX_ELEMENTS {
        return Err(OmError::GroundTooLarge {
            m,
            max: ElemSet::MAX_ELEMENTS,
        });
    }
    let ground = ElemSet::full(m);
    for x in circuits {
        if let Some(e) = (x.support() - ground).min() {
            return Err(OmError::ElementOutOfRange { element: e, bound: m });
        }
    }
    // C1
    if circuits.iter().any(|x| x.support().is_empty()) {
        return Err(OmAxiomViolation::EmptySigned.into());
    }
    // C2
    let set: HashSet<SignedSubset> = circuits.iter().copied().collect();
    for x in &set {
        if !set.contains(&x.opposite()) {
            return Err(OmAxiomViolation::MissingOpposite { circuit: *x }.into());
        }
    }
    // C3
    for x in &set {
        for y in &set {
            if x.support().is_subset_of(y.support()) && x != y && *x != y.opposite() {
                return Err(OmAxiomViolation::SupportComparable {
                    inner: *x,
                    outer: *y,
                }
                .into());
            }
        }
    }
    // C4: weak elimination
    for x in &set {
        for y in &set {
            if x == y || *x == y.opposite() {
                continue;
            }
            for e in (x.positive() & y.negative()).iter() {
                let pos_bound = (x.positive() | y.positive()).without(e);
                let neg_bound = (x.negative() | y.negative()).without(e);
                let found = set.iter().any(|z| {
                    z.positive().is_subset_of(pos_bound) && z.negative().is_subset_of(neg_bound)
                });
                if !found {
                    return Err(OmAxiomViolation::NoElimination {
                        x: *x,
                        y: *y,
                        element: e,
                    }
                    .into());
                }
            }
        }
    }
    Ok(())
}

/// Checks the circuit axioms (C1)-(C3) for unsigned circuits over `{e_1..e_m}`.
pub fn validate_matroid_axioms(circuits: &[ElemSet], m: usize) -> Result<(), OmError> {
    if m > ElemSet::MAX_ELEMENTS {
        return Err(OmError::GroundTooLarge {
            m,
            max: ElemSet::MAX_ELEMENTS,
        });
    }
    let ground = ElemSet::full(m);
    for &x in circuits {
        if let Some(e) = (x - ground).min() {
            return Err(OmError::ElementOutOfRange { element: e, bound: m });
        }
    }
    if circuits.iter().any(|x| x.is_empty()) {
        return Err(MatroidAxiomViolation::EmptyCircuit.into());
    }
    let set: HashSet<ElemSet> = circuits.iter().copied().collect();
    for &x in &set {
        for &y in &set {
            if x != y && x.is_subset_of(y) {
                return Err(MatroidAxiomViolation::ProperContainment { inner: x, outer: y }.into());
            }
        }
    }
    for &x in &set {
        for &y in &set {
            if x == y {
                continue;
            }
            for e in (x & y).iter() {
                let bound = (x | y).without(e);
                if !set.iter().any(|&z| z.is_subset_of(bound)) {
                    return Err(MatroidAxiomViolation::NoExchange { x, y, element: e }.into());
                }
            }
        }
    }
    Ok(())
}

/// A matroid given by its circuit collection.
///
/// The ground set is a subset of `{e_1..e_m}` with global indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matroid {
    ground: ElemSet,
    circuits: Vec<ElemSet>,
}

impl Matroid {
    /// Builds and validates a matroid on the full ground set `{e_1..e_m}`.
    pub fn new(m: usize, circuits: Vec<ElemSet>) -> Result<Matroid, OmError> {
        validate_matroid_axioms(&circuits, m)?;
        Ok(Matroid::from_parts(ElemSet::full(m), circuits))
    }

    /// Internal constructor: canonicalizes (sorts, dedups) without validating.
    pub(crate) fn from_parts(ground: ElemSet, mut circuits: Vec<ElemSet>) -> Matroid {
        circuits.sort();
        circuits.dedup();
        Matroid { ground, circuits }
    }

    pub fn ground(&self) -> ElemSet {
        self.ground
    }

    pub fn circuits(&self) -> &[ElemSet] {
        &self.circuits
    }

    /// True iff no single element is a circuit.
    pub fn is_loopless(&self) -> bool {
        self.circuits.iter().all(|c| c.len() != 1)
    }

    /// True iff for every `e` outside `x` there is no circuit `Y` with
    /// `e ∈ Y ⊆ x ∪ {e}`.
    pub fn is_flat(&self, x: ElemSet) -> bool {
        assert!(x.is_subset_of(self.ground), "flat query outside ground set");
        for e in (self.ground - x).iter() {
            let bound = x.with(e);
            if self
                .circuits
                .iter()
                .any(|&y| y.contains(e) && y.is_subset_of(bound))
            {
                return false;
            }
        }
        true
    }

    /// True iff `s` contains no circuit.
    pub fn is_independent(&self, s: ElemSet) -> bool {
        !self.circuits.iter().any(|&c| c.is_subset_of(s))
    }
}

/// An oriented matroid given by its signed circuits.
///
/// The circuit collection is closed under negation and stored with both signs
/// explicit; the ground set is a subset of `{e_1..e_m}` with global indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientedMatroid {
    ground: ElemSet,
    circuits: Vec<SignedSubset>,
}

impl OrientedMatroid {
    /// Builds and validates an oriented matroid on the ground set `{e_1..e_m}`.
    ///
    /// `circuits` must already be closed under negation; use
    /// [`OrientedMatroid::from_representatives`] to supply one sign per pair.
    pub fn new(m: usize, circuits: Vec<SignedSubset>) -> Result<OrientedMatroid, OmError> {
        validate_om_axioms(&circuits, m)?;
        Ok(OrientedMatroid::from_parts(ElemSet::full(m), circuits))
    }

    /// Builds an oriented matroid from one representative per `±` pair; the
    /// opposites are added automatically before validation.
    pub fn from_representatives(
        m: usize,
        representatives: Vec<SignedSubset>,
    ) -> Result<OrientedMatroid, OmError> {
        let mut circuits = Vec::with_capacity(representatives.len() * 2);
        for x in representatives {
            circuits.push(x);
            circuits.push(x.opposite());
        }
        OrientedMatroid::new(m, circuits)
    }

    pub(crate) fn from_parts(ground: ElemSet, mut circuits: Vec<SignedSubset>) -> OrientedMatroid {
        circuits.sort_by_key(|x| (x.support(), x.positive()));
        circuits.dedup();
        let om = OrientedMatroid { ground, circuits };
        debug_assert!(om.negation_closed(), "circuit set not closed under negation");
        om
    }

    fn negation_closed(&self) -> bool {
        let set: HashSet<SignedSubset> = self.circuits.iter().copied().collect();
        set.iter().all(|x| set.contains(&x.opposite()))
    }

    pub fn ground(&self) -> ElemSet {
        self.ground
    }

    pub fn circuits(&self) -> &[SignedSubset] {
        &self.circuits
    }

    /// The underlying matroid: circuit supports, deduplicated.
    pub fn underlying(&self) -> Matroid {
        let supports: Vec<ElemSet> = self.circuits.iter().map(|x| x.support()).collect();
        Matroid::from_parts(self.ground, supports)
    }

    /// The reorientation by `a`: every circuit `X` becomes `(-a)X`.
    pub fn reorient(&self, a: ElemSet) -> OrientedMatroid {
        assert!(
            a.is_subset_of(self.ground),
            "reorientation set {a} not inside ground set {}",
            self.ground
        );
        let circuits = self.circuits.iter().map(|x| x.reorient(a)).collect();
        OrientedMatroid::from_parts(self.ground, circuits)
    }

    /// The deletion minor `M \ x`: circuits with support disjoint from `x`,
    /// on the ground set `E - x` (indices unchanged).
    pub fn delete(&self, x: ElemSet) -> OrientedMatroid {
        assert!(
            x.is_subset_of(self.ground),
            "deletion set {x} not inside ground set {}",
            self.ground
        );
        let circuits = self
            .circuits
            .iter()
            .filter(|c| c.support().is_disjoint_from(x))
            .copied()
            .collect();
        OrientedMatroid::from_parts(self.ground - x, circuits)
    }

    /// The contraction minor `M / x`: inclusion-minimal nonempty restrictions
    /// `Y \ x`, on the ground set `E - x` (indices unchanged).
    pub fn contract(&self, x: ElemSet) -> OrientedMatroid {
        assert!(
            x.is_subset_of(self.ground),
            "contraction set {x} not inside ground set {}",
            self.ground
        );
        let candidates: Vec<SignedSubset> = self
            .circuits
            .iter()
            .map(|c| c.restrict_away(x))
            .filter(|c| !c.support().is_empty())
            .collect();
        let minimal: Vec<SignedSubset> = candidates
            .iter()
            .filter(|c| {
                !candidates.iter().any(|d| {
                    d.support() != c.support() && d.support().is_subset_of(c.support())
                })
            })
            .copied()
            .collect();
        OrientedMatroid::from_parts(self.ground - x, minimal)
    }

    /// True iff the oriented matroid contains no positive circuit.
    pub fn is_acyclic(&self) -> bool {
        self.positive_circuit().is_none()
    }

    /// Some positive circuit, if one exists.
    pub fn positive_circuit(&self) -> Option<SignedSubset> {
        self.circuits.iter().copied().find(SignedSubset::is_positive)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::set::elems;

    /// The four-element oriented matroid used as the running worked example:
    /// circuits `±X1..±X4` with
    /// `X1=(e1, e2e3)`, `X2=(e1e2, e4)`, `X3=(e1, e3e4)`, `X4=(e2e3, e4)`.
    pub fn worked_example_om() -> OrientedMatroid {
        let x1 = SignedSubset::new(elems(&[1]), elems(&[2, 3])).unwrap();
        let x2 = SignedSubset::new(elems(&[1, 2]), elems(&[4])).unwrap();
        let x3 = SignedSubset::new(elems(&[1]), elems(&[3, 4])).unwrap();
        let x4 = SignedSubset::new(elems(&[2, 3]), elems(&[4])).unwrap();
        OrientedMatroid::from_representatives(4, vec![x1, x2, x3, x4]).unwrap()
    }

    /// Circuits of the uniform matroid U(2,4): all 3-subsets of `{e1..e4}`.
    pub fn u24_circuits() -> Vec<ElemSet> {
        vec![
            elems(&[1, 2, 3]),
            elems(&[1, 2, 4]),
            elems(&[1, 3, 4]),
            elems(&[2, 3, 4]),
        ]
    }
}
