//! Exact-rational hyperplane arrangements.
//!
//! An [`Arrangement`] is an ordered multiset of hyperplanes `α·x = b` in
//! `Q^n`, each with the positive side `α·x > b` fixed by the sign of its
//! normal. The order is the list order, and hyperplane `H_k` is addressed by
//! the element `e_k`, so index sets reuse [`ElemSet`]. All geometric
//! decisions (sides, region existence, flat containment) are made in exact
//! rational arithmetic; regions carry rational interior witness points.
//!
//! Restricted arrangements are never materialized in flat-local coordinates:
//! computation stays in ambient coordinates with the flat imposed as
//! equality constraints, which keeps hyperplane indices global.

pub mod feasibility;
pub mod linalg;
pub mod phi;
pub mod regions;

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::om::{OrientedMatroid, SignedSubset};
use crate::set::{Element, ElemSet};

pub use feasibility::feasible_witness;
pub use linalg::Rational;
pub use phi::{
    initial_arr_state, phi_backward, phi_backward_trace, phi_forward, phi_forward_trace,
    phi_inverse_step, phi_step, tau, validate_arr_state, ArrPairState, PhiTrace,
};

/// Side of a hyperplane, or sign of a rational number.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(value: &Rational) -> Sign {
        match value.cmp(&Rational::zero()) {
            std::cmp::Ordering::Less => Sign::Neg,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Pos,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Neg => "-",
            Sign::Zero => "0",
            Sign::Pos => "+",
        })
    }
}

/// Errors raised by arrangement construction and the region-side operations.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ArrError {
    #[error("hyperplane H{index} has a zero normal vector")]
    ZeroNormal { index: usize },
    #[error("hyperplane H{index} has a normal of length {got}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("{m} hyperplanes exceed the supported maximum {max}")]
    TooManyHyperplanes { m: usize, max: usize },
    #[error("hyperplane H{index} has a nonzero offset; a linear arrangement is required")]
    NotLinear { index: usize },
    #[error("the hyperplanes {flat} have empty intersection")]
    EmptyFlat { flat: ElemSet },
    #[error("{set} is not an affine NBC subset: its intersection is empty")]
    EmptyIntersection { set: ElemSet },
    #[error("{set} is not an affine NBC subset: it contains the affine broken circuit {broken_circuit}")]
    ContainsAffineBrokenCircuit { set: ElemSet, broken_circuit: ElemSet },
    #[error("sign vector has {got} entries, expected {expected}")]
    SignsLengthMismatch { expected: usize, got: usize },
    #[error("sign vector entry for H{index} is 0; a region needs a strict side for every hyperplane not containing its flat")]
    ZeroSignNotAllowed { index: usize },
    #[error("no point realizes the requested sign vector")]
    UnrealizableSigns,
    #[error("the cell is not full-dimensional (flat {flat})")]
    NotFullDimensional { flat: ElemSet },
    #[error("state level {k} out of range 0..={m}")]
    LevelOutOfRange { k: usize, m: usize },
    #[error("NBC part {part} uses hyperplanes above position {k}")]
    NbcPartNotInPrefix { part: ElemSet, k: usize },
    #[error("cell flat {flat} differs from the state's NBC part {nbc}")]
    FlatMismatch { nbc: ElemSet, flat: ElemSet },
    #[error("witness does not lie on hyperplane H{index} of the flat")]
    WitnessOffFlat { index: usize },
    #[error("sign entry for H{index} does not match the cell geometry")]
    SignMismatch { index: usize },
    #[error("no step at level {k} for an arrangement of {m} hyperplanes")]
    NoSuchStep { k: usize, m: usize },
    #[error("case analysis failed at level {k}: {detail}")]
    CaseUnreachable { k: usize, detail: &'static str },
}

/// A hyperplane `normal · x = offset` with positive side `normal · x > offset`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Hyperplane {
    /// Builds a hyperplane; the normal must be nonzero.
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Hyperplane, ArrError> {
        if normal.iter().all(Zero::is_zero) {
            return Err(ArrError::ZeroNormal { index: 0 });
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `normal · point - offset`.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        linalg::dot(&self.normal, point) - &self.offset
    }

    /// Which side of the hyperplane `point` lies on.
    pub fn side(&self, point: &[Rational]) -> Sign {
        Sign::of(&self.eval(point))
    }
}

/// An ordered multiset of hyperplanes in `Q^dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Arrangement, ArrError> {
        if hyperplanes.len() > ElemSet::MAX_ELEMENTS {
            return Err(ArrError::TooManyHyperplanes {
                m: hyperplanes.len(),
                max: ElemSet::MAX_ELEMENTS,
            });
        }
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.normal.len() != dim {
                return Err(ArrError::DimensionMismatch {
                    index: i + 1,
                    expected: dim,
                    got: h.normal.len(),
                });
            }
            if h.normal.iter().all(Zero::is_zero) {
                return Err(ArrError::ZeroNormal { index: i + 1 });
            }
        }
        Ok(Arrangement { dim, hyperplanes })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of hyperplanes.
    pub fn size(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// The hyperplane addressed by element `e` (1-based).
    pub fn hyperplane(&self, e: Element) -> &Hyperplane {
        &self.hyperplanes[e.index() - 1]
    }

    /// The full index set `{e_1..e_m}`.
    pub fn indices(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    /// True iff every offset is zero.
    pub fn is_linear(&self) -> bool {
        self.hyperplanes.iter().all(|h| h.offset.is_zero())
    }

    pub(crate) fn require_linear(&self) -> Result<(), ArrError> {
        match self.hyperplanes.iter().position(|h| !h.offset.is_zero()) {
            Some(i) => Err(ArrError::NotLinear { index: i + 1 }),
            None => Ok(()),
        }
    }

    /// The coning: each `α·x = b` lifts to `α·x - b·x_{n+1} = 0` in one more
    /// dimension, followed by the new last hyperplane `x_{n+1} = 0` whose
    /// positive side is `x_{n+1} > 0`.
    pub fn cone(&self) -> Arrangement {
        let dim = self.dim + 1;
        let mut hyperplanes: Vec<Hyperplane> = self
            .hyperplanes
            .iter()
            .map(|h| {
                let mut normal = h.normal.clone();
                normal.push(-h.offset.clone());
                Hyperplane {
                    normal,
                    offset: Rational::zero(),
                }
            })
            .collect();
        let mut k0 = vec![Rational::zero(); dim];
        k0[dim - 1] = Rational::from_integer(1.into());
        hyperplanes.push(Hyperplane {
            normal: k0,
            offset: Rational::zero(),
        });
        Arrangement { dim, hyperplanes }
    }

    /// True iff the hyperplanes indexed by `s` have a common point.
    pub fn intersection_nonempty(&self, s: ElemSet) -> bool {
        let rows: Vec<Vec<Rational>> = s
            .iter()
            .map(|e| self.hyperplane(e).normal.clone())
            .collect();
        let rhs: Vec<Rational> = s
            .iter()
            .map(|e| self.hyperplane(e).offset.clone())
            .collect();
        if rows.is_empty() {
            return true;
        }
        linalg::solve(&rows, &rhs).is_some()
    }

    /// All affine circuits: inclusion-minimal index sets with a common point
    /// whose normals carry exactly one linear dependency. Exhaustive scan
    /// over subsets by size, with exact rank computations.
    pub fn affine_circuits(&self) -> Vec<ElemSet> {
        let m = self.size();
        let max_size = (self.dim + 1).min(m);
        let mut circuits: Vec<ElemSet> = Vec::new();
        for size in 2..=max_size.max(1) {
            for mask in 0u64..(1u64 << m) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let s = ElemSet::full(m).intersection(raw_set(mask));
                if circuits.iter().any(|&c| c.is_subset_of(s)) {
                    continue;
                }
                if !self.intersection_nonempty(s) {
                    continue;
                }
                let rows: Vec<Vec<Rational>> = s
                    .iter()
                    .map(|e| self.hyperplane(e).normal.clone())
                    .collect();
                if linalg::rank(&rows) == size - 1 {
                    circuits.push(s);
                }
            }
        }
        circuits.sort();
        circuits
    }

    /// The distinct affine broken circuits: each affine circuit minus its
    /// maximal element.
    pub fn affine_broken_circuit_sets(&self) -> Vec<ElemSet> {
        let mut sets: Vec<ElemSet> = self
            .affine_circuits()
            .into_iter()
            .map(|c| c.without(c.max().expect("circuits are nonempty")))
            .collect();
        sets.sort();
        sets.dedup();
        sets
    }

    /// Checks whether `s` is an affine NBC subset; the error names the
    /// contained broken circuit or the empty intersection.
    pub fn check_affine_nbc(&self, s: ElemSet) -> Result<(), ArrError> {
        if !self.intersection_nonempty(s) {
            return Err(ArrError::EmptyIntersection { set: s });
        }
        if let Some(b) = self
            .affine_broken_circuit_sets()
            .into_iter()
            .find(|&b| b.is_subset_of(s))
        {
            return Err(ArrError::ContainsAffineBrokenCircuit {
                set: s,
                broken_circuit: b,
            });
        }
        Ok(())
    }

    /// All affine NBC subsets: nonempty intersection and no affine broken
    /// circuit, in lexicographic order of characteristic vectors. Both
    /// defining properties are downward closed, so the subset search prunes
    /// as soon as either fails.
    pub fn affine_nbc_sets(&self) -> Vec<ElemSet> {
        let broken = self.affine_broken_circuit_sets();
        let elements: Vec<Element> = self.indices().iter().collect();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, ElemSet::empty())];
        while let Some((depth, current)) = stack.pop() {
            if depth == elements.len() {
                out.push(current);
                continue;
            }
            let e = elements[depth];
            let extended = current.with(e);
            let breaks = broken
                .iter()
                .any(|&b| b.contains(e) && b.is_subset_of(extended));
            if !breaks && self.intersection_nonempty(extended) {
                stack.push((depth + 1, extended));
            }
            stack.push((depth + 1, current));
        }
        out
    }

    /// The oriented matroid of a linear arrangement: one signed circuit pair
    /// per minimal linearly dependent set of normals, with signs read off the
    /// kernel vector of the dependency.
    pub fn oriented_matroid(&self) -> Result<OrientedMatroid, ArrError> {
        self.require_linear()?;
        let mut circuits: Vec<SignedSubset> = Vec::new();
        for s in self.affine_circuits() {
            let columns: Vec<Vec<Rational>> = s
                .iter()
                .map(|e| self.hyperplane(e).normal.clone())
                .collect();
            let lambda = linalg::kernel_vector(&columns)
                .expect("a circuit's normals are dependent");
            let mut pos = ElemSet::empty();
            let mut neg = ElemSet::empty();
            for (e, l) in s.iter().zip(&lambda) {
                match Sign::of(l) {
                    Sign::Pos => pos = pos.with(e),
                    Sign::Neg => neg = neg.with(e),
                    // Minimality forces every coefficient nonzero.
                    Sign::Zero => unreachable!("zero kernel entry on a minimal dependent set"),
                }
            }
            let x = SignedSubset::new(pos, neg).expect("kernel parts are disjoint");
            circuits.push(x);
            circuits.push(x.opposite());
        }
        let om = OrientedMatroid::from_parts(self.indices(), circuits);
        debug_assert!(crate::om::validate_om_axioms(om.circuits(), self.size()).is_ok());
        Ok(om)
    }

    /// `A(Δ) = {e : Δ ⊆ H_e^-}` for a full-dimensional region of a linear
    /// arrangement; reorienting the arrangement's oriented matroid by this
    /// set yields an acyclic oriented matroid.
    pub fn region_to_reorientation(&self, cell: &RegionCell) -> Result<ElemSet, ArrError> {
        self.require_linear()?;
        if !cell.flat().is_empty() {
            return Err(ArrError::NotFullDimensional { flat: cell.flat() });
        }
        Ok(cell.negative_set())
    }

    /// Classification of every hyperplane against the flat `∩flat`, plus a
    /// particular point. `None` when the intersection is empty.
    pub(crate) fn flat_geometry(&self, flat: ElemSet) -> Option<FlatGeometry> {
        let rows: Vec<Vec<Rational>> = flat
            .iter()
            .map(|e| self.hyperplane(e).normal.clone())
            .collect();
        let rhs: Vec<Rational> = flat
            .iter()
            .map(|e| self.hyperplane(e).offset.clone())
            .collect();
        let point = if rows.is_empty() {
            vec![Rational::zero(); self.dim]
        } else {
            linalg::solve(&rows, &rhs)?
        };
        let base_rank = linalg::rank(&rows);
        let mut contains = ElemSet::empty();
        let mut cuts = ElemSet::empty();
        for e in self.indices().iter() {
            if flat.contains(e) {
                contains = contains.with(e);
                continue;
            }
            let h = self.hyperplane(e);
            let mut extended = rows.clone();
            extended.push(h.normal.clone());
            if linalg::rank(&extended) > base_rank {
                cuts = cuts.with(e);
            } else if h.eval(&point).is_zero() {
                contains = contains.with(e);
            }
            // Otherwise the hyperplane misses the flat entirely; its side is
            // constant over the flat and equals the side of `point`.
        }
        Some(FlatGeometry {
            flat,
            point,
            contains,
            cuts,
        })
    }
}

/// Interprets a raw bitmask as an element set.
fn raw_set(mask: u64) -> ElemSet {
    (1..=ElemSet::MAX_ELEMENTS)
        .filter(|i| mask & (1u64 << (i - 1)) != 0)
        .map(Element::new)
        .collect()
}

/// How the hyperplanes of an arrangement sit relative to a flat `∩flat`.
#[derive(Clone, Debug)]
pub(crate) struct FlatGeometry {
    /// The defining index set.
    pub flat: ElemSet,
    /// A particular point of the flat.
    pub point: Vec<Rational>,
    /// Hyperplanes containing the whole flat (including the defining ones).
    pub contains: ElemSet,
    /// Hyperplanes meeting the flat in a proper nonempty subset.
    pub cuts: ElemSet,
}

/// A region of a (possibly restricted) arrangement: a full sign vector, an
/// exact interior witness point, and the flat the cell lives in.
///
/// Sign entries are `0` exactly for the hyperplanes containing the cell's
/// affine hull; every other entry records a strict side that the witness
/// satisfies. For hyperplanes that are not constraints of the restricted
/// arrangement the recorded side is the witness's side.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegionCell {
    signs: Vec<Sign>,
    witness: Vec<Rational>,
    flat: ElemSet,
}

impl RegionCell {
    pub(crate) fn from_parts(signs: Vec<Sign>, witness: Vec<Rational>, flat: ElemSet) -> RegionCell {
        RegionCell {
            signs,
            witness,
            flat,
        }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// The sign entry for hyperplane `e`.
    pub fn sign(&self, e: Element) -> Sign {
        self.signs[e.index() - 1]
    }

    pub fn witness(&self) -> &[Rational] {
        &self.witness
    }

    /// The defining flat (empty for full-dimensional regions).
    pub fn flat(&self) -> ElemSet {
        self.flat
    }

    /// Indices with sign `-`.
    pub fn negative_set(&self) -> ElemSet {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Sign::Neg)
            .map(|(i, _)| Element::new(i + 1))
            .collect()
    }

    /// Renders the sign vector as `-,+,+,+`.
    pub fn signs_string(&self) -> String {
        let parts: Vec<String> = self.signs.iter().map(|s| s.to_string()).collect();
        parts.join(",")
    }
}
