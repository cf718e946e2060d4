//! The stepwise bijection between acyclic reorientations and NBC subsets.
//!
//! A state at level `k` is a pair `(N_k, A_k)` with `N_k` inside the first
//! `k` elements of the ground set and `A_k` inside the rest, subject to two
//! conditions: (I) `N_k` is an NBC subset of the underlying matroid, and
//! (II) the minor obtained by deleting `E_k - N_k`, contracting `N_k` and
//! reorienting by `A_k` is acyclic. Level 0 states are exactly the acyclic
//! reorientations `(∅, A_0)`; level `m` states are exactly the NBC subsets
//! `(N_m, ∅)`. Each level step moves one element `e_k` by a three-case rule,
//! and the composition of all `m` steps is a bijection.
//!
//! States are validated eagerly at the public entry points and trusted along
//! a forward or backward pass; debug builds re-check every produced state.

use thiserror::Error;

use crate::om::{OrientedMatroid, SignedSubset};
use crate::set::{Element, ElemSet};

/// A `(N_k, A_k)` pairing at level `k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OmPairState {
    k: usize,
    nbc_part: ElemSet,
    reorient_part: ElemSet,
}

impl OmPairState {
    /// Builds a state without validating it; see [`validate_state`].
    pub fn new(k: usize, nbc_part: ElemSet, reorient_part: ElemSet) -> OmPairState {
        OmPairState {
            k,
            nbc_part,
            reorient_part,
        }
    }

    pub fn level(&self) -> usize {
        self.k
    }

    /// `N_k`, the NBC part.
    pub fn nbc_part(&self) -> ElemSet {
        self.nbc_part
    }

    /// `A_k`, the reorientation part.
    pub fn reorient_part(&self) -> ElemSet {
        self.reorient_part
    }
}

/// Which of the three step cases applied at a level.
///
/// The same classification applies to the inverse steps (an inverse step
/// reports the case of the forward step it undoes) and to the region-side
/// step maps, so that the two sides of the commuting diagram can be compared
/// case by case.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StepCase {
    /// Case 1: `e_k` joins the NBC part.
    AddedToNbc,
    /// Case 2: the state is unchanged.
    Unchanged,
    /// Case 3: `e_k` leaves the reorientation part.
    RemovedFromReorientation,
}

impl StepCase {
    /// The case number, 1 to 3.
    pub fn number(self) -> u8 {
        match self {
            StepCase::AddedToNbc => 1,
            StepCase::Unchanged => 2,
            StepCase::RemovedFromReorientation => 3,
        }
    }
}

impl std::fmt::Display for StepCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Why a pair fails to be a valid level-`k` state.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum StateError {
    #[error("level {k} out of range 0..={m}")]
    LevelOutOfRange { k: usize, m: usize },
    #[error("NBC part {part} not contained in the first {k} elements")]
    NbcPartNotInPrefix { part: ElemSet, k: usize },
    #[error("reorientation part {part} not contained in the elements above level {k}")]
    ReorientPartNotInSuffix { part: ElemSet, k: usize },
    #[error("condition (I) fails: {set} contains the broken circuit {broken_circuit}")]
    ConditionI { set: ElemSet, broken_circuit: ElemSet },
    #[error("condition (II) fails: the state minor has the positive circuit {positive_circuit}")]
    ConditionII { positive_circuit: SignedSubset },
}

/// Errors from the bijection entry points.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum BijectionError {
    #[error("{set} is not contained in the ground set {ground}")]
    NotInGround { set: ElemSet, ground: ElemSet },
    #[error("{reorientation} is not an acyclic reorientation: reorienting yields the positive circuit {positive_circuit}")]
    NotAcyclic {
        reorientation: ElemSet,
        positive_circuit: SignedSubset,
    },
    #[error("{set} is not NBC: it contains the broken circuit {broken_circuit}")]
    NotNbc { set: ElemSet, broken_circuit: ElemSet },
    #[error("invalid state: {0}")]
    State(#[from] StateError),
    #[error("no step at level {k} for a ground set of {m} elements")]
    NoSuchStep { k: usize, m: usize },
}

/// The ground elements in order; the bijection steps follow this sequence.
fn ordered_ground(om: &OrientedMatroid) -> Vec<Element> {
    om.ground().iter().collect()
}

/// The first `k` elements of the ground set as a set.
fn ground_prefix(ordered: &[Element], k: usize) -> ElemSet {
    ordered[..k].iter().copied().collect()
}

/// The level-0 state `(∅, a0)` for an acyclic reorientation `a0`.
pub fn initial_state(
    om: &OrientedMatroid,
    a0: ElemSet,
) -> Result<OmPairState, BijectionError> {
    if !a0.is_subset_of(om.ground()) {
        return Err(BijectionError::NotInGround {
            set: a0,
            ground: om.ground(),
        });
    }
    if let Some(c) = om.reorient(a0).positive_circuit() {
        return Err(BijectionError::NotAcyclic {
            reorientation: a0,
            positive_circuit: c,
        });
    }
    Ok(OmPairState::new(0, ElemSet::empty(), a0))
}

/// The minor `M_k` of condition (II): delete `E_k - N_k`, contract `N_k`,
/// reorient by `A_k`.
pub fn state_minor(om: &OrientedMatroid, s: &OmPairState) -> OrientedMatroid {
    let ordered = ordered_ground(om);
    let prefix = ground_prefix(&ordered, s.k);
    om.delete(prefix - s.nbc_part)
        .contract(s.nbc_part)
        .reorient(s.reorient_part)
}

/// Checks that `s` is a well-formed level-`k` state satisfying (I) and (II).
pub fn validate_state(om: &OrientedMatroid, s: &OmPairState) -> Result<(), BijectionError> {
    let ordered = ordered_ground(om);
    let m = ordered.len();
    if s.k > m {
        return Err(StateError::LevelOutOfRange { k: s.k, m }.into());
    }
    let prefix = ground_prefix(&ordered, s.k);
    if !s.nbc_part.is_subset_of(prefix) {
        return Err(StateError::NbcPartNotInPrefix {
            part: s.nbc_part,
            k: s.k,
        }
        .into());
    }
    if !s.reorient_part.is_subset_of(om.ground() - prefix) {
        return Err(StateError::ReorientPartNotInSuffix {
            part: s.reorient_part,
            k: s.k,
        }
        .into());
    }
    let underlying = om.underlying();
    if let Some(b) = underlying.contained_broken_circuit(s.nbc_part) {
        return Err(StateError::ConditionI {
            set: s.nbc_part,
            broken_circuit: b,
        }
        .into());
    }
    if let Some(c) = state_minor(om, s).positive_circuit() {
        return Err(StateError::ConditionII {
            positive_circuit: c,
        }
        .into());
    }
    Ok(())
}

/// Given a valid state and its minor, advances one level. Trusted internal
/// core of [`psi_step`] and the forward pass; also updates the minor.
fn step_unchecked(
    ek: Element,
    s: &OmPairState,
    minor: &mut OrientedMatroid,
) -> (OmPairState, StepCase) {
    let single = ElemSet::singleton(ek);
    if s.reorient_part.contains(ek) {
        *minor = minor.delete(single);
        (
            OmPairState::new(s.k + 1, s.nbc_part, s.reorient_part.without(ek)),
            StepCase::RemovedFromReorientation,
        )
    } else if minor.reorient(single).is_acyclic() {
        *minor = minor.contract(single);
        (
            OmPairState::new(s.k + 1, s.nbc_part.with(ek), s.reorient_part),
            StepCase::AddedToNbc,
        )
    } else {
        *minor = minor.delete(single);
        (
            OmPairState::new(s.k + 1, s.nbc_part, s.reorient_part),
            StepCase::Unchanged,
        )
    }
}

/// Applies the level-`k` step to a state at level `k-1`.
pub fn psi_step(
    om: &OrientedMatroid,
    s: &OmPairState,
) -> Result<(OmPairState, StepCase), BijectionError> {
    let m = om.ground().len();
    if s.k >= m {
        return Err(BijectionError::NoSuchStep { k: s.k + 1, m });
    }
    validate_state(om, s)?;
    let ordered = ordered_ground(om);
    let ek = ordered[s.k];
    let mut minor = state_minor(om, s);
    let out = step_unchecked(ek, s, &mut minor);
    debug_assert!(validate_state(om, &out.0).is_ok());
    Ok(out)
}

/// Core of the inverse step; assumes `s` is a valid state at level `k >= 1`.
fn inverse_step_unchecked(
    om: &OrientedMatroid,
    ordered: &[Element],
    s: &OmPairState,
) -> (OmPairState, StepCase) {
    let k = s.k;
    let ek = ordered[k - 1];
    if s.nbc_part.contains(ek) {
        return (
            OmPairState::new(k - 1, s.nbc_part.without(ek), s.reorient_part),
            StepCase::AddedToNbc,
        );
    }
    // M'_{k-1}: delete E_{k-1} - N_k, contract N_k, reorient by A_k.
    let prefix = ground_prefix(ordered, k - 1);
    let m_prime = om
        .delete(prefix - s.nbc_part)
        .contract(s.nbc_part)
        .reorient(s.reorient_part);
    if m_prime.reorient(ElemSet::singleton(ek)).is_acyclic() {
        (
            OmPairState::new(k - 1, s.nbc_part, s.reorient_part.with(ek)),
            StepCase::RemovedFromReorientation,
        )
    } else {
        (
            OmPairState::new(k - 1, s.nbc_part, s.reorient_part),
            StepCase::Unchanged,
        )
    }
}

/// Applies the inverse of the level-`k` step to a state at level `k`.
///
/// The reported case is the case of the forward step being undone.
pub fn psi_inverse_step(
    om: &OrientedMatroid,
    s: &OmPairState,
) -> Result<(OmPairState, StepCase), BijectionError> {
    if s.k == 0 {
        return Err(BijectionError::NoSuchStep {
            k: 0,
            m: om.ground().len(),
        });
    }
    validate_state(om, s)?;
    let ordered = ordered_ground(om);
    let out = inverse_step_unchecked(om, &ordered, s);
    debug_assert!(validate_state(om, &out.0).is_ok());
    Ok(out)
}

/// A full forward or backward pass: the visited states and the case taken at
/// each level. For a forward trace `states[i]` is at level `i`; for a
/// backward trace `states[i]` is at level `m - i`. `cases[i]` is the case of
/// the step between `states[i]` and `states[i + 1]`.
#[derive(Clone, Debug)]
pub struct PsiTrace {
    pub states: Vec<OmPairState>,
    pub cases: Vec<StepCase>,
}

impl PsiTrace {
    pub fn final_state(&self) -> &OmPairState {
        self.states.last().expect("trace has at least one state")
    }
}

/// Maps an acyclic reorientation to its NBC subset, keeping the whole trace.
pub fn psi_forward_trace(
    om: &OrientedMatroid,
    a0: ElemSet,
) -> Result<PsiTrace, BijectionError> {
    let mut state = initial_state(om, a0)?;
    let ordered = ordered_ground(om);
    // The state minor is maintained incrementally along the pass: case 1
    // contracts e_k, cases 2 and 3 delete it.
    let mut minor = om.reorient(a0);
    let mut states = vec![state];
    let mut cases = Vec::with_capacity(ordered.len());
    for &ek in &ordered {
        let (next, case) = step_unchecked(ek, &state, &mut minor);
        debug_assert_eq!(minor, state_minor(om, &next));
        debug_assert!(validate_state(om, &next).is_ok());
        state = next;
        states.push(state);
        cases.push(case);
    }
    debug_assert!(state.reorient_part.is_empty());
    Ok(PsiTrace { states, cases })
}

/// Maps an acyclic reorientation to its NBC subset.
pub fn psi_forward(om: &OrientedMatroid, a0: ElemSet) -> Result<ElemSet, BijectionError> {
    Ok(psi_forward_trace(om, a0)?.final_state().nbc_part)
}

/// Maps an NBC subset back to its acyclic reorientation, keeping the trace.
pub fn psi_backward_trace(
    om: &OrientedMatroid,
    n: ElemSet,
) -> Result<PsiTrace, BijectionError> {
    if !n.is_subset_of(om.ground()) {
        return Err(BijectionError::NotInGround {
            set: n,
            ground: om.ground(),
        });
    }
    if let Some(b) = om.underlying().contained_broken_circuit(n) {
        return Err(BijectionError::NotNbc {
            set: n,
            broken_circuit: b,
        });
    }
    let ordered = ordered_ground(om);
    let m = ordered.len();
    let mut state = OmPairState::new(m, n, ElemSet::empty());
    debug_assert!(validate_state(om, &state).is_ok());
    let mut states = vec![state];
    let mut cases = Vec::with_capacity(m);
    for _ in 0..m {
        let (prev, case) = inverse_step_unchecked(om, &ordered, &state);
        debug_assert!(validate_state(om, &prev).is_ok());
        state = prev;
        states.push(state);
        cases.push(case);
    }
    debug_assert!(state.nbc_part.is_empty());
    Ok(PsiTrace { states, cases })
}

/// Maps an NBC subset back to its acyclic reorientation.
pub fn psi_backward(om: &OrientedMatroid, n: ElemSet) -> Result<ElemSet, BijectionError> {
    Ok(psi_backward_trace(om, n)?.final_state().reorient_part)
}

/// All `A ⊆ E` whose reorientation is acyclic, in lexicographic order of
/// characteristic vectors. Brute force over all subsets; this is the
/// counting oracle against which the bijection is checked.
pub fn enumerate_acyclic_reorientations(om: &OrientedMatroid) -> Vec<ElemSet> {
    ElemSet::subsets_lex(om.ground())
        .filter(|&a| {
            // (-a)X is positive iff X^- ⊆ a and X^+ ∩ a = ∅.
            !om.circuits()
                .iter()
                .any(|x| x.negative().is_subset_of(a) && x.positive().is_disjoint_from(a))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::om::fixtures::worked_example_om;
    use crate::om::OrientedMatroid;
    use crate::set::elems;

    /// The eight golden rows of the worked example: the acyclic reorientation,
    /// the four intermediate states `(N_k, A_k)` for `k = 1..4`, and the
    /// resulting NBC subset.
    pub(crate) fn golden_rows() -> Vec<(ElemSet, [(ElemSet, ElemSet); 4], ElemSet)> {
        let e = elems;
        vec![
            (
                e(&[]),
                [
                    (e(&[]), e(&[])),
                    (e(&[2]), e(&[])),
                    (e(&[2]), e(&[])),
                    (e(&[2, 4]), e(&[])),
                ],
                e(&[2, 4]),
            ),
            (
                e(&[2]),
                [
                    (e(&[]), e(&[2])),
                    (e(&[]), e(&[])),
                    (e(&[3]), e(&[])),
                    (e(&[3, 4]), e(&[])),
                ],
                e(&[3, 4]),
            ),
            (
                e(&[3]),
                [
                    (e(&[1]), e(&[3])),
                    (e(&[1]), e(&[3])),
                    (e(&[1]), e(&[])),
                    (e(&[1, 4]), e(&[])),
                ],
                e(&[1, 4]),
            ),
            (
                e(&[1, 3]),
                [
                    (e(&[]), e(&[3])),
                    (e(&[]), e(&[3])),
                    (e(&[]), e(&[])),
                    (e(&[4]), e(&[])),
                ],
                e(&[4]),
            ),
            (
                e(&[2, 4]),
                [
                    (e(&[1]), e(&[2, 4])),
                    (e(&[1]), e(&[4])),
                    (e(&[1]), e(&[4])),
                    (e(&[1]), e(&[])),
                ],
                e(&[1]),
            ),
            (
                e(&[1, 2, 4]),
                [
                    (e(&[]), e(&[2, 4])),
                    (e(&[]), e(&[4])),
                    (e(&[3]), e(&[4])),
                    (e(&[3]), e(&[])),
                ],
                e(&[3]),
            ),
            (
                e(&[1, 3, 4]),
                [
                    (e(&[]), e(&[3, 4])),
                    (e(&[2]), e(&[3, 4])),
                    (e(&[2]), e(&[4])),
                    (e(&[2]), e(&[])),
                ],
                e(&[2]),
            ),
            (
                e(&[1, 2, 3, 4]),
                [
                    (e(&[]), e(&[2, 3, 4])),
                    (e(&[]), e(&[3, 4])),
                    (e(&[]), e(&[4])),
                    (e(&[]), e(&[])),
                ],
                e(&[]),
            ),
        ]
    }

    #[test]
    fn initial_state_accepts_acyclic_reorientations() {
        let om = worked_example_om();
        let s = initial_state(&om, ElemSet::empty()).unwrap();
        assert_eq!((s.level(), s.nbc_part(), s.reorient_part()), (0, elems(&[]), elems(&[])));
        let s = initial_state(&om, elems(&[1, 3])).unwrap();
        assert_eq!(s.reorient_part(), elems(&[1, 3]));
        assert!(validate_state(&om, &s).is_ok());
    }

    #[test]
    fn initial_state_rejects_non_acyclic_with_witness() {
        let om = worked_example_om();
        match initial_state(&om, elems(&[1])) {
            Err(BijectionError::NotAcyclic {
                positive_circuit, ..
            }) => {
                assert!(positive_circuit.is_positive());
            }
            other => panic!("expected NotAcyclic, got {other:?}"),
        }
    }

    #[test]
    fn state_minor_examples() {
        let om = worked_example_om();
        // k = 0: the minor is just the reorientation.
        let s = OmPairState::new(0, elems(&[]), elems(&[2]));
        assert_eq!(state_minor(&om, &s), om.reorient(elems(&[2])));
        // Worked example, state (2, {e2}, ∅): delete e1, contract e2.
        let s = OmPairState::new(2, elems(&[2]), elems(&[]));
        let expected = om.delete(elems(&[1])).contract(elems(&[2]));
        assert_eq!(state_minor(&om, &s), expected);
        assert!(expected.is_acyclic());
        // k = m: empty ground set, trivially acyclic.
        let s = OmPairState::new(4, elems(&[2, 4]), elems(&[]));
        let minor = state_minor(&om, &s);
        assert!(minor.ground().is_empty());
        assert!(minor.is_acyclic());
    }

    #[test]
    fn psi_step_golden_examples() {
        let om = worked_example_om();
        // Row 1, step 2: (∅, ∅) at level 1 goes to ({e2}, ∅).
        let s = OmPairState::new(1, elems(&[]), elems(&[]));
        let (next, case) = psi_step(&om, &s).unwrap();
        assert_eq!(next, OmPairState::new(2, elems(&[2]), elems(&[])));
        assert_eq!(case, StepCase::AddedToNbc);
        // Row 4, step 1: (∅, e1e3) at level 0 goes to (∅, e3).
        let s = OmPairState::new(0, elems(&[]), elems(&[1, 3]));
        let (next, case) = psi_step(&om, &s).unwrap();
        assert_eq!(next, OmPairState::new(1, elems(&[]), elems(&[3])));
        assert_eq!(case, StepCase::RemovedFromReorientation);
        // Row 5, step 4: ({e1}, {e4}) at level 3 goes to ({e1}, ∅).
        let s = OmPairState::new(3, elems(&[1]), elems(&[4]));
        let (next, case) = psi_step(&om, &s).unwrap();
        assert_eq!(next, OmPairState::new(4, elems(&[1]), elems(&[])));
        assert_eq!(case, StepCase::RemovedFromReorientation);
    }

    #[test]
    fn psi_step_rejects_invalid_states() {
        let om = worked_example_om();
        // {e1, e2} is a broken circuit, so condition (I) fails.
        let s = OmPairState::new(2, elems(&[1, 2]), elems(&[]));
        assert!(matches!(
            psi_step(&om, &s),
            Err(BijectionError::State(StateError::ConditionI { .. }))
        ));
        // (∅, {e1}) at level 0: condition (II) fails.
        let s = OmPairState::new(0, elems(&[]), elems(&[1]));
        assert!(matches!(
            psi_step(&om, &s),
            Err(BijectionError::State(StateError::ConditionII { .. }))
        ));
    }

    #[test]
    fn psi_inverse_step_golden_examples() {
        let om = worked_example_om();
        // Row 1 read right to left at step 4: ({e2,e4}, ∅) back to ({e2}, ∅).
        let s = OmPairState::new(4, elems(&[2, 4]), elems(&[]));
        let (prev, case) = psi_inverse_step(&om, &s).unwrap();
        assert_eq!(prev, OmPairState::new(3, elems(&[2]), elems(&[])));
        assert_eq!(case, StepCase::AddedToNbc);
        // Row 2 at step 1: (∅, {e2}) at level 1 back to (∅, {e2}).
        let s = OmPairState::new(1, elems(&[]), elems(&[2]));
        let (prev, case) = psi_inverse_step(&om, &s).unwrap();
        assert_eq!(prev, OmPairState::new(0, elems(&[]), elems(&[2])));
        assert_eq!(case, StepCase::Unchanged);
    }

    #[test]
    fn forward_trace_matches_golden_table() {
        let om = worked_example_om();
        for (a0, states, result) in golden_rows() {
            let trace = psi_forward_trace(&om, a0).unwrap();
            assert_eq!(trace.states.len(), 5);
            assert_eq!(trace.states[0], OmPairState::new(0, elems(&[]), a0));
            for (k, &(n, a)) in states.iter().enumerate() {
                assert_eq!(
                    trace.states[k + 1],
                    OmPairState::new(k + 1, n, a),
                    "row with A0 = {a0} differs at level {}",
                    k + 1
                );
            }
            assert_eq!(trace.final_state().nbc_part(), result);
            assert_eq!(psi_forward(&om, a0).unwrap(), result);
        }
    }

    #[test]
    fn backward_reverses_every_golden_row() {
        let om = worked_example_om();
        for (a0, _, result) in golden_rows() {
            assert_eq!(psi_backward(&om, result).unwrap(), a0);
        }
    }

    #[test]
    fn backward_rejects_non_nbc_with_witness() {
        let om = worked_example_om();
        match psi_backward(&om, elems(&[1, 2])) {
            Err(BijectionError::NotNbc { broken_circuit, .. }) => {
                assert_eq!(broken_circuit, elems(&[1, 2]));
            }
            other => panic!("expected NotNbc, got {other:?}"),
        }
    }

    #[test]
    fn step_and_inverse_step_are_mutually_inverse_on_golden_states() {
        let om = worked_example_om();
        for (a0, _, _) in golden_rows() {
            let trace = psi_forward_trace(&om, a0).unwrap();
            for k in 0..4 {
                let s = trace.states[k];
                let (next, case_fwd) = psi_step(&om, &s).unwrap();
                assert_eq!(next, trace.states[k + 1]);
                let (back, case_bwd) = psi_inverse_step(&om, &next).unwrap();
                assert_eq!(back, s);
                assert_eq!(case_fwd, case_bwd);
            }
        }
    }

    #[test]
    fn acyclic_reorientations_of_worked_example() {
        let om = worked_example_om();
        let mut got = enumerate_acyclic_reorientations(&om);
        got.sort_by_key(|s| (s.len(), *s));
        let expected: Vec<ElemSet> = vec![
            elems(&[]),
            elems(&[2]),
            elems(&[3]),
            elems(&[1, 3]),
            elems(&[2, 4]),
            elems(&[1, 2, 4]),
            elems(&[1, 3, 4]),
            elems(&[1, 2, 3, 4]),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn free_om_has_all_reorientations_acyclic() {
        let om = OrientedMatroid::new(3, vec![]).unwrap();
        assert_eq!(enumerate_acyclic_reorientations(&om).len(), 8);
    }

    #[test]
    fn om_with_loop_has_no_acyclic_reorientation() {
        let x = crate::om::SignedSubset::new(elems(&[1]), elems(&[])).unwrap();
        let om = OrientedMatroid::from_representatives(2, vec![x]).unwrap();
        assert!(enumerate_acyclic_reorientations(&om).is_empty());
        assert!(om.underlying().enumerate_nbc().is_empty());
    }

    #[test]
    fn bijection_on_worked_example() {
        let om = worked_example_om();
        let reorientations = enumerate_acyclic_reorientations(&om);
        let mut images: Vec<ElemSet> = reorientations
            .iter()
            .map(|&a| psi_forward(&om, a).unwrap())
            .collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), reorientations.len());
        let mut nbc = om.underlying().enumerate_nbc();
        nbc.sort();
        assert_eq!(images, nbc);
    }
}
