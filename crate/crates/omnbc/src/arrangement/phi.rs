//! The stepwise bijection between regions and affine NBC subsets, and its
//! transport onto the oriented-matroid bijection for linear arrangements.
//!
//! A state at level `k` pairs an affine NBC subset `B_k` of the first `k`
//! hyperplanes with a region `Δ_k` of the restriction of the remaining
//! hyperplanes to `∩B_k`. The level-`k` step looks at how `Δ_{k-1}` sits
//! against `H_k` inside the region `Δ'_k` obtained by dropping `H_k`'s
//! constraint:
//!
//! - on the positive side with `H_k` meeting `Δ'_k`: `H_k` joins the NBC
//!   part and the region moves onto `Δ'_k ∩ H_k` (case 1);
//! - on the positive side with `H_k` missing `Δ'_k`: nothing changes
//!   (case 2);
//! - on the negative side: the region relaxes to `Δ'_k` (case 3).
//!
//! All case decisions reduce to exact feasibility tests; regions are tracked
//! through their defining flat plus pinned strict sides, never through
//! floating point. States are validated eagerly at the public entry points
//! and trusted along a pass, mirroring the oriented-matroid side.

use crate::bijection::{OmPairState, StepCase};
use crate::set::{Element, ElemSet};

use super::feasibility::feasible_witness;
use super::{ArrError, Arrangement, Rational, RegionCell, Sign};

/// A `(B_k, Δ_k)` pairing at level `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArrPairState {
    k: usize,
    nbc_part: ElemSet,
    cell: RegionCell,
}

impl ArrPairState {
    pub fn new(k: usize, nbc_part: ElemSet, cell: RegionCell) -> ArrPairState {
        ArrPairState { k, nbc_part, cell }
    }

    pub fn level(&self) -> usize {
        self.k
    }

    /// `B_k`, the affine NBC part.
    pub fn nbc_part(&self) -> ElemSet {
        self.nbc_part
    }

    /// `Δ_k`, the region of the restricted arrangement.
    pub fn cell(&self) -> &RegionCell {
        &self.cell
    }

    /// Semantic equality of states: same level and NBC part, and the cells
    /// describe the same region. Witnesses (and with them the recorded sides
    /// of dropped hyperplanes at or below the level) may differ.
    pub fn same_state(&self, other: &ArrPairState) -> bool {
        self.k == other.k
            && self.nbc_part == other.nbc_part
            && self.cell.flat() == other.cell.flat()
            && self
                .cell
                .signs()
                .iter()
                .zip(other.cell.signs())
                .enumerate()
                .all(|(i, (a, b))| i < self.k || a == b)
    }
}

/// Checks that `s` is a well-formed level-`k` state: the NBC part is an
/// affine NBC subset of the first `k` hyperplanes, and the cell is a region
/// of the restriction of the later hyperplanes to the NBC part's flat.
pub fn validate_arr_state(arr: &Arrangement, s: &ArrPairState) -> Result<(), ArrError> {
    let m = arr.size();
    if s.k > m {
        return Err(ArrError::LevelOutOfRange { k: s.k, m });
    }
    if !s.nbc_part.is_subset_of(ElemSet::prefix(s.k)) {
        return Err(ArrError::NbcPartNotInPrefix {
            part: s.nbc_part,
            k: s.k,
        });
    }
    arr.check_affine_nbc(s.nbc_part)?;
    if s.cell.flat() != s.nbc_part {
        return Err(ArrError::FlatMismatch {
            nbc: s.nbc_part,
            flat: s.cell.flat(),
        });
    }
    if s.cell.signs().len() != m {
        return Err(ArrError::SignsLengthMismatch {
            expected: m,
            got: s.cell.signs().len(),
        });
    }
    if s.cell.witness().len() != arr.dim() {
        return Err(ArrError::DimensionMismatch {
            index: 0,
            expected: arr.dim(),
            got: s.cell.witness().len(),
        });
    }
    let geom = arr
        .flat_geometry(s.nbc_part)
        .expect("NBC subsets have nonempty intersection");
    for e in s.nbc_part.iter() {
        if arr.hyperplane(e).side(s.cell.witness()) != Sign::Zero {
            return Err(ArrError::WitnessOffFlat { index: e.index() });
        }
    }
    for e in arr.indices().iter() {
        let recorded = s.cell.sign(e);
        if geom.contains.contains(e) {
            if recorded != Sign::Zero {
                return Err(ArrError::SignMismatch { index: e.index() });
            }
        } else if recorded == Sign::Zero || arr.hyperplane(e).side(s.cell.witness()) != recorded {
            return Err(ArrError::SignMismatch { index: e.index() });
        }
    }
    Ok(())
}

/// The level-0 state `(∅, region)` for a full-dimensional region.
pub fn initial_arr_state(
    arr: &Arrangement,
    region: &RegionCell,
) -> Result<ArrPairState, ArrError> {
    if !region.flat().is_empty() {
        return Err(ArrError::NotFullDimensional {
            flat: region.flat(),
        });
    }
    let state = ArrPairState::new(0, ElemSet::empty(), region.clone());
    validate_arr_state(arr, &state)?;
    Ok(state)
}

/// Feasibility of the open cell `{flat equalities} ∪ {pinned strict sides}`
/// intersected with the hyperplane `on` taken as an equality.
fn meets_hyperplane(
    arr: &Arrangement,
    flat: ElemSet,
    pinned: &[(Element, Sign)],
    on: Element,
) -> bool {
    let mut equalities: Vec<(Vec<Rational>, Rational)> = flat
        .iter()
        .map(|e| {
            let h = arr.hyperplane(e);
            (h.normal().to_vec(), h.offset().clone())
        })
        .collect();
    let h = arr.hyperplane(on);
    equalities.push((h.normal().to_vec(), h.offset().clone()));
    let stricts: Vec<(Vec<Rational>, Rational, Sign)> = pinned
        .iter()
        .map(|&(e, sign)| {
            let h = arr.hyperplane(e);
            (h.normal().to_vec(), h.offset().clone(), sign)
        })
        .collect();
    feasible_witness(arr.dim(), &equalities, &stricts).is_some()
}

/// The pinned strict sides of the cell's region within the arrangement of
/// hyperplanes after position `k`, restricted to the cutting set `cuts`.
fn pins_above(cell: &RegionCell, cuts: ElemSet, k: usize) -> Vec<(Element, Sign)> {
    cuts.iter()
        .filter(|e| e.index() > k)
        .map(|e| {
            let s = cell.sign(e);
            debug_assert_ne!(s, Sign::Zero, "geometric sign entry is strict");
            (e, s)
        })
        .collect()
}

/// Trusted step core; assumes `s` is valid at level `k - 1`.
fn step_unchecked(
    arr: &Arrangement,
    s: &ArrPairState,
) -> Result<(ArrPairState, StepCase), ArrError> {
    let k = s.k + 1;
    let ek = Element::new(k);
    let geom = arr
        .flat_geometry(s.nbc_part)
        .expect("valid states have consistent flats");
    if geom.contains.contains(ek) {
        // An NBC part below level k can never span into H_k.
        return Err(ArrError::CaseUnreachable {
            k,
            detail: "the current flat lies inside the level hyperplane",
        });
    }
    match s.cell.sign(ek) {
        Sign::Neg => {
            // Case 3: the region relaxes to Δ'_k; the flat, witness and signs
            // are unchanged as data.
            Ok((
                ArrPairState::new(k, s.nbc_part, s.cell.clone()),
                StepCase::RemovedFromReorientation,
            ))
        }
        Sign::Pos => {
            let pins = pins_above(&s.cell, geom.cuts, k);
            if meets_hyperplane(arr, s.nbc_part, &pins, ek) {
                // Case 1: H_k passes through Δ'_k; move onto the trace.
                let flat = s.nbc_part.with(ek);
                let geom_new = arr
                    .flat_geometry(flat)
                    .expect("the case test produced a common point");
                let pins_new = pins_above(&s.cell, geom_new.cuts, k);
                let cell = arr
                    .build_cell(&geom_new, &pins_new)
                    .expect("case 1 region is nonempty");
                Ok((ArrPairState::new(k, flat, cell), StepCase::AddedToNbc))
            } else {
                // Case 2: H_k misses Δ'_k, so Δ'_k = Δ_{k-1}.
                Ok((
                    ArrPairState::new(k, s.nbc_part, s.cell.clone()),
                    StepCase::Unchanged,
                ))
            }
        }
        Sign::Zero => Err(ArrError::CaseUnreachable {
            k,
            detail: "region has sign 0 on the level hyperplane",
        }),
    }
}

/// Applies the level-`k` step to a state at level `k-1`.
pub fn phi_step(
    arr: &Arrangement,
    s: &ArrPairState,
) -> Result<(ArrPairState, StepCase), ArrError> {
    let m = arr.size();
    if s.k >= m {
        return Err(ArrError::NoSuchStep { k: s.k + 1, m });
    }
    validate_arr_state(arr, s)?;
    let out = step_unchecked(arr, s)?;
    debug_assert!(validate_arr_state(arr, &out.0).is_ok());
    Ok(out)
}

/// Trusted inverse-step core; assumes `s` is valid at level `k >= 1`.
fn inverse_step_unchecked(
    arr: &Arrangement,
    s: &ArrPairState,
) -> Result<(ArrPairState, StepCase), ArrError> {
    let k = s.k;
    let ek = Element::new(k);
    if s.nbc_part.contains(ek) {
        // Undo case 1: enlarge the flat by dropping H_k, then keep the
        // positive side of H_k.
        let flat = s.nbc_part.without(ek);
        let geom = arr
            .flat_geometry(flat)
            .expect("subsets of consistent sets are consistent");
        debug_assert!(geom.cuts.contains(ek), "H_k cuts the enlarged flat");
        let mut pins = pins_above(&s.cell, geom.cuts, k);
        pins.push((ek, Sign::Pos));
        let cell = arr
            .build_cell(&geom, &pins)
            .expect("both sides of H_k on the enlarged region are nonempty");
        return Ok((ArrPairState::new(k - 1, flat, cell), StepCase::AddedToNbc));
    }
    let geom = arr
        .flat_geometry(s.nbc_part)
        .expect("valid states have consistent flats");
    if geom.contains.contains(ek) {
        return Err(ArrError::CaseUnreachable {
            k,
            detail: "the current flat lies inside the level hyperplane",
        });
    }
    let cuts_flat = geom.cuts.contains(ek);
    let pins = pins_above(&s.cell, geom.cuts, k);
    if cuts_flat && meets_hyperplane(arr, s.nbc_part, &pins, ek) {
        // Undo case 3: H_k passes through the open region; keep its negative
        // side.
        let mut pins = pins;
        pins.push((ek, Sign::Neg));
        let cell = arr
            .build_cell(&geom, &pins)
            .expect("the negative side of a crossing hyperplane is nonempty");
        Ok((
            ArrPairState::new(k - 1, s.nbc_part, cell),
            StepCase::RemovedFromReorientation,
        ))
    } else {
        // Undo case 2: H_k misses the region entirely.
        Ok((
            ArrPairState::new(k - 1, s.nbc_part, s.cell.clone()),
            StepCase::Unchanged,
        ))
    }
}

/// Applies the inverse of the level-`k` step to a state at level `k`.
///
/// The reported case is the case of the forward step being undone.
pub fn phi_inverse_step(
    arr: &Arrangement,
    s: &ArrPairState,
) -> Result<(ArrPairState, StepCase), ArrError> {
    if s.k == 0 {
        return Err(ArrError::NoSuchStep {
            k: 0,
            m: arr.size(),
        });
    }
    validate_arr_state(arr, s)?;
    let out = inverse_step_unchecked(arr, s)?;
    debug_assert!(validate_arr_state(arr, &out.0).is_ok());
    Ok(out)
}

/// A full forward or backward pass of the region-side bijection.
#[derive(Clone, Debug)]
pub struct PhiTrace {
    pub states: Vec<ArrPairState>,
    pub cases: Vec<StepCase>,
}

impl PhiTrace {
    pub fn final_state(&self) -> &ArrPairState {
        self.states.last().expect("trace has at least one state")
    }
}

/// Maps a full-dimensional region to its affine NBC subset, keeping the
/// whole trace.
pub fn phi_forward_trace(
    arr: &Arrangement,
    region: &RegionCell,
) -> Result<PhiTrace, ArrError> {
    let mut state = initial_arr_state(arr, region)?;
    let mut states = vec![state.clone()];
    let mut cases = Vec::with_capacity(arr.size());
    for _ in 0..arr.size() {
        let (next, case) = step_unchecked(arr, &state)?;
        debug_assert!(validate_arr_state(arr, &next).is_ok());
        state = next;
        states.push(state.clone());
        cases.push(case);
    }
    Ok(PhiTrace { states, cases })
}

/// Maps a full-dimensional region to its affine NBC subset.
pub fn phi_forward(arr: &Arrangement, region: &RegionCell) -> Result<ElemSet, ArrError> {
    Ok(phi_forward_trace(arr, region)?.final_state().nbc_part())
}

/// Maps an affine NBC subset back to its region, keeping the whole trace.
pub fn phi_backward_trace(arr: &Arrangement, nbc: ElemSet) -> Result<PhiTrace, ArrError> {
    let m = arr.size();
    if !nbc.is_subset_of(arr.indices()) {
        return Err(ArrError::NbcPartNotInPrefix { part: nbc, k: m });
    }
    arr.check_affine_nbc(nbc)?;
    let geom = arr
        .flat_geometry(nbc)
        .expect("NBC subsets have nonempty intersection");
    let cell = arr
        .build_cell(&geom, &[])
        .expect("the whole flat is a nonempty region");
    let mut state = ArrPairState::new(m, nbc, cell);
    debug_assert!(validate_arr_state(arr, &state).is_ok());
    let mut states = vec![state.clone()];
    let mut cases = Vec::with_capacity(m);
    for _ in 0..m {
        let (prev, case) = inverse_step_unchecked(arr, &state)?;
        debug_assert!(validate_arr_state(arr, &prev).is_ok());
        state = prev;
        states.push(state.clone());
        cases.push(case);
    }
    debug_assert!(state.nbc_part().is_empty());
    Ok(PhiTrace { states, cases })
}

/// Maps an affine NBC subset back to the region that maps onto it.
pub fn phi_backward(arr: &Arrangement, nbc: ElemSet) -> Result<RegionCell, ArrError> {
    Ok(phi_backward_trace(arr, nbc)?.final_state().cell().clone())
}

/// Transports a region-side state to the oriented-matroid side of a linear
/// arrangement: the NBC part keeps its indices, and the reorientation part
/// collects the hyperplanes after the level on whose negative side the
/// region lies.
pub fn tau(arr: &Arrangement, s: &ArrPairState) -> Result<OmPairState, ArrError> {
    arr.require_linear()?;
    let reorient: ElemSet = arr
        .indices()
        .iter()
        .filter(|e| e.index() > s.k && s.cell.sign(*e) == Sign::Neg)
        .collect();
    Ok(OmPairState::new(s.k, s.nbc_part, reorient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::fixtures::worked_example_arrangement;
    use crate::set::elems;

    fn delta0(arr: &Arrangement) -> RegionCell {
        arr.region_from_signs(&[Sign::Neg, Sign::Pos, Sign::Pos, Sign::Pos])
            .unwrap()
    }

    #[test]
    fn worked_example_forward_steps() {
        let arr = worked_example_arrangement();
        let s0 = initial_arr_state(&arr, &delta0(&arr)).unwrap();

        // Step 1: Δ0 lies in H1^-, case 3; the NBC part stays empty and the
        // cell data is unchanged.
        let (s1, case1) = phi_step(&arr, &s0).unwrap();
        assert_eq!(case1, StepCase::RemovedFromReorientation);
        assert_eq!(s1.nbc_part(), elems(&[]));
        assert_eq!(s1.cell(), s0.cell());

        // Step 2: Δ1 lies in H2^+ and H2 splits the enlarged region, case 1;
        // the region becomes the open half line on H2.
        let (s2, case2) = phi_step(&arr, &s1).unwrap();
        assert_eq!(case2, StepCase::AddedToNbc);
        assert_eq!(s2.nbc_part(), elems(&[2]));
        assert_eq!(s2.cell().flat(), elems(&[2]));
        assert_eq!(s2.cell().sign(Element::new(2)), Sign::Zero);
        // On the half line x = y, x + y > 1: signs of H3 and H4 stay +.
        assert_eq!(s2.cell().sign(Element::new(3)), Sign::Pos);
        assert_eq!(s2.cell().sign(Element::new(4)), Sign::Pos);

        // Step 3: H3 misses the half line, case 2.
        let (s3, case3) = phi_step(&arr, &s2).unwrap();
        assert_eq!(case3, StepCase::Unchanged);
        assert!(s3.same_state(&ArrPairState::new(3, elems(&[2]), s2.cell().clone())));

        // Step 4: H4 crosses the half line's closure at (1/2,1/2), case 1.
        let (s4, case4) = phi_step(&arr, &s3).unwrap();
        assert_eq!(case4, StepCase::AddedToNbc);
        assert_eq!(s4.nbc_part(), elems(&[2, 4]));
        assert_eq!(s4.cell().flat(), elems(&[2, 4]));
    }

    #[test]
    fn worked_example_full_forward() {
        let arr = worked_example_arrangement();
        let trace = phi_forward_trace(&arr, &delta0(&arr)).unwrap();
        assert_eq!(trace.final_state().nbc_part(), elems(&[2, 4]));
        let case_numbers: Vec<u8> = trace.cases.iter().map(|c| c.number()).collect();
        assert_eq!(case_numbers, vec![3, 1, 2, 1]);
    }

    #[test]
    fn phi_inverse_reverses_step_four() {
        let arr = worked_example_arrangement();
        let trace = phi_forward_trace(&arr, &delta0(&arr)).unwrap();
        let s4 = trace.final_state();
        let (s3, case) = phi_inverse_step(&arr, s4).unwrap();
        assert_eq!(case, StepCase::AddedToNbc);
        assert!(s3.same_state(&trace.states[3]));
        // The recovered region is the open half line on H2, positive side of
        // H4.
        assert_eq!(s3.cell().flat(), elems(&[2]));
        assert_eq!(s3.cell().sign(Element::new(4)), Sign::Pos);
    }

    #[test]
    fn inverse_ignores_hyperplanes_missing_the_region() {
        let arr = worked_example_arrangement();
        let trace = phi_forward_trace(&arr, &delta0(&arr)).unwrap();
        // At level 3 the region is the half line on H2 with x + y > 1; H3
        // misses it, so the inverse step leaves everything unchanged.
        let s3 = &trace.states[3];
        let (s2, case) = phi_inverse_step(&arr, s3).unwrap();
        assert_eq!(case, StepCase::Unchanged);
        assert!(s2.same_state(&trace.states[2]));
    }

    #[test]
    fn full_backward_recovers_delta0() {
        let arr = worked_example_arrangement();
        let trace = phi_backward_trace(&arr, elems(&[2, 4])).unwrap();
        let region = trace.final_state().cell();
        assert!(region.flat().is_empty());
        assert_eq!(region.signs_string(), "-,+,+,+");
        let forward = phi_forward_trace(&arr, &delta0(&arr)).unwrap();
        for (b, f) in trace.states.iter().rev().zip(&forward.states) {
            assert!(b.same_state(f), "mismatch at level {}", f.level());
        }
    }

    #[test]
    fn phi_backward_rejects_non_nbc() {
        let arr = worked_example_arrangement();
        match phi_backward(&arr, elems(&[1, 2])) {
            Err(ArrError::ContainsAffineBrokenCircuit { broken_circuit, .. }) => {
                assert_eq!(broken_circuit, elems(&[1, 2]));
            }
            other => panic!("expected broken-circuit rejection, got {other:?}"),
        }
        match phi_backward(&arr, elems(&[1, 3, 4])) {
            Err(ArrError::EmptyIntersection { .. }) => {}
            other => panic!("expected empty-intersection rejection, got {other:?}"),
        }
    }

    #[test]
    fn all_regions_map_onto_all_nbc_sets() {
        let arr = worked_example_arrangement();
        let regions = arr.regions().unwrap();
        let mut images: Vec<ElemSet> = regions
            .iter()
            .map(|r| phi_forward(&arr, r).unwrap())
            .collect();
        images.sort();
        images.dedup();
        let mut nbc = arr.affine_nbc_sets();
        nbc.sort();
        assert_eq!(images, nbc);
    }

    #[test]
    fn tau_requires_linear_and_reads_negative_signs() {
        let arr = worked_example_arrangement();
        let s = initial_arr_state(&arr, &delta0(&arr)).unwrap();
        assert!(matches!(tau(&arr, &s), Err(ArrError::NotLinear { .. })));
        let cone = arr.cone();
        let regions = cone.regions().unwrap();
        let s0 = initial_arr_state(&cone, &regions[0]).unwrap();
        let t0 = tau(&cone, &s0).unwrap();
        assert_eq!(t0.level(), 0);
        assert_eq!(t0.nbc_part(), elems(&[]));
        assert_eq!(
            t0.reorient_part(),
            cone.region_to_reorientation(&regions[0]).unwrap()
        );
    }

    #[test]
    fn validation_rejects_malformed_states() {
        let arr = worked_example_arrangement();
        let region = delta0(&arr);
        // NBC part outside the level prefix.
        let bad = ArrPairState::new(0, elems(&[2]), region.clone());
        assert!(matches!(
            validate_arr_state(&arr, &bad),
            Err(ArrError::NbcPartNotInPrefix { .. })
        ));
        // Flat and NBC part disagree.
        let bad = ArrPairState::new(2, elems(&[2]), region.clone());
        assert!(matches!(
            validate_arr_state(&arr, &bad),
            Err(ArrError::FlatMismatch { .. })
        ));
        // NBC part containing a broken circuit.
        let cell = arr.regions_in_flat(elems(&[1, 2])).unwrap();
        assert_eq!(cell.len(), 1);
        let bad = ArrPairState::new(2, elems(&[1, 2]), cell[0].clone());
        assert!(matches!(
            validate_arr_state(&arr, &bad),
            Err(ArrError::ContainsAffineBrokenCircuit { .. })
        ));
    }
}
