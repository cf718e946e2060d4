//! Region enumeration for full and restricted arrangements.
//!
//! A region of the restricted arrangement `A/flat` (with a chosen active
//! subset of hyperplanes) is determined by a side for every active hyperplane
//! that properly cuts the flat. Enumeration walks those cutting hyperplanes
//! in index order, branching `+` before `-` and pruning infeasible sign
//! prefixes, so the output order is lexicographic in the sign vector with
//! `+` preceding `-`.

use crate::set::{Element, ElemSet};

use super::feasibility::feasible_witness;
use super::{ArrError, Arrangement, FlatGeometry, Rational, RegionCell, Sign};

impl Arrangement {
    /// All regions of the arrangement, i.e. of the empty flat.
    pub fn regions(&self) -> Result<Vec<RegionCell>, ArrError> {
        self.regions_in_flat(ElemSet::empty())
    }

    /// All regions of the arrangement restricted to `∩flat`: every realizable
    /// full sign vector with zeros exactly on the hyperplanes containing the
    /// flat, each with a rational interior witness.
    pub fn regions_in_flat(&self, flat: ElemSet) -> Result<Vec<RegionCell>, ArrError> {
        self.regions_restricted(self.indices(), flat)
    }

    /// Regions of the restriction to `∩flat` of the hyperplanes in `active`
    /// only. Hyperplanes outside `active` do not constrain the cells, but
    /// their (witness) sides are still recorded in the sign vectors.
    pub fn regions_restricted(
        &self,
        active: ElemSet,
        flat: ElemSet,
    ) -> Result<Vec<RegionCell>, ArrError> {
        let geom = self
            .flat_geometry(flat)
            .ok_or(ArrError::EmptyFlat { flat })?;
        let cutting: Vec<Element> = geom.cuts.intersection(active).iter().collect();
        let mut out = Vec::new();
        let mut pinned: Vec<(Element, Sign)> = Vec::new();
        self.enumerate_cells(&geom, &cutting, &mut pinned, &mut out);
        Ok(out)
    }

    /// Number of regions of the restriction of the hyperplanes after
    /// position `k` to the flat `∩flat`.
    pub fn restricted_region_count(&self, k: usize, flat: ElemSet) -> Result<usize, ArrError> {
        let after_k = self.indices() - ElemSet::prefix(k.min(self.size()));
        Ok(self.regions_restricted(after_k, flat)?.len())
    }

    fn enumerate_cells(
        &self,
        geom: &FlatGeometry,
        remaining: &[Element],
        pinned: &mut Vec<(Element, Sign)>,
        out: &mut Vec<RegionCell>,
    ) {
        if self.solve_pinned(geom, pinned).is_none() {
            return;
        }
        match remaining.split_first() {
            None => {
                let cell = self
                    .build_cell(geom, pinned)
                    .expect("feasible sign prefix yields a cell");
                out.push(cell);
            }
            Some((&e, rest)) => {
                for sign in [Sign::Pos, Sign::Neg] {
                    pinned.push((e, sign));
                    self.enumerate_cells(geom, rest, pinned, out);
                    pinned.pop();
                }
            }
        }
    }

    fn solve_pinned(
        &self,
        geom: &FlatGeometry,
        pinned: &[(Element, Sign)],
    ) -> Option<Vec<Rational>> {
        let equalities: Vec<(Vec<Rational>, Rational)> = geom
            .flat
            .iter()
            .map(|e| {
                let h = self.hyperplane(e);
                (h.normal().to_vec(), h.offset().clone())
            })
            .collect();
        let stricts: Vec<(Vec<Rational>, Rational, Sign)> = pinned
            .iter()
            .map(|&(e, sign)| {
                let h = self.hyperplane(e);
                (h.normal().to_vec(), h.offset().clone(), sign)
            })
            .collect();
        feasible_witness(self.dim(), &equalities, &stricts)
    }

    /// Builds the region cell on `geom`'s flat pinned to the given strict
    /// sides, or `None` if the system is infeasible.
    ///
    /// The witness is nudged off every hyperplane that cuts the flat but is
    /// not pinned (by adding a side for it, `+` if feasible, else `-`), so
    /// that zero entries of the final sign vector are exactly the hyperplanes
    /// containing the flat.
    pub(crate) fn build_cell(
        &self,
        geom: &FlatGeometry,
        pinned: &[(Element, Sign)],
    ) -> Option<RegionCell> {
        let mut constraints: Vec<(Element, Sign)> = pinned.to_vec();
        let mut witness = self.solve_pinned(geom, &constraints)?;
        'refine: loop {
            for e in geom.cuts.iter() {
                if constraints.iter().any(|&(c, _)| c == e) {
                    continue;
                }
                if self.hyperplane(e).side(&witness) == Sign::Zero {
                    constraints.push((e, Sign::Pos));
                    match self.solve_pinned(geom, &constraints) {
                        Some(w) => witness = w,
                        None => {
                            constraints.pop();
                            constraints.push((e, Sign::Neg));
                            witness = self
                                .solve_pinned(geom, &constraints)
                                .expect("one side of a cutting hyperplane is nonempty");
                        }
                    }
                    continue 'refine;
                }
            }
            break;
        }
        let signs: Vec<Sign> = self
            .indices()
            .iter()
            .map(|e| {
                if geom.contains.contains(e) {
                    Sign::Zero
                } else {
                    let s = self.hyperplane(e).side(&witness);
                    debug_assert_ne!(s, Sign::Zero, "witness still on a non-flat hyperplane");
                    s
                }
            })
            .collect();
        Some(RegionCell::from_parts(signs, witness, geom.flat))
    }

    /// The full-dimensional region with the given sign vector, if realizable.
    pub fn region_from_signs(&self, signs: &[Sign]) -> Result<RegionCell, ArrError> {
        if signs.len() != self.size() {
            return Err(ArrError::SignsLengthMismatch {
                expected: self.size(),
                got: signs.len(),
            });
        }
        if let Some(i) = signs.iter().position(|&s| s == Sign::Zero) {
            return Err(ArrError::ZeroSignNotAllowed { index: i + 1 });
        }
        let geom = self
            .flat_geometry(ElemSet::empty())
            .expect("the empty flat is the whole space");
        let pinned: Vec<(Element, Sign)> = signs
            .iter()
            .enumerate()
            .map(|(i, &s)| (Element::new(i + 1), s))
            .collect();
        self.build_cell(&geom, &pinned)
            .ok_or(ArrError::UnrealizableSigns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::fixtures::{hyperplane, worked_example_arrangement};
    use crate::set::elems;

    #[test]
    fn worked_example_has_ten_regions() {
        let arr = worked_example_arrangement();
        let regions = arr.regions().unwrap();
        assert_eq!(regions.len(), 10);
        for cell in &regions {
            assert!(cell.flat().is_empty());
            // The witness reproduces the sign vector exactly.
            for e in arr.indices().iter() {
                assert_eq!(arr.hyperplane(e).side(cell.witness()), cell.sign(e));
            }
        }
        // Sign vectors are pairwise distinct.
        let mut signs: Vec<String> = regions.iter().map(|c| c.signs_string()).collect();
        signs.sort();
        signs.dedup();
        assert_eq!(signs.len(), 10);
    }

    #[test]
    fn single_hyperplane_two_regions() {
        let arr = Arrangement::new(2, vec![hyperplane(&[1, 0], 0)]).unwrap();
        let regions = arr.regions().unwrap();
        assert_eq!(regions.len(), 2);
        assert_eq!(regions[0].signs(), &[Sign::Pos]);
        assert_eq!(regions[1].signs(), &[Sign::Neg]);
    }

    #[test]
    fn empty_arrangement_one_region() {
        let arr = Arrangement::new(3, vec![]).unwrap();
        let regions = arr.regions().unwrap();
        assert_eq!(regions.len(), 1);
        assert!(regions[0].signs().is_empty());
        assert_eq!(regions[0].witness().len(), 3);
    }

    #[test]
    fn regions_in_a_line_flat() {
        // Restricted to H2 (the line x = y), the traces of H1/H3 (the origin)
        // and H4 (the point (1/2, 1/2)) cut it into 3 open pieces.
        let arr = worked_example_arrangement();
        let regions = arr.regions_in_flat(elems(&[2])).unwrap();
        assert_eq!(regions.len(), 3);
        for cell in &regions {
            assert_eq!(cell.flat(), elems(&[2]));
            assert_eq!(cell.sign(crate::set::Element::new(2)), Sign::Zero);
        }
    }

    #[test]
    fn regions_of_empty_flat_intersection_error() {
        let arr =
            Arrangement::new(2, vec![hyperplane(&[1, 0], 0), hyperplane(&[1, 0], 1)]).unwrap();
        assert_eq!(
            arr.regions_in_flat(elems(&[1, 2])),
            Err(ArrError::EmptyFlat { flat: elems(&[1, 2]) })
        );
    }

    #[test]
    fn restricted_region_counts() {
        let arr = worked_example_arrangement();
        // k = size: no hyperplanes left, one region (the whole flat).
        assert_eq!(arr.restricted_region_count(4, elems(&[2])).unwrap(), 1);
        // k = 0 on the empty flat: all regions.
        assert_eq!(arr.restricted_region_count(0, ElemSet::empty()).unwrap(), 10);
        // After H1 and H2, the traces on the line x = y are the origin (H3)
        // and (1/2,1/2) (H4): three pieces.
        assert_eq!(arr.restricted_region_count(2, elems(&[2])).unwrap(), 3);
    }

    #[test]
    fn region_from_signs_roundtrip_and_rejection() {
        let arr = worked_example_arrangement();
        let cell = arr
            .region_from_signs(&[Sign::Neg, Sign::Pos, Sign::Pos, Sign::Pos])
            .unwrap();
        assert_eq!(cell.signs_string(), "-,+,+,+");
        // y > 0, x < y, x > 0, x + y > 1 forces x < y and x > 0 and y > 0;
        // realizable. But y < 0 with x > 0, x < y is impossible.
        assert_eq!(
            arr.region_from_signs(&[Sign::Neg, Sign::Neg, Sign::Pos, Sign::Pos]),
            Err(ArrError::UnrealizableSigns)
        );
        assert!(matches!(
            arr.region_from_signs(&[Sign::Zero, Sign::Pos, Sign::Pos, Sign::Pos]),
            Err(ArrError::ZeroSignNotAllowed { index: 1 })
        ));
        assert!(matches!(
            arr.region_from_signs(&[Sign::Pos]),
            Err(ArrError::SignsLengthMismatch { .. })
        ));
    }

    #[test]
    fn duplicate_hyperplanes_force_equal_signs() {
        let arr =
            Arrangement::new(2, vec![hyperplane(&[1, 1], 1), hyperplane(&[2, 2], 2)]).unwrap();
        let regions = arr.regions().unwrap();
        assert_eq!(regions.len(), 2);
        for cell in &regions {
            assert_eq!(cell.signs()[0], cell.signs()[1]);
        }
    }

    #[test]
    fn cells_in_restricted_enumeration_avoid_dropped_hyperplanes() {
        // Active = {H3, H4} on the full plane: H1, H2 are dropped but the
        // witnesses must still be strictly off them.
        let arr = worked_example_arrangement();
        let regions = arr.regions_restricted(elems(&[3, 4]), ElemSet::empty()).unwrap();
        assert_eq!(regions.len(), 4);
        for cell in &regions {
            for e in arr.indices().iter() {
                assert_ne!(cell.sign(e), Sign::Zero);
                assert_eq!(arr.hyperplane(e).side(cell.witness()), cell.sign(e));
            }
        }
    }
}
