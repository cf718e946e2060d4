//! Exact feasibility of systems of linear equalities and strict inequalities,
//! with a rational witness point on success.
//!
//! Equalities are eliminated first by Gaussian elimination, then the strict
//! inequalities are resolved by Fourier-Motzkin elimination over the free
//! variables. Combining two strict inequalities yields a strict inequality,
//! so the projection is exact, and back-substitution picks an interior point
//! (the midpoint of each open interval, or a unit step past a one-sided
//! bound). Constraint counts are tiny here; no attempt is made to control
//! the quadratic blow-up beyond normalization and deduplication per level.

use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::linalg::{dot, Rational};
use super::Sign;

/// One strict inequality `coeffs · y > rhs` over the free variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Strict {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

impl Strict {
    /// Scales so the first nonzero coefficient has absolute value one; the
    /// scaling factor is positive, so the inequality is unchanged.
    fn normalized(mut self) -> Strict {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()) {
            let scale = if lead < &Rational::zero() {
                -lead.clone()
            } else {
                lead.clone()
            };
            for c in &mut self.coeffs {
                *c = &*c / &scale;
            }
            self.rhs = &self.rhs / &scale;
        }
        self
    }
}

/// Substitution produced by eliminating the equality constraints:
/// `x[pivot_cols[r]] = consts[r] + Σ_j free_matrix[r][j] · y_j`, with
/// `x[free_cols[j]] = y_j`.
struct Substitution {
    dim: usize,
    pivot_cols: Vec<usize>,
    free_cols: Vec<usize>,
    free_matrix: Vec<Vec<Rational>>,
    consts: Vec<Rational>,
}

impl Substitution {
    /// Gaussian elimination of `normal · x = offset` constraints.
    /// Returns `None` when the equalities are inconsistent.
    fn from_equalities(dim: usize, equalities: &[(Vec<Rational>, Rational)]) -> Option<Substitution> {
        let mut mat: Vec<Vec<Rational>> = equalities
            .iter()
            .map(|(normal, offset)| {
                assert_eq!(normal.len(), dim, "equality dimension mismatch");
                let mut row = normal.clone();
                row.push(offset.clone());
                row
            })
            .collect();
        // Reduced row echelon over the augmented matrix.
        let nrows = mat.len();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..dim {
            if row == nrows {
                break;
            }
            let Some(p) = (row..nrows).find(|&r| !mat[r][col].is_zero()) else {
                continue;
            };
            mat.swap(row, p);
            let inv = mat[row][col].clone();
            for c in col..=dim {
                mat[row][c] = &mat[row][c] / &inv;
            }
            for r in 0..nrows {
                if r != row && !mat[r][col].is_zero() {
                    let factor = mat[r][col].clone();
                    for c in col..=dim {
                        mat[r][c] = &mat[r][c] - &factor * &mat[row][c];
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        // Inconsistency: a remaining row 0 = nonzero.
        for r in row..nrows {
            if !mat[r][dim].is_zero() {
                return None;
            }
        }
        let free_cols: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
        let free_matrix = pivots
            .iter()
            .enumerate()
            .map(|(r, _)| free_cols.iter().map(|&f| -mat[r][f].clone()).collect())
            .collect();
        let consts = pivots
            .iter()
            .enumerate()
            .map(|(r, _)| mat[r][dim].clone())
            .collect();
        Some(Substitution {
            dim,
            pivot_cols: pivots,
            free_cols,
            free_matrix,
            consts,
        })
    }

    /// Rewrites `gamma · x > c` over the free variables.
    fn rewrite(&self, gamma: &[Rational], c: &Rational) -> Strict {
        let mut coeffs: Vec<Rational> = self
            .free_cols
            .iter()
            .map(|&f| gamma[f].clone())
            .collect();
        let mut rhs = c.clone();
        for (r, &p) in self.pivot_cols.iter().enumerate() {
            if gamma[p].is_zero() {
                continue;
            }
            rhs = rhs - &gamma[p] * &self.consts[r];
            for (j, coeff) in coeffs.iter_mut().enumerate() {
                *coeff = &*coeff + &gamma[p] * &self.free_matrix[r][j];
            }
        }
        Strict { coeffs, rhs }
    }

    /// Lifts an assignment of the free variables to the full space.
    fn lift(&self, y: &[Rational]) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.dim];
        for (j, &f) in self.free_cols.iter().enumerate() {
            x[f] = y[j].clone();
        }
        for (r, &p) in self.pivot_cols.iter().enumerate() {
            x[p] = self.consts[r].clone() + dot(&self.free_matrix[r], y);
        }
        x
    }
}

/// Decides the system `{normal · x = offset}` and `{normal · x > offset}` or
/// `{normal · x < offset}` (per the sign) exactly. On success returns a
/// rational point satisfying every constraint; `None` means infeasible.
///
/// Every inequality sign must be strict ([`Sign::Pos`] or [`Sign::Neg`]).
pub fn feasible_witness(
    dim: usize,
    equalities: &[(Vec<Rational>, Rational)],
    stricts: &[(Vec<Rational>, Rational, Sign)],
) -> Option<Vec<Rational>> {
    let sub = Substitution::from_equalities(dim, equalities)?;
    let nvars = sub.free_cols.len();

    let mut current: Vec<Strict> = Vec::with_capacity(stricts.len());
    for (normal, offset, sign) in stricts {
        assert_eq!(normal.len(), dim, "inequality dimension mismatch");
        let (gamma, c): (Vec<Rational>, Rational) = match sign {
            Sign::Pos => (normal.clone(), offset.clone()),
            Sign::Neg => (
                normal.iter().map(|v| -v.clone()).collect(),
                -offset.clone(),
            ),
            Sign::Zero => panic!("strict inequality with sign 0"),
        };
        let s = sub.rewrite(&gamma, &c).normalized();
        if s.coeffs.iter().all(Zero::is_zero) {
            if s.rhs >= Rational::zero() {
                return None; // constant constraint 0 > rhs fails
            }
        } else {
            current.push(s);
        }
    }
    dedup(&mut current);

    // levels[v] holds the constraints over the first v free variables,
    // before variable v-1 is eliminated.
    let mut levels: Vec<Vec<Strict>> = vec![Vec::new(); nvars + 1];
    levels[nvars] = current;
    for v in (1..=nvars).rev() {
        let var = v - 1;
        let mut lowers: Vec<Strict> = Vec::new();
        let mut uppers: Vec<Strict> = Vec::new();
        let mut rest: Vec<Strict> = Vec::new();
        for s in &levels[v] {
            match s.coeffs[var].cmp(&Rational::zero()) {
                std::cmp::Ordering::Greater => lowers.push(s.clone()),
                std::cmp::Ordering::Less => uppers.push(s.clone()),
                std::cmp::Ordering::Equal => rest.push(s.clone()),
            }
        }
        for lo in &lowers {
            for up in &uppers {
                // lo: a·yv + L > r1 (a > 0), up: -b·yv + U > r2 (b > 0);
                // eliminate yv: b·(L - r1) + a·(U - r2) > 0.
                let a = lo.coeffs[var].clone();
                let b = -up.coeffs[var].clone();
                let mut coeffs = Vec::with_capacity(var);
                for j in 0..var {
                    coeffs.push(&b * &lo.coeffs[j] + &a * &up.coeffs[j]);
                }
                let rhs = &b * &lo.rhs + &a * &up.rhs;
                let s = Strict { coeffs, rhs }.normalized();
                if s.coeffs.iter().all(Zero::is_zero) {
                    if s.rhs >= Rational::zero() {
                        return None;
                    }
                } else {
                    rest.push(s);
                }
            }
        }
        for s in &mut rest {
            s.coeffs.truncate(var);
        }
        dedup(&mut rest);
        levels[v - 1] = rest;
    }
    debug_assert!(levels[0].is_empty());

    // Back-substitution: pick each variable inside its open interval.
    let mut y: Vec<Rational> = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let mut lower: Option<Rational> = None;
        let mut upper: Option<Rational> = None;
        for s in &levels[v + 1] {
            let a = &s.coeffs[v];
            if a.is_zero() {
                continue;
            }
            let partial = dot(&s.coeffs[..v], &y);
            let bound = (&s.rhs - partial) / a;
            if a > &Rational::zero() {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
        let value = match (lower, upper) {
            (None, None) => Rational::zero(),
            (Some(l), None) => l + Rational::one(),
            (None, Some(u)) => u - Rational::one(),
            (Some(l), Some(u)) => {
                debug_assert!(l < u, "elimination left an empty interval");
                (l + u) / (Rational::one() + Rational::one())
            }
        };
        y.push(value);
    }

    let x = sub.lift(&y);
    debug_assert!(equalities
        .iter()
        .all(|(normal, offset)| dot(normal, &x) == *offset));
    debug_assert!(stricts.iter().all(|(normal, offset, sign)| {
        let v = dot(normal, &x);
        match sign {
            Sign::Pos => v > *offset,
            Sign::Neg => v < *offset,
            Sign::Zero => unreachable!(),
        }
    }));
    Some(x)
}

fn dedup(constraints: &mut Vec<Strict>) {
    let mut seen: HashSet<Strict> = HashSet::new();
    constraints.retain(|s| seen.insert(s.clone()));
}
