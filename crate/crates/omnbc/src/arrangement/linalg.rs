//! Small exact-rational linear algebra: Gaussian elimination, rank, linear
//! solves, and kernel vectors. Everything operates on dense row vectors of
//! arbitrary-precision rationals; instance sizes are tiny, so clarity wins
//! over cleverness.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

/// Dot product of two equal-length vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// Reduced row echelon form in place. Returns the pivot columns in order.
fn rref(mat: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = mat.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = mat[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, p);
        let inv = mat[row][col].clone();
        for c in col..ncols {
            mat[row][c] = &mat[row][c] / &inv;
        }
        for r in 0..nrows {
            if r != row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..ncols {
                    mat[r][c] = &mat[r][c] - &factor * &mat[row][c];
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of the matrix whose rows are given.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut mat: Vec<Vec<Rational>> = rows.to_vec();
    rref(&mut mat).len()
}

/// Some solution of the linear system `rows · x = rhs`, or `None` if
/// inconsistent. Free variables are set to zero.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(rows.len(), rhs.len());
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let ncols = rows[0].len();
    let mut mat: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = rref(&mut mat);
    if pivots.contains(&ncols) {
        return None; // a row reduced to 0 = 1
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = mat[r][ncols].clone();
    }
    Some(x)
}

/// A nonzero vector `λ` with `Σ λ_j · columns[j] = 0`, or `None` if the
/// columns are linearly independent. The first nonzero entry is positive.
///
/// When the columns form a minimal dependent set the kernel is
/// one-dimensional, so the result is unique up to the fixed normalization.
pub fn kernel_vector(columns: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let s = columns.len();
    if s == 0 {
        return None;
    }
    let n = columns[0].len();
    // Matrix with the given vectors as columns.
    let mut mat: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..s).map(|j| columns[j][i].clone()).collect())
        .collect();
    let pivots = rref(&mut mat);
    if pivots.len() == s {
        return None;
    }
    let free = (0..s).find(|c| !pivots.contains(c)).expect("rank deficit");
    let mut lambda = vec![Rational::zero(); s];
    lambda[free] = Rational::one();
    for (r, &col) in pivots.iter().enumerate() {
        lambda[col] = -mat[r][free].clone();
    }
    let lead = lambda
        .iter()
        .find(|v| !v.is_zero())
        .expect("kernel vector is nonzero");
    if lead < &Rational::zero() {
        for v in &mut lambda {
            *v = -v.clone();
        }
    }
    Some(lambda)
}
