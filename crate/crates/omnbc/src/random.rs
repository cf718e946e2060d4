//! Randomized instance generators for the property and acceptance suites.
//!
//! Oriented matroids are generated realizably: a random small-integer matrix
//! is read as the normals of a linear arrangement, whose minimal dependent
//! column sets (signed by their kernel vectors) give an axiom-valid oriented
//! matroid with no repair step. Arrangements are generated with small integer
//! data, optionally forcing parallel or duplicated hyperplanes.

use num_traits::FromPrimitive;
use rand::Rng;

use crate::arrangement::{Arrangement, Hyperplane, Rational};
use crate::om::OrientedMatroid;

fn random_normal(rng: &mut impl Rng, dim: usize) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..dim).map(|_| rng.random_range(-5..=5)).collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

fn to_rational(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_i64(x).unwrap()).collect()
}

/// A random linear arrangement of `m` hyperplanes in dimension `dim`, with
/// integer normal entries in `[-5, 5]` and no zero normals.
pub fn random_linear_arrangement(rng: &mut impl Rng, dim: usize, m: usize) -> Arrangement {
    let hyperplanes = (0..m)
        .map(|_| {
            Hyperplane::new(to_rational(&random_normal(rng, dim)), Rational::from_i64(0).unwrap())
                .expect("normal is nonzero")
        })
        .collect();
    Arrangement::new(dim, hyperplanes).expect("dimensions agree")
}

/// A random affine arrangement. `force_parallel` replaces one normal by a
/// positive multiple of another with a different offset; `force_duplicate`
/// replaces one hyperplane by a scaled copy of another (the same hyperplane
/// with the same positive side).
pub fn random_affine_arrangement(
    rng: &mut impl Rng,
    dim: usize,
    m: usize,
    force_parallel: bool,
    force_duplicate: bool,
) -> Arrangement {
    let mut normals: Vec<Vec<i64>> = (0..m).map(|_| random_normal(rng, dim)).collect();
    let mut offsets: Vec<i64> = (0..m).map(|_| rng.random_range(-3..=3)).collect();
    if force_parallel && m >= 2 {
        let scale = rng.random_range(1..=3);
        normals[1] = normals[0].iter().map(|&x| x * scale).collect();
        offsets[1] = offsets[0] + rng.random_range(1..=3);
    }
    if force_duplicate && m >= 3 {
        let scale = rng.random_range(1..=3);
        normals[2] = normals[0].iter().map(|&x| x * scale).collect();
        offsets[2] = offsets[0] * scale;
    }
    let hyperplanes = normals
        .iter()
        .zip(&offsets)
        .map(|(n, &b)| {
            Hyperplane::new(to_rational(n), Rational::from_i64(b).unwrap())
                .expect("normal is nonzero")
        })
        .collect();
    Arrangement::new(dim, hyperplanes).expect("dimensions agree")
}

/// A realizable oriented matroid on `m` elements from a random `dim × m`
/// integer matrix: circuits are the minimal linearly dependent column sets,
/// signed by the kernel vector of each dependency.
pub fn random_realizable_om(rng: &mut impl Rng, dim: usize, m: usize) -> OrientedMatroid {
    random_linear_arrangement(rng, dim, m)
        .oriented_matroid()
        .expect("linear by construction")
}
