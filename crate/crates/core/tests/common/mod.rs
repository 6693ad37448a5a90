//! Shared fixtures and published golden data for the Whitehead-link
//! triangulation.

#![allow(dead_code)]

use spuntrop_core::equations::{ingest_nz, NzDocument};
use spuntrop_core::tri::{parse_triangulation, Triangulation};
use std::path::PathBuf;

pub fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path:?}: {e}"))
}

pub fn whl() -> Triangulation {
    parse_triangulation(&fixture("whl.json")).expect("whl fixture parses")
}

pub fn fig8() -> Triangulation {
    parse_triangulation(&fixture("fig8.json")).expect("fig8 fixture parses")
}

pub fn whl_nz() -> NzDocument {
    ingest_nz(&fixture("whl_nz.json")).expect("whl_nz fixture parses")
}

/// Minimal integer vertex coordinates, indexed by the published vertex
/// number 1..=20 (entry 0 unused).
pub const VERTICES: [[i64; 12]; 21] = [
    [0; 12],
    [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0],
    [0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2],
    [0, 1, 0, 0, 0, 2, 0, 0, 0, 0, 1, 0],
    [0, 0, 2, 0, 1, 0, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2],
    [0, 1, 0, 0, 0, 0, 0, 0, 2, 0, 1, 0],
    [0, 0, 2, 0, 1, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 1, 0],
];

/// Oriented boundary coordinates (ν(L^t_0), −ν(M_0), ν(L^t_1), −ν(M_1))
/// for the same numbering.
pub const BOUNDARY: [[i64; 4]; 21] = [
    [0; 4],
    [0, 0, 0, -1],
    [0, -1, 0, 0],
    [0, 0, 0, 1],
    [0, 1, 0, 0],
    [-2, 0, 0, -1],
    [2, 0, 0, -1],
    [0, -1, 2, 0],
    [0, -1, -2, 0],
    [2, 0, 0, 1],
    [-2, 0, 0, 1],
    [0, 1, -2, 0],
    [0, 1, 2, 0],
    [-4, -1, -2, -1],
    [4, 1, -2, -1],
    [-2, -1, 4, 1],
    [-2, -1, -4, -1],
    [4, 1, 2, 1],
    [-4, -1, 2, 1],
    [2, 1, -4, -1],
    [2, 1, 4, 1],
];

/// Cusp-preserving equivalence classes of vertex solutions.
pub const KF_CLASSES: [&[usize]; 6] = [
    &[2, 4],
    &[1, 3],
    &[7, 8, 11, 12],
    &[5, 6, 9, 10],
    &[15, 16, 19, 20],
    &[13, 14, 17, 18],
];

/// Full-symmetry-group classes (cusp-swapping symmetries merge the pairs).
pub const D4_CLASSES: [&[usize]; 3] = [
    &[1, 2, 3, 4],
    &[5, 6, 7, 8, 9, 10, 11, 12],
    &[13, 14, 15, 16, 17, 18, 19, 20],
];

/// The eight published semi-angle structures (angles in units of π) and
/// the vertex surfaces dual to each.
pub const ANGLE_STRUCTURES: [(&str, [i64; 12], [usize; 7]); 8] = [
    (
        "alpha+",
        [0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0],
        [1, 5, 6, 13, 14, 16, 19],
    ),
    (
        "alpha-",
        [0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0],
        [1, 5, 6, 7, 12, 15, 20],
    ),
    (
        "beta+",
        [1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0],
        [2, 7, 8, 13, 15, 16, 18],
    ),
    (
        "beta-",
        [1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0],
        [2, 6, 7, 8, 9, 14, 17],
    ),
    (
        "gamma+",
        [1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1],
        [3, 9, 10, 15, 17, 18, 20],
    ),
    (
        "gamma-",
        [1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0],
        [3, 8, 9, 10, 11, 16, 19],
    ),
    (
        "delta+",
        [0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1],
        [4, 11, 12, 14, 17, 19, 20],
    ),
    (
        "delta-",
        [0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0],
        [4, 5, 10, 11, 12, 13, 18],
    ),
];

/// Gluing-equation exponent rows of the triangulation: red and green give
/// 1 = wxyz, black gives 1 = w'x'y'z'(w'')²(x'')², blue gives
/// 1 = w'x'y'z'(y'')²(z'')².
pub const ROW_RED: [i64; 12] = [1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0];
pub const ROW_BLACK: [i64; 12] = [0, 1, 2, 0, 1, 2, 0, 1, 0, 0, 1, 0];
pub const ROW_BLUE: [i64; 12] = [0, 1, 0, 0, 1, 0, 0, 1, 2, 0, 1, 2];

/// The two independent Q-matching equations the system reduces to.
pub const QMATCH_1: [i64; 12] = [0, 1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1];
pub const QMATCH_2: [i64; 12] = [1, -1, 0, 1, -1, 0, -1, 1, 0, -1, 1, 0];

/// Map a 12-vector of integers to the published vertex number, if any.
pub fn vertex_number(v: &[i64]) -> Option<usize> {
    (1..=20).find(|&i| VERTICES[i] == v[..])
}
