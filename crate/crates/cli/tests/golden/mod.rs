//! Published golden data for the Whitehead-link acceptance checks.

#![allow(dead_code)]

/// Minimal integer vertex coordinates by published number (entry 0 unused).
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

/// (ν(L^t_0), −ν(M_0), ν(L^t_1), −ν(M_1)) by published number.
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

/// The eight published semi-angle structures and their dual vertex sets.
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

pub const QMATCH_1: [i64; 12] = [0, 1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1];
pub const QMATCH_2: [i64; 12] = [1, -1, 0, 1, -1, 0, -1, 1, 0, -1, 1, 0];

pub fn vertex_number(v: &[i64]) -> Option<usize> {
    (1..=20).find(|&i| VERTICES[i] == v[..])
}
