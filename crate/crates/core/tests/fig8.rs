//! Cross-checks on the two-tetrahedron census triangulation.

mod common;

use common::fig8;
use num_traits::Zero;
use spuntrop_core::equations::{edge_rows, qmatching_direct, qmatching_from_a};
use spuntrop_core::surfaces::{enumerate_pf, vertex_solutions, NormalQCoordinate};
use spuntrop_core::tri::{trace_cusp_classes, trace_edge_classes, validate_torus_links};
use spuntrop_hull::{lp_feasible, rat_int, LpOutcome, LpProblem, Rat};

#[test]
fn two_edges_of_degree_six_and_one_torus_cusp() {
    let t = fig8();
    assert_eq!(t.n(), 2);
    let classes = trace_edge_classes(&t);
    assert_eq!(classes.len(), 2, "edge class count equals n");
    for c in &classes {
        assert_eq!(c.degree(), 6);
    }
    let cusps = trace_cusp_classes(&t);
    assert_eq!(cusps.len(), 1);
    assert!(validate_torus_links(&cusps).is_ok());
    assert_eq!(cusps[0].vertices.len(), 8, "4n link triangles");
}

#[test]
fn edge_rows_are_the_census_equations() {
    let g = edge_rows(&fig8());
    let mut rows: Vec<Vec<i64>> = g.edge_rows.iter().map(|e| e.entries.clone()).collect();
    rows.sort();
    assert_eq!(rows, vec![vec![0, 1, 2, 0, 1, 2], vec![2, 1, 0, 2, 1, 0]]);
}

#[test]
fn qmatching_routes_agree() {
    let t = fig8();
    let from_a = qmatching_from_a(&edge_rows(&t));
    let direct = qmatching_direct(&t);
    for (x, y) in from_a.iter().zip(&direct) {
        let neg: Vec<i64> = y.iter().map(|v| -v).collect();
        assert!(x == y || x == &neg);
    }
}

/// Brute-force completeness oracle: every admissible integer point of the
/// matching kernel with entries ≤ 6 is a nonnegative combination of the
/// enumerated vertex rays of its own pattern.
#[test]
fn no_admissible_kernel_point_escapes_the_enumerated_cones() {
    let t = fig8();
    let b = qmatching_from_a(&edge_rows(&t));
    let pf = enumerate_pf(&b, t.n());
    let vertices = vertex_solutions(&pf);

    let mut checked = 0usize;
    // admissible supports: one chosen coordinate per tetrahedron
    for c0 in 0..3usize {
        for c1 in 0..3usize {
            for v0 in 0..=6i64 {
                for v1 in 0..=6i64 {
                    let mut x = vec![0i64; 6];
                    x[c0] = v0;
                    x[3 + c1] = v1;
                    let in_kernel = b
                        .iter()
                        .all(|row| row.iter().zip(&x).map(|(r, xi)| r * xi).sum::<i64>() == 0);
                    if !in_kernel {
                        continue;
                    }
                    let point = NormalQCoordinate::from_ints(&x).unwrap();
                    // feasibility of x = Σ λ_v v with λ ≥ 0 over the
                    // vertices supported inside the same pattern
                    let usable: Vec<&NormalQCoordinate> = vertices
                        .iter()
                        .filter(|v| v.support().iter().all(|&q| q == c0 || q == 3 + c1))
                        .collect();
                    let mut lp = LpProblem::new(usable.len());
                    for coord in 0..6 {
                        let row: Vec<Rat> =
                            usable.iter().map(|v| v.entries[coord].clone()).collect();
                        lp.add_equality(row, point.entries[coord].clone());
                    }
                    for j in 0..usable.len() {
                        let mut row = vec![Rat::zero(); usable.len()];
                        row[j] = rat_int(1);
                        lp.add_inequality(row, Rat::zero());
                    }
                    match lp_feasible(&lp) {
                        LpOutcome::Feasible(_) => checked += 1,
                        LpOutcome::Infeasible(_) => {
                            panic!("kernel point {x:?} outside the enumerated cone hull")
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 9, "the scan must hit nontrivial kernel points");
}
