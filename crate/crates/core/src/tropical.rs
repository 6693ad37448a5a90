//! The tropical pre-variety of an ideal triangulation and its
//! correspondence with the admissible solution space.
//!
//! Each parameter polynomial p_i = z_i(1 − z''_i) − 1 (and its primed
//! cyclic variants) has a three-point Newton support; each gluing
//! polynomial g_j = Π z^a (z')^{a'} (z'')^{a''} − 1 has a two-point
//! support. The spherical dual of a support is the set of directions ξ
//! where max ξ·α is attained at least twice, represented here as a fan of
//! polyhedral cones (one candidate cone per support pair, empty ones
//! dropped). Intersecting all duals gives the pre-variety, a superset of
//! the logarithmic limit set. The map N identifies pre-variety points with
//! admissible solutions through ξ = C_n^T N(ξ).

use crate::equations::{CnMatrix, ExponentVector, ShapeAssignment};
use crate::surfaces::NormalQCoordinate;
use crate::tri::Triangulation;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use spuntrop_hull::{primitive_integer, rat_int, zeros, Cone, QVec, Rat, RayReport};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TropError {
    #[error("degenerate support: fewer than two points")]
    DegenerateSupport,
    #[error(
        "no admissible solution: block {0} of the direction is not C_1^T of an admissible block"
    )]
    NoAdmissibleSolution(usize),
    #[error("degenerate shape encountered while sampling the path")]
    DegenerateShape,
}

/// Finite set of exponent vectors of a Laurent polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    pub dim: usize,
    pub points: Vec<Vec<i64>>,
}

impl SupportSet {
    pub fn new(dim: usize, mut points: Vec<Vec<i64>>) -> Self {
        assert!(!points.is_empty(), "support must be nonempty");
        for p in &points {
            assert_eq!(p.len(), dim);
        }
        points.sort();
        points.dedup();
        SupportSet { dim, points }
    }
}

/// Supports of p_i, p'_i, p''_i for every tetrahedron, in the order
/// (p_0, p'_0, p''_0, p_1, …). For tet i the three supports are
/// {z_i, z_i z''_i, 1}, {z'_i z_i, z'_i, 1} and {z''_i z'_i, z''_i, 1}.
pub fn parameter_supports(n: usize) -> Vec<SupportSet> {
    let dim = 3 * n;
    let mut out = Vec::with_capacity(3 * n);
    for i in 0..n {
        for level in 0..3usize {
            let mut single = vec![0i64; dim];
            single[3 * i + level] = 1;
            let mut double = single.clone();
            double[3 * i + (level + 2) % 3] += 1;
            out.push(SupportSet::new(dim, vec![single, double, vec![0; dim]]));
        }
    }
    out
}

/// Two-point support {row, 0} of each gluing polynomial. A zero row gives
/// the degenerate one-point support, which [`spherical_dual`] rejects.
pub fn gluing_supports(rows: &[ExponentVector]) -> Vec<SupportSet> {
    rows.iter()
        .map(|r| {
            SupportSet::new(
                r.entries.len(),
                vec![r.entries.clone(), vec![0; r.entries.len()]],
            )
        })
        .collect()
}

/// A fan of cones covering the directions where the support's maximum is
/// attained at least twice.
#[derive(Debug, Clone)]
pub struct DualFan {
    pub dim: usize,
    pub cones: Vec<Cone>,
}

/// Build the dual fan from pairwise-equality cones: for each pair (α, β)
/// of support points, the cone {ξ : ξ·α = ξ·β ≥ ξ·γ for all γ}. Cones with
/// no nonzero point are dropped.
pub fn spherical_dual(s: &SupportSet) -> Result<DualFan, TropError> {
    if s.points.len() < 2 {
        return Err(TropError::DegenerateSupport);
    }
    let mut cones = Vec::new();
    for i in 0..s.points.len() {
        for j in i + 1..s.points.len() {
            let mut cone = Cone::full_space(s.dim);
            let diff: QVec = s.points[i]
                .iter()
                .zip(&s.points[j])
                .map(|(a, b)| rat_int(a - b))
                .collect();
            cone.add_equality(diff);
            for (k, gamma) in s.points.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                let row: QVec = s.points[i]
                    .iter()
                    .zip(gamma)
                    .map(|(a, g)| rat_int(a - g))
                    .collect();
                cone.add_inequality(row);
            }
            if !cone.rays_with_lineality().is_trivial() {
                cones.push(cone);
            }
        }
    }
    Ok(DualFan { dim: s.dim, cones })
}

/// One maximal cone of the pre-variety with its V-form.
#[derive(Debug, Clone)]
pub struct PrevarietyCone {
    pub cone: Cone,
    pub rays: Vec<Vec<BigInt>>,
    pub lineality: Vec<Vec<BigInt>>,
    pub dim: usize,
}

/// The tropical pre-variety as a list of maximal cones plus the canonical
/// primitive rays across all of them.
#[derive(Debug, Clone)]
pub struct PreVariety {
    pub dim: usize,
    pub cones: Vec<PrevarietyCone>,
    pub rays: Vec<Vec<BigInt>>,
}

/// Intersect the spherical duals of all gluing and parameter polynomials.
/// Fans are folded one at a time, distributing intersection over the cone
/// lists, pruning trivial cones eagerly and deduplicating by V-form.
pub fn prevariety(t: &Triangulation) -> PreVariety {
    let n = t.n();
    let dim = 3 * n;
    let g = crate::equations::edge_rows(t);

    // gluing duals are single hyperplane cones; fold them into the seed
    let mut seed = Cone::full_space(dim);
    for row in &g.edge_rows {
        let q: QVec = row.entries.iter().map(|&x| rat_int(x)).collect();
        seed.add_equality(q);
    }
    let mut acc: Vec<(Cone, RayReport)> = vec![(seed.clone(), seed.rays_with_lineality())];

    for support in parameter_supports(n) {
        let fan = spherical_dual(&support).expect("parameter supports have three points");
        let mut next: Vec<(Cone, RayReport)> = Vec::new();
        for (cone, _) in &acc {
            for fc in &fan.cones {
                let meet = cone.intersect(fc).expect("equal ambient dimension");
                let rep = meet.rays_with_lineality();
                if rep.is_trivial() {
                    continue;
                }
                if next.iter().any(|(_, r)| *r == rep) {
                    continue;
                }
                next.push((meet, rep));
            }
        }
        acc = next;
    }

    // maximal cones only; reps are pairwise distinct after dedup, so
    // containment with a different rep is strict
    let mut keep = vec![true; acc.len()];
    for i in 0..acc.len() {
        for j in 0..acc.len() {
            if i == j || !keep[j] {
                continue;
            }
            if acc[i].1 != acc[j].1 && acc[j].0.contains_cone(&acc[i].1) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut cones: Vec<PrevarietyCone> = acc
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|((cone, rep), _)| {
            let dim_c = cone.span_dim();
            PrevarietyCone {
                cone,
                rays: rep.rays,
                lineality: rep.lineality,
                dim: dim_c,
            }
        })
        .collect();
    cones.sort_by(|a, b| a.rays.cmp(&b.rays));

    let mut rays: Vec<Vec<BigInt>> = cones.iter().flat_map(|c| c.rays.iter().cloned()).collect();
    rays.sort();
    rays.dedup();
    PreVariety { dim, cones, rays }
}

/// A primitive integer direction in the pre-variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalRay {
    pub xi: Vec<BigInt>,
}

impl TropicalRay {
    pub fn from_rational(xi: &[Rat]) -> Self {
        TropicalRay {
            xi: primitive_integer(xi),
        }
    }
}

/// Solve ξ = C_n^T N(ξ) blockwise for the unique admissible N: each block
/// of ξ must be a nonnegative multiple of one column of C_1^T, namely
/// (0,1,−1) for q, (−1,0,1) for q', (1,−1,0) for q''.
pub fn xi_to_normal(xi: &[Rat]) -> Result<NormalQCoordinate, TropError> {
    assert_eq!(xi.len() % 3, 0);
    let n = xi.len() / 3;
    let mut entries = zeros(3 * n);
    for t in 0..n {
        let block = &xi[3 * t..3 * t + 3];
        if block.iter().all(Rat::is_zero) {
            continue;
        }
        let mut solved = false;
        for (level, col) in [[0i64, 1, -1], [-1, 0, 1], [1, -1, 0]].iter().enumerate() {
            // the scale is read off the first nonzero column entry
            let k = (0..3).find(|&k| col[k] != 0).unwrap();
            let scale = &block[k] / rat_int(col[k]);
            if scale.is_negative() || scale.is_zero() {
                continue;
            }
            if (0..3).all(|m| block[m] == &scale * rat_int(col[m])) {
                entries[3 * t + level] = scale;
                solved = true;
                break;
            }
        }
        if !solved {
            return Err(TropError::NoAdmissibleSolution(t));
        }
    }
    NormalQCoordinate::new(entries).map_err(|_| TropError::NoAdmissibleSolution(0))
}

pub fn xi_to_normal_int(xi: &[BigInt]) -> Result<NormalQCoordinate, TropError> {
    let q: QVec = xi.iter().map(|x| Rat::from_integer(x.clone())).collect();
    xi_to_normal(&q)
}

/// ξ = C_n^T x, exactly. Round-trips with [`xi_to_normal`].
pub fn normal_to_xi(x: &NormalQCoordinate) -> QVec {
    CnMatrix::new(x.n()).transpose_apply(&x.entries)
}

/// Floating-point estimate of the logarithmic-limit direction of a
/// degenerating path of shape assignments.
#[derive(Debug, Clone)]
pub struct ProbeResult {
    /// Unit direction from the difference of successive log-coordinate
    /// vectors; the zero vector when the path does not diverge.
    pub direction: Vec<f64>,
    /// u(Z)·log|Z| at the last sample (the normalized log-coordinate point).
    pub last_point: Vec<f64>,
    /// Angle between the last two direction estimates, in radians.
    pub angle_delta: f64,
    pub diverging: bool,
    pub samples_used: usize,
}

const DIVERGENCE_THRESHOLD: f64 = 1e-3;

/// Sample the path at the geometric schedule t_k = t0·r^k and estimate the
/// limit direction of log|Z|. Degenerate samples stop the schedule early;
/// at least two valid samples are required.
pub fn log_limit_probe(
    sampler: &dyn Fn(Complex64) -> Option<ShapeAssignment>,
    t0: Complex64,
    ratio: f64,
    samples: usize,
) -> Result<ProbeResult, TropError> {
    let mut logs: Vec<Vec<f64>> = Vec::new();
    let mut t = t0;
    for _ in 0..samples {
        let Some(za) = sampler(t) else {
            break;
        };
        let lv: Vec<f64> = za.symbols().iter().map(|z| z.norm().ln()).collect();
        if lv.iter().any(|x| !x.is_finite()) {
            break;
        }
        logs.push(lv);
        t *= ratio;
    }
    if logs.len() < 2 {
        return Err(TropError::DegenerateShape);
    }
    let k = logs.len();
    let diff = |a: &[f64], b: &[f64]| -> Vec<f64> { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let d_last = diff(&logs[k - 1], &logs[k - 2]);
    let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let n_last = norm(&d_last);
    let diverging = n_last > DIVERGENCE_THRESHOLD;
    let direction: Vec<f64> = if diverging {
        d_last.iter().map(|x| x / n_last).collect()
    } else {
        vec![0.0; d_last.len()]
    };
    let angle_delta = if k >= 3 && diverging {
        let d_prev = diff(&logs[k - 2], &logs[k - 3]);
        angle_between(&d_last, &d_prev)
    } else {
        f64::NAN
    };
    let last = &logs[k - 1];
    let u = 1.0 / (1.0 + last.iter().map(|x| x * x).sum::<f64>()).sqrt();
    let last_point = last.iter().map(|x| x * u).collect();
    Ok(ProbeResult {
        direction,
        last_point,
        angle_delta,
        diverging,
        samples_used: k,
    })
}

/// Angle between two nonzero vectors, in radians.
pub fn angle_between(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    (dot / (na * nb)).clamp(-1.0, 1.0).acos()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_supports_shape() {
        let s = parameter_supports(2);
        assert_eq!(s.len(), 6);
        for sup in &s {
            assert_eq!(sup.points.len(), 3);
        }
        // p_0: {1, z_0, z_0 z''_0}
        assert_eq!(
            s[0].points,
            vec![
                vec![0, 0, 0, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0],
                vec![1, 0, 1, 0, 0, 0]
            ]
        );
        // p'_0: {1, z'_0, z_0 z'_0}
        assert_eq!(
            s[1].points,
            vec![
                vec![0, 0, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0, 0],
                vec![1, 1, 0, 0, 0, 0]
            ]
        );
        // p''_0: {1, z''_0, z'_0 z''_0}
        assert_eq!(
            s[2].points,
            vec![
                vec![0, 0, 0, 0, 0, 0],
                vec![0, 0, 1, 0, 0, 0],
                vec![0, 1, 1, 0, 0, 0]
            ]
        );
    }

    #[test]
    fn two_point_support_dual_is_hyperplane() {
        let s = SupportSet::new(2, vec![vec![1, 2], vec![0, 0]]);
        let fan = spherical_dual(&s).unwrap();
        assert_eq!(fan.cones.len(), 1);
        let rep = fan.cones[0].rays_with_lineality();
        assert_eq!(rep.lineality.len(), 1);
        assert_eq!(rep.lineality[0], vec![BigInt::from(2), BigInt::from(-1)]);
    }

    #[test]
    fn degenerate_support_rejected() {
        let s = SupportSet::new(2, vec![vec![0, 0]]);
        assert_eq!(
            spherical_dual(&s).unwrap_err(),
            TropError::DegenerateSupport
        );
    }

    #[test]
    fn xi_roundtrip_blocks() {
        let x = NormalQCoordinate::from_ints(&[0, 1, 0]).unwrap();
        let xi = normal_to_xi(&x);
        assert_eq!(xi, vec![rat_int(-1), rat_int(0), rat_int(1)]);
        assert_eq!(xi_to_normal(&xi).unwrap(), x);
        let zero = NormalQCoordinate::zero(1);
        assert!(xi_to_normal(&normal_to_xi(&zero)).unwrap().is_zero());
    }

    #[test]
    fn bad_block_rejected() {
        let xi = vec![rat_int(1), rat_int(1), rat_int(-2)];
        assert!(matches!(
            xi_to_normal(&xi),
            Err(TropError::NoAdmissibleSolution(0))
        ));
    }

    #[test]
    fn parameter_duals_have_three_cones() {
        for s in parameter_supports(1) {
            assert_eq!(spherical_dual(&s).unwrap().cones.len(), 3);
        }
    }

    #[test]
    fn simplex_support_dual_membership_grid() {
        // dual of {(1,0), (0,1), (0,0)} against the max-twice test on a
        // dense integer grid of directions
        let s = SupportSet::new(2, vec![vec![1, 0], vec![0, 1], vec![0, 0]]);
        let fan = spherical_dual(&s).unwrap();
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                let xi = vec![rat_int(a), rat_int(b)];
                let dots = [a, b, 0];
                let max = dots.iter().max().unwrap();
                let max_twice = dots.iter().filter(|d| *d == max).count() >= 2;
                let in_fan = fan.cones.iter().any(|c| c.contains(&xi));
                assert_eq!(in_fan, max_twice, "direction ({a},{b})");
            }
        }
    }

    #[test]
    fn known_ideal_point_directions_map_to_their_surfaces() {
        let xi: QVec = [-1, 0, 1, 1, -1, 0, -1, 0, 1, 1, -1, 0]
            .iter()
            .map(|&x| rat_int(x))
            .collect();
        let n = xi_to_normal(&xi).unwrap();
        assert_eq!(
            n,
            NormalQCoordinate::from_ints(&[0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1]).unwrap()
        );

        let xi: QVec = [-1, 0, 1, 0, 1, -1, 0, 0, 0, 1, -1, 0]
            .iter()
            .map(|&x| rat_int(x))
            .collect();
        let n = xi_to_normal(&xi).unwrap();
        assert_eq!(
            n,
            NormalQCoordinate::from_ints(&[0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap()
        );
    }
}
