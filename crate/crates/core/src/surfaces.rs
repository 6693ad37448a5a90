//! The projectivised admissible solution space PF(T) of spun-normal
//! surface theory.
//!
//! For each of the 3^n admissibility patterns (one permitted quadrilateral
//! type per tetrahedron) the admissible solutions form the polyhedral cone
//! `{x ≥ 0 on the pattern coordinates, x = 0 elsewhere, B·x = 0}`. The
//! cones are enumerated, deduplicated by their extreme-ray sets, and
//! assembled into a cell complex whose vertices are the projective vertex
//! solutions.

use crate::equations::SlopeFunctional;
use crate::tri::QuadPermutation;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use spuntrop_hull::{primitive_integer, rank, rat_int, zeros, Cone, QVec, Rat};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfError {
    #[error("coordinate is not admissible: {0}")]
    NotAdmissible(String),
    #[error("incompatible supports in tetrahedron {0}")]
    IncompatibleSupports(usize),
}

/// A nonnegative rational vector in quadrilateral coordinates with at most
/// one nonzero quad type per tetrahedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalQCoordinate {
    pub entries: QVec,
}

impl NormalQCoordinate {
    pub fn new(entries: QVec) -> Result<Self, SurfError> {
        if !entries.len().is_multiple_of(3) {
            return Err(SurfError::NotAdmissible(
                "length is not a multiple of 3".into(),
            ));
        }
        if entries.iter().any(|x| x.is_negative()) {
            return Err(SurfError::NotAdmissible("negative entry".into()));
        }
        for t in 0..entries.len() / 3 {
            let nz = (0..3).filter(|&k| !entries[3 * t + k].is_zero()).count();
            if nz > 1 {
                return Err(SurfError::NotAdmissible(format!(
                    "two quad types in tetrahedron {t}"
                )));
            }
        }
        Ok(NormalQCoordinate { entries })
    }

    pub fn zero(n: usize) -> Self {
        NormalQCoordinate {
            entries: zeros(3 * n),
        }
    }

    pub fn from_ints(v: &[i64]) -> Result<Self, SurfError> {
        NormalQCoordinate::new(v.iter().map(|&x| rat_int(x)).collect())
    }

    pub fn n(&self) -> usize {
        self.entries.len() / 3
    }

    /// Indices of the nonzero quad coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    /// B·x = 0 over the exact rationals.
    pub fn satisfies_matching(&self, b: &[Vec<i64>]) -> bool {
        b.iter().all(|row| {
            let mut acc = Rat::zero();
            for (c, x) in row.iter().zip(&self.entries) {
                if *c != 0 {
                    acc += rat_int(*c) * x;
                }
            }
            acc.is_zero()
        })
    }
}

/// One permitted-nonzero quad level (0, 1 or 2) per tetrahedron.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AdmissiblePattern {
    pub choices: Vec<u8>,
}

/// One cell of PF(T): the admissible cone of a pattern.
#[derive(Debug, Clone)]
pub struct PfCell {
    /// Lexicographically least pattern producing this cone.
    pub pattern: AdmissiblePattern,
    pub cone: Cone,
    /// Indices into [`PFComplex::vertices`] of the cell's extreme rays.
    pub vertex_ids: Vec<usize>,
    /// Dimension of the cone (projective dimension + 1).
    pub dim: usize,
    /// Not contained in any other enumerated cell.
    pub maximal: bool,
}

/// PF(T) as a finite union of convex cones.
#[derive(Debug, Clone)]
pub struct PFComplex {
    pub n: usize,
    /// Deduplicated extreme rays across all cells, lexicographically
    /// sorted primitive integer vectors.
    pub vertices: Vec<Vec<BigInt>>,
    pub cells: Vec<PfCell>,
}

impl PFComplex {
    pub fn maximal_cells(&self) -> impl Iterator<Item = &PfCell> {
        self.cells.iter().filter(|c| c.maximal)
    }

    /// Count of maximal cells by projective dimension (cone dim − 1).
    pub fn maximal_cell_histogram(&self) -> Vec<(usize, usize)> {
        let mut hist = std::collections::BTreeMap::new();
        for c in self.maximal_cells() {
            *hist.entry(c.dim - 1).or_insert(0) += 1;
        }
        hist.into_iter().collect()
    }
}

/// Enumerate PF(T) from the Q-matching matrix by solving all 3^n pattern
/// cones. Pattern solves run in parallel; the merge is a deterministic
/// reduction over the canonically ordered pattern list.
pub fn enumerate_pf(b: &[Vec<i64>], n: usize) -> PFComplex {
    let dim = 3 * n;
    for row in b {
        assert_eq!(row.len(), dim, "matching matrix must have 3n columns");
    }
    let patterns: Vec<Vec<u8>> = (0..3usize.pow(n as u32))
        .map(|mut k| {
            let mut p = vec![0u8; n];
            for slot in p.iter_mut() {
                *slot = (k % 3) as u8;
                k /= 3;
            }
            p
        })
        .collect();

    let solved: Vec<(Vec<u8>, Cone, Vec<Vec<BigInt>>)> = patterns
        .par_iter()
        .map(|pattern| {
            let cone = pattern_cone(b, n, pattern);
            let rays = cone.extreme_rays().expect("pattern cones are pointed");
            (pattern.clone(), cone, rays)
        })
        .collect();

    // dedup cones by ray set, keeping the lexicographically least pattern
    let mut by_rays: Vec<(Vec<Vec<BigInt>>, Vec<u8>, Cone)> = Vec::new();
    for (pattern, cone, rays) in solved {
        match by_rays.iter_mut().find(|(r, _, _)| *r == rays) {
            Some((_, p, _)) => {
                if pattern < *p {
                    *p = pattern;
                }
            }
            None => by_rays.push((rays, pattern, cone)),
        }
    }
    by_rays.sort_by(|a, b| a.0.cmp(&b.0));

    let mut vertices: Vec<Vec<BigInt>> = Vec::new();
    for (rays, _, _) in &by_rays {
        for r in rays {
            if !vertices.contains(r) {
                vertices.push(r.clone());
            }
        }
    }
    vertices.sort();

    let mut cells: Vec<PfCell> = by_rays
        .into_iter()
        .map(|(rays, pattern, cone)| {
            let vertex_ids: Vec<usize> = rays
                .iter()
                .map(|r| vertices.binary_search(r).unwrap())
                .collect();
            let gens: Vec<QVec> = rays
                .iter()
                .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
                .collect();
            let dim = rank(&gens, dim);
            PfCell {
                pattern: AdmissiblePattern { choices: pattern },
                cone,
                vertex_ids,
                dim,
                maximal: true,
            }
        })
        .collect();

    // maximality: a cell is dominated when all its rays lie in a larger cell
    for i in 0..cells.len() {
        let rays_i: Vec<Vec<BigInt>> = cells[i]
            .vertex_ids
            .iter()
            .map(|&v| vertices[v].clone())
            .collect();
        let dominated = cells.iter().enumerate().any(|(j, cj)| {
            j != i
                && cj.vertex_ids.len() >= rays_i.len()
                && cj.vertex_ids != cells[i].vertex_ids
                && rays_i.iter().all(|r| cj.cone.contains_int(r))
        });
        if dominated {
            cells[i].maximal = false;
        }
    }

    PFComplex { n, vertices, cells }
}

fn pattern_cone(b: &[Vec<i64>], n: usize, pattern: &[u8]) -> Cone {
    let dim = 3 * n;
    let mut cone = Cone::full_space(dim);
    for row in b {
        cone.add_equality(row.iter().map(|&x| rat_int(x)).collect());
    }
    for (t, &choice) in pattern.iter().enumerate() {
        for k in 0..3u8 {
            let mut unit = zeros(dim);
            unit[3 * t + k as usize] = Rat::from_integer(1.into());
            if k == choice {
                cone.add_inequality(unit);
            } else {
                cone.add_equality(unit);
            }
        }
    }
    cone
}

/// Minimal integer representative per vertex ray (primitive scaling).
pub fn vertex_solutions(pf: &PFComplex) -> Vec<NormalQCoordinate> {
    pf.vertices
        .iter()
        .map(|v| {
            NormalQCoordinate::new(v.iter().map(|x| Rat::from_integer(x.clone())).collect())
                .expect("enumerated rays are admissible")
        })
        .collect()
}

/// Entrywise sum of compatible coordinates.
pub fn haken_sum(
    x: &NormalQCoordinate,
    y: &NormalQCoordinate,
) -> Result<NormalQCoordinate, SurfError> {
    assert_eq!(x.entries.len(), y.entries.len());
    for t in 0..x.n() {
        let joint = (0..3)
            .filter(|&k| !x.entries[3 * t + k].is_zero() || !y.entries[3 * t + k].is_zero())
            .count();
        if joint > 1 {
            return Err(SurfError::IncompatibleSupports(t));
        }
    }
    let entries = x
        .entries
        .iter()
        .zip(&y.entries)
        .map(|(a, b)| a + b)
        .collect();
    Ok(NormalQCoordinate { entries })
}

/// Oriented boundary coordinate: the given slope functionals evaluated at
/// the coordinate, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryCoordinate {
    pub values: QVec,
}

pub fn boundary_coordinate(x: &NormalQCoordinate, fns: &[SlopeFunctional]) -> BoundaryCoordinate {
    BoundaryCoordinate {
        values: fns.iter().map(|f| f.evaluate(&x.entries)).collect(),
    }
}

/// Orbit partition of the PF vertices under a group of induced quad
/// permutations. Orbits are sorted by least member.
pub fn orbits(pf: &PFComplex, group: &[QuadPermutation]) -> Vec<Vec<usize>> {
    let m = pf.vertices.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let as_i64: Vec<Vec<i64>> = pf
        .vertices
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| i64::try_from(x).expect("vertex entry fits i64"))
                .collect()
        })
        .collect();
    for g in group {
        for (i, v) in as_i64.iter().enumerate() {
            let img = g.apply_i64(v);
            let j = as_i64
                .iter()
                .position(|w| *w == img)
                .expect("group permutes the vertex set");
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
            }
        }
    }
    let mut buckets: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..m {
        let r = find(&mut parent, i);
        buckets.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = buckets.into_values().collect();
    for o in &mut out {
        o.sort();
    }
    out.sort();
    out
}

/// The distinguished centre of a projective quadrilateral cell: the common
/// midpoint of its diagonals, when a 2-cell with exactly four vertices has
/// one. Returns the minimal integer representative.
pub fn center_point(pf: &PFComplex) -> Option<NormalQCoordinate> {
    for cell in pf
        .cells
        .iter()
        .filter(|c| c.maximal && c.dim == 3 && c.vertex_ids.len() == 4)
    {
        let rays: Vec<&Vec<BigInt>> = cell.vertex_ids.iter().map(|&v| &pf.vertices[v]).collect();
        for (a, c, b, d) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
            let sum_ac: Vec<BigInt> = rays[a].iter().zip(rays[c]).map(|(x, y)| x + y).collect();
            let sum_bd: Vec<BigInt> = rays[b].iter().zip(rays[d]).map(|(x, y)| x + y).collect();
            if sum_ac == sum_bd {
                let q: QVec = sum_ac
                    .iter()
                    .map(|x| Rat::from_integer(x.clone()))
                    .collect();
                let prim = primitive_integer(&q);
                let entries = prim.into_iter().map(Rat::from_integer).collect();
                return NormalQCoordinate::new(entries).ok();
            }
        }
    }
    None
}
