//! Polyhedral cones in H-form and extreme-ray enumeration.
//!
//! The double description method is run after substituting out the equality
//! constraints. Lineality is handled dynamically: the state is a pair
//! (lineality basis, extreme rays modulo lineality), and each halfspace
//! either cuts the lineality space down by one dimension or splits the ray
//! list in the usual positive/zero/negative fashion with the combinatorial
//! adjacency test.

use crate::linalg::{
    axpy, dot, is_zero_vec, nullspace, primitive_integer, primitive_signed, rank, zeros, QVec, Rat,
};
use crate::HullError;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A polyhedral cone `{x : E·x = 0, I·x ≥ 0}`.
#[derive(Debug, Clone)]
pub struct Cone {
    dim: usize,
    equalities: Vec<QVec>,
    inequalities: Vec<QVec>,
}

/// V-form of a cone: a lineality basis plus extreme rays modulo lineality.
/// Rays are primitive integer vectors sorted lexicographically; lineality
/// basis vectors are sign-normalized (first nonzero entry positive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayReport {
    pub lineality: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

impl RayReport {
    pub fn is_trivial(&self) -> bool {
        self.lineality.is_empty() && self.rays.is_empty()
    }
}

/// One ray in the double description state, with the set of processed
/// inequalities it satisfies with equality.
#[derive(Debug, Clone)]
struct DdRay {
    v: QVec,
    zero_set: Vec<u64>,
}

impl DdRay {
    fn set_bit(&mut self, i: usize) {
        let w = i / 64;
        if self.zero_set.len() <= w {
            self.zero_set.resize(w + 1, 0);
        }
        self.zero_set[w] |= 1 << (i % 64);
    }
}

fn zero_set_subset(a: &[u64], b: &[u64]) -> bool {
    for (i, &wa) in a.iter().enumerate() {
        let wb = b.get(i).copied().unwrap_or(0);
        if wa & !wb != 0 {
            return false;
        }
    }
    true
}

fn zero_set_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().min(b.len());
    (0..n).map(|i| a[i] & b[i]).collect()
}

impl Cone {
    pub fn full_space(dim: usize) -> Self {
        Cone {
            dim,
            equalities: Vec::new(),
            inequalities: Vec::new(),
        }
    }

    pub fn nonneg_orthant(dim: usize) -> Self {
        let mut c = Cone::full_space(dim);
        for i in 0..dim {
            let mut row = zeros(dim);
            row[i] = Rat::from_integer(1.into());
            c.add_inequality(row);
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equalities(&self) -> &[QVec] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[QVec] {
        &self.inequalities
    }

    pub fn add_equality(&mut self, row: QVec) {
        assert_eq!(row.len(), self.dim);
        if !is_zero_vec(&row) {
            self.equalities.push(row);
        }
    }

    pub fn add_inequality(&mut self, row: QVec) {
        assert_eq!(row.len(), self.dim);
        if !is_zero_vec(&row) {
            self.inequalities.push(row);
        }
    }

    /// Constraint union of two cones over the same ambient space.
    pub fn intersect(&self, other: &Cone) -> Result<Cone, HullError> {
        if self.dim != other.dim {
            return Err(HullError::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = self.clone();
        out.equalities.extend(other.equalities.iter().cloned());
        out.inequalities.extend(other.inequalities.iter().cloned());
        Ok(out)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.equalities.iter().all(|e| dot(e, x).is_zero())
            && self.inequalities.iter().all(|i| !dot(i, x).is_negative())
    }

    pub fn contains_int(&self, x: &[BigInt]) -> bool {
        let q: QVec = x.iter().map(|b| Rat::from_integer(b.clone())).collect();
        self.contains(&q)
    }

    /// True when every generator (ray or lineality direction) of `other`
    /// satisfies this cone's constraints.
    pub fn contains_cone(&self, other_rays: &RayReport) -> bool {
        other_rays.rays.iter().all(|r| self.contains_int(r))
            && other_rays.lineality.iter().all(|l| {
                let neg: Vec<BigInt> = l.iter().map(|x| -x.clone()).collect();
                self.contains_int(l) && self.contains_int(&neg)
            })
    }

    /// Extreme rays of a pointed cone. Errors with [`HullError::NotPointed`]
    /// when a lineality space is present.
    pub fn extreme_rays(&self) -> Result<Vec<Vec<BigInt>>, HullError> {
        let rep = self.rays_with_lineality();
        if !rep.lineality.is_empty() {
            return Err(HullError::NotPointed(rep.lineality.len()));
        }
        Ok(rep.rays)
    }

    /// Double description with explicit lineality reporting.
    pub fn rays_with_lineality(&self) -> RayReport {
        // substitute out the equalities: x = K·y, K columns a kernel basis
        let kernel = nullspace(&self.equalities, self.dim);
        let k = kernel.len();
        if k == 0 {
            return RayReport {
                lineality: Vec::new(),
                rays: Vec::new(),
            };
        }
        let mut reduced: Vec<QVec> = self
            .inequalities
            .iter()
            .map(|row| kernel.iter().map(|b| dot(row, b)).collect::<QVec>())
            .filter(|r| !is_zero_vec(r))
            .collect();
        // insertion order: increasing support size keeps intermediate ray
        // counts small
        reduced.sort_by(|a, b| {
            let na = a.iter().filter(|x| !x.is_zero()).count();
            let nb = b.iter().filter(|x| !x.is_zero()).count();
            na.cmp(&nb).then_with(|| a.cmp(b))
        });
        reduced.dedup();

        // dynamic DD state in the reduced space
        let mut lineality: Vec<QVec> = (0..k)
            .map(|i| {
                let mut v = zeros(k);
                v[i] = Rat::from_integer(1.into());
                v
            })
            .collect();
        let mut rays: Vec<DdRay> = Vec::new();

        for (ci, h) in reduced.iter().enumerate() {
            let vals: Vec<Rat> = lineality.iter().map(|l| dot(h, l)).collect();
            if let Some(j) = vals.iter().position(|v| !v.is_zero()) {
                // consume one lineality dimension
                let mut l0 = lineality.remove(j);
                let mut hv0 = vals[j].clone();
                if hv0.is_negative() {
                    for x in &mut l0 {
                        *x = -std::mem::take(x);
                    }
                    hv0 = -hv0;
                }
                for l in lineality.iter_mut() {
                    let hl = dot(h, l);
                    if !hl.is_zero() {
                        let coef = -hl / &hv0;
                        axpy(l, &coef, &l0);
                    }
                }
                for r in rays.iter_mut() {
                    let hr = dot(h, &r.v);
                    if !hr.is_zero() {
                        let coef = -hr / &hv0;
                        axpy(&mut r.v, &coef, &l0);
                    }
                    r.set_bit(ci);
                }
                let mut new_ray = DdRay {
                    v: l0,
                    zero_set: Vec::new(),
                };
                for prev in 0..ci {
                    new_ray.set_bit(prev);
                }
                rays.push(new_ray);
                continue;
            }
            // h vanishes on the lineality space: split the ray list
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            let mut zero = Vec::new();
            for mut r in rays.drain(..) {
                let hv = dot(h, &r.v);
                if hv.is_zero() {
                    r.set_bit(ci);
                    zero.push(r);
                } else if hv.is_positive() {
                    pos.push((r, hv));
                } else {
                    neg.push((r, hv));
                }
            }
            let mut next: Vec<DdRay> = Vec::new();
            for (p, php) in &pos {
                for (m, phm) in &neg {
                    let common = zero_set_and(&p.zero_set, &m.zero_set);
                    let adjacent = pos
                        .iter()
                        .map(|(r, _)| r)
                        .chain(neg.iter().map(|(r, _)| r))
                        .chain(zero.iter())
                        .filter(|r| !std::ptr::eq(*r, p) && !std::ptr::eq(*r, m))
                        .all(|r| !zero_set_subset(&common, &r.zero_set));
                    if !adjacent {
                        continue;
                    }
                    // php·m - phm·p  (phm < 0 so this is a positive combination)
                    let mut v = zeros(k);
                    axpy(&mut v, php, &m.v);
                    let neg_phm = -phm.clone();
                    axpy(&mut v, &neg_phm, &p.v);
                    if is_zero_vec(&v) {
                        continue;
                    }
                    let mut r = DdRay {
                        v,
                        zero_set: common,
                    };
                    r.set_bit(ci);
                    next.push(r);
                }
            }
            rays = zero;
            rays.extend(pos.into_iter().map(|(r, _)| r));
            rays.extend(next);
        }

        // map back to the ambient space and canonicalize
        let lift = |v: &QVec| -> QVec {
            let mut out = zeros(self.dim);
            for (c, b) in v.iter().zip(&kernel) {
                axpy(&mut out, c, b);
            }
            out
        };
        let mut lin: Vec<Vec<BigInt>> = lineality
            .iter()
            .map(|l| primitive_signed(&lift(l)))
            .collect();
        lin.sort();
        let mut out_rays: Vec<Vec<BigInt>> = rays
            .iter()
            .filter(|r| !is_zero_vec(&r.v))
            .map(|r| primitive_integer(&lift(&r.v)))
            .collect();
        out_rays.sort();
        out_rays.dedup();
        RayReport {
            lineality: lin,
            rays: out_rays,
        }
    }

    /// Dimension of the cone as a subset of the ambient space.
    pub fn span_dim(&self) -> usize {
        let rep = self.rays_with_lineality();
        let mut gens: Vec<QVec> = Vec::new();
        for l in &rep.lineality {
            gens.push(l.iter().map(|x| Rat::from_integer(x.clone())).collect());
        }
        for r in &rep.rays {
            gens.push(r.iter().map(|x| Rat::from_integer(x.clone())).collect());
        }
        rank(&gens, self.dim)
    }
}
