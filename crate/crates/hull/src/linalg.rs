//! Dense exact linear algebra over `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type QVec = Vec<Rat>;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn zeros(dim: usize) -> QVec {
    vec![Rat::zero(); dim]
}

pub fn qvec_from_int(v: &[i64]) -> QVec {
    v.iter().map(|&x| rat_int(x)).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

/// `y += c * x`
pub fn axpy(y: &mut [Rat], c: &Rat, x: &[Rat]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += c * xi;
        }
    }
}

/// Scale a rational vector to a primitive integer vector by a positive
/// rational factor. Panics on the zero vector.
pub fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    assert!(!is_zero_vec(v), "primitive_integer of zero vector");
    let mut lcm = BigInt::one();
    for x in v {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Primitive integer form with the first nonzero entry positive. Only for
/// vectors whose sign is free (nullspace and lineality bases), never for
/// extreme rays.
pub fn primitive_signed(v: &[Rat]) -> Vec<BigInt> {
    let mut out = primitive_integer(v);
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut out {
                *x = -std::mem::take(x);
            }
        }
    }
    out
}

/// In-place reduction to reduced row echelon form; returns the pivot
/// columns. Zero rows sink to the bottom and are truncated.
pub fn rref(m: &mut Vec<QVec>, dim: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let pv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &pv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = -m[i][c].clone();
                let row = m[r].clone();
                axpy(&mut m[i], &f, &row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    pivots
}

pub fn rank(rows: &[QVec], dim: usize) -> usize {
    let mut m: Vec<QVec> = rows.to_vec();
    rref(&mut m, dim).len()
}

/// Exact basis of `{x : row·x = 0 for every row}`. The basis vectors are in
/// the standard free-variable form induced by the RREF, so the result is
/// deterministic in the input.
pub fn nullspace(rows: &[QVec], dim: usize) -> Vec<QVec> {
    let mut m: Vec<QVec> = rows.to_vec();
    let pivots = rref(&mut m, dim);
    let mut basis = Vec::new();
    for fc in 0..dim {
        if pivots.contains(&fc) {
            continue;
        }
        let mut v = zeros(dim);
        v[fc] = Rat::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[ri][fc].clone();
        }
        basis.push(v);
    }
    basis
}
