//! The exponent system of parameter and gluing equations.
//!
//! Exponent vectors live over the 3n shape symbols in the order
//! (z_1, z'_1, z''_1, …, z_n, z'_n, z''_n) and carry an explicit exponent
//! of −1, so a vector denotes the monomial
//! (−1)^sign_exp · Π z^α (z')^{α'} (z'')^{α''}.
//!
//! Neumann–Zagier rows (exponents over z_i and 1−z_i plus a sign column)
//! convert into this form through z' = (1−z)^{−1}; a per-tetrahedron
//! relabelling hook covers census data whose plain shape is a primed
//! symbol here.

use crate::tri::{trace_edge_classes, Triangulation};
use num_complex::Complex64;
use serde::Deserialize;
use spuntrop_hull::{QVec, Rat};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EqError {
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("degenerate shape: z_{0} = {1} is within 1e-12 of {{0, 1}}")]
    DegenerateShape(usize, Complex64),
}

/// Integer exponents over the 3n shape symbols plus an exponent of −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentVector {
    pub entries: Vec<i64>,
    pub sign_exp: u8,
}

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector {
            entries: vec![0; 3 * n],
            sign_exp: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len() / 3
    }

    pub fn from_entries(entries: Vec<i64>) -> Self {
        assert_eq!(entries.len() % 3, 0);
        ExponentVector {
            entries,
            sign_exp: 0,
        }
    }

    /// Relabel census shapes into the fixed convention: `relabel[i]` is the
    /// prime level k with plain-shape_i = z_i^{(k)} in the source data, so
    /// source level l lands on level (l − k) mod 3.
    pub fn relabel(&self, relabel: &[u8]) -> ExponentVector {
        let n = self.n();
        assert_eq!(relabel.len(), n);
        let mut entries = vec![0; 3 * n];
        for i in 0..n {
            for l in 0..3usize {
                let dst = (l + 3 - relabel[i] as usize) % 3;
                entries[3 * i + dst] = self.entries[3 * i + l];
            }
        }
        ExponentVector {
            entries,
            sign_exp: self.sign_exp,
        }
    }
}

/// One row of Neumann–Zagier data: exponents of z_i, of 1−z_i, and the
/// sign column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NzRow {
    pub label: String,
    pub kind: NzKind,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub c: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NzKind {
    Edge,
    Peripheral,
}

/// Composition of peripheral contractions into one oriented
/// boundary-coordinate column.
#[derive(Debug, Clone)]
pub struct BoundaryColumn {
    pub name: String,
    pub combo: Vec<(String, i64)>,
}

#[derive(Debug, Clone)]
pub struct NzDocument {
    pub name: Option<String>,
    pub n: usize,
    pub rows: Vec<NzRow>,
    /// Prime level of each tetrahedron's plain shape in the source data.
    pub shape_relabel: Vec<u8>,
    pub boundary_columns: Vec<BoundaryColumn>,
}

#[derive(Deserialize)]
struct RawNzRow {
    label: String,
    #[serde(default)]
    kind: Option<String>,
    a: Vec<i64>,
    b: Vec<i64>,
    c: i64,
}

#[derive(Deserialize)]
struct RawNzDoc {
    #[serde(default)]
    name: Option<String>,
    num_tetrahedra: usize,
    rows: Vec<RawNzRow>,
    #[serde(default)]
    shape_relabel: Option<Vec<u8>>,
    #[serde(default)]
    boundary_columns: Vec<RawBoundaryColumn>,
}

#[derive(Deserialize)]
struct RawBoundaryColumn {
    name: String,
    combo: Vec<(String, i64)>,
}

/// Ingest an NZ document; rows are preserved verbatim.
pub fn ingest_nz(source: &str) -> Result<NzDocument, EqError> {
    let raw: RawNzDoc =
        serde_json::from_str(source).map_err(|e| EqError::MalformedDocument(e.to_string()))?;
    let n = raw.num_tetrahedra;
    let mut rows = Vec::with_capacity(raw.rows.len());
    for r in raw.rows {
        if r.a.len() != n || r.b.len() != n {
            return Err(EqError::MalformedDocument(format!(
                "row {}: expected {} exponents per block",
                r.label, n
            )));
        }
        let kind = match r.kind.as_deref() {
            Some("edge") => NzKind::Edge,
            Some("peripheral") | None => NzKind::Peripheral,
            Some(other) => {
                return Err(EqError::MalformedDocument(format!(
                    "unknown row kind {other}"
                )))
            }
        };
        rows.push(NzRow {
            label: r.label,
            kind,
            a: r.a,
            b: r.b,
            c: r.c,
        });
    }
    let shape_relabel = raw.shape_relabel.unwrap_or_else(|| vec![0; n]);
    if shape_relabel.len() != n || shape_relabel.iter().any(|&x| x > 2) {
        return Err(EqError::MalformedDocument("bad shape_relabel".into()));
    }
    let boundary_columns = raw
        .boundary_columns
        .into_iter()
        .map(|c| BoundaryColumn {
            name: c.name,
            combo: c.combo,
        })
        .collect();
    Ok(NzDocument {
        name: raw.name,
        n,
        rows,
        shape_relabel,
        boundary_columns,
    })
}

/// Convert Π z^a (1−z)^b (−1)^c into shape-symbol exponents using
/// 1−z = (z')^{−1}. No sign is introduced by the identity itself, so
/// sign_exp is just c mod 2.
pub fn nz_to_exponent(r: &NzRow) -> ExponentVector {
    let n = r.a.len();
    let mut entries = vec![0i64; 3 * n];
    for i in 0..n {
        entries[3 * i] = r.a[i];
        entries[3 * i + 1] = -r.b[i];
    }
    ExponentVector {
        entries,
        sign_exp: (r.c.rem_euclid(2)) as u8,
    }
}

/// The block-diagonal matrix with n copies of
/// C_1 = ((0,1,−1),(−1,0,1),(1,−1,0)). It is antisymmetric; each block has
/// rank 2 with kernel spanned by (1,1,1).
#[derive(Debug, Clone, Copy)]
pub struct CnMatrix {
    pub n: usize,
}

pub const C1: [[i64; 3]; 3] = [[0, 1, -1], [-1, 0, 1], [1, -1, 0]];

impl CnMatrix {
    pub fn new(n: usize) -> Self {
        CnMatrix { n }
    }

    /// Row action a ↦ a·C_n (per block: (a'' − a', a − a'', a' − a)); this
    /// sends a gluing-exponent row to its Q-matching row.
    pub fn row_action(&self, row: &[i64]) -> Vec<i64> {
        assert_eq!(row.len(), 3 * self.n);
        let mut out = vec![0i64; 3 * self.n];
        for t in 0..self.n {
            let (a, ap, app) = (row[3 * t], row[3 * t + 1], row[3 * t + 2]);
            out[3 * t] = app - ap;
            out[3 * t + 1] = a - app;
            out[3 * t + 2] = ap - a;
        }
        out
    }

    /// Column action u ↦ C_n·u (per block: (a' − a'', a'' − a, a − a')):
    /// the Q-modulus contraction z ↦ q''−q', z' ↦ q−q'', z'' ↦ q'−q.
    pub fn contract(&self, u: &[i64]) -> Vec<i64> {
        assert_eq!(u.len(), 3 * self.n);
        let mut out = vec![0i64; 3 * self.n];
        for t in 0..self.n {
            let (a, ap, app) = (u[3 * t], u[3 * t + 1], u[3 * t + 2]);
            out[3 * t] = ap - app;
            out[3 * t + 1] = app - a;
            out[3 * t + 2] = a - ap;
        }
        out
    }

    /// x ↦ C_n^T x on exact rationals; this is the map N(ξ) ↦ ξ.
    pub fn transpose_apply(&self, x: &[Rat]) -> QVec {
        assert_eq!(x.len(), 3 * self.n);
        let mut out = Vec::with_capacity(3 * self.n);
        for t in 0..self.n {
            let (q, qp, qpp) = (&x[3 * t], &x[3 * t + 1], &x[3 * t + 2]);
            out.push(qpp - qp);
            out.push(q - qpp);
            out.push(qp - q);
        }
        out
    }
}

/// A linear functional on Q-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeFunctional {
    pub coeffs: Vec<i64>,
}

impl SlopeFunctional {
    pub fn evaluate(&self, x: &[Rat]) -> Rat {
        assert_eq!(x.len(), self.coeffs.len());
        let mut acc = Rat::from_integer(0.into());
        for (c, xi) in self.coeffs.iter().zip(x) {
            if *c != 0 {
                acc += Rat::from_integer((*c).into()) * xi;
            }
        }
        acc
    }
}

/// ν(γ) = C_n·u(γ) for each peripheral exponent row.
pub fn slope_functionals(rows: &[ExponentVector]) -> Vec<SlopeFunctional> {
    rows.iter()
        .map(|r| SlopeFunctional {
            coeffs: CnMatrix::new(r.n()).contract(&r.entries),
        })
        .collect()
}

/// The converted, relabelled peripheral rows of an NZ document.
pub fn peripheral_exponents(doc: &NzDocument) -> Vec<(String, ExponentVector)> {
    doc.rows
        .iter()
        .filter(|r| r.kind == NzKind::Peripheral)
        .map(|r| {
            (
                r.label.clone(),
                nz_to_exponent(r).relabel(&doc.shape_relabel),
            )
        })
        .collect()
}

/// Compose the oriented boundary-coordinate columns declared by the
/// document: each column is an integer combination of the Q-modulus
/// contractions of named peripheral rows.
pub fn boundary_functionals(doc: &NzDocument) -> Result<Vec<(String, SlopeFunctional)>, EqError> {
    let cn = CnMatrix::new(doc.n);
    let contractions: std::collections::BTreeMap<String, Vec<i64>> = peripheral_exponents(doc)
        .into_iter()
        .map(|(label, e)| (label, cn.contract(&e.entries)))
        .collect();
    let mut out = Vec::with_capacity(doc.boundary_columns.len());
    for col in &doc.boundary_columns {
        let mut coeffs = vec![0i64; 3 * doc.n];
        for (label, coef) in &col.combo {
            let c = contractions.get(label).ok_or_else(|| {
                EqError::MalformedDocument(format!(
                    "boundary column {} references unknown row {label}",
                    col.name
                ))
            })?;
            for (o, x) in coeffs.iter_mut().zip(c) {
                *o += coef * x;
            }
        }
        out.push((col.name.clone(), SlopeFunctional { coeffs }));
    }
    Ok(out)
}

/// The gluing system of a triangulation: one nonnegative exponent row per
/// edge class (in canonical edge order), plus any ingested peripheral rows.
#[derive(Debug, Clone)]
pub struct GluingSystem {
    pub n: usize,
    pub edge_rows: Vec<ExponentVector>,
    pub peripheral_rows: Vec<(String, ExponentVector)>,
}

/// Count labelled corners around every edge class: entry (i, k) of row j is
/// the number of corners of edge j in tetrahedron i carrying label z^(k).
pub fn edge_rows(t: &Triangulation) -> GluingSystem {
    let n = t.n();
    let classes = trace_edge_classes(t);
    let edge_rows = classes
        .iter()
        .map(|c| {
            let mut e = ExponentVector::zero(n);
            for corner in &c.corners {
                e.entries[3 * corner.tet + corner.level() as usize] += 1;
            }
            e
        })
        .collect();
    GluingSystem {
        n,
        edge_rows,
        peripheral_rows: Vec::new(),
    }
}

impl GluingSystem {
    /// Attach the converted, relabelled peripheral rows of an NZ document.
    pub fn with_peripherals_from(mut self, doc: &NzDocument) -> Self {
        for r in &doc.rows {
            if r.kind == NzKind::Peripheral {
                let e = nz_to_exponent(r).relabel(&doc.shape_relabel);
                self.peripheral_rows.push((r.label.clone(), e));
            }
        }
        self
    }

    /// A-matrix rows as plain integer vectors.
    pub fn a_matrix(&self) -> Vec<Vec<i64>> {
        self.edge_rows.iter().map(|e| e.entries.clone()).collect()
    }
}

/// B = A·C_n, one Q-matching row per edge class.
pub fn qmatching_from_a(g: &GluingSystem) -> Vec<Vec<i64>> {
    let cn = CnMatrix::new(g.n);
    g.edge_rows
        .iter()
        .map(|e| cn.row_action(&e.entries))
        .collect()
}

/// Q-matching rows from the abstract edge neighbourhoods: walking around
/// an edge, a corner labelled z^(k) gives slope +1 to the quadrilateral
/// separating the z^(k+1) pair and −1 to the one separating the z^(k+2)
/// pair; quadrilaterals with no corner on the edge contribute 0.
pub fn qmatching_direct(t: &Triangulation) -> Vec<Vec<i64>> {
    let n = t.n();
    trace_edge_classes(t)
        .iter()
        .map(|class| {
            let mut row = vec![0i64; 3 * n];
            for corner in &class.corners {
                let l = corner.level() as usize;
                row[3 * corner.tet + (l + 1) % 3] += 1;
                row[3 * corner.tet + (l + 2) % 3] -= 1;
            }
            row
        })
        .collect()
}

/// Complex shape parameters, one per tetrahedron, with z' and z'' derived
/// through z' = 1/(1−z) and z'' = (z−1)/z.
#[derive(Debug, Clone)]
pub struct ShapeAssignment {
    z: Vec<Complex64>,
}

const DEGENERATE_TOL: f64 = 1e-12;

impl ShapeAssignment {
    pub fn new(z: Vec<Complex64>) -> Result<Self, EqError> {
        for (i, zi) in z.iter().enumerate() {
            if zi.norm() < DEGENERATE_TOL || (zi - 1.0).norm() < DEGENERATE_TOL || !zi.is_finite() {
                return Err(EqError::DegenerateShape(i, *zi));
            }
        }
        Ok(ShapeAssignment { z })
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    /// z_i^(level) for level 0, 1, 2.
    pub fn shape(&self, i: usize, level: u8) -> Complex64 {
        let z = self.z[i];
        match level {
            0 => z,
            1 => 1.0 / (1.0 - z),
            _ => (z - 1.0) / z,
        }
    }

    /// 12-vector (z_1, z'_1, z''_1, …) of all shape symbols.
    pub fn symbols(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(3 * self.z.len());
        for i in 0..self.z.len() {
            for l in 0..3u8 {
                out.push(self.shape(i, l));
            }
        }
        out
    }
}

/// (−1)^sign_exp · Π z^α (z')^{α'} (z'')^{α''} in floating point.
pub fn evaluate_row(r: &ExponentVector, za: &ShapeAssignment) -> Result<Complex64, EqError> {
    assert_eq!(r.n(), za.n());
    let mut acc = Complex64::new(if r.sign_exp % 2 == 1 { -1.0 } else { 1.0 }, 0.0);
    for i in 0..za.n() {
        for l in 0..3u8 {
            let e = r.entries[3 * i + l as usize];
            if e != 0 {
                acc *= za.shape(i, l).powi(e as i32);
            }
        }
    }
    Ok(acc)
}

/// Evaluate the raw NZ monomial Π z^a (1−z)^b (−1)^c directly; the test
/// oracle for the conversion identity.
pub fn evaluate_nz_row(r: &NzRow, za: &ShapeAssignment) -> Complex64 {
    let mut acc = Complex64::new(if r.c.rem_euclid(2) == 1 { -1.0 } else { 1.0 }, 0.0);
    for i in 0..r.a.len() {
        let z = za.shape(i, 0);
        if r.a[i] != 0 {
            acc *= z.powi(r.a[i] as i32);
        }
        if r.b[i] != 0 {
            acc *= (1.0 - z).powi(r.b[i] as i32);
        }
    }
    acc
}
