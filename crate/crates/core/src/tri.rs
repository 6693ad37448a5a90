//! Ideal triangulations: parsing, validation, edge and cusp classes, and
//! the combinatorial symmetry group.
//!
//! A triangulation document is JSON with `num_tetrahedra` and an n×4
//! `gluings` array; entry `[t][f]` describes the pairing of face f of
//! tetrahedron t (the face opposite vertex f) as `{tet, perm}` where `perm`
//! lists the images of the vertices 0..3. Pairings must be involutive and
//! all permutations odd (tetrahedra are coherently oriented, so face
//! pairings reverse orientation); anything else is rejected.

use serde::Deserialize;
use thiserror::Error;

/// Fixed label convention: edge pair 01/23 ↦ z (level 0), 03/12 ↦ z'
/// (level 1), 02/13 ↦ z'' (level 2).
pub fn edge_level(a: u8, b: u8) -> u8 {
    debug_assert!(a != b && a < 4 && b < 4);
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) | (2, 3) => 0,
        (0, 3) | (1, 2) => 1,
        _ => 2,
    }
}

/// The two opposite edges carrying the given label level.
pub fn level_pairs(level: u8) -> [[u8; 2]; 2] {
    match level {
        0 => [[0, 1], [2, 3]],
        1 => [[0, 3], [1, 2]],
        _ => [[0, 2], [1, 3]],
    }
}

pub const LEVEL_NAMES: [&str; 3] = ["z", "z'", "z''"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriError {
    #[error("malformed triangulation document: {0}")]
    MalformedDocument(String),
    #[error("face {1} of tetrahedron {0} is unpaired")]
    UnpairedFace(usize, usize),
    #[error("pairing of face {1} of tetrahedron {0} is not involutive")]
    NonInvolutivePairing(usize, usize),
    #[error("pairing of face {1} of tetrahedron {0} is orientation preserving")]
    OrientationViolation(usize, usize),
    #[error("cusp {0} has a vertex link of Euler characteristic {1}, not a torus")]
    NonTorusLink(usize, i64),
}

/// A permutation of {0,1,2,3}, stored as the image list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm4(pub [u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    pub fn from_slice(s: &[u8]) -> Option<Perm4> {
        if s.len() != 4 {
            return None;
        }
        let mut seen = [false; 4];
        for &v in s {
            if v > 3 || seen[v as usize] {
                return None;
            }
            seen[v as usize] = true;
        }
        Some(Perm4([s[0], s[1], s[2], s[3]]))
    }

    pub fn apply(&self, v: u8) -> u8 {
        self.0[v as usize]
    }

    pub fn inverse(&self) -> Perm4 {
        let mut out = [0u8; 4];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        Perm4(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm4) -> Perm4 {
        Perm4([
            self.apply(other.0[0]),
            self.apply(other.0[1]),
            self.apply(other.0[2]),
            self.apply(other.0[3]),
        ])
    }

    pub fn is_odd(&self) -> bool {
        let mut inv = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        inv % 2 == 1
    }
}

/// One side of a face pairing: the partner tetrahedron and the vertex
/// permutation into it. The image face index is `perm[face]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceGluing {
    pub tet: usize,
    pub perm: Perm4,
}

/// A validated ideal triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    name: Option<String>,
    gluings: Vec<[FaceGluing; 4]>,
}

#[derive(Deserialize)]
struct RawGluing {
    tet: usize,
    perm: Vec<u8>,
}

#[derive(Deserialize)]
struct RawDoc {
    #[serde(default)]
    name: Option<String>,
    num_tetrahedra: usize,
    gluings: Vec<Vec<Option<RawGluing>>>,
}

/// Parse and validate a triangulation document.
pub fn parse_triangulation(source: &str) -> Result<Triangulation, TriError> {
    let raw: RawDoc =
        serde_json::from_str(source).map_err(|e| TriError::MalformedDocument(e.to_string()))?;
    let n = raw.num_tetrahedra;
    if n == 0 {
        return Err(TriError::MalformedDocument(
            "num_tetrahedra must be positive".into(),
        ));
    }
    if raw.gluings.len() != n {
        return Err(TriError::MalformedDocument(format!(
            "expected {n} gluing rows, found {}",
            raw.gluings.len()
        )));
    }
    let mut gluings: Vec<[FaceGluing; 4]> = Vec::with_capacity(n);
    for (t, row) in raw.gluings.iter().enumerate() {
        if row.len() != 4 {
            return Err(TriError::MalformedDocument(format!(
                "tetrahedron {t} has {} faces, expected 4",
                row.len()
            )));
        }
        let mut out = [FaceGluing {
            tet: 0,
            perm: Perm4::IDENTITY,
        }; 4];
        for (f, entry) in row.iter().enumerate() {
            let Some(g) = entry else {
                return Err(TriError::UnpairedFace(t, f));
            };
            if g.tet >= n {
                return Err(TriError::MalformedDocument(format!(
                    "tetrahedron {t} face {f} glued to nonexistent tetrahedron {}",
                    g.tet
                )));
            }
            let perm = Perm4::from_slice(&g.perm).ok_or_else(|| {
                TriError::MalformedDocument(format!(
                    "tetrahedron {t} face {f}: perm is not a permutation of 0..3"
                ))
            })?;
            out[f] = FaceGluing { tet: g.tet, perm };
        }
        gluings.push(out);
    }
    Triangulation::new(raw.name, gluings)
}

impl Triangulation {
    /// Validate an explicit gluing table.
    pub fn new(
        name: Option<String>,
        gluings: Vec<[FaceGluing; 4]>,
    ) -> Result<Triangulation, TriError> {
        let n = gluings.len();
        for (t, row) in gluings.iter().enumerate() {
            for (f, g) in row.iter().enumerate() {
                if !g.perm.is_odd() {
                    return Err(TriError::OrientationViolation(t, f));
                }
                let g2 = g.perm.apply(f as u8) as usize;
                if g.tet == t && g2 == f {
                    return Err(TriError::NonInvolutivePairing(t, f));
                }
                if g.tet >= n {
                    return Err(TriError::MalformedDocument(format!(
                        "tetrahedron {t} face {f} glued out of range"
                    )));
                }
                let back = &gluings[g.tet][g2];
                if back.tet != t || back.perm != g.perm.inverse() {
                    return Err(TriError::NonInvolutivePairing(t, f));
                }
            }
        }
        Ok(Triangulation { name, gluings })
    }

    pub fn n(&self) -> usize {
        self.gluings.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn gluing(&self, tet: usize, face: usize) -> &FaceGluing {
        &self.gluings[tet][face]
    }
}

/// One corner of an edge class: an edge slot of a tetrahedron, with the
/// vertex pair ordered by the traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeCorner {
    pub tet: usize,
    pub verts: [u8; 2],
}

impl EdgeCorner {
    pub fn level(&self) -> u8 {
        edge_level(self.verts[0], self.verts[1])
    }
}

/// An edge of the quotient pseudo-manifold with its cyclically ordered
/// corners.
#[derive(Debug, Clone)]
pub struct EdgeClass {
    pub id: usize,
    pub corners: Vec<EdgeCorner>,
}

impl EdgeClass {
    pub fn degree(&self) -> usize {
        self.corners.len()
    }
}

const EDGE_SLOTS: [[u8; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// Walk every edge class. Classes are ordered by their least corner slot,
/// so the output is canonical.
pub fn trace_edge_classes(t: &Triangulation) -> Vec<EdgeClass> {
    let n = t.n();
    let mut visited = vec![false; 6 * n];
    let slot_index = |tet: usize, a: u8, b: u8| -> usize {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let k = EDGE_SLOTS.iter().position(|s| *s == [a, b]).unwrap();
        6 * tet + k
    };
    let mut classes = Vec::new();
    for tet in 0..n {
        for [a, b] in EDGE_SLOTS {
            if visited[slot_index(tet, a, b)] {
                continue;
            }
            // deterministic traversal direction: exit through the face
            // opposite the smaller complement vertex
            let exit0 = (0..4).map(|v| v as u8).find(|&v| v != a && v != b).unwrap();
            let start = (tet, a, b, exit0);
            let mut state = start;
            let mut corners = Vec::new();
            loop {
                let (ct, ca, cb, cexit) = state;
                visited[slot_index(ct, ca, cb)] = true;
                corners.push(EdgeCorner {
                    tet: ct,
                    verts: [ca, cb],
                });
                let g = t.gluing(ct, cexit as usize);
                let (na, nb) = (g.perm.apply(ca), g.perm.apply(cb));
                let entered = g.perm.apply(cexit);
                let nexit = (0..4)
                    .map(|v| v as u8)
                    .find(|&v| v != na && v != nb && v != entered)
                    .unwrap();
                state = (g.tet, na, nb, nexit);
                if state == start {
                    break;
                }
                assert!(
                    !visited[slot_index(g.tet, na, nb)],
                    "edge traversal did not close up"
                );
            }
            classes.push(EdgeClass {
                id: classes.len(),
                corners,
            });
        }
    }
    classes
}

/// An ideal-vertex class together with the Euler characteristic of its
/// vertex-link surface.
#[derive(Debug, Clone)]
pub struct CuspClass {
    pub id: usize,
    pub vertices: Vec<(usize, u8)>,
    pub link_euler: i64,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Partition the 4n ideal vertices into cusp classes and compute the Euler
/// characteristic of each induced vertex-link triangulation. A non-torus
/// link is flagged in the class, not fatal here; use
/// [`validate_torus_links`] where downstream formulas require tori.
pub fn trace_cusp_classes(t: &Triangulation) -> Vec<CuspClass> {
    let n = t.n();
    let vid = |tet: usize, v: u8| 4 * tet + v as usize;
    let mut uf = UnionFind::new(4 * n);
    for tet in 0..n {
        for f in 0..4 {
            let g = t.gluing(tet, f);
            for v in 0..4u8 {
                if v as usize != f {
                    uf.union(vid(tet, v), vid(g.tet, g.perm.apply(v)));
                }
            }
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut members: Vec<Vec<(usize, u8)>> = Vec::new();
    for tet in 0..n {
        for v in 0..4u8 {
            let r = uf.find(vid(tet, v));
            let idx = match reps.iter().position(|&x| x == r) {
                Some(i) => i,
                None => {
                    reps.push(r);
                    members.push(Vec::new());
                    reps.len() - 1
                }
            };
            members[idx].push((tet, v));
        }
    }
    members
        .into_iter()
        .enumerate()
        .map(|(id, vertices)| {
            let link_euler = link_euler(t, &vertices);
            CuspClass {
                id,
                vertices,
                link_euler,
            }
        })
        .collect()
}

/// χ of the link triangulation of one cusp class. Link triangles are the
/// (tet, vertex) members; their vertices sit on the edges incident with the
/// ideal vertex and their edges on the incident faces.
fn link_euler(t: &Triangulation, vertices: &[(usize, u8)]) -> i64 {
    let n = t.n();
    // link-vertex slots (tet, v, u) u≠v and link-edge slots (tet, v, f) f≠v
    let vslot = |tet: usize, v: u8, u: u8| (4 * tet + v as usize) * 4 + u as usize;
    let in_class = |tet: usize, v: u8| vertices.contains(&(tet, v));
    let mut vuf = UnionFind::new(16 * n);
    let mut euf = UnionFind::new(16 * n);
    for &(tet, v) in vertices {
        for f in 0..4u8 {
            if f == v {
                continue;
            }
            let g = t.gluing(tet, f as usize);
            let (nt, nv) = (g.tet, g.perm.apply(v));
            euf.union(vslot(tet, v, f), vslot(nt, nv, g.perm.apply(f)));
            for u in 0..4u8 {
                if u != v && u != f {
                    vuf.union(vslot(tet, v, u), vslot(nt, nv, g.perm.apply(u)));
                }
            }
        }
    }
    let mut vroots = std::collections::BTreeSet::new();
    let mut eroots = std::collections::BTreeSet::new();
    for &(tet, v) in vertices {
        debug_assert!(in_class(tet, v));
        for u in 0..4u8 {
            if u != v {
                vroots.insert(vuf.find(vslot(tet, v, u)));
                eroots.insert(euf.find(vslot(tet, v, u)));
            }
        }
    }
    let faces = vertices.len() as i64;
    vroots.len() as i64 - eroots.len() as i64 + faces
}

/// Error on the first cusp whose vertex link is not a torus.
pub fn validate_torus_links(classes: &[CuspClass]) -> Result<(), TriError> {
    for c in classes {
        if c.link_euler != 0 {
            return Err(TriError::NonTorusLink(c.id, c.link_euler));
        }
    }
    Ok(())
}

/// A combinatorial automorphism: a permutation of the tetrahedra together
/// with one vertex permutation per tetrahedron, conjugating the pairing
/// set to itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetry {
    pub tet_perm: Vec<usize>,
    pub corner_perms: Vec<Perm4>,
}

impl Symmetry {
    pub fn identity(n: usize) -> Symmetry {
        Symmetry {
            tet_perm: (0..n).collect(),
            corner_perms: vec![Perm4::IDENTITY; n],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.tet_perm.iter().enumerate().all(|(i, &t)| i == t)
            && self.corner_perms.iter().all(|p| *p == Perm4::IDENTITY)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Symmetry) -> Symmetry {
        let n = self.tet_perm.len();
        let mut tet_perm = vec![0; n];
        let mut corner_perms = vec![Perm4::IDENTITY; n];
        for t in 0..n {
            let mid = other.tet_perm[t];
            tet_perm[t] = self.tet_perm[mid];
            corner_perms[t] = self.corner_perms[mid].compose(&other.corner_perms[t]);
        }
        Symmetry {
            tet_perm,
            corner_perms,
        }
    }

    /// +1 when the symmetry preserves the orientation (all corner
    /// permutations even), −1 otherwise. Parity is constant across the
    /// tetrahedra of a connected triangulation.
    pub fn orientation(&self) -> i8 {
        let odd = self.corner_perms[0].is_odd();
        debug_assert!(self.corner_perms.iter().all(|p| p.is_odd() == odd));
        if odd {
            -1
        } else {
            1
        }
    }
}

/// Exhaustive search for the full combinatorial automorphism group, seeded
/// by the image of tetrahedron 0 and propagated across face pairings.
pub fn symmetries(t: &Triangulation) -> Vec<Symmetry> {
    let n = t.n();
    let mut all_perms = Vec::with_capacity(24);
    fn perms_rec(acc: &mut Vec<u8>, all: &mut Vec<Perm4>) {
        if acc.len() == 4 {
            all.push(Perm4([acc[0], acc[1], acc[2], acc[3]]));
            return;
        }
        for v in 0..4u8 {
            if !acc.contains(&v) {
                acc.push(v);
                perms_rec(acc, all);
                acc.pop();
            }
        }
    }
    perms_rec(&mut Vec::new(), &mut all_perms);

    let mut out = Vec::new();
    for img0 in 0..n {
        'seed: for &p0 in &all_perms {
            let mut tet_perm: Vec<Option<usize>> = vec![None; n];
            let mut corner: Vec<Option<Perm4>> = vec![None; n];
            tet_perm[0] = Some(img0);
            corner[0] = Some(p0);
            let mut queue = vec![0usize];
            while let Some(tet) = queue.pop() {
                let (it, ip) = (tet_perm[tet].unwrap(), corner[tet].unwrap());
                for f in 0..4 {
                    let g = t.gluing(tet, f);
                    let f2 = ip.apply(f as u8) as usize;
                    let g2 = t.gluing(it, f2);
                    // induced data on the partner tetrahedron
                    let q = g2.perm.compose(&ip).compose(&g.perm.inverse());
                    match (tet_perm[g.tet], corner[g.tet]) {
                        (None, _) => {
                            tet_perm[g.tet] = Some(g2.tet);
                            corner[g.tet] = Some(q);
                            queue.push(g.tet);
                        }
                        (Some(et), Some(ep)) => {
                            if et != g2.tet || ep != q {
                                continue 'seed;
                            }
                        }
                        _ => unreachable!(),
                    }
                }
            }
            if tet_perm.iter().any(Option::is_none) {
                continue; // disconnected input; seeds elsewhere will not help
            }
            let sym = Symmetry {
                tet_perm: tet_perm.into_iter().map(Option::unwrap).collect(),
                corner_perms: corner.into_iter().map(Option::unwrap).collect(),
            };
            if verify_symmetry(t, &sym) {
                out.push(sym);
            }
        }
    }
    out.sort_by(|a, b| (&a.tet_perm, &a.corner_perms).cmp(&(&b.tet_perm, &b.corner_perms)));
    out
}

fn verify_symmetry(t: &Triangulation, s: &Symmetry) -> bool {
    let n = t.n();
    for tet in 0..n {
        for f in 0..4 {
            let g = t.gluing(tet, f);
            let f2 = s.corner_perms[tet].apply(f as u8) as usize;
            let g2 = t.gluing(s.tet_perm[tet], f2);
            if g2.tet != s.tet_perm[g.tet] {
                return false;
            }
            let expect = s.corner_perms[g.tet]
                .compose(&g.perm)
                .compose(&s.corner_perms[tet].inverse());
            if g2.perm != expect {
                return false;
            }
        }
    }
    true
}

/// The action of a symmetry on the 3n quadrilateral types, as a coordinate
/// permutation plus the orientation sign of the symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadPermutation {
    /// `map[3t+k]` is the index of the image quad of quad k in tet t.
    pub map: Vec<usize>,
    pub sign: i8,
}

impl QuadPermutation {
    pub fn apply_i64(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &m) in self.map.iter().enumerate() {
            out[m] = v[i];
        }
        out
    }

    pub fn compose(&self, other: &QuadPermutation) -> QuadPermutation {
        let map = other.map.iter().map(|&m| self.map[m]).collect();
        QuadPermutation {
            map,
            sign: self.sign * other.sign,
        }
    }
}

/// Quad q in tet t maps to the quad separating the image edge pair in the
/// image tetrahedron; the per-tet triple partition is preserved.
pub fn induced_quad_permutation(s: &Symmetry) -> QuadPermutation {
    let n = s.tet_perm.len();
    let mut map = vec![0usize; 3 * n];
    for t in 0..n {
        let p = &s.corner_perms[t];
        for level in 0..3u8 {
            let [e, _] = level_pairs(level);
            let img_level = edge_level(p.apply(e[0]), p.apply(e[1]));
            map[3 * t + level as usize] = 3 * s.tet_perm[t] + img_level as usize;
        }
    }
    QuadPermutation {
        map,
        sign: s.orientation(),
    }
}
