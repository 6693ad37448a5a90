//! Batch command-line frontend. Every subcommand reads a triangulation
//! document, runs one pipeline stage, and writes deterministic output:
//! identical input gives byte-identical output. Exact quantities print as
//! reduced fractions; floats appear only in `probe` output.
//!
//! Exit codes: 0 success, 2 validation failure, 3 computation
//! infeasible or degenerate, 4 I/O error.

mod pathspec;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use spuntrop_core::angles::{angle_polytope, certify_essential};
use spuntrop_core::equations::{
    boundary_functionals, edge_rows, ingest_nz, peripheral_exponents, qmatching_direct,
    qmatching_from_a, EqError, NzDocument,
};
use spuntrop_core::surfaces::{
    boundary_coordinate, enumerate_pf, orbits, vertex_solutions, NormalQCoordinate, PFComplex,
};
use spuntrop_core::tri::{
    induced_quad_permutation, parse_triangulation, symmetries, trace_cusp_classes,
    trace_edge_classes, validate_torus_links, QuadPermutation, TriError, Triangulation,
};
use spuntrop_core::tropical::{log_limit_probe, normal_to_xi, prevariety, xi_to_normal_int};
use spuntrop_hull::{primitive_integer, Rat};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "spuntrop",
    version,
    about = "Exact spun-normal surface and tropical pre-variety computations for ideal triangulations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Subgroup {
    /// The full combinatorial automorphism group.
    Full,
    /// The subgroup stabilising every cusp class.
    CuspStabilising,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a triangulation document and report its combinatorics.
    Validate { input: PathBuf },
    /// Gluing exponent rows and the Q-matching matrix, built both ways.
    Equations {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Enumerate the projectivised admissible solution space.
    Vertices {
        input: PathBuf,
        /// NZ document with peripheral rows; adds boundary-coordinate columns.
        #[arg(long)]
        nz: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Peripheral exponent rows and slope functionals from an NZ document.
    Slopes {
        input: PathBuf,
        #[arg(long)]
        nz: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Orbits of the vertex solutions under triangulation symmetries.
    Orbits {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "cusp-stabilising")]
        subgroup: Subgroup,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Search for a semi-angle structure dual to the listed vertex surfaces.
    Certify {
        input: PathBuf,
        /// 1-based vertex ids in canonical order, comma separated.
        #[arg(long, value_delimiter = ',')]
        surfaces: Vec<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Intersect the spherical duals into the tropical pre-variety.
    Prevariety {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Verify the correspondence between pre-variety rays and vertex solutions.
    Correspond { input: PathBuf },
    /// Probe the logarithmic-limit direction of a degeneration path.
    Probe {
        input: PathBuf,
        /// Comma-separated shape expressions in the parameter w (alias t).
        #[arg(long)]
        path: String,
        /// Real part of the initial parameter.
        #[arg(long, default_value_t = 0.5)]
        t0: f64,
        /// Imaginary part of the initial parameter.
        #[arg(long, default_value_t = 0.0)]
        t0_im: f64,
        /// Geometric schedule ratio.
        #[arg(long, default_value_t = 0.5)]
        ratio: f64,
        #[arg(long, default_value_t = 46)]
        samples: usize,
    },
    /// Re-ingest a `vertices --format json` dump and re-validate it.
    Check {
        input: PathBuf,
        #[arg(long)]
        vertices: PathBuf,
    },
}

enum CliError {
    Validation(String),
    Computation(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Computation(_) => 3,
            CliError::Io(_) => 4,
        }
    }
    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Computation(m) | CliError::Io(m) => m,
        }
    }
}

impl From<TriError> for CliError {
    fn from(e: TriError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<EqError> for CliError {
    fn from(e: EqError) -> Self {
        match e {
            EqError::MalformedDocument(_) => CliError::Validation(e.to_string()),
            EqError::DegenerateShape(..) => CliError::Computation(e.to_string()),
        }
    }
}

fn main() {
    if let Ok(threads) = std::env::var("SPUNTROP_THREADS") {
        if let Ok(k) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.code());
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_tri(path: &Path) -> Result<Triangulation, CliError> {
    Ok(parse_triangulation(&read(path)?)?)
}

fn load_nz(path: &Path) -> Result<NzDocument, CliError> {
    Ok(ingest_nz(&read(path)?)?)
}

fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn run(cmd: Command) -> Result<String, CliError> {
    match cmd {
        Command::Validate { input } => validate(&input),
        Command::Equations { input, format } => equations(&input, format),
        Command::Vertices { input, nz, format } => vertices_cmd(&input, nz.as_deref(), format),
        Command::Slopes { input, nz, format } => slopes(&input, &nz, format),
        Command::Orbits {
            input,
            subgroup,
            format,
        } => orbits_cmd(&input, subgroup, format),
        Command::Certify {
            input,
            surfaces,
            format,
        } => certify(&input, &surfaces, format),
        Command::Prevariety { input, format } => prevariety_cmd(&input, format),
        Command::Correspond { input } => correspond(&input),
        Command::Probe {
            input,
            path,
            t0,
            t0_im,
            ratio,
            samples,
        } => probe(&input, &path, Complex64::new(t0, t0_im), ratio, samples),
        Command::Check { input, vertices } => check(&input, &vertices),
    }
}

fn validate(input: &Path) -> Result<String, CliError> {
    let t = load_tri(input)?;
    let edges = trace_edge_classes(&t);
    let cusps = trace_cusp_classes(&t);
    validate_torus_links(&cusps)?;
    let syms = symmetries(&t);
    let mut out = String::new();
    writeln!(out, "tetrahedra: {}", t.n()).unwrap();
    writeln!(out, "edge classes: {}", edges.len()).unwrap();
    for e in &edges {
        writeln!(out, "  edge {}: degree {}", e.id, e.degree()).unwrap();
    }
    writeln!(out, "cusps: {}", cusps.len()).unwrap();
    for c in &cusps {
        writeln!(
            out,
            "  cusp {}: {} link triangles, euler {}",
            c.id,
            c.vertices.len(),
            c.link_euler
        )
        .unwrap();
    }
    writeln!(out, "symmetry group order: {}", syms.len()).unwrap();
    writeln!(out, "valid: true").unwrap();
    Ok(out)
}

fn int_row(row: &[i64]) -> String {
    row.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn equations(input: &Path, format: Format) -> Result<String, CliError> {
    let t = load_tri(input)?;
    let g = edge_rows(&t);
    let b_from_a = qmatching_from_a(&g);
    let b_direct = qmatching_direct(&t);
    let agree = b_from_a.iter().zip(&b_direct).all(|(x, y)| {
        let neg: Vec<i64> = y.iter().map(|v| -v).collect();
        x == y || *x == neg
    });
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "n": g.n,
                "gluing_rows": g.edge_rows.iter().map(|e| e.entries.clone()).collect::<Vec<_>>(),
                "qmatching_from_a": b_from_a,
                "qmatching_direct": b_direct,
                "routes_agree_up_to_row_sign": agree,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))
        }
        _ => {
            let mut out = String::new();
            writeln!(out, "gluing exponent rows (A):").unwrap();
            for (i, e) in g.edge_rows.iter().enumerate() {
                writeln!(out, "  edge {i}: {}", int_row(&e.entries)).unwrap();
            }
            writeln!(out, "Q-matching rows (B = A C_n):").unwrap();
            for (i, r) in b_from_a.iter().enumerate() {
                writeln!(out, "  edge {i}: {}", int_row(r)).unwrap();
            }
            writeln!(out, "Q-matching rows (abstract neighbourhood slopes):").unwrap();
            for (i, r) in b_direct.iter().enumerate() {
                writeln!(out, "  edge {i}: {}", int_row(r)).unwrap();
            }
            writeln!(out, "routes agree up to row sign: {agree}").unwrap();
            Ok(out)
        }
    }
}

struct VertexTable {
    pf: PFComplex,
    solutions: Vec<NormalQCoordinate>,
    boundary_names: Vec<String>,
    boundaries: Vec<Vec<Rat>>,
}

fn vertex_table(t: &Triangulation, nz: Option<&NzDocument>) -> Result<VertexTable, CliError> {
    let g = edge_rows(t);
    let b = qmatching_from_a(&g);
    let pf = enumerate_pf(&b, t.n());
    let solutions = vertex_solutions(&pf);
    let (boundary_names, boundaries) = match nz {
        Some(doc) => {
            let fns = boundary_functionals(doc)?;
            let names = fns.iter().map(|(n, _)| n.clone()).collect();
            let values = solutions
                .iter()
                .map(|s| {
                    boundary_coordinate(s, &fns.iter().map(|(_, f)| f.clone()).collect::<Vec<_>>())
                        .values
                })
                .collect();
            (names, values)
        }
        None => (Vec::new(), vec![Vec::new(); solutions.len()]),
    };
    Ok(VertexTable {
        pf,
        solutions,
        boundary_names,
        boundaries,
    })
}

fn coord_headers(n: usize) -> Vec<String> {
    let mut h = Vec::new();
    for i in 0..n {
        h.push(format!("q{i}"));
        h.push(format!("q{i}'"));
        h.push(format!("q{i}''"));
    }
    h
}

fn vertices_cmd(input: &Path, nz: Option<&Path>, format: Format) -> Result<String, CliError> {
    let t = load_tri(input)?;
    let doc = nz.map(load_nz).transpose()?;
    let vt = vertex_table(&t, doc.as_ref())?;
    let mut out = String::new();
    match format {
        Format::Csv => {
            let mut headers = vec!["vertex".to_string()];
            headers.extend(coord_headers(t.n()));
            headers.extend(vt.boundary_names.iter().cloned());
            writeln!(out, "{}", headers.join(",")).unwrap();
            for (i, s) in vt.solutions.iter().enumerate() {
                let mut row = vec![(i + 1).to_string()];
                row.extend(s.entries.iter().map(format_rat));
                row.extend(vt.boundaries[i].iter().map(format_rat));
                writeln!(out, "{}", row.join(",")).unwrap();
            }
        }
        Format::Json => {
            let verts: Vec<serde_json::Value> = vt
                .solutions
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    serde_json::json!({
                        "id": i + 1,
                        "coords": s.entries.iter().map(format_rat).collect::<Vec<_>>(),
                        "boundary": vt.boundary_names.iter().zip(&vt.boundaries[i])
                            .map(|(n, v)| serde_json::json!([n, format_rat(v)]))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "n": t.n(),
                "vertex_count": vt.solutions.len(),
                "maximal_cells_by_projective_dim": vt.pf.maximal_cell_histogram(),
                "vertices": verts,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).unwrap();
        }
        Format::Table => {
            writeln!(out, "vertex solutions: {}", vt.solutions.len()).unwrap();
            for (i, s) in vt.solutions.iter().enumerate() {
                let coords: Vec<String> = s.entries.iter().map(format_rat).collect();
                let mut line = format!("  V{:<3} ({})", i + 1, coords.join(" "));
                if !vt.boundary_names.is_empty() {
                    let b: Vec<String> = vt.boundaries[i].iter().map(format_rat).collect();
                    line.push_str(&format!("  boundary ({})", b.join(", ")));
                }
                writeln!(out, "{line}").unwrap();
            }
            let hist = vt.pf.maximal_cell_histogram();
            let desc: Vec<String> = hist
                .iter()
                .map(|(d, k)| format!("{k} of projective dim {d}"))
                .collect();
            writeln!(out, "maximal cells: {}", desc.join(", ")).unwrap();
        }
    }
    Ok(out)
}

fn slopes(input: &Path, nz: &Path, format: Format) -> Result<String, CliError> {
    let t = load_tri(input)?;
    let doc = load_nz(nz)?;
    if doc.n != t.n() {
        return Err(CliError::Validation(format!(
            "NZ document has {} tetrahedra, triangulation has {}",
            doc.n,
            t.n()
        )));
    }
    let periph = peripheral_exponents(&doc);
    let fns = boundary_functionals(&doc)?;
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "peripheral_rows": periph.iter().map(|(l, e)| serde_json::json!({
                    "label": l,
                    "exponents": e.entries,
                    "sign_exp": e.sign_exp,
                })).collect::<Vec<_>>(),
                "boundary_columns": fns.iter().map(|(n, f)| serde_json::json!({
                    "name": n,
                    "coeffs": f.coeffs,
                })).collect::<Vec<_>>(),
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))
        }
        _ => {
            let mut out = String::new();
            writeln!(out, "peripheral exponent rows (z, z', z'' blocks):").unwrap();
            for (label, e) in &periph {
                writeln!(
                    out,
                    "  {label}: {} (sign {})",
                    int_row(&e.entries),
                    e.sign_exp
                )
                .unwrap();
            }
            writeln!(out, "boundary-coordinate functionals:").unwrap();
            for (name, f) in &fns {
                writeln!(out, "  {name}: {}", int_row(&f.coeffs)).unwrap();
            }
            Ok(out)
        }
    }
}

fn quad_perms_for(t: &Triangulation, subgroup: Subgroup) -> Vec<QuadPermutation> {
    let syms = symmetries(t);
    let cusps = trace_cusp_classes(t);
    let cusp_of = |tet: usize, v: u8| {
        cusps
            .iter()
            .find(|c| c.vertices.contains(&(tet, v)))
            .map(|c| c.id)
            .unwrap()
    };
    syms.iter()
        .filter(|s| match subgroup {
            Subgroup::Full => true,
            Subgroup::CuspStabilising => (0..t.n()).all(|tet| {
                (0..4u8).all(|v| {
                    cusp_of(tet, v) == cusp_of(s.tet_perm[tet], s.corner_perms[tet].apply(v))
                })
            }),
        })
        .map(induced_quad_permutation)
        .collect()
}

fn orbits_cmd(input: &Path, subgroup: Subgroup, format: Format) -> Result<String, CliError> {
    let t = load_tri(input)?;
    let g = edge_rows(&t);
    let pf = enumerate_pf(&qmatching_from_a(&g), t.n());
    let perms = quad_perms_for(&t, subgroup);
    let parts = orbits(&pf, &perms);
    let name = match subgroup {
        Subgroup::Full => "full",
        Subgroup::CuspStabilising => "cusp-stabilising",
    };
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "subgroup": name,
                "subgroup_order": perms.len(),
                "orbits": parts.iter()
                    .map(|o| o.iter().map(|v| v + 1).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))
        }
        _ => {
            let mut out = String::new();
            writeln!(out, "subgroup: {name} (order {})", perms.len()).unwrap();
            writeln!(out, "orbits: {}", parts.len()).unwrap();
            for (i, o) in parts.iter().enumerate() {
                let ids: Vec<String> = o.iter().map(|v| format!("V{}", v + 1)).collect();
                writeln!(out, "  orbit {i}: {}", ids.join(" ")).unwrap();
            }
            Ok(out)
        }
    }
}

fn certify(input: &Path, surfaces: &[usize], format: Format) -> Result<String, CliError> {
    let t = load_tri(input)?;
    let g = edge_rows(&t);
    let pf = enumerate_pf(&qmatching_from_a(&g), t.n());
    let solutions = vertex_solutions(&pf);
    let mut chosen = Vec::new();
    for &id in surfaces {
        if id == 0 || id > solutions.len() {
            return Err(CliError::Validation(format!(
                "surface id {id} out of range 1..={}",
                solutions.len()
            )));
        }
        chosen.push((id, solutions[id - 1].clone()));
    }
    let polytope = angle_polytope(&g);
    let report =
        certify_essential(&chosen, &polytope).map_err(|e| CliError::Validation(e.to_string()))?;
    let out = match format {
        Format::Json => {
            let doc = serde_json::json!({
                "surface_ids": report.surface_ids,
                "feasible": report.feasible,
                "alpha": report.alpha.as_ref().map(|a| a.angles.iter().map(format_rat).collect::<Vec<_>>()),
                "farkas": report.farkas.as_ref().map(|f| serde_json::json!({
                    "eq_multipliers": f.eq_multipliers.iter().map(format_rat).collect::<Vec<_>>(),
                    "ineq_multipliers": f.ineq_multipliers.iter().map(format_rat).collect::<Vec<_>>(),
                })),
                "pairwise_compatible": report.pairwise_compatible,
                "two_sidedness_unchecked": report.two_sidedness_unchecked,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
        _ => {
            let mut out = String::new();
            writeln!(out, "surfaces: {:?}", report.surface_ids).unwrap();
            writeln!(out, "feasible: {}", report.feasible).unwrap();
            if let Some(a) = &report.alpha {
                let angles: Vec<String> = a.angles.iter().map(format_rat).collect();
                writeln!(out, "alpha (units of pi): {}", angles.join(" ")).unwrap();
            }
            writeln!(out, "pairwise compatible: {}", report.pairwise_compatible).unwrap();
            writeln!(out, "two-sidedness unchecked: true").unwrap();
            out
        }
    };
    if report.feasible {
        Ok(out)
    } else {
        // still print the report, then flag the infeasibility in the exit code
        print!("{out}");
        Err(CliError::Computation(
            "no common dual semi-angle structure".into(),
        ))
    }
}

fn prevariety_cmd(input: &Path, format: Format) -> Result<String, CliError> {
    let t = load_tri(input)?;
    let pre = prevariety(&t);
    match format {
        Format::Json => {
            let cones: Vec<serde_json::Value> = pre
                .cones
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "dim": c.dim,
                        "equalities": c.cone.equalities().iter()
                            .map(|r| r.iter().map(format_rat).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                        "inequalities": c.cone.inequalities().iter()
                            .map(|r| r.iter().map(format_rat).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                        "rays": c.rays.iter()
                            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "dim": pre.dim,
                "ray_count": pre.rays.len(),
                "rays": pre.rays.iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "cones": cones,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))
        }
        Format::Csv => {
            let mut out = String::new();
            let headers: Vec<String> = (0..pre.dim).map(|i| format!("xi{i}")).collect();
            writeln!(out, "ray,{}", headers.join(",")).unwrap();
            for (i, r) in pre.rays.iter().enumerate() {
                let vals: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                writeln!(out, "{},{}", i + 1, vals.join(",")).unwrap();
            }
            Ok(out)
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "ambient dimension: {}", pre.dim).unwrap();
            writeln!(out, "rays: {}", pre.rays.len()).unwrap();
            for (i, r) in pre.rays.iter().enumerate() {
                let vals: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                writeln!(out, "  xi{}: {}", i + 1, vals.join(" ")).unwrap();
            }
            let mut hist = std::collections::BTreeMap::new();
            for c in &pre.cones {
                *hist.entry(c.dim).or_insert(0usize) += 1;
            }
            let desc: Vec<String> = hist
                .iter()
                .map(|(d, k)| format!("{k} of cone dim {d}"))
                .collect();
            writeln!(
                out,
                "maximal cones: {} ({})",
                pre.cones.len(),
                desc.join(", ")
            )
            .unwrap();
            writeln!(
                out,
                "note: the pre-variety contains the logarithmic limit set; the containment can be strict"
            )
            .unwrap();
            Ok(out)
        }
    }
}

fn correspond(input: &Path) -> Result<String, CliError> {
    let t = load_tri(input)?;
    let pre = prevariety(&t);
    let g = edge_rows(&t);
    let pf = enumerate_pf(&qmatching_from_a(&g), t.n());

    let mut out = String::new();
    writeln!(out, "prevariety rays: {}", pre.rays.len()).unwrap();
    writeln!(out, "pf vertices: {}", pf.vertices.len()).unwrap();

    let mut mapped = Vec::new();
    for xi in &pre.rays {
        let n = xi_to_normal_int(xi)
            .map_err(|e| CliError::Computation(format!("ray fails the N-map: {e}")))?;
        mapped.push(primitive_integer(&n.entries));
    }
    mapped.sort();
    mapped.dedup();
    let ray_bijection = mapped == pf.vertices && pre.rays.len() == pf.vertices.len();
    writeln!(out, "ray bijection under N: {ray_bijection}").unwrap();

    let mut back_ok = true;
    for v in vertex_solutions(&pf) {
        let xi = primitive_integer(&normal_to_xi(&v));
        if !pre.rays.contains(&xi) {
            back_ok = false;
        }
    }
    writeln!(out, "inverse images in the ray set: {back_ok}").unwrap();

    let mut pf_cells: Vec<Vec<Vec<num_bigint::BigInt>>> = pf
        .maximal_cells()
        .map(|c| {
            let mut rays: Vec<_> = c
                .vertex_ids
                .iter()
                .map(|&v| pf.vertices[v].clone())
                .collect();
            rays.sort();
            rays
        })
        .collect();
    pf_cells.sort();
    let mut pre_cells: Vec<Vec<Vec<num_bigint::BigInt>>> = pre
        .cones
        .iter()
        .map(|c| {
            let mut rays: Vec<_> = c
                .rays
                .iter()
                .map(|xi| primitive_integer(&xi_to_normal_int(xi).unwrap().entries))
                .collect();
            rays.sort();
            rays
        })
        .collect();
    pre_cells.sort();
    let cells_match = pf_cells == pre_cells;
    writeln!(
        out,
        "maximal cells matched: {} ({cells_match})",
        pre.cones.len()
    )
    .unwrap();

    if ray_bijection && back_ok && cells_match {
        writeln!(out, "correspondence verified").unwrap();
        Ok(out)
    } else {
        print!("{out}");
        Err(CliError::Computation("correspondence not verified".into()))
    }
}

fn probe(
    input: &Path,
    path: &str,
    t0: Complex64,
    ratio: f64,
    samples: usize,
) -> Result<String, CliError> {
    let t = load_tri(input)?;
    let exprs = pathspec::parse_path(path).map_err(CliError::Validation)?;
    if exprs.len() != t.n() {
        return Err(CliError::Validation(format!(
            "path has {} components, triangulation has {} tetrahedra",
            exprs.len(),
            t.n()
        )));
    }
    let sampler = move |w: Complex64| {
        let z: Vec<Complex64> = exprs.iter().map(|e| e.eval(w)).collect();
        spuntrop_core::equations::ShapeAssignment::new(z).ok()
    };
    let res = log_limit_probe(&sampler, t0, ratio, samples)
        .map_err(|e| CliError::Computation(e.to_string()))?;
    let mut out = String::new();
    writeln!(out, "samples used: {}", res.samples_used).unwrap();
    writeln!(out, "diverging: {}", res.diverging).unwrap();
    let dir: Vec<String> = res.direction.iter().map(|&x| sig12(x)).collect();
    writeln!(out, "direction: {}", dir.join(" ")).unwrap();
    let lp: Vec<String> = res.last_point.iter().map(|&x| sig12(x)).collect();
    writeln!(out, "last point: {}", lp.join(" ")).unwrap();
    if res.angle_delta.is_finite() {
        writeln!(out, "angle delta: {}", sig12(res.angle_delta)).unwrap();
    } else {
        writeln!(out, "angle delta: n/a").unwrap();
    }
    Ok(out)
}

fn check(input: &Path, vertices_path: &Path) -> Result<String, CliError> {
    let t = load_tri(input)?;
    let g = edge_rows(&t);
    let b = qmatching_from_a(&g);
    let text = read(vertices_path)?;
    let doc: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Validation(format!("vertices dump: {e}")))?;
    let verts = doc
        .get("vertices")
        .and_then(|v| v.as_array())
        .ok_or_else(|| CliError::Validation("vertices dump: missing vertices array".into()))?;
    let mut count = 0usize;
    for v in verts {
        let coords = v
            .get("coords")
            .and_then(|c| c.as_array())
            .ok_or_else(|| CliError::Validation("vertices dump: missing coords".into()))?;
        let entries: Result<Vec<Rat>, CliError> = coords
            .iter()
            .map(|c| {
                let s = c.as_str().ok_or_else(|| {
                    CliError::Validation("vertices dump: coords must be strings".into())
                })?;
                Rat::from_str(s).map_err(|e| CliError::Validation(format!("bad rational {s}: {e}")))
            })
            .collect();
        let x = NormalQCoordinate::new(entries?)
            .map_err(|e| CliError::Validation(format!("vertex {count}: {e}")))?;
        if !x.satisfies_matching(&b) {
            return Err(CliError::Validation(format!(
                "vertex {count} violates the Q-matching equations"
            )));
        }
        count += 1;
    }
    Ok(format!(
        "checked {count} vertices: admissible and matching\n"
    ))
}
