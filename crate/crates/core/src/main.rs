use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use normsurf::bounds::{bound_report, complexity_bounds, BoundOptions, HakenData};
use normsurf::certificates;
use normsurf::classify::classify_with;
use normsurf::coords::{haken_sum, lift_with, validate_with, NormalCoordinates, System};
use normsurf::generators::{self, GeneratedPackage};
use normsurf::homology::homology_with;
use normsurf::surface::{build_surface, region_decomposition};
use normsurf::vista::{realisation_report, vista_graph};
use normsurf::{Error, Skeleton, Triangulation};

#[derive(Parser)]
#[command(name = "nsg", version, about = "Normal surfaces in triangulated 3-manifolds")]
struct Cli {
    /// Machine readable output
    #[arg(long, global = true)]
    json: bool,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Coords {
    Standard,
    Quad,
}

impl From<Coords> for System {
    fn from(c: Coords) -> System {
        match c {
            Coords::Standard => System::Standard,
            Coords::Quad => System::Quad,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Report {
    Summary,
    Regions,
    Bounds,
    Vista,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a triangulation and report whether it is a valid 3-manifold triangulation
    Validate { tri: PathBuf },
    /// Vertex, edge and face classes with degrees and vertex links
    Skeleton { tri: PathBuf },
    /// Integral homology
    Homology { tri: PathBuf },
    /// Admissible vertex normal surfaces
    Enumerate {
        tri: PathBuf,
        #[arg(long, value_enum, default_value = "standard")]
        coords: Coords,
        /// Also write one coordinate file per surface and index.json here
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Rebuild a normal surface and analyse it
    Surface {
        tri: PathBuf,
        /// Coordinate file
        #[arg(long)]
        coords: PathBuf,
        #[arg(long, value_enum, default_value = "summary")]
        report: Report,
        /// Assert the triangulation is minimal and the manifold prime
        #[arg(long)]
        assert_minimal: bool,
        /// The surface is a Haken sum of N closed orientable surfaces with M vertex links added, as N,M
        #[arg(long, value_name = "N,M")]
        haken: Option<String>,
        /// The manifold is F x I with F of this genus, and the surface separates its ends
        #[arg(long)]
        fibre_genus: Option<i64>,
    },
    /// Haken sum, e.g. `nsg sum T.tri 2*s1.nsc + 1*s2.nsc`
    Sum {
        tri: PathBuf,
        #[arg(required = true, num_args = 1..)]
        terms: Vec<String>,
    },
    /// Write a generated triangulation, its surfaces and a manifest into a directory
    Generate {
        #[arg(value_enum)]
        family: Family,
        /// Size parameter, or the fixture name
        param: Option<String>,
        /// Output directory
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
    /// Vista graphs of a closed orientable surface in a combinatorial manifold
    Vista {
        tri: PathBuf,
        #[arg(long)]
        coords: PathBuf,
        /// Only this vertex class
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Run every end-to-end check and print a pass/fail table
    VerifyPaper {
        /// Only this criterion
        #[arg(long)]
        only: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    An,
    Bg,
    Gale,
    Fxi,
    S2xi,
    Fixture,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. }
            | Error::NonInvolutive { .. }
            | Error::SelfGluedFace { .. }
            | Error::IndexOutOfRange { .. }
            | Error::DimensionMismatch { .. }
            | Error::InvalidInput(_) => 2,
            Error::Internal(_) => 1,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: 2, message: format!("{}: {e}", path.display()) }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn in_file(path: &Path, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

fn load_tri(path: &Path) -> Result<Triangulation, Failure> {
    Triangulation::parse(&read(path)?).map_err(|e| in_file(path, e))
}

/// Reads a coordinate file, lifting quad vectors to standard.
fn load_coords(path: &Path, tri: &Triangulation, sk: &Skeleton) -> Result<NormalCoordinates, Failure> {
    let x = NormalCoordinates::parse(&read(path)?).map_err(|e| in_file(path, e))?;
    if x.tetrahedra() != tri.size() {
        return Err(in_file(path, Error::DimensionMismatch { expected: tri.size(), found: x.tetrahedra() }));
    }
    match x.system {
        System::Standard => {
            let report = validate_with(tri, sk, &x)?;
            if let Some(row) = report.violated_row {
                return Err(in_file(path, Error::MatchingViolated(row)));
            }
            if let Some(tet) = report.inadmissible_tet {
                return Err(in_file(path, Error::NotAdmissible { tet }));
            }
            Ok(x)
        }
        System::Quad => Ok(lift_with(tri, sk, &x)?),
    }
}

/// Collected output plus whether every check passed.
struct Output {
    text: String,
    json: serde_json::Value,
    ok: bool,
}

impl Output {
    fn new<T: Serialize>(text: String, value: &T, ok: bool) -> Self {
        Output { text, json: serde_json::to_value(value).expect("reports serialize"), ok }
    }
}

fn validate(path: &Path) -> Result<Output, Failure> {
    let tri = load_tri(path)?;
    let sk = Skeleton::compute(&tri);
    let flags = classify_with(&tri, &sk);
    let text = format!(
        "tetrahedra: {}\nvalid: {}\nclosed: {}\norientable: {}\nsimplicial: {}\ncombinatorial manifold: {}\nboundary components: {}\n",
        tri.size(),
        flags.valid,
        flags.closed,
        flags.orientable,
        flags.simplicial,
        flags.combinatorial_manifold,
        flags.boundary_components.len()
    );
    Ok(Output::new(text, &flags, flags.valid))
}

fn skeleton(path: &Path) -> Result<Output, Failure> {
    let tri = load_tri(path)?;
    let sk = Skeleton::compute(&tri);
    let mut text = format!(
        "vertices: {}\nedges: {}\nfaces: {}\ntetrahedra: {}\neuler characteristic: {}\n",
        sk.num_vertices,
        sk.num_edges,
        sk.num_faces,
        tri.size(),
        sk.euler_characteristic()
    );
    for (e, d) in sk.edge_degree.iter().enumerate() {
        let bdy = if sk.edge_boundary[e] { " boundary" } else { "" };
        text.push_str(&format!("edge {e}: degree {d}{bdy}\n"));
    }
    for (v, link) in sk.vertex_links.iter().enumerate() {
        text.push_str(&format!("vertex {v}: link {link:?}\n"));
    }
    let ok = sk.is_valid();
    Ok(Output::new(text, &sk, ok))
}

fn homology(path: &Path) -> Result<Output, Failure> {
    let tri = load_tri(path)?;
    let sk = Skeleton::compute(&tri);
    let h = homology_with(&tri, &sk);
    let mut text = String::new();
    for (i, b) in h.betti.iter().enumerate() {
        text.push_str(&format!("b{i}: {b}\n"));
    }
    text.push_str(&format!("torsion: {:?}\n", h.torsion));
    Ok(Output::new(text, &h, true))
}

fn enumerate(path: &Path, system: System, dir: Option<&Path>) -> Result<Output, Failure> {
    let tri = load_tri(path)?;
    let sk = Skeleton::compute(&tri);
    if let Some(d) = dir {
        fs::create_dir_all(d).map_err(|e| io_failure(d, e))?;
    }
    let found = certificates::enumerated(&tri, &sk, system)?;
    let mut text = format!("{} vertex surfaces\n", found.len());
    let mut rows = Vec::new();
    for (i, e) in found.iter().enumerate() {
        let s = &e.summary;
        text.push_str(&format!(
            "[{i}] chi {} genus {} orientable {} boundary {} quads {} triangles {} components {}\n{}",
            s.chi,
            s.genus,
            s.orientable,
            s.b,
            s.q,
            s.triangles,
            s.components.len(),
            e.coords.to_text()
        ));
        let file = format!("surface-{i}.nsc");
        if let Some(d) = dir {
            let p = d.join(&file);
            fs::write(&p, e.coords.to_text()).map_err(|err| io_failure(&p, err))?;
        }
        rows.push(json!({ "file": file, "admissible": true, "coords": e.coords, "summary": s }));
    }
    let index = json!({ "count": rows.len(), "surfaces": rows });
    if let Some(d) = dir {
        let p = d.join("index.json");
        let body = serde_json::to_string_pretty(&index).expect("index serializes") + "\n";
        fs::write(&p, body).map_err(|err| io_failure(&p, err))?;
    }
    Ok(Output::new(text, &index, true))
}

fn parse_haken(s: &str) -> Result<HakenData, Failure> {
    let bad = || Failure { code: 2, message: format!("--haken expects N,M, got {s}") };
    let (n, m) = s.split_once(',').ok_or_else(bad)?;
    Ok(HakenData { n: n.trim().parse().map_err(|_| bad())?, m: m.trim().parse().map_err(|_| bad())? })
}

fn surface(
    path: &Path,
    coords: &Path,
    report: Report,
    opts: BoundOptions,
) -> Result<Output, Failure> {
    let tri = load_tri(path)?;
    let sk = Skeleton::compute(&tri);
    let x = load_coords(coords, &tri, &sk)?;
    let s = build_surface(&tri, &sk, &x)?;
    let summary = s.summary();
    let mut text = format!(
        "chi: {}\ngenus: {}\norientable: {}\nboundary components: {}\ncomponents: {}\nquads: {}\ntriangles: {}\nf-vector: {} {} {}\nvertices: {}\n",
        summary.chi,
        summary.genus,
        summary.orientable,
        summary.b,
        summary.components.len(),
        summary.q,
        summary.triangles,
        summary.f_vector.f0,
        summary.f_vector.f1,
        summary.f_vector.f2,
        summary.v
    );
    let mut value = json!({ "summary": summary });
    let mut ok = true;
    match report {
        Report::Summary => {}
        Report::Regions => {
            let r = region_decomposition(&s);
            text.push_str(&format!(
                "triangle regions: {}\nquad regions: {}\nshortest chain: {}\n",
                r.triangle.len(),
                r.quad.len(),
                r.min_chain_length.map_or("none".into(), |n| n.to_string())
            ));
            value["regions"] = serde_json::to_value(&r).expect("regions serialize");
        }
        Report::Bounds => {
            let flags = classify_with(&tri, &sk);
            let r = region_decomposition(&s);
            let b = bound_report(&flags, &summary, Some(&r), &opts)?;
            for rec in b.records.iter().filter(|r| r.applicable) {
                let mark = if rec.sharp {
                    "sharp"
                } else if rec.holds {
                    "holds"
                } else {
                    "VIOLATED"
                };
                text.push_str(&format!("{}: {} ({} vs {}) {mark}\n", rec.name, rec.statement, rec.lhs, rec.rhs));
            }
            if b.compressibility_certificate {
                text.push_str("compressible: certified (2g > q)\n");
            }
            if let Some(t) = b.thurston_norm_bound {
                text.push_str(&format!("thurston norm bound: {t}\n"));
            }
            let c = complexity_bounds(&flags);
            text.push_str(&format!(
                "boundary complexity lower bound: {}\ngenus cap (vertex surfaces): {}\ngenus cap (incompressible): {}\n",
                c.boundary_lower_bound, c.genus_cap_normal, c.genus_cap_incompressible
            ));
            value["bounds"] = serde_json::to_value(&b).expect("bounds serialize");
            value["complexity"] = serde_json::to_value(&c).expect("bounds serialize");
        }
        Report::Vista => {
            let r = realisation_report(&tri, &sk, &s)?;
            ok = r.all_ok();
            text.push_str(&vista_text(&r));
            value["vista"] = serde_json::to_value(&r).expect("vistas serialize");
        }
    }
    Ok(Output { text, json: value, ok })
}

fn vista_text(r: &normsurf::vista::RealisationReport) -> String {
    let mut text = String::new();
    for v in &r.vistas {
        text.push_str(&format!("vertex {}: v {} e {} (e < 3v: {})\n", v.vertex, v.v, v.e, v.edge_bound_ok));
    }
    text.push_str(&format!(
        "2g < 7 f0: {} ({} < {})\nvertex sum {} <= 2 f0 = {}\nedge sum {} >= 2q = {}\nevery node in two vistas: {}\nnear realisation: tetrahedron {} adds {} vertices\n",
        r.genus_bound_ok,
        2 * r.genus,
        7 * r.f0,
        r.vertex_sum,
        2 * r.f0,
        r.edge_sum,
        2 * r.q,
        r.two_vistas_ok,
        r.near_realisation.tetrahedron,
        r.near_realisation.delta
    ));
    text
}

fn vista(path: &Path, coords: &Path, vertex: Option<usize>) -> Result<Output, Failure> {
    let tri = load_tri(path)?;
    let sk = Skeleton::compute(&tri);
    let x = load_coords(coords, &tri, &sk)?;
    let s = build_surface(&tri, &sk, &x)?;
    match vertex {
        Some(v) => {
            let g = vista_graph(&tri, &sk, &s, v)?;
            let text = format!("vertex {}: v {} e {} (e < 3v: {})\n", g.vertex, g.v, g.e, g.edge_bound_ok);
            let ok = g.edge_bound_ok;
            Ok(Output::new(text, &g, ok))
        }
        None => {
            let r = realisation_report(&tri, &sk, &s)?;
            Ok(Output::new(vista_text(&r), &r, r.all_ok()))
        }
    }
}

/// Splits `2*a.nsc + b.nsc` (one or many arguments) into multiplicities and paths.
fn parse_terms(terms: &[String]) -> Result<Vec<(u64, PathBuf)>, Failure> {
    let joined = terms.join(" ");
    joined
        .split('+')
        .map(str::trim)
        .map(|t| {
            if t.is_empty() {
                return Err(Failure { code: 2, message: format!("empty term in `{joined}`") });
            }
            match t.split_once('*') {
                Some((k, p)) => {
                    let k = k.trim().parse().map_err(|_| Failure {
                        code: 2,
                        message: format!("bad multiplicity in `{t}`"),
                    })?;
                    Ok((k, PathBuf::from(p.trim())))
                }
                None => Ok((1, PathBuf::from(t))),
            }
        })
        .collect()
}

fn sum(path: &Path, terms: &[String]) -> Result<Output, Failure> {
    let tri = load_tri(path)?;
    let sk = Skeleton::compute(&tri);
    let mut summands = Vec::new();
    for (k, p) in parse_terms(terms)? {
        summands.push((k, load_coords(&p, &tri, &sk)?));
    }
    let x = haken_sum(&tri, &summands)?;
    let summary = build_surface(&tri, &sk, &x)?.summary();
    let text = format!(
        "{}# chi {} genus {} orientable {} components {} quads {} triangles {}\n",
        x.to_text(),
        summary.chi,
        summary.genus,
        summary.orientable,
        summary.components.len(),
        summary.q,
        summary.triangles
    );
    Ok(Output::new(text, &json!({ "coords": x, "summary": summary }), true))
}

fn size_param(param: Option<&str>) -> Result<usize, Failure> {
    let p = param.ok_or(Failure { code: 2, message: "this family needs a size parameter".into() })?;
    p.parse().map_err(|_| Failure { code: 2, message: format!("bad size parameter {p}") })
}

fn generate(family: Family, param: Option<&str>, dir: &Path) -> Result<Output, Failure> {
    let pkg: GeneratedPackage = match family {
        Family::An => generators::family_an(size_param(param)?)?,
        Family::Bg => generators::family_bg(size_param(param)?)?,
        Family::Gale => generators::gale(size_param(param)?)?,
        Family::Fxi => generators::inflate_fxi(size_param(param)?)?,
        Family::S2xi => generators::s2xi()?,
        Family::Fixture => {
            let name = param.ok_or(Failure {
                code: 2,
                message: format!("fixture name required, one of {:?}", generators::FIXTURE_NAMES),
            })?;
            generators::fixture(name)?
        }
    };
    fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
    let write = |name: String, body: String| -> Result<PathBuf, Failure> {
        let p = dir.join(name);
        fs::write(&p, body).map_err(|e| io_failure(&p, e))?;
        Ok(p)
    };
    let mut written = vec![write(format!("{}.tri", pkg.name), pkg.triangulation.to_text())?];
    for s in &pkg.surfaces {
        written.push(write(format!("{}.{}.nsc", pkg.name, s.name), s.coords.to_text())?);
    }
    written.push(write(format!("{}.manifest.json", pkg.name), pkg.manifest_json() + "\n")?);
    let mut text = format!("{}: {} tetrahedra, manifest verified\n", pkg.name, pkg.triangulation.size());
    for p in &written {
        text.push_str(&format!("wrote {}\n", p.display()));
    }
    let files: Vec<String> = written.iter().map(|p| p.display().to_string()).collect();
    Ok(Output::new(text, &json!({ "package": pkg, "files": files }), true))
}

fn verify_paper(only: Option<usize>) -> Result<Output, Failure> {
    let results = match only {
        Some(id) if (1..=14).contains(&id) => vec![certificates::run(id)],
        Some(id) => return Err(Failure { code: 2, message: format!("criteria are numbered 1 to 14, got {id}") }),
        None => certificates::run_all(),
    };
    let mut text = String::new();
    for r in &results {
        let mark = if r.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{:>2} {mark} {}\n     {}\n", r.id, r.title, r.detail));
    }
    let passed = results.iter().filter(|r| r.passed).count();
    text.push_str(&format!("{passed}/{} passed\n", results.len()));
    Ok(Output::new(text, &results, passed == results.len()))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Validate { tri } => validate(tri),
        Command::Skeleton { tri } => skeleton(tri),
        Command::Homology { tri } => homology(tri),
        Command::Enumerate { tri, coords, dir } => enumerate(tri, (*coords).into(), dir.as_deref()),
        Command::Surface { tri, coords, report, assert_minimal, haken, fibre_genus } => {
            let opts = BoundOptions {
                haken: haken.as_deref().map(parse_haken).transpose()?,
                assert_minimal: *assert_minimal,
                product_fibre_genus: *fibre_genus,
            };
            surface(tri, coords, *report, opts)
        }
        Command::Sum { tri, terms } => sum(tri, terms),
        Command::Generate { family, param, dir } => generate(*family, param.as_deref(), dir),
        Command::Vista { tri, coords, vertex } => vista(tri, coords, *vertex),
        Command::VerifyPaper { only } => verify_paper(*only),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("reports serialize") + "\n"
            } else {
                out.text
            };
            match &cli.out {
                Some(p) => {
                    if let Err(e) = fs::write(p, body) {
                        eprintln!("nsg: {}", io_failure(p, e).message);
                        return ExitCode::from(2);
                    }
                }
                None => print!("{body}"),
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("nsg: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
