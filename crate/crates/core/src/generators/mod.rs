//! Triangulation families, distinguished surfaces and the worked examples,
//! each returned with a manifest that is checked before it is handed out.

pub mod families;
pub mod fixtures;
pub mod inflate;
pub mod surface2;

use serde::Serialize;

use crate::classify::classify_with;
use crate::coords::{validate_with, NormalCoordinates, TypeCensus};
use crate::error::{Error, Result};
use crate::homology::homology_with;
use crate::skeleton::Skeleton;
use crate::surface::build_surface;
use crate::tri::Triangulation;

pub use families::{family_an, family_bg, gale};
pub use fixtures::{fixture, FIXTURE_NAMES};
pub use inflate::{inflate_fxi, s2xi, s2xi_variants, Frame};
pub use surface2::{cone_over, surface_one_vertex, SurfaceTriangulation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedSurface {
    pub name: String,
    pub coords: NormalCoordinates,
}

/// Expected topology of an attached surface; `None` fields are not checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SurfaceExpectation {
    pub name: String,
    pub genus: Option<i64>,
    pub quads: Option<usize>,
    pub triangles: Option<usize>,
    pub chi: Option<i64>,
    pub orientable: Option<bool>,
    pub vertices: Option<usize>,
    pub boundary: Option<usize>,
    pub connected: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Manifest {
    pub tetrahedra: usize,
    pub vertices: Option<usize>,
    pub h1_rank: Option<usize>,
    pub h1_torsion_free: Option<bool>,
    pub orientable: Option<bool>,
    /// Genus of each boundary component, sorted.
    pub boundary_genera: Option<Vec<i64>>,
    pub surfaces: Vec<SurfaceExpectation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratedPackage {
    pub name: String,
    #[serde(skip)]
    pub triangulation: Triangulation,
    pub surfaces: Vec<NamedSurface>,
    pub manifest: Manifest,
    pub frame: Option<Frame>,
    pub census: Option<TypeCensus>,
    pub notes: Vec<String>,
}

impl GeneratedPackage {
    pub fn surface(&self, name: &str) -> Option<&NormalCoordinates> {
        self.surfaces.iter().find(|s| s.name == name).map(|s| &s.coords)
    }

    pub fn manifest_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("package serializes")
    }
}

fn check<T: PartialEq + std::fmt::Debug>(what: &str, want: Option<T>, got: T) -> Result<()> {
    match want {
        Some(w) if w != got => Err(Error::Internal(format!("{what}: expected {w:?}, found {got:?}"))),
        _ => Ok(()),
    }
}

/// Re-derives every manifest entry from the triangulation and surfaces.
pub fn verify(pkg: &GeneratedPackage) -> Result<()> {
    let tri = &pkg.triangulation;
    let m = &pkg.manifest;
    let ctx = |e: Error| Error::Internal(format!("{}: {e}", pkg.name));
    check("tetrahedra", Some(m.tetrahedra), tri.size()).map_err(ctx)?;
    let sk = Skeleton::compute(tri);
    check("vertices", m.vertices, sk.num_vertices).map_err(ctx)?;
    if m.h1_rank.is_some() || m.h1_torsion_free.is_some() {
        let h = homology_with(tri, &sk);
        check("H1 rank", m.h1_rank, h.betti[1]).map_err(ctx)?;
        check("H1 torsion free", m.h1_torsion_free, h.torsion.is_empty()).map_err(ctx)?;
    }
    if m.orientable.is_some() || m.boundary_genera.is_some() {
        let flags = classify_with(tri, &sk);
        check("orientable", m.orientable, flags.orientable).map_err(ctx)?;
        let mut genera: Vec<i64> = flags.boundary_components.iter().map(|c| c.genus).collect();
        genera.sort_unstable();
        check("boundary genera", m.boundary_genera.clone(), genera).map_err(ctx)?;
    }
    for e in &m.surfaces {
        let x = pkg
            .surface(&e.name)
            .ok_or_else(|| Error::Internal(format!("{}: surface {} missing", pkg.name, e.name)))?;
        let report = validate_with(tri, &sk, x)?;
        if !report.ok() {
            return Err(Error::Internal(format!("{}: surface {} fails validation", pkg.name, e.name)));
        }
        let s = build_surface(tri, &sk, x)?.summary();
        let ctx = |err: Error| Error::Internal(format!("{} / {}: {err}", pkg.name, e.name));
        check("genus", e.genus, s.genus).map_err(ctx)?;
        check("quads", e.quads, s.q).map_err(ctx)?;
        check("triangles", e.triangles, s.triangles).map_err(ctx)?;
        check("chi", e.chi, s.chi).map_err(ctx)?;
        check("orientable", e.orientable, s.orientable).map_err(ctx)?;
        check("vertices", e.vertices, s.v).map_err(ctx)?;
        check("boundary", e.boundary, s.b).map_err(ctx)?;
        check("connected", e.connected, s.connected()).map_err(ctx)?;
    }
    Ok(())
}

/// Returns the package after [`verify`] succeeds.
pub(crate) fn verified(pkg: GeneratedPackage) -> Result<GeneratedPackage> {
    verify(&pkg)?;
    Ok(pkg)
}
