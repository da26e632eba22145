//! Gluing tables of the worked examples, embedded verbatim, and their
//! distinguished surfaces.

use super::{family_an, family_bg, gale, verified, GeneratedPackage, Manifest, NamedSurface, SurfaceExpectation};
use crate::coords::{haken_sum, validate_coordinates, NormalCoordinates};
use crate::error::{Error, Result};
use crate::tri::Triangulation;

pub const ONE_TET_S3: &str = "\
# one tetrahedron, two face pairs, two vertices, 3-sphere
tri 1
0: 0(013) 0(012) 0(123) 0(023)
";

/// The link of the degree four edge: a single quadrilateral.
pub const ONE_TET_TORUS: &str = "\
surface std 1
0: 0 0 0 0 ; 1 0 0
";

pub const EX_GENUS3: &str = "\
# 3-sphere with a genus 3 vertex surface made of two quadrilaterals
tri 6
0: 0(301) 0(120) 2(023) 1(123)
1: 3(012) 2(103) 2(123) 0(123)
2: 4(012) 1(103) 0(023) 1(023)
3: 1(012) 5(013) 4(123) 4(023)
4: 2(012) 5(203) 3(123) 3(023)
5: 5(231) 3(013) 4(103) 5(201)
";

pub const EX_GENUS2: &str = "\
# 0-efficient 3-sphere with a genus 2 surface made of two quadrilaterals
tri 4
0: 3(012) 1(013) 2(023) 1(123)
1: 3(013) 0(013) 2(013) 0(123)
2: 3(231) 1(023) 0(023) 3(023)
3: 0(012) 1(012) 2(123) 2(201)
";

pub const EX_BALL: &str = "\
# 3-ball containing a twice punctured torus with one quadrilateral
tri 4
0: 0(013) 0(012) bdy 1(123)
1: 3(012) 3(013) 2(023) 0(123)
2: 2(013) 2(012) 1(023) bdy
3: 1(012) 1(013) 3(312) 3(230)
";

pub const EX_HAKEN: &str = "\
# S2 x S1 with the compatible surfaces s1 and s2
tri 8
0: 3(012) 1(013) 2(023) 1(123)
1: 4(132) 0(013) 4(023) 0(123)
2: 3(032) 5(013) 0(023) 3(321)
3: 0(012) 6(013) 2(021) 2(321)
4: 7(120) 7(013) 1(023) 1(021)
5: 6(032) 2(013) 6(021) 7(320)
6: 5(032) 3(013) 5(021) 7(123)
7: 4(201) 4(013) 5(321) 6(123)
";

/// One-quadrilateral non-orientable surface of non-orientable genus 4.
pub const EX_HAKEN_S1: &str = "\
surface std 8
0: 0 0 0 0 ; 0 1 0
1: 1 0 1 0 ; 0 0 0
2: 0 0 0 1 ; 0 0 0
3: 0 1 0 0 ; 0 0 0
4: 1 1 1 0 ; 0 0 0
5: 0 0 1 1 ; 0 0 0
6: 0 1 1 0 ; 0 0 0
7: 1 1 1 0 ; 0 0 0
";

/// Two-quadrilateral orientable surface of genus 3.
pub const EX_HAKEN_S2: &str = "\
surface std 8
0: 0 1 0 1 ; 0 1 0
1: 1 1 1 1 ; 0 0 0
2: 0 0 0 2 ; 0 0 0
3: 0 2 0 0 ; 0 0 0
4: 1 1 1 1 ; 0 0 0
5: 0 0 0 2 ; 0 0 0
6: 0 2 0 0 ; 0 0 0
7: 1 1 0 0 ; 1 0 0
";

pub const EX_TORUS_BUNDLE: &str = "\
# minimal trivial torus bundle over the circle
tri 6
0: 4(012) 3(013) 2(023) 1(123)
1: 3(320) 4(230) 5(023) 0(123)
2: 3(231) 4(321) 0(023) 5(123)
3: 5(103) 0(013) 1(210) 2(201)
4: 0(012) 5(102) 1(301) 2(310)
5: 4(103) 3(102) 1(023) 2(123)
";

pub const EX_NONORIENTABLE: &str = "\
# S2 x S1 containing a one-quadrilateral surface of Euler characteristic -2
tri 5
0: 0(013) 0(012) 2(023) 1(123)
1: 4(012) 4(013) 3(023) 0(123)
2: 4(230) 4(231) 0(023) 3(123)
3: 3(013) 3(012) 1(023) 2(123)
4: 1(012) 1(013) 2(201) 2(301)
";

/// Closed genus 3 vertex surface with two quadrilaterals.
pub const EX_GENUS3_SURFACE: &str = "\
surface std 6
0: 1 1 0 0 ; 1 0 0
1: 0 2 0 0 ; 0 0 0
2: 2 0 0 0 ; 0 0 0
3: 0 2 0 0 ; 0 0 0
4: 2 0 0 0 ; 0 0 0
5: 0 1 1 0 ; 0 0 1
";

/// Genus 2 quad vertex surface with two quadrilaterals, lifted.
pub const EX_GENUS2_SURFACE: &str = "\
surface std 4
0: 0 0 2 0 ; 0 0 0
1: 0 0 2 0 ; 0 0 0
2: 0 1 1 0 ; 0 0 1
3: 0 0 1 1 ; 1 0 0
";

/// Twice punctured torus with one quadrilateral.
pub const EX_BALL_SURFACE: &str = "\
surface std 4
0: 0 0 2 2 ; 0 0 0
1: 0 0 2 2 ; 0 0 0
2: 0 0 2 2 ; 0 0 0
3: 0 0 1 1 ; 1 0 0
";

/// Torus with two quadrilaterals.
pub const EX_TORUS_BUNDLE_SURFACE: &str = "\
surface std 6
0: 0 0 0 0 ; 0 1 0
1: 0 0 1 0 ; 0 0 0
2: 0 0 0 1 ; 0 0 0
3: 1 0 0 0 ; 0 0 0
4: 0 1 0 0 ; 0 0 0
5: 0 0 0 0 ; 0 0 1
";

/// Non-orientable surface of Euler characteristic -2 with one quadrilateral.
pub const EX_NONORIENTABLE_SURFACE: &str = "\
surface std 5
0: 0 0 1 1 ; 0 0 0
1: 0 0 1 1 ; 0 0 0
2: 0 0 1 1 ; 0 0 0
3: 0 0 1 1 ; 0 0 0
4: 0 0 0 0 ; 1 0 0
";

pub const FIXTURE_NAMES: [&str; 10] = [
    "s3-one-tet",
    "bg-2",
    "gale-8",
    "s3-genus3",
    "s3-genus2",
    "an-3",
    "ball",
    "haken-sum",
    "torus-bundle",
    "nonorientable",
];

/// Reads a standard vector, permuting its quad columns if the printed
/// order fails the matching equations. Returns the order that validated.
pub fn interpret_quad_order(tri: &Triangulation, text: &str) -> Result<(NormalCoordinates, [usize; 3])> {
    let x = NormalCoordinates::parse(text)?;
    const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for order in ORDERS {
        let mut y = x.clone();
        for t in 0..x.tetrahedra() {
            for k in 0..3 {
                y.values[7 * t + 4 + order[k]] = x.values[7 * t + 4 + k];
            }
        }
        if validate_coordinates(tri, &y)?.ok() {
            return Ok((y, order));
        }
    }
    Err(Error::MatchingViolated("no quad order validates".into()))
}

fn named(name: &str, text: &str) -> Result<NamedSurface> {
    Ok(NamedSurface { name: name.into(), coords: NormalCoordinates::parse(text)? })
}

fn expect(name: &str) -> SurfaceExpectation {
    SurfaceExpectation { name: name.into(), ..Default::default() }
}

fn package(name: &str, table: &str, surfaces: Vec<NamedSurface>, manifest: Manifest) -> Result<GeneratedPackage> {
    verified(GeneratedPackage {
        name: name.into(),
        triangulation: Triangulation::parse(table)?,
        surfaces,
        manifest,
        frame: None,
        census: None,
        notes: Vec::new(),
    })
}

/// A worked example by name (see [`FIXTURE_NAMES`]).
pub fn fixture(name: &str) -> Result<GeneratedPackage> {
    let closed_sphere = |tetrahedra| Manifest {
        tetrahedra,
        h1_rank: Some(0),
        h1_torsion_free: Some(true),
        orientable: Some(true),
        boundary_genera: Some(Vec::new()),
        ..Default::default()
    };
    let mut pkg = match name {
        "s3-one-tet" => package(
            name,
            ONE_TET_S3,
            vec![named("torus", ONE_TET_TORUS)?],
            Manifest {
                vertices: Some(2),
                surfaces: vec![SurfaceExpectation {
                    genus: Some(1),
                    quads: Some(1),
                    triangles: Some(0),
                    vertices: Some(1),
                    ..expect("torus")
                }],
                ..closed_sphere(1)
            },
        )?,
        "bg-2" => family_bg(2)?,
        "gale-8" => gale(8)?,
        "s3-genus3" => package(
            name,
            EX_GENUS3,
            vec![named("genus3", EX_GENUS3_SURFACE)?],
            Manifest {
                surfaces: vec![SurfaceExpectation {
                    genus: Some(3),
                    quads: Some(2),
                    orientable: Some(true),
                    boundary: Some(0),
                    connected: Some(true),
                    ..expect("genus3")
                }],
                ..closed_sphere(6)
            },
        )?,
        "s3-genus2" => package(
            name,
            EX_GENUS2,
            vec![named("genus2", EX_GENUS2_SURFACE)?],
            Manifest {
                surfaces: vec![SurfaceExpectation {
                    genus: Some(2),
                    quads: Some(2),
                    orientable: Some(true),
                    boundary: Some(0),
                    connected: Some(true),
                    ..expect("genus2")
                }],
                ..closed_sphere(4)
            },
        )?,
        "an-3" => family_an(3)?,
        "ball" => package(
            name,
            EX_BALL,
            vec![named("punctured-torus", EX_BALL_SURFACE)?],
            Manifest {
                tetrahedra: 4,
                h1_rank: Some(0),
                h1_torsion_free: Some(true),
                orientable: Some(true),
                boundary_genera: Some(vec![0]),
                surfaces: vec![SurfaceExpectation {
                    genus: Some(1),
                    quads: Some(1),
                    boundary: Some(2),
                    orientable: Some(true),
                    connected: Some(true),
                    ..expect("punctured-torus")
                }],
                ..Default::default()
            },
        )?,
        "haken-sum" => {
            let tri = Triangulation::parse(EX_HAKEN)?;
            let (s1, o1) = interpret_quad_order(&tri, EX_HAKEN_S1)?;
            let (s2, o2) = interpret_quad_order(&tri, EX_HAKEN_S2)?;
            let sum = haken_sum(&tri, &[(2, s1.clone()), (1, s2.clone())])?;
            let mut pkg = verified(GeneratedPackage {
                name: name.into(),
                triangulation: tri,
                surfaces: vec![
                    NamedSurface { name: "s1".into(), coords: s1 },
                    NamedSurface { name: "s2".into(), coords: s2 },
                    NamedSurface { name: "combined".into(), coords: sum },
                ],
                manifest: Manifest {
                    tetrahedra: 8,
                    h1_rank: Some(1),
                    h1_torsion_free: Some(true),
                    orientable: Some(true),
                    boundary_genera: Some(Vec::new()),
                    surfaces: vec![
                        SurfaceExpectation {
                            genus: Some(4),
                            chi: Some(-2),
                            quads: Some(1),
                            orientable: Some(false),
                            ..expect("s1")
                        },
                        SurfaceExpectation {
                            genus: Some(3),
                            quads: Some(2),
                            orientable: Some(true),
                            ..expect("s2")
                        },
                        SurfaceExpectation {
                            genus: Some(5),
                            quads: Some(4),
                            triangles: Some(48),
                            orientable: Some(true),
                            connected: Some(true),
                            ..expect("combined")
                        },
                    ],
                    ..Default::default()
                },
                frame: None,
                census: None,
                notes: Vec::new(),
            })?;
            pkg.notes.push(format!("quad column order for s1: {o1:?}, for s2: {o2:?}"));
            pkg
        }
        "torus-bundle" => package(
            name,
            EX_TORUS_BUNDLE,
            vec![named("torus", EX_TORUS_BUNDLE_SURFACE)?],
            Manifest {
                tetrahedra: 6,
                h1_rank: Some(3),
                h1_torsion_free: Some(true),
                orientable: Some(true),
                boundary_genera: Some(Vec::new()),
                surfaces: vec![SurfaceExpectation {
                    genus: Some(1),
                    quads: Some(2),
                    orientable: Some(true),
                    connected: Some(true),
                    ..expect("torus")
                }],
                ..Default::default()
            },
        )?,
        "nonorientable" => package(
            name,
            EX_NONORIENTABLE,
            vec![named("nonorientable", EX_NONORIENTABLE_SURFACE)?],
            Manifest {
                tetrahedra: 5,
                h1_rank: Some(1),
                h1_torsion_free: Some(true),
                orientable: Some(true),
                boundary_genera: Some(Vec::new()),
                surfaces: vec![SurfaceExpectation {
                    chi: Some(-2),
                    quads: Some(1),
                    orientable: Some(false),
                    ..expect("nonorientable")
                }],
                ..Default::default()
            },
        )?,
        _ => return Err(Error::InvalidInput(format!("unknown fixture {name}"))),
    };
    pkg.name = name.into();
    Ok(pkg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::System;

    #[test]
    fn every_fixture_loads() {
        for name in FIXTURE_NAMES {
            let p = fixture(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(p.name, name);
        }
        assert!(fixture("nowhere").is_err());
    }

    #[test]
    fn haken_vectors_use_the_default_order() {
        let p = fixture("haken-sum").unwrap();
        assert!(p.notes[0].contains("[0, 1, 2]"));
        assert_eq!(p.surface("s1").unwrap().system, System::Standard);
    }
}
