//! C interface to normsurf.
//!
//! Every function returns an [`NsgStatus`]; results come back through out
//! pointers. Handles are opaque and released with the matching `_free`
//! function. After a failure [`nsg_last_error`] describes it until the
//! next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use normsurf::certificates::enumerated;
use normsurf::classify::classify_with;
use normsurf::coords::{lift_with, validate_with, NormalCoordinates, System};
use normsurf::generators;
use normsurf::homology::homology_with;
use normsurf::surface::{build_surface, TopologySummary};
use normsurf::{Error, Skeleton, Triangulation};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NsgStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    PreconditionFailed = 4,
    OutOfRange = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NsgCoordinates {
    Standard = 0,
    Quad = 1,
}

/// A parsed triangulation with its skeleton.
pub struct NsgTriangulation {
    tri: Triangulation,
    sk: Skeleton,
}

/// A normal surface in standard coordinates with its rebuilt topology.
pub struct NsgSurface {
    coords: NormalCoordinates,
    summary: TopologySummary,
}

pub struct NsgSurfaceList {
    surfaces: Vec<NsgSurface>,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NsgSummary {
    pub euler_characteristic: i64,
    pub genus: i64,
    pub orientable: bool,
    pub connected: bool,
    pub boundary_components: usize,
    pub quads: usize,
    pub triangles: usize,
    /// Surface vertices, counted in the normal cell structure.
    pub vertices: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: NsgStatus, msg: impl Into<String>) -> NsgStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> NsgStatus {
    let status = match e {
        Error::Syntax { .. }
        | Error::NonInvolutive { .. }
        | Error::SelfGluedFace { .. }
        | Error::IndexOutOfRange { .. }
        | Error::DimensionMismatch { .. }
        | Error::InvalidInput(_) => NsgStatus::ParseError,
        Error::Internal(_) => NsgStatus::Internal,
        _ => NsgStatus::PreconditionFailed,
    };
    fail(status, e.to_string())
}

unsafe fn text_arg<'a>(p: *const c_char) -> Result<&'a str, NsgStatus> {
    if p.is_null() {
        return Err(fail(NsgStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(NsgStatus::InvalidUtf8, "argument is not UTF-8"))
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! non_null {
    ($($p:ident),*) => {
        $(if $p.is_null() {
            return fail(NsgStatus::NullArgument, concat!(stringify!($p), " is null"));
        })*
    };
}

fn surface_from(tri: &NsgTriangulation, coords: NormalCoordinates) -> Result<NsgSurface, NsgStatus> {
    let summary = build_surface(&tri.tri, &tri.sk, &coords).map_err(from_error)?.summary();
    Ok(NsgSurface { coords, summary })
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the thread.
#[no_mangle]
pub extern "C" fn nsg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses the gluing table text format.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nsg_triangulation_parse(text: *const c_char, out: *mut *mut NsgTriangulation) -> NsgStatus {
    non_null!(out);
    let text = try_status!(text_arg(text));
    let tri = try_status!(Triangulation::parse(text).map_err(from_error));
    let sk = Skeleton::compute(&tri);
    *out = Box::into_raw(Box::new(NsgTriangulation { tri, sk }));
    NsgStatus::Ok
}

/// Builds a member of a family: "an", "bg", "gale", "fxi" take `param`,
/// "s2xi" ignores it.
///
/// # Safety
/// `family` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nsg_generate(
    family: *const c_char,
    param: usize,
    out: *mut *mut NsgTriangulation,
) -> NsgStatus {
    non_null!(out);
    let family = try_status!(text_arg(family));
    let pkg = match family {
        "an" => generators::family_an(param),
        "bg" => generators::family_bg(param),
        "gale" => generators::gale(param),
        "fxi" => generators::inflate_fxi(param),
        "s2xi" => generators::s2xi(),
        other => return fail(NsgStatus::OutOfRange, format!("unknown family {other}")),
    };
    let tri = try_status!(pkg.map_err(from_error)).triangulation;
    let sk = Skeleton::compute(&tri);
    *out = Box::into_raw(Box::new(NsgTriangulation { tri, sk }));
    NsgStatus::Ok
}

/// # Safety
/// `tri` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn nsg_triangulation_free(tri: *mut NsgTriangulation) {
    if !tri.is_null() {
        drop(Box::from_raw(tri));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn nsg_triangulation_size(tri: *const NsgTriangulation, out: *mut usize) -> NsgStatus {
    non_null!(tri, out);
    *out = (*tri).tri.size();
    NsgStatus::Ok
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn nsg_triangulation_vertices(tri: *const NsgTriangulation, out: *mut usize) -> NsgStatus {
    non_null!(tri, out);
    *out = (*tri).sk.num_vertices;
    NsgStatus::Ok
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn nsg_triangulation_is_orientable(tri: *const NsgTriangulation, out: *mut bool) -> NsgStatus {
    non_null!(tri, out);
    let t = &*tri;
    *out = classify_with(&t.tri, &t.sk).orientable;
    NsgStatus::Ok
}

/// Rank of the first homology group.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn nsg_triangulation_h1_rank(tri: *const NsgTriangulation, out: *mut usize) -> NsgStatus {
    non_null!(tri, out);
    let t = &*tri;
    *out = homology_with(&t.tri, &t.sk).betti[1];
    NsgStatus::Ok
}

/// Serialized gluing table, released with [`nsg_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn nsg_triangulation_to_text(tri: *const NsgTriangulation, out: *mut *mut c_char) -> NsgStatus {
    non_null!(tri, out);
    *out = CString::new((*tri).tri.to_text()).expect("ascii text").into_raw();
    NsgStatus::Ok
}

/// Parses a coordinate file against `tri`; quad vectors are lifted.
///
/// # Safety
/// `text` must be a nul-terminated string and the other pointers valid.
#[no_mangle]
pub unsafe extern "C" fn nsg_surface_parse(
    tri: *const NsgTriangulation,
    text: *const c_char,
    out: *mut *mut NsgSurface,
) -> NsgStatus {
    non_null!(tri, out);
    let t = &*tri;
    let text = try_status!(text_arg(text));
    let x = try_status!(NormalCoordinates::parse(text).map_err(from_error));
    if x.tetrahedra() != t.tri.size() {
        return from_error(Error::DimensionMismatch { expected: t.tri.size(), found: x.tetrahedra() });
    }
    let x = match x.system {
        System::Quad => try_status!(lift_with(&t.tri, &t.sk, &x).map_err(from_error)),
        System::Standard => {
            let report = try_status!(validate_with(&t.tri, &t.sk, &x).map_err(from_error));
            if !report.ok() {
                return fail(NsgStatus::PreconditionFailed, "coordinates are not an admissible solution");
            }
            x
        }
    };
    *out = Box::into_raw(Box::new(try_status!(surface_from(t, x))));
    NsgStatus::Ok
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn nsg_surface_free(s: *mut NsgSurface) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn nsg_surface_summary(s: *const NsgSurface, out: *mut NsgSummary) -> NsgStatus {
    non_null!(s, out);
    let m = &(*s).summary;
    *out = NsgSummary {
        euler_characteristic: m.chi,
        genus: m.genus,
        orientable: m.orientable,
        connected: m.connected(),
        boundary_components: m.b,
        quads: m.q,
        triangles: m.triangles,
        vertices: m.v,
    };
    NsgStatus::Ok
}

/// Standard coordinates in the text format, released with [`nsg_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn nsg_surface_to_text(s: *const NsgSurface, out: *mut *mut c_char) -> NsgStatus {
    non_null!(s, out);
    *out = CString::new((*s).coords.to_text()).expect("ascii text").into_raw();
    NsgStatus::Ok
}

/// Admissible vertex normal surfaces; quad solutions are lifted.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn nsg_enumerate(
    tri: *const NsgTriangulation,
    coords: NsgCoordinates,
    out: *mut *mut NsgSurfaceList,
) -> NsgStatus {
    non_null!(tri, out);
    let t = &*tri;
    let system = match coords {
        NsgCoordinates::Standard => System::Standard,
        NsgCoordinates::Quad => System::Quad,
    };
    let found = try_status!(enumerated(&t.tri, &t.sk, system).map_err(from_error));
    let surfaces = found
        .into_iter()
        .map(|e| NsgSurface { coords: e.coords, summary: e.summary })
        .collect();
    *out = Box::into_raw(Box::new(NsgSurfaceList { surfaces }));
    NsgStatus::Ok
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn nsg_surface_list_len(list: *const NsgSurfaceList, out: *mut usize) -> NsgStatus {
    non_null!(list, out);
    *out = (*list).surfaces.len();
    NsgStatus::Ok
}

/// Copies entry `i` into a new surface handle.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn nsg_surface_list_get(
    list: *const NsgSurfaceList,
    i: usize,
    out: *mut *mut NsgSurface,
) -> NsgStatus {
    non_null!(list, out);
    let list = &*list;
    let Some(s) = list.surfaces.get(i) else {
        return fail(NsgStatus::OutOfRange, format!("index {i} out of range"));
    };
    *out = Box::into_raw(Box::new(NsgSurface { coords: s.coords.clone(), summary: s.summary.clone() }));
    NsgStatus::Ok
}

/// # Safety
/// `list` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn nsg_surface_list_free(list: *mut NsgSurfaceList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn nsg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
