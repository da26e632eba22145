use std::ffi::{CStr, CString};
use std::ptr;

use normsurf_ffi::*;

const ONE_TET: &str = "tri 1\n0: 0(013) 0(012) 0(123) 0(023)\n";
const TORUS: &str = "surface std 1\n0: 0 0 0 0 ; 1 0 0\n";

fn parse(text: &str) -> *mut NsgTriangulation {
    let c = CString::new(text).unwrap();
    let mut tri = ptr::null_mut();
    assert_eq!(unsafe { nsg_triangulation_parse(c.as_ptr(), &mut tri) }, NsgStatus::Ok);
    tri
}

fn last_error() -> String {
    let p = nsg_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn parse_and_query() {
    let tri = parse(ONE_TET);
    let (mut n, mut v, mut h) = (0, 0, 9);
    let mut orientable = false;
    unsafe {
        assert_eq!(nsg_triangulation_size(tri, &mut n), NsgStatus::Ok);
        assert_eq!(nsg_triangulation_vertices(tri, &mut v), NsgStatus::Ok);
        assert_eq!(nsg_triangulation_is_orientable(tri, &mut orientable), NsgStatus::Ok);
        assert_eq!(nsg_triangulation_h1_rank(tri, &mut h), NsgStatus::Ok);
        nsg_triangulation_free(tri);
    }
    assert_eq!((n, v, h), (1, 2, 0));
    assert!(orientable);
}

#[test]
fn text_round_trip() {
    let tri = parse(ONE_TET);
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(nsg_triangulation_to_text(tri, &mut s), NsgStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        nsg_string_free(s);
        let again = parse(&text);
        let mut t2 = ptr::null_mut();
        nsg_triangulation_to_text(again, &mut t2);
        assert_eq!(CStr::from_ptr(t2).to_str().unwrap(), text);
        nsg_string_free(t2);
        nsg_triangulation_free(again);
        nsg_triangulation_free(tri);
    }
}

#[test]
fn surface_summary() {
    let tri = parse(ONE_TET);
    let text = CString::new(TORUS).unwrap();
    let mut s = ptr::null_mut();
    let mut m = NsgSummary::default();
    unsafe {
        assert_eq!(nsg_surface_parse(tri, text.as_ptr(), &mut s), NsgStatus::Ok);
        assert_eq!(nsg_surface_summary(s, &mut m), NsgStatus::Ok);
        nsg_surface_free(s);
        nsg_triangulation_free(tri);
    }
    assert_eq!((m.genus, m.quads, m.triangles, m.vertices), (1, 1, 0, 1));
    assert!(m.orientable && m.connected);
}

#[test]
fn enumeration_list() {
    let tri = parse(ONE_TET);
    let mut list = ptr::null_mut();
    let mut len = 0;
    unsafe {
        assert_eq!(nsg_enumerate(tri, NsgCoordinates::Quad, &mut list), NsgStatus::Ok);
        assert_eq!(nsg_surface_list_len(list, &mut len), NsgStatus::Ok);
        assert!(len >= 1);
        let mut s = ptr::null_mut();
        assert_eq!(nsg_surface_list_get(list, 0, &mut s), NsgStatus::Ok);
        let mut m = NsgSummary::default();
        nsg_surface_summary(s, &mut m);
        assert_eq!(m.quads, 1);
        nsg_surface_free(s);
        assert_eq!(nsg_surface_list_get(list, len, &mut s), NsgStatus::OutOfRange);
        nsg_surface_list_free(list);
        nsg_triangulation_free(tri);
    }
}

#[test]
fn generated_families() {
    let fam = CString::new("fxi").unwrap();
    let mut tri = ptr::null_mut();
    let (mut n, mut h) = (0, 0);
    unsafe {
        assert_eq!(nsg_generate(fam.as_ptr(), 2, &mut tri), NsgStatus::Ok);
        nsg_triangulation_size(tri, &mut n);
        nsg_triangulation_h1_rank(tri, &mut h);
        nsg_triangulation_free(tri);
    }
    assert_eq!((n, h), (16, 4));
    let bad = CString::new("klein").unwrap();
    assert_eq!(unsafe { nsg_generate(bad.as_ptr(), 1, &mut tri) }, NsgStatus::OutOfRange);
}

#[test]
fn errors_are_reported() {
    let garbage = CString::new("tri 2\n0: 1(012)\n").unwrap();
    let mut tri = ptr::null_mut();
    assert_eq!(unsafe { nsg_triangulation_parse(garbage.as_ptr(), &mut tri) }, NsgStatus::ParseError);
    assert!(last_error().contains("line 2"));
    assert_eq!(unsafe { nsg_triangulation_parse(ptr::null(), &mut tri) }, NsgStatus::NullArgument);
    let ok = CString::new(ONE_TET).unwrap();
    assert_eq!(unsafe { nsg_triangulation_parse(ok.as_ptr(), ptr::null_mut()) }, NsgStatus::NullArgument);

    let tri = parse(ONE_TET);
    let bad = CString::new("surface std 1\n0: 1 0 0 0 ; 1 0 0\n").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { nsg_surface_parse(tri, bad.as_ptr(), &mut s) }, NsgStatus::PreconditionFailed);
    unsafe { nsg_triangulation_free(tri) };
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/nsg.h")).unwrap();
    for name in [
        "nsg_triangulation_parse",
        "nsg_triangulation_free",
        "nsg_surface_parse",
        "nsg_surface_summary",
        "nsg_enumerate",
        "nsg_last_error",
        "NSG_STATUS_PARSE_ERROR",
        "typedef struct NsgTriangulation NsgTriangulation",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
