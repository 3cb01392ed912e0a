use std::ffi::{CStr, CString};
use std::ptr;

use multiwheel_ffi::*;

fn from_spec(s: &str) -> *mut MwGraph {
    let c = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { mw_graph_from_spec(c.as_ptr(), &mut g) }, MwStatus::MwOk);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(mw_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn base_graph_round_trip() {
    let g = from_spec("base");
    let (mut n, mut m, mut chi) = (0usize, 0usize, 0u32);
    let (mut planar, mut critical, mut bracket) = (false, false, false);
    unsafe {
        assert_eq!(mw_graph_vertex_count(g, &mut n), MwStatus::MwOk);
        assert_eq!(mw_graph_edge_count(g, &mut m), MwStatus::MwOk);
        assert_eq!(mw_chromatic_number(g, &mut chi), MwStatus::MwOk);
        assert_eq!(mw_is_planar(g, &mut planar), MwStatus::MwOk);
        assert_eq!(mw_is_4_critical(g, &mut critical), MwStatus::MwOk);
        assert_eq!(mw_octahedral_bracket(g, &mut bracket), MwStatus::MwOk);
    }
    assert_eq!((n, m, chi, planar, critical, bracket), (7, 12, 4, true, true, true));

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { mw_graph_to_graph6(g, &mut s) }, MwStatus::MwOk);
    let g6 = unsafe { CStr::from_ptr(s) }.to_owned();
    unsafe { mw_string_free(s) };
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { mw_graph_from_graph6(g6.as_ptr(), &mut h) }, MwStatus::MwOk);
    let mut mh = 0usize;
    unsafe { mw_graph_edge_count(h, &mut mh) };
    assert_eq!(mh, 12);
    unsafe {
        mw_graph_free(g);
        mw_graph_free(h);
    }
}

#[test]
fn minor_and_verify() {
    let host = from_spec("base");
    let o = from_spec("O");
    let om = from_spec("O-");
    let (mut a, mut b) = (true, false);
    unsafe {
        assert_eq!(mw_has_minor(host, o, &mut a), MwStatus::MwOk);
        assert_eq!(mw_has_minor(host, om, &mut b), MwStatus::MwOk);
    }
    assert!(!a && b);

    let checks = CString::new("color,planar").unwrap();
    let mut json = ptr::null_mut();
    let mut pass = false;
    assert_eq!(unsafe { mw_verify_json(host, checks.as_ptr(), &mut json, &mut pass) }, MwStatus::MwOk);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
    unsafe { mw_string_free(json) };
    assert!(pass);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["identity"]["n"], 7);
    assert_eq!(v["verdicts"]["color"], true);

    let bad = CString::new("color,nope").unwrap();
    assert_eq!(unsafe { mw_verify_json(host, bad.as_ptr(), &mut json, ptr::null_mut()) }, MwStatus::MwInvalidArgument);
    assert!(last_error().contains("nope"));
    unsafe {
        mw_graph_free(host);
        mw_graph_free(o);
        mw_graph_free(om);
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    let even = CString::new("w:1rr-1rr").unwrap();
    assert_eq!(unsafe { mw_graph_from_spec(even.as_ptr(), &mut g) }, MwStatus::MwParseError);
    assert!(last_error().contains("odd"), "{}", last_error());
    assert!(g.is_null());

    assert_eq!(unsafe { mw_graph_from_spec(ptr::null(), &mut g) }, MwStatus::MwNullPointer);
    let bad = CString::new("A!").unwrap();
    assert_eq!(unsafe { mw_graph_from_graph6(bad.as_ptr(), &mut g) }, MwStatus::MwParseError);
    let mut n = 0usize;
    assert_eq!(unsafe { mw_graph_vertex_count(ptr::null(), &mut n) }, MwStatus::MwNullPointer);
    let k4 = from_spec("K4");
    assert_eq!(unsafe { mw_graph_vertex_count(k4, ptr::null_mut()) }, MwStatus::MwNullPointer);
    unsafe {
        mw_graph_free(k4);
        mw_graph_free(ptr::null_mut());
        mw_string_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(mw_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_lists_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/multiwheel.h")).unwrap();
    for f in [
        "mw_last_error",
        "mw_graph_from_spec",
        "mw_graph_from_graph6",
        "mw_graph_free",
        "mw_string_free",
        "mw_graph_to_graph6",
        "mw_chromatic_number",
        "mw_is_planar",
        "mw_is_4_critical",
        "mw_has_minor",
        "mw_octahedral_bracket",
        "mw_verify_json",
        "mw_version",
        "typedef struct MwGraph MwGraph",
        "MW_CONSTRUCT_ERROR = 4",
    ] {
        assert!(header.contains(f), "{f} missing from header");
    }
}
