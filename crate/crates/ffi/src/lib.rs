//! C ABI over the `multiwheel` library.
//!
//! Graphs cross the boundary as opaque `MwGraph` handles. Every fallible call
//! returns an `MwStatus`; on failure `mw_last_error` describes the problem.
//! Strings returned by the library must be released with `mw_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use multiwheel::coloring::{certify_4_critical, chromatic_number};
use multiwheel::constructors::{octahedron, octahedron_minus, parse_spec};
use multiwheel::graph::io::{from_graph6, to_graph6};
use multiwheel::minors::{has_minor, minor_bracket};
use multiwheel::report::{verify, Check, VerifyOptions};
use multiwheel::topology::is_planar;
use multiwheel::Graph;

/// Opaque graph handle.
pub struct MwGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MwStatus {
    MwOk = 0,
    MwNullPointer = 1,
    MwInvalidUtf8 = 2,
    MwParseError = 3,
    MwConstructError = 4,
    MwInvalidArgument = 5,
    MwPanic = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: MwStatus, msg: impl AsRef<str>) -> MwStatus {
    set_error(msg.as_ref());
    status
}

/// Runs `f`, turning a panic into `MW_PANIC`.
fn guard(f: impl FnOnce() -> MwStatus) -> MwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(MwStatus::MwPanic, "internal panic"),
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, MwStatus> {
    if s.is_null() {
        return Err(fail(MwStatus::MwNullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(MwStatus::MwInvalidUtf8, "string is not UTF-8"))
}

unsafe fn graph<'a>(g: *const MwGraph) -> Result<&'a Graph, MwStatus> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| fail(MwStatus::MwNullPointer, "null graph handle"))
}

unsafe fn put<T>(out: *mut T, value: T) -> MwStatus {
    if out.is_null() {
        return fail(MwStatus::MwNullPointer, "null output pointer");
    }
    out.write(value);
    MwStatus::MwOk
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the most recent failure on this thread. Valid until the next
/// failing call on the same thread; never NULL.
#[no_mangle]
pub extern "C" fn mw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph from a spec literal such as `w:1rr-1rr-1rr` or `g:q=2`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mw_graph_from_spec(spec: *const c_char, out: *mut *mut MwGraph) -> MwStatus {
    guard(|| {
        let s = tri!(text(spec));
        let spec = tri!(parse_spec(s).map_err(|e| fail(MwStatus::MwParseError, e.to_string())));
        let built = tri!(spec.build().map_err(|e| fail(MwStatus::MwConstructError, e.to_string())));
        put(out, Box::into_raw(Box::new(MwGraph(built.graph))))
    })
}

/// Decodes a graph6 string.
///
/// # Safety
/// `g6` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mw_graph_from_graph6(g6: *const c_char, out: *mut *mut MwGraph) -> MwStatus {
    guard(|| {
        let s = tri!(text(g6));
        let g = tri!(from_graph6(s.trim()).map_err(|e| fail(MwStatus::MwParseError, e.to_string())));
        put(out, Box::into_raw(Box::new(MwGraph(g))))
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mw_graph_free(g: *mut MwGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mw_graph_vertex_count(g: *const MwGraph, out: *mut usize) -> MwStatus {
    guard(|| put(out, tri!(graph(g)).vertex_count()))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mw_graph_edge_count(g: *const MwGraph, out: *mut usize) -> MwStatus {
    guard(|| put(out, tri!(graph(g)).edge_count()))
}

/// graph6 encoding; free with `mw_string_free`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mw_graph_to_graph6(g: *const MwGraph, out: *mut *mut c_char) -> MwStatus {
    guard(|| {
        let s = to_graph6(tri!(graph(g)));
        put(out, into_c(s))
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mw_chromatic_number(g: *const MwGraph, out: *mut u32) -> MwStatus {
    guard(|| put(out, chromatic_number(tri!(graph(g))) as u32))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mw_is_planar(g: *const MwGraph, out: *mut bool) -> MwStatus {
    guard(|| put(out, is_planar(tri!(graph(g))).is_planar()))
}

/// Chromatic number 4 and every edge and vertex deletion 3-colorable.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mw_is_4_critical(g: *const MwGraph, out: *mut bool) -> MwStatus {
    guard(|| put(out, certify_4_critical(tri!(graph(g))).is_4_critical()))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mw_has_minor(host: *const MwGraph, pattern: *const MwGraph, out: *mut bool) -> MwStatus {
    guard(|| {
        let h = tri!(graph(host));
        let p = tri!(graph(pattern));
        put(out, has_minor(h, p).is_some())
    })
}

/// Whether the octahedron minus an edge is a minor of `g` and the octahedron is not.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mw_octahedral_bracket(g: *const MwGraph, out: *mut bool) -> MwStatus {
    guard(|| put(out, minor_bracket(tri!(graph(g)), &octahedron_minus(), &octahedron())))
}

/// Verification bundle as JSON. `checks` is a comma-separated subset of
/// `color,critical,planar,quad,bracket`; NULL means all of them. `all_pass`
/// may be NULL.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mw_verify_json(
    g: *const MwGraph,
    checks: *const c_char,
    out: *mut *mut c_char,
    all_pass: *mut bool,
) -> MwStatus {
    guard(|| {
        let g = tri!(graph(g));
        let checks: Vec<Check> = if checks.is_null() {
            Check::ALL.to_vec()
        } else {
            let s = tri!(text(checks));
            tri!(s
                .split(',')
                .map(|c| c.trim().parse::<Check>())
                .collect::<Result<_, _>>()
                .map_err(|e| fail(MwStatus::MwInvalidArgument, e)))
        };
        let opts = VerifyOptions { spec: None, checks: &checks, embedding: None, contractions: false, timestamp: false };
        let bundle = verify(g, &opts);
        let json = serde_json::to_string(&bundle).expect("bundle serializes");
        if !all_pass.is_null() {
            all_pass.write(bundle.all_pass());
        }
        put(out, into_c(json))
    })
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn mw_version() -> *const c_char {
    static V: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    V.as_ptr().cast()
}
