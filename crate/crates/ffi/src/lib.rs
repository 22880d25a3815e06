//! C ABI over `metric_lines`.
//!
//! Graphs are opaque `MlGraph` handles created by `ml_graph_from_*` and
//! released with `ml_graph_free`. Every function returns an `MlStatus`;
//! results go through out-pointers. Strings returned to the caller are
//! NUL-terminated, heap-allocated and released with `ml_string_free`.
//! After a non-OK status, `ml_last_error_message` describes the failure
//! on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use metric_lines::classes::{bridges, is_biconnected, is_chordal, is_lc_member};
use metric_lines::graph::{parse_graph, to_graph6, Family, Graph, PartSizes};
use metric_lines::lines::line_system;
use metric_lines::metric::{apsp, diameter};
use metric_lines::verify::{check_properties, enumerate_connected};
use metric_lines::Error;

/// Opaque graph handle.
pub struct MlGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    TooLarge = 5,
    Disconnected = 6,
    TooFewVertices = 7,
    Internal = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> MlStatus {
    match e {
        Error::Graph6(_) | Error::EdgeList(_) | Error::Rotation(_) | Error::Loop(_) | Error::DuplicateEdge(..) => {
            MlStatus::Parse
        }
        Error::TooManyVertices(..) | Error::EnumerationTooLarge { .. } | Error::CanonicalTooLarge { .. } => {
            MlStatus::TooLarge
        }
        Error::Disconnected => MlStatus::Disconnected,
        Error::TooFewVertices => MlStatus::TooFewVertices,
        Error::Io(_) => MlStatus::Internal,
        _ => MlStatus::InvalidArgument,
    }
}

struct Fail(MlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(MlStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, turning errors and panics into a status and the thread's
/// last-error message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            MlStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MlStatus::Internal
        }
    }
}

unsafe fn graph_ref<'a>(g: *const MlGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(MlStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(MlStatus::Internal, "string contains NUL".into()))?;
    write_out(out, c.into_raw())
}

unsafe fn write_graph(out: *mut *mut MlGraph, g: Graph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(MlGraph { inner: g })));
    Ok(())
}

/// Parses graph6 or an edge list "n; u v; ...".
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ml_graph_from_graph6(text: *const c_char, out: *mut *mut MlGraph) -> MlStatus {
    guard(|| {
        let g = parse_graph(str_arg(text, "text")?)?;
        write_graph(out, g)
    })
}

/// Builds a family member. `k` = 0 means no clique size; `parts` may be
/// null when `parts_len` is 0.
///
/// # Safety
/// `name` must be NUL-terminated, `parts` must point to `parts_len`
/// values, `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ml_graph_from_family(
    name: *const c_char,
    k: usize,
    parts: *const usize,
    parts_len: usize,
    out: *mut *mut MlGraph,
) -> MlStatus {
    guard(|| {
        let family = Family::parse(str_arg(name, "name")?)?;
        let sizes = if parts_len == 0 {
            None
        } else if parts.is_null() {
            return Err(null("parts"));
        } else {
            Some(PartSizes::new(std::slice::from_raw_parts(parts, parts_len).to_vec())?)
        };
        let g = family.build((k > 0).then_some(k), sizes.as_ref())?;
        write_graph(out, g)
    })
}

/// # Safety
/// `g` must come from `ml_graph_from_*` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ml_graph_free(g: *mut MlGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `s` must come from this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ml_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failing call on this thread; empty after success.
/// Valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn ml_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_graph_vertex_count(g: *const MlGraph, out: *mut usize) -> MlStatus {
    guard(|| write_out(out, graph_ref(g)?.n()))
}

/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_graph_to_graph6(g: *const MlGraph, out: *mut *mut c_char) -> MlStatus {
    guard(|| write_string(out, to_graph6(graph_ref(g)?)))
}

/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_line_count(g: *const MlGraph, out: *mut usize) -> MlStatus {
    guard(|| write_out(out, line_system(graph_ref(g)?)?.count()))
}

/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_has_universal_line(g: *const MlGraph, out: *mut bool) -> MlStatus {
    guard(|| write_out(out, line_system(graph_ref(g)?)?.has_universal()))
}

/// True when the graph has a universal line or at least n lines.
///
/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_chen_chvatal_holds(g: *const MlGraph, out: *mut bool) -> MlStatus {
    guard(|| write_out(out, metric_lines::lines::chen_chvatal_holds(graph_ref(g)?)?))
}

/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_diameter(g: *const MlGraph, out: *mut u32) -> MlStatus {
    guard(|| write_out(out, diameter(&apsp(graph_ref(g)?))?))
}

/// Connected and locally connected.
///
/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_is_lc(g: *const MlGraph, out: *mut bool) -> MlStatus {
    guard(|| write_out(out, is_lc_member(graph_ref(g)?)))
}

/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_is_chordal(g: *const MlGraph, out: *mut bool) -> MlStatus {
    guard(|| write_out(out, is_chordal(graph_ref(g)?)))
}

/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_is_biconnected(g: *const MlGraph, out: *mut bool) -> MlStatus {
    guard(|| write_out(out, is_biconnected(graph_ref(g)?)))
}

/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_bridge_count(g: *const MlGraph, out: *mut usize) -> MlStatus {
    guard(|| write_out(out, bridges(graph_ref(g)?).len()))
}

/// Line system as a JSON object.
///
/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_line_system_json(g: *const MlGraph, out: *mut *mut c_char) -> MlStatus {
    guard(|| write_string(out, line_system(graph_ref(g)?)?.to_json().to_string()))
}

/// Full property report as a JSON object.
///
/// # Safety
/// `g` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ml_check_properties_json(g: *const MlGraph, out: *mut *mut c_char) -> MlStatus {
    guard(|| {
        let report = check_properties(graph_ref(g)?)?;
        let json = serde_json::to_string(&report).map_err(|e| Fail(MlStatus::Internal, e.to_string()))?;
        write_string(out, json)
    })
}

/// Connected graphs on `n` vertices up to isomorphism, one graph6 record
/// per line. `count` may be null.
///
/// # Safety
/// `out` must be writable; `count` null or writable.
#[no_mangle]
pub unsafe extern "C" fn ml_enumerate_connected(n: usize, out: *mut *mut c_char, count: *mut usize) -> MlStatus {
    guard(|| {
        let graphs = enumerate_connected(n)?;
        let mut text = String::new();
        for g in &graphs {
            text.push_str(&to_graph6(g));
            text.push('\n');
        }
        if !count.is_null() {
            count.write(graphs.len());
        }
        write_string(out, text)
    })
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn ml_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn message() -> String {
        unsafe { CStr::from_ptr(ml_last_error_message()) }.to_string_lossy().into_owned()
    }

    #[test]
    fn parse_and_query() {
        let text = CString::new("Dvw").unwrap();
        let mut g = ptr::null_mut();
        unsafe {
            assert_eq!(ml_graph_from_graph6(text.as_ptr(), &mut g), MlStatus::Ok);
            let mut n = 0;
            assert_eq!(ml_line_count(g, &mut n), MlStatus::Ok);
            assert_eq!(n, 4);
            ml_graph_free(g);
        }
    }

    #[test]
    fn null_and_errors_set_message() {
        let mut n = 0usize;
        unsafe {
            assert_eq!(ml_line_count(ptr::null(), &mut n), MlStatus::NullPointer);
        }
        assert_eq!(message(), "graph is null");
        let bad = CString::new("!!").unwrap();
        let mut g = ptr::null_mut();
        unsafe {
            assert_eq!(ml_graph_from_graph6(bad.as_ptr(), &mut g), MlStatus::Parse);
        }
        assert!(g.is_null());
        assert!(message().starts_with("graph6"));
    }

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::Disconnected), MlStatus::Disconnected);
        assert_eq!(status_of(&Error::EnumerationTooLarge { n: 9, max: 7 }), MlStatus::TooLarge);
        assert_eq!(status_of(&Error::UnknownFamily("x".into())), MlStatus::InvalidArgument);
    }
}
