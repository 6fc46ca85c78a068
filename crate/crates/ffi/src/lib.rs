//! C ABI over the `szeged` crate.
//!
//! Graphs cross the boundary as opaque `SzGraph` handles. Every fallible call
//! returns an `SzStatus`; results come back through out-pointers. Strings
//! returned by the library must be released with `sz_string_free`, handles
//! with `sz_graph_free`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use szeged::enumerate::{class_members, GraphClass, Guards};
use szeged::{canonical_key, emit_graph6, parse_graph6, Error, FamilyId, Graph, Indices};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidGraph6 = 3,
    InvalidParameter = 4,
    TooManyVertices = 5,
    VertexOutOfRange = 6,
    NotConnected = 7,
    TrivialGraph = 8,
    GuardExceeded = 9,
    Internal = 10,
}

impl From<&Error> for SzStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::TooManyVertices(_) => SzStatus::TooManyVertices,
            Error::VertexOutOfRange { .. } => SzStatus::VertexOutOfRange,
            Error::NotConnected => SzStatus::NotConnected,
            Error::TrivialGraph => SzStatus::TrivialGraph,
            Error::Graph6(_) => SzStatus::InvalidGraph6,
            Error::Guard { .. } => SzStatus::GuardExceeded,
            Error::SelfLoop(_)
            | Error::NotAnEdge(..)
            | Error::NotATree
            | Error::InvalidParameter(_) => SzStatus::InvalidParameter,
            Error::Io(_) => SzStatus::Internal,
        }
    }
}

/// Opaque graph handle.
pub struct SzGraph {
    graph: Graph,
}

/// Exact ratio `num / den`, reduced, `den > 0`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SzRatio {
    pub num: i64,
    pub den: i64,
}

/// Graph classes accepted by `sz_enumerate_count`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SzClass {
    Trees = 0,
    Unicyclic = 1,
    Bicyclic = 2,
    Connected = 3,
    Cyclic = 4,
}

fn guarded(f: impl FnOnce() -> SzStatus) -> SzStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(SzStatus::Internal)
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, SzStatus> {
    if s.is_null() {
        return Err(SzStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| SzStatus::InvalidUtf8)
}

unsafe fn put_graph(out: *mut *mut SzGraph, r: szeged::Result<Graph>) -> SzStatus {
    match r {
        Ok(graph) => {
            *out = Box::into_raw(Box::new(SzGraph { graph }));
            SzStatus::Ok
        }
        Err(e) => SzStatus::from(&e),
    }
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> SzStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            SzStatus::Ok
        }
        Err(_) => SzStatus::Internal,
    }
}

unsafe fn indices(g: *const SzGraph) -> Result<Indices, SzStatus> {
    let g = g.as_ref().ok_or(SzStatus::NullPointer)?;
    Indices::of(&g.graph).map_err(|e| SzStatus::from(&e))
}

/// Parses one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sz_graph_from_graph6(text: *const c_char, out: *mut *mut SzGraph) -> SzStatus {
    guarded(|| {
        if out.is_null() {
            return SzStatus::NullPointer;
        }
        *out = ptr::null_mut();
        match read_str(text) {
            Ok(s) => put_graph(out, parse_graph6(s)),
            Err(st) => st,
        }
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in `edges`
/// (`edges[2i]`, `edges[2i+1]`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` values (may be null when zero);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sz_graph_from_edges(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut SzGraph,
) -> SzStatus {
    guarded(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return SzStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        put_graph(out, Graph::from_edges(n, &pairs))
    })
}

/// Builds a named family member, e.g. `"lollipop:10:4"` or `"h:10:2"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sz_family_build(spec: *const c_char, out: *mut *mut SzGraph) -> SzStatus {
    guarded(|| {
        if out.is_null() {
            return SzStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let s = match read_str(spec) {
            Ok(s) => s,
            Err(st) => return st,
        };
        put_graph(out, s.parse::<FamilyId>().and_then(|id| id.build()))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sz_graph_free(g: *mut SzGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sz_graph_order(g: *const SzGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.n())
}

/// Number of edges, 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sz_graph_size(g: *const SzGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.m())
}

/// Wiener index of a connected graph.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sz_wiener(g: *const SzGraph, out: *mut u64) -> SzStatus {
    guarded(|| {
        if out.is_null() {
            return SzStatus::NullPointer;
        }
        match indices(g) {
            Ok(i) => {
                *out = i.wiener;
                SzStatus::Ok
            }
            Err(st) => st,
        }
    })
}

/// Szeged index of a connected graph.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sz_szeged(g: *const SzGraph, out: *mut u64) -> SzStatus {
    guarded(|| {
        if out.is_null() {
            return SzStatus::NullPointer;
        }
        match indices(g) {
            Ok(i) => {
                *out = i.szeged;
                SzStatus::Ok
            }
            Err(st) => st,
        }
    })
}

/// Four times the revised Szeged index (always an integer).
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sz_revised_szeged_x4(g: *const SzGraph, out: *mut u64) -> SzStatus {
    guarded(|| {
        if out.is_null() {
            return SzStatus::NullPointer;
        }
        match indices(g) {
            Ok(i) => {
                *out = i.revised_szeged_x4;
                SzStatus::Ok
            }
            Err(st) => st,
        }
    })
}

/// `Sz/W` and `Sz*/W` as exact reduced fractions.
///
/// # Safety
/// `g` must be a live handle; both out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sz_ratios(g: *const SzGraph, sz_over_w: *mut SzRatio, szstar_over_w: *mut SzRatio) -> SzStatus {
    guarded(|| {
        if sz_over_w.is_null() || szstar_over_w.is_null() {
            return SzStatus::NullPointer;
        }
        let i = match indices(g) {
            Ok(i) => i,
            Err(st) => return st,
        };
        match (i.sz_over_w(), i.szstar_over_w()) {
            (Ok(a), Ok(b)) => {
                *sz_over_w = SzRatio { num: a.num(), den: a.den() };
                *szstar_over_w = SzRatio { num: b.num(), den: b.den() };
                SzStatus::Ok
            }
            (Err(e), _) | (_, Err(e)) => SzStatus::from(&e),
        }
    })
}

/// graph6 encoding of the graph as given. Free with `sz_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sz_graph_to_graph6(g: *const SzGraph, out: *mut *mut c_char) -> SzStatus {
    guarded(|| {
        if out.is_null() {
            return SzStatus::NullPointer;
        }
        match g.as_ref() {
            Some(g) => put_string(out, emit_graph6(&g.graph)),
            None => SzStatus::NullPointer,
        }
    })
}

/// Isomorphism-invariant key (graph6 of the canonical form). Free with `sz_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sz_canonical_key(g: *const SzGraph, out: *mut *mut c_char) -> SzStatus {
    guarded(|| {
        if out.is_null() {
            return SzStatus::NullPointer;
        }
        match g.as_ref() {
            Some(g) => put_string(out, canonical_key(&g.graph).to_string()),
            None => SzStatus::NullPointer,
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of isomorphism classes of `class` on `n` vertices. Subject to the
/// default resource guards unless `override_guard` is nonzero.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sz_enumerate_count(class: SzClass, n: usize, override_guard: i32, out: *mut u64) -> SzStatus {
    guarded(|| {
        if out.is_null() {
            return SzStatus::NullPointer;
        }
        let class = match class {
            SzClass::Trees => GraphClass::Trees,
            SzClass::Unicyclic => GraphClass::Unicyclic,
            SzClass::Bicyclic => GraphClass::Bicyclic,
            SzClass::Connected => GraphClass::Connected,
            SzClass::Cyclic => GraphClass::Cyclic,
        };
        let guards = Guards::from_env().overridden(override_guard != 0);
        match class_members(class, n, &guards) {
            Ok(v) => {
                *out = v.len() as u64;
                SzStatus::Ok
            }
            Err(e) => SzStatus::from(&e),
        }
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn sz_status_message(status: SzStatus) -> *const c_char {
    let s: &'static CStr = match status {
        SzStatus::Ok => c"ok",
        SzStatus::NullPointer => c"null pointer argument",
        SzStatus::InvalidUtf8 => c"string is not valid UTF-8",
        SzStatus::InvalidGraph6 => c"malformed graph6",
        SzStatus::InvalidParameter => c"invalid parameter",
        SzStatus::TooManyVertices => c"more than 64 vertices",
        SzStatus::VertexOutOfRange => c"vertex out of range",
        SzStatus::NotConnected => c"graph is not connected",
        SzStatus::TrivialGraph => c"ratio undefined below 2 vertices",
        SzStatus::GuardExceeded => c"enumeration exceeds the resource guard",
        SzStatus::Internal => c"internal error",
    };
    s.as_ptr()
}
