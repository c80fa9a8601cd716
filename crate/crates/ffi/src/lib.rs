//! C interface to the regcut library.
//!
//! Graphs cross the boundary as opaque `RcGraph` handles created by the
//! `rc_graph_*` constructors and released with [`rc_graph_free`]. Every
//! fallible call returns an [`RcStatus`]; on failure a description is
//! available from [`rc_last_error`] until the next failing call on the same
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use regcut::extremal::{build_extremal, threshold, ExtremalSpec};
use regcut::graph::Graph;
use regcut::graph6::{from_graph6, to_graph6};
use regcut::iso::is_isomorphic;
use regcut::spectra::spectrum;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    BufferTooSmall = 4,
    Internal = 5,
}

/// Opaque graph handle.
pub struct RcGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: RcStatus, msg: impl Into<String>) -> RcStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> RcStatus) -> RcStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(RcStatus::Internal, "internal panic"))
}

fn into_handle(graph: Graph) -> *mut RcGraph {
    Box::into_raw(Box::new(RcGraph { graph }))
}

/// Last error message on this thread, or NULL. The pointer stays valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a NUL-terminated graph6 string.
///
/// # Safety
/// `text` must be NULL or a valid NUL-terminated string; `out` must be NULL
/// or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_from_graph6(text: *const c_char, out: *mut *mut RcGraph) -> RcStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(RcStatus::NullPointer, "null argument");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(RcStatus::ParseError, "graph6 text is not UTF-8");
        };
        match from_graph6(s) {
            Ok(g) => {
                *out = into_handle(g);
                RcStatus::Ok
            }
            Err(e) => fail(RcStatus::ParseError, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_free(g: *mut RcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Writes a newly allocated graph6 string to `out`; release it with
/// [`rc_string_free`].
///
/// # Safety
/// `g` must be a live handle or NULL; `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_to_graph6(g: *const RcGraph, out: *mut *mut c_char) -> RcStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            return fail(RcStatus::NullPointer, "null argument");
        }
        let s = CString::new(to_graph6(&(*g).graph)).expect("graph6 has no NUL bytes");
        *out = s.into_raw();
        RcStatus::Ok
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `g` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_order(g: *const RcGraph) -> usize {
    if g.is_null() {
        0
    } else {
        (*g).graph.order()
    }
}

/// Common degree of a regular graph; `InvalidArgument` if not regular.
///
/// # Safety
/// `g` must be a live handle or NULL; `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_regular_degree(g: *const RcGraph, out: *mut usize) -> RcStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            return fail(RcStatus::NullPointer, "null argument");
        }
        match (*g).graph.regular_degree() {
            Some(d) => {
                *out = d;
                RcStatus::Ok
            }
            None => fail(RcStatus::InvalidArgument, "graph is not regular"),
        }
    })
}

/// Builds G(d, c). `cycles` holds `n_cycles` cycle lengths for the
/// cycle-complement block; pass `n_cycles = 0` for a single cycle.
///
/// # Safety
/// `cycles` must point to `n_cycles` readable values when `n_cycles > 0`;
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_build_extremal(
    d: usize,
    c: usize,
    cycles: *const usize,
    n_cycles: usize,
    out: *mut *mut RcGraph,
) -> RcStatus {
    guard(|| {
        if out.is_null() || (n_cycles > 0 && cycles.is_null()) {
            return fail(RcStatus::NullPointer, "null argument");
        }
        let spec = if n_cycles == 0 {
            ExtremalSpec::with_default_composition(d, c)
        } else {
            ExtremalSpec::new(d, c, std::slice::from_raw_parts(cycles, n_cycles).to_vec())
        };
        match spec.and_then(|s| build_extremal(&s)) {
            Ok(g) => {
                *out = into_handle(g);
                RcStatus::Ok
            }
            Err(e) => fail(RcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Writes the adjacency eigenvalues, non-increasing, into `buf`.
/// `written` receives the number of eigenvalues; when `len` is too small
/// nothing is copied and `BufferTooSmall` is returned.
///
/// # Safety
/// `g` must be a live handle or NULL; `buf` must be valid for `len` writes;
/// `written` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_spectrum(
    g: *const RcGraph,
    buf: *mut f64,
    len: usize,
    written: *mut usize,
) -> RcStatus {
    guard(|| {
        if g.is_null() || written.is_null() {
            return fail(RcStatus::NullPointer, "null argument");
        }
        let s = match spectrum(&(*g).graph) {
            Ok(s) => s,
            Err(e) => return fail(RcStatus::InvalidArgument, e.to_string()),
        };
        *written = s.eigenvalues.len();
        if len < s.eigenvalues.len() {
            return fail(RcStatus::BufferTooSmall, format!("need {} slots", s.eigenvalues.len()));
        }
        if buf.is_null() {
            return fail(RcStatus::NullPointer, "null buffer");
        }
        ptr::copy_nonoverlapping(s.eigenvalues.as_ptr(), buf, s.eigenvalues.len());
        RcStatus::Ok
    })
}

/// Second largest adjacency eigenvalue.
///
/// # Safety
/// `g` must be a live handle or NULL; `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_lambda2(g: *const RcGraph, out: *mut f64) -> RcStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            return fail(RcStatus::NullPointer, "null argument");
        }
        match spectrum(&(*g).graph) {
            Ok(s) => {
                *out = s.lambda2;
                RcStatus::Ok
            }
            Err(e) => fail(RcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Sharp λ₂ threshold for degree `d` and its optimal branch degree.
///
/// # Safety
/// `c_star` and `value` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_threshold(d: usize, c_star: *mut usize, value: *mut f64) -> RcStatus {
    guard(|| {
        if c_star.is_null() || value.is_null() {
            return fail(RcStatus::NullPointer, "null argument");
        }
        match threshold(d) {
            Ok(t) => {
                *c_star = t.c_star;
                *value = t.value;
                RcStatus::Ok
            }
            Err(e) => fail(RcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `a` and `b` must be live handles or NULL; `out` must be NULL or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_is_isomorphic(a: *const RcGraph, b: *const RcGraph, out: *mut bool) -> RcStatus {
    guard(|| {
        if a.is_null() || b.is_null() || out.is_null() {
            return fail(RcStatus::NullPointer, "null argument");
        }
        *out = is_isomorphic(&(*a).graph, &(*b).graph);
        RcStatus::Ok
    })
}
