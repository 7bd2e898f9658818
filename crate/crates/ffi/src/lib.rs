//! C ABI over `critgroup`.
//!
//! Every fallible function returns a [`CgStatus`] and writes its result
//! through an out pointer. On failure `cg_last_error_message` describes the
//! error for the calling thread. Objects are opaque handles released with
//! their `_free` function; strings returned to the caller are released with
//! [`cg_string_free`]. Big integers cross the boundary as decimal strings.
//! Vertex indices are zero-based.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use critgroup::collapsed::{collapsed_values, collapsed_values_full};
use critgroup::error::{Error, ErrorKind};
use critgroup::graph::Multigraph;
use critgroup::group::{GroupStructure, LaplacianCokernel, Marking};
use critgroup::linalg::IntMatrix;
use libc::c_char;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed input or a violated precondition.
    Invalid = 3,
    /// Well-formed input the operation cannot handle, e.g. a disconnected graph.
    Infeasible = 4,
    /// A value does not fit the C type requested.
    Overflow = 5,
    Panic = 6,
}

pub struct CgGraph(Multigraph);
pub struct CgMatrix(IntMatrix);
pub struct CgGroup(GroupStructure);
pub struct CgMarking(Marking);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: CgStatus, msg: impl Into<String>) -> CgStatus {
    set_error(msg.into());
    status
}

fn lib_error(e: Error) -> CgStatus {
    let status = match e.kind() {
        ErrorKind::Invalid => CgStatus::Invalid,
        ErrorKind::Infeasible => CgStatus::Infeasible,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into [`CgStatus::Panic`].
fn guard(f: impl FnOnce() -> CgStatus) -> CgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(CgStatus::Panic, msg)
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, CgStatus> {
    if s.is_null() {
        return Err(fail(CgStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(CgStatus::InvalidUtf8, "input is not UTF-8"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, CgStatus> {
    p.as_ref().ok_or_else(|| fail(CgStatus::NullPointer, "null handle"))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn put<T>(out: *mut T, value: T) -> CgStatus {
    if out.is_null() {
        return fail(CgStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    CgStatus::Ok
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the last failure on this thread, or NULL. Valid until the
/// next call into this library from the same thread; do not free.
#[no_mangle]
pub extern "C" fn cg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` is NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the graph text format (`n`, `e` lines, one-based in the text).
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_graph_parse(src: *const c_char, out: *mut *mut CgGraph) -> CgStatus {
    guard(|| {
        let g: Multigraph = match tri!(text(src)).parse() {
            Ok(g) => g,
            Err(e) => return lib_error(e),
        };
        put(out, Box::into_raw(Box::new(CgGraph(g))))
    })
}

/// # Safety
/// `g` is a valid graph handle.
#[no_mangle]
pub unsafe extern "C" fn cg_graph_vertex_count(g: *const CgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// The graph in the text format. Free with [`cg_string_free`].
///
/// # Safety
/// `g` is a valid graph handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_graph_to_text(g: *const CgGraph, out: *mut *mut c_char) -> CgStatus {
    guard(|| {
        let g = tri!(handle(g));
        put(out, c_string(g.0.to_text()))
    })
}

/// # Safety
/// `g` is NULL or a handle from [`cg_graph_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cg_graph_free(g: *mut CgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Parses the matrix text format (`m rows cols`, then rows).
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_matrix_parse(src: *const c_char, out: *mut *mut CgMatrix) -> CgStatus {
    guard(|| {
        let m: IntMatrix = match tri!(text(src)).parse() {
            Ok(m) => m,
            Err(e) => return lib_error(e),
        };
        put(out, Box::into_raw(Box::new(CgMatrix(m))))
    })
}

/// Laplacian of `g`: `D - A` when `psd` is true, `A - D` otherwise.
///
/// # Safety
/// `g` is a valid graph handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_graph_laplacian(g: *const CgGraph, psd: bool, out: *mut *mut CgMatrix) -> CgStatus {
    guard(|| {
        let g = tri!(handle(g));
        let m = if psd { g.0.psd_laplacian() } else { g.0.laplacian() };
        put(out, Box::into_raw(Box::new(CgMatrix(m))))
    })
}

/// # Safety
/// `m` is NULL or a matrix handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cg_matrix_free(m: *mut CgMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Critical group of a connected graph: the torsion part of the Laplacian
/// cokernel.
///
/// # Safety
/// `g` is a valid graph handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_critical_group(g: *const CgGraph, out: *mut *mut CgGroup) -> CgStatus {
    guard(|| {
        let g = tri!(handle(g));
        match critgroup::group::critical_group(&g.0) {
            Ok(s) => put(out, Box::into_raw(Box::new(CgGroup(GroupStructure { free_rank: 0, ..s })))),
            Err(e) => lib_error(e),
        }
    })
}

/// Number of invariant factors (all greater than 1).
///
/// # Safety
/// `grp` is a valid group handle.
#[no_mangle]
pub unsafe extern "C" fn cg_group_factor_count(grp: *const CgGroup) -> usize {
    grp.as_ref().map_or(0, |g| g.0.torsion_factors.len())
}

/// Invariant factor `k` as a decimal string.
///
/// # Safety
/// `grp` is a valid group handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_group_factor(grp: *const CgGroup, k: usize, out: *mut *mut c_char) -> CgStatus {
    guard(|| {
        let g = tri!(handle(grp));
        match g.0.torsion_factors.get(k) {
            Some(f) => put(out, c_string(f.to_string())),
            None => fail(CgStatus::Invalid, format!("factor index {k} out of range")),
        }
    })
}

/// Group order (the number of spanning trees) as a decimal string.
///
/// # Safety
/// `grp` is a valid group handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_group_order(grp: *const CgGroup, out: *mut *mut c_char) -> CgStatus {
    guard(|| {
        let g = tri!(handle(grp));
        put(out, c_string(g.0.order().to_string()))
    })
}

/// Structure such as `Z/4 x Z/4`.
///
/// # Safety
/// `grp` is a valid group handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_group_to_string(grp: *const CgGroup, out: *mut *mut c_char) -> CgStatus {
    guard(|| {
        let g = tri!(handle(grp));
        put(out, c_string(g.0.to_string()))
    })
}

/// # Safety
/// `grp` is NULL or a group handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cg_group_free(grp: *mut CgGroup) {
    if !grp.is_null() {
        drop(Box::from_raw(grp));
    }
}

/// Order of the class of `e_i - e_j` as a decimal string.
///
/// # Safety
/// `g` is a valid graph handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_pair_order(g: *const CgGraph, i: usize, j: usize, out: *mut *mut c_char) -> CgStatus {
    guard(|| {
        let g = tri!(handle(g));
        match critgroup::group::pair_order(&g.0, i, j) {
            Ok(h) => put(out, c_string(h.to_string())),
            Err(e) => lib_error(e),
        }
    })
}

/// Normalized marking of the pair `(i, j)`.
///
/// # Safety
/// `g` is a valid graph handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_marking(g: *const CgGraph, i: usize, j: usize, out: *mut *mut CgMarking) -> CgStatus {
    guard(|| {
        let g = tri!(handle(g));
        match LaplacianCokernel::new(&g.0).and_then(|lc| lc.marking(i, j)) {
            Ok(mk) => put(out, Box::into_raw(Box::new(CgMarking(mk)))),
            Err(e) => lib_error(e),
        }
    })
}

/// # Safety
/// `mk` is a valid marking handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_marking_order(mk: *const CgMarking, out: *mut *mut c_char) -> CgStatus {
    guard(|| {
        let mk = tri!(handle(mk));
        put(out, c_string(mk.0.order.to_string()))
    })
}

/// # Safety
/// `mk` is a valid marking handle.
#[no_mangle]
pub unsafe extern "C" fn cg_marking_len(mk: *const CgMarking) -> usize {
    mk.as_ref().map_or(0, |m| m.0.weights.len())
}

/// Weight of vertex `v` as a decimal string.
///
/// # Safety
/// `mk` is a valid marking handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cg_marking_weight(mk: *const CgMarking, v: usize, out: *mut *mut c_char) -> CgStatus {
    guard(|| {
        let mk = tri!(handle(mk));
        match mk.0.weights.get(v) {
            Some(w) => put(out, c_string(w.to_string())),
            None => fail(CgStatus::Invalid, format!("vertex {v} out of range")),
        }
    })
}

/// # Safety
/// `mk` is NULL or a marking handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cg_marking_free(mk: *mut CgMarking) {
    if !mk.is_null() {
        drop(Box::from_raw(mk));
    }
}

unsafe fn put_values(values: &[BigInt], out: *mut *mut i64, out_len: *mut usize) -> CgStatus {
    if out.is_null() || out_len.is_null() {
        return fail(CgStatus::NullPointer, "null output pointer");
    }
    let Some(v) = values.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>() else {
        return fail(CgStatus::Overflow, "collapsed value does not fit in int64");
    };
    let len = v.len();
    let data = Box::into_raw(v.into_boxed_slice()) as *mut i64;
    out.write(data);
    out_len.write(len);
    CgStatus::Ok
}

/// Collapsed values of a square matrix in `[lo, hi]`, ascending. Free the
/// array with [`cg_values_free`].
///
/// # Safety
/// `m` is a valid matrix handle; `out` and `out_len` are writable.
#[no_mangle]
pub unsafe extern "C" fn cg_collapsed_values(
    m: *const CgMatrix,
    lo: i64,
    hi: i64,
    out: *mut *mut i64,
    out_len: *mut usize,
) -> CgStatus {
    guard(|| {
        let m = tri!(handle(m));
        match collapsed_values(&m.0, &lo.into(), &hi.into()) {
            Ok(r) => put_values(&r.values(), out, out_len),
            Err(e) => lib_error(e),
        }
    })
}

/// All collapsed values of a square matrix, ascending.
///
/// # Safety
/// `m` is a valid matrix handle; `out` and `out_len` are writable.
#[no_mangle]
pub unsafe extern "C" fn cg_collapsed_values_full(m: *const CgMatrix, out: *mut *mut i64, out_len: *mut usize) -> CgStatus {
    guard(|| {
        let m = tri!(handle(m));
        match collapsed_values_full(&m.0) {
            Ok(r) => put_values(&r.values(), out, out_len),
            Err(e) => lib_error(e),
        }
    })
}

/// # Safety
/// `values` and `len` come from one collapsed-values call, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cg_values_free(values: *mut i64, len: usize) {
    if !values.is_null() {
        drop(Box::from_raw(ptr::slice_from_raw_parts_mut(values, len)));
    }
}
