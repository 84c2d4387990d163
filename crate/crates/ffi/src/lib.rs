//! C ABI over `secdom`.
//!
//! Digraphs live behind an opaque [`SecdomDigraph`] handle. Every fallible
//! call returns a [`SecdomStatus`]; on failure the message is kept per thread
//! and read back with [`secdom_last_error`]. Vertex sets cross the boundary as
//! `uint64_t` masks with bit `i` standing for vertex `i + 1`, so handles are
//! limited to 64 vertices for set-valued calls.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use secdom::bounds;
use secdom::io;
use secdom::solver::{self, SolveConfig};
use secdom::verify;
use secdom::{Digraph, Error, ParamKind, SetKind, VertexSet};

/// Opaque digraph handle.
pub struct SecdomDigraph {
    inner: Digraph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecdomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    SizeCap = 5,
    Internal = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecdomParam {
    Plus = 0,
    Minus = 1,
    S = 2,
    Twin = 3,
    So = 4,
    Os = 5,
    Oso = 6,
    Iso = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecdomSetKind {
    OutDominating = 0,
    InDominating = 1,
    Dominating = 2,
    TwinDominating = 3,
    Sds = 4,
    Sods = 5,
    Osds = 6,
    Osods = 7,
    Isods = 8,
}

impl From<SecdomParam> for ParamKind {
    fn from(p: SecdomParam) -> Self {
        ParamKind::ALL[p as usize]
    }
}

impl From<SecdomSetKind> for SetKind {
    fn from(k: SecdomSetKind) -> Self {
        SetKind::ALL[k as usize]
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> SecdomStatus {
    match e {
        Error::Parse { .. } => SecdomStatus::Parse,
        Error::SizeCap { .. } | Error::EdgeCap { .. } => SecdomStatus::SizeCap,
        Error::Invariant(_) => SecdomStatus::Internal,
        _ => SecdomStatus::InvalidArgument,
    }
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), (SecdomStatus, String)>) -> SecdomStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SecdomStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside secdom");
            SecdomStatus::Panic
        }
    }
}

fn lib<T>(r: secdom::Result<T>) -> Result<T, (SecdomStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (SecdomStatus, String) {
    (SecdomStatus::NullPointer, "null pointer argument".into())
}

unsafe fn handle<'a>(d: *const SecdomDigraph) -> Result<&'a Digraph, (SecdomStatus, String)> {
    d.as_ref().map(|h| &h.inner).ok_or_else(null)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn mask_set(d: &Digraph, mask: u64) -> Result<VertexSet, (SecdomStatus, String)> {
    let n = d.order();
    if n > 64 {
        return Err((SecdomStatus::SizeCap, format!("{n} vertices do not fit a 64-bit mask")));
    }
    if n < 64 && mask >> n != 0 {
        return Err((
            SecdomStatus::InvalidArgument,
            format!("mask has bits beyond vertex {n}"),
        ));
    }
    Ok(VertexSet::from_mask(n, mask))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn secdom_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn secdom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses the text digraph format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn secdom_digraph_parse(text: *const c_char, out: *mut *mut SecdomDigraph) -> SecdomStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (SecdomStatus::InvalidUtf8, e.to_string()))?;
        let d = lib(io::parse_digraph(text))?;
        *out = Box::into_raw(Box::new(SecdomDigraph { inner: d }));
        Ok(())
    })
}

/// Builds a digraph on `n` vertices from `arc_count` pairs laid out flat in
/// `arcs` as `tail, head` with 0-based vertices.
///
/// # Safety
/// `arcs` must point to `2 * arc_count` readable values (it may be NULL when
/// `arc_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn secdom_digraph_new(
    n: usize,
    arcs: *const u32,
    arc_count: usize,
    out: *mut *mut SecdomDigraph,
) -> SecdomStatus {
    guard(|| {
        if out.is_null() || (arcs.is_null() && arc_count > 0) {
            return Err(null());
        }
        let flat: &[u32] = if arc_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(arcs, 2 * arc_count)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        let d = lib(Digraph::new(n, pairs))?;
        *out = Box::into_raw(Box::new(SecdomDigraph { inner: d }));
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `d` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn secdom_digraph_free(d: *mut SecdomDigraph) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Vertex count, 0 for NULL.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn secdom_digraph_order(d: *const SecdomDigraph) -> usize {
    d.as_ref().map_or(0, |h| h.inner.order())
}

/// Canonical text form. Free the result with [`secdom_string_free`].
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn secdom_digraph_serialize(d: *const SecdomDigraph, out: *mut *mut c_char) -> SecdomStatus {
    guard(|| {
        let d = handle(d)?;
        if out.is_null() {
            return Err(null());
        }
        *out = into_c_string(io::serialize_digraph(d));
        Ok(())
    })
}

/// Exact minimum of `param`. The witness comes back as a mask; `size_cap` of
/// 0 selects the default order limit.
///
/// # Safety
/// `d` must be a live handle; `value` and `witness` must be writable.
#[no_mangle]
pub unsafe extern "C" fn secdom_solve(
    d: *const SecdomDigraph,
    param: SecdomParam,
    size_cap: usize,
    value: *mut usize,
    witness: *mut u64,
) -> SecdomStatus {
    guard(|| {
        let d = handle(d)?;
        if value.is_null() || witness.is_null() {
            return Err(null());
        }
        let config = SolveConfig {
            size_cap: if size_cap == 0 {
                solver::DEFAULT_SIZE_CAP
            } else {
                size_cap
            },
            threads: 0,
        };
        let r = lib(solver::solve_min(d, param.into(), &config))?;
        *value = r.value;
        *witness = r.witness.to_mask();
        Ok(())
    })
}

/// Checks whether the vertices in `mask` form a set of `kind`.
///
/// # Safety
/// `d` must be a live handle and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn secdom_verify(
    d: *const SecdomDigraph,
    kind: SecdomSetKind,
    mask: u64,
    valid: *mut bool,
) -> SecdomStatus {
    guard(|| {
        let d = handle(d)?;
        if valid.is_null() {
            return Err(null());
        }
        let s = mask_set(d, mask)?;
        *valid = verify::is_set(d, &s, kind.into());
        Ok(())
    })
}

/// All parameters and the bound catalogue as JSON. Free the result with
/// [`secdom_string_free`].
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn secdom_survey_json(d: *const SecdomDigraph, out: *mut *mut c_char) -> SecdomStatus {
    guard(|| {
        let d = handle(d)?;
        if out.is_null() {
            return Err(null());
        }
        let config = SolveConfig::default();
        let values: BTreeMap<ParamKind, usize> = lib(bounds::parameter_values(d, &config))?;
        let report = lib(bounds::bound_report(d, &values))?;
        let params: BTreeMap<&str, usize> = values.iter().map(|(k, v)| (k.name(), *v)).collect();
        let json = serde_json::json!({ "parameters": params, "bounds": report.entries });
        *out = into_c_string(json.to_string());
        Ok(())
    })
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn secdom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
