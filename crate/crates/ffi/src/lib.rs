//! C ABI over `rurq-core`.
//!
//! Handles are opaque pointers created by a `*_new` function and released
//! with the matching `*_free`. Every fallible call returns a [`RurqStatus`];
//! on failure a message is available from [`rurq_last_error`] on the same
//! thread until the next failing call. Coordinates are 1-based, passed as
//! `dim` consecutive `size_t` values.
//!
//! Handles are not synchronized: callers must not use one handle from two
//! threads at once.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rurq_core::opscript::{parse_script, run_script};
use rurq_core::{Error, IndexBox, RangeStructure, RurqTree, StructureKind};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RurqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    EmptyBox = 4,
    Capacity = 5,
    Unsupported = 6,
    Parse = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RurqStructureKind {
    Rurq = 0,
    Segtree1d = 1,
    Quadtree = 2,
    Octree = 3,
    Oracle = 4,
}

impl From<RurqStructureKind> for StructureKind {
    fn from(k: RurqStructureKind) -> Self {
        match k {
            RurqStructureKind::Rurq => StructureKind::Rurq,
            RurqStructureKind::Segtree1d => StructureKind::SegTree1d,
            RurqStructureKind::Quadtree => StructureKind::Quadtree,
            RurqStructureKind::Octree => StructureKind::Octree,
            RurqStructureKind::Oracle => StructureKind::Oracle,
        }
    }
}

/// Opaque range-update range-query tree.
pub struct RurqHandle {
    tree: RurqTree,
}

/// Opaque handle to any structure, chosen by [`RurqStructureKind`].
pub struct RurqStructure {
    inner: Box<dyn RangeStructure + Send>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let msg = CString::new(msg).unwrap_or_else(|_| CString::from(c"error message contained NUL"));
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> RurqStatus {
    match e {
        Error::ZeroDimension
        | Error::ZeroSide
        | Error::DimensionMismatch { .. }
        | Error::InvalidConfig(_) => RurqStatus::InvalidArgument,
        Error::DimensionTooLarge(_) | Error::Capacity { .. } => RurqStatus::Capacity,
        Error::OutOfRange { .. } => RurqStatus::OutOfRange,
        Error::EmptyBox { .. } => RurqStatus::EmptyBox,
        Error::UnsupportedDimension { .. } => RurqStatus::Unsupported,
    }
}

struct Failure(RurqStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(RurqStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RurqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RurqStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RurqStatus::Panic
        }
    }
}

/// # Safety
/// `ptr` must be null or point to `len` readable values.
unsafe fn coords<'a>(ptr: *const usize, len: usize, what: &str) -> Result<&'a [usize], Failure> {
    if ptr.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

/// # Safety
/// As [`coords`] for both corners.
unsafe fn make_box(lo: *const usize, hi: *const usize, dim: usize) -> Result<IndexBox, Failure> {
    let lo = coords(lo, dim, "lo")?;
    let hi = coords(hi, dim, "hi")?;
    Ok(IndexBox::new(lo.to_vec(), hi.to_vec())?)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Message for the most recent failure on this thread. Valid until the next
/// failing call on this thread.
#[no_mangle]
pub extern "C" fn rurq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn rurq_status_name(status: RurqStatus) -> *const c_char {
    let s: &'static CStr = match status {
        RurqStatus::Ok => c"ok",
        RurqStatus::NullPointer => c"null pointer",
        RurqStatus::InvalidArgument => c"invalid argument",
        RurqStatus::OutOfRange => c"coordinate out of range",
        RurqStatus::EmptyBox => c"empty box",
        RurqStatus::Capacity => c"capacity exceeded",
        RurqStatus::Unsupported => c"unsupported dimension",
        RurqStatus::Parse => c"script parse error",
        RurqStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Creates a zeroed tree over `[1..=side]^dim`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rurq_tree_new(
    dim: usize,
    side: usize,
    out: *mut *mut RurqHandle,
) -> RurqStatus {
    guard(|| {
        let tree = RurqTree::new(dim, side)?;
        write_out(out, Box::into_raw(Box::new(RurqHandle { tree })))
    })
}

/// # Safety
/// `handle` must be null or come from [`rurq_tree_new`] and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn rurq_tree_free(handle: *mut RurqHandle) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of coefficient trees, `2^dim`; 0 for a null handle.
///
/// # Safety
/// `handle` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rurq_tree_count(handle: *const RurqHandle) -> usize {
    handle.as_ref().map_or(0, |h| h.tree.tree_count())
}

/// Total cells allocated across all coefficient trees.
///
/// # Safety
/// `handle` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rurq_tree_cells(handle: *const RurqHandle) -> usize {
    handle.as_ref().map_or(0, |h| h.tree.cells_allocated())
}

/// Adds `c` to every cell of `[lo : hi]`.
///
/// # Safety
/// `handle` must be live; `lo` and `hi` must each point to `dim` values.
#[no_mangle]
pub unsafe extern "C" fn rurq_tree_update(
    handle: *mut RurqHandle,
    lo: *const usize,
    hi: *const usize,
    dim: usize,
    c: i64,
) -> RurqStatus {
    guard(|| {
        let h = handle.as_mut().ok_or_else(|| null("handle"))?;
        let b = make_box(lo, hi, dim)?;
        Ok(h.tree.update(&b, c)?)
    })
}

/// Writes `rsum(1..1 : p)` to `out`.
///
/// # Safety
/// `handle` must be live; `p` must point to `dim` values; `out` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rurq_tree_prefix(
    handle: *const RurqHandle,
    p: *const usize,
    dim: usize,
    out: *mut i64,
) -> RurqStatus {
    guard(|| {
        let h = handle.as_ref().ok_or_else(|| null("handle"))?;
        let v = h.tree.prefix(coords(p, dim, "p")?)?;
        write_out(out, v)
    })
}

/// Writes the sum over `[lo : hi]` to `out`.
///
/// # Safety
/// `handle` must be live; `lo` and `hi` must each point to `dim` values;
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rurq_tree_range_sum(
    handle: *const RurqHandle,
    lo: *const usize,
    hi: *const usize,
    dim: usize,
    out: *mut i64,
) -> RurqStatus {
    guard(|| {
        let h = handle.as_ref().ok_or_else(|| null("handle"))?;
        let v = h.tree.range_sum(&make_box(lo, hi, dim)?)?;
        write_out(out, v)
    })
}

/// Creates any supported structure.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rurq_structure_new(
    kind: RurqStructureKind,
    dim: usize,
    side: usize,
    out: *mut *mut RurqStructure,
) -> RurqStatus {
    guard(|| {
        let inner = StructureKind::from(kind).build(dim, side)?;
        write_out(out, Box::into_raw(Box::new(RurqStructure { inner })))
    })
}

/// # Safety
/// `handle` must be null or come from [`rurq_structure_new`] and not be
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn rurq_structure_free(handle: *mut RurqStructure) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// # Safety
/// As [`rurq_tree_update`].
#[no_mangle]
pub unsafe extern "C" fn rurq_structure_update(
    handle: *mut RurqStructure,
    lo: *const usize,
    hi: *const usize,
    dim: usize,
    c: i64,
) -> RurqStatus {
    guard(|| {
        let h = handle.as_mut().ok_or_else(|| null("handle"))?;
        Ok(h.inner.update(&make_box(lo, hi, dim)?, c)?)
    })
}

/// # Safety
/// As [`rurq_tree_range_sum`], with a mutable handle.
#[no_mangle]
pub unsafe extern "C" fn rurq_structure_query(
    handle: *mut RurqStructure,
    lo: *const usize,
    hi: *const usize,
    dim: usize,
    out: *mut i64,
) -> RurqStatus {
    guard(|| {
        let h = handle.as_mut().ok_or_else(|| null("handle"))?;
        let v = h.inner.query(&make_box(lo, hi, dim)?)?;
        write_out(out, v)
    })
}

/// Enables or disables visit counting.
///
/// # Safety
/// `handle` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn rurq_structure_set_counting(handle: *mut RurqStructure, on: bool) {
    if let Some(h) = handle.as_mut() {
        h.inner.set_counting(on);
    }
}

/// Nodes or cells touched since creation or the last reset.
///
/// # Safety
/// `handle` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn rurq_structure_visits(handle: *const RurqStructure) -> u64 {
    handle.as_ref().map_or(0, |h| h.inner.visits())
}

/// Parses `script` (NUL-terminated UTF-8), runs it on a fresh structure of
/// `kind`, and returns the query results in a newly allocated array that
/// must be released with [`rurq_results_free`].
///
/// # Safety
/// `script` must be a valid C string; `out_results` and `out_len` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rurq_run_script(
    script: *const c_char,
    kind: RurqStructureKind,
    out_results: *mut *mut i64,
    out_len: *mut usize,
) -> RurqStatus {
    guard(|| {
        if script.is_null() {
            return Err(null("script"));
        }
        if out_results.is_null() || out_len.is_null() {
            return Err(null("output pointer"));
        }
        let text = CStr::from_ptr(script)
            .to_str()
            .map_err(|e| Failure(RurqStatus::Parse, format!("script is not UTF-8: {e}")))?;
        let parsed = parse_script(text).map_err(|e| Failure(RurqStatus::Parse, e.to_string()))?;
        let results = run_script(&parsed, kind.into())?.into_boxed_slice();
        let len = results.len();
        let raw = Box::into_raw(results) as *mut i64;
        write_out(out_results, raw)?;
        write_out(out_len, len)
    })
}

/// # Safety
/// `results`/`len` must come from one [`rurq_run_script`] call, or
/// `results` must be null.
#[no_mangle]
pub unsafe extern "C" fn rurq_results_free(results: *mut i64, len: usize) {
    if !results.is_null() {
        drop(Box::from_raw(ptr::slice_from_raw_parts_mut(results, len)));
    }
}
