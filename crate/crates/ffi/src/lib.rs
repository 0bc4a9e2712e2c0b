//! C ABI over `rcn-core`.
//!
//! Every function returns an [`RcnStatus`]; results go through out-pointers.
//! On failure a message is kept per thread and can be read with
//! [`rcn_last_error_message`]. Point sets and half-periods are opaque handles
//! owned by the caller and released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rcn_core::allowseq::{from_point_set, HalfPeriod};
use rcn_core::bounds::k30_report;
use rcn_core::decomp::search_decomposition;
use rcn_core::digraph::build_d0;
use rcn_core::geom::{Point, PointSet};
use rcn_core::kedges::{crossing_report, edge_vector, lower_bound_leq_k};
use rcn_core::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcnStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// Repeated point or three collinear points.
    Degenerate = 3,
    OutOfRange = 4,
    /// The output buffer is too small; the required length was written.
    BufferTooSmall = 5,
    Panic = 6,
}

/// Opaque point set.
pub struct RcnPointSet(PointSet);

/// Opaque half-period of a circular sequence.
pub struct RcnHalfPeriod(HalfPeriod);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct RcnCrossing {
    pub brute: u64,
    pub identity: i64,
    pub cumulative: i64,
    pub agreement: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(RcnStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Degenerate(_) => RcnStatus::Degenerate,
            Error::CoordinateTooLarge(..) | Error::OutOfRange { .. } => RcnStatus::OutOfRange,
            _ => RcnStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(RcnStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> RcnStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            RcnStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            RcnStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(p: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(value);
    Ok(())
}

/// Copies `src` into `out` if it fits and always stores the length in `len`.
unsafe fn fill<T: Copy>(src: &[T], out: *mut T, cap: usize, len: *mut usize) -> Result<(), Fail> {
    write(len, src.len(), "len")?;
    if src.len() > cap {
        return Err(Fail(
            RcnStatus::BufferTooSmall,
            format!("need {} slots, have {cap}", src.len()),
        ));
    }
    if !src.is_empty() {
        if out.is_null() {
            return Err(null("out"));
        }
        ptr::copy_nonoverlapping(src.as_ptr(), out, src.len());
    }
    Ok(())
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn rcn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a point set from `n` coordinate pairs.
///
/// # Safety
/// `xs` and `ys` must point to `n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rcn_point_set_new(
    xs: *const i64,
    ys: *const i64,
    n: usize,
    out: *mut *mut RcnPointSet,
) -> RcnStatus {
    guard(|| {
        if n > 0 && (xs.is_null() || ys.is_null()) {
            return Err(null("coordinates"));
        }
        let pts = if n == 0 {
            Vec::new()
        } else {
            let (xs, ys) = (
                std::slice::from_raw_parts(xs, n),
                std::slice::from_raw_parts(ys, n),
            );
            xs.iter().zip(ys).map(|(&x, &y)| Point::new(x, y)).collect()
        };
        let set = PointSet::new(pts)?;
        write(out, Box::into_raw(Box::new(RcnPointSet(set))), "out")
    })
}

/// # Safety
/// `set` must come from [`rcn_point_set_new`] and not be freed yet, or be null.
#[no_mangle]
pub unsafe extern "C" fn rcn_point_set_free(set: *mut RcnPointSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// # Safety
/// `set` must be a live handle; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rcn_point_set_len(set: *const RcnPointSet, len: *mut usize) -> RcnStatus {
    guard(|| write(len, deref(set, "set")?.0.len(), "len"))
}

/// Writes `E_0, ..., E_{floor(n/2)-1}` into `out`.
///
/// # Safety
/// `set` must be a live handle, `out` must hold `cap` values, `len` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn rcn_edge_vector(
    set: *const RcnPointSet,
    out: *mut u64,
    cap: usize,
    len: *mut usize,
) -> RcnStatus {
    guard(|| {
        let ev = edge_vector(&deref(set, "set")?.0)?;
        fill(ev.counts(), out, cap, len)
    })
}

/// Crossing count by brute force and by both edge-count identities.
///
/// # Safety
/// `set` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rcn_crossing(set: *const RcnPointSet, out: *mut RcnCrossing) -> RcnStatus {
    guard(|| {
        let r = crossing_report(&deref(set, "set")?.0)?;
        let value = RcnCrossing {
            brute: r.brute_count,
            identity: r.identity_count,
            cumulative: r.cumulative_count,
            agreement: r.agreement,
        };
        write(out, value, "out")
    })
}

/// Lower bound on the number of `(<=k)`-edges of any `n` points.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rcn_lower_bound_leq_k(n: usize, k: usize, out: *mut u64) -> RcnStatus {
    guard(|| write(out, lower_bound_leq_k(n, k)?, "out"))
}

/// Half-period of the circular sequence of `set`.
///
/// # Safety
/// `set` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rcn_half_period_from_point_set(
    set: *const RcnPointSet,
    out: *mut *mut RcnHalfPeriod,
) -> RcnStatus {
    guard(|| {
        let h = from_point_set(&deref(set, "set")?.0)?;
        write(out, Box::into_raw(Box::new(RcnHalfPeriod(h))), "out")
    })
}

/// # Safety
/// `h` must come from [`rcn_half_period_from_point_set`] and not be freed
/// yet, or be null.
#[no_mangle]
pub unsafe extern "C" fn rcn_half_period_free(h: *mut RcnHalfPeriod) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Initial permutation (point indices).
///
/// # Safety
/// `h` must be a live handle, `out` must hold `cap` values, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn rcn_half_period_initial(
    h: *const RcnHalfPeriod,
    out: *mut usize,
    cap: usize,
    len: *mut usize,
) -> RcnStatus {
    guard(|| fill(deref(h, "h")?.0.initial(), out, cap, len))
}

/// Gate of every step, `1 <= g < n`.
///
/// # Safety
/// `h` must be a live handle, `out` must hold `cap` values, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn rcn_half_period_gates(
    h: *const RcnHalfPeriod,
    out: *mut usize,
    cap: usize,
    len: *mut usize,
) -> RcnStatus {
    guard(|| fill(deref(h, "h")?.0.gates(), out, cap, len))
}

/// Smallest rotation at which the sequence is 3-decomposable. `found` is false
/// when there is none.
///
/// # Safety
/// `h` must be a live handle; `found` and `rotation` writable.
#[no_mangle]
pub unsafe extern "C" fn rcn_search_decomposition(
    h: *const RcnHalfPeriod,
    found: *mut bool,
    rotation: *mut usize,
) -> RcnStatus {
    guard(|| {
        let d = search_decomposition(&deref(h, "h")?.0)?;
        write(found, d.is_some(), "found")?;
        write(rotation, d.map_or(0, |d| d.rotation), "rotation")
    })
}

/// Edge count of the extremal digraph `D0(v, m)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rcn_d0_edge_count(v: usize, m: usize, out: *mut usize) -> RcnStatus {
    guard(|| write(out, build_d0(v, m)?.edge_count(), "out"))
}

/// Crossing number of `K_30` derived by the bound chain, and whether every
/// step matched its expected value.
///
/// # Safety
/// `value` and `consistent` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rcn_k30(value: *mut i64, consistent: *mut bool) -> RcnStatus {
    guard(|| {
        let r = k30_report();
        write(value, r.value, "value")?;
        write(consistent, r.consistent(), "consistent")
    })
}
