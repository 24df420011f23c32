//! C ABI over `sccores`.
//!
//! Counts and posets are opaque heap handles released with their `_free`
//! function. Every fallible call returns an [`SccStatus`]; on failure the
//! message is kept per thread and can be fetched with [`scc_last_error`].
//! Strings handed out by this library are released with [`scc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;
use sccores::gap_poset::GapPoset;
use sccores::sc_core::ScCores;
use sccores::{lattice_paths, sc_core, Count, Error, Partition};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SccStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InfiniteGapSet = 3,
    Overflow = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

/// An exact non-negative integer.
pub struct SccCount(Count);

/// The gap poset of a numerical semigroup.
pub struct SccGapPoset(GapPoset);

/// A cursor over the self-conjugate `(s, s+1, s+2)`-cores.
pub struct SccScCoreIter(ScCores);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: SccStatus, msg: impl Into<String>) -> SccStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> SccStatus {
    let status = match e {
        Error::InfiniteGapSet => SccStatus::InfiniteGapSet,
        _ => SccStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> SccStatus) -> SccStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(SccStatus::Panic, "internal panic"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn slice<'a>(data: *const usize, len: usize) -> Option<&'a [usize]> {
    if len == 0 {
        Some(&[])
    } else if data.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(data, len))
    }
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> SccStatus {
    *out = Box::into_raw(Box::new(value));
    SccStatus::Ok
}

unsafe fn count_out(out: *mut *mut SccCount, f: impl FnOnce() -> Result<Count, Error>) -> SccStatus {
    if out.is_null() {
        return fail(SccStatus::NullPointer, "null output pointer");
    }
    guard(|| match f() {
        Ok(c) => store(out, SccCount(c)),
        Err(e) => from_error(e),
    })
}

/// Returns the last error message on this thread, or NULL if none.
/// Release the result with `scc_string_free`.
#[no_mangle]
pub extern "C" fn scc_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |m| m.clone().into_raw()))
}

/// # Safety
/// `s` is NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn scc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of self-conjugate `(s, s+1, s+2)`-cores.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn scc_count_sc_cores(s: usize, out: *mut *mut SccCount) -> SccStatus {
    count_out(out, || Ok(sc_core::count_sc_cores(s)))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn scc_motzkin_number(n: usize, out: *mut *mut SccCount) -> SccStatus {
    count_out(out, || Ok(lattice_paths::motzkin_number(n)))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn scc_symmetric_motzkin_count(n: usize, out: *mut *mut SccCount) -> SccStatus {
    count_out(out, || Ok(lattice_paths::symmetric_motzkin_count(n)))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn scc_symmetric_gen_dyck_count(s: usize, k: usize, out: *mut *mut SccCount) -> SccStatus {
    count_out(out, || lattice_paths::symmetric_gen_dyck_count(s, k))
}

/// Decimal representation; release with `scc_string_free`. NULL if `count` is NULL.
///
/// # Safety
/// `count` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scc_count_to_string(count: *const SccCount) -> *mut c_char {
    match count.as_ref() {
        Some(c) => into_c_string(c.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `count` is NULL or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn scc_count_to_u64(count: *const SccCount, out: *mut u64) -> SccStatus {
    let Some(c) = count.as_ref() else {
        return fail(SccStatus::NullPointer, "null count");
    };
    if out.is_null() {
        return fail(SccStatus::NullPointer, "null output pointer");
    }
    match c.0.to_u64() {
        Some(v) => {
            *out = v;
            SccStatus::Ok
        }
        None => fail(SccStatus::Overflow, "count does not fit in 64 bits"),
    }
}

/// # Safety
/// `count` is NULL or a live handle, which becomes invalid.
#[no_mangle]
pub unsafe extern "C" fn scc_count_free(count: *mut SccCount) {
    if !count.is_null() {
        drop(Box::from_raw(count));
    }
}

/// Builds the gap poset of the semigroup generated by `generators[0..len]`.
///
/// # Safety
/// `generators` points to `len` readable values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn scc_gap_poset_new(
    generators: *const usize,
    len: usize,
    out: *mut *mut SccGapPoset,
) -> SccStatus {
    if out.is_null() {
        return fail(SccStatus::NullPointer, "null output pointer");
    }
    let Some(gens) = slice(generators, len) else {
        return fail(SccStatus::NullPointer, "null generator array");
    };
    guard(|| match GapPoset::new(gens) {
        Ok(p) => store(out, SccGapPoset(p)),
        Err(e) => from_error(e),
    })
}

/// Number of gaps; 0 if `poset` is NULL.
///
/// # Safety
/// `poset` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scc_gap_poset_len(poset: *const SccGapPoset) -> usize {
    poset.as_ref().map_or(0, |p| p.0.len())
}

/// Copies the gaps in increasing order into `buf`. `*len` receives the number
/// of gaps; if it exceeds `capacity` nothing is copied and `BufferTooSmall`
/// is returned.
///
/// # Safety
/// `poset` is a live handle, `buf` has room for `capacity` values, `len` is writable.
#[no_mangle]
pub unsafe extern "C" fn scc_gap_poset_ground(
    poset: *const SccGapPoset,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> SccStatus {
    let Some(p) = poset.as_ref() else {
        return fail(SccStatus::NullPointer, "null poset");
    };
    if len.is_null() {
        return fail(SccStatus::NullPointer, "null length pointer");
    }
    let ground = p.0.ground();
    *len = ground.len();
    if ground.len() > capacity {
        return fail(SccStatus::BufferTooSmall, "buffer too small");
    }
    if !ground.is_empty() {
        if buf.is_null() {
            return fail(SccStatus::NullPointer, "null buffer");
        }
        ptr::copy_nonoverlapping(ground.as_ptr(), buf, ground.len());
    }
    SccStatus::Ok
}

/// # Safety
/// `poset` is a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn scc_gap_poset_count_ideals(poset: *const SccGapPoset, out: *mut *mut SccCount) -> SccStatus {
    let Some(p) = poset.as_ref() else {
        return fail(SccStatus::NullPointer, "null poset");
    };
    count_out(out, || Ok(p.0.count_lower_ideals()))
}

/// JSON export; release with `scc_string_free`. NULL if `poset` is NULL.
///
/// # Safety
/// `poset` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scc_gap_poset_to_json(poset: *const SccGapPoset) -> *mut c_char {
    poset.as_ref().map_or(ptr::null_mut(), |p| into_c_string(p.0.to_json()))
}

/// Graphviz export; release with `scc_string_free`. NULL if `poset` is NULL.
///
/// # Safety
/// `poset` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scc_gap_poset_to_dot(poset: *const SccGapPoset) -> *mut c_char {
    poset.as_ref().map_or(ptr::null_mut(), |p| into_c_string(p.0.to_dot()))
}

/// # Safety
/// `poset` is NULL or a live handle, which becomes invalid.
#[no_mangle]
pub unsafe extern "C" fn scc_gap_poset_free(poset: *mut SccGapPoset) {
    if !poset.is_null() {
        drop(Box::from_raw(poset));
    }
}

/// Starts enumerating self-conjugate `(s, s+1, s+2)`-cores.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn scc_sc_cores_new(s: usize, out: *mut *mut SccScCoreIter) -> SccStatus {
    if out.is_null() {
        return fail(SccStatus::NullPointer, "null output pointer");
    }
    guard(|| match sc_core::enumerate_sc_cores(s) {
        Ok(it) => store(out, SccScCoreIter(it)),
        Err(e) => from_error(e),
    })
}

/// Advances the cursor. On success `*json` holds the next witness as
/// `{"s":..,"md":[..],"partition":[..]}` (release with `scc_string_free`), or
/// NULL once the enumeration is exhausted.
///
/// # Safety
/// `iter` is a live handle; `json` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn scc_sc_cores_next(iter: *mut SccScCoreIter, json: *mut *mut c_char) -> SccStatus {
    let Some(it) = iter.as_mut() else {
        return fail(SccStatus::NullPointer, "null iterator");
    };
    if json.is_null() {
        return fail(SccStatus::NullPointer, "null output pointer");
    }
    guard(|| {
        *json = it.0.next().map_or(ptr::null_mut(), |w| into_c_string(w.to_json()));
        SccStatus::Ok
    })
}

/// # Safety
/// `iter` is NULL or a live handle, which becomes invalid.
#[no_mangle]
pub unsafe extern "C" fn scc_sc_cores_free(iter: *mut SccScCoreIter) {
    if !iter.is_null() {
        drop(Box::from_raw(iter));
    }
}

/// Tests whether the partition with weakly decreasing `parts[0..len]` is a
/// simultaneous core for every value in `ts[0..ts_len]`.
///
/// # Safety
/// Both arrays are readable for their lengths; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn scc_is_simultaneous_core(
    parts: *const usize,
    len: usize,
    ts: *const usize,
    ts_len: usize,
    out: *mut bool,
) -> SccStatus {
    let (Some(parts), Some(ts)) = (slice(parts, len), slice(ts, ts_len)) else {
        return fail(SccStatus::NullPointer, "null array");
    };
    if out.is_null() {
        return fail(SccStatus::NullPointer, "null output pointer");
    }
    guard(
        || match Partition::new(parts.to_vec()).and_then(|p| p.is_simultaneous_core(ts)) {
            Ok(v) => {
                *out = v;
                SccStatus::Ok
            }
            Err(e) => from_error(e),
        },
    )
}
