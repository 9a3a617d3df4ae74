//! C ABI for `rough-cover`.
//!
//! Coverings cross the boundary as opaque `RcCovering` handles created from
//! covering JSON documents and released with [`rc_covering_free`]. Blocks are
//! returned as 64-bit masks where bit `i` is the `i`-th universe label.
//! Every fallible call returns an [`RcStatus`]; on failure
//! [`rc_last_error_message`] describes the error for the calling thread.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with [`rc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rough_cover::cli::AnalysisReport;
use rough_cover::{
    common_block_repeat_degree, core_block, cov, is_cov_fixed_point, is_invariable,
    is_reducible_element, membership_repeat_degree, neighborhood, oracle, preimages, reduct, Block,
    Covering, CoveringFile, Error,
};

/// Opaque covering handle.
pub struct RcCovering {
    inner: Covering,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    MalformedDocument = 3,
    EmptyUniverse = 4,
    DuplicateLabel = 5,
    UniverseTooLarge = 6,
    UnknownElement = 7,
    EmptyBlock = 8,
    DuplicateBlock = 9,
    NotACover = 10,
    BlockNotInCovering = 11,
    IndexOutOfRange = 12,
    Panic = 99,
}

impl From<&Error> for RcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::EmptyUniverse => RcStatus::EmptyUniverse,
            Error::DuplicateLabel(_) => RcStatus::DuplicateLabel,
            Error::UniverseTooLarge { .. } => RcStatus::UniverseTooLarge,
            Error::UnknownElement(_) | Error::UnknownElementInBlock { .. } => {
                RcStatus::UnknownElement
            }
            Error::EmptyBlock { .. } => RcStatus::EmptyBlock,
            Error::DuplicateBlock { .. } => RcStatus::DuplicateBlock,
            Error::NotACover { .. } => RcStatus::NotACover,
            Error::BlockNotInCovering => RcStatus::BlockNotInCovering,
            Error::Json(_) => RcStatus::MalformedDocument,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

struct Failure(RcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(RcStatus::from(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(RcStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> RcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            RcStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".to_owned());
            RcStatus::Panic
        }
    }
}

unsafe fn handle<'a>(c: *const RcCovering) -> Result<&'a Covering, Failure> {
    c.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| null("covering handle"))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(RcStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let s = CString::new(s)
        .map_err(|_| Failure(RcStatus::InvalidUtf8, "output contains NUL".into()))?;
    put(out, s.into_raw())
}

unsafe fn put_handle(out: *mut *mut RcCovering, c: Covering) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(RcCovering { inner: c })))
}

/// Message for the last failed call on this thread, or NULL after a
/// successful call. Valid until the next `rc_*` call on the same thread.
#[no_mangle]
pub extern "C" fn rc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a covering document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_covering_from_json(
    json: *const c_char,
    out: *mut *mut RcCovering,
) -> RcStatus {
    guard(|| {
        let json = text(json, "json")?;
        put_handle(out, Covering::from_json(json)?)
    })
}

/// # Safety
/// `c` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn rc_covering_free(c: *mut RcCovering) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Writes the covering document, blocks in canonical order.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_covering_to_json(
    c: *const RcCovering,
    out: *mut *mut c_char,
) -> RcStatus {
    guard(|| put_string(out, handle(c)?.to_json()))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_covering_universe_size(
    c: *const RcCovering,
    out: *mut usize,
) -> RcStatus {
    guard(|| put(out, handle(c)?.universe().len()))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_covering_block_count(
    c: *const RcCovering,
    out: *mut usize,
) -> RcStatus {
    guard(|| put(out, handle(c)?.len()))
}

/// Mask of the block at `index` in canonical order.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_covering_block(
    c: *const RcCovering,
    index: usize,
    out: *mut u64,
) -> RcStatus {
    guard(|| {
        let c = handle(c)?;
        let block = c.blocks().get(index).ok_or_else(|| {
            Failure(
                RcStatus::IndexOutOfRange,
                format!("block index {index} out of range ({} blocks)", c.len()),
            )
        })?;
        put(out, block.bits())
    })
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_is_partition(c: *const RcCovering, out: *mut bool) -> RcStatus {
    guard(|| put(out, handle(c)?.is_partition()))
}

/// # Safety
/// `c` must be a live handle, `x` a NUL-terminated label, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_neighborhood(
    c: *const RcCovering,
    x: *const c_char,
    out: *mut u64,
) -> RcStatus {
    guard(|| put(out, neighborhood(handle(c)?, text(x, "element")?)?.bits()))
}

/// # Safety
/// `c` must be a live handle, `x` a NUL-terminated label, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_membership_repeat_degree(
    c: *const RcCovering,
    x: *const c_char,
    out: *mut usize,
) -> RcStatus {
    guard(|| {
        put(
            out,
            membership_repeat_degree(handle(c)?, text(x, "element")?)?,
        )
    })
}

/// # Safety
/// `c` must be a live handle, `x` and `y` NUL-terminated labels, `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn rc_common_block_repeat_degree(
    c: *const RcCovering,
    x: *const c_char,
    y: *const c_char,
    out: *mut usize,
) -> RcStatus {
    guard(|| {
        put(
            out,
            common_block_repeat_degree(handle(c)?, text(x, "element")?, text(y, "element")?)?,
        )
    })
}

/// Core block of `x`. `*exists` is false when `x` has none; `*out` is then 0.
///
/// # Safety
/// `c` must be a live handle, `x` a NUL-terminated label, `out` and
/// `exists` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_core_block(
    c: *const RcCovering,
    x: *const c_char,
    out: *mut u64,
    exists: *mut bool,
) -> RcStatus {
    guard(|| {
        let core = core_block(handle(c)?, text(x, "element")?)?;
        put(out, core.map_or(0, Block::bits))?;
        put(exists, core.is_some())
    })
}

/// Whether `block` (a mask) is a reducible element of `c`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_is_reducible_element(
    c: *const RcCovering,
    block: u64,
    out: *mut bool,
) -> RcStatus {
    guard(|| {
        put(
            out,
            is_reducible_element(handle(c)?, Block::from_bits(block))?.is_some(),
        )
    })
}

/// New handle holding the neighborhoods of `c`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_cov(c: *const RcCovering, out: *mut *mut RcCovering) -> RcStatus {
    guard(|| put_handle(out, cov(handle(c)?)))
}

/// New handle holding `c` with its reducible blocks removed.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_reduct(c: *const RcCovering, out: *mut *mut RcCovering) -> RcStatus {
    guard(|| put_handle(out, reduct(handle(c)?)))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_is_cov_fixed_point(c: *const RcCovering, out: *mut bool) -> RcStatus {
    guard(|| put(out, is_cov_fixed_point(handle(c)?)))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_is_invariable(c: *const RcCovering, out: *mut bool) -> RcStatus {
    guard(|| put(out, is_invariable(handle(c)?).is_invariable()))
}

/// The `analyze` report as JSON.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_analyze_json(
    c: *const RcCovering,
    lambda: bool,
    out: *mut *mut c_char,
) -> RcStatus {
    guard(|| put_string(out, AnalysisReport::new(handle(c)?, lambda).to_json()))
}

/// JSON array of covering documents whose neighborhoods equal `c`. A `limit`
/// of 0 means no limit.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_preimages_json(
    c: *const RcCovering,
    limit: usize,
    out: *mut *mut c_char,
) -> RcStatus {
    guard(|| {
        let found = preimages(handle(c)?, (limit > 0).then_some(limit))?;
        let docs: Vec<CoveringFile> = found.iter().map(Covering::to_file).collect();
        put_string(out, serde_json::to_string(&docs).expect("plain data"))
    })
}

/// Exhaustive law check over all coverings of `{1..n}` (`n <= 4`), as the
/// summary JSON document.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_verify_laws_json(n: usize, out: *mut *mut c_char) -> RcStatus {
    guard(|| {
        let summary = oracle::verify_laws(n)?;
        put_string(out, serde_json::to_string(&summary).expect("plain data"))
    })
}
