//! C bindings for `nestlat`.
//!
//! Every function returns an [`NlStatus`]. Results are written through out
//! pointers; strings returned to the caller are owned by it and released with
//! [`nl_string_free`]. After a failure, [`nl_last_error_message`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nestlat::oracle::ClosureKind;
use nestlat::{app, json, BlockShape, Error, RingDescriptor, Side};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NlStatus {
    Ok = 0,
    /// A mathematical precondition failed.
    DomainError = 1,
    /// Malformed document, shape or descriptor.
    UsageError = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NlSide {
    Left = 0,
    Right = 1,
}

impl From<NlSide> for Side {
    fn from(s: NlSide) -> Self {
        match s {
            NlSide::Left => Side::Left,
            NlSide::Right => Side::Right,
        }
    }
}

/// Opaque handle to a validated matrix document.
pub struct NlMatrix {
    text: String,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(NlStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_usage() { NlStatus::UsageError } else { NlStatus::DomainError };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> NlStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NlStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            NlStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(NlStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(NlStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a>(p: *const NlMatrix, what: &str) -> Result<&'a NlMatrix, Failure> {
    p.as_ref().ok_or_else(|| Failure(NlStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(NlStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(NlStatus::Panic, "output contains NUL".into()))?;
    if out.is_null() {
        return Err(Failure(NlStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(c.into_raw());
    Ok(())
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    s.parse().map_err(Failure::from)
}

/// Parses and validates a matrix document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nl_matrix_from_json(json: *const c_char, out: *mut *mut NlMatrix) -> NlStatus {
    guard(|| {
        let doc = app::validate_matrix(text(json, "json")?)?;
        let m = Box::new(NlMatrix { text: json::to_text(&doc) });
        write_out(out, Box::into_raw(m))
    })
}

/// Canonical JSON text of a matrix.
///
/// # Safety
/// `m` must come from [`nl_matrix_from_json`]; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn nl_matrix_to_json(m: *const NlMatrix, out: *mut *mut c_char) -> NlStatus {
    guard(|| write_string(out, handle(m, "matrix")?.text.clone()))
}

/// Releases a matrix handle. Null is ignored.
///
/// # Safety
/// `m` must come from [`nl_matrix_from_json`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nl_matrix_free(m: *mut NlMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message describing the last failure on this thread, or null. The pointer
/// stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn nl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Echelon form document of `m` on the given side.
///
/// # Safety
/// `m` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn nl_echelon(m: *const NlMatrix, side: NlSide, out: *mut *mut c_char) -> NlStatus {
    guard(|| {
        let doc = app::echelon(&handle(m, "matrix")?.text, side.into())?;
        write_string(out, json::to_text(&doc))
    })
}

/// Whether the row space (left) or column space (right) of `a` lies in that of `b`.
///
/// # Safety
/// `a` and `b` must be live handles and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn nl_space_leq(a: *const NlMatrix, b: *const NlMatrix, side: NlSide, out: *mut bool) -> NlStatus {
    guard(|| {
        let leq = app::space_leq(&handle(a, "a")?.text, &handle(b, "b")?.text, side.into())?;
        write_out(out, leq)
    })
}

/// Canonical representative of the submodule of `M_{rows×cols}` spanned by a
/// generator document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn nl_phi(json: *const c_char, rows: usize, cols: usize, side: NlSide, out: *mut *mut c_char) -> NlStatus {
    guard(|| {
        let doc = app::phi(text(json, "json")?, (rows, cols), side.into())?;
        write_string(out, json::to_text(&doc))
    })
}

/// Tuple, principality and generator of a submodule of a nest module.
///
/// # Safety
/// `json` and `shape` must be NUL-terminated strings and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn nl_nest_phi(json: *const c_char, shape: *const c_char, side: NlSide, out: *mut *mut c_char) -> NlStatus {
    guard(|| {
        let shape: BlockShape = parse(text(shape, "shape")?)?;
        let doc = app::nest_phi(text(json, "json")?, &shape, side.into())?;
        write_string(out, json::to_text(&doc))
    })
}

/// Descriptor, tuple and generator of the subbimodule spanned by a document.
///
/// # Safety
/// `json` and `shape` must be NUL-terminated strings and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn nl_classify_bimodule(json: *const c_char, shape: *const c_char, out: *mut *mut c_char) -> NlStatus {
    guard(|| {
        let shape: BlockShape = parse(text(shape, "shape")?)?;
        let doc = app::classify_bimodule(text(json, "json")?, &shape)?;
        write_string(out, json::to_text(&doc))
    })
}

/// Number of submodules of the given kind (`left`, `right` or `bimodule`)
/// over a prime field.
///
/// # Safety
/// `ring`, `shape` and `kind` must be NUL-terminated strings and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn nl_enumerate_count(
    ring: *const c_char,
    shape: *const c_char,
    kind: *const c_char,
    out: *mut usize,
) -> NlStatus {
    guard(|| {
        let ring: RingDescriptor = parse(text(ring, "ring")?)?;
        let shape: BlockShape = parse(text(shape, "shape")?)?;
        let kind: ClosureKind = parse(text(kind, "kind")?)?;
        let e = app::enumerate(&ring, &shape, kind, false)?;
        let count = e.summary["count"].as_u64().unwrap_or_default();
        write_out(out, count as usize)
    })
}
