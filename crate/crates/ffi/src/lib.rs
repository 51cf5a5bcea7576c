//! C interface to `selfsim`.
//!
//! Every function returns an [`SsgStatus`]. On failure the message is kept
//! per thread and read with [`ssg_last_error_message`]. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`ssg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use selfsim::catalog;
use selfsim::handle::{machine_handle, ActionHandle};
use selfsim::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SsgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed word, string, selector or automaton text.
    InvalidInput = 3,
    NotFiniteState = 4,
    Oracle = 5,
    Unsupported = 6,
    Panic = 7,
}

/// Opaque machine handle.
pub struct SsgMachine {
    inner: Box<dyn ActionHandle>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SsgStatus {
    match e {
        Error::NotFiniteState(_) => SsgStatus::NotFiniteState,
        Error::Oracle(_) => SsgStatus::Oracle,
        Error::Unsupported(_) => SsgStatus::Unsupported,
        _ => SsgStatus::InvalidInput,
    }
}

struct Fail(SsgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SsgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SsgStatus::Ok
        }
        Ok(Err(Fail(code, msg))) => {
            set_error(&msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            SsgStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(SsgStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(SsgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn machine<'a>(m: *const SsgMachine) -> Result<&'a dyn ActionHandle, Fail> {
    m.as_ref()
        .map(|m| m.inner.as_ref())
        .ok_or_else(|| Fail(SsgStatus::NullPointer, "machine is null".into()))
}

fn check_out<T>(p: *mut T) -> Result<(), Fail> {
    if p.is_null() {
        return Err(Fail(SsgStatus::NullPointer, "output pointer is null".into()));
    }
    Ok(())
}

unsafe fn give_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    check_out(out)?;
    let c = CString::new(s).map_err(|_| Fail(SsgStatus::InvalidInput, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn give_machine(out: *mut *mut SsgMachine, inner: Box<dyn ActionHandle>) -> Result<(), Fail> {
    check_out(out)?;
    *out = Box::into_raw(Box::new(SsgMachine { inner }));
    Ok(())
}

/// Opens `builtin:NAME`, `data:SELECTOR` or an automaton file path.
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ssg_machine_from_source(source: *const c_char, out: *mut *mut SsgMachine) -> SsgStatus {
    guard(|| {
        let h = catalog::machine(text(source, "source")?)?;
        give_machine(out, h)
    })
}

/// Builds the representation of a data selector such as `lamplighter:B=2`.
///
/// # Safety
/// `selector` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ssg_machine_from_data(selector: *const c_char, out: *mut *mut SsgMachine) -> SsgStatus {
    guard(|| {
        let h = catalog::data_handle(text(selector, "selector")?)?;
        give_machine(out, h)
    })
}

/// Parses automaton file text.
///
/// # Safety
/// `automaton` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ssg_machine_from_text(automaton: *const c_char, out: *mut *mut SsgMachine) -> SsgStatus {
    guard(|| {
        let a = selfsim::mealy::parse(text(automaton, "automaton")?)?;
        give_machine(out, Box::new(machine_handle(a.to_machine())))
    })
}

/// # Safety
/// `m` must come from one of the constructors, or be null.
#[no_mangle]
pub unsafe extern "C" fn ssg_machine_free(m: *mut SsgMachine) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ssg_degree(m: *const SsgMachine, out: *mut usize) -> SsgStatus {
    guard(|| {
        let m = machine(m)?;
        check_out(out)?;
        *out = m.degree();
        Ok(())
    })
}

/// Applies `word` to the string `s[0..len]`, writing `len` letters to `out`.
/// `s` and `out` may alias.
///
/// # Safety
/// `s` and `out` must point to `len` elements; they may be null when
/// `len == 0`.
#[no_mangle]
pub unsafe extern "C" fn ssg_apply(
    m: *const SsgMachine,
    word: *const c_char,
    s: *const usize,
    len: usize,
    out: *mut usize,
) -> SsgStatus {
    guard(|| {
        let m = machine(m)?;
        let w = text(word, "word")?;
        let input = if len == 0 {
            Vec::new()
        } else {
            if s.is_null() {
                return Err(Fail(SsgStatus::NullPointer, "string is null".into()));
            }
            check_out(out)?;
            std::slice::from_raw_parts(s, len).to_vec()
        };
        let image = m.apply(w, &input)?;
        if len > 0 {
            ptr::copy_nonoverlapping(image.as_ptr(), out, len);
        }
        Ok(())
    })
}

/// Orbit sizes on the first level, as `(m_1,..,m_s)`.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ssg_orbit_type(m: *const SsgMachine, out: *mut *mut c_char) -> SsgStatus {
    guard(|| {
        let m = machine(m)?;
        give_string(out, m.orbit_type().to_string())
    })
}

/// Whether `word` acts trivially on all strings of length at most `depth`.
///
/// # Safety
/// `m` must be a live handle, `word` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ssg_is_trivial(
    m: *const SsgMachine,
    word: *const c_char,
    depth: usize,
    out: *mut bool,
) -> SsgStatus {
    guard(|| {
        let m = machine(m)?;
        let w = text(word, "word")?;
        check_out(out)?;
        *out = m.is_trivial(w, depth)?;
        Ok(())
    })
}

/// Generator recursions, one per line.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ssg_recursions(m: *const SsgMachine, out: *mut *mut c_char) -> SsgStatus {
    guard(|| {
        let m = machine(m)?;
        let mut s = m.recursion_lines()?.join("\n");
        s.push('\n');
        give_string(out, s)
    })
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn ssg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ssg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
