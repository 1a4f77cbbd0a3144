//! C interface to `moldkit`.
//!
//! Representations cross the boundary as JSON documents and live behind the
//! opaque [`MoldkitRep`] handle. Every function returns a [`MoldkitStatus`];
//! on failure [`moldkit_last_error_message`] describes the error for the
//! calling thread. Strings returned through out-parameters are owned by the
//! caller and must be released with [`moldkit_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use moldkit::borel::{self, discriminant2};
use moldkit::canonical::{canonical_form, equivalent, Equivalence};
use moldkit::moduli::{enumerate_molds, predicted_count, CensusOptions};
use moldkit::{io, Config, Error, Representation};

/// Status codes. The first four agree with the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoldkitStatus {
    Ok = 0,
    /// The input is valid but the operation does not apply (for example, no Borel mold).
    DomainError = 1,
    InputError = 2,
    ResourceLimit = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Opaque handle to a validated representation.
pub struct MoldkitRep {
    rep: Representation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MoldkitStatus {
    match e.exit_code() {
        2 => MoldkitStatus::InputError,
        3 => MoldkitStatus::ResourceLimit,
        _ => MoldkitStatus::DomainError,
    }
}

fn guard(f: impl FnOnce() -> Result<(), MoldkitStatus>) -> MoldkitStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MoldkitStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic".into());
            MoldkitStatus::Panic
        }
    }
}

fn fail(e: Error) -> MoldkitStatus {
    let status = status_of(&e);
    set_error(e.to_string());
    status
}

fn null(what: &str) -> MoldkitStatus {
    set_error(format!("{what} is null"));
    MoldkitStatus::NullPointer
}

unsafe fn rep_ref<'a>(rep: *const MoldkitRep, what: &str) -> Result<&'a Representation, MoldkitStatus> {
    rep.as_ref().map(|h| &h.rep).ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), MoldkitStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), MoldkitStatus> {
    let c = CString::new(s).map_err(|_| fail(Error::Invariant("output contains a nul byte".into())))?;
    write(out, c.into_raw())
}

/// Parses a representation document and stores a new handle in `*out`.
///
/// # Safety
/// `json` must be a valid nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn moldkit_rep_from_json(json: *const c_char, out: *mut *mut MoldkitRep) -> MoldkitStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|_| fail(Error::Input("document is not UTF-8".into())))?;
        let rep = io::parse(text, &Config::from_env()).map_err(fail)?;
        write(out, Box::into_raw(Box::new(MoldkitRep { rep })))
    })
}

/// Releases a handle. Passing null is a no-op.
///
/// # Safety
/// `rep` must come from [`moldkit_rep_from_json`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn moldkit_rep_free(rep: *mut MoldkitRep) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// The matrix size `n` of a representation.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn moldkit_rep_degree(rep: *const MoldkitRep, out: *mut usize) -> MoldkitStatus {
    guard(|| write(out, rep_ref(rep, "rep")?.degree()))
}

/// Whether the images generate a Borel mold.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn moldkit_is_borel(rep: *const MoldkitRep, out: *mut bool) -> MoldkitStatus {
    guard(|| write(out, borel::is_borel(rep_ref(rep, "rep")?)))
}

/// Dimension of the algebra generated by the images.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn moldkit_closure_rank(rep: *const MoldkitRep, out: *mut usize) -> MoldkitStatus {
    guard(|| write(out, borel::closure(rep_ref(rep, "rep")?).rank()))
}

/// Canonical data as a JSON document.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn moldkit_canonical_json(
    rep: *const MoldkitRep,
    max_word_len: usize,
    out: *mut *mut c_char,
) -> MoldkitStatus {
    guard(|| {
        let data = canonical_form(rep_ref(rep, "rep")?, max_word_len).map_err(fail)?;
        write_string(out, data.to_json_string())
    })
}

/// Stores 1 (equivalent), 0 (inequivalent) or −1 (undecided) in `*out`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn moldkit_equivalent(
    a: *const MoldkitRep,
    b: *const MoldkitRep,
    max_word_len: usize,
    out: *mut i32,
) -> MoldkitStatus {
    guard(|| {
        let answer = equivalent(rep_ref(a, "a")?, rep_ref(b, "b")?, max_word_len).map_err(fail)?;
        let code = match answer {
            Equivalence::Equivalent => 1,
            Equivalence::Inequivalent => 0,
            Equivalence::Undecided => -1,
        };
        write(out, code)
    })
}

/// `Δ(A, B)` of the first two generators of a degree-2 representation, as a decimal string.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn moldkit_discriminant(rep: *const MoldkitRep, out: *mut *mut c_char) -> MoldkitStatus {
    guard(|| {
        let g = rep_ref(rep, "rep")?.generators();
        if g.len() < 2 {
            return Err(fail(Error::Input("need at least 2 generators".into())));
        }
        write_string(out, discriminant2(&g[0], &g[1]).map_err(fail)?.to_string())
    })
}

/// Census of `d`-dimensional unital subalgebras of `M_n(F_q)` as JSON.
///
/// `jobs = 0` uses every core. Searches above the configured candidate
/// limit fail with [`MoldkitStatus::ResourceLimit`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn moldkit_enumerate_molds(
    n: usize,
    d: usize,
    q: u64,
    jobs: usize,
    out: *mut *mut c_char,
) -> MoldkitStatus {
    guard(|| {
        let config = Config::from_env();
        if n > config.max_degree {
            return Err(fail(Error::Input(format!("degree {n} exceeds {}", config.max_degree))));
        }
        let options =
            CensusOptions { jobs: (jobs > 0).then_some(jobs), limit: config.census_limit, ..Default::default() };
        let census = enumerate_molds(n, d, q, &options).map_err(fail)?;
        write_string(out, census.to_json().to_string())
    })
}

/// The predicted census count. `*known` is false when no prediction exists
/// or the value does not fit in 64 bits.
///
/// # Safety
/// `count` and `known` must be writable.
#[no_mangle]
pub unsafe extern "C" fn moldkit_predicted_count(
    n: usize,
    d: usize,
    q: u64,
    count: *mut u64,
    known: *mut bool,
) -> MoldkitStatus {
    guard(|| {
        if !moldkit::exact::is_prime(q) {
            return Err(fail(Error::NotPrime(q)));
        }
        let value = predicted_count(n, d, q).and_then(|c| u64::try_from(c).ok());
        write(count, value.unwrap_or(0))?;
        write(known, value.is_some())
    })
}

/// Message of the last failed call on this thread, or null.
///
/// The pointer stays valid until the next `moldkit_*` call on the same thread.
#[no_mangle]
pub extern "C" fn moldkit_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Passing null is a no-op.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn moldkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
