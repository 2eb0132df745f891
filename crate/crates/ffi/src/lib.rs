//! C ABI over `sphsys`.
//!
//! Objects are opaque handles created by `*_new`/`*_from_json` and released
//! by the matching `*_free`. Every fallible call returns a [`SphStatus`];
//! on failure [`sph_last_error`] describes the problem. Strings returned
//! through `char **` are owned by the caller and released with
//! [`sph_string_free`]. Simple roots are indexed from 0 throughout.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde::Serialize;
use sphsys::colors;
use sphsys::enumerate::{self, EnumOptions, SystemStream};
use sphsys::io::{self, CatalogueReport, ColorReport, SystemFile, TangentReport, ValidationOut};
use sphsys::rootsys::{Character, RootSystem};
use sphsys::sphroots::Catalogue;
use sphsys::system::{self, SphericalSystem};
use sphsys::tangent;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidSystem = 4,
    NotClosed = 5,
    RankTooLarge = 6,
    OutOfRange = 7,
    BufferTooSmall = 8,
    Internal = 9,
}

/// A root system together with its spherical roots.
pub struct SphRootSystem {
    cat: Catalogue,
}

/// A spherical system bound to its root system.
pub struct SphSystem {
    cat: Catalogue,
    sys: SphericalSystem,
}

/// Stream of the spherical systems of a root system.
pub struct SphEnumerator {
    cat: Catalogue,
    stream: SystemStream,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl ToString) {
    let text = message.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: SphStatus, message: impl ToString) -> SphStatus {
    set_error(message);
    status
}

fn guarded(body: impl FnOnce() -> SphStatus) -> SphStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(SphStatus::Internal, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, SphStatus> {
    if p.is_null() {
        return Err(fail(SphStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(SphStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn write_json<T: Serialize>(value: &T, out: *mut *mut c_char) -> SphStatus {
    if out.is_null() {
        return fail(SphStatus::NullArgument, "null output pointer");
    }
    let text = serde_json::to_string(value).expect("reports serialize");
    match CString::new(text) {
        Ok(s) => {
            *out = s.into_raw();
            SphStatus::Ok
        }
        Err(_) => fail(SphStatus::Internal, "report contains a NUL byte"),
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(SphStatus::NullArgument, concat!("null argument `", stringify!($p), "`"));
        })+
    };
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sph_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn sph_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sph_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the root system of a Dynkin type such as "B3" or "A1xG2".
///
/// # Safety
/// `dynkin` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sph_root_system_new(dynkin: *const c_char, out: *mut *mut SphRootSystem) -> SphStatus {
    guarded(|| {
        non_null!(out);
        let spec = match read_str(dynkin) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match RootSystem::parse(spec) {
            Ok(rs) => {
                *out = Box::into_raw(Box::new(SphRootSystem { cat: Catalogue::new(&rs) }));
                SphStatus::Ok
            }
            Err(e) => fail(SphStatus::ParseError, e),
        }
    })
}

/// # Safety
/// `h` must be NULL or a handle from [`sph_root_system_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sph_root_system_free(h: *mut SphRootSystem) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_root_system_rank(h: *const SphRootSystem, out: *mut usize) -> SphStatus {
    guarded(|| {
        non_null!(h, out);
        *out = (*h).cat.root_system().rank();
        SphStatus::Ok
    })
}

/// Cartan entry `(alpha_j, alpha_i^vee)`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_root_system_cartan(
    h: *const SphRootSystem,
    i: usize,
    j: usize,
    out: *mut i64,
) -> SphStatus {
    guarded(|| {
        non_null!(h, out);
        let rs = (*h).cat.root_system();
        if i >= rs.rank() || j >= rs.rank() {
            return fail(SphStatus::OutOfRange, format!("index ({i}, {j}) out of range for rank {}", rs.rank()));
        }
        *out = rs.cartan(i, j);
        SphStatus::Ok
    })
}

/// `(chi, alpha^vee)` for `chi` given by `len` simple-root coefficients.
///
/// # Safety
/// `coeffs` must point to `len` readable integers; `h` must be live and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_root_system_pairing(
    h: *const SphRootSystem,
    coeffs: *const i64,
    len: usize,
    alpha: usize,
    out: *mut i64,
) -> SphStatus {
    guarded(|| {
        non_null!(h, coeffs, out);
        let rs = (*h).cat.root_system();
        if len != rs.rank() {
            return fail(SphStatus::OutOfRange, format!("expected {} coefficients, got {len}", rs.rank()));
        }
        let chi = Character(std::slice::from_raw_parts(coeffs, len).to_vec());
        match rs.pairing(&chi, alpha) {
            Ok(v) => {
                *out = v;
                SphStatus::Ok
            }
            Err(e) => fail(SphStatus::OutOfRange, e),
        }
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_root_system_positive_root_count(h: *const SphRootSystem, out: *mut usize) -> SphStatus {
    guarded(|| {
        non_null!(h, out);
        *out = (*h).cat.root_system().positive_roots().len();
        SphStatus::Ok
    })
}

/// Number of spherical roots.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_catalogue_len(h: *const SphRootSystem, out: *mut usize) -> SphStatus {
    guarded(|| {
        non_null!(h, out);
        *out = (*h).cat.len();
        SphStatus::Ok
    })
}

/// Copies the coefficients of spherical root `index` into `buf`, which
/// must hold at least `rank` integers.
///
/// # Safety
/// `buf` must point to `len` writable integers; `h` must be live.
#[no_mangle]
pub unsafe extern "C" fn sph_catalogue_root(
    h: *const SphRootSystem,
    index: usize,
    buf: *mut i64,
    len: usize,
) -> SphStatus {
    guarded(|| {
        non_null!(h, buf);
        let cat = &(*h).cat;
        let Some(root) = cat.roots().get(index) else {
            return fail(SphStatus::OutOfRange, format!("spherical root {index} out of range ({})", cat.len()));
        };
        let coeffs = root.chi.coeffs();
        if len < coeffs.len() {
            return fail(SphStatus::BufferTooSmall, format!("buffer holds {len}, need {}", coeffs.len()));
        }
        ptr::copy_nonoverlapping(coeffs.as_ptr(), buf, coeffs.len());
        SphStatus::Ok
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_catalogue_is_loose(h: *const SphRootSystem, index: usize, out: *mut bool) -> SphStatus {
    guarded(|| {
        non_null!(h, out);
        let cat = &(*h).cat;
        let Some(root) = cat.roots().get(index) else {
            return fail(SphStatus::OutOfRange, format!("spherical root {index} out of range ({})", cat.len()));
        };
        match cat.is_loose(root) {
            Ok(v) => {
                *out = v;
                SphStatus::Ok
            }
            Err(e) => fail(SphStatus::Internal, e),
        }
    })
}

/// The spherical-root catalogue as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_catalogue_json(h: *const SphRootSystem, out: *mut *mut c_char) -> SphStatus {
    guarded(|| {
        non_null!(h);
        write_json(&CatalogueReport::new(&(*h).cat), out)
    })
}

/// Reads a spherical system in the JSON system-file format.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_system_from_json(json: *const c_char, out: *mut *mut SphSystem) -> SphStatus {
    guarded(|| {
        non_null!(out);
        let text = match read_str(json) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match io::parse_system(text) {
            Ok((cat, sys)) => {
                *out = Box::into_raw(Box::new(SphSystem { cat, sys }));
                SphStatus::Ok
            }
            Err(e) => fail(SphStatus::ParseError, e),
        }
    })
}

/// # Safety
/// `h` must be NULL or a system handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sph_system_free(h: *mut SphSystem) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// The system in the JSON system-file format.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_system_to_json(h: *const SphSystem, out: *mut *mut c_char) -> SphStatus {
    guarded(|| {
        non_null!(h);
        let s = &*h;
        write_json(&SystemFile::from_system(s.cat.root_system(), &s.sys), out)
    })
}

/// Whether the system satisfies every axiom.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_system_validate(h: *const SphSystem, out: *mut bool) -> SphStatus {
    guarded(|| {
        non_null!(h, out);
        match system::validate(&(*h).cat, &(*h).sys) {
            Ok(r) => {
                *out = r.is_valid();
                SphStatus::Ok
            }
            Err(e) => fail(SphStatus::ParseError, e),
        }
    })
}

/// The full validation report as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_system_validation_json(h: *const SphSystem, out: *mut *mut c_char) -> SphStatus {
    guarded(|| {
        non_null!(h);
        match system::validate(&(*h).cat, &(*h).sys) {
            Ok(r) => write_json(&ValidationOut::from(&r), out),
            Err(e) => fail(SphStatus::ParseError, e),
        }
    })
}

/// Fails with `InvalidSystem` when the system is not valid.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_system_is_spherically_closed(h: *const SphSystem, out: *mut bool) -> SphStatus {
    guarded(|| {
        non_null!(h, out);
        match system::is_spherically_closed(&(*h).cat, &(*h).sys) {
            Ok(v) => {
                *out = v;
                SphStatus::Ok
            }
            Err(e) => fail(SphStatus::InvalidSystem, e),
        }
    })
}

/// Number of colors of a valid system.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_system_color_count(h: *const SphSystem, out: *mut usize) -> SphStatus {
    guarded(|| {
        non_null!(h, out);
        match colors::color_set(&(*h).cat, &(*h).sys) {
            Ok(c) => {
                *out = c.len();
                SphStatus::Ok
            }
            Err(e) => fail(SphStatus::InvalidSystem, e),
        }
    })
}

/// Colors, weights, `a`-matrix and `Xi(C)` as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_system_colors_json(h: *const SphSystem, out: *mut *mut c_char) -> SphStatus {
    guarded(|| {
        non_null!(h);
        match colors::lambda_weights(&(*h).cat, &(*h).sys) {
            Ok(t) => write_json(&ColorReport::from(&t), out),
            Err(e) => fail(SphStatus::InvalidSystem, e),
        }
    })
}

/// Tangent window and Hilbert-scheme profile as JSON; fails with
/// `NotClosed` on systems that are not spherically closed.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_system_tangent_json(h: *const SphSystem, out: *mut *mut c_char) -> SphStatus {
    guarded(|| {
        non_null!(h);
        let (cat, sys) = (&(*h).cat, &(*h).sys);
        let result = tangent::sigma_delta_window(cat, sys).and_then(|w| Ok((w, tangent::hilb_profile(cat, sys)?)));
        match result {
            Ok((w, p)) => write_json(&TangentReport::new(&w, &p), out),
            Err(e @ tangent::TangentError::NotClosed(_)) => fail(SphStatus::NotClosed, e),
            Err(e) => fail(SphStatus::InvalidSystem, e),
        }
    })
}

/// Starts enumerating the spherical systems of a Dynkin type. A negative
/// `max_sigma` means no bound on `|Sigma|`.
///
/// # Safety
/// `dynkin` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_enumerator_new(
    dynkin: *const c_char,
    closed_only: bool,
    max_sigma: i64,
    out: *mut *mut SphEnumerator,
) -> SphStatus {
    guarded(|| {
        non_null!(out);
        let spec = match read_str(dynkin) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let rs = match RootSystem::parse(spec) {
            Ok(rs) => rs,
            Err(e) => return fail(SphStatus::ParseError, e),
        };
        let opts = EnumOptions { closed_only, max_sigma: usize::try_from(max_sigma).ok(), progress: None };
        match enumerate::enumerate_systems(&rs, opts) {
            Ok(stream) => {
                *out = Box::into_raw(Box::new(SphEnumerator { cat: Catalogue::new(&rs), stream }));
                SphStatus::Ok
            }
            Err(e) => fail(SphStatus::RankTooLarge, e),
        }
    })
}

/// Stores the next system in `*out`, or NULL once the stream is exhausted.
///
/// # Safety
/// `e` must be a live enumerator and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sph_enumerator_next(e: *mut SphEnumerator, out: *mut *mut SphSystem) -> SphStatus {
    guarded(|| {
        non_null!(e, out);
        let en = &mut *e;
        *out = match en.stream.next() {
            Some(sys) => Box::into_raw(Box::new(SphSystem { cat: en.cat.clone(), sys })),
            None => ptr::null_mut(),
        };
        SphStatus::Ok
    })
}

/// # Safety
/// `e` must be NULL or an enumerator not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sph_enumerator_free(e: *mut SphEnumerator) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}
