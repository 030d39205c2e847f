//! C ABI for the cycrook library.
//!
//! Matrices are opaque handles created from the JSON interchange format;
//! results come back as NUL-terminated JSON or plain-text strings that
//! the caller must release with [`cycrook_string_free`]. Every function
//! returns a status code; on failure the thread-local message from
//! [`cycrook_last_error_message`] describes what went wrong.
//!
//! The generated header lives at `include/cycrook.h`.

use cycrook::algebra::{
    render_univariate, render_xz, xzpoly_to_strings, zpoly_to_strings, BigIntVal,
};
use cycrook::error::Error;
use cycrook::matrix::{circulant_spec_from_json, matrix_from_json, RMatrix};
use cycrook::rook::{
    expand_last_k, expand_row, per_z_oracle_with, rook_poly_oracle_with,
};
use cycrook::structured::{banded_per_z_at, banded_per_z_poly, closed_form_per_z_at, closed_form_per_z_poly};
use libc::c_char;
use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::ptr;

/// Status codes returned by every FFI entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycrookStatus {
    Ok = 0,
    NullArgument = 1,
    ParseError = 2,
    ContractViolation = 3,
    SizeLimit = 4,
    InternalError = 5,
}

/// Evaluation routes selectable over the ABI.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycrookMethod {
    Oracle = 0,
    ExpandLastK = 1,
    ExpandRow = 2,
}

/// Opaque matrix handle.
pub struct CycrookMatrix {
    inner: RMatrix<BigIntVal>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> CycrookStatus {
    match err {
        Error::Input(_) | Error::Structural(_) => CycrookStatus::ParseError,
        Error::Contract(_) => CycrookStatus::ContractViolation,
        Error::Limit(_) => CycrookStatus::SizeLimit,
    }
}

fn fail(err: &Error) -> CycrookStatus {
    set_error(&err.to_string());
    status_of(err)
}

unsafe fn read_cstr<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

fn give_string(s: String, out: *mut *mut c_char) -> CycrookStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            CycrookStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior NUL byte");
            CycrookStatus::InternalError
        }
    }
}

/// Returns the message for the most recent failure on this thread, or
/// NULL. The pointer is valid until the next failing call on the same
/// thread; do not free it.
#[no_mangle]
pub extern "C" fn cycrook_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map(|c| c.as_ptr())
            .unwrap_or(ptr::null())
    })
}

/// Parses `{"rows": m, "cols": n, "entries": [[...]]}` into a handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid
/// pointer; the returned handle must be released with
/// [`cycrook_matrix_free`].
#[no_mangle]
pub unsafe extern "C" fn cycrook_matrix_parse_json(
    json: *const c_char,
    out: *mut *mut CycrookMatrix,
) -> CycrookStatus {
    if out.is_null() {
        set_error("out pointer is NULL");
        return CycrookStatus::NullArgument;
    }
    let Some(text) = read_cstr(json) else {
        set_error("json argument is NULL or not UTF-8");
        return CycrookStatus::NullArgument;
    };
    match matrix_from_json(text) {
        Ok(m) => {
            *out = Box::into_raw(Box::new(CycrookMatrix { inner: m }));
            CycrookStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Releases a handle returned by [`cycrook_matrix_parse_json`].
///
/// # Safety
/// `m` must be a handle from this library, not yet freed; NULL is a
/// no-op.
#[no_mangle]
pub unsafe extern "C" fn cycrook_matrix_free(m: *mut CycrookMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Releases a string returned by any function in this library.
///
/// # Safety
/// `s` must be a string returned by this library, not yet freed; NULL
/// is a no-op.
#[no_mangle]
pub unsafe extern "C" fn cycrook_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn with_matrix<'a>(m: *const CycrookMatrix) -> Option<&'a RMatrix<BigIntVal>> {
    if m.is_null() {
        None
    } else {
        Some(&(*m).inner)
    }
}

/// Computes R(x;z;A) by the requested route and returns it as JSON:
/// a list (ascending x power) of lists (ascending z power) of decimal
/// strings. `param` carries k for ExpandLastK and the row index for
/// ExpandRow; it is ignored for Oracle.
///
/// # Safety
/// `m` must be a live handle and `out_json` a valid pointer; the
/// returned string must be freed with [`cycrook_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cycrook_rook_poly_json(
    m: *const CycrookMatrix,
    method: CycrookMethod,
    param: i32,
    out_json: *mut *mut c_char,
) -> CycrookStatus {
    if out_json.is_null() {
        set_error("out pointer is NULL");
        return CycrookStatus::NullArgument;
    }
    let Some(a) = with_matrix(m) else {
        set_error("matrix handle is NULL");
        return CycrookStatus::NullArgument;
    };
    let result = match method {
        CycrookMethod::Oracle => rook_poly_oracle_with(a, false),
        CycrookMethod::ExpandLastK => expand_last_k(a, param.max(0) as usize),
        CycrookMethod::ExpandRow => expand_row(a, param.max(0) as usize),
    };
    match result {
        Ok(r) => {
            let doc = serde_json_string(&xzpoly_to_strings(&r.poly));
            give_string(doc, out_json)
        }
        Err(e) => fail(&e),
    }
}

/// Computes per(z;A) and returns its coefficients as a JSON list of
/// decimal strings, ascending z power.
///
/// # Safety
/// Same contract as [`cycrook_rook_poly_json`].
#[no_mangle]
pub unsafe extern "C" fn cycrook_per_z_json(
    m: *const CycrookMatrix,
    out_json: *mut *mut c_char,
) -> CycrookStatus {
    if out_json.is_null() {
        set_error("out pointer is NULL");
        return CycrookStatus::NullArgument;
    }
    let Some(a) = with_matrix(m) else {
        set_error("matrix handle is NULL");
        return CycrookStatus::NullArgument;
    };
    match per_z_oracle_with(a, false) {
        Ok(p) => give_string(serde_json_string(&zpoly_to_strings(&p)), out_json),
        Err(e) => fail(&e),
    }
}

/// Renders R(x;z;A) as human-readable text, e.g. `1 + (2*z + 3)*x^1`.
///
/// # Safety
/// Same contract as [`cycrook_rook_poly_json`].
#[no_mangle]
pub unsafe extern "C" fn cycrook_rook_poly_text(
    m: *const CycrookMatrix,
    out_text: *mut *mut c_char,
) -> CycrookStatus {
    if out_text.is_null() {
        set_error("out pointer is NULL");
        return CycrookStatus::NullArgument;
    }
    let Some(a) = with_matrix(m) else {
        set_error("matrix handle is NULL");
        return CycrookStatus::NullArgument;
    };
    match rook_poly_oracle_with(a, false) {
        Ok(r) => give_string(render_xz(&r.poly), out_text),
        Err(e) => fail(&e),
    }
}

/// Evaluates per(z; ·) of a circulant spec JSON
/// (`{"n":,"k":,"r":,"coeffs":[...]}`). With `z_decimal` NULL the
/// result is the full polynomial (JSON list of decimal strings);
/// otherwise a single decimal value at that integer z.
/// `use_closed_form` nonzero selects the two-coefficient closed form
/// (requires r = 0), zero selects the banded profile DP.
///
/// # Safety
/// `spec_json` must be valid NUL-terminated UTF-8; the returned string
/// must be freed with [`cycrook_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cycrook_circulant_per_z(
    spec_json: *const c_char,
    z_decimal: *const c_char,
    use_closed_form: i32,
    out: *mut *mut c_char,
) -> CycrookStatus {
    if out.is_null() {
        set_error("out pointer is NULL");
        return CycrookStatus::NullArgument;
    }
    let Some(text) = read_cstr(spec_json) else {
        set_error("spec_json is NULL or not UTF-8");
        return CycrookStatus::NullArgument;
    };
    let spec = match circulant_spec_from_json(text) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    let z_binding: Option<BigIntVal> = match read_cstr(z_decimal) {
        None => None,
        Some(s) => match s.parse() {
            Ok(v) => Some(v),
            Err(_) => {
                set_error("z_decimal is not a decimal integer");
                return CycrookStatus::ParseError;
            }
        },
    };
    if use_closed_form != 0 {
        if spec.band() != 2 || spec.r != 0 {
            set_error("closed form requires exactly two coefficients and r = 0");
            return CycrookStatus::ContractViolation;
        }
        let (n, k) = (spec.n as u64, spec.k as u64);
        let (a0, a1) = (&spec.coeffs[0], &spec.coeffs[1]);
        return match z_binding {
            Some(z) => give_string(closed_form_per_z_at(n, k, a0, a1, &z).to_string(), out),
            None => give_string(
                serde_json_string(&zpoly_to_strings(&closed_form_per_z_poly(n, k, a0, a1))),
                out,
            ),
        };
    }
    match z_binding {
        Some(z) => match banded_per_z_at(&spec, &z) {
            Ok(v) => give_string(v.value.to_string(), out),
            Err(e) => fail(&e),
        },
        None => match banded_per_z_poly(&spec) {
            Ok(v) => give_string(serde_json_string(&zpoly_to_strings(&v.value)), out),
            Err(e) => fail(&e),
        },
    }
}

/// Renders per(z;A) as human-readable text, e.g. `z^2 + z`.
///
/// # Safety
/// Same contract as [`cycrook_per_z_json`].
#[no_mangle]
pub unsafe extern "C" fn cycrook_per_z_text(
    m: *const CycrookMatrix,
    out_text: *mut *mut c_char,
) -> CycrookStatus {
    if out_text.is_null() {
        set_error("out pointer is NULL");
        return CycrookStatus::NullArgument;
    }
    let Some(a) = with_matrix(m) else {
        set_error("matrix handle is NULL");
        return CycrookStatus::NullArgument;
    };
    match per_z_oracle_with(a, false) {
        Ok(p) => give_string(render_univariate(&p, "z"), out_text),
        Err(e) => fail(&e),
    }
}

fn serde_json_string<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("JSON-safe value")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    unsafe fn take_string(p: *mut c_char) -> String {
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        cycrook_string_free(p);
        s
    }

    fn parse(json: &str) -> *mut CycrookMatrix {
        let c = CString::new(json).unwrap();
        let mut handle: *mut CycrookMatrix = ptr::null_mut();
        let status = unsafe { cycrook_matrix_parse_json(c.as_ptr(), &mut handle) };
        assert_eq!(status, CycrookStatus::Ok);
        handle
    }

    #[test]
    fn per_z_of_all_ones() {
        let m = parse(r#"{"rows":2,"cols":2,"entries":[[1,1],[1,1]]}"#);
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe { cycrook_per_z_json(m, &mut out) };
        assert_eq!(status, CycrookStatus::Ok);
        assert_eq!(unsafe { take_string(out) }, r#"["0","1","1"]"#);
        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(unsafe { cycrook_per_z_text(m, &mut text) }, CycrookStatus::Ok);
        assert_eq!(unsafe { take_string(text) }, "z^2 + z");
        unsafe { cycrook_matrix_free(m) };
    }

    #[test]
    fn rook_routes_agree() {
        let m = parse(r#"{"rows":2,"cols":3,"entries":[[1,2,0],[3,-1,2]]}"#);
        let mut via_oracle: *mut c_char = ptr::null_mut();
        let mut via_expand: *mut c_char = ptr::null_mut();
        unsafe {
            assert_eq!(
                cycrook_rook_poly_json(m, CycrookMethod::Oracle, 0, &mut via_oracle),
                CycrookStatus::Ok
            );
            assert_eq!(
                cycrook_rook_poly_json(m, CycrookMethod::ExpandLastK, 1, &mut via_expand),
                CycrookStatus::Ok
            );
            assert_eq!(take_string(via_oracle), take_string(via_expand));
            cycrook_matrix_free(m);
        }
    }

    #[test]
    fn errors_set_status_and_message() {
        let c = CString::new("not json").unwrap();
        let mut handle: *mut CycrookMatrix = ptr::null_mut();
        let status = unsafe { cycrook_matrix_parse_json(c.as_ptr(), &mut handle) };
        assert_eq!(status, CycrookStatus::ParseError);
        let msg = unsafe { CStr::from_ptr(cycrook_last_error_message()) };
        assert!(msg.to_str().unwrap().contains("bad matrix JSON"));

        // wide matrix violates the m <= n contract
        let m = parse(r#"{"rows":2,"cols":1,"entries":[[1],[2]]}"#);
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe { cycrook_per_z_json(m, &mut out) };
        assert_eq!(status, CycrookStatus::ContractViolation);
        unsafe { cycrook_matrix_free(m) };
    }

    #[test]
    fn circulant_entry_points() {
        let spec = CString::new(r#"{"n":2,"k":1,"r":0,"coeffs":[1,1]}"#).unwrap();
        let z1 = CString::new("1").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        unsafe {
            // closed form, symbolic z
            assert_eq!(
                cycrook_circulant_per_z(spec.as_ptr(), ptr::null(), 1, &mut out),
                CycrookStatus::Ok
            );
            assert_eq!(take_string(out), r#"["0","1","1"]"#);
            // dp at z = 1
            assert_eq!(
                cycrook_circulant_per_z(spec.as_ptr(), z1.as_ptr(), 0, &mut out),
                CycrookStatus::Ok
            );
            assert_eq!(take_string(out), "2");
        }
    }
}
