//! C ABI for the orbitzeta library.
//!
//! Conventions:
//! - Partitions are opaque [`OzPartition`] handles created by
//!   [`oz_partition_parse`] and released by [`oz_partition_free`].
//! - Every fallible call returns an [`OzStatus`]; results come back through
//!   out-pointers. On any non-OK status the out-pointer is left untouched
//!   and a message is retrievable once via [`oz_last_error_message`].
//! - All returned strings are NUL-terminated UTF-8 allocated by this
//!   library; release them with [`oz_string_free`]. Formats (canonical
//!   polynomial text, JSON with decimal-string integers, CSV) are identical
//!   to the `orbitzeta` CLI output.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::str::FromStr;

use orbitzeta::analysis::{
    hilbert_sd_simplex, igusa_check, natural_boundary_report, reduced_series,
};
use orbitzeta::carlitz::{
    charney_davis, conjecture_scan, cpoly_enum, cpoly_macmahon, descent_poly, funeq_check,
    unitary_factor,
};
use orbitzeta::orbit::{
    asymptotic_fit, dirichlet_coeffs, euler_factor, euler_funeq_check, shifted_euler_factor,
};
use orbitzeta::render;
use orbitzeta::{Error, Partition};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OzStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed input (bad partition syntax, nonpositive part, ...).
    Validation = 3,
    /// Input outside an operation's mathematical domain.
    Domain = 4,
    /// An exact division failed.
    Divisibility = 5,
    /// The enumeration ceiling was exceeded.
    ResourceLimit = 6,
    /// A mathematical invariant failed; report this as a bug.
    Internal = 7,
}

/// Opaque partition handle.
pub struct OzPartition(Partition);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn record_error(message: String) {
    let message = CString::new(message).unwrap_or_else(|_| CString::new("error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn status_of(err: Error) -> OzStatus {
    let status = match err {
        Error::Validation(_) => OzStatus::Validation,
        Error::Domain(_) => OzStatus::Domain,
        Error::Divisibility(_) => OzStatus::Divisibility,
        Error::Resource(_) => OzStatus::ResourceLimit,
        Error::Internal(_) => OzStatus::Internal,
    };
    record_error(err.to_string());
    status
}

fn null_pointer(what: &str) -> OzStatus {
    record_error(format!("{what} is NULL"));
    OzStatus::NullPointer
}

/// Writes `text` to `out` as a freshly allocated C string.
unsafe fn emit(out: *mut *mut c_char, text: String) -> OzStatus {
    match CString::new(text) {
        Ok(s) => {
            *out = s.into_raw();
            OzStatus::Ok
        }
        Err(_) => {
            record_error("output contained an interior NUL byte".into());
            OzStatus::Internal
        }
    }
}

unsafe fn partition_ref<'a>(p: *const OzPartition) -> Option<&'a Partition> {
    p.as_ref().map(|h| &h.0)
}

fn json_string(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn oz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Returns and clears the message of the most recent error on this thread,
/// or NULL if none. Free with [`oz_string_free`].
#[no_mangle]
pub extern "C" fn oz_last_error_message() -> *mut c_char {
    LAST_ERROR
        .with(|slot| slot.borrow_mut().take())
        .map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Frees a string allocated by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be a pointer previously returned by one of this library's
/// string-producing functions and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a partition from text: comma-separated parts ("3,3,1") or the
/// rectangle shorthand "r^m" ("2^3").
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out` must be a valid
/// pointer. On OK the caller owns the handle and must release it with
/// [`oz_partition_free`].
#[no_mangle]
pub unsafe extern "C" fn oz_partition_parse(
    text: *const c_char,
    out: *mut *mut OzPartition,
) -> OzStatus {
    if text.is_null() {
        return null_pointer("text");
    }
    if out.is_null() {
        return null_pointer("out");
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        record_error("partition text is not valid UTF-8".into());
        return OzStatus::InvalidUtf8;
    };
    match Partition::from_str(text) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(OzPartition(p)));
            OzStatus::Ok
        }
        Err(e) => status_of(e),
    }
}

/// Releases a partition handle. NULL is a no-op.
///
/// # Safety
/// `p` must come from [`oz_partition_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn oz_partition_free(p: *mut OzPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Sum of the parts (N). Returns 0 for NULL.
///
/// # Safety
/// `p` must be a live handle from [`oz_partition_parse`] or NULL.
#[no_mangle]
pub unsafe extern "C" fn oz_partition_n(p: *const OzPartition) -> u32 {
    partition_ref(p).map_or(0, Partition::n)
}

/// Number of parts (m). Returns 0 for NULL.
///
/// # Safety
/// `p` must be a live handle from [`oz_partition_parse`] or NULL.
#[no_mangle]
pub unsafe extern "C" fn oz_partition_m(p: *const OzPartition) -> u32 {
    partition_ref(p).map_or(0, Partition::m)
}

/// True iff all parts are equal. False for NULL.
///
/// # Safety
/// `p` must be a live handle from [`oz_partition_parse`] or NULL.
#[no_mangle]
pub unsafe extern "C" fn oz_partition_is_rectangle(p: *const OzPartition) -> bool {
    partition_ref(p).is_some_and(Partition::is_rectangle)
}

macro_rules! require {
    ($ptr:expr, $name:literal) => {
        match partition_ref($ptr) {
            Some(p) => p,
            None => return null_pointer($name),
        }
    };
}

/// C_lambda(x,q) in canonical text form. `use_enumeration` selects the
/// enumeration route (subject to `ceiling`) instead of the default
/// generating-identity route.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid. Free the result with
/// [`oz_string_free`].
#[no_mangle]
pub unsafe extern "C" fn oz_cpoly_text(
    p: *const OzPartition,
    use_enumeration: bool,
    ceiling: u64,
    out: *mut *mut c_char,
) -> OzStatus {
    let p = require!(p, "partition");
    if out.is_null() {
        return null_pointer("out");
    }
    let result = if use_enumeration { cpoly_enum(p, ceiling) } else { cpoly_macmahon(p) };
    match result {
        Ok(r) => emit(out, r.poly.to_text("x", "q")),
        Err(e) => status_of(e),
    }
}

/// The descent polynomial C_lambda(x,1) in canonical text form.
///
/// # Safety
/// As for [`oz_cpoly_text`].
#[no_mangle]
pub unsafe extern "C" fn oz_descent_poly_text(
    p: *const OzPartition,
    out: *mut *mut c_char,
) -> OzStatus {
    let p = require!(p, "partition");
    if out.is_null() {
        return null_pointer("out");
    }
    match descent_poly(p) {
        Ok(poly) => emit(out, poly.to_text("x", "q")),
        Err(e) => status_of(e),
    }
}

/// C_lambda(-1,1) as a decimal string.
///
/// # Safety
/// As for [`oz_cpoly_text`].
#[no_mangle]
pub unsafe extern "C" fn oz_charney_davis_decimal(
    p: *const OzPartition,
    out: *mut *mut c_char,
) -> OzStatus {
    let p = require!(p, "partition");
    if out.is_null() {
        return null_pointer("out");
    }
    match charney_davis(p) {
        Ok(v) => emit(out, v.to_string()),
        Err(e) => status_of(e),
    }
}

/// JSON report of the polynomial functional equation of C_lambda.
///
/// # Safety
/// As for [`oz_cpoly_text`].
#[no_mangle]
pub unsafe extern "C" fn oz_funeq_json(p: *const OzPartition, out: *mut *mut c_char) -> OzStatus {
    let p = require!(p, "partition");
    if out.is_null() {
        return null_pointer("out");
    }
    match funeq_check(p) {
        Ok(report) => emit(out, json_string(&render::funeq_json(&report))),
        Err(e) => status_of(e),
    }
}

/// JSON report of the Euler-factor functional equation under p -> p^-1.
///
/// # Safety
/// As for [`oz_cpoly_text`].
#[no_mangle]
pub unsafe extern "C" fn oz_euler_funeq_json(
    p: *const OzPartition,
    prime: u64,
    out: *mut *mut c_char,
) -> OzStatus {
    let p = require!(p, "partition");
    if out.is_null() {
        return null_pointer("out");
    }
    let report = match funeq_check(p) {
        Ok(r) => r,
        Err(e) => return status_of(e),
    };
    let holds = if report.holds {
        match euler_funeq_check(p.parts()[0], p.m(), prime) {
            Ok(h) => h,
            Err(e) => return status_of(e),
        }
    } else {
        false
    };
    emit(out, json_string(&render::euler_funeq_json(&report, prime, holds)))
}

/// JSON report of the Charney-Davis quantity and the prescribed unitary
/// factor probe.
///
/// # Safety
/// As for [`oz_cpoly_text`].
#[no_mangle]
pub unsafe extern "C" fn oz_unitary_json(p: *const OzPartition, out: *mut *mut c_char) -> OzStatus {
    let p = require!(p, "partition");
    if out.is_null() {
        return null_pointer("out");
    }
    match unitary_factor(p) {
        Ok(report) => emit(out, json_string(&render::unitary_json(&report))),
        Err(e) => status_of(e),
    }
}

/// CSV scan (header plus one row per pair) of C_{(l1,l2)}(-1,1) over
/// l1 > l2 >= 1 with l1 + l2 <= max_n.
///
/// # Safety
/// `out` must be valid; free the result with [`oz_string_free`].
#[no_mangle]
pub unsafe extern "C" fn oz_scan_conjecture_csv(max_n: u32, out: *mut *mut c_char) -> OzStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    match conjecture_scan(max_n) {
        Ok(rows) => {
            let mut csv = String::from(render::SCAN_CSV_HEADER);
            for row in &rows {
                csv.push('\n');
                csv.push_str(&render::scan_csv_row(row));
            }
            csv.push('\n');
            emit(out, csv)
        }
        Err(e) => status_of(e),
    }
}

/// CSV of (n, O(n), partial sum) for n = 1..n_max.
///
/// # Safety
/// As for [`oz_cpoly_text`].
#[no_mangle]
pub unsafe extern "C" fn oz_orbit_counts_csv(
    p: *const OzPartition,
    n_max: u64,
    out: *mut *mut c_char,
) -> OzStatus {
    let p = require!(p, "partition");
    if out.is_null() {
        return null_pointer("out");
    }
    match dirichlet_coeffs(p, n_max) {
        Ok(data) => {
            let mut csv = String::from(render::ORBIT_CSV_HEADER);
            for n in 1..=n_max {
                csv.push('\n');
                csv.push_str(&render::orbit_csv_row(&data, n));
            }
            csv.push('\n');
            emit(out, csv)
        }
        Err(e) => status_of(e),
    }
}

/// JSON of the Euler factor at a prime with series prefix through t^series_k.
///
/// # Safety
/// As for [`oz_cpoly_text`].
#[no_mangle]
pub unsafe extern "C" fn oz_euler_factor_json(
    p: *const OzPartition,
    prime: u64,
    series_k: usize,
    out: *mut *mut c_char,
) -> OzStatus {
    let p = require!(p, "partition");
    if out.is_null() {
        return null_pointer("out");
    }
    match euler_factor(p, prime, series_k) {
        Ok(f) => emit(out, json_string(&render::euler_factor_json(&f))),
        Err(e) => status_of(e),
    }
}

/// JSON of the Euler factor of the m-th power of a map shifted by the
/// integer `shift`.
///
/// # Safety
/// `out` must be valid; free the result with [`oz_string_free`].
#[no_mangle]
pub unsafe extern "C" fn oz_shifted_euler_factor_json(
    m: u32,
    shift: u32,
    prime: u64,
    series_k: usize,
    out: *mut *mut c_char,
) -> OzStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    match shifted_euler_factor(m, shift, prime, series_k) {
        Ok(f) => emit(out, json_string(&render::euler_factor_json(&f))),
        Err(e) => status_of(e),
    }
}

/// JSON of the partial-sum growth fit (slope, K estimate, decade ratios).
///
/// # Safety
/// As for [`oz_cpoly_text`].
#[no_mangle]
pub unsafe extern "C" fn oz_asymptotics_json(
    p: *const OzPartition,
    n_max: u64,
    out: *mut *mut c_char,
) -> OzStatus {
    let p = require!(p, "partition");
    if out.is_null() {
        return null_pointer("out");
    }
    match asymptotic_fit(p, n_max) {
        Ok(fit) => emit(out, json_string(&render::asymptotic_fit_json(&fit))),
        Err(e) => status_of(e),
    }
}

/// JSON natural-boundary classification (type, Newton data, ghost factor,
/// B-polynomials).
///
/// # Safety
/// As for [`oz_cpoly_text`].
#[no_mangle]
pub unsafe extern "C" fn oz_boundary_report_json(
    p: *const OzPartition,
    out: *mut *mut c_char,
) -> OzStatus {
    let p = require!(p, "partition");
    if out.is_null() {
        return null_pointer("out");
    }
    match natural_boundary_report(p) {
        Ok(report) => emit(out, json_string(&render::boundary_report_json(&report))),
        Err(e) => status_of(e),
    }
}

/// Compares the Igusa-form rewriting of the Euler factor with its series
/// through t^series_k; writes the verdict to `out_holds`.
///
/// # Safety
/// `p` must be a live handle; `out_holds` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oz_igusa_check(
    p: *const OzPartition,
    prime: u64,
    series_k: usize,
    ceiling: u64,
    out_holds: *mut bool,
) -> OzStatus {
    let p = require!(p, "partition");
    if out_holds.is_null() {
        return null_pointer("out_holds");
    }
    match igusa_check(p, prime, series_k, ceiling) {
        Ok(holds) => {
            *out_holds = holds;
            OzStatus::Ok
        }
        Err(e) => status_of(e),
    }
}

/// The reduced series C_lambda(t,1)/(1-t)^N in text form.
///
/// # Safety
/// As for [`oz_cpoly_text`].
#[no_mangle]
pub unsafe extern "C" fn oz_reduced_text(p: *const OzPartition, out: *mut *mut c_char) -> OzStatus {
    let p = require!(p, "partition");
    if out.is_null() {
        return null_pointer("out");
    }
    match reduced_series(p) {
        Ok(series) => emit(out, render::series_text(&series, "t", "_")),
        Err(e) => status_of(e),
    }
}

/// Hilbert series of the face ring of the barycentric subdivision of the
/// (m-1)-simplex, in text form.
///
/// # Safety
/// `out` must be valid; free the result with [`oz_string_free`].
#[no_mangle]
pub unsafe extern "C" fn oz_hilbert_sd_text(m: u32, out: *mut *mut c_char) -> OzStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    match hilbert_sd_simplex(m) {
        Ok(series) => emit(out, render::series_text(&series, "t", "_")),
        Err(e) => status_of(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn parse(text: &str) -> *mut OzPartition {
        let c = CString::new(text).unwrap();
        let mut handle: *mut OzPartition = ptr::null_mut();
        assert_eq!(oz_partition_parse(c.as_ptr(), &mut handle), OzStatus::Ok);
        assert!(!handle.is_null());
        handle
    }

    unsafe fn take_string(s: *mut c_char) -> String {
        assert!(!s.is_null());
        let owned = CStr::from_ptr(s).to_str().unwrap().to_string();
        oz_string_free(s);
        owned
    }

    #[test]
    fn parse_and_inspect() {
        unsafe {
            let p = parse("3,3,1");
            assert_eq!(oz_partition_n(p), 7);
            assert_eq!(oz_partition_m(p), 3);
            assert!(!oz_partition_is_rectangle(p));
            oz_partition_free(p);

            let r = parse("2^3");
            assert!(oz_partition_is_rectangle(r));
            assert_eq!(oz_partition_n(r), 6);
            oz_partition_free(r);
        }
    }

    #[test]
    fn parse_errors_set_message() {
        unsafe {
            let c = CString::new("0,1").unwrap();
            let mut handle: *mut OzPartition = ptr::null_mut();
            assert_eq!(oz_partition_parse(c.as_ptr(), &mut handle), OzStatus::Validation);
            assert!(handle.is_null());
            let msg = take_string(oz_last_error_message());
            assert!(msg.contains("positive"), "{msg}");
            // Message is cleared after retrieval.
            assert!(oz_last_error_message().is_null());
        }
    }

    #[test]
    fn cpoly_text_both_routes() {
        unsafe {
            let p = parse("2,1");
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(oz_cpoly_text(p, false, 0, &mut s), OzStatus::Ok);
            assert_eq!(take_string(s), "1 + x*q + x*q^2");
            let mut s2: *mut c_char = ptr::null_mut();
            assert_eq!(oz_cpoly_text(p, true, 1000, &mut s2), OzStatus::Ok);
            assert_eq!(take_string(s2), "1 + x*q + x*q^2");
            oz_partition_free(p);
        }
    }

    #[test]
    fn ceiling_maps_to_resource_status() {
        unsafe {
            let p = parse("2,2");
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(oz_cpoly_text(p, true, 3, &mut s), OzStatus::ResourceLimit);
            assert!(s.is_null());
            oz_string_free(oz_last_error_message());
            oz_partition_free(p);
        }
    }

    #[test]
    fn json_and_csv_surfaces() {
        unsafe {
            let p = parse("1,1");
            let mut s: *mut c_char = ptr::null_mut();

            assert_eq!(oz_euler_factor_json(p, 2, 5, &mut s), OzStatus::Ok);
            let json = take_string(s);
            assert!(json.contains("\"numerator_text\": \"1 + t\""), "{json}");

            let mut s = ptr::null_mut();
            assert_eq!(oz_orbit_counts_csv(p, 6, &mut s), OzStatus::Ok);
            let csv = take_string(s);
            assert!(csv.ends_with("6,20,47\n"), "{csv}");

            let mut s = ptr::null_mut();
            assert_eq!(oz_funeq_json(p, &mut s), OzStatus::Ok);
            assert!(take_string(s).contains("\"holds\": true"));

            let mut holds = false;
            assert_eq!(oz_igusa_check(p, 2, 10, 1000, &mut holds), OzStatus::Ok);
            assert!(holds);

            oz_partition_free(p);
        }
    }

    #[test]
    fn domain_errors_reported() {
        unsafe {
            let p = parse("1,1");
            let mut s: *mut c_char = ptr::null_mut();
            // (1,1) has no natural boundary; expect a domain error.
            assert_eq!(oz_boundary_report_json(p, &mut s), OzStatus::Domain);
            oz_string_free(oz_last_error_message());
            // Non-prime modulus.
            assert_eq!(oz_euler_factor_json(p, 6, 3, &mut s), OzStatus::Domain);
            oz_string_free(oz_last_error_message());
            oz_partition_free(p);
        }
    }

    #[test]
    fn scan_and_hilbert() {
        unsafe {
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(oz_scan_conjecture_csv(5, &mut s), OzStatus::Ok);
            let csv = take_string(s);
            assert!(csv.starts_with("lambda1,lambda2,value,stanton_covered\n2,1,-1,1\n"), "{csv}");

            let mut s = ptr::null_mut();
            assert_eq!(oz_hilbert_sd_text(3, &mut s), OzStatus::Ok);
            assert_eq!(take_string(s), "(1 + 4*t + t^2) / (1 - t)^3");
        }
    }

    #[test]
    fn null_arguments_are_rejected() {
        unsafe {
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(oz_cpoly_text(ptr::null(), false, 0, &mut s), OzStatus::NullPointer);
            oz_string_free(oz_last_error_message());
            let p = parse("2,1");
            assert_eq!(oz_cpoly_text(p, false, 0, ptr::null_mut()), OzStatus::NullPointer);
            oz_string_free(oz_last_error_message());
            assert_eq!(oz_partition_n(ptr::null()), 0);
            oz_partition_free(p);
            oz_partition_free(ptr::null_mut());
            oz_string_free(ptr::null_mut());
        }
    }

    #[test]
    fn generated_header_exists() {
        let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("include")
            .join("orbitzeta.h");
        let text = std::fs::read_to_string(header).expect("header generated by build script");
        for symbol in [
            "oz_partition_parse",
            "oz_cpoly_text",
            "oz_euler_factor_json",
            "oz_boundary_report_json",
            "oz_string_free",
            "typedef struct OzPartition OzPartition",
        ] {
            assert!(text.contains(symbol), "header missing {symbol}");
        }
    }

    #[test]
    fn version_is_static() {
        let v = unsafe { CStr::from_ptr(oz_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
