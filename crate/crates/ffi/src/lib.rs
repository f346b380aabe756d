//! C ABI for the cutkit library.
//!
//! Groups are opaque handles created from generator strings, a
//! presentation, or a constructor expression, and freed with
//! [`cutkit_group_free`]. Functions return a status code
//! ([`CutkitStatus`]); outputs are written through pointers. String
//! outputs are heap-allocated UTF-8, NUL-terminated, and must be
//! released with [`cutkit_string_free`].
//!
//! All functions are safe to call from multiple threads on distinct
//! handles; a handle must not be used concurrently.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use cutkit::catalog;
use cutkit::chartab::{is_cut_by_characters, CharacterTable};
use cutkit::classes::ConjugacyClassTable;
use cutkit::error::Error;
use cutkit::fpgroups::{perm_rep, Presentation};
use cutkit::group::PermutationGroup;
use cutkit::perm::Permutation;
use cutkit::rationality::classify_from_table;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutkitStatus {
    /// Success.
    Ok = 0,
    /// A pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input could not be parsed.
    ParseError = 3,
    /// The group is too large for the requested computation.
    ResourceLimit = 4,
    /// Any other computation error.
    ComputeError = 5,
}

/// Opaque group handle.
pub struct CutkitGroup {
    group: PermutationGroup,
}

fn status_of(err: &Error) -> CutkitStatus {
    match err {
        Error::Parse { .. } | Error::InvalidPermutation(_) | Error::InvalidConstructor(_) => {
            CutkitStatus::ParseError
        }
        Error::TooLargeToEnumerate { .. }
        | Error::CosetBoundExceeded(_)
        | Error::IndexTooLarge { .. }
        | Error::NoModulusPrime { .. } => CutkitStatus::ResourceLimit,
        _ => CutkitStatus::ComputeError,
    }
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CutkitStatus> {
    if s.is_null() {
        return Err(CutkitStatus::NullArgument);
    }
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| CutkitStatus::InvalidUtf8)
}

fn emit_group(group: PermutationGroup, out: *mut *mut CutkitGroup) -> CutkitStatus {
    let handle = Box::new(CutkitGroup { group });
    unsafe { *out = Box::into_raw(handle) };
    CutkitStatus::Ok
}

fn emit_string(text: &str, out: *mut *mut c_char) -> CutkitStatus {
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            CutkitStatus::Ok
        }
        Err(_) => CutkitStatus::ComputeError,
    }
}

/// Create a group from permutation generators in cycle notation,
/// separated by semicolons (e.g. `"(1,2);(1,2,3)"`), acting on
/// `degree` points.
///
/// # Safety
/// `generators` must be a valid NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cutkit_group_from_generators(
    generators: *const c_char,
    degree: usize,
    out: *mut *mut CutkitGroup,
) -> CutkitStatus {
    if out.is_null() {
        return CutkitStatus::NullArgument;
    }
    unsafe { *out = ptr::null_mut() };
    let text = match unsafe { read_str(generators) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    let gens: Result<Vec<Permutation>, Error> = text
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| Permutation::parse(s.trim(), degree))
        .collect();
    match gens.and_then(|g| PermutationGroup::from_generators_with_degree(g, degree)) {
        Ok(group) => emit_group(group, out),
        Err(e) => status_of(&e),
    }
}

/// Create a group from a presentation in the
/// `gens: a b; rels: a^2, ...` grammar via coset enumeration.
///
/// # Safety
/// `presentation` must be a valid NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cutkit_group_from_presentation(
    presentation: *const c_char,
    out: *mut *mut CutkitGroup,
) -> CutkitStatus {
    if out.is_null() {
        return CutkitStatus::NullArgument;
    }
    unsafe { *out = ptr::null_mut() };
    let text = match unsafe { read_str(presentation) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    match Presentation::parse(text).and_then(|p| perm_rep(&p)) {
        Ok(group) => emit_group(group, out),
        Err(e) => status_of(&e),
    }
}

/// Create a group from a constructor expression such as
/// `DP(C(4),S(3))`.
///
/// # Safety
/// `expression` must be a valid NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cutkit_group_from_expression(
    expression: *const c_char,
    out: *mut *mut CutkitGroup,
) -> CutkitStatus {
    if out.is_null() {
        return CutkitStatus::NullArgument;
    }
    unsafe { *out = ptr::null_mut() };
    let text = match unsafe { read_str(expression) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    match catalog::parse_expression(text) {
        Ok(group) => emit_group(group, out),
        Err(e) => status_of(&e),
    }
}

/// Free a group handle. Null is ignored.
///
/// # Safety
/// `group` must be null or a handle produced by this library and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn cutkit_group_free(group: *mut CutkitGroup) {
    if !group.is_null() {
        drop(unsafe { Box::from_raw(group) });
    }
}

/// The order of the group.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cutkit_group_order(
    group: *const CutkitGroup,
    out: *mut u64,
) -> CutkitStatus {
    if group.is_null() || out.is_null() {
        return CutkitStatus::NullArgument;
    }
    unsafe { *out = (*group).group.order() };
    CutkitStatus::Ok
}

/// Whether the group is cut (1) or not (0), by the conjugacy-class
/// criterion.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cutkit_group_is_cut(
    group: *const CutkitGroup,
    out: *mut i32,
) -> CutkitStatus {
    if group.is_null() || out.is_null() {
        return CutkitStatus::NullArgument;
    }
    match cutkit::rationality::is_cut(unsafe { &(*group).group }) {
        Ok(cut) => {
            unsafe { *out = cut as i32 };
            CutkitStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Full classification report as a JSON string, including both cut
/// criteria. Free with [`cutkit_string_free`].
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cutkit_group_classify_json(
    group: *const CutkitGroup,
    out: *mut *mut c_char,
) -> CutkitStatus {
    if group.is_null() || out.is_null() {
        return CutkitStatus::NullArgument;
    }
    unsafe { *out = ptr::null_mut() };
    let g = unsafe { &(*group).group };
    let classes = match ConjugacyClassTable::new(g) {
        Ok(c) => c,
        Err(e) => return status_of(&e),
    };
    let report = classify_from_table(&classes);
    let chartab = match CharacterTable::from_classes(classes) {
        Ok(t) => t,
        Err(e) => return status_of(&e),
    };
    let mut v = serde_json::to_value(&report).expect("report serializes");
    let o = v.as_object_mut().unwrap();
    o.insert(
        "is_cut_by_characters".into(),
        serde_json::json!(is_cut_by_characters(&chartab)),
    );
    emit_string(&v.to_string(), out)
}

/// Free a string produced by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string produced by this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn cutkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn make(expr: &str) -> *mut CutkitGroup {
        let c = CString::new(expr).unwrap();
        let mut out: *mut CutkitGroup = ptr::null_mut();
        let st = unsafe { cutkit_group_from_expression(c.as_ptr(), &mut out) };
        assert_eq!(st, CutkitStatus::Ok);
        out
    }

    #[test]
    fn round_trip_order_and_cut() {
        let g = make("S(4)");
        let mut order = 0u64;
        assert_eq!(unsafe { cutkit_group_order(g, &mut order) }, CutkitStatus::Ok);
        assert_eq!(order, 24);
        let mut cut = -1i32;
        assert_eq!(unsafe { cutkit_group_is_cut(g, &mut cut) }, CutkitStatus::Ok);
        assert_eq!(cut, 1);
        unsafe { cutkit_group_free(g) };
    }

    #[test]
    fn generators_and_presentation_paths() {
        let gens = CString::new("(1,2);(1,2,3)").unwrap();
        let mut out: *mut CutkitGroup = ptr::null_mut();
        let st = unsafe { cutkit_group_from_generators(gens.as_ptr(), 3, &mut out) };
        assert_eq!(st, CutkitStatus::Ok);
        let mut order = 0u64;
        unsafe { cutkit_group_order(out, &mut order) };
        assert_eq!(order, 6);
        unsafe { cutkit_group_free(out) };

        let pres = CString::new("gens: a; rels: a^5").unwrap();
        let mut out: *mut CutkitGroup = ptr::null_mut();
        let st = unsafe { cutkit_group_from_presentation(pres.as_ptr(), &mut out) };
        assert_eq!(st, CutkitStatus::Ok);
        unsafe { cutkit_group_order(out, &mut order) };
        assert_eq!(order, 5);
        unsafe { cutkit_group_free(out) };
    }

    #[test]
    fn classify_json_has_criteria() {
        let g = make("D(16)");
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(
            unsafe { cutkit_group_classify_json(g, &mut s) },
            CutkitStatus::Ok
        );
        let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["is_cut"], false);
        assert_eq!(v["is_cut_by_characters"], false);
        unsafe { cutkit_string_free(s) };
        unsafe { cutkit_group_free(g) };
    }

    #[test]
    fn error_paths() {
        let bad = CString::new("X(3)").unwrap();
        let mut out: *mut CutkitGroup = ptr::null_mut();
        let st = unsafe { cutkit_group_from_expression(bad.as_ptr(), &mut out) };
        assert_eq!(st, CutkitStatus::ParseError);
        assert!(out.is_null());
        assert_eq!(
            unsafe { cutkit_group_order(ptr::null(), ptr::null_mut()) },
            CutkitStatus::NullArgument
        );
        unsafe { cutkit_group_free(ptr::null_mut()) };
        unsafe { cutkit_string_free(ptr::null_mut()) };
    }
}
