use std::ffi::{CStr, CString};
use std::ptr;

use dtcodes_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    dt_string_free(s);
    out
}

unsafe fn last_error() -> String {
    take(dt_last_error_message())
}

#[test]
fn code_round_trip() {
    unsafe {
        let mut code = ptr::null_mut();
        assert_eq!(dt_code_from_row(3, c("(1,2,1,1,1,0)").as_ptr(), true, &mut code), DtStatus::Ok);
        assert!(dt_last_error_message().is_null());
        let (mut n, mut k, mut d) = (0, 0, 0);
        assert_eq!(dt_code_parameters(code, &mut n, &mut k), DtStatus::Ok);
        assert_eq!((n, k), (12, 6));
        assert_eq!(dt_code_minimum_weight(code, &mut d), DtStatus::Ok);
        assert_eq!(d, 6);
        let mut fsd = false;
        assert_eq!(dt_code_is_formally_self_dual(code, &mut fsd), DtStatus::Ok);
        assert!(fsd);
        let mut json = ptr::null_mut();
        assert_eq!(dt_code_weight_enumerator(code, &mut json), DtStatus::Ok);
        let we: Vec<String> = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(we[6], "264");

        let mut dual = ptr::null_mut();
        assert_eq!(dt_code_dual(code, &mut dual), DtStatus::Ok);
        let mut eq = false;
        assert_eq!(dt_codes_equivalent(code, dual, &mut eq), DtStatus::Ok);
        assert!(eq);
        dt_code_free(dual);
        dt_code_free(code);
    }
}

#[test]
fn triples_and_equivalence() {
    unsafe {
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(dt_code_from_triple(4, c("0;(1,1,1);(1,w,1)").as_ptr(), &mut a), DtStatus::Ok);
        assert_eq!(dt_code_from_triple(4, c("0;(1,1,1);(1,v,1)").as_ptr(), &mut b), DtStatus::Ok);
        let mut eq = true;
        assert_eq!(dt_codes_equivalent(a, b, &mut eq), DtStatus::Ok);
        assert!(!eq);
        dt_code_free(a);
        dt_code_free(b);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut code = ptr::null_mut();
        assert_eq!(dt_code_from_triple(4, c("0;(1,x);(1,1)").as_ptr(), &mut code), DtStatus::Parse);
        assert!(code.is_null());
        assert!(last_error().contains("x"));
        assert_eq!(dt_code_from_triple(5, c("0;();()").as_ptr(), &mut code), DtStatus::Parse);
        assert_eq!(dt_code_from_triple(2, ptr::null(), &mut code), DtStatus::NullPointer);
        assert_eq!(dt_code_from_triple(2, c("1;();()").as_ptr(), ptr::null_mut()), DtStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(dt_code_from_triple(2, bad.as_ptr().cast(), &mut code), DtStatus::InvalidUtf8);
        let mut d = 0;
        assert_eq!(dt_code_minimum_weight(ptr::null(), &mut d), DtStatus::NullPointer);
        let mut json = ptr::null_mut();
        assert_eq!(dt_average_weight_enumerator(2, 7, &mut json), DtStatus::InvalidArgument);
        assert!(last_error().contains("even"));

        let row = format!("({})", vec!["1"; 28].join(","));
        assert_eq!(dt_code_from_row(2, c(&row).as_ptr(), false, &mut code), DtStatus::Ok);
        assert_eq!(dt_code_minimum_weight(code, &mut d), DtStatus::BudgetExceeded);
        dt_code_free(code);
        dt_code_free(ptr::null_mut());
        dt_string_free(ptr::null_mut());
    }
}

#[test]
fn averages_and_thresholds() {
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(dt_average_weight_enumerator(2, 2, &mut json), DtStatus::Ok);
        assert_eq!(take(json), r#"["2","1","1"]"#);
        let mut n = 0;
        assert_eq!(dt_minimal_guaranteed_length(4, 10, &mut n), DtStatus::Ok);
        assert_eq!(n, 42);
        assert_eq!(dt_minimal_guaranteed_length(2, 0, &mut n), DtStatus::InvalidArgument);
    }
}

#[test]
fn search_and_classification() {
    unsafe {
        let (mut d, mut lines) = (0, ptr::null_mut());
        assert_eq!(dt_find_optimal(4, 6, DtFamily::Circulant, 2, &mut d, &mut lines), DtStatus::Ok);
        assert_eq!(d, 4);
        assert!(take(lines).lines().any(|l| l.contains(r#""r":"(1,w,1)""#)));
        assert_eq!(
            dt_find_optimal(2, 60, DtFamily::Toeplitz, 0, &mut d, &mut lines),
            DtStatus::BudgetExceeded
        );

        let mut report = ptr::null_mut();
        assert_eq!(dt_classify(2, 14, 0, &mut report), DtStatus::Ok);
        let mut counts = DtClassCounts::default();
        assert_eq!(dt_classification_counts(report, &mut counts), DtStatus::Ok);
        assert_eq!(
            counts,
            DtClassCounts {
                d_opt: 4,
                n_dt: 75,
                n_dc: 4,
                n_nc: 0
            }
        );
        let mut json = ptr::null_mut();
        assert_eq!(dt_classification_json(report, &mut json), DtStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["classes"].as_array().unwrap().len(), 79);
        dt_classification_free(report);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(dt_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
