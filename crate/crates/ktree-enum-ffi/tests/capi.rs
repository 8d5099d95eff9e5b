//! Exercises the C surface from Rust, including failure paths and memory
//! hand-off.

use std::ffi::{c_char, CStr};

use ktree_enum_ffi::*;

unsafe fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let text = CStr::from_ptr(ptr).to_str().unwrap().to_owned();
    ktree_string_free(ptr);
    text
}

#[test]
fn compute_read_and_free_a_table() {
    unsafe {
        let mut table: *mut KtreeTable = std::ptr::null_mut();
        assert_eq!(ktree_table_compute(2, 10, &mut table), KtreeStatus::Ok);
        assert!(!table.is_null());
        assert_eq!(ktree_table_k(table), 2);
        assert_eq!(ktree_table_len(table), 11);
        assert_eq!(take_string(ktree_table_count_decimal(table, 10)), "9368");
        assert_eq!(take_string(ktree_table_count_decimal(table, 0)), "1");
        assert!(ktree_table_count_decimal(table, 11).is_null());
        ktree_table_free(table);
    }
}

#[test]
fn json_and_csv_render_through_the_boundary() {
    unsafe {
        let mut table: *mut KtreeTable = std::ptr::null_mut();
        assert_eq!(ktree_table_compute(1, 3, &mut table), KtreeStatus::Ok);
        assert_eq!(
            take_string(ktree_table_to_json(table)),
            r#"{"k":1,"n_max":3,"engine":"gf","counts":["1","1","1","2"]}"#
        );
        assert_eq!(take_string(ktree_table_to_csv(table)), "n,count\n0,1\n1,1\n2,1\n3,2\n");
        ktree_table_free(table);
    }
}

#[test]
fn invalid_arguments_are_reported_not_crashed() {
    unsafe {
        let mut table: *mut KtreeTable = std::ptr::null_mut();
        assert_eq!(ktree_table_compute(0, 5, &mut table), KtreeStatus::InvalidArgument);
        assert!(table.is_null());
        assert_eq!(ktree_table_compute(2, 5, std::ptr::null_mut()), KtreeStatus::InvalidArgument);
        assert_eq!(ktree_table_k(std::ptr::null()), 0);
        assert_eq!(ktree_table_len(std::ptr::null()), 0);
        assert!(ktree_table_to_json(std::ptr::null()).is_null());
        ktree_table_free(std::ptr::null_mut());
        ktree_string_free(std::ptr::null_mut());
    }
}

#[test]
fn oracle_counts_and_bounds() {
    unsafe {
        let mut count = 0u64;
        assert_eq!(ktree_brute_count(2, 5, &mut count), KtreeStatus::Ok);
        assert_eq!(count, 12);
        assert_eq!(ktree_brute_count(2, 6, &mut count), KtreeStatus::Unsupported);
        assert_eq!(ktree_brute_count(9, 1, &mut count), KtreeStatus::Unsupported);
        assert_eq!(ktree_brute_count(2, 5, std::ptr::null_mut()), KtreeStatus::InvalidArgument);
    }
}

#[test]
fn front_rooted_series_round_trip() {
    unsafe {
        let parts = [1u32, 1];
        let mut text: *mut c_char = std::ptr::null_mut();
        assert_eq!(
            ktree_front_rooted_series(2, parts.as_ptr(), parts.len(), 5, &mut text),
            KtreeStatus::Ok
        );
        assert_eq!(take_string(text), "1,1,3,10,39,160");

        // Wrong weight.
        let mut text: *mut c_char = std::ptr::null_mut();
        assert_eq!(
            ktree_front_rooted_series(3, parts.as_ptr(), parts.len(), 5, &mut text),
            KtreeStatus::InvalidArgument
        );
        assert!(text.is_null());

        // Zero part.
        let bad = [0u32, 2];
        assert_eq!(
            ktree_front_rooted_series(2, bad.as_ptr(), bad.len(), 5, &mut text),
            KtreeStatus::InvalidArgument
        );
    }
}

#[test]
fn version_is_a_static_string() {
    let v = unsafe { CStr::from_ptr(ktree_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
