use std::ffi::{c_char, CStr};
use std::ptr;

use sccores_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { scc_string_free(s) };
    out
}

fn count_string(status: SccStatus, handle: *mut SccCount) -> String {
    assert_eq!(status, SccStatus::Ok);
    let s = take_string(unsafe { scc_count_to_string(handle) });
    unsafe { scc_count_free(handle) };
    s
}

#[test]
fn counts() {
    let mut h = ptr::null_mut();
    assert_eq!(count_string(unsafe { scc_count_sc_cores(8, &mut h) }, h), "35");
    assert_eq!(count_string(unsafe { scc_motzkin_number(12, &mut h) }, h), "15511");
    assert_eq!(count_string(unsafe { scc_symmetric_motzkin_count(4, &mut h) }, h), "5");
    assert_eq!(
        count_string(unsafe { scc_symmetric_gen_dyck_count(4, 2, &mut h) }, h),
        "5"
    );

    let status = unsafe { scc_symmetric_gen_dyck_count(3, 0, &mut h) };
    assert_eq!(status, SccStatus::InvalidArgument);
    assert!(!take_string(scc_last_error()).is_empty());
}

#[test]
fn u64_conversion_and_overflow() {
    let mut h = ptr::null_mut();
    let mut v = 0u64;
    assert_eq!(unsafe { scc_motzkin_number(10, &mut h) }, SccStatus::Ok);
    assert_eq!(unsafe { scc_count_to_u64(h, &mut v) }, SccStatus::Ok);
    assert_eq!(v, 2188);
    unsafe { scc_count_free(h) };

    assert_eq!(unsafe { scc_motzkin_number(200, &mut h) }, SccStatus::Ok);
    assert_eq!(unsafe { scc_count_to_u64(h, &mut v) }, SccStatus::Overflow);
    unsafe { scc_count_free(h) };
}

#[test]
fn gap_poset_handle() {
    let gens = [8usize, 9, 10];
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { scc_gap_poset_new(gens.as_ptr(), gens.len(), &mut p) },
        SccStatus::Ok
    );
    assert_eq!(unsafe { scc_gap_poset_len(p) }, 16);

    let mut buf = [0usize; 4];
    let mut len = 0;
    let status = unsafe { scc_gap_poset_ground(p, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!((status, len), (SccStatus::BufferTooSmall, 16));
    let mut buf = [0usize; 16];
    assert_eq!(
        unsafe { scc_gap_poset_ground(p, buf.as_mut_ptr(), buf.len(), &mut len) },
        SccStatus::Ok
    );
    assert_eq!(buf, [1, 2, 3, 4, 5, 6, 7, 11, 12, 13, 14, 15, 21, 22, 23, 31]);

    let mut c = ptr::null_mut();
    assert_eq!(count_string(unsafe { scc_gap_poset_count_ideals(p, &mut c) }, c), "323");
    assert!(take_string(unsafe { scc_gap_poset_to_json(p) }).starts_with("{\"generators\":[8,9,10]"));
    assert!(take_string(unsafe { scc_gap_poset_to_dot(p) }).starts_with("digraph"));
    unsafe { scc_gap_poset_free(p) };
}

#[test]
fn infinite_gap_set_is_reported() {
    let gens = [2usize, 4];
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { scc_gap_poset_new(gens.as_ptr(), 2, &mut p) },
        SccStatus::InfiniteGapSet
    );
    assert!(p.is_null());
    assert_eq!(take_string(scc_last_error()), "infinite gap set");
}

#[test]
fn null_pointers_are_rejected() {
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { scc_gap_poset_new(ptr::null(), 2, &mut p) },
        SccStatus::NullPointer
    );
    assert_eq!(
        unsafe { scc_count_sc_cores(3, ptr::null_mut()) },
        SccStatus::NullPointer
    );
    assert!(unsafe { scc_count_to_string(ptr::null()) }.is_null());
    assert_eq!(unsafe { scc_gap_poset_len(ptr::null()) }, 0);
    unsafe {
        scc_count_free(ptr::null_mut());
        scc_gap_poset_free(ptr::null_mut());
        scc_sc_cores_free(ptr::null_mut());
        scc_string_free(ptr::null_mut());
    }
}

#[test]
fn sc_core_cursor() {
    let mut it = ptr::null_mut();
    assert_eq!(unsafe { scc_sc_cores_new(8, &mut it) }, SccStatus::Ok);
    let mut lines = Vec::new();
    loop {
        let mut json = ptr::null_mut();
        assert_eq!(unsafe { scc_sc_cores_next(it, &mut json) }, SccStatus::Ok);
        if json.is_null() {
            break;
        }
        lines.push(take_string(json));
    }
    unsafe { scc_sc_cores_free(it) };
    assert_eq!(lines.len(), 35);
    assert!(lines.contains(&r#"{"s":8,"md":[11,3,1],"partition":[6,3,3,1,1,1]}"#.to_string()));
}

#[test]
fn simultaneous_core_test() {
    let parts = [6usize, 3, 3, 1, 1, 1];
    let ts = [8usize, 9, 10];
    let mut out = false;
    assert_eq!(
        unsafe { scc_is_simultaneous_core(parts.as_ptr(), parts.len(), ts.as_ptr(), ts.len(), &mut out) },
        SccStatus::Ok
    );
    assert!(out);
    let ts = [2usize];
    assert_eq!(
        unsafe { scc_is_simultaneous_core(parts.as_ptr(), parts.len(), ts.as_ptr(), 1, &mut out) },
        SccStatus::Ok
    );
    assert!(!out);

    let bad = [1usize, 2];
    let status = unsafe { scc_is_simultaneous_core(bad.as_ptr(), 2, ts.as_ptr(), 1, &mut out) };
    assert_eq!(status, SccStatus::InvalidArgument);
}

#[test]
fn header_is_current() {
    let header = include_str!("../include/sccores.h");
    for name in [
        "scc_last_error",
        "scc_count_sc_cores",
        "scc_gap_poset_new",
        "scc_sc_cores_next",
        "SCC_STATUS_INFINITE_GAP_SET",
        "typedef struct SccCount SccCount;",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
