use std::ffi::{CStr, CString};
use std::ptr;

use permcheck_ffi::*;

fn group(name: &str) -> *mut PcGroup {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { pc_group_from_name(name.as_ptr(), 0, 0, &mut g) },
        PcStatus::Ok
    );
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    let p = pc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { pc_string_free(p) };
    s
}

#[test]
fn order_and_subgroups() {
    let g = group("A4");
    unsafe {
        assert_eq!(pc_group_order(g), 12);
        assert_eq!(pc_group_num_subgroups(g), 10);
        pc_group_free(g);
        assert_eq!(pc_group_order(ptr::null()), 0);
        pc_group_free(ptr::null_mut());
    }
}

#[test]
fn classify_json_roundtrip() {
    let g = group("D12");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pc_classify_json(g, &mut out) }, PcStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["flags"]["pt"], true);
    assert_eq!(v["flags"]["sq4t"], false);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pc_lattice_json(g, &mut out) }, PcStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 16);
    unsafe { pc_group_free(g) };
}

#[test]
fn check_pair() {
    let g = group("D12");
    let h = CString::new("s").unwrap();
    let k = CString::new("s r").unwrap();
    let mut v = PcCheckVerdict::default();
    assert_eq!(
        unsafe { pc_check(g, h.as_ptr(), k.as_ptr(), &mut v) },
        PcStatus::Ok
    );
    assert!(!v.perm4 && !v.permutes);
    assert_eq!(
        (
            v.h_order,
            v.k_order,
            v.join_order,
            v.product_order,
            v.hk_order
        ),
        (2, 2, 12, 8, 4)
    );

    let bad = CString::new("(1 7)").unwrap();
    assert_eq!(
        unsafe { pc_check(g, bad.as_ptr(), k.as_ptr(), &mut v) },
        PcStatus::InputError
    );
    assert!(!last_error().is_empty());
    unsafe { pc_group_free(g) };
}

#[test]
fn errors_and_caps() {
    let mut g = ptr::null_mut();
    let name = CString::new("S7").unwrap();
    assert_eq!(
        unsafe { pc_group_from_name(name.as_ptr(), 0, 0, &mut g) },
        PcStatus::CapExceeded
    );
    assert!(g.is_null());
    assert!(last_error().contains("2000"));

    let name = CString::new("A4").unwrap();
    assert_eq!(
        unsafe { pc_group_from_name(name.as_ptr(), 0, 8, &mut g) },
        PcStatus::CapExceeded
    );
    let name = CString::new("Y3").unwrap();
    assert_eq!(
        unsafe { pc_group_from_name(name.as_ptr(), 0, 0, &mut g) },
        PcStatus::InputError
    );
    assert_eq!(
        unsafe { pc_group_from_name(ptr::null(), 0, 0, &mut g) },
        PcStatus::NullPointer
    );
    assert_eq!(
        unsafe { pc_classify_json(ptr::null(), &mut ptr::null_mut()) },
        PcStatus::NullPointer
    );

    let ok = group("C1");
    assert!(pc_last_error_message().is_null());
    unsafe { pc_group_free(ok) };
}

#[test]
fn group_from_text() {
    let text = CString::new("degree 4\ngen (1 2 3 4)\ngen (2 4)\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { pc_group_from_file_text(text.as_ptr(), 0, 0, &mut g) },
        PcStatus::Ok
    );
    assert_eq!(unsafe { pc_group_order(g) }, 8);
    let h = CString::new("g2").unwrap();
    let k = CString::new("g1 g2").unwrap();
    let mut v = PcCheckVerdict::default();
    assert_eq!(
        unsafe { pc_check(g, h.as_ptr(), k.as_ptr(), &mut v) },
        PcStatus::Ok
    );
    assert!(!v.permutes && v.perm4);
    unsafe { pc_group_free(g) };

    let text = CString::new("gen (1 2)\n").unwrap();
    assert_eq!(
        unsafe { pc_group_from_file_text(text.as_ptr(), 0, 0, &mut g) },
        PcStatus::InputError
    );
}
