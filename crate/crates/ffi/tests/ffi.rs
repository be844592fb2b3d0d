use std::ffi::{CStr, CString};
use std::ptr;

use homconj_ffi::*;

fn parse(text: &str, n: usize) -> *mut HomconjPerm {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { homconj_perm_parse(c.as_ptr(), n, &mut out) },
        HomconjStatus::Ok
    );
    out
}

fn format(p: *const HomconjPerm) -> String {
    unsafe {
        let s = homconj_perm_format(p);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        homconj_string_free(s);
        text
    }
}

fn last_error() -> String {
    let e = homconj_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_str().unwrap().to_owned()
}

#[test]
fn parse_format_and_arithmetic() {
    let p = parse("(1 2 3)", 4);
    let q = parse("(3 4)", 4);
    unsafe {
        assert_eq!(homconj_perm_degree(p), 4);
        let mut x = 0;
        assert_eq!(homconj_perm_apply(p, 3, &mut x), HomconjStatus::Ok);
        assert_eq!(x, 1);

        let mut r = ptr::null_mut();
        assert_eq!(homconj_perm_compose(p, q, &mut r), HomconjStatus::Ok);
        assert_eq!(format(r), "(1 2 3 4)");
        let mut inv = ptr::null_mut();
        assert_eq!(homconj_perm_inverse(r, &mut inv), HomconjStatus::Ok);
        assert_eq!(format(inv), "(1 4 3 2)");
        let mut c = ptr::null_mut();
        assert_eq!(homconj_perm_conjugate(q, p, &mut c), HomconjStatus::Ok);
        assert_eq!(format(c), "(1 2 4)");

        let mut order = 0;
        assert_eq!(homconj_perm_order(r, &mut order), HomconjStatus::Ok);
        assert_eq!(order, 4);

        let mut buf = [0usize; 2];
        let mut len = 0;
        assert_eq!(
            homconj_perm_cycle_type(p, buf.as_mut_ptr(), buf.len(), &mut len),
            HomconjStatus::Ok
        );
        assert_eq!((len, buf), (2, [3, 1]));
        let mut one = [0usize; 1];
        assert_eq!(
            homconj_perm_cycle_type(q, one.as_mut_ptr(), 1, &mut len),
            HomconjStatus::BufferTooSmall
        );
        assert_eq!(len, 3);

        let images = [2usize, 3, 1, 4];
        let mut from = ptr::null_mut();
        assert_eq!(
            homconj_perm_from_images(images.as_ptr(), 4, &mut from),
            HomconjStatus::Ok
        );
        assert!(homconj_perm_equal(from, p));
        assert!(!homconj_perm_equal(from, q));

        for h in [p, q, r, inv, c, from] {
            homconj_perm_free(h);
        }
    }
}

#[test]
fn errors_set_status_and_message() {
    let bad = CString::new("(1 5)").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { homconj_perm_parse(bad.as_ptr(), 4, &mut out) },
        HomconjStatus::Parse
    );
    assert!(out.is_null());
    assert!(last_error().contains("outside"));

    assert_eq!(
        unsafe { homconj_perm_parse(ptr::null(), 4, &mut out) },
        HomconjStatus::NullPointer
    );
    let p = parse("(1 2)", 2);
    assert!(homconj_last_error().is_null());
    let q = parse("(1 2)", 3);
    let mut r = ptr::null_mut();
    assert_eq!(
        unsafe { homconj_perm_compose(p, q, &mut r) },
        HomconjStatus::DegreeMismatch
    );
    let mut x = 0;
    assert_eq!(
        unsafe { homconj_perm_apply(p, 3, &mut x) },
        HomconjStatus::Parse
    );
    let images = [1usize, 1];
    assert_eq!(
        unsafe { homconj_perm_from_images(images.as_ptr(), 2, &mut r) },
        HomconjStatus::Parse
    );
    unsafe {
        homconj_perm_free(p);
        homconj_perm_free(q);
        homconj_perm_free(ptr::null_mut());
    }
}

#[test]
fn abelian_decisions() {
    let a = parse("(1 2 3 4)(5 6 7 8)", 11);
    let b = parse("(1 5)(2 6)(3 7)(4 8)(9 10)", 11);
    let b2 = parse("(1 6)(2 7)(3 8)(4 5)(10 11)", 11);
    let mut d = HomconjDecision {
        conjugate: false,
        element_conjugate: false,
        generator_conjugate: false,
        failed_condition: HomconjFailedCondition::BlockType,
    };
    let mut w = ptr::null_mut();
    unsafe {
        assert_eq!(
            homconj_decide_abelian(a, b, a, b2, &mut d, &mut w),
            HomconjStatus::Ok
        );
        assert!(d.conjugate && d.element_conjugate && d.generator_conjugate);
        assert_eq!(d.failed_condition, HomconjFailedCondition::None);
        assert!(!w.is_null());
        let (mut ca, mut cb) = (ptr::null_mut(), ptr::null_mut());
        homconj_perm_conjugate(w, a, &mut ca);
        homconj_perm_conjugate(w, b, &mut cb);
        assert!(homconj_perm_equal(ca, a) && homconj_perm_equal(cb, b2));

        let x = parse("(1 2 3)(4 5 6)", 12);
        let y = parse("(1 4)(2 5)(3 6)", 12);
        let z = parse("(7 8)(9 10)(11 12)", 12);
        assert_eq!(
            homconj_decide_abelian(x, y, x, z, &mut d, ptr::null_mut()),
            HomconjStatus::Ok
        );
        assert!(!d.conjugate && !d.element_conjugate && d.generator_conjugate);
        assert_eq!(d.failed_condition, HomconjFailedCondition::FixPart);

        let nc = parse("(1 2)", 12);
        let nc2 = parse("(2 3)", 12);
        assert_eq!(
            homconj_decide_abelian(nc, nc2, x, z, &mut d, ptr::null_mut()),
            HomconjStatus::InvalidInput
        );
        assert!(last_error().contains("commute"));
        for h in [a, b, b2, w, ca, cb, x, y, z, nc, nc2] {
            homconj_perm_free(h);
        }
    }
}

#[test]
fn dihedral_decision_and_search() {
    let r = parse("(1 2 3 4)", 4);
    let vertex = parse("(2 4)", 4);
    let vertex2 = parse("(1 3)", 4);
    let mut d = HomconjDecision {
        conjugate: false,
        element_conjugate: false,
        generator_conjugate: false,
        failed_condition: HomconjFailedCondition::None,
    };
    let mut w = ptr::null_mut();
    unsafe {
        assert_eq!(
            homconj_decide_dihedral(4, r, vertex, r, vertex2, &mut d, &mut w),
            HomconjStatus::Ok
        );
        assert!(d.conjugate);
        assert!(!w.is_null());

        let phi = [r as *const HomconjPerm, vertex as *const HomconjPerm];
        let psi = [r as *const HomconjPerm, vertex2 as *const HomconjPerm];
        let mut found = ptr::null_mut();
        assert_eq!(
            homconj_find_conjugator(phi.as_ptr(), psi.as_ptr(), 2, 1_000_000, &mut found),
            HomconjStatus::Ok
        );
        assert!(!found.is_null());

        let edge = parse("(1 2)(3 4)", 4);
        let psi = [r as *const HomconjPerm, edge as *const HomconjPerm];
        let mut none = ptr::null_mut();
        assert_eq!(
            homconj_find_conjugator(phi.as_ptr(), psi.as_ptr(), 2, 1_000_000, &mut none),
            HomconjStatus::Ok
        );
        assert!(none.is_null());

        let id = parse("()", 12);
        let list = [id as *const HomconjPerm];
        assert_eq!(
            homconj_find_conjugator(list.as_ptr(), list.as_ptr(), 1, 1000, &mut none),
            HomconjStatus::CapExceeded
        );
        for h in [r, vertex, vertex2, w, found, edge, id] {
            homconj_perm_free(h);
        }
    }
}

#[test]
fn header_declares_the_api() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/homconj.h")).unwrap();
    for name in [
        "typedef struct HomconjPerm HomconjPerm",
        "homconj_perm_parse",
        "homconj_perm_free",
        "homconj_decide_abelian",
        "homconj_decide_dihedral",
        "homconj_find_conjugator",
        "homconj_last_error",
        "HOMCONJ_STATUS_CAP_EXCEEDED",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
