use std::ffi::{CStr, CString};
use std::ptr;

use secdom_ffi::*;

const P5: &str = "p digraph 5 4\na 1 2\na 2 3\na 3 4\na 4 5\n";

fn parse(text: &str) -> *mut SecdomDigraph {
    let c = CString::new(text).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { secdom_digraph_parse(c.as_ptr(), &mut d) }, SecdomStatus::Ok);
    assert!(!d.is_null());
    d
}

fn last_error() -> String {
    let p = secdom_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(secdom_version()) };
    assert_eq!(v.to_str().unwrap(), secdom::cli::VERSION);
}

#[test]
fn enums_follow_library_order() {
    let params = [
        SecdomParam::Plus,
        SecdomParam::Minus,
        SecdomParam::S,
        SecdomParam::Twin,
        SecdomParam::So,
        SecdomParam::Os,
        SecdomParam::Oso,
        SecdomParam::Iso,
    ];
    let names: Vec<_> = params.iter().map(|&p| secdom::ParamKind::from(p).name()).collect();
    assert_eq!(
        names,
        [
            "gamma_plus",
            "gamma_minus",
            "gamma_s",
            "gamma_twin",
            "gamma_so",
            "gamma_os",
            "gamma_oso",
            "gamma_iso"
        ]
    );
    assert_eq!(secdom::SetKind::from(SecdomSetKind::Isods).name(), "isods");
    assert_eq!(
        secdom::SetKind::from(SecdomSetKind::OutDominating).name(),
        "out-dominating"
    );
}

#[test]
fn parse_serialize_round_trip() {
    let d = parse("p digraph 5 4\na 4 5\na 1 2\na 3 4\na 2 3\n");
    assert_eq!(unsafe { secdom_digraph_order(d) }, 5);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { secdom_digraph_serialize(d, &mut s) }, SecdomStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(s) }.to_str().unwrap(), P5);
    unsafe {
        secdom_string_free(s);
        secdom_digraph_free(d);
    }
}

#[test]
fn parse_errors_carry_line() {
    let c = CString::new("p digraph 3 1\na 1 1\n").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { secdom_digraph_parse(c.as_ptr(), &mut d) }, SecdomStatus::Parse);
    assert!(d.is_null());
    assert!(last_error().contains("line 2"), "{}", last_error());
}

#[test]
fn build_from_arcs_and_solve() {
    let arcs: [u32; 8] = [0, 1, 1, 2, 2, 3, 3, 4];
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { secdom_digraph_new(5, arcs.as_ptr(), 4, &mut d) },
        SecdomStatus::Ok
    );
    let (mut value, mut mask) = (0usize, 0u64);
    assert_eq!(
        unsafe { secdom_solve(d, SecdomParam::Oso, 0, &mut value, &mut mask) },
        SecdomStatus::Ok
    );
    assert_eq!(value, 4);
    assert_eq!(mask, 0b01111);
    let mut valid = false;
    assert_eq!(
        unsafe { secdom_verify(d, SecdomSetKind::Osods, mask, &mut valid) },
        SecdomStatus::Ok
    );
    assert!(valid);
    assert_eq!(
        unsafe { secdom_verify(d, SecdomSetKind::Osods, 0b00101, &mut valid) },
        SecdomStatus::Ok
    );
    assert!(!valid);
    unsafe { secdom_digraph_free(d) };
}

#[test]
fn argument_errors() {
    let mut d = ptr::null_mut();
    let arcs: [u32; 2] = [0, 7];
    assert_eq!(
        unsafe { secdom_digraph_new(3, arcs.as_ptr(), 1, &mut d) },
        SecdomStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { secdom_digraph_parse(ptr::null(), &mut d) },
        SecdomStatus::NullPointer
    );
    let d = parse(P5);
    let mut valid = false;
    assert_eq!(
        unsafe { secdom_verify(d, SecdomSetKind::Sds, 1 << 5, &mut valid) },
        SecdomStatus::InvalidArgument
    );
    let (mut value, mut mask) = (0usize, 0u64);
    assert_eq!(
        unsafe { secdom_solve(d, SecdomParam::Plus, 3, &mut value, &mut mask) },
        SecdomStatus::SizeCap
    );
    assert!(!last_error().is_empty());
    unsafe { secdom_digraph_free(d) };
    assert_eq!(unsafe { secdom_digraph_order(ptr::null()) }, 0);
    unsafe {
        secdom_digraph_free(ptr::null_mut());
        secdom_string_free(ptr::null_mut());
    }
}

#[test]
fn success_clears_last_error() {
    let mut d = ptr::null_mut();
    unsafe { secdom_digraph_parse(ptr::null(), &mut d) };
    let d = parse(P5);
    assert!(secdom_last_error().is_null());
    unsafe { secdom_digraph_free(d) };
}

#[test]
fn survey_is_json() {
    let d = parse(P5);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { secdom_survey_json(d, &mut s) }, SecdomStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe {
        secdom_string_free(s);
        secdom_digraph_free(d);
    }
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["parameters"]["gamma_oso"], 4);
    assert_eq!(v["parameters"]["gamma_plus"], 3);
    let bounds = v["bounds"].as_array().unwrap();
    assert!(bounds.iter().all(|b| b["holds"] != false));
}

#[test]
fn header_declares_the_surface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/secdom.h")).unwrap();
    for name in [
        "secdom_version",
        "secdom_last_error",
        "secdom_digraph_parse",
        "secdom_digraph_new",
        "secdom_digraph_free",
        "secdom_digraph_order",
        "secdom_digraph_serialize",
        "secdom_solve",
        "secdom_verify",
        "secdom_survey_json",
        "secdom_string_free",
        "typedef struct SecdomDigraph SecdomDigraph",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}
