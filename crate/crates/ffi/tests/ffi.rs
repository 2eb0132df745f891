//! Exercises the C ABI through its Rust symbols, plus a compile-and-run
//! check of the generated header with the system C compiler.

use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use sphsys_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    sph_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = sph_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

#[test]
fn version_is_crate_version() {
    let v = unsafe { CStr::from_ptr(sph_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn root_system_queries() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(sph_root_system_new(cstr("B2").as_ptr(), &mut h), SphStatus::Ok);
        let mut n = 0usize;
        assert_eq!(sph_root_system_rank(h, &mut n), SphStatus::Ok);
        assert_eq!(n, 2);
        assert_eq!(sph_root_system_positive_root_count(h, &mut n), SphStatus::Ok);
        assert_eq!(n, 4);
        let mut c = 0i64;
        assert_eq!(sph_root_system_cartan(h, 0, 0, &mut c), SphStatus::Ok);
        assert_eq!(c, 2);
        assert_eq!(sph_root_system_cartan(h, 2, 0, &mut c), SphStatus::OutOfRange);
        let chi = [1i64, 0];
        assert_eq!(sph_root_system_pairing(h, chi.as_ptr(), 2, 0, &mut c), SphStatus::Ok);
        assert_eq!(c, 2);
        assert_eq!(sph_root_system_pairing(h, chi.as_ptr(), 1, 0, &mut c), SphStatus::OutOfRange);

        assert_eq!(sph_catalogue_len(h, &mut n), SphStatus::Ok);
        assert_eq!(n, 6);
        let mut buf = [0i64; 2];
        assert_eq!(sph_catalogue_root(h, 0, buf.as_mut_ptr(), 2), SphStatus::Ok);
        assert_eq!(sph_catalogue_root(h, 0, buf.as_mut_ptr(), 1), SphStatus::BufferTooSmall);
        assert_eq!(sph_catalogue_root(h, 6, buf.as_mut_ptr(), 2), SphStatus::OutOfRange);
        let mut loose = true;
        assert_eq!(sph_catalogue_is_loose(h, 0, &mut loose), SphStatus::Ok);

        let mut json = ptr::null_mut();
        assert_eq!(sph_catalogue_json(h, &mut json), SphStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["roots"].as_array().unwrap().len(), 6);
        sph_root_system_free(h);
    }
}

#[test]
fn bad_arguments_report_errors() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(sph_root_system_new(cstr("C2").as_ptr(), &mut h), SphStatus::ParseError);
        assert!(h.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(sph_root_system_new(ptr::null(), &mut h), SphStatus::NullArgument);
        assert_eq!(sph_root_system_rank(ptr::null(), ptr::null_mut()), SphStatus::NullArgument);
        let bytes = [0xffu8, 0];
        assert_eq!(sph_root_system_new(bytes.as_ptr().cast(), &mut h), SphStatus::InvalidUtf8);
        let mut e = ptr::null_mut();
        assert_eq!(sph_enumerator_new(cstr("A7").as_ptr(), false, -1, &mut e), SphStatus::RankTooLarge);
        sph_root_system_free(ptr::null_mut());
        sph_system_free(ptr::null_mut());
        sph_enumerator_free(ptr::null_mut());
        sph_string_free(ptr::null_mut());
    }
}

#[test]
fn system_round_trip_and_reports() {
    let text = r#"{"dynkin":"A1","sp":[],"sigma":[{"coeffs":[2]}]}"#;
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(sph_system_from_json(cstr(text).as_ptr(), &mut s), SphStatus::Ok);
        let mut ok = false;
        assert_eq!(sph_system_validate(s, &mut ok), SphStatus::Ok);
        assert!(ok);
        assert_eq!(sph_system_is_spherically_closed(s, &mut ok), SphStatus::Ok);
        assert!(ok);
        let mut n = 0usize;
        assert_eq!(sph_system_color_count(s, &mut n), SphStatus::Ok);
        assert_eq!(n, 1);

        let mut json = ptr::null_mut();
        assert_eq!(sph_system_to_json(s, &mut json), SphStatus::Ok);
        let back: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(back, serde_json::from_str::<serde_json::Value>(text).unwrap());

        assert_eq!(sph_system_validation_json(s, &mut json), SphStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["valid"], true);
        assert_eq!(sph_system_colors_json(s, &mut json), SphStatus::Ok);
        take_string(json);
        assert_eq!(sph_system_tangent_json(s, &mut json), SphStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["profile"]["dimension"], 1);
        sph_system_free(s);
    }
}

#[test]
fn non_closed_and_invalid_systems() {
    let loose = r#"{"dynkin":"B3","sp":[2,3],"sigma":[{"coeffs":[1,1,1]}]}"#;
    let bad = r#"{"dynkin":"A1","sp":[1],"sigma":[{"coeffs":[1]}],"a":[{"alpha":1,"sigma":0,"plus":1,"minus":1}]}"#;
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(sph_system_from_json(cstr(loose).as_ptr(), &mut s), SphStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(sph_system_tangent_json(s, &mut json), SphStatus::NotClosed);
        assert!(json.is_null());
        let mut closed = true;
        assert_eq!(sph_system_is_spherically_closed(s, &mut closed), SphStatus::Ok);
        assert!(!closed);
        sph_system_free(s);

        assert_eq!(sph_system_from_json(cstr(bad).as_ptr(), &mut s), SphStatus::Ok);
        let mut ok = true;
        assert_eq!(sph_system_validate(s, &mut ok), SphStatus::Ok);
        assert!(!ok);
        assert_eq!(sph_system_colors_json(s, &mut json), SphStatus::InvalidSystem);
        sph_system_free(s);

        assert_eq!(sph_system_from_json(cstr("{").as_ptr(), &mut s), SphStatus::ParseError);
    }
}

#[test]
fn enumerator_matches_library() {
    unsafe {
        let mut e = ptr::null_mut();
        assert_eq!(sph_enumerator_new(cstr("A1").as_ptr(), false, -1, &mut e), SphStatus::Ok);
        let mut count = 0;
        loop {
            let mut s = ptr::null_mut();
            assert_eq!(sph_enumerator_next(e, &mut s), SphStatus::Ok);
            if s.is_null() {
                break;
            }
            let mut ok = false;
            assert_eq!(sph_system_validate(s, &mut ok), SphStatus::Ok);
            assert!(ok);
            sph_system_free(s);
            count += 1;
        }
        assert_eq!(count, 4);
        sph_enumerator_free(e);

        assert_eq!(sph_enumerator_new(cstr("A2").as_ptr(), false, 0, &mut e), SphStatus::Ok);
        let mut count = 0;
        loop {
            let mut s = ptr::null_mut();
            sph_enumerator_next(e, &mut s);
            if s.is_null() {
                break;
            }
            sph_system_free(s);
            count += 1;
        }
        assert_eq!(count, 4);
        sph_enumerator_free(e);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/sphsys.h")).unwrap();
    for name in [
        "sph_version",
        "sph_last_error",
        "sph_string_free",
        "sph_root_system_new",
        "sph_root_system_free",
        "sph_catalogue_json",
        "sph_system_from_json",
        "sph_system_tangent_json",
        "sph_enumerator_new",
        "sph_enumerator_next",
        "sph_enumerator_free",
        "typedef struct SphSystem SphSystem",
        "SPH_STATUS_NOT_CLOSED = 5",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("header_check.c");
    std::fs::write(
        &src,
        "#include \"sphsys.h\"\nint main(void) { SphSystem *s = 0; size_t n = 0; \
         return sph_system_color_count(s, &n) == SPH_STATUS_NULL_ARGUMENT ? 0 : 1; }\n",
    )
    .unwrap();
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(Path::new(env!("CARGO_MANIFEST_DIR")).join("include"))
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .ok_or(())
}
