use std::ffi::{c_char, CStr};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use truncalg_ffi::*;

fn take_string(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { truncalg_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(truncalg_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn monoid_invariants() {
    let e = [0usize, 4, 6, 8, 10, 12, 13];
    let (mut ok, mut d, mut ev) = (false, 0usize, 0usize);
    unsafe {
        assert_eq!(
            truncalg_is_partial_monoid(14, e.as_ptr(), e.len(), &mut ok),
            TruncalgStatus::Ok
        );
        assert_eq!(
            truncalg_d_invariant(14, e.as_ptr(), e.len(), &mut d),
            TruncalgStatus::Ok
        );
        assert_eq!(
            truncalg_e_invariant(14, e.as_ptr(), e.len(), &mut ev),
            TruncalgStatus::Ok
        );
    }
    assert!(ok);
    assert_eq!(d, 3);
    assert_eq!(
        ev,
        truncalg::monoid::e_invariant(&truncalg::monoid::PartialMonoid::new(14, &e).unwrap())
    );
    let not_closed = [0usize, 3, 4];
    unsafe {
        assert_eq!(
            truncalg_is_partial_monoid(8, not_closed.as_ptr(), 3, &mut ok),
            TruncalgStatus::Ok
        );
        assert!(!ok);
        assert_eq!(
            truncalg_e_invariant(8, not_closed.as_ptr(), 3, &mut ev),
            TruncalgStatus::NotClosed
        );
    }
    assert!(!last_error().is_empty());
}

#[test]
fn count_polynomial_buffer_protocol() {
    let mut len = 0usize;
    let st = unsafe { truncalg_count_polynomial(10, 5, ptr::null_mut(), 0, &mut len) };
    assert_eq!(st, TruncalgStatus::BufferTooSmall);
    assert_eq!(len, 5);
    let mut buf = vec![0u64; len];
    let st = unsafe { truncalg_count_polynomial(10, 5, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!(st, TruncalgStatus::Ok);
    assert_eq!(buf, [1, 1, 2, 3, 5]);
    let mut v = 0u64;
    assert_eq!(
        unsafe { truncalg_count_eval(10, 5, 2, &mut v) },
        TruncalgStatus::Ok
    );
    assert_eq!(v, 115);
    assert_eq!(
        unsafe { truncalg_count_eval(10, 10, 2, &mut v) },
        TruncalgStatus::InvalidArgument
    );
}

#[test]
fn witness_handle() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { truncalg_witness(3, &mut h) }, TruncalgStatus::Ok);
    let (mut dim, mut thin, mut dims) = (0usize, true, TruncalgMDims::default());
    let mut exps = [0usize; 16];
    let mut len = 0usize;
    unsafe {
        assert_eq!(truncalg_subalgebra_dim(h, &mut dim), TruncalgStatus::Ok);
        assert_eq!(
            truncalg_subalgebra_is_thin(h, &mut thin),
            TruncalgStatus::Ok
        );
        assert_eq!(truncalg_subalgebra_m_dims(h, &mut dims), TruncalgStatus::Ok);
        assert_eq!(
            truncalg_subalgebra_exponents(h, exps.as_mut_ptr(), exps.len(), &mut len),
            TruncalgStatus::Ok
        );
    }
    assert_eq!((dim, thin), (7, false));
    assert_eq!(
        dims,
        TruncalgMDims {
            m: 6,
            m2: 4,
            quotient: 2
        }
    );
    assert_eq!(&exps[..len], &[0, 4, 6, 8, 10, 12, 13]);
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { truncalg_subalgebra_to_json(h, &mut s) },
        TruncalgStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["p"], 3);
    assert_eq!(v["basis"].as_array().unwrap().len(), 7);
    unsafe { truncalg_subalgebra_free(h) };
    assert_eq!(
        unsafe { truncalg_witness(4, &mut h) },
        TruncalgStatus::NotPrime
    );
}

#[test]
fn span_and_generation() {
    // Generated by x^2 + x^3 over F_2, then rebuilt from its own basis.
    let n = 6;
    let gens: [i64; 6] = [0, 0, 1, 1, 0, 0];
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { truncalg_subalgebra_generated(2, n, gens.as_ptr(), 1, &mut h) },
        TruncalgStatus::Ok
    );
    let mut dim = 0;
    unsafe { truncalg_subalgebra_dim(h, &mut dim) };
    let mut s = ptr::null_mut();
    unsafe { truncalg_subalgebra_to_json(h, &mut s) };
    let basis: Vec<Vec<i64>> = serde_json::from_value(
        serde_json::from_str::<serde_json::Value>(&take_string(s)).unwrap()["basis"].clone(),
    )
    .unwrap();
    let flat: Vec<i64> = basis.concat();
    let mut again = ptr::null_mut();
    let st = unsafe { truncalg_subalgebra_from_span(2, n, flat.as_ptr(), basis.len(), &mut again) };
    assert_eq!(st, TruncalgStatus::Ok);
    let mut dim2 = 0;
    unsafe { truncalg_subalgebra_dim(again, &mut dim2) };
    assert_eq!((dim, dim2), (basis.len(), basis.len()));
    let mut lifts = 0u64;
    assert_eq!(
        unsafe { truncalg_subalgebra_lift_count(h, &mut lifts) },
        TruncalgStatus::Ok
    );
    unsafe {
        truncalg_subalgebra_free(h);
        truncalg_subalgebra_free(again);
    }
    // A span that is not closed under products.
    let open: [i64; 12] = [1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0];
    let st = unsafe { truncalg_subalgebra_from_span(2, n, open.as_ptr(), 2, &mut h) };
    assert_eq!(st, TruncalgStatus::NotClosed);
}

#[test]
fn census_handle() {
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { truncalg_census(2, 6, TRUNCALG_METHOD_SUBSPACE, false, &mut h) },
        TruncalgStatus::Ok
    );
    let (mut total, mut non_thin) = (0u64, 0u64);
    assert_eq!(
        unsafe { truncalg_census_totals(h, &mut total, &mut non_thin) },
        TruncalgStatus::Ok
    );
    assert_eq!((total, non_thin), (24, 0));
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { truncalg_census_to_json(h, &mut s) },
        TruncalgStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["total"], 24);
    unsafe { truncalg_census_free(h) };
    let st = unsafe { truncalg_census(2, 12, TRUNCALG_METHOD_SUBSPACE, false, &mut h) };
    assert_eq!(st, TruncalgStatus::Infeasible);
    assert_eq!(
        unsafe { truncalg_census(2, 4, 7, false, &mut h) },
        TruncalgStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { truncalg_census_totals(ptr::null(), &mut total, &mut non_thin) },
        TruncalgStatus::NullPointer
    );
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/truncalg.h")
}

#[test]
fn header_declares_every_export() {
    let h = std::fs::read_to_string(header()).unwrap();
    let src = include_str!("../src/lib.rs");
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 20);
    for name in exports {
        assert!(
            h.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
}

fn static_lib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let dir = exe.parent()?.parent()?;
    [
        dir.join("libtruncalg_ffi.a"),
        dir.join("deps/libtruncalg_ffi.a"),
    ]
    .into_iter()
    .find(|p| p.exists())
}

#[test]
fn c_program_links_and_runs() {
    let Some(lib) = static_lib() else {
        eprintln!("static library not found next to the test binary; skipping link check");
        return;
    };
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping link check");
        return;
    }
    let dir = std::env::temp_dir().join(format!("truncalg-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let exe = dir.join("main");
    let built = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-I"])
        .arg(header().parent().unwrap())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(
        built.status.success(),
        "{}",
        String::from_utf8_lossy(&built.stderr)
    );
    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "7 2 0 24\n");
    std::fs::remove_dir_all(&dir).ok();
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include "truncalg.h"

int main(void) {
    TruncalgSubalgebra *w = NULL;
    if (truncalg_witness(5, &w) != TRUNCALG_STATUS_OK) return 1;
    size_t dim = 0;
    TruncalgMDims d;
    bool thin = true;
    truncalg_subalgebra_dim(w, &dim);
    truncalg_subalgebra_m_dims(w, &d);
    truncalg_subalgebra_is_thin(w, &thin);
    truncalg_subalgebra_free(w);
    TruncalgCensus *c = NULL;
    if (truncalg_census(2, 6, TRUNCALG_METHOD_ECHELON, false, &c) != TRUNCALG_STATUS_OK) return 2;
    uint64_t total = 0, non_thin = 0;
    truncalg_census_totals(c, &total, &non_thin);
    truncalg_census_free(c);
    if (truncalg_census(6, 4, TRUNCALG_METHOD_ECHELON, false, &c) != TRUNCALG_STATUS_NOT_PRIME) return 3;
    if (truncalg_last_error()[0] == '\0') return 4;
    printf("%zu %zu %d %llu\n", dim, d.quotient, (int)thin, (unsigned long long)total);
    return 0;
}
"#;
