use std::ffi::{CStr, CString};
use std::ptr;

use critgroup_ffi::*;

fn take(s: *mut libc::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { cg_string_free(s) };
    out
}

fn last_error() -> String {
    let p = cg_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn graph(text: &str) -> *mut CgGraph {
    let src = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cg_graph_parse(src.as_ptr(), &mut g) }, CgStatus::Ok);
    g
}

const K4: &str = "n 4\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const CYCLE5: &str = "n 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

#[test]
fn group_of_k4() {
    let g = graph(K4);
    unsafe {
        assert_eq!(cg_graph_vertex_count(g), 4);
        let mut grp = ptr::null_mut();
        assert_eq!(cg_critical_group(g, &mut grp), CgStatus::Ok);
        assert_eq!(cg_group_factor_count(grp), 2);
        let mut s = ptr::null_mut();
        assert_eq!(cg_group_factor(grp, 1, &mut s), CgStatus::Ok);
        assert_eq!(take(s), "4");
        assert_eq!(cg_group_order(grp, &mut s), CgStatus::Ok);
        assert_eq!(take(s), "16");
        assert_eq!(cg_group_to_string(grp, &mut s), CgStatus::Ok);
        assert_eq!(take(s), "Z/4 x Z/4");
        assert_eq!(cg_group_factor(grp, 2, &mut s), CgStatus::Invalid);
        cg_group_free(grp);
        cg_graph_free(g);
    }
}

#[test]
fn marking_of_five_cycle() {
    let g = graph(CYCLE5);
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(cg_pair_order(g, 0, 4, &mut s), CgStatus::Ok);
        assert_eq!(take(s), "5");
        let mut mk = ptr::null_mut();
        assert_eq!(cg_marking(g, 0, 4, &mut mk), CgStatus::Ok);
        assert_eq!(cg_marking_len(mk), 5);
        let weights: Vec<String> = (0..5)
            .map(|v| {
                assert_eq!(cg_marking_weight(mk, v, &mut s), CgStatus::Ok);
                take(s)
            })
            .collect();
        assert_eq!(weights, ["0", "1", "2", "3", "4"]);
        assert_eq!(cg_marking_order(mk, &mut s), CgStatus::Ok);
        assert_eq!(take(s), "5");
        cg_marking_free(mk);
        assert_eq!(cg_graph_to_text(g, &mut s), CgStatus::Ok);
        assert_eq!(take(s).parse::<critgroup::graph::Multigraph>().unwrap(), CYCLE5.parse().unwrap());
        cg_graph_free(g);
    }
}

#[test]
fn collapsed_values_of_k3() {
    let g = graph("n 3\ne 1 2\ne 2 3\ne 1 3\n");
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(cg_graph_laplacian(g, true, &mut m), CgStatus::Ok);
        let (mut vals, mut len) = (ptr::null_mut(), 0usize);
        assert_eq!(cg_collapsed_values_full(m, &mut vals, &mut len), CgStatus::Ok);
        assert_eq!(std::slice::from_raw_parts(vals, len), &[2, 4]);
        cg_values_free(vals, len);
        assert_eq!(cg_collapsed_values(m, 3, 10, &mut vals, &mut len), CgStatus::Ok);
        assert_eq!(std::slice::from_raw_parts(vals, len), &[4]);
        cg_values_free(vals, len);
        assert_eq!(cg_collapsed_values(m, 3, 1, &mut vals, &mut len), CgStatus::Invalid);
        cg_matrix_free(m);
        cg_graph_free(g);

        let src = CString::new("m 2 2\n-1 1\n1 1\n").unwrap();
        assert_eq!(cg_matrix_parse(src.as_ptr(), &mut m), CgStatus::Ok);
        assert_eq!(cg_collapsed_values_full(m, &mut vals, &mut len), CgStatus::Ok);
        assert_eq!(std::slice::from_raw_parts(vals, len), &[-2, -1, 0, 1, 2]);
        cg_values_free(vals, len);
        cg_matrix_free(m);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("n 2\ne 1 7\n").unwrap();
        assert_eq!(cg_graph_parse(bad.as_ptr(), &mut g), CgStatus::Invalid);
        assert!(g.is_null());
        assert!(last_error().contains("line 2"));
        assert_eq!(cg_graph_parse(ptr::null(), &mut g), CgStatus::NullPointer);
        let bytes = [0xffu8, 0];
        assert_eq!(cg_graph_parse(bytes.as_ptr().cast(), &mut g), CgStatus::InvalidUtf8);

        let disc = graph("n 3\ne 1 2\n");
        let mut grp = ptr::null_mut();
        assert_eq!(cg_critical_group(disc, &mut grp), CgStatus::Infeasible);
        assert_eq!(last_error(), "graph is disconnected");
        let mut s = ptr::null_mut();
        assert_eq!(cg_pair_order(disc, 1, 1, &mut s), CgStatus::Invalid);
        assert_eq!(cg_pair_order(ptr::null(), 0, 1, &mut s), CgStatus::NullPointer);
        assert_eq!(cg_pair_order(disc, 0, 1, ptr::null_mut()), CgStatus::Infeasible);
        cg_graph_free(disc);

        let ok = graph(CYCLE5);
        assert_eq!(cg_pair_order(ok, 0, 1, &mut s), CgStatus::Ok);
        assert!(cg_last_error_message().is_null());
        cg_string_free(s);
        cg_graph_free(ok);

        cg_graph_free(ptr::null_mut());
        cg_string_free(ptr::null_mut());
        cg_values_free(ptr::null_mut(), 0);
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/critgroup.h");
    let source = include_str!("../src/lib.rs");
    for line in source.lines() {
        let Some(rest) = line.split("extern \"C\" fn ").nth(1) else { continue };
        let name = rest.split('(').next().unwrap();
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("CG_STATUS_INFEASIBLE = 4"));
}

/// Compiles the C example against the header and, when the static library
/// from this build is present, links and runs it.
#[test]
fn c_program_uses_the_header() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    let out = std::env::temp_dir().join(format!("critgroup-smoke-{}", std::process::id()));
    let lib_dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../target/debug");
    let lib = lib_dir.join("libcritgroup_ffi.a");
    let mut cmd = std::process::Command::new(&cc);
    cmd.arg("-Wall").arg("-Werror").arg(format!("-I{dir}/include")).arg(format!("{dir}/tests/c/smoke.c"));
    if lib.exists() {
        cmd.arg(&lib).args(["-lpthread", "-ldl", "-lm"]).arg("-o").arg(&out);
    } else {
        cmd.arg("-fsyntax-only");
    }
    let status = match cmd.status() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("skipping: cannot run {cc}: {e}");
            return;
        }
    };
    assert!(status.success(), "C compile failed");
    if lib.exists() {
        let run = std::process::Command::new(&out).output().unwrap();
        let _ = std::fs::remove_file(&out);
        assert!(run.status.success());
        assert_eq!(String::from_utf8(run.stdout).unwrap(), "h = 5\ncollapsed: 1 2 3 4\n");
    }
}
