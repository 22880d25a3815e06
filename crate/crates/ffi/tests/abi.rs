use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use metric_lines_ffi::*;

fn take_string(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { ml_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ml_last_error_message()) }.to_string_lossy().into_owned()
}

fn graph(text: &str) -> *mut MlGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ml_graph_from_graph6(c.as_ptr(), &mut g) }, MlStatus::Ok, "{}", last_error());
    g
}

fn family(name: &str, k: usize, parts: &[usize]) -> Result<*mut MlGraph, MlStatus> {
    let c = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    match unsafe { ml_graph_from_family(c.as_ptr(), k, parts.as_ptr(), parts.len(), &mut g) } {
        MlStatus::Ok => Ok(g),
        s => Err(s),
    }
}

#[test]
fn named_graph_queries() {
    let g = family("K2222", 0, &[]).unwrap();
    let (mut n, mut lines, mut bridges) = (0, 0, 99);
    let (mut lc, mut chordal, mut bicon, mut cc) = (false, true, false, false);
    let mut d = 0u32;
    unsafe {
        assert_eq!(ml_graph_vertex_count(g, &mut n), MlStatus::Ok);
        assert_eq!(ml_line_count(g, &mut lines), MlStatus::Ok);
        assert_eq!(ml_bridge_count(g, &mut bridges), MlStatus::Ok);
        assert_eq!(ml_is_lc(g, &mut lc), MlStatus::Ok);
        assert_eq!(ml_is_chordal(g, &mut chordal), MlStatus::Ok);
        assert_eq!(ml_is_biconnected(g, &mut bicon), MlStatus::Ok);
        assert_eq!(ml_chen_chvatal_holds(g, &mut cc), MlStatus::Ok);
        assert_eq!(ml_diameter(g, &mut d), MlStatus::Ok);
        ml_graph_free(g);
    }
    assert_eq!((n, lines, bridges, d), (8, 7, 0, 2));
    assert!(lc && !chordal && bicon && cc);
}

#[test]
fn json_outputs() {
    let g = graph("Dvw");
    let mut s = ptr::null_mut();
    unsafe { assert_eq!(ml_line_system_json(g, &mut s), MlStatus::Ok) };
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["count"], 4);
    unsafe { assert_eq!(ml_check_properties_json(g, &mut s), MlStatus::Ok) };
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["lc"], true);
    unsafe { assert_eq!(ml_graph_to_graph6(g, &mut s), MlStatus::Ok) };
    assert_eq!(take_string(s), "Dvw");
    unsafe { ml_graph_free(g) };
}

#[test]
fn error_statuses() {
    let g = graph("C?");
    let mut n = 0;
    unsafe { assert_eq!(ml_line_count(g, &mut n), MlStatus::Disconnected) };
    assert_eq!(last_error(), "graph is disconnected");
    unsafe { ml_graph_free(g) };

    let g = graph("@");
    unsafe { assert_eq!(ml_line_count(g, &mut n), MlStatus::TooFewVertices) };
    unsafe { ml_graph_free(g) };

    assert_eq!(family("nope", 0, &[]), Err(MlStatus::InvalidArgument));
    assert_eq!(family("multipartite", 0, &[0, 2]), Err(MlStatus::InvalidArgument));
    assert!(family("matched-cliques", 3, &[]).is_ok_and(|g| {
        unsafe { ml_graph_free(g) };
        true
    }));

    unsafe {
        assert_eq!(ml_graph_from_graph6(ptr::null(), &mut ptr::null_mut()), MlStatus::NullPointer);
        assert_eq!(ml_line_count(ptr::null(), &mut n), MlStatus::NullPointer);
        ml_graph_free(ptr::null_mut());
        ml_string_free(ptr::null_mut());
    }
    let bad = [0xffu8, 0];
    unsafe {
        assert_eq!(ml_graph_from_graph6(bad.as_ptr().cast(), &mut ptr::null_mut()), MlStatus::InvalidUtf8);
    }
}

#[test]
fn enumeration() {
    let mut s = ptr::null_mut();
    let mut count = 0;
    unsafe { assert_eq!(ml_enumerate_connected(5, &mut s, &mut count), MlStatus::Ok) };
    assert_eq!(count, 21);
    assert_eq!(take_string(s).lines().count(), 21);
    unsafe { assert_eq!(ml_enumerate_connected(8, &mut s, ptr::null_mut()), MlStatus::TooLarge) };
}

#[test]
fn header_declares_every_entry_point() {
    let header = include_str!("../include/metric_lines.h");
    let src = include_str!("../src/lib.rs");
    for line in src.lines() {
        if let Some(rest) = line.strip_prefix("pub unsafe extern \"C\" fn ").or(line.strip_prefix("pub extern \"C\" fn ")) {
            let name = rest.split('(').next().unwrap();
            assert!(header.contains(&format!("{name}(")), "{name} missing from header");
        }
    }
}

/// Compiles the C smoke program against the static library.
#[test]
fn c_smoke_program() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libmetric_lines_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let bin = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ml_smoke");
    let status = Command::new("cc")
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
