use std::path::{Path, PathBuf};
use std::process::Command;

/// Directory holding the freshly built cdylib, next to this test binary.
fn lib_dir() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let deps = exe.parent()?;
    let found = [deps, deps.parent()?].into_iter().find(|d| d.join("libmultiwheel_ffi.so").exists());
    found.map(Path::to_path_buf)
}

#[test]
fn c_program_links_against_header() {
    let Some(lib) = lib_dir() else {
        eprintln!("skipping: shared library not found");
        return;
    };
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("mw_smoke");
    let status = Command::new("cc")
        .arg(root.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg("-L")
        .arg(&lib)
        .arg("-lmultiwheel_ffi")
        .arg("-o")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).env("LD_LIBRARY_PATH", &lib).output().unwrap();
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(run.status.success(), "{stdout}");
    assert!(stdout.contains("n=11 m=20 chi=4 planar=0"), "{stdout}");
    assert!(stdout.contains("error: spec"), "{stdout}");
}
