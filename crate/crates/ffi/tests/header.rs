use std::path::{Path, PathBuf};
use std::process::Command;

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

/// `target/<profile>`, two levels above this test binary in `deps/`.
fn profile_dir() -> Option<PathBuf> {
    std::env::current_exe()
        .ok()?
        .parent()?
        .parent()
        .map(Path::to_path_buf)
}

fn cc_available() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

#[test]
fn header_compiles_as_c() {
    if !cc_available() {
        eprintln!("skipping: no cc");
        return;
    }
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(manifest_dir().join("include"))
        .arg(manifest_dir().join("tests/smoke.c"))
        .status()
        .unwrap();
    assert!(status.success(), "cc rejected the header");
}

#[test]
fn c_program_links_against_staticlib() {
    let Some(lib) = profile_dir()
        .map(|d| d.join("libbrandt_omega_ffi.a"))
        .filter(|p| p.exists())
    else {
        eprintln!("skipping: staticlib not found");
        return;
    };
    if !cc_available() || !cfg!(target_os = "linux") {
        eprintln!("skipping: needs cc on linux");
        return;
    }
    let exe = std::env::temp_dir().join(format!("brandt_omega_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .args(["-std=c99", "-I"])
        .arg(manifest_dir().join("include"))
        .arg(manifest_dir().join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "link failed");
    let run = Command::new(&exe).status().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(run.success(), "smoke program failed");
}
