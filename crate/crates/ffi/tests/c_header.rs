//! Compiles a small C program against the generated header and the static
//! library. Skipped when no C compiler or static archive is available.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <math.h>
#include <stdio.h>
#include "landau_wehrl.h"

int main(void) {
    LwDensity *d = NULL;
    double v = 0.0;
    if (lw_density_pure(0, 0, &d) != LW_STATUS_OK) return 10;
    if (lw_density_wehrl(d, &v) != LW_STATUS_OK) return 11;
    lw_density_free(d);
    if (fabs(v - 1.0) > 1e-10) return 12;
    if (lw_density_thermal(0, -2.0, &d) != LW_STATUS_DOMAIN) return 13;
    if (lw_last_error_message() == NULL) return 14;
    printf("%.12f\n", v);
    return 0;
}
"#;

#[test]
fn header_compiles_and_links() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = manifest.join("include/landau_wehrl.h");
    assert!(header.exists(), "generated header missing");

    let target = std::env::var_os("CARGO_TARGET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| manifest.join("../../target"));
    let profile = if cfg!(debug_assertions) {
        "debug"
    } else {
        "release"
    };
    let archive = target.join(profile).join("liblandau_wehrl_ffi.a");
    if !archive.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static archive or C compiler");
        return;
    }

    let dir = std::env::temp_dir().join(format!("lw_ffi_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    let exe = dir.join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(header.parent().unwrap())
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "C program exited with {:?}",
        out.status.code()
    );
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "1.000000000000"
    );
    let _ = std::fs::remove_dir_all(&dir);
}
