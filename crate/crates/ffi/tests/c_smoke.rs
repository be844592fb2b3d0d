//! Compiles a small C program against the generated header and the static
//! library, then runs it.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "homconj.h"

int main(void) {
    HomconjPerm *a = NULL, *b = NULL, *b2 = NULL, *w = NULL;
    if (homconj_perm_parse("(1 2 3 4)(5 6 7 8)", 11, &a) != HOMCONJ_STATUS_OK) return 1;
    if (homconj_perm_parse("(1 5)(2 6)(3 7)(4 8)(9 10)", 11, &b) != HOMCONJ_STATUS_OK) return 1;
    if (homconj_perm_parse("(1 6)(2 7)(3 8)(4 5)(10 11)", 11, &b2) != HOMCONJ_STATUS_OK) return 1;
    HomconjDecision d;
    if (homconj_decide_abelian(a, b, a, b2, &d, &w) != HOMCONJ_STATUS_OK) return 2;
    if (!d.conjugate || w == NULL) return 3;
    char *text = homconj_perm_format(w);
    printf("%s\n", text);
    homconj_string_free(text);
    HomconjPerm *bad = NULL;
    if (homconj_perm_parse("(1 12)", 11, &bad) != HOMCONJ_STATUS_PARSE) return 4;
    if (strlen(homconj_last_error()) == 0) return 5;
    homconj_perm_free(a);
    homconj_perm_free(b);
    homconj_perm_free(b2);
    homconj_perm_free(w);
    return 0;
}
"#;

fn static_lib() -> Option<PathBuf> {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().ok()?;
    let lib = exe.parent()?.parent()?.join("libhomconj_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    let Some(lib) = static_lib() else {
        eprintln!("static library not found; skipping");
        return;
    };
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("c_smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    let bin = dir.join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(
        out.status.success(),
        "C program exited with {:?}",
        out.status
    );
    let witness = String::from_utf8(out.stdout).unwrap();
    assert!(witness.trim().starts_with('('), "{witness}");
}
