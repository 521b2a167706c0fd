//! Compiles and runs a small C program against the generated header and the
//! static library.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "dtcodes.h"

int main(void) {
    DtCode *code = NULL;
    size_t d = 0;
    if (dt_code_from_row(4, "(1,w)", false, &code) != DT_STATUS_OK) return 1;
    if (dt_code_minimum_weight(code, &d) != DT_STATUS_OK || d != 3) return 2;
    dt_code_free(code);
    if (dt_code_from_triple(3, "1;(1,0);(2,x)", &code) != DT_STATUS_PARSE) return 3;
    char *msg = dt_last_error_message();
    if (msg == NULL || strstr(msg, "x") == NULL) return 4;
    dt_string_free(msg);
    char *json = NULL;
    if (dt_average_weight_enumerator(2, 2, &json) != DT_STATUS_OK) return 5;
    if (strcmp(json, "[\"2\",\"1\",\"1\"]") != 0) return 6;
    dt_string_free(json);
    printf("ok %s\n", dt_version());
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from <target>/<profile>/deps
    std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/dtcodes.h")).unwrap();
    for name in [
        "dt_code_from_triple",
        "dt_code_from_row",
        "dt_code_minimum_weight",
        "dt_classify",
        "dt_classification_free",
        "dt_last_error_message",
        "DT_STATUS_BUDGET_EXCEEDED",
        "typedef struct DtCode DtCode",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn c_program_links_and_runs() {
    let lib = target_dir().join("libdtcodes_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());
    let dir = tempfile_dir();
    let src = dir.join("smoke.c");
    let exe = dir.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
    std::fs::remove_dir_all(&dir).unwrap();
}

fn tempfile_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dtcodes-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
