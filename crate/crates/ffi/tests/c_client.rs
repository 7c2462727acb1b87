//! Compiles a C program against the generated header and the static
//! library, then runs it.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "polyholes.h"

int main(void) {
    int32_t xs[] = {0, 1, 2, 0, 2, 0, 1, 2};
    int32_t ys[] = {0, 0, 0, 1, 1, 2, 2, 2};
    PhPolyomino *p = NULL;
    if (ph_polyomino_from_cells(xs, ys, 8, &p) != PH_STATUS_OK) return 1;
    PhMetrics m;
    if (ph_polyomino_metrics(p, &m) != PH_STATUS_OK) return 2;
    char *ascii = NULL;
    if (ph_polyomino_ascii(p, &ascii) != PH_STATUS_OK) return 3;
    printf("n=%llu holes=%llu p=%llu\n%s\n", (unsigned long long)m.n,
           (unsigned long long)m.holes, (unsigned long long)m.p, ascii);
    ph_string_free(ascii);
    ph_polyomino_free(p);

    PhPolyomino *q = NULL;
    if (ph_construct(PH_FAMILY_R_PRIME, 0, 0, 10, &q) != PH_STATUS_DOMAIN) return 4;
    if (strstr(ph_last_error_message(), "71400") == NULL) return 5;
    printf("ub=%llu\n", (unsigned long long)ph_ub_fixed_point(60));
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from <target>/<profile>/deps/
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/polyholes.h")).unwrap();
    for name in [
        "ph_last_error_message",
        "ph_polyomino_from_cells",
        "ph_polyomino_parse",
        "ph_polyomino_free",
        "ph_polyomino_cells",
        "ph_polyomino_metrics",
        "ph_polyomino_serialize",
        "ph_polyomino_ascii",
        "ph_polyomino_svg",
        "ph_string_free",
        "ph_construct",
        "ph_p_min",
        "ph_ub_fixed_point",
        "ph_ub_from_lb",
        "ph_count_fixed",
        "ph_search_g",
        "typedef struct PhPolyomino PhPolyomino;",
        "PH_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

#[test]
fn c_program_links_and_runs() {
    let lib = target_dir().join("libpolyholes_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    let exe = dir.path().join("client");
    std::fs::write(&src, PROGRAM).unwrap();
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("cc available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "n=8 holes=1 p=16\n###\n#.#\n###\nub=21\n"
    );
}
