//! Replays the checked-in fuzz seeds through the same assertions the fuzz
//! targets make, so the corpus is exercised on stable toolchains too.

use std::fs;
use std::path::{Path, PathBuf};

use emptytet::input::{parse_tetrahedron, parse_vertex_file, parse_vertices};
use emptytet::normalize::canonicalize;
use emptytet::report::classify;

fn corpus(target: &str) -> Vec<(PathBuf, Vec<u8>)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| {
            let bytes = fs::read(&p).unwrap();
            (p, bytes)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "empty corpus for {target}");
    out
}

#[test]
fn parse_vertices_seeds() {
    let mut parsed = 0;
    for (path, data) in corpus("parse_vertices") {
        let Ok(text) = std::str::from_utf8(&data) else { continue };
        if let Ok(vs) = parse_vertices(text) {
            let again: Vec<String> = vs.iter().flat_map(|v| v.to_array()).map(|x| x.to_string()).collect();
            assert_eq!(parse_vertices(&again.join(" ")).unwrap(), vs, "{}", path.display());
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn parse_vertex_file_seeds() {
    for (path, data) in corpus("parse_vertex_file") {
        let text = std::str::from_utf8(&data).unwrap();
        let vs = parse_vertex_file(text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(parse_vertices(text).unwrap(), vs);
    }
}

#[test]
fn classify_seeds() {
    let mut classified = 0;
    for (path, data) in corpus("classify") {
        let Ok(text) = std::str::from_utf8(&data) else { continue };
        let Ok(t) = parse_tetrahedron(text) else { continue };
        let report = classify(&t, true).unwrap();
        assert!(report.consistent(), "{}", path.display());
        assert!(!report.empty || report.clean);
        if let Ok(r) = canonicalize(&t) {
            assert!(r.is_sound_for(&t).unwrap());
            assert_eq!(r.form.c, report.volume6);
        }
        classified += 1;
    }
    assert!(classified >= 4);
}
