#![no_main]

use emptytet::input::{parse_vertex_file, parse_vertices};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(vs) = parse_vertex_file(text) {
            // a valid file is also valid flat input
            assert_eq!(parse_vertices(text).unwrap(), vs);
        }
    }
});
