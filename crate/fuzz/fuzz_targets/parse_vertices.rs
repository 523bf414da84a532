#![no_main]

use emptytet::input::parse_vertices;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(vs) = parse_vertices(text) {
            // re-rendering the parsed vertices must parse to the same values
            let again: Vec<String> = vs.iter().flat_map(|v| v.to_array()).map(|x| x.to_string()).collect();
            assert_eq!(parse_vertices(&again.join(" ")).unwrap(), vs);
        }
    }
});
