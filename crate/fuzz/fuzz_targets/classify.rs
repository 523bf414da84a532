#![no_main]

use emptytet::input::parse_tetrahedron;
use emptytet::normalize::canonicalize;
use emptytet::report::classify;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(t) = parse_tetrahedron(text) else { return };
    let Ok(report) = classify(&t, false) else { return };
    assert!(!report.empty || report.clean);
    if let Ok(r) = canonicalize(&t) {
        assert_eq!(r.is_sound_for(&t).ok(), Some(true));
        assert_eq!(Some(r.form.c), Some(report.volume6));
    }
});
