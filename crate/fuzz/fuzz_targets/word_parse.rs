#![no_main]

use libfuzzer_sys::fuzz_target;
use rexint::{parse_word, render_word};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = parse_word(text) {
        assert_eq!(parse_word(&render_word(&w)).unwrap(), w);
    }
});
