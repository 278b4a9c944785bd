#![no_main]

use libfuzzer_sys::fuzz_target;
use rexint::{classify, coercible_types, parse};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(r) = parse(text) else { return };
    let again = parse(&r.to_string()).expect("rendered expression parses");
    assert_eq!(again, r);
    let _ = classify(&r);
    if r.size() <= 64 {
        for (_, form) in coercible_types(&r) {
            let _ = form.to_regex();
        }
    }
});
