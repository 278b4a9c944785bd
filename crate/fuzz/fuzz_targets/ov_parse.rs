#![no_main]

use libfuzzer_sys::fuzz_target;
use rexint::ov::{prepare_instance, OvInstance};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(inst) = OvInstance::parse(text) else {
        return;
    };
    assert_eq!(OvInstance::parse(&inst.to_string()).unwrap(), inst);
    if inst.m() * inst.n() * inst.d <= 4096 {
        let _ = prepare_instance(&inst);
    }
});
