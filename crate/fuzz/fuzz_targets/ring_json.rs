#![no_main]

use libfuzzer_sys::fuzz_target;
use ringlab::config::Config;

// The raw-table import must never panic, and any ring it accepts has passed
// axiom verification, so basic identities must hold.
fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    let config = Config {
        table_cap: 64,
        axiom_cap: 64,
        ..Config::default()
    };
    if let Ok(ring) = ringlab::json_ring::ring_from_json(input, &config) {
        let one = ring.one();
        let zero = ring.zero();
        for a in 0..ring.size() {
            assert_eq!(ring.mul(one, a), a);
            assert_eq!(ring.add(a, zero), a);
            assert_eq!(ring.add(a, ring.neg(a)), zero);
        }
    }
});
