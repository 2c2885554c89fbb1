#![no_main]

use libfuzzer_sys::fuzz_target;
use ringlab::config::Config;

// Construction from arbitrary accepted expressions must either produce a
// verified ring or fail with a structured error; tiny caps keep iterations
// fast and bound memory.
fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    let config = Config {
        table_cap: 256,
        structure_cap: 512,
        axiom_cap: 64,
        axiom_samples: 64,
        ..Config::default()
    };
    if let Ok(ring) = ringlab::expr::parse_and_eval(input, &config) {
        assert!(ring.size() >= 2);
        assert!(ring.size() <= 512);
        let one = ring.one();
        assert_eq!(ring.mul(one, one), one);
    }
});
