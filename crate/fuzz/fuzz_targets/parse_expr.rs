#![no_main]

use libfuzzer_sys::fuzz_target;

// The expression parser must never panic on arbitrary input, and anything it
// accepts must round-trip through the printer.
fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(expr) = ringlab::expr::parse(input) {
        let printed = ringlab::expr::print(&expr);
        let reparsed = ringlab::expr::parse(&printed).expect("printed form parses");
        assert_eq!(expr, reparsed, "print/parse round trip diverged");
    }
});
