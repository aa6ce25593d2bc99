//! Fuzzes the comma-separated partition literal parser used by the CLI.
//! A successful parse must produce a canonical diagram whose display form
//! parses back to the same value.

#![no_main]
use libfuzzer_sys::fuzz_target;

use extendibility::partitions::Partition;

fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let ambient = 1 + (first as usize) % 16;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(parsed) = Partition::parse_literal(text, ambient) {
        assert_eq!(parsed.ambient_rows(), ambient);
        assert!(parsed.rows().windows(2).all(|w| w[0] >= w[1]));
        let display = parsed.to_string();
        let inner = &display[1..display.len() - 1];
        let reparsed = Partition::parse_literal(inner, ambient)
            .expect("display output must parse back");
        assert_eq!(reparsed, parsed);
    }
});
