//! Fuzzes the coordinate-list operator text format: arbitrary input must be
//! rejected cleanly or produce an operator whose re-export parses to the
//! same entries.

#![no_main]
use libfuzzer_sys::fuzz_target;

use extendibility::oracle::SparseOperator;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 1 << 16 {
        return;
    }
    if let Ok(op) = SparseOperator::parse_coo_text(text) {
        let exported = op.to_coo_text();
        let back = SparseOperator::parse_coo_text(&exported).expect("export parses");
        assert_eq!(back.dimension(), op.dimension());
        assert_eq!(back.entries(), op.entries());
    }
});
