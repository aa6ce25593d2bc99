//! Fuzzes JSON deserialization of diagrams: arbitrary bytes must never
//! panic, and accepted inputs must round-trip through serialization.

#![no_main]
use libfuzzer_sys::fuzz_target;

use extendibility::partitions::Partition;

fuzz_target!(|data: &[u8]| {
    if let Ok(partition) = serde_json::from_slice::<Partition>(data) {
        assert!(partition.rows().windows(2).all(|w| w[0] >= w[1]));
        let json = serde_json::to_vec(&partition).expect("serializes");
        let back: Partition = serde_json::from_slice(&json).expect("round-trips");
        assert_eq!(back, partition);
    }
});
