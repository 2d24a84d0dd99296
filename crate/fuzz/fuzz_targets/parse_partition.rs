#![no_main]

use libfuzzer_sys::fuzz_target;

use kleshchev::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(lam) = text.parse::<Partition>() else {
        return;
    };
    // Display round-trips through the parser.
    let again: Partition = lam.to_string().parse().unwrap();
    assert_eq!(again, lam);
    // The beta-number representation reconstructs the partition for any
    // admissible window, at a couple of charges.
    for charge in [-3i64, 0, 2] {
        for extra in [0usize, 5] {
            let beta = lam
                .beta_set(charge, lam.len() + 1 + extra)
                .expect("window long enough");
            assert_eq!(beta.partition().unwrap(), lam);
        }
    }
});
