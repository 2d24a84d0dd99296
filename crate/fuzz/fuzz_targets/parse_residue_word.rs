#![no_main]

use libfuzzer_sys::fuzz_target;

use kleshchev::fock::parse_residue_word;
use kleshchev::Params;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for e in [2u32, 4] {
        let params = Params::new(e, e - 1).unwrap();
        if let Ok(word) = parse_residue_word(text, params) {
            assert!(word.iter().all(|&i| i < e));
            // A parseable word never has more letters than separators + 1.
            assert!(word.len() <= text.matches(',').count() + 1);
        }
    }
});
