#![no_main]

use libfuzzer_sys::fuzz_target;

use kleshchev::{Bipartition, Params};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(bp) = text.parse::<Bipartition>() else {
        return;
    };
    let again: Bipartition = bp.to_string().parse().unwrap();
    assert_eq!(again, bp);
    assert_eq!(bp.rank(), bp.first().rank() + bp.second().rank());
    // Node bookkeeping stays consistent on arbitrary parsed shapes.
    let params = Params::new(3, 1).unwrap();
    for i in 0..3 {
        for node in bp.removable_nodes(i, params) {
            assert_eq!(node.residue(params), i);
            let smaller = bp.remove_node(node);
            assert_eq!(smaller.add_node(node), bp);
        }
    }
});
