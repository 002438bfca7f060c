use sdo_core::gen::{instance, Family};
use sdo_core::{brute_ssrp, OracleTree};

#[test]
fn larger_instances_of_every_family() {
    for family in Family::ALL {
        for seed in 0..3 {
            let inst = instance(family, 250, seed);
            let oracle = OracleTree::build(&inst.graph, inst.source).unwrap();
            assert_eq!(oracle.ssrp(), brute_ssrp(&inst.graph, inst.source), "{family} seed {seed}");
        }
    }
}

#[test]
fn parallel_build_matches_brute_force() {
    // large enough for the children to be built on separate threads
    let inst = instance(Family::QuarterChords, 5000, 4);
    let oracle = OracleTree::build(&inst.graph, inst.source).unwrap();
    let brute = brute_ssrp(&inst.graph, inst.source);
    assert_eq!(oracle.ssrp().records.len(), brute.records.len());
    assert_eq!(oracle.ssrp(), brute);
}
