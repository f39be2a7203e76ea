//! End-to-end flows over the public API: enumerate, classify, dualize and
//! attach characters to every small orbit.

use norbit_core::infchar::{infchar, recipe_infchar, InfCharRule, PairingMode};
use norbit_core::orbit::{
    bv_dual, component_group_order, dynkin_h, enumerate_orbits, hasse_edges, is_even, is_special,
    is_triangular,
};
use norbit_core::weights::{trivial_multiplicity, weyl_dim, RootSystem, DEFAULT_DIM_BOUND};
use norbit_core::{ClassicalType, LeviShape, Partition, Rat};

#[test]
fn every_small_orbit_has_consistent_data() {
    for ty in [
        ClassicalType::A,
        ClassicalType::B,
        ClassicalType::C,
        ClassicalType::D,
    ] {
        for n in 1..=4u32 {
            for o in enumerate_orbits(ty, n) {
                let h = dynkin_h(&o);
                assert!(h.windows(2).all(|w| w[0] >= w[1]), "{o}: h not dominant");
                assert!(component_group_order(&o).is_power_of_two());

                let dual = bv_dual(&o);
                assert_eq!(
                    dual.partition().size(),
                    dual.ty().partition_size(dual.rank())
                );
                if matches!(ty, ClassicalType::B | ClassicalType::C) {
                    assert!(is_special(&dual), "{o}: dual not special");
                }

                let (lambda, rule) = infchar(&o).unwrap();
                let expect_len = if ty == ClassicalType::A { n + 1 } else { n };
                assert_eq!(lambda.rank() as u32, expect_len);
                if rule == InfCharRule::EvenDual {
                    assert!(is_special(&o) && is_even(&dual));
                }
                // the recipe is defined everywhere at these ranks
                recipe_infchar(&o, PairingMode::Consistent).unwrap();
                recipe_infchar(&o, PairingMode::Literal).unwrap();
            }
        }
    }
}

#[test]
fn hasse_edges_are_covers() {
    for ty in [ClassicalType::B, ClassicalType::C, ClassicalType::D] {
        let orbits = enumerate_orbits(ty, 3);
        let edges = hasse_edges(ty, 3);
        for (upper, lower) in &edges {
            assert!(upper.partition().dominates(lower.partition()).unwrap());
            // nothing strictly between
            for mid in &orbits {
                if mid.partition() == upper.partition() || mid.partition() == lower.partition() {
                    continue;
                }
                let above = mid.partition().dominates(lower.partition()).unwrap();
                let below = upper.partition().dominates(mid.partition()).unwrap();
                assert!(!(above && below), "{mid} sits inside a cover");
            }
        }
    }
}

#[test]
fn branching_respects_weyl_dimensions() {
    let b2 = RootSystem::new(ClassicalType::B, 2);
    let spin = vec![Rat::new(1, 2), Rat::new(1, 2)];
    assert_eq!(weyl_dim(&b2, &spin).unwrap(), 4);
    // the spin representation restricted to the full group contains no
    // trivial constituent
    let full = LeviShape::new(vec![], 2);
    assert_eq!(
        trivial_multiplicity(&b2, &spin, &full, DEFAULT_DIM_BOUND).unwrap(),
        0
    );
}

#[test]
fn partitions_parse_roundtrip() {
    for s in ["5", "3,1,1", "2,2,1", ""] {
        let p: Partition = s.parse().unwrap();
        assert_eq!(p.to_string(), s);
    }
}

#[test]
fn triangular_membership_is_rare() {
    let triangulars: Vec<String> = enumerate_orbits(ClassicalType::B, 6)
        .into_iter()
        .filter(is_triangular)
        .map(|o| o.to_string())
        .collect();
    assert_eq!(triangulars, vec!["B6 (5,3,3,1,1)".to_string()]);
}
