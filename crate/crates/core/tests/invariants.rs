use proptest::prelude::*;

use rkm::codes::{is_self_dual_brute, is_self_dual_free};
use rkm::fixtures::{parse_fixtures, serialize_fixtures, table, table_ids};
use rkm::gray::{lee_weight_vector, phi_km};
use rkm::{ConstructionSpec, RingCode, RingElement, RingMatrix, RingParams};

const RINGS: [(u32, u32); 5] = [(2, 1), (2, 2), (3, 1), (3, 2), (4, 2)];

fn vector() -> impl Strategy<Value = (Vec<RingElement>, Vec<RingElement>)> {
    (0..RINGS.len(), 1usize..6).prop_flat_map(|(r, n)| {
        let (k, m) = RINGS[r];
        let p = RingParams::new(k, m).unwrap();
        let el = (0..p.size()).prop_map(move |x| p.decode(x).unwrap());
        (prop::collection::vec(el.clone(), n), prop::collection::vec(el, n))
    })
}

/// Standard-form generators `[I | A]` with km * 2g <= 16.
fn standard_form() -> impl Strategy<Value = RingMatrix> {
    prop_oneof![Just((2u32, 1u32, 1usize)), Just((2, 1, 2)), Just((2, 1, 4)), Just((2, 2, 1)), Just((3, 1, 2)), Just((4, 1, 2))]
        .prop_flat_map(|(k, m, g)| {
            let p = RingParams::new(k, m).unwrap();
            prop::collection::vec(0..p.size(), g * g).prop_map(move |a| {
                let rows: Vec<Vec<u64>> = (0..g)
                    .map(|i| (0..g).map(|j| (i == j) as u64).chain(a[i * g..(i + 1) * g].iter().copied()).collect())
                    .collect();
                RingMatrix::from_encoded(p, &rows).unwrap()
            })
        })
}

proptest! {
    #[test]
    fn gray_map_is_linear_isometry((a, b) in vector()) {
        let sum: Vec<_> = a.iter().zip(&b).map(|(x, y)| *x + *y).collect();
        let (ga, gb, gs) = (phi_km(&a).unwrap(), phi_km(&b).unwrap(), phi_km(&sum).unwrap());
        prop_assert_eq!(ga.xor(&gb), gs.clone());
        prop_assert_eq!(gs.weight(), lee_weight_vector(&sum));
    }

    #[test]
    fn self_dual_test_matches_brute_force(g in standard_form()) {
        prop_assert_eq!(is_self_dual_free(&g).unwrap(), is_self_dual_brute(&RingCode::new(g)).unwrap());
    }
}

#[test]
fn fixture_tables_round_trip() {
    for id in table_ids() {
        let rows = table(id).unwrap();
        assert!(!rows.is_empty(), "{id}");
        let again = parse_fixtures(&serialize_fixtures(&rows)).unwrap();
        assert_eq!(rows, again, "{id}");
        for row in &rows {
            let spec: ConstructionSpec = row.spec.to_string().parse().unwrap();
            assert_eq!(spec, row.spec);
        }
    }
}

#[test]
fn table_sizes() {
    let sizes: Vec<usize> = ["golay", "t1", "t2", "t3", "t4", "t5", "t6", "t8"].iter().map(|t| table(t).unwrap().len()).collect();
    assert_eq!(sizes, [2, 4, 2, 4, 2, 43, 27, 35]);
    assert_eq!(table("t7").unwrap(), table("t8").unwrap());
}
