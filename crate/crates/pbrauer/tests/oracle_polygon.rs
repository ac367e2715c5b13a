//! Cross-checks the Hodge-Newton construction against exhaustive enumeration
//! of convex integral minorants, plus the polygon <-> slope-multiset
//! conversions on frozen and random inputs.

mod common;

use common::{
    enumerate_integral_minorants, heights_at_integers, heights_to_vertices, upmost_minorant,
    SplitMix64, Q,
};
use num::rational::Ratio;
use num::Zero;
use pbrauer::polygon::{
    hodge_newton_polygon, lies_below, polygon_from_slopes, slopes_from_polygon, NewtonPolygon,
};
use pbrauer::slopes::{m_ij, IsocrystalProfile, SlopeMultiset};

fn ms(pairs: &[(i64, i64, u64)]) -> SlopeMultiset {
    SlopeMultiset::from_pairs(
        &pairs
            .iter()
            .map(|&(n, d, m)| (Ratio::new(n, d), m))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

#[test]
fn polygon_from_slopes_frozen_examples() {
    let np = polygon_from_slopes(&ms(&[(0, 1, 3), (1, 1, 3)])).unwrap();
    assert_eq!(np.vertices(), &[(0, 0), (3, 0), (6, 3)]);
    let np = polygon_from_slopes(&ms(&[(1, 2, 4), (1, 1, 7), (3, 2, 4)])).unwrap();
    assert_eq!(np.vertices(), &[(0, 0), (4, 2), (11, 9), (15, 15)]);
    let np = polygon_from_slopes(&SlopeMultiset::from_pairs(&[]).unwrap()).unwrap();
    assert_eq!(np.vertices(), &[(0, 0)]);
    // a slope block whose breakpoint is off the lattice is rejected
    let err = polygon_from_slopes(&ms(&[(1, 2, 1)])).unwrap_err();
    assert!(matches!(err, pbrauer::Error::IntegralityViolation(_)));
    let err = polygon_from_slopes(&ms(&[(1, 3, 2), (1, 2, 2)])).unwrap_err();
    assert!(matches!(err, pbrauer::Error::IntegralityViolation(_)));
}

#[test]
fn slopes_round_trip_through_polygons() {
    let cases = vec![
        ms(&[(0, 1, 3), (1, 1, 3)]),
        ms(&[(1, 2, 4), (1, 1, 7), (3, 2, 4)]),
        ms(&[(2, 5, 5)]),
        ms(&[(0, 1, 1), (1, 1, 2), (4, 1, 1)]),
    ];
    for m in cases {
        let np = polygon_from_slopes(&m).unwrap();
        assert_eq!(slopes_from_polygon(&np).unwrap(), m);
    }
}

#[test]
fn lies_below_basics() {
    let np = polygon_from_slopes(&ms(&[(1, 2, 4), (1, 1, 7), (3, 2, 4)])).unwrap();
    let hn = hodge_newton_polygon(&np).unwrap();
    assert!(lies_below(&hn, &np).unwrap());
    assert!(lies_below(&np, &np).unwrap(), "lies_below is reflexive");
    assert!(!lies_below(&np, &hn).unwrap() || hn.vertices() == np.vertices());
    // endpoint mismatch is an error, not `false`
    let other = polygon_from_slopes(&ms(&[(0, 1, 2)])).unwrap();
    assert!(matches!(
        lies_below(&other, &np),
        Err(pbrauer::Error::InvalidArgument(_))
    ));
}

#[test]
fn hodge_newton_matches_enumerator_on_frozen_counterexample_shapes() {
    // shapes on which simpler greedy constructions give the wrong answer
    let tricky = vec![
        ms(&[(0, 1, 1), (1, 1, 2), (4, 1, 1)]),
        ms(&[(2, 5, 5)]),
        ms(&[(1, 2, 4), (1, 1, 7), (3, 2, 4)]),
        ms(&[(1, 3, 3), (2, 3, 3)]),
    ];
    for m in tricky {
        let np = polygon_from_slopes(&m).unwrap();
        let hn = hodge_newton_polygon(&np).unwrap();
        let heights = heights_at_integers(np.vertices());
        let oracle = upmost_minorant(&heights).expect("unique upmost minorant");
        assert_eq!(
            hn.vertices(),
            heights_to_vertices(&oracle).as_slice(),
            "HN mismatch on {m:?}"
        );
        // the result dominates every enumerated minorant pointwise
        let hn_heights = heights_at_integers(hn.vertices());
        for cand in enumerate_integral_minorants(&heights) {
            for (x, &y) in cand.iter().enumerate() {
                assert!(
                    Q::from_integer(y) <= hn_heights[x],
                    "candidate exceeds HN at x={x} for {m:?}"
                );
            }
        }
    }
}

#[test]
fn hodge_newton_matches_enumerator_on_random_lattice_polygons() {
    let mut rng = SplitMix64::new(0xacc0_19);
    let mut tested = 0;
    while tested < 120 {
        // random lattice-breakpoint slope multiset, endpoint kept small so
        // the exhaustive oracle stays fast
        let mut pairs: Vec<(Q, u64)> = Vec::new();
        let mut rank = 0u64;
        for _ in 0..(1 + rng.below(3)) {
            let den = 1 + rng.below(4) as i64;
            let num = rng.below(4 * den as u64 + 1) as i64;
            let s = Ratio::new(num, den);
            if pairs.iter().any(|&(t, _)| t == s) {
                continue;
            }
            let mult = *s.denom() as u64 * (1 + rng.below(2));
            if rank + mult > 10 {
                continue;
            }
            pairs.push((s, mult));
            rank += mult;
        }
        if pairs.is_empty() {
            continue;
        }
        pairs.sort();
        let m = SlopeMultiset::from_pairs(&pairs).unwrap();
        let np = polygon_from_slopes(&m).unwrap();
        let hn = hodge_newton_polygon(&np).unwrap();
        let heights = heights_at_integers(np.vertices());
        let oracle = upmost_minorant(&heights).expect("unique upmost minorant");
        assert_eq!(
            hn.vertices(),
            heights_to_vertices(&oracle).as_slice(),
            "HN mismatch on {m:?}"
        );

        // invariants: below the original, same endpoints, integer slopes,
        // and integer-slope multiplicities equal to the slope numbers m_ij
        assert!(lies_below(&hn, &np).unwrap());
        assert_eq!(hn.vertices().first(), np.vertices().first());
        assert_eq!(hn.vertices().last(), np.vertices().last());
        let hn_slopes = slopes_from_polygon(&hn).unwrap();
        for &(s, _) in hn_slopes.entries() {
            assert!(s.is_integer(), "non-integer HN slope {s} on {m:?}");
        }
        let max_slope = pairs.last().unwrap().0.ceil().to_integer().max(1) as u32;
        let prof = IsocrystalProfile::new(max_slope, m.clone()).unwrap();
        for i in 0..=max_slope {
            let mult = hn_slopes.multiplicity(&Q::from_integer(i as i64));
            assert_eq!(
                Q::from_integer(mult as i64),
                m_ij(&prof, i, max_slope - i).unwrap(),
                "HN slope-{i} multiplicity vs m_ij on {m:?}"
            );
        }
        // idempotence
        assert_eq!(hodge_newton_polygon(&hn).unwrap().vertices(), hn.vertices());
        tested += 1;
    }
}

#[test]
fn newton_polygon_validation() {
    assert!(NewtonPolygon::new(vec![]).is_err(), "empty vertex list");
    assert!(
        NewtonPolygon::new(vec![(1, 0), (2, 1)]).is_err(),
        "must start at the origin"
    );
    assert!(
        NewtonPolygon::new(vec![(0, 0), (2, 1), (2, 2)]).is_err(),
        "x must strictly increase"
    );
    assert!(
        NewtonPolygon::new(vec![(0, 0), (2, 2), (4, 3)]).is_err(),
        "slopes must strictly increase between segments"
    );
    assert!(
        NewtonPolygon::new(vec![(0, 0), (2, -1), (3, 1)]).is_err(),
        "slopes must be nonnegative"
    );
    assert!(NewtonPolygon::new(vec![(0, 0)]).is_ok());
    assert!(NewtonPolygon::new(vec![(0, 0), (3, 0), (6, 3)]).is_ok());
    // collinear interior vertices are rejected: vertex lists are canonical
    assert!(NewtonPolygon::new(vec![(0, 0), (1, 0), (2, 0)]).is_err());

    let zero = Q::zero();
    let np = NewtonPolygon::new(vec![(0, 0), (3, 0), (6, 3)]).unwrap();
    assert_eq!(np.height_at(zero).unwrap(), zero);
    assert_eq!(np.height_at(Q::from_integer(4)).unwrap(), Q::from_integer(1));
    assert_eq!(np.height_at(Ratio::new(9, 2)).unwrap(), Ratio::new(3, 2));
    assert!(np.height_at(Q::from_integer(7)).is_err(), "out of range");
}
