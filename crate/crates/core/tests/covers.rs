mod common;

use common::{arb_cover, cover_fixture, cover_fixtures, fixtures, random_cover};
use proptest::prelude::*;
use snc_cohom::cover::{pseudo_mv_double_complex, shifted_deepest_table, verify_final, verify_theorem};
use snc_cohom::instance::Instance;
use snc_cohom::resolution::{resolution_double_complex, verify_resolution};
use snc_cohom::simplicial::relative_cochain_complex;
use snc_cohom::{totalize, BettiTable, Status};

#[test]
fn fixtures_pass_resolution_and_final() {
    let all = fixtures();
    assert!(all.len() >= 10, "only {} fixtures", all.len());
    for inst in &all {
        for pair in inst.space_pairs() {
            let r = verify_resolution(&pair);
            assert!(r.passed(), "{r}");
        }
        if let Instance::Cover(c) = inst {
            let r = verify_final(c);
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn sphere_minus_two_points_is_a_circle() {
    let c = cover_fixture("s2-two-punctures");
    let r = verify_final(&c);
    assert_eq!(r.left, Some(BettiTable::from_pairs([(1, 1), (2, 1)])));
    assert_eq!(
        c.deepest_intersection().cochain_complex().cohomology(),
        BettiTable::from_pairs([(0, 1), (1, 1)])
    );
}

#[test]
fn companions_match_shifted_point() {
    let point = BettiTable::from_pairs([(0, 1)]);
    for (name, degree) in [("cayley-point-r2", 1), ("cayley-point-r3", 2)] {
        let c = cover_fixture(name);
        assert_eq!(c.deepest_intersection().cochain_complex().cohomology(), point);
        let r = verify_theorem(&c);
        assert_eq!(r.status, Status::Pass, "{r}");
        assert_eq!(r.left, Some(BettiTable::from_pairs([(degree, 1)])));
        assert_eq!(r.right, Some(point.shifted(-(degree))));
    }
    let plain = cover_fixture("s2-two-punctures");
    assert_eq!(verify_theorem(&plain).status, Status::NotApplicable);
}

#[test]
fn companion_resolution_matches_relative_groups() {
    for c in cover_fixtures() {
        let Some(comp) = &c.companion else { continue };
        let pair = &comp.pair;
        let direct = relative_cochain_complex(&pair.complex, &pair.union()).unwrap().cohomology();
        let total = totalize(&resolution_double_complex(pair).unwrap()).cohomology();
        assert_eq!(direct, total, "{}", c.name);
    }
}

#[test]
fn random_suite_passes() {
    for seed in 0..50 {
        let c = random_cover(seed);
        assert!(c.base.vertex_count() <= 12 && c.r() <= 4);
        let r = verify_final(&c);
        assert!(r.passed(), "{r}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolution_identity_on_random_covers(c in arb_cover()) {
        for pair in Instance::Cover(c).space_pairs() {
            let r = verify_resolution(&pair);
            prop_assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn final_table_is_order_independent(c in arb_cover(), rot in 0usize..4) {
        let r = c.r();
        let order: Vec<usize> = (0..r).map(|i| (i + rot) % r).collect();
        let a = verify_final(&c);
        let b = verify_final(&c.permuted(&order));
        prop_assert!(a.passed(), "{}", a);
        prop_assert_eq!(a.left, b.left);
        prop_assert_eq!(shifted_deepest_table(&c), shifted_deepest_table(&c.permuted(&order)));
    }

    #[test]
    fn euler_characteristics_agree(c in arb_cover()) {
        let dc = pseudo_mv_double_complex(&c).unwrap();
        let total = totalize(&dc);
        prop_assert_eq!(total.euler_characteristic(), dc.euler_characteristic());
        prop_assert_eq!(total.cohomology().euler_characteristic(), shifted_deepest_table(&c).euler_characteristic());
    }
}
