use brauer_core::admissible::enumerate_all_orbits;
use brauer_core::diagram::{cell_gram, semisimple_at};
use brauer_core::morita::{blocks, rank_check, wedderburn_sizes};
use brauer_core::{AlgebraKind, EnumerationOptions, ExactRational, LaurentPoly, RootSystem};
use proptest::prelude::*;

fn sys(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap())
}

#[test]
fn block_contributions_survive_reenumeration() {
    let alt = EnumerationOptions { alternate_order: true, ..Default::default() };
    for spec in ["A4", "D4", "D5", "D6", "E6"] {
        let rs = sys(spec);
        let key = |opts: &EnumerationOptions| {
            let mut v: Vec<(usize, u64, u128)> = blocks(&rs, AlgebraKind::Brauer, opts)
                .unwrap()
                .iter()
                .map(|b| (b.orbit_size, b.group_order, b.contribution()))
                .collect();
            v.sort();
            v
        };
        assert_eq!(key(&Default::default()), key(&alt), "{spec}");
    }
}

#[test]
fn rank_totals() {
    let total = |s: &str| rank_check(&sys(s), &Default::default()).unwrap().total;
    assert_eq!(total("A4"), 945);
    assert_eq!(total("A5"), 10395);
    assert_eq!(total("D4"), 1569);
    assert_eq!(total("E6"), 1440585);
}

#[test]
fn wedderburn_squares_sum_to_contributions() {
    for spec in ["A3", "A5", "D4", "E6"] {
        let rs = sys(spec);
        let w = wedderburn_sizes(&rs, &Default::default()).unwrap();
        let b = blocks(&rs, AlgebraKind::Brauer, &Default::default()).unwrap();
        for (wb, bb) in w.iter().zip(&b) {
            if let Some(s) = wb.sum_of_squares() {
                assert_eq!(s, bb.contribution());
            }
        }
    }
}

#[test]
fn maximal_elements_are_members_of_their_orbit() {
    for spec in ["A5", "D5", "E7"] {
        let rs = sys(spec);
        for o in enumerate_all_orbits(&rs, &Default::default()).unwrap() {
            let top = o.maximal().unwrap();
            assert!(o.contains(&top));
        }
    }
}

#[test]
fn reports_serialise() {
    let rs = sys("A2");
    let b = blocks(&rs, AlgebraKind::Bmw, &Default::default()).unwrap();
    let v = serde_json::to_value(&b).unwrap();
    assert_eq!(v[0]["algebra"], "hecke-algebra");
    assert_eq!(v[1]["maximal_element"], serde_json::json!([[1, 1]]));
    assert_eq!(v[0]["centralizer_nodes"], serde_json::json!([1, 2]));
    let c = serde_json::to_value(cell_gram(3, 1).unwrap()).unwrap();
    assert_eq!(c["det"], serde_json::json!([[0, "2"], [1, "-3"], [3, "1"]]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn verdict_matches_root_membership(m in 1usize..6, p in -6i64..7, q in 1i64..4) {
        let x = ExactRational::new(p.into(), q.into());
        let v = semisimple_at(m, &x).unwrap();
        let mut vanishing = Vec::new();
        for t in 0..=m / 2 {
            let roots = cell_gram(m, t).unwrap().rational_roots().unwrap();
            if roots.contains(&x) {
                vanishing.push(t);
            }
        }
        prop_assert_eq!(v.vanishing, vanishing);
    }

    #[test]
    fn cell_determinants_factor_over_isotypic_blocks(m in 1usize..6, t in 0usize..3) {
        prop_assume!(2 * t <= m);
        let c = cell_gram(m, t).unwrap();
        let mut prod = LaurentPoly::one();
        for f in &c.factors {
            prod = &prod * &f.numerator.pow(f.multiplicity as u32);
        }
        prop_assert_eq!(prod.is_zero(), c.det.is_zero());
        prop_assert_eq!(c.size(), c.scalar_gram().len());
    }
}
