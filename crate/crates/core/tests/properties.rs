use proptest::prelude::*;

use liebound::catalogue::{parse_group_spec, Catalogue, Family, GroupSpec};
use liebound::flagcalc::{self, ClassProfile};
use liebound::repdim::weyl_dim;
use liebound::rootkit::{build_root_system, RootType, SimpleSet};
use liebound::zimmerbounds;

fn root_system_strategy() -> impl Strategy<Value = (RootType, usize)> {
    prop_oneof![
        (1usize..=8).prop_map(|r| (RootType::A, r)),
        (2usize..=8).prop_map(|r| (RootType::B, r)),
        (2usize..=8).prop_map(|r| (RootType::C, r)),
        (3usize..=8).prop_map(|r| (RootType::D, r)),
        (1usize..=8).prop_map(|r| (RootType::BC, r)),
        Just((RootType::E6, 6)),
        Just((RootType::E7, 7)),
        Just((RootType::F4, 4)),
        Just((RootType::G2, 2)),
    ]
}

fn expected_root_count(t: RootType, l: usize) -> usize {
    match t {
        RootType::A => l * (l + 1),
        RootType::B | RootType::C => 2 * l * l,
        RootType::D => 2 * l * (l - 1),
        RootType::BC => 2 * l * (l + 1),
        RootType::E6 => 72,
        RootType::E7 => 126,
        RootType::E8 => 240,
        RootType::F4 => 48,
        RootType::G2 => 12,
    }
}

/// Random catalogued group of rank at most 10.
fn group_strategy() -> impl Strategy<Value = GroupSpec> {
    let fam = prop::sample::select(Family::ALL.to_vec());
    (fam, 1i64..=22, 1i64..=22).prop_filter_map("outside validity or rank > 10", |(f, a, b)| {
        let params = match f.arity() {
            0 => vec![],
            1 => vec![a],
            _ => vec![a.max(b), a.min(b)],
        };
        let spec = GroupSpec::new(f, params).ok()?;
        let d = Catalogue::bundled().describe(&spec).ok()?;
        (d.rank <= 10).then_some(spec)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_preserve_the_root_set((t, r) in root_system_strategy()) {
        let rs = build_root_system(t, r).unwrap();
        prop_assert_eq!(rs.roots().len(), expected_root_count(t, r));
        for a in rs.roots() {
            for b in rs.roots() {
                let image = rs.reflect(&a.coords, &b.coords).unwrap();
                prop_assert!(rs.contains(&image));
            }
        }
    }

    #[test]
    fn height_is_additive((t, r) in root_system_strategy()) {
        let rs = build_root_system(t, r).unwrap();
        for a in rs.roots() {
            prop_assert_eq!(rs.height(&a.coords).unwrap(), a.coeffs.iter().sum::<i64>());
            for b in rs.roots() {
                let sum: Vec<i64> = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
                if let Ok(h) = rs.height(&sum) {
                    prop_assert_eq!(h, a.height() + b.height());
                }
            }
        }
    }

    #[test]
    fn diagram_symmetry_preserves_dimension(l in 2usize..=7, k in prop::collection::vec(0i64..=2, 7)) {
        let lambda = &k[..l];
        let reversed: Vec<i64> = lambda.iter().rev().copied().collect();
        prop_assert_eq!(weyl_dim(RootType::A, l, lambda).unwrap(), weyl_dim(RootType::A, l, &reversed).unwrap());
        if l >= 4 {
            let mut swapped = lambda.to_vec();
            swapped.swap(l - 2, l - 1);
            prop_assert_eq!(weyl_dim(RootType::D, l, lambda).unwrap(), weyl_dim(RootType::D, l, &swapped).unwrap());
        }
    }

    #[test]
    fn search_agrees_with_enumeration(spec in group_strategy()) {
        let cat = Catalogue::bundled();
        let d = cat.describe(&spec).unwrap();
        let report = zimmerbounds::s_lower(cat, &d).unwrap();
        prop_assert_eq!(zimmerbounds::s_lower_value(cat, &d).unwrap(), report.s_lower);
        for row in &report.rows {
            prop_assert!(row.effective >= row.r0_bound);
        }
        prop_assert!(report.r <= report.r0 && report.r0 <= report.s_lower && report.s_lower <= report.v);
    }

    #[test]
    fn canonical_names_round_trip(spec in group_strategy()) {
        let text = spec.to_string();
        prop_assert_eq!(parse_group_spec(&text).unwrap(), spec.clone());
        prop_assert_eq!(parse_group_spec(&text.to_lowercase()).unwrap(), spec);
    }
}

#[test]
fn small_multiplicity_groups_have_r0_equal_to_codimension() {
    let cat = Catalogue::bundled();
    let mut specs: Vec<String> = (3..=7).map(|n| format!("SL({n},C)")).collect();
    specs.extend((2..=6).map(|n| format!("Sp({},C)", 2 * n)));
    specs.extend((7..=13).map(|n| format!("SO({n},C)")));
    specs.extend(["E6", "F4", "G2", "EII"].map(String::from));
    specs.extend((2..=6).map(|n| format!("SU({n},{n})")));
    specs.extend((2..=6).map(|n| format!("SO+({},{n})", n + 2)));
    for s in specs {
        let d = cat.describe(&parse_group_spec(&s).unwrap()).unwrap();
        assert!(zimmerbounds::small_multiplicity_check(&d), "{s}");
        let p = ClassProfile::of(&d);
        for mask in 0..(1u64 << d.rank) {
            let set = SimpleSet(mask);
            assert_eq!(p.r0(set), p.codimension(set), "{s} {set}");
        }
        assert_eq!(flagcalc::r0_of_group(&d), flagcalc::v_of_group(&d), "{s}");
    }
}
