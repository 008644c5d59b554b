use std::collections::BTreeMap;

use devmatch_core::*;
use proptest::prelude::*;

fn arb_profile() -> impl Strategy<Value = DisabilityProfile> {
    let scales = Scales::standard();
    let slots: Vec<(Slot, Degree)> = Slot::all().map(|s| (s, scales.for_slot(s).max())).collect();
    let strategies: Vec<_> = slots.iter().map(|&(_, max)| 0..=max).collect();
    strategies.prop_map(move |degrees| {
        DisabilityProfile::from_slots(slots.iter().map(|(s, _)| *s).zip(degrees))
    })
}

/// Mostly-zero profiles, so plans built on them are often feasible.
fn arb_mild_profile() -> impl Strategy<Value = DisabilityProfile> {
    let scales = Scales::standard();
    let slots: Vec<(Slot, Degree)> = Slot::all().map(|s| (s, scales.for_slot(s).max())).collect();
    let strategies: Vec<_> = slots
        .iter()
        .map(|&(_, max)| prop_oneof![12 => Just(0), 1 => 0..=max])
        .collect();
    strategies.prop_map(move |degrees| {
        DisabilityProfile::from_slots(slots.iter().map(|(s, _)| *s).zip(degrees))
    })
}

/// A profile and another one that dominates it slot by slot.
fn arb_dominated_pair() -> impl Strategy<Value = (DisabilityProfile, DisabilityProfile)> {
    (arb_profile(), arb_profile()).prop_map(|(a, b)| {
        let lo = DisabilityProfile::from_slots(
            Slot::all().map(|s| (s, a.get(s).unwrap().min(b.get(s).unwrap()))),
        );
        let hi = DisabilityProfile::from_slots(
            Slot::all().map(|s| (s, a.get(s).unwrap().max(b.get(s).unwrap()))),
        );
        (lo, hi)
    })
}

fn arb_cells<K: Ord + Copy + std::fmt::Debug + 'static>(
    keys: Vec<(K, Degree)>,
) -> impl Strategy<Value = BTreeMap<K, Degree>> {
    let strategies: Vec<_> = keys
        .iter()
        .map(|&(_, max)| proptest::option::of(0..=max))
        .collect();
    strategies.prop_map(move |cells| {
        keys.iter()
            .zip(cells)
            .filter_map(|((k, _), v)| v.map(|v| (*k, v)))
            .collect()
    })
}

fn arb_device(index: usize) -> impl Strategy<Value = DeviceSpec> {
    let scales = Scales::standard();
    let limb_keys = |kind| {
        LimbCategory::ALL
            .iter()
            .map(|&c| (c, scales.get(c.into(), Some(kind)).max()))
            .collect::<Vec<_>>()
    };
    let sense_keys: Vec<_> = Sense::ALL
        .iter()
        .map(|&s| (s, scales.get(s.into(), None).max()))
        .collect();
    (
        0..3u8,
        arb_cells(limb_keys(LimbKind::Arm)),
        arb_cells(limb_keys(LimbKind::Leg)),
        arb_cells(sense_keys),
        any::<bool>(),
        "[a-zA-Zäöü✓ ]{0,12}",
    )
        .prop_map(move |(class, arm, leg, perception, visual, name)| {
            let class = [
                DeviceClass::OneDimensionalInput,
                DeviceClass::MultiDimensionalInput,
                DeviceClass::Output,
            ][class as usize];
            let output = class == DeviceClass::Output;
            DeviceSpec {
                id: format!("dev_{index}"),
                name,
                class,
                modality: output.then_some(if visual {
                    OutputModality::Visual
                } else {
                    OutputModality::Auditory
                }),
                arm: if output { BTreeMap::new() } else { arm },
                leg: if output { BTreeMap::new() } else { leg },
                perception,
            }
        })
}

fn arb_catalog() -> impl Strategy<Value = Catalog> {
    (0usize..8)
        .prop_flat_map(|n| (0..n).map(arb_device).collect::<Vec<_>>())
        .prop_map(|devices| Catalog::new("gen", Scales::standard(), devices).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn generated_profiles_validate_and_round_trip(p in arb_profile()) {
        prop_assert!(validate_profile(&p, &Scales::standard()).is_ok());
        prop_assert_eq!(parse_profile(&serialize_profile(&p)).unwrap(), p);
    }

    #[test]
    fn catalog_round_trip(c in arb_catalog()) {
        prop_assert_eq!(load_catalog(&serialize_catalog(&c)).unwrap(), c);
    }

    #[test]
    fn domination_never_improves_color((lo, hi) in arb_dominated_pair()) {
        let c = default_catalog();
        let a = match_profile(&lo, &c).unwrap();
        let b = match_profile(&hi, &c).unwrap();
        for (va, vb) in a.verdicts.iter().zip(&b.verdicts) {
            prop_assert!(vb.color >= va.color, "{} got better", va.device_id);
        }
    }

    #[test]
    fn unconstrained_slots_do_not_matter(p in arb_profile(), slot_index in 0usize..22, delta in 0u8..5) {
        let c = default_catalog();
        let slot = Slot::all().nth(slot_index).unwrap();
        let max = Scales::standard().for_slot(slot).max();
        let changed = p.clone().with(slot, delta.min(max));
        for d in c.devices() {
            let cell = match slot {
                Slot::Limb(l, cat) => d.limb_cell(l.kind(), cat),
                Slot::Perception(s) => d.perception_cell(s),
            };
            if cell == RequirementCell::Unconstrained {
                prop_assert_eq!(
                    classify_device(&p, d).unwrap(),
                    classify_device(&changed, d).unwrap()
                );
            }
        }
    }

    #[test]
    fn aggregate_is_best_limb(p in arb_profile()) {
        let c = default_catalog();
        for d in c.devices() {
            let v = classify_device(&p, d).unwrap();
            let best = v.per_limb.values().map(|l| l.color).min().unwrap();
            prop_assert_eq!(v.color, best);
            prop_assert_eq!(v.per_limb[&v.best].color, v.color);
            // Dropping the best limb can only make the aggregate worse.
            let rest = v.per_limb.iter().filter(|(op, _)| **op != v.best).map(|(_, l)| l.color).min();
            if let Some(rest) = rest {
                prop_assert!(rest >= v.color);
            }
            for l in v.per_limb.values() {
                prop_assert_eq!(l.excess.total, l.excess.per_category.values().sum::<u32>());
                prop_assert!(l.excess.per_category.values().all(|&e| e > 0));
            }
            if v.color != Color::Green {
                prop_assert!(!v.rationale.is_empty());
            }
        }
    }

    #[test]
    fn report_is_deterministic_and_counts_add_up(p in arb_profile()) {
        let c = default_catalog();
        let a = match_profile(&p, &c).unwrap();
        let b = match_profile(&p, &c).unwrap();
        prop_assert_eq!(render_structured(&a, &[]), render_structured(&b, &[]));
        prop_assert_eq!(a.verdicts.len(), c.devices().len());
        prop_assert_eq!(a.summary.green + a.summary.yellow + a.summary.red, 14);
        prop_assert_eq!(parse_structured(&render_structured(&a, &[])).unwrap().report, a);
    }

    #[test]
    fn distinct_reports_render_distinctly(p in arb_profile(), q in arb_profile()) {
        let c = default_catalog();
        let a = match_profile(&p, &c).unwrap();
        let b = match_profile(&q, &c).unwrap();
        prop_assert_eq!(a == b, render_structured(&a, &[]) == render_structured(&b, &[]));
    }

    #[test]
    fn green_multi_dim_always_satisfies_inputs(p in arb_profile(), flexible in any::<bool>()) {
        let c = default_catalog();
        let green_multi: Vec<String> = c
            .devices()
            .iter()
            .filter(|d| d.class == DeviceClass::MultiDimensionalInput)
            .filter(|d| classify_device(&p, d).unwrap().color == Color::Green)
            .map(|d| d.id.clone())
            .collect();
        prop_assume!(!green_multi.is_empty());
        let plan = WorkstationPlan {
            process_type: if flexible { ProcessType::Flexible } else { ProcessType::Sequential },
            action_units: 1,
            safety_units: 1,
            devices: vec![green_multi[0].clone()],
            work_table: true,
            computer: true,
        };
        let f = validate_workstation(&plan, &c, &p).unwrap();
        prop_assert!(f.iter().all(|f| f.code != FindingCode::InputClassUnsatisfied));
    }

    #[test]
    fn adding_green_devices_keeps_clean_plans_clean(
        p in arb_mild_profile(),
        base in proptest::sample::subsequence((0..11usize).collect::<Vec<_>>(), 1..4),
        extra in 0usize..14,
        flexible in any::<bool>(),
    ) {
        let c = default_catalog();
        let mut ids: Vec<String> = base.iter().map(|&i| c.devices()[i].id.clone()).collect();
        ids.extend(["display".to_owned(), "speaker".to_owned()]);
        let mut plan = WorkstationPlan {
            process_type: if flexible { ProcessType::Flexible } else { ProcessType::Sequential },
            action_units: 1,
            safety_units: 1,
            devices: ids,
            work_table: true,
            computer: true,
        };
        prop_assume!(validate_workstation(&plan, &c, &p).unwrap().is_empty());
        let d = &c.devices()[extra];
        prop_assume!(classify_device(&p, d).unwrap().color == Color::Green);
        plan.devices.push(d.id.clone());
        prop_assert!(validate_workstation(&plan, &c, &p).unwrap().is_empty());
    }
}
