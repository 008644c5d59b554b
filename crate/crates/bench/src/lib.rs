//! Inputs shared by the criterion benchmarks.

use devmatch_core::{zero_profile, DisabilityProfile, Scales, Slot};

/// Deterministic spread of complete profiles covering every slot and degree.
pub fn profile_sweep(count: usize) -> Vec<DisabilityProfile> {
    let scales = Scales::standard();
    let slots: Vec<Slot> = Slot::all().collect();
    (0..count)
        .map(|i| {
            slots
                .iter()
                .enumerate()
                .fold(zero_profile(), |p, (k, &slot)| {
                    let max = scales.for_slot(slot).max() as usize;
                    let degree = (i * 7 + k * 3) % (max + 1);
                    p.with(slot, degree as u8)
                })
        })
        .collect()
}
