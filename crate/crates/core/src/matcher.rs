//! Classification of devices against a disability profile.
//!
//! For every limb that can operate a device, the amounts by which the
//! person's degrees exceed the device's cells are summed (perception degrees
//! count toward every limb). The sum is mapped to a color: 0 green, 1 yellow,
//! 2 or more red. A device's overall color is the best color over its
//! operating limbs.
//!
//! Yellow therefore means exactly one category one step over its limit; two
//! categories each one step over sum to 2 and are red.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::catalog::{Catalog, DeviceSpec, RequirementCell};
use crate::profile::{
    join_violations, serialize_profile, validate_profile, Degree, DisabilityCategory,
    DisabilityProfile, LimbCategory, LimbId, Sense, Slot, Violation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Green,
    Yellow,
    Red,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Green, Color::Yellow, Color::Red];

    pub fn as_str(self) -> &'static str {
        match self {
            Color::Green => "green",
            Color::Yellow => "yellow",
            Color::Red => "red",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

/// Who operates a device: one limb, or the whole person for devices that
/// are not bound to a limb (mouth mouse, outputs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Operator {
    LeftArm,
    RightArm,
    LeftLeg,
    RightLeg,
    Body,
}

impl Operator {
    pub fn as_str(self) -> &'static str {
        match self {
            Operator::LeftArm => "left_arm",
            Operator::RightArm => "right_arm",
            Operator::LeftLeg => "left_leg",
            Operator::RightLeg => "right_leg",
            Operator::Body => "body",
        }
    }
}

impl From<LimbId> for Operator {
    fn from(l: LimbId) -> Self {
        match l {
            LimbId::LeftArm => Operator::LeftArm,
            LimbId::RightArm => Operator::RightArm,
            LimbId::LeftLeg => Operator::LeftLeg,
            LimbId::RightLeg => Operator::RightLeg,
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

/// Positive excesses by category; zero entries are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcessBreakdown {
    pub per_category: BTreeMap<DisabilityCategory, u32>,
    pub total: u32,
}

impl ExcessBreakdown {
    fn add(&mut self, category: DisabilityCategory, excess: u32) {
        if excess > 0 {
            *self.per_category.entry(category).or_insert(0) += excess;
            self.total += excess;
        }
    }

    fn merge(&mut self, other: &ExcessBreakdown) {
        for (&c, &e) in &other.per_category {
            self.add(c, e);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimbVerdict {
    pub color: Color,
    pub excess: ExcessBreakdown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeviceVerdict {
    pub device_id: String,
    pub color: Color,
    /// Operator with the lowest total excess (first in limb order on ties).
    pub best: Operator,
    pub per_limb: BTreeMap<Operator, LimbVerdict>,
    pub perception_excess: ExcessBreakdown,
    pub rationale: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub green: usize,
    pub yellow: usize,
    pub red: usize,
}

impl Summary {
    pub fn count(&self, color: Color) -> usize {
        match color {
            Color::Green => self.green,
            Color::Yellow => self.yellow,
            Color::Red => self.red,
        }
    }

    fn bump(&mut self, color: Color) {
        match color {
            Color::Green => self.green += 1,
            Color::Yellow => self.yellow += 1,
            Color::Red => self.red += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub profile_digest: String,
    pub catalog_version: String,
    pub summary: Summary,
    pub verdicts: Vec<DeviceVerdict>,
}

impl MatchReport {
    pub fn verdict(&self, device_id: &str) -> Option<&DeviceVerdict> {
        self.verdicts.iter().find(|v| v.device_id == device_id)
    }
}

#[derive(Debug, Error)]
pub enum MatchError {
    #[error("device `{device}` cannot be operated by {limb}")]
    IneligibleLimb { device: String, limb: LimbId },
    #[error("profile has no degree for {0}")]
    MissingSlot(Slot),
    #[error("profile does not fit the catalog scales: {}", join_violations(.0))]
    ScaleMismatch(Vec<Violation>),
}

pub fn category_excess(degree: Degree, cell: RequirementCell) -> u32 {
    match cell {
        RequirementCell::Unconstrained => 0,
        RequirementCell::MaxDegree(max) => u32::from(degree.saturating_sub(max)),
    }
}

pub fn classify(excess_total: u32) -> Color {
    match excess_total {
        0 => Color::Green,
        1 => Color::Yellow,
        _ => Color::Red,
    }
}

fn degree(p: &DisabilityProfile, slot: Slot) -> Result<Degree, MatchError> {
    p.get(slot).ok_or(MatchError::MissingSlot(slot))
}

/// Excess from the device's vision/hearing cells alone.
pub fn perception_excess(
    p: &DisabilityProfile,
    d: &DeviceSpec,
) -> Result<ExcessBreakdown, MatchError> {
    let mut out = ExcessBreakdown::default();
    for sense in Sense::ALL {
        let deg = degree(p, Slot::Perception(sense))?;
        out.add(sense.into(), category_excess(deg, d.perception_cell(sense)));
    }
    Ok(out)
}

/// Excess for one operating limb: that limb's five categories against the
/// device's cells for its limb kind, plus perception.
pub fn limb_excess(
    p: &DisabilityProfile,
    d: &DeviceSpec,
    limb: LimbId,
) -> Result<ExcessBreakdown, MatchError> {
    if !d.operating_limbs().contains(&limb) {
        return Err(MatchError::IneligibleLimb {
            device: d.id.clone(),
            limb,
        });
    }
    let mut out = ExcessBreakdown::default();
    for category in LimbCategory::ALL {
        let deg = degree(p, Slot::Limb(limb, category))?;
        out.add(
            category.into(),
            category_excess(deg, d.limb_cell(limb.kind(), category)),
        );
    }
    out.merge(&perception_excess(p, d)?);
    Ok(out)
}

fn rationale(
    p: &DisabilityProfile,
    d: &DeviceSpec,
    op: Operator,
    excess: &ExcessBreakdown,
) -> Vec<String> {
    let limb = match op {
        Operator::LeftArm => Some(LimbId::LeftArm),
        Operator::RightArm => Some(LimbId::RightArm),
        Operator::LeftLeg => Some(LimbId::LeftLeg),
        Operator::RightLeg => Some(LimbId::RightLeg),
        Operator::Body => None,
    };
    let mut lines = Vec::new();
    for (&category, &amount) in &excess.per_category {
        let (slot, cell, place) = match (category_as_limb(category), category_as_sense(category)) {
            (Some(lc), _) => {
                let limb = limb.expect("limb categories only appear on limb entries");
                (
                    Slot::Limb(limb, lc),
                    d.limb_cell(limb.kind(), lc),
                    op.as_str(),
                )
            }
            (None, Some(s)) => (Slot::Perception(s), d.perception_cell(s), "perception"),
            (None, None) => unreachable!("every category is a limb category or a sense"),
        };
        let RequirementCell::MaxDegree(max) = cell else {
            continue;
        };
        let deg = p.get(slot).unwrap_or_default();
        lines.push(format!(
            "{category} ({place}): degree {deg} exceeds max {max} by {amount}"
        ));
    }
    lines
}

fn category_as_limb(c: DisabilityCategory) -> Option<LimbCategory> {
    LimbCategory::ALL
        .into_iter()
        .find(|&lc| DisabilityCategory::from(lc) == c)
}

fn category_as_sense(c: DisabilityCategory) -> Option<Sense> {
    Sense::ALL
        .into_iter()
        .find(|&s| DisabilityCategory::from(s) == c)
}

/// Evaluates one device. The profile must be complete; a missing slot is
/// reported as [`MatchError::MissingSlot`].
pub fn classify_device(p: &DisabilityProfile, d: &DeviceSpec) -> Result<DeviceVerdict, MatchError> {
    let perception = perception_excess(p, d)?;
    let mut per_limb = BTreeMap::new();
    let limbs = d.operating_limbs();
    if limbs.is_empty() {
        per_limb.insert(
            Operator::Body,
            LimbVerdict {
                color: classify(perception.total),
                excess: perception.clone(),
            },
        );
    } else {
        for limb in limbs {
            let excess = limb_excess(p, d, limb)?;
            per_limb.insert(
                limb.into(),
                LimbVerdict {
                    color: classify(excess.total),
                    excess,
                },
            );
        }
    }

    let (&best, best_verdict) = per_limb
        .iter()
        .min_by_key(|(_, v)| v.excess.total)
        .expect("every device has at least one operator");
    let color = best_verdict.color;
    let rationale = rationale(p, d, best, &best_verdict.excess);

    Ok(DeviceVerdict {
        device_id: d.id.clone(),
        color,
        best,
        per_limb,
        perception_excess: perception,
        rationale,
    })
}

/// SHA-256 over the canonical profile serialization, hex encoded.
pub fn profile_digest(p: &DisabilityProfile) -> String {
    hex::encode(Sha256::digest(serialize_profile(p).as_bytes()))
}

pub fn match_profile(p: &DisabilityProfile, c: &Catalog) -> Result<MatchReport, MatchError> {
    validate_profile(p, c.scales()).map_err(MatchError::ScaleMismatch)?;
    let mut summary = Summary::default();
    let verdicts = c
        .devices()
        .iter()
        .map(|d| {
            let v = classify_device(p, d)?;
            summary.bump(v.color);
            Ok(v)
        })
        .collect::<Result<Vec<_>, MatchError>>()?;
    Ok(MatchReport {
        profile_digest: profile_digest(p),
        catalog_version: c.version().to_owned(),
        summary,
        verdicts,
    })
}
