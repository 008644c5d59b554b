//! Disability taxonomy, ordinal degree scales and person profiles.
//!
//! A profile assigns a degree to each of 22 slots: five limb categories for
//! each of the four limbs, plus vision and hearing. Degrees are plain
//! ordinals; the labels attached to them live in [`DegreeScale`] and are only
//! used for presentation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Ordinal severity of a disability. Higher means greater impact on device
/// operation; 0 is always "no limitation".
pub type Degree = u8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DisabilityCategory {
    #[serde(rename = "amputation_dysmelia")]
    AmputationDysmelia,
    #[serde(rename = "mobility")]
    MobilityOfLimbs,
    #[serde(rename = "paralysis")]
    Paralysis,
    #[serde(rename = "movement_disturbance")]
    DisturbanceOfMovementPatterns,
    #[serde(rename = "pressure_sensitivity")]
    SensitivityToPressure,
    #[serde(rename = "vision")]
    Vision,
    #[serde(rename = "hearing")]
    Hearing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Applicability {
    Limb,
    Perception,
}

impl DisabilityCategory {
    pub const ALL: [DisabilityCategory; 7] = [
        DisabilityCategory::AmputationDysmelia,
        DisabilityCategory::MobilityOfLimbs,
        DisabilityCategory::Paralysis,
        DisabilityCategory::DisturbanceOfMovementPatterns,
        DisabilityCategory::SensitivityToPressure,
        DisabilityCategory::Vision,
        DisabilityCategory::Hearing,
    ];

    pub fn applicability(self) -> Applicability {
        match self {
            DisabilityCategory::Vision | DisabilityCategory::Hearing => Applicability::Perception,
            _ => Applicability::Limb,
        }
    }

    /// Key used in profile and catalog documents.
    pub fn key(self) -> &'static str {
        match self {
            DisabilityCategory::AmputationDysmelia => "amputation_dysmelia",
            DisabilityCategory::MobilityOfLimbs => "mobility",
            DisabilityCategory::Paralysis => "paralysis",
            DisabilityCategory::DisturbanceOfMovementPatterns => "movement_disturbance",
            DisabilityCategory::SensitivityToPressure => "pressure_sensitivity",
            DisabilityCategory::Vision => "vision",
            DisabilityCategory::Hearing => "hearing",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            DisabilityCategory::AmputationDysmelia => "Amputation & Dysmelia",
            DisabilityCategory::MobilityOfLimbs => "Mobility of Limbs",
            DisabilityCategory::Paralysis => "Paralysis",
            DisabilityCategory::DisturbanceOfMovementPatterns => "Disturbance of Movement Patterns",
            DisabilityCategory::SensitivityToPressure => "Sensitivity to Pressure",
            DisabilityCategory::Vision => "Vision",
            DisabilityCategory::Hearing => "Hearing",
        }
    }
}

impl fmt::Display for DisabilityCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// The five categories that are assessed per limb.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LimbCategory {
    #[serde(rename = "amputation_dysmelia")]
    AmputationDysmelia,
    #[serde(rename = "mobility")]
    MobilityOfLimbs,
    #[serde(rename = "paralysis")]
    Paralysis,
    #[serde(rename = "movement_disturbance")]
    DisturbanceOfMovementPatterns,
    #[serde(rename = "pressure_sensitivity")]
    SensitivityToPressure,
}

impl LimbCategory {
    pub const ALL: [LimbCategory; 5] = [
        LimbCategory::AmputationDysmelia,
        LimbCategory::MobilityOfLimbs,
        LimbCategory::Paralysis,
        LimbCategory::DisturbanceOfMovementPatterns,
        LimbCategory::SensitivityToPressure,
    ];

    pub fn key(self) -> &'static str {
        DisabilityCategory::from(self).key()
    }
}

impl From<LimbCategory> for DisabilityCategory {
    fn from(c: LimbCategory) -> Self {
        match c {
            LimbCategory::AmputationDysmelia => DisabilityCategory::AmputationDysmelia,
            LimbCategory::MobilityOfLimbs => DisabilityCategory::MobilityOfLimbs,
            LimbCategory::Paralysis => DisabilityCategory::Paralysis,
            LimbCategory::DisturbanceOfMovementPatterns => {
                DisabilityCategory::DisturbanceOfMovementPatterns
            }
            LimbCategory::SensitivityToPressure => DisabilityCategory::SensitivityToPressure,
        }
    }
}

/// Perception categories; global to the person rather than per limb.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sense {
    Vision,
    Hearing,
}

impl Sense {
    pub const ALL: [Sense; 2] = [Sense::Vision, Sense::Hearing];

    pub fn key(self) -> &'static str {
        DisabilityCategory::from(self).key()
    }
}

impl From<Sense> for DisabilityCategory {
    fn from(s: Sense) -> Self {
        match s {
            Sense::Vision => DisabilityCategory::Vision,
            Sense::Hearing => DisabilityCategory::Hearing,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimbKind {
    Arm,
    Leg,
}

impl LimbKind {
    pub fn key(self) -> &'static str {
        match self {
            LimbKind::Arm => "arm",
            LimbKind::Leg => "leg",
        }
    }

    pub fn limbs(self) -> [LimbId; 2] {
        match self {
            LimbKind::Arm => [LimbId::LeftArm, LimbId::RightArm],
            LimbKind::Leg => [LimbId::LeftLeg, LimbId::RightLeg],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimbId {
    LeftArm,
    RightArm,
    LeftLeg,
    RightLeg,
}

impl LimbId {
    pub const ALL: [LimbId; 4] = [
        LimbId::LeftArm,
        LimbId::RightArm,
        LimbId::LeftLeg,
        LimbId::RightLeg,
    ];

    pub fn side(self) -> Side {
        match self {
            LimbId::LeftArm | LimbId::LeftLeg => Side::Left,
            LimbId::RightArm | LimbId::RightLeg => Side::Right,
        }
    }

    pub fn kind(self) -> LimbKind {
        match self {
            LimbId::LeftArm | LimbId::RightArm => LimbKind::Arm,
            LimbId::LeftLeg | LimbId::RightLeg => LimbKind::Leg,
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            LimbId::LeftArm => "left_arm",
            LimbId::RightArm => "right_arm",
            LimbId::LeftLeg => "left_leg",
            LimbId::RightLeg => "right_leg",
        }
    }
}

impl fmt::Display for LimbId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// One degree slot of a profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Limb(LimbId, LimbCategory),
    Perception(Sense),
}

impl Slot {
    /// All 22 slots in canonical order.
    pub fn all() -> impl Iterator<Item = Slot> {
        LimbId::ALL
            .into_iter()
            .flat_map(|l| LimbCategory::ALL.into_iter().map(move |c| Slot::Limb(l, c)))
            .chain(Sense::ALL.into_iter().map(Slot::Perception))
    }

    pub fn category(self) -> DisabilityCategory {
        match self {
            Slot::Limb(_, c) => c.into(),
            Slot::Perception(s) => s.into(),
        }
    }

    pub fn limb_kind(self) -> Option<LimbKind> {
        match self {
            Slot::Limb(l, _) => Some(l.kind()),
            Slot::Perception(_) => None,
        }
    }

    /// Document path of this slot, e.g. `limbs.left_arm.mobility`.
    pub fn path(self) -> String {
        match self {
            Slot::Limb(l, c) => format!("limbs.{}.{}", l.key(), c.key()),
            Slot::Perception(s) => format!("perception.{}", s.key()),
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.path())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaleLevel {
    pub value: Degree,
    pub label: String,
}

/// Labeled ordinal scale for one category (and, for limb categories, one limb
/// kind).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeScale {
    pub category: DisabilityCategory,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limb_kind: Option<LimbKind>,
    pub levels: Vec<ScaleLevel>,
}

impl DegreeScale {
    fn from_labels(
        category: DisabilityCategory,
        limb_kind: Option<LimbKind>,
        labels: &[&str],
    ) -> Self {
        DegreeScale {
            category,
            limb_kind,
            levels: labels
                .iter()
                .enumerate()
                .map(|(i, l)| ScaleLevel {
                    value: i as Degree,
                    label: (*l).to_owned(),
                })
                .collect(),
        }
    }

    pub fn max(&self) -> Degree {
        self.levels.len().saturating_sub(1) as Degree
    }

    pub fn label(&self, degree: Degree) -> Option<&str> {
        self.levels.get(degree as usize).map(|l| l.label.as_str())
    }

    /// Human-readable name such as `arm amputation_dysmelia` or `vision`.
    pub fn name(&self) -> String {
        match self.limb_kind {
            Some(k) => format!("{} {}", k.key(), self.category.key()),
            None => self.category.key().to_owned(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScaleError {
    #[error("scale {0} has no levels")]
    Empty(String),
    #[error("scale {scale}: level {index} has value {value}, expected {index}")]
    NonConsecutive {
        scale: String,
        index: usize,
        value: Degree,
    },
    #[error("scale {0} is defined more than once")]
    Duplicate(String),
    #[error("no scale defined for {0}")]
    Missing(String),
    #[error(
        "scale {0}: limb categories need a limb kind, perception categories must not have one"
    )]
    BadLimbKind(String),
}

/// The complete, validated set of degree scales: one per limb category and
/// limb kind, one per sense.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Scales(Vec<DegreeScale>);

impl Scales {
    pub fn new(scales: Vec<DegreeScale>) -> Result<Self, ScaleError> {
        let mut seen = BTreeMap::new();
        for s in &scales {
            let name = s.name();
            let kind_ok = match s.category.applicability() {
                Applicability::Limb => s.limb_kind.is_some(),
                Applicability::Perception => s.limb_kind.is_none(),
            };
            if !kind_ok {
                return Err(ScaleError::BadLimbKind(name));
            }
            if s.levels.is_empty() {
                return Err(ScaleError::Empty(name));
            }
            for (index, level) in s.levels.iter().enumerate() {
                if level.value as usize != index {
                    return Err(ScaleError::NonConsecutive {
                        scale: name,
                        index,
                        value: level.value,
                    });
                }
            }
            if seen.insert((s.category, s.limb_kind), ()).is_some() {
                return Err(ScaleError::Duplicate(name));
            }
        }
        for slot in Slot::all() {
            if !seen.contains_key(&(slot.category(), slot.limb_kind())) {
                let name = match slot.limb_kind() {
                    Some(k) => format!("{} {}", k.key(), slot.category().key()),
                    None => slot.category().key().to_owned(),
                };
                return Err(ScaleError::Missing(name));
            }
        }
        Ok(Scales(scales))
    }

    /// The standard arm/leg/perception scales with their labels.
    pub fn standard() -> Self {
        use DisabilityCategory::*;
        let arm = Some(LimbKind::Arm);
        let leg = Some(LimbKind::Leg);
        Scales(vec![
            DegreeScale::from_labels(
                AmputationDysmelia,
                arm,
                &[
                    "no limitation",
                    "from 4 fingers",
                    "all fingers",
                    "from the hand",
                    "from parts of the upper arm",
                ],
            ),
            DegreeScale::from_labels(
                MobilityOfLimbs,
                arm,
                &[
                    "no limitation",
                    "limited mobility of the hand",
                    "limited mobility of the arm",
                ],
            ),
            DegreeScale::from_labels(
                Paralysis,
                arm,
                &[
                    "no limitation",
                    "paralysis of the hand",
                    "paralysis of the arm",
                ],
            ),
            DegreeScale::from_labels(
                DisturbanceOfMovementPatterns,
                arm,
                &["no disturbance", "mild disturbance", "severe disturbance"],
            ),
            DegreeScale::from_labels(
                SensitivityToPressure,
                arm,
                &["no limitation", "moderate", "severe"],
            ),
            DegreeScale::from_labels(
                AmputationDysmelia,
                leg,
                &["no limitation", "foot", "from parts of the lower leg"],
            ),
            DegreeScale::from_labels(
                MobilityOfLimbs,
                leg,
                &[
                    "no limitation",
                    "slightly limited mobility",
                    "severely limited mobility",
                ],
            ),
            DegreeScale::from_labels(
                Paralysis,
                leg,
                &[
                    "no limitation",
                    "paralysis of the foot",
                    "paralysis of the leg",
                ],
            ),
            DegreeScale::from_labels(
                DisturbanceOfMovementPatterns,
                leg,
                &["no disturbance", "mild disturbance", "severe disturbance"],
            ),
            DegreeScale::from_labels(
                SensitivityToPressure,
                leg,
                &["no limitation", "moderate", "severe"],
            ),
            DegreeScale::from_labels(
                Vision,
                None,
                &["no limitation", "partial limitation", "total limitation"],
            ),
            DegreeScale::from_labels(
                Hearing,
                None,
                &["no limitation", "partial limitation", "total limitation"],
            ),
        ])
    }

    pub fn get(&self, category: DisabilityCategory, limb_kind: Option<LimbKind>) -> &DegreeScale {
        // Completeness is checked on construction.
        self.0
            .iter()
            .find(|s| s.category == category && s.limb_kind == limb_kind)
            .expect("validated scale set covers every category")
    }

    pub fn for_slot(&self, slot: Slot) -> &DegreeScale {
        self.get(slot.category(), slot.limb_kind())
    }

    pub fn iter(&self) -> impl Iterator<Item = &DegreeScale> {
        self.0.iter()
    }
}

impl<'de> Deserialize<'de> for Scales {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<DegreeScale>::deserialize(d)?;
        Scales::new(raw).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationKind {
    Missing,
    OutOfRange {
        scale: String,
        value: Degree,
        max: Degree,
    },
}

/// A single problem found while validating a profile. `path` uses document
/// notation (`perception.vision`, `limbs.all_arms.paralysis`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub path: String,
    #[serde(flatten)]
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ViolationKind::Missing => write!(f, "{}: missing degree", self.path),
            ViolationKind::OutOfRange { scale, value, max } => write!(
                f,
                "{}: degree {} out of range for {} scale (max {})",
                self.path, value, scale, max
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum ProfileError {
    #[error("malformed profile document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("invalid profile: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
}

pub(crate) fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Degrees for every slot of one person.
///
/// Profiles built through [`parse_profile`] or [`DisabilityProfile::zero`]
/// are complete. Profiles assembled slot by slot may be partial until checked
/// with [`validate_profile`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DisabilityProfile {
    degrees: BTreeMap<Slot, Degree>,
}

impl DisabilityProfile {
    pub fn zero() -> Self {
        DisabilityProfile {
            degrees: Slot::all().map(|s| (s, 0)).collect(),
        }
    }

    /// Builds a profile from raw slot degrees without any checks.
    pub fn from_slots(slots: impl IntoIterator<Item = (Slot, Degree)>) -> Self {
        DisabilityProfile {
            degrees: slots.into_iter().collect(),
        }
    }

    pub fn with(mut self, slot: Slot, degree: Degree) -> Self {
        self.degrees.insert(slot, degree);
        self
    }

    pub fn without(mut self, slot: Slot) -> Self {
        self.degrees.remove(&slot);
        self
    }

    pub fn get(&self, slot: Slot) -> Option<Degree> {
        self.degrees.get(&slot).copied()
    }

    pub fn limb(&self, limb: LimbId, category: LimbCategory) -> Option<Degree> {
        self.get(Slot::Limb(limb, category))
    }

    pub fn perception(&self, sense: Sense) -> Option<Degree> {
        self.get(Slot::Perception(sense))
    }

    pub fn slots(&self) -> impl Iterator<Item = (Slot, Degree)> + '_ {
        self.degrees.iter().map(|(s, d)| (*s, *d))
    }

    /// True when every degree of `self` is at least the one in `other`.
    pub fn dominates(&self, other: &DisabilityProfile) -> bool {
        Slot::all().all(|s| self.get(s).unwrap_or(0) >= other.get(s).unwrap_or(0))
    }
}

pub fn zero_profile() -> DisabilityProfile {
    DisabilityProfile::zero()
}

/// Checks completeness and ranges. Violations are reported in slot order.
pub fn validate_profile(p: &DisabilityProfile, scales: &Scales) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    for slot in Slot::all() {
        match p.get(slot) {
            None => violations.push(Violation {
                path: slot.path(),
                kind: ViolationKind::Missing,
            }),
            Some(value) => {
                let scale = scales.for_slot(slot);
                if value > scale.max() {
                    violations.push(Violation {
                        path: slot.path(),
                        kind: ViolationKind::OutOfRange {
                            scale: scale.name(),
                            value,
                            max: scale.max(),
                        },
                    });
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Keys accepted under `limbs`. Variant order is application order: broader
/// shorthands first, so a named limb always overrides a shorthand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimbSelector {
    AllLimbs,
    AllArms,
    AllLegs,
    LeftArm,
    RightArm,
    LeftLeg,
    RightLeg,
}

impl LimbSelector {
    pub fn key(self) -> &'static str {
        match self {
            LimbSelector::AllLimbs => "all_limbs",
            LimbSelector::AllArms => "all_arms",
            LimbSelector::AllLegs => "all_legs",
            LimbSelector::LeftArm => "left_arm",
            LimbSelector::RightArm => "right_arm",
            LimbSelector::LeftLeg => "left_leg",
            LimbSelector::RightLeg => "right_leg",
        }
    }

    pub fn limbs(self) -> &'static [LimbId] {
        match self {
            LimbSelector::AllLimbs => &LimbId::ALL,
            LimbSelector::AllArms => &[LimbId::LeftArm, LimbId::RightArm],
            LimbSelector::AllLegs => &[LimbId::LeftLeg, LimbId::RightLeg],
            LimbSelector::LeftArm => &[LimbId::LeftArm],
            LimbSelector::RightArm => &[LimbId::RightArm],
            LimbSelector::LeftLeg => &[LimbId::LeftLeg],
            LimbSelector::RightLeg => &[LimbId::RightLeg],
        }
    }
}

impl From<LimbId> for LimbSelector {
    fn from(l: LimbId) -> Self {
        match l {
            LimbId::LeftArm => LimbSelector::LeftArm,
            LimbId::RightArm => LimbSelector::RightArm,
            LimbId::LeftLeg => LimbSelector::LeftLeg,
            LimbId::RightLeg => LimbSelector::RightLeg,
        }
    }
}

/// On-disk / on-wire shape of a profile. Omitted entries mean degree 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDocument {
    #[serde(default)]
    pub limbs: BTreeMap<LimbSelector, BTreeMap<LimbCategory, Degree>>,
    #[serde(default)]
    pub perception: BTreeMap<Sense, Degree>,
}

impl ProfileDocument {
    /// Range-checks every entry as written, then expands shorthands and fills
    /// omitted slots with 0.
    pub fn into_profile(self, scales: &Scales) -> Result<DisabilityProfile, Vec<Violation>> {
        let mut violations = Vec::new();
        for (selector, entries) in &self.limbs {
            for (category, &value) in entries {
                // A shorthand covering both kinds is checked against each kind's scale.
                let mut kinds: Vec<LimbKind> = selector.limbs().iter().map(|l| l.kind()).collect();
                kinds.dedup();
                for kind in kinds {
                    let scale = scales.get((*category).into(), Some(kind));
                    if value > scale.max() {
                        violations.push(Violation {
                            path: format!("limbs.{}.{}", selector.key(), category.key()),
                            kind: ViolationKind::OutOfRange {
                                scale: scale.name(),
                                value,
                                max: scale.max(),
                            },
                        });
                    }
                }
            }
        }
        for (&sense, &value) in &self.perception {
            let scale = scales.get(sense.into(), None);
            if value > scale.max() {
                violations.push(Violation {
                    path: format!("perception.{}", sense.key()),
                    kind: ViolationKind::OutOfRange {
                        scale: scale.name(),
                        value,
                        max: scale.max(),
                    },
                });
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }

        let mut profile = DisabilityProfile::zero();
        for (selector, entries) in &self.limbs {
            for &limb in selector.limbs() {
                for (&category, &value) in entries {
                    profile.degrees.insert(Slot::Limb(limb, category), value);
                }
            }
        }
        for (&sense, &value) in &self.perception {
            profile.degrees.insert(Slot::Perception(sense), value);
        }
        Ok(profile)
    }

    /// Explicit document listing every slot present in `p` under its own limb.
    pub fn from_profile(p: &DisabilityProfile) -> Self {
        let mut doc = ProfileDocument::default();
        for (slot, degree) in p.slots() {
            match slot {
                Slot::Limb(l, c) => {
                    doc.limbs.entry(l.into()).or_default().insert(c, degree);
                }
                Slot::Perception(s) => {
                    doc.perception.insert(s, degree);
                }
            }
        }
        doc
    }
}

/// Parses a profile document against the standard scales.
pub fn parse_profile(text: &str) -> Result<DisabilityProfile, ProfileError> {
    parse_profile_with(text, &Scales::standard())
}

pub fn parse_profile_with(text: &str, scales: &Scales) -> Result<DisabilityProfile, ProfileError> {
    if text.trim().is_empty() {
        return Ok(DisabilityProfile::zero());
    }
    let doc: ProfileDocument = serde_json::from_str(text)?;
    doc.into_profile(scales).map_err(ProfileError::Invalid)
}

/// Serializes with every slot spelled out, so the output never depends on
/// the omitted-means-zero rule.
pub fn serialize_profile(p: &DisabilityProfile) -> String {
    serde_json::to_string_pretty(&ProfileDocument::from_profile(p))
        .expect("profile document serializes")
}
