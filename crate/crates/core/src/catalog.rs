//! Device taxonomy and requirement matrix.
//!
//! Each device carries, per disability category, the highest degree at which
//! it can still be operated. Cells are stored sparsely: a category missing
//! from a device's map has no bearing on that device.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::profile::{Degree, LimbCategory, LimbId, LimbKind, Scales, Sense};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DeviceClass {
    #[serde(rename = "one_dim_input")]
    OneDimensionalInput,
    #[serde(rename = "multi_dim_input")]
    MultiDimensionalInput,
    #[serde(rename = "output")]
    Output,
}

impl DeviceClass {
    pub fn key(self) -> &'static str {
        match self {
            DeviceClass::OneDimensionalInput => "one_dim_input",
            DeviceClass::MultiDimensionalInput => "multi_dim_input",
            DeviceClass::Output => "output",
        }
    }

    pub fn is_input(self) -> bool {
        self != DeviceClass::Output
    }
}

impl fmt::Display for DeviceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputModality {
    Visual,
    Auditory,
}

impl OutputModality {
    /// The sense through which this modality is perceived.
    pub fn sense(self) -> Sense {
        match self {
            OutputModality::Visual => Sense::Vision,
            OutputModality::Auditory => Sense::Hearing,
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            OutputModality::Visual => "visual",
            OutputModality::Auditory => "auditory",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RequirementCell {
    Unconstrained,
    MaxDegree(Degree),
}

impl From<Option<Degree>> for RequirementCell {
    fn from(v: Option<Degree>) -> Self {
        v.map_or(RequirementCell::Unconstrained, RequirementCell::MaxDegree)
    }
}

impl fmt::Display for RequirementCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RequirementCell::Unconstrained => f.write_str("unconstrained"),
            RequirementCell::MaxDegree(d) => write!(f, "max {d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeviceSpec {
    pub id: String,
    pub name: String,
    pub class: DeviceClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modality: Option<OutputModality>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub arm: BTreeMap<LimbCategory, Degree>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub leg: BTreeMap<LimbCategory, Degree>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub perception: BTreeMap<Sense, Degree>,
}

impl DeviceSpec {
    pub fn limb_requirements(&self, kind: LimbKind) -> &BTreeMap<LimbCategory, Degree> {
        match kind {
            LimbKind::Arm => &self.arm,
            LimbKind::Leg => &self.leg,
        }
    }

    pub fn limb_cell(&self, kind: LimbKind, category: LimbCategory) -> RequirementCell {
        self.limb_requirements(kind).get(&category).copied().into()
    }

    pub fn perception_cell(&self, sense: Sense) -> RequirementCell {
        self.perception.get(&sense).copied().into()
    }

    /// No limb cell is constrained, so the device is not bound to any limb.
    pub fn is_limb_independent(&self) -> bool {
        self.arm.is_empty() && self.leg.is_empty()
    }

    /// Limbs that can operate the device: a limb kind qualifies only when at
    /// least one of its cells is constrained. Empty for limb-independent
    /// devices.
    pub fn operating_limbs(&self) -> Vec<LimbId> {
        [LimbKind::Arm, LimbKind::Leg]
            .into_iter()
            .filter(|&k| !self.limb_requirements(k).is_empty())
            .flat_map(|k| k.limbs())
            .collect()
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("malformed catalog document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("duplicate device id `{0}`")]
    DuplicateId(String),
    #[error(
        "device `{device}`: {path} max degree {value} out of range for {scale} scale (max {max})"
    )]
    OutOfRange {
        device: String,
        path: String,
        scale: String,
        value: Degree,
        max: Degree,
    },
    #[error("device `{0}`: output devices cannot have limb requirements")]
    OutputWithLimbConstraint(String),
    #[error("device `{0}`: output devices need a modality")]
    MissingModality(String),
    #[error("device `{0}`: only output devices have a modality")]
    UnexpectedModality(String),
    #[error("device with empty id")]
    EmptyId,
}

/// A validated, immutable set of devices plus the scales their cells refer
/// to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    version: String,
    scales: Scales,
    devices: Vec<DeviceSpec>,
}

impl Catalog {
    pub fn new(
        version: impl Into<String>,
        scales: Scales,
        devices: Vec<DeviceSpec>,
    ) -> Result<Self, CatalogError> {
        let mut ids = BTreeSet::new();
        for d in &devices {
            if d.id.is_empty() {
                return Err(CatalogError::EmptyId);
            }
            if !ids.insert(d.id.as_str()) {
                return Err(CatalogError::DuplicateId(d.id.clone()));
            }
            match (d.class, d.modality) {
                (DeviceClass::Output, None) => {
                    return Err(CatalogError::MissingModality(d.id.clone()))
                }
                (DeviceClass::Output, Some(_)) if !d.is_limb_independent() => {
                    return Err(CatalogError::OutputWithLimbConstraint(d.id.clone()))
                }
                (c, Some(_)) if c.is_input() => {
                    return Err(CatalogError::UnexpectedModality(d.id.clone()))
                }
                _ => {}
            }
            for kind in [LimbKind::Arm, LimbKind::Leg] {
                for (&category, &value) in d.limb_requirements(kind) {
                    let scale = scales.get(category.into(), Some(kind));
                    if value > scale.max() {
                        return Err(CatalogError::OutOfRange {
                            device: d.id.clone(),
                            path: format!("{}.{}", kind.key(), category.key()),
                            scale: scale.name(),
                            value,
                            max: scale.max(),
                        });
                    }
                }
            }
            for (&sense, &value) in &d.perception {
                let scale = scales.get(sense.into(), None);
                if value > scale.max() {
                    return Err(CatalogError::OutOfRange {
                        device: d.id.clone(),
                        path: format!("perception.{}", sense.key()),
                        scale: scale.name(),
                        value,
                        max: scale.max(),
                    });
                }
            }
        }
        Ok(Catalog {
            version: version.into(),
            scales,
            devices,
        })
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn scales(&self) -> &Scales {
        &self.scales
    }

    pub fn devices(&self) -> &[DeviceSpec] {
        &self.devices
    }

    pub fn device(&self, id: &str) -> Option<&DeviceSpec> {
        self.devices.iter().find(|d| d.id == id)
    }

    pub fn is_empty(&self) -> bool {
        self.devices.is_empty()
    }
}

/// Wire shape of a catalog. `scales` is only written when it differs from
/// the standard set.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogDocument {
    version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    scales: Option<Scales>,
    devices: Vec<DeviceSpec>,
}

pub fn load_catalog(text: &str) -> Result<Catalog, CatalogError> {
    let doc: CatalogDocument = serde_json::from_str(text)?;
    Catalog::new(
        doc.version,
        doc.scales.unwrap_or_else(Scales::standard),
        doc.devices,
    )
}

pub fn serialize_catalog(c: &Catalog) -> String {
    let doc = CatalogDocument {
        version: c.version.clone(),
        scales: (c.scales != Scales::standard()).then(|| c.scales.clone()),
        devices: c.devices.clone(),
    };
    serde_json::to_string_pretty(&doc).expect("catalog document serializes")
}

pub fn list_devices(c: &Catalog, filter: Option<DeviceClass>) -> Vec<&DeviceSpec> {
    c.devices
        .iter()
        .filter(|d| filter.is_none_or(|f| d.class == f))
        .collect()
}

pub const DEFAULT_CATALOG_VERSION: &str = "builtin-1";

fn device(
    id: &str,
    name: &str,
    class: DeviceClass,
    modality: Option<OutputModality>,
    arm: [Option<Degree>; 5],
    leg: [Option<Degree>; 5],
    perception: [Option<Degree>; 2],
) -> DeviceSpec {
    let limb_map = |cells: [Option<Degree>; 5]| {
        LimbCategory::ALL
            .into_iter()
            .zip(cells)
            .filter_map(|(c, v)| v.map(|v| (c, v)))
            .collect()
    };
    DeviceSpec {
        id: id.to_owned(),
        name: name.to_owned(),
        class,
        modality,
        arm: limb_map(arm),
        leg: limb_map(leg),
        perception: Sense::ALL
            .into_iter()
            .zip(perception)
            .filter_map(|(s, v)| v.map(|v| (s, v)))
            .collect(),
    }
}

/// The built-in 14-device catalog.
///
/// Column order for limb cells: amputation/dysmelia, mobility, paralysis,
/// movement disturbance, pressure sensitivity. Perception: vision, hearing.
#[rustfmt::skip]
pub fn default_catalog() -> Catalog {
    use DeviceClass::*;
    const N: Option<Degree> = None;
    const NONE5: [Option<Degree>; 5] = [N; 5];
    let s = Some;
    let devices = vec![
        device("hand_button", "Hand button", OneDimensionalInput, None,
            [s(3), s(1), s(1), N, s(0)], NONE5, [N, N]),
        device("foot_button", "Foot button", OneDimensionalInput, None,
            NONE5, [s(0), s(1), s(0), s(1), s(0)], [N, N]),
        device("analog_joystick", "Analog joystick", MultiDimensionalInput, None,
            [s(2), s(0), s(0), s(0), s(0)], NONE5, [s(1), N]),
        device("digital_joystick", "Digital joystick", MultiDimensionalInput, None,
            [s(2), s(0), s(0), s(1), s(0)], NONE5, [N, N]),
        device("keyboard", "Keyboard", MultiDimensionalInput, None,
            [s(1), s(0), s(0), s(0), s(0)], NONE5, [s(0), N]),
        device("mouse", "Mouse", MultiDimensionalInput, None,
            [s(0), s(0), s(0), s(0), s(0)], NONE5, [s(1), N]),
        device("touchpad", "Touchpad", MultiDimensionalInput, None,
            [s(2), s(1), s(0), s(0), s(0)], NONE5, [s(1), N]),
        device("trackball_mouse", "Trackball mouse", MultiDimensionalInput, None,
            [s(2), s(1), s(0), s(1), s(0)], NONE5, [N, N]),
        device("key_mouse", "Key mouse", MultiDimensionalInput, None,
            [s(1), s(1), s(0), s(1), s(0)], NONE5, [s(0), N]),
        device("foot_mouse", "Foot mouse", MultiDimensionalInput, None,
            NONE5, [s(0), s(0), s(0), s(0), s(0)], [s(0), N]),
        device("mouth_mouse", "Mouth mouse", MultiDimensionalInput, None,
            NONE5, NONE5, [s(0), N]),
        device("display", "Display", Output, Some(OutputModality::Visual),
            NONE5, NONE5, [s(0), N]),
        device("signal_tower", "Signal tower", Output, Some(OutputModality::Visual),
            NONE5, NONE5, [s(0), N]),
        device("speaker", "Speaker", Output, Some(OutputModality::Auditory),
            NONE5, NONE5, [N, s(0)]),
    ];
    Catalog::new(DEFAULT_CATALOG_VERSION, Scales::standard(), devices)
        .expect("built-in catalog is valid")
}
