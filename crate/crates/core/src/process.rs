//! Workstation composition and process feasibility checks.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{Catalog, DeviceClass, DeviceSpec, OutputModality};
use crate::matcher::{classify_device, Color, MatchError};
use crate::profile::{Degree, DisabilityProfile, Sense};

/// Perception degree at which a sense is considered entirely unavailable.
pub const TOTAL_LIMITATION: Degree = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProcessType {
    Sequential,
    Flexible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkstationPlan {
    pub process_type: ProcessType,
    pub action_units: u32,
    pub safety_units: u32,
    #[serde(default)]
    pub devices: Vec<String>,
    pub work_table: bool,
    pub computer: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

/// Closed set of finding codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FindingCode {
    SafetyUnitMismatch,
    MissingBasicStructure,
    InputClassUnsatisfied,
    InputClassOnlyYellow,
    NoOutputDevice,
    TwoSensesNotMet,
    SenseUnavailable,
}

impl FindingCode {
    pub const ALL: [FindingCode; 7] = [
        FindingCode::SafetyUnitMismatch,
        FindingCode::MissingBasicStructure,
        FindingCode::InputClassUnsatisfied,
        FindingCode::InputClassOnlyYellow,
        FindingCode::NoOutputDevice,
        FindingCode::TwoSensesNotMet,
        FindingCode::SenseUnavailable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FindingCode::SafetyUnitMismatch => "SAFETY_UNIT_MISMATCH",
            FindingCode::MissingBasicStructure => "MISSING_BASIC_STRUCTURE",
            FindingCode::InputClassUnsatisfied => "INPUT_CLASS_UNSATISFIED",
            FindingCode::InputClassOnlyYellow => "INPUT_CLASS_ONLY_YELLOW",
            FindingCode::NoOutputDevice => "NO_OUTPUT_DEVICE",
            FindingCode::TwoSensesNotMet => "TWO_SENSES_NOT_MET",
            FindingCode::SenseUnavailable => "SENSE_UNAVAILABLE",
        }
    }

    pub fn severity(self) -> Severity {
        match self {
            FindingCode::SafetyUnitMismatch
            | FindingCode::MissingBasicStructure
            | FindingCode::InputClassUnsatisfied => Severity::Error,
            _ => Severity::Warning,
        }
    }
}

impl fmt::Display for FindingCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub severity: Severity,
    pub code: FindingCode,
    pub message: String,
}

impl Finding {
    fn new(code: FindingCode, message: impl Into<String>) -> Self {
        Finding {
            severity: code.severity(),
            code,
            message: message.into(),
        }
    }
}

pub fn has_errors(findings: &[Finding]) -> bool {
    findings.iter().any(|f| f.severity == Severity::Error)
}

#[derive(Debug, Error)]
pub enum PlanError {
    #[error("malformed plan document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("plan needs at least one action unit")]
    NoActionUnit,
    #[error("plan references unknown device `{0}`")]
    UnknownDevice(String),
    #[error(transparent)]
    Match(#[from] MatchError),
}

pub fn parse_plan(text: &str) -> Result<WorkstationPlan, PlanError> {
    let plan: WorkstationPlan = serde_json::from_str(text)?;
    if plan.action_units == 0 {
        return Err(PlanError::NoActionUnit);
    }
    Ok(plan)
}

pub fn required_input_classes(t: ProcessType) -> BTreeSet<DeviceClass> {
    match t {
        ProcessType::Sequential => [DeviceClass::OneDimensionalInput].into(),
        ProcessType::Flexible => [DeviceClass::MultiDimensionalInput].into(),
    }
}

/// Whether a device of class `have` can serve a `need` requirement.
/// Multi-dimensional inputs also work as one-dimensional ones.
pub fn satisfies(have: DeviceClass, need: DeviceClass) -> bool {
    have == need
        || (have == DeviceClass::MultiDimensionalInput && need == DeviceClass::OneDimensionalInput)
}

fn sense_unavailable(p: &DisabilityProfile, sense: Sense) -> bool {
    p.perception(sense).unwrap_or(0) >= TOTAL_LIMITATION
}

pub fn check_two_senses(selected: &[&DeviceSpec], p: &DisabilityProfile) -> Vec<Finding> {
    let mut findings = Vec::new();
    let mut effective = BTreeSet::new();
    for modality in [OutputModality::Visual, OutputModality::Auditory] {
        if sense_unavailable(p, modality.sense()) {
            findings.push(Finding::new(
                FindingCode::SenseUnavailable,
                format!(
                    "{} output cannot be perceived ({} is totally limited)",
                    modality.key(),
                    modality.sense().key()
                ),
            ));
            continue;
        }
        if selected
            .iter()
            .any(|d| d.class == DeviceClass::Output && d.modality == Some(modality))
        {
            effective.insert(modality);
        }
    }
    if effective.len() < 2 {
        let have = if effective.is_empty() {
            "none".to_owned()
        } else {
            effective
                .iter()
                .map(|m| m.key())
                .collect::<Vec<_>>()
                .join(", ")
        };
        findings.push(Finding::new(
            FindingCode::TwoSensesNotMet,
            format!("outputs should address both sight and hearing; usable modalities: {have}"),
        ));
    }
    findings
}

/// Checks a plan against composition rules, the process' input needs and the
/// two-senses principle. Findings come out in a fixed order: composition,
/// inputs, outputs, senses.
pub fn validate_workstation(
    w: &WorkstationPlan,
    c: &Catalog,
    p: &DisabilityProfile,
) -> Result<Vec<Finding>, PlanError> {
    let selected = w
        .devices
        .iter()
        .map(|id| {
            c.device(id)
                .ok_or_else(|| PlanError::UnknownDevice(id.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut findings = Vec::new();

    if w.safety_units != w.action_units {
        findings.push(Finding::new(
            FindingCode::SafetyUnitMismatch,
            format!(
                "{} action unit(s) need exactly as many safety units, found {}",
                w.action_units, w.safety_units
            ),
        ));
    }

    let mut missing = Vec::new();
    if !w.work_table {
        missing.push("work table");
    }
    if !w.computer {
        missing.push("computer");
    }
    if !missing.is_empty() {
        findings.push(Finding::new(
            FindingCode::MissingBasicStructure,
            format!("basic structure lacks {}", missing.join(" and ")),
        ));
    }

    let colored = selected
        .iter()
        .map(|d| classify_device(p, d).map(|v| (*d, v.color)))
        .collect::<Result<Vec<_>, _>>()?;
    for need in required_input_classes(w.process_type) {
        let candidates = || colored.iter().filter(|(d, _)| satisfies(d.class, need));
        if candidates().any(|(_, color)| *color == Color::Green) {
            continue;
        }
        findings.push(Finding::new(
            FindingCode::InputClassUnsatisfied,
            format!("no usable (green) {need} device selected"),
        ));
        let yellow: Vec<&str> = candidates()
            .filter(|(_, color)| *color == Color::Yellow)
            .map(|(d, _)| d.id.as_str())
            .collect();
        if !yellow.is_empty() {
            findings.push(Finding::new(
                FindingCode::InputClassOnlyYellow,
                format!(
                    "{need} requirement could be met by {} after designer validation",
                    yellow.join(", ")
                ),
            ));
        }
    }

    if !selected.iter().any(|d| d.class == DeviceClass::Output) {
        findings.push(Finding::new(
            FindingCode::NoOutputDevice,
            "no output device selected",
        ));
    }

    findings.extend(check_two_senses(&selected, p));
    Ok(findings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::default_catalog;
    use crate::profile::{zero_profile, Slot};

    fn plan(t: ProcessType, action: u32, safety: u32, devices: &[&str]) -> WorkstationPlan {
        WorkstationPlan {
            process_type: t,
            action_units: action,
            safety_units: safety,
            devices: devices.iter().map(|s| s.to_string()).collect(),
            work_table: true,
            computer: true,
        }
    }

    fn codes(f: &[Finding]) -> Vec<FindingCode> {
        f.iter().map(|f| f.code).collect()
    }

    #[test]
    fn required_classes() {
        assert_eq!(
            required_input_classes(ProcessType::Sequential),
            [DeviceClass::OneDimensionalInput].into()
        );
        assert_eq!(
            required_input_classes(ProcessType::Flexible),
            [DeviceClass::MultiDimensionalInput].into()
        );
        assert!(satisfies(
            DeviceClass::MultiDimensionalInput,
            DeviceClass::OneDimensionalInput
        ));
        assert!(!satisfies(
            DeviceClass::OneDimensionalInput,
            DeviceClass::MultiDimensionalInput
        ));
        assert!(!satisfies(
            DeviceClass::Output,
            DeviceClass::OneDimensionalInput
        ));
    }

    #[test]
    fn two_senses() {
        let c = default_catalog();
        let d = |id: &str| c.device(id).unwrap();
        assert!(check_two_senses(&[d("display"), d("speaker")], &zero_profile()).is_empty());
        assert_eq!(
            codes(&check_two_senses(
                &[d("display"), d("signal_tower")],
                &zero_profile()
            )),
            vec![FindingCode::TwoSensesNotMet]
        );
        let deaf = zero_profile().with(Slot::Perception(Sense::Hearing), 2);
        let f = check_two_senses(&[d("display"), d("speaker")], &deaf);
        assert_eq!(
            codes(&f),
            vec![FindingCode::SenseUnavailable, FindingCode::TwoSensesNotMet]
        );
        assert!(f[0].message.contains("auditory"));
        assert!(f.iter().all(|f| f.severity == Severity::Warning));
    }

    #[test]
    fn sequential_plan_is_clean() {
        let c = default_catalog();
        let f = validate_workstation(
            &plan(
                ProcessType::Sequential,
                1,
                1,
                &["hand_button", "display", "speaker"],
            ),
            &c,
            &zero_profile(),
        )
        .unwrap();
        assert!(f.is_empty(), "{f:?}");
    }

    #[test]
    fn flexible_plan_needs_multi_dim() {
        let c = default_catalog();
        let f = validate_workstation(
            &plan(
                ProcessType::Flexible,
                1,
                1,
                &["hand_button", "display", "speaker"],
            ),
            &c,
            &zero_profile(),
        )
        .unwrap();
        assert_eq!(codes(&f), vec![FindingCode::InputClassUnsatisfied]);
        assert!(has_errors(&f));
    }

    #[test]
    fn mismatched_units_without_outputs() {
        let c = default_catalog();
        let f = validate_workstation(
            &plan(ProcessType::Sequential, 2, 1, &["hand_button"]),
            &c,
            &zero_profile(),
        )
        .unwrap();
        assert_eq!(
            codes(&f),
            vec![
                FindingCode::SafetyUnitMismatch,
                FindingCode::NoOutputDevice,
                FindingCode::TwoSensesNotMet
            ]
        );
    }

    #[test]
    fn missing_basic_structure() {
        let c = default_catalog();
        let mut w = plan(
            ProcessType::Sequential,
            1,
            1,
            &["hand_button", "display", "speaker"],
        );
        w.computer = false;
        let f = validate_workstation(&w, &c, &zero_profile()).unwrap();
        assert_eq!(codes(&f), vec![FindingCode::MissingBasicStructure]);
        assert!(f[0].message.contains("computer"));
    }

    #[test]
    fn yellow_only_input_is_flagged() {
        // Mobility 1 on both arms turns the digital joystick yellow.
        let c = default_catalog();
        let p = zero_profile()
            .with(
                Slot::Limb(
                    crate::profile::LimbId::LeftArm,
                    crate::profile::LimbCategory::MobilityOfLimbs,
                ),
                1,
            )
            .with(
                Slot::Limb(
                    crate::profile::LimbId::RightArm,
                    crate::profile::LimbCategory::MobilityOfLimbs,
                ),
                1,
            );
        let f = validate_workstation(
            &plan(
                ProcessType::Flexible,
                1,
                1,
                &["digital_joystick", "display", "speaker"],
            ),
            &c,
            &p,
        )
        .unwrap();
        assert_eq!(
            codes(&f),
            vec![
                FindingCode::InputClassUnsatisfied,
                FindingCode::InputClassOnlyYellow
            ]
        );
    }

    #[test]
    fn unknown_device() {
        let c = default_catalog();
        assert!(matches!(
            validate_workstation(
                &plan(ProcessType::Sequential, 1, 1, &["laser_pointer"]),
                &c,
                &zero_profile()
            ),
            Err(PlanError::UnknownDevice(id)) if id == "laser_pointer"
        ));
    }

    #[test]
    fn parse_plan_document() {
        let text = r#"{"process_type": "flexible", "action_units": 1, "safety_units": 1,
            "devices": ["mouse"], "work_table": true, "computer": true}"#;
        let p = parse_plan(text).unwrap();
        assert_eq!(p.process_type, ProcessType::Flexible);
        assert_eq!(p.devices, vec!["mouse"]);
        let zero_units = r#"{"process_type": "flexible", "action_units": 0, "safety_units": 0,
            "work_table": true, "computer": true}"#;
        assert!(matches!(
            parse_plan(zero_units),
            Err(PlanError::NoActionUnit)
        ));
        assert!(matches!(
            parse_plan(r#"{"process_type": "chaotic"}"#),
            Err(PlanError::Malformed(_))
        ));
    }

    #[test]
    fn codes_serialize_screaming() {
        for code in FindingCode::ALL {
            let json = serde_json::to_string(&code).unwrap();
            assert_eq!(json, format!("\"{}\"", code.as_str()));
        }
    }
}
