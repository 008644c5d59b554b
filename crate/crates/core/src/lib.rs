//! Matching of human-robot workstation I/O devices against a person's
//! per-limb and perception disability degrees.
//!
//! The crate is organized bottom-up:
//!
//! - [`profile`]: categories, degree scales, person profiles and their
//!   document format.
//! - [`catalog`]: devices, requirement cells, the built-in catalog.
//! - [`matcher`]: excess computation and green/yellow/red classification.
//! - [`process`]: process-type input needs, two-senses check, workstation
//!   composition rules.
//! - [`report`]: text and structured rendering.

pub mod catalog;
pub mod matcher;
pub mod process;
pub mod profile;
pub mod report;

pub use catalog::{
    default_catalog, list_devices, load_catalog, serialize_catalog, Catalog, CatalogError,
    DeviceClass, DeviceSpec, OutputModality, RequirementCell,
};
pub use matcher::{
    category_excess, classify, classify_device, limb_excess, match_profile, Color, DeviceVerdict,
    ExcessBreakdown, MatchError, MatchReport, Operator, Summary,
};
pub use process::{
    check_two_senses, has_errors, parse_plan, required_input_classes, satisfies,
    validate_workstation, Finding, FindingCode, PlanError, ProcessType, Severity, WorkstationPlan,
};
pub use profile::{
    parse_profile, parse_profile_with, serialize_profile, validate_profile, zero_profile, Degree,
    DegreeScale, DisabilityCategory, DisabilityProfile, LimbCategory, LimbId, LimbKind,
    ProfileDocument, ProfileError, Scales, Sense, Side, Slot, Violation, ViolationKind,
};
pub use report::{parse_structured, render_structured, render_text, StructuredReport};
