use std::io::Read;
use std::net::SocketAddr;
use std::path::Path;
use std::sync::Arc;

use devmatch_core::report::render_findings;
use devmatch_core::{
    default_catalog, has_errors, load_catalog, match_profile, parse_plan, parse_profile_with,
    render_structured, render_text, serialize_catalog, validate_workstation, Catalog, DeviceSpec,
    DisabilityProfile, Finding, LimbCategory, LimbKind, Sense, WorkstationPlan,
};
use serde::Serialize;

use crate::cli::{CatalogAction, Format};
use crate::error::{CliError, ExitKind};

fn is_stdin(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if is_stdin(path) {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::input(format!("<stdin>: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn ensure_single_stdin(paths: &[Option<&Path>]) -> Result<(), CliError> {
    if paths.iter().flatten().filter(|p| is_stdin(p)).count() > 1 {
        return Err(CliError::input(
            "only one input can be read from standard input",
        ));
    }
    Ok(())
}

pub fn load_catalog_arg(path: Option<&Path>) -> Result<Catalog, CliError> {
    match path {
        None => Ok(default_catalog()),
        Some(p) => {
            let text = read_input(p)?;
            load_catalog(&text).map_err(|e| CliError::input(format!("{}: {e}", p.display())))
        }
    }
}

fn load_profile(path: &Path, catalog: &Catalog) -> Result<DisabilityProfile, CliError> {
    let text = read_input(path)?;
    parse_profile_with(&text, catalog.scales())
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_plan(path: &Path) -> Result<WorkstationPlan, CliError> {
    let text = read_input(path)?;
    parse_plan(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn check_plan(
    plan: &WorkstationPlan,
    catalog: &Catalog,
    profile: &DisabilityProfile,
    path: &Path,
) -> Result<Vec<Finding>, CliError> {
    validate_workstation(plan, catalog, profile)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub fn run_match(
    profile: &Path,
    plan: Option<&Path>,
    format: Format,
    catalog: Option<&Path>,
) -> Result<String, CliError> {
    ensure_single_stdin(&[Some(profile), plan, catalog])?;
    let catalog = load_catalog_arg(catalog)?;
    let p = load_profile(profile, &catalog)?;
    let report = match_profile(&p, &catalog).map_err(|e| CliError::input(e.to_string()))?;
    let findings = match plan {
        Some(path) => check_plan(&load_plan(path)?, &catalog, &p, path)?,
        None => Vec::new(),
    };
    Ok(match format {
        Format::Text => render_text(&report, &findings),
        Format::Structured => render_structured(&report, &findings) + "\n",
    })
}

#[derive(Serialize)]
struct ValidateOutput<'a> {
    catalog_version: &'a str,
    feasible: bool,
    findings: &'a [Finding],
}

/// Returns the rendered findings and whether the plan is feasible.
pub fn run_validate(
    plan: &Path,
    profile: &Path,
    format: Format,
    catalog: Option<&Path>,
) -> Result<(String, bool), CliError> {
    ensure_single_stdin(&[Some(plan), Some(profile), catalog])?;
    let catalog = load_catalog_arg(catalog)?;
    let p = load_profile(profile, &catalog)?;
    let w = load_plan(plan)?;
    let findings = check_plan(&w, &catalog, &p, plan)?;
    let feasible = !has_errors(&findings);
    let out = match format {
        Format::Text => {
            let mut out = format!(
                "plan: {}\n",
                if feasible { "feasible" } else { "infeasible" }
            );
            if findings.is_empty() {
                out.push_str("no findings\n");
            } else {
                out.push_str(&render_findings(&findings));
            }
            out
        }
        Format::Structured => {
            let doc = ValidateOutput {
                catalog_version: catalog.version(),
                feasible,
                findings: &findings,
            };
            serde_json::to_string_pretty(&doc).expect("findings serialize") + "\n"
        }
    };
    Ok((out, feasible))
}

pub fn run_catalog(action: &CatalogAction, catalog: Option<&Path>) -> Result<String, CliError> {
    let catalog = load_catalog_arg(catalog)?;
    match action {
        CatalogAction::List => {
            let id_w = catalog
                .devices()
                .iter()
                .map(|d| d.id.len())
                .max()
                .unwrap_or(0);
            Ok(catalog
                .devices()
                .iter()
                .map(|d| format!("{:<id_w$}  {:<15}  {}\n", d.id, d.class.key(), d.name))
                .collect())
        }
        CatalogAction::Show { id } => catalog
            .device(id)
            .map(show_device)
            .ok_or_else(|| CliError::input(format!("unknown device `{id}`"))),
        CatalogAction::Export => Ok(serialize_catalog(&catalog) + "\n"),
    }
}

fn show_device(d: &DeviceSpec) -> String {
    let mut out = format!("{} ({})\nclass: {}\n", d.id, d.name, d.class);
    if let Some(m) = d.modality {
        out.push_str(&format!("modality: {}\n", m.key()));
    }
    let limbs = d.operating_limbs();
    let operated = if limbs.is_empty() {
        "body (limb-independent)".to_owned()
    } else {
        limbs.iter().map(|l| l.key()).collect::<Vec<_>>().join(", ")
    };
    out.push_str(&format!("operated by: {operated}\n"));
    for kind in [LimbKind::Arm, LimbKind::Leg] {
        for cat in LimbCategory::ALL {
            out.push_str(&format!(
                "{} {}: {}\n",
                kind.key(),
                cat.key(),
                d.limb_cell(kind, cat)
            ));
        }
    }
    for sense in Sense::ALL {
        out.push_str(&format!("{}: {}\n", sense.key(), d.perception_cell(sense)));
    }
    out
}

pub fn run_serve(
    host: std::net::IpAddr,
    port: u16,
    cors: bool,
    catalog: Option<&Path>,
) -> Result<(), CliError> {
    let catalog = Arc::new(load_catalog_arg(catalog)?);
    let addr = SocketAddr::new(host, port);
    let rt = tokio::runtime::Runtime::new()
        .map_err(|e| CliError::input(format!("cannot start runtime: {e}")))?;
    eprintln!(
        "devmatch: serving catalog {} on http://{addr}",
        catalog.version()
    );
    rt.block_on(devmatch_service::serve(addr, catalog, cors))
        .map_err(|e| CliError::input(format!("{addr}: {e}")))
}

pub fn infeasible() -> CliError {
    CliError {
        kind: ExitKind::Infeasible,
        message: String::new(),
    }
}
