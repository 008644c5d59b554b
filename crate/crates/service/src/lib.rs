//! Stateless HTTP facade over the matcher.
//!
//! Endpoints:
//!
//! - `GET /api/catalog`: active catalog, category list and labeled scales.
//! - `POST /api/match`: profile document (optionally with a `plan`) to a
//!   structured report.
//! - `POST /api/validate`: `{plan, profile}` to feasibility findings.
//!
//! Every request is evaluated from scratch against the shared read-only
//! catalog. Nothing about the caller is kept between requests.

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;
use tower_http::cors::CorsLayer;

use devmatch_core::profile::{Applicability, LimbSelector};
use devmatch_core::{
    match_profile, validate_workstation, Catalog, Degree, DegreeScale, DeviceSpec,
    DisabilityCategory, DisabilityProfile, Finding, LimbCategory, PlanError, ProfileDocument,
    Sense, StructuredReport, Violation, WorkstationPlan,
};

#[derive(Clone)]
struct AppState {
    catalog: Arc<Catalog>,
}

/// Builds the router. `permissive_cors` allows any origin, for running the
/// web UI from a different local port.
pub fn router(catalog: Arc<Catalog>, permissive_cors: bool) -> Router {
    let app = Router::new()
        .route("/api/catalog", get(get_catalog))
        .route("/api/match", post(post_match))
        .route("/api/validate", post(post_validate))
        .with_state(AppState { catalog });
    if permissive_cors {
        app.layer(CorsLayer::permissive())
    } else {
        app
    }
}

pub async fn serve(
    addr: SocketAddr,
    catalog: Arc<Catalog>,
    permissive_cors: bool,
) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(catalog, permissive_cors)).await
}

#[derive(Serialize)]
struct CategoryInfo {
    key: DisabilityCategory,
    name: &'static str,
    applicability: Applicability,
}

#[derive(Serialize)]
struct CatalogResponse<'a> {
    catalog_version: &'a str,
    categories: Vec<CategoryInfo>,
    scales: Vec<&'a DegreeScale>,
    devices: &'a [DeviceSpec],
}

async fn get_catalog(State(state): State<AppState>) -> Response {
    let c = &state.catalog;
    let body = CatalogResponse {
        catalog_version: c.version(),
        categories: DisabilityCategory::ALL
            .into_iter()
            .map(|key| CategoryInfo {
                key,
                name: key.display_name(),
                applicability: key.applicability(),
            })
            .collect(),
        scales: c.scales().iter().collect(),
        devices: c.devices(),
    };
    Json(body).into_response()
}

/// Request for `/api/match`: a profile document with an optional plan.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatchRequest {
    #[serde(default)]
    limbs: BTreeMap<LimbSelector, BTreeMap<LimbCategory, Degree>>,
    #[serde(default)]
    perception: BTreeMap<Sense, Degree>,
    #[serde(default)]
    plan: Option<WorkstationPlan>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ValidateRequest {
    plan: WorkstationPlan,
    #[serde(default)]
    profile: ProfileDocument,
}

#[derive(Serialize)]
struct ValidateResponse<'a> {
    catalog_version: &'a str,
    feasible: bool,
    findings: Vec<Finding>,
}

enum ApiError {
    BadRequest(String),
    Invalid(String, Vec<Violation>),
    Internal(String),
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        match self {
            ApiError::BadRequest(msg) => {
                (StatusCode::BAD_REQUEST, Json(json!({ "error": msg }))).into_response()
            }
            ApiError::Invalid(prefix, violations) => {
                let errors: Vec<_> = violations
                    .iter()
                    .map(|v| {
                        let mut e = serde_json::to_value(v).expect("violation serializes");
                        e["path"] = json!(format!("{prefix}{}", v.path));
                        e["message"] = json!(v.to_string());
                        e
                    })
                    .collect();
                (
                    StatusCode::UNPROCESSABLE_ENTITY,
                    Json(json!({ "error": "invalid profile", "errors": errors })),
                )
                    .into_response()
            }
            ApiError::Internal(msg) => (
                StatusCode::INTERNAL_SERVER_ERROR,
                Json(json!({ "error": msg })),
            )
                .into_response(),
        }
    }
}

fn parse_body<T: for<'de> Deserialize<'de>>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::BadRequest(format!("malformed body: {e}")))
}

fn to_profile(
    doc: ProfileDocument,
    catalog: &Catalog,
    path_prefix: &str,
) -> Result<DisabilityProfile, ApiError> {
    doc.into_profile(catalog.scales())
        .map_err(|v| ApiError::Invalid(path_prefix.to_owned(), v))
}

fn check_plan(
    plan: &WorkstationPlan,
    catalog: &Catalog,
    profile: &DisabilityProfile,
) -> Result<Vec<Finding>, ApiError> {
    if plan.action_units == 0 {
        return Err(ApiError::BadRequest(PlanError::NoActionUnit.to_string()));
    }
    validate_workstation(plan, catalog, profile).map_err(|e| match e {
        PlanError::Match(m) => ApiError::Internal(m.to_string()),
        other => ApiError::BadRequest(other.to_string()),
    })
}

async fn post_match(State(state): State<AppState>, body: Bytes) -> Result<Response, ApiError> {
    let req: MatchRequest = parse_body(&body)?;
    let catalog = &state.catalog;
    let profile = to_profile(
        ProfileDocument {
            limbs: req.limbs,
            perception: req.perception,
        },
        catalog,
        "",
    )?;
    let report = match_profile(&profile, catalog).map_err(|e| ApiError::Internal(e.to_string()))?;
    let findings = match &req.plan {
        Some(plan) => check_plan(plan, catalog, &profile)?,
        None => Vec::new(),
    };
    Ok(Json(StructuredReport { report, findings }).into_response())
}

async fn post_validate(State(state): State<AppState>, body: Bytes) -> Result<Response, ApiError> {
    let req: ValidateRequest = parse_body(&body)?;
    let catalog = &state.catalog;
    let profile = to_profile(req.profile, catalog, "profile.")?;
    let findings = check_plan(&req.plan, catalog, &profile)?;
    Ok(Json(ValidateResponse {
        catalog_version: catalog.version(),
        feasible: !devmatch_core::has_errors(&findings),
        findings,
    })
    .into_response())
}
