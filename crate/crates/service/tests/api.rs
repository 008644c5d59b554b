use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use devmatch_core::default_catalog;
use devmatch_service::router;

fn app() -> Router {
    router(Arc::new(default_catalog()), false)
}

async fn call(app: Router, method: &str, uri: &str, body: Option<String>) -> (StatusCode, Value) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.map(Body::from).unwrap_or_else(Body::empty))
        .unwrap();
    let resp = app.oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&bytes).unwrap()
    };
    (status, value)
}

async fn post(uri: &str, body: Value) -> (StatusCode, Value) {
    call(app(), "POST", uri, Some(body.to_string())).await
}

fn verdict<'a>(report: &'a Value, id: &str) -> &'a Value {
    report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["device_id"] == id)
        .unwrap()
}

#[tokio::test]
async fn catalog_lists_devices_and_labeled_scales() {
    let (status, body) = call(app(), "GET", "/api/catalog", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["devices"].as_array().unwrap().len(), 14);
    assert_eq!(body["categories"].as_array().unwrap().len(), 7);
    assert_eq!(body["catalog_version"], "builtin-1");
    let arm_amp = body["scales"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["category"] == "amputation_dysmelia" && s["limb_kind"] == "arm")
        .unwrap();
    let labels: Vec<_> = arm_amp["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels.first(), Some(&"no limitation"));
    assert_eq!(labels.last(), Some(&"from parts of the upper arm"));
    assert_eq!(labels.len(), 5);

    let (_, again) = call(app(), "GET", "/api/catalog", None).await;
    assert_eq!(body, again);
}

#[tokio::test]
async fn match_zero_profile() {
    let (status, body) = post("/api/match", json!({})).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["summary"], json!({"green": 14, "yellow": 0, "red": 0}));
    assert_eq!(body["catalog_version"], "builtin-1");
    assert_eq!(body["findings"], json!([]));
}

#[tokio::test]
async fn match_example_two_display_yellow() {
    let (status, body) = post(
        "/api/match",
        json!({
            "limbs": {"all_limbs": {"movement_disturbance": 2, "mobility": 1}},
            "perception": {"vision": 1}
        }),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(verdict(&body, "display")["color"], "yellow");
    assert_eq!(verdict(&body, "signal_tower")["color"], "yellow");
    assert_eq!(verdict(&body, "speaker")["color"], "green");
}

#[tokio::test]
async fn match_out_of_range_is_422_with_path() {
    let (status, body) = post("/api/match", json!({"perception": {"vision": 9}})).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(body["errors"][0]["path"], "perception.vision");
    assert_eq!(body["errors"][0]["max"], 2);
}

#[tokio::test]
async fn match_malformed_is_400() {
    let (status, _) = call(app(), "POST", "/api/match", Some("{not json".into())).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = post("/api/match", json!({"limbs": {"left_hand": {}}})).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn match_with_plan_includes_findings() {
    let (status, body) = post(
        "/api/match",
        json!({
            "plan": {"process_type": "flexible", "action_units": 1, "safety_units": 1,
                     "devices": ["hand_button", "display", "speaker"],
                     "work_table": true, "computer": true}
        }),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["findings"][0]["code"], "INPUT_CLASS_UNSATISFIED");
    assert_eq!(body["findings"][0]["severity"], "error");
}

fn plan(action: u32, safety: u32, devices: &[&str]) -> Value {
    json!({"process_type": "sequential", "action_units": action, "safety_units": safety,
           "devices": devices, "work_table": true, "computer": true})
}

#[tokio::test]
async fn validate_clean_plan() {
    let (status, body) = post(
        "/api/validate",
        json!({"plan": plan(1, 1, &["hand_button", "display", "speaker"]), "profile": {}}),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["findings"], json!([]));
    assert_eq!(body["feasible"], true);
}

#[tokio::test]
async fn validate_safety_mismatch_is_data() {
    let (status, body) = post(
        "/api/validate",
        json!({"plan": plan(2, 1, &["hand_button", "display", "speaker"]), "profile": {}}),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    let findings = body["findings"].as_array().unwrap();
    assert_eq!(findings.len(), 1);
    assert_eq!(findings[0]["code"], "SAFETY_UNIT_MISMATCH");
    assert_eq!(findings[0]["severity"], "error");
    assert_eq!(body["feasible"], false);
}

#[tokio::test]
async fn validate_unknown_device_is_400() {
    let (status, body) = post(
        "/api/validate",
        json!({"plan": plan(1, 1, &["laser_pointer"]), "profile": {}}),
    )
    .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert!(body["error"].as_str().unwrap().contains("laser_pointer"));
}

#[tokio::test]
async fn validate_profile_errors_are_prefixed() {
    let (status, body) = post(
        "/api/validate",
        json!({"plan": plan(1, 1, &[]), "profile": {"perception": {"hearing": 4}}}),
    )
    .await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(body["errors"][0]["path"], "profile.perception.hearing");
}

#[tokio::test]
async fn requests_do_not_influence_each_other() {
    let app = app();
    let ex2 = json!({"perception": {"vision": 1}}).to_string();
    let (_, isolated) = call(app.clone(), "POST", "/api/match", Some("{}".into())).await;
    let _ = call(app.clone(), "POST", "/api/match", Some(ex2)).await;
    let (_, after) = call(app, "POST", "/api/match", Some("{}".into())).await;
    assert_eq!(isolated, after);
}

#[tokio::test]
async fn cors_header_only_when_enabled() {
    let req = || {
        Request::builder()
            .uri("/api/catalog")
            .header("origin", "http://localhost:5173")
            .body(Body::empty())
            .unwrap()
    };
    let open = router(Arc::new(default_catalog()), true)
        .oneshot(req())
        .await
        .unwrap();
    assert!(open.headers().contains_key("access-control-allow-origin"));
    let closed = app().oneshot(req()).await.unwrap();
    assert!(!closed.headers().contains_key("access-control-allow-origin"));
}
