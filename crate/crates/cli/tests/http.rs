use std::sync::Arc;

use axum::body::Body;
use axum::http::{Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use quiverkit::Quiver;
use quiverkit_cli::payload::{dt_payload, to_json, StatePayload};
use quiverkit_cli::server::{router, AppState, Created};
use serde_json::{json, Value};
use tower::ServiceExt;

fn app() -> Router {
    router(Arc::new(AppState::new(16)))
}

async fn call(app: &Router, method: Method, uri: &str, body: Option<&str>) -> (StatusCode, String) {
    let mut req = Request::builder().method(method).uri(uri);
    if body.is_some() {
        req = req.header("content-type", "application/json");
    }
    let req = req.body(Body::from(body.unwrap_or("").to_owned())).unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, String::from_utf8(bytes.to_vec()).unwrap())
}

async fn create(app: &Router, quiver: Value) -> Created {
    let (status, body) = call(app, Method::POST, "/sessions", Some(&json!({ "quiver": quiver }).to_string())).await;
    assert_eq!(status, StatusCode::CREATED, "{body}");
    serde_json::from_str(&body).unwrap()
}

fn a2_json() -> Value {
    json!({ "n": 2, "arrows": [[1, 2, 1]] })
}

#[tokio::test]
async fn mutate_and_read_back() {
    let app = app();
    let created = create(&app, a2_json()).await;
    assert_eq!(created.state.greens, vec![1, 2]);
    let uri = format!("/sessions/{}/mutations", created.id);
    let (status, _) = call(&app, Method::POST, &uri, Some(r#"{"vertex":1}"#)).await;
    assert_eq!(status, StatusCode::OK);

    let (status, body) = call(&app, Method::GET, &format!("/sessions/{}", created.id), None).await;
    assert_eq!(status, StatusCode::OK);
    let state: StatePayload = serde_json::from_str(&body).unwrap();
    assert_eq!(state.greens, vec![2]);
    assert_eq!(state.reds, vec![1]);
    assert_eq!(state.history, vec![1]);
    assert_eq!(state.c_matrix, vec![vec![-1, 0], vec![0, 1]]);
}

#[tokio::test]
async fn undo_restores_the_framed_state() {
    let app = app();
    let created = create(&app, a2_json()).await;
    let id = &created.id;
    call(&app, Method::POST, &format!("/sessions/{id}/mutations"), Some(r#"{"vertex":2}"#)).await;
    let (status, body) = call(&app, Method::DELETE, &format!("/sessions/{id}/mutations/last"), None).await;
    assert_eq!(status, StatusCode::OK);
    let state: StatePayload = serde_json::from_str(&body).unwrap();
    assert_eq!(state, created.state);

    let (status, _) = call(&app, Method::DELETE, &format!("/sessions/{id}/mutations/last"), None).await;
    assert_eq!(status, StatusCode::CONFLICT);
}

#[tokio::test]
async fn error_statuses() {
    let app = app();
    let (status, _) = call(&app, Method::GET, "/sessions/nope", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    let (status, _) = call(&app, Method::POST, "/sessions", Some("{not json")).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call(&app, Method::POST, "/sessions", Some(r#"{"quiver":{"n":2,"arrows":[[1,1,1]]}}"#)).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);

    let created = create(&app, a2_json()).await;
    let uri = format!("/sessions/{}/mutations", created.id);
    for vertex in [0, 3, 9] {
        let (status, body) = call(&app, Method::POST, &uri, Some(&json!({ "vertex": vertex }).to_string())).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{vertex}: {body}");
    }
    let (status, _) = call(&app, Method::POST, &uri, Some(r#"{"vertex":"x"}"#)).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call(&app, Method::GET, &format!("/sessions/{}/dt?degree=17", created.id), None).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn session_dt_matches_the_cli_payload() {
    let app = app();
    let created = create(&app, a2_json()).await;
    let id = &created.id;
    for v in [1, 2] {
        call(&app, Method::POST, &format!("/sessions/{id}/mutations"), Some(&json!({ "vertex": v }).to_string())).await;
    }
    let (status, body) = call(&app, Method::GET, &format!("/sessions/{id}/dt?degree=6"), None).await;
    assert_eq!(status, StatusCode::OK);
    let q = Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap();
    assert_eq!(body, to_json(&dt_payload(&q, &[1, 2], 6).unwrap()));
}

#[tokio::test]
async fn verify_endpoint() {
    let app = app();
    let req = json!({ "quiver": a2_json(), "seqA": [1, 2], "seqB": [2, 1, 2], "degree": 10 });
    let (status, body) = call(&app, Method::POST, "/verify", Some(&req.to_string())).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, r#"{"equal":true}"#);

    let req = json!({ "quiver": a2_json(), "seqA": [1, 2], "seqB": [1], "degree": 4 });
    let (_, body) = call(&app, Method::POST, "/verify", Some(&req.to_string())).await;
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["equal"], false);
    assert_eq!(v["witness"]["exponent"], json!([0, 1]));

    let req = json!({ "quiver": a2_json(), "seqA": [5], "seqB": [1] });
    let (status, _) = call(&app, Method::POST, "/verify", Some(&req.to_string())).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn catalog_lists_fixtures_with_quivers() {
    let (status, body) = call(&app(), Method::GET, "/catalog", None).await;
    assert_eq!(status, StatusCode::OK);
    let v: Vec<Value> = serde_json::from_str(&body).unwrap();
    let markov = v.iter().find(|e| e["name"] == "markov").unwrap();
    assert_eq!(markov["quiver"]["n"], 3);
    assert!(markov["quiver"]["arrows"].as_array().unwrap().iter().all(|a| a[2] == 2));
}

#[tokio::test]
async fn snapshot_replays_sessions() {
    let state = Arc::new(AppState::new(16));
    let app = router(state.clone());
    let created = create(&app, a2_json()).await;
    call(&app, Method::POST, &format!("/sessions/{}/mutations", created.id), Some(r#"{"vertex":2}"#)).await;

    let dir = std::env::temp_dir().join(format!("quiverkit-snapshot-{}", created.id));
    state.save(&dir).await.unwrap();
    let restored = Arc::new(AppState::new(16));
    restored.load(&dir).await.unwrap();
    std::fs::remove_file(&dir).unwrap();

    let uri = format!("/sessions/{}", created.id);
    let before = call(&app, Method::GET, &uri, None).await;
    let after = call(&router(restored), Method::GET, &uri, None).await;
    assert_eq!(before, after);
}
