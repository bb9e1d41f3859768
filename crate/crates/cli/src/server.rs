//! In-memory session service over HTTP.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::{SystemTime, UNIX_EPOCH};

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Path as UrlPath, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{delete, get, post};
use axum::{Json, Router};
use quiverkit::dt::DtRecord;
use quiverkit::search::catalog;
use quiverkit::{Error as CoreError, MutationState, QuiverFile};
use serde::{Deserialize, Serialize};
use tokio::sync::RwLock;
use uuid::Uuid;

use crate::payload::{dt_payload, verify_payload, CatalogEntry, StatePayload, VerifyPayload, DEFAULT_DEGREE};

/// Hard upper bound on the truncation degree accepted by the service.
pub const MAX_DEGREE: u32 = 16;

#[derive(Debug, thiserror::Error)]
pub enum ApiError {
    #[error("unknown session {0}")]
    NotFound(String),
    #[error("{0}")]
    BadRequest(String),
    #[error("history is empty")]
    EmptyHistory,
    #[error("{0}")]
    Unprocessable(String),
}

impl ApiError {
    fn status(&self) -> StatusCode {
        match self {
            ApiError::NotFound(_) => StatusCode::NOT_FOUND,
            ApiError::BadRequest(_) => StatusCode::BAD_REQUEST,
            ApiError::EmptyHistory => StatusCode::CONFLICT,
            ApiError::Unprocessable(_) => StatusCode::UNPROCESSABLE_ENTITY,
        }
    }
}

impl From<CoreError> for ApiError {
    fn from(e: CoreError) -> Self {
        ApiError::Unprocessable(e.to_string())
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> Self {
        ApiError::BadRequest(e.body_text())
    }
}

impl From<QueryRejection> for ApiError {
    fn from(e: QueryRejection) -> Self {
        ApiError::BadRequest(e.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = serde_json::json!({ "error": self.to_string() });
        (self.status(), Json(body)).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

#[derive(Debug, Clone)]
pub struct Session {
    pub state: MutationState,
    pub created: u64,
    pub updated: u64,
}

/// On-disk form of a session: origin and history, replayed on load.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SessionRecord {
    pub id: String,
    pub origin: QuiverFile,
    pub history: Vec<usize>,
    pub created: u64,
    pub updated: u64,
}

#[derive(Debug)]
pub struct AppState {
    sessions: RwLock<HashMap<String, Session>>,
    max_degree: u32,
}

impl AppState {
    pub fn new(max_degree: u32) -> Self {
        AppState {
            sessions: RwLock::new(HashMap::new()),
            max_degree,
        }
    }

    /// Degree cap from `QUIVERKIT_MAX_DEGREE`, clamped to [`MAX_DEGREE`].
    pub fn from_env() -> Self {
        let cap = std::env::var("QUIVERKIT_MAX_DEGREE")
            .ok()
            .and_then(|v| v.parse().ok())
            .map_or(MAX_DEGREE, |d: u32| d.min(MAX_DEGREE));
        Self::new(cap)
    }

    pub async fn snapshot(&self) -> Vec<SessionRecord> {
        let sessions = self.sessions.read().await;
        let mut out: Vec<SessionRecord> = sessions
            .iter()
            .map(|(id, s)| SessionRecord {
                id: id.clone(),
                origin: QuiverFile::from_quiver(s.state.origin()),
                history: s.state.history().to_vec(),
                created: s.created,
                updated: s.updated,
            })
            .collect();
        out.sort_by(|a, b| a.id.cmp(&b.id));
        out
    }

    pub async fn restore(&self, records: &[SessionRecord]) -> Result<(), CoreError> {
        let mut sessions = self.sessions.write().await;
        for r in records {
            let state = MutationState::replay(&r.origin.to_quiver()?, &r.history)?;
            sessions.insert(
                r.id.clone(),
                Session {
                    state,
                    created: r.created,
                    updated: r.updated,
                },
            );
        }
        Ok(())
    }

    pub async fn save(&self, path: &Path) -> std::io::Result<()> {
        let json = serde_json::to_string_pretty(&self.snapshot().await)?;
        std::fs::write(path, json)
    }

    pub async fn load(&self, path: &Path) -> std::io::Result<()> {
        let text = std::fs::read_to_string(path)?;
        let records: Vec<SessionRecord> = serde_json::from_str(&text)?;
        self.restore(&records)
            .await
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
    }
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

pub fn router(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/mutations", post(mutate))
        .route("/sessions/{id}/mutations/last", delete(undo))
        .route("/sessions/{id}/dt", get(session_dt))
        .route("/catalog", get(list_catalog))
        .route("/verify", post(verify))
        .with_state(state)
}

#[derive(Debug, Deserialize)]
pub struct CreateRequest {
    pub quiver: QuiverFile,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Created {
    pub id: String,
    pub state: StatePayload,
}

async fn create_session(
    State(app): State<Arc<AppState>>,
    body: Result<Json<CreateRequest>, JsonRejection>,
) -> Result<(StatusCode, Json<Created>), ApiError> {
    let Json(req) = body?;
    let state = MutationState::frame(&req.quiver.to_quiver()?)?;
    let id = Uuid::new_v4().simple().to_string();
    let payload = StatePayload::new(&state);
    let t = now();
    app.sessions.write().await.insert(
        id.clone(),
        Session {
            state,
            created: t,
            updated: t,
        },
    );
    Ok((StatusCode::CREATED, Json(Created { id, state: payload })))
}

async fn get_session(State(app): State<Arc<AppState>>, UrlPath(id): UrlPath<String>) -> ApiResult<StatePayload> {
    let sessions = app.sessions.read().await;
    let s = sessions.get(&id).ok_or(ApiError::NotFound(id))?;
    Ok(Json(StatePayload::new(&s.state)))
}

#[derive(Debug, Deserialize)]
pub struct MutateRequest {
    pub vertex: usize,
}

async fn mutate(
    State(app): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
    body: Result<Json<MutateRequest>, JsonRejection>,
) -> ApiResult<StatePayload> {
    let mut sessions = app.sessions.write().await;
    let s = sessions.get_mut(&id).ok_or(ApiError::NotFound(id))?;
    let Json(req) = body?;
    let next = s.state.mutate(req.vertex).map_err(|e| match e {
        CoreError::VertexOutOfRange { .. } | CoreError::FrozenVertex { .. } => ApiError::BadRequest(e.to_string()),
        other => other.into(),
    })?;
    s.state = next;
    s.updated = now();
    Ok(Json(StatePayload::new(&s.state)))
}

async fn undo(State(app): State<Arc<AppState>>, UrlPath(id): UrlPath<String>) -> ApiResult<StatePayload> {
    let mut sessions = app.sessions.write().await;
    let s = sessions.get_mut(&id).ok_or(ApiError::NotFound(id))?;
    s.state = s.state.undo().ok_or(ApiError::EmptyHistory)?;
    s.updated = now();
    Ok(Json(StatePayload::new(&s.state)))
}

#[derive(Debug, Deserialize)]
pub struct DegreeQuery {
    pub degree: Option<u32>,
}

impl AppState {
    fn check_degree(&self, degree: Option<u32>) -> Result<u32, ApiError> {
        let d = degree.unwrap_or(DEFAULT_DEGREE);
        if d > self.max_degree {
            return Err(ApiError::Unprocessable(format!(
                "degree {d} exceeds the cap {}",
                self.max_degree
            )));
        }
        Ok(d)
    }
}

async fn session_dt(
    State(app): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
    query: Result<Query<DegreeQuery>, QueryRejection>,
) -> ApiResult<DtRecord> {
    let (origin, history) = {
        let sessions = app.sessions.read().await;
        let s = sessions.get(&id).ok_or(ApiError::NotFound(id))?;
        (s.state.origin().clone(), s.state.history().to_vec())
    };
    let Query(q) = query?;
    let degree = app.check_degree(q.degree)?;
    let record = tokio::task::spawn_blocking(move || dt_payload(&origin, &history, degree))
        .await
        .map_err(|e| ApiError::Unprocessable(e.to_string()))??;
    Ok(Json(record))
}

async fn list_catalog() -> Json<Vec<CatalogEntry>> {
    Json(catalog().iter().map(CatalogEntry::from).collect())
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyRequest {
    pub quiver: QuiverFile,
    pub seq_a: Vec<usize>,
    pub seq_b: Vec<usize>,
    pub degree: Option<u32>,
}

async fn verify(
    State(app): State<Arc<AppState>>,
    body: Result<Json<VerifyRequest>, JsonRejection>,
) -> ApiResult<VerifyPayload> {
    let Json(req) = body?;
    let degree = app.check_degree(req.degree)?;
    let q = req.quiver.to_quiver()?;
    let out = tokio::task::spawn_blocking(move || verify_payload(&q, &req.seq_a, &req.seq_b, degree))
        .await
        .map_err(|e| ApiError::Unprocessable(e.to_string()))??;
    Ok(Json(out))
}

/// Serves until ctrl-c, then writes the sessions to `snapshot` if given.
pub async fn serve(port: u16, snapshot: Option<PathBuf>) -> std::io::Result<()> {
    let app = Arc::new(AppState::from_env());
    if let Some(path) = snapshot.as_deref().filter(|p| p.exists()) {
        app.load(path).await?;
    }
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(app.clone()))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    if let Some(path) = snapshot {
        app.save(&path).await?;
        eprintln!("saved sessions to {}", path.display());
    }
    Ok(())
}
