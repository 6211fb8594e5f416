//! HTTP session service.
//!
//! | method | path | body | reply |
//! |---|---|---|---|
//! | POST | `/sessions` | `{"type": "A3"}` or `{"quiver": ...}` | `201 {id, state}` |
//! | GET | `/sessions/{id}` | | `{id, state}` |
//! | POST | `/sessions/{id}/mutate` | `{"vertex": 2}` | `{id, state}` or `409` |
//! | POST | `/sessions/{id}/undo` | | `{id, state}` or `409` |
//! | GET | `/sessions/{id}/export?format=json\|dot` | | quiver document |
//!
//! Unknown sessions give `404`; malformed bodies and out-of-range vertices
//! give `422`. Errors carry `{"error": message}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::input::{parse_json, Input};
use crate::state::{Blocked, Session};

/// Search cap used for the per-state Dynkin classification and roots.
pub const SERVICE_BUDGET: usize = 50_000;

#[derive(Clone)]
pub struct AppState {
    sessions: Arc<Mutex<HashMap<String, Arc<Mutex<Session>>>>>,
    budget: usize,
}

impl AppState {
    pub fn new(budget: usize) -> Self {
        AppState { sessions: Arc::default(), budget }
    }

    fn session(&self, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
        self.sessions
            .lock()
            .unwrap()
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("unknown session {id}")))
    }
}

impl Default for AppState {
    fn default() -> Self {
        AppState::new(SERVICE_BUDGET)
    }
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/sessions", post(create))
        .route("/sessions/{id}", get(show))
        .route("/sessions/{id}/mutate", post(mutate))
        .route("/sessions/{id}/undo", post(undo))
        .route("/sessions/{id}/export", get(export))
        .with_state(state)
}

pub struct ApiError {
    status: StatusCode,
    body: Value,
}

impl ApiError {
    fn new(status: StatusCode, msg: impl Into<String>) -> Self {
        ApiError { status, body: json!({"error": msg.into()}) }
    }

    fn unprocessable(msg: impl Into<String>) -> Self {
        ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, msg)
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

type ApiResult = Result<Response, ApiError>;

fn parse_body(body: &Bytes) -> Result<Value, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::unprocessable(format!("invalid JSON: {e}")))
}

fn reply(status: StatusCode, id: &str, session: &mut Session, budget: usize) -> Response {
    (status, Json(json!({"id": id, "state": session.state(budget)}))).into_response()
}

async fn create(State(app): State<AppState>, body: Bytes) -> ApiResult {
    let v = parse_body(&body)?;
    if v.get("type").is_none() && v.get("quiver").is_none() {
        return Err(ApiError::unprocessable("expected {\"type\": ...} or {\"quiver\": ...}"));
    }
    let q = match parse_json(&v).map_err(ApiError::unprocessable)? {
        Input::Quiver(q) => q,
        Input::Matrix(_) => unreachable!("only type or quiver bodies reach here"),
    };
    let id = uuid::Uuid::new_v4().simple().to_string();
    let mut session = Session::new(q);
    let resp = reply(StatusCode::CREATED, &id, &mut session, app.budget);
    app.sessions.lock().unwrap().insert(id, Arc::new(Mutex::new(session)));
    Ok(resp)
}

async fn show(State(app): State<AppState>, Path(id): Path<String>) -> ApiResult {
    let s = app.session(&id)?;
    let mut s = s.lock().unwrap();
    Ok(reply(StatusCode::OK, &id, &mut s, app.budget))
}

#[derive(Deserialize)]
struct MutateBody {
    vertex: usize,
}

async fn mutate(State(app): State<AppState>, Path(id): Path<String>, body: Bytes) -> ApiResult {
    let s = app.session(&id)?;
    let body: MutateBody = serde_json::from_value(parse_body(&body)?)
        .map_err(|e| ApiError::unprocessable(format!("expected {{\"vertex\": n}}: {e}")))?;
    if body.vertex == 0 {
        return Err(ApiError::unprocessable("vertices are numbered from 1"));
    }
    let mut s = s.lock().unwrap();
    match s.mutate(body.vertex - 1) {
        Ok(()) => Ok(reply(StatusCode::OK, &id, &mut s, app.budget)),
        Err(Blocked::OutOfRange(m)) | Err(Blocked::Other(m)) => Err(ApiError::unprocessable(m)),
        Err(Blocked::Violation { i, j, k, preview, message }) => Err(ApiError {
            status: StatusCode::CONFLICT,
            body: json!({
                "error": message,
                "violation": {"i": i, "j": j, "k": k},
                "preview": preview,
            }),
        }),
    }
}

async fn undo(State(app): State<AppState>, Path(id): Path<String>) -> ApiResult {
    let s = app.session(&id)?;
    let mut s = s.lock().unwrap();
    if !s.undo() {
        return Err(ApiError::new(StatusCode::CONFLICT, "nothing to undo"));
    }
    Ok(reply(StatusCode::OK, &id, &mut s, app.budget))
}

#[derive(Deserialize)]
struct ExportQuery {
    format: Option<String>,
}

async fn export(State(app): State<AppState>, Path(id): Path<String>, Query(query): Query<ExportQuery>) -> ApiResult {
    let s = app.session(&id)?;
    let s = s.lock().unwrap();
    match query.format.as_deref().unwrap_or("json") {
        "json" => Ok(Json(json!({
            "initial": s.initial,
            "history": s.sequence().iter().map(|k| k + 1).collect::<Vec<_>>(),
            "quiver": s.current,
        }))
        .into_response()),
        "dot" => Ok(([(header::CONTENT_TYPE, "text/vnd.graphviz")], s.current.to_dot()).into_response()),
        other => Err(ApiError::unprocessable(format!("unknown format {other:?}; use json or dot"))),
    }
}

/// Serve on `addr` until interrupted.
pub async fn serve(addr: &str, state: AppState) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(state))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
