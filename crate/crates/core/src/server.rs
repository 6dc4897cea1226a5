//! HTTP API over a built scene.
//!
//! Readers get a shared snapshot of the scene and its pre-serialized body;
//! arrangement updates swap in a new snapshot atomically after the
//! arrangement file has been written.

use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use axum::body::Bytes;
use axum::extract::{Path as UrlPath, State};
use axum::http::{header, StatusCode};
use axum::response::{Html, IntoResponse, Response};
use axum::routing::get;
use axum::Router;
use log::{info, warn};
use serde_json::json;
use tower_http::services::ServeDir;

use crate::canonical::to_canonical_string;
use crate::error::{Error, Result};
use crate::layout::{Arrangement, LayoutError};
use crate::parser::ClassId;
use crate::scene::{build_from_dir, Scene};
use crate::wallpaper::WALLS_PER_ROOM;

pub const DEFAULT_PORT: u16 = 8420;
pub const ARRANGEMENT_FILE: &str = "arrangement.json";

const FALLBACK_INDEX: &str = r#"<!doctype html>
<html><head><meta charset="utf-8"><title>codepark</title></head>
<body style="background:#1E1E1E;color:#D4D4D4;font-family:monospace">
<p>codepark is serving a scene. No viewer assets were configured; the API lives under <a href="/api/scene" style="color:#569CD6">/api/scene</a>.</p>
</body></html>
"#;

struct Snapshot {
    scene: Scene,
    body: Bytes,
}

impl Snapshot {
    fn new(scene: Scene) -> Arc<Snapshot> {
        let body = Bytes::from(scene.to_canonical_json());
        Arc::new(Snapshot { scene, body })
    }
}

pub struct AppState {
    snapshot: RwLock<Arc<Snapshot>>,
    /// Serializes arrangement writers.
    write_lock: tokio::sync::Mutex<()>,
    arrangement_path: PathBuf,
}

/// Where a served scene comes from.
#[derive(Debug, Clone)]
pub enum SceneSource {
    Directory(PathBuf),
    SceneFile(PathBuf),
}

impl SceneSource {
    /// A directory is built; anything else is read as a scene document.
    pub fn from_path(path: impl Into<PathBuf>) -> SceneSource {
        let path = path.into();
        if path.is_dir() {
            SceneSource::Directory(path)
        } else {
            SceneSource::SceneFile(path)
        }
    }

    pub fn default_arrangement_path(&self) -> PathBuf {
        match self {
            SceneSource::Directory(dir) => dir.join(ARRANGEMENT_FILE),
            SceneSource::SceneFile(file) => file
                .parent()
                .map_or_else(|| PathBuf::from(ARRANGEMENT_FILE), |p| p.join(ARRANGEMENT_FILE)),
        }
    }

    pub fn load(&self) -> Result<Scene> {
        match self {
            SceneSource::Directory(dir) => Ok(build_from_dir(dir, None)?.0),
            SceneSource::SceneFile(file) => Scene::load(file),
        }
    }
}

impl AppState {
    /// Wrap `scene`, applying a previously saved arrangement from
    /// `arrangement_path` when it still fits.
    pub fn new(scene: Scene, arrangement_path: PathBuf) -> AppState {
        let scene = match read_arrangement(&arrangement_path) {
            Ok(Some(mut saved)) => {
                saved.positions.retain(|id, _| {
                    let known = scene.layout.room(id).is_some();
                    if !known {
                        warn!("{}: dropping unknown class {id}", arrangement_path.display());
                    }
                    known
                });
                match scene.with_arrangement(&saved) {
                    Ok(arranged) => {
                        info!("applied arrangement from {}", arrangement_path.display());
                        arranged
                    }
                    Err(e) => {
                        warn!("{}: {e}; using the computed layout", arrangement_path.display());
                        scene
                    }
                }
            }
            Ok(None) => scene,
            Err(e) => {
                warn!("{e}; using the computed layout");
                scene
            }
        };
        AppState {
            snapshot: RwLock::new(Snapshot::new(scene)),
            write_lock: tokio::sync::Mutex::new(()),
            arrangement_path,
        }
    }

    pub fn scene(&self) -> Scene {
        self.current().scene.clone()
    }

    pub fn arrangement_path(&self) -> &Path {
        &self.arrangement_path
    }

    fn current(&self) -> Arc<Snapshot> {
        self.snapshot.read().expect("snapshot lock poisoned").clone()
    }
}

fn read_arrangement(path: &Path) -> Result<Option<Arrangement>> {
    match std::fs::read_to_string(path) {
        Ok(text) => Ok(Some(serde_json::from_str(&text)?)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(source) => Err(Error::Io {
            path: path.to_path_buf(),
            source,
        }),
    }
}

/// Write via a temporary file so readers never see a torn document.
fn write_arrangement(path: &Path, arrangement: &Arrangement) -> Result<()> {
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let tmp = path.with_extension("json.tmp");
    std::fs::write(&tmp, to_canonical_string(arrangement)?).map_err(io)?;
    std::fs::rename(&tmp, path).map_err(io)
}

pub fn router(state: Arc<AppState>, assets: Option<PathBuf>) -> Router {
    let mut app = Router::new()
        .route("/", get(index))
        .route("/api/scene", get(get_scene))
        .route("/api/rooms/{class_id}/walls/{wall}", get(get_wall))
        .route("/api/methods/{class_id}", get(get_methods))
        .route("/api/arrangement", get(get_arrangement).put(put_arrangement));
    if let Some(dir) = &assets {
        app = app.nest_service("/assets", ServeDir::new(dir));
    }
    app.with_state(AppShared { state, assets })
}

#[derive(Clone)]
struct AppShared {
    state: Arc<AppState>,
    assets: Option<PathBuf>,
}

fn json_response(status: StatusCode, body: impl Into<axum::body::Body>) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], body.into()).into_response()
}

fn error_response(status: StatusCode, value: serde_json::Value) -> Response {
    json_response(status, to_canonical_string(&value).expect("json value serializes"))
}

fn not_found(what: String) -> Response {
    error_response(StatusCode::NOT_FOUND, json!({ "error": "not-found", "message": what }))
}

async fn index(State(app): State<AppShared>) -> Response {
    if let Some(dir) = &app.assets {
        if let Ok(page) = tokio::fs::read_to_string(dir.join("index.html")).await {
            return Html(page).into_response();
        }
    }
    Html(FALLBACK_INDEX).into_response()
}

async fn get_scene(State(app): State<AppShared>) -> Response {
    json_response(StatusCode::OK, app.state.current().body.clone())
}

async fn get_wall(State(app): State<AppShared>, UrlPath((class_id, wall)): UrlPath<(String, String)>) -> Response {
    let snap = app.state.current();
    let id = ClassId(class_id);
    let Some(walls) = snap.scene.walls.get(&id) else {
        return not_found(format!("unknown class {id}"));
    };
    match wall.parse::<usize>() {
        Ok(w) if w < WALLS_PER_ROOM => json_response(StatusCode::OK, to_canonical_string(&walls[w]).expect("wall serializes")),
        _ => not_found(format!("no wall {wall}; walls are 0..{}", WALLS_PER_ROOM - 1)),
    }
}

async fn get_methods(State(app): State<AppShared>, UrlPath(class_id): UrlPath<String>) -> Response {
    let snap = app.state.current();
    let id = ClassId(class_id);
    match snap.scene.classes.get(&id) {
        Some(info) => json_response(StatusCode::OK, to_canonical_string(&info.methods).expect("methods serialize")),
        None => not_found(format!("unknown class {id}")),
    }
}

async fn get_arrangement(State(app): State<AppShared>) -> Response {
    let snap = app.state.current();
    let body = to_canonical_string(&Arrangement::of_layout(&snap.scene.layout)).expect("arrangement serializes");
    json_response(StatusCode::OK, body)
}

async fn put_arrangement(State(app): State<AppShared>, body: Bytes) -> Response {
    let arrangement: Arrangement = match serde_json::from_slice(&body) {
        Ok(a) => a,
        Err(e) => {
            return error_response(StatusCode::BAD_REQUEST, json!({ "error": "malformed", "message": e.to_string() }));
        }
    };
    let state = &app.state;
    let _guard = state.write_lock.lock().await;
    let current = state.current();
    let next = match current.scene.with_arrangement(&arrangement) {
        Ok(scene) => scene,
        Err(Error::Layout(e)) => return layout_rejection(e),
        Err(e) => return error_response(StatusCode::INTERNAL_SERVER_ERROR, json!({ "error": "internal", "message": e.to_string() })),
    };
    let mut saved = Arrangement::of_layout(&next.layout);
    saved.saved_at = Some(chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
    if let Err(e) = write_arrangement(&state.arrangement_path, &saved) {
        return error_response(StatusCode::INTERNAL_SERVER_ERROR, json!({ "error": "persist", "message": e.to_string() }));
    }
    let snap = Snapshot::new(next);
    let layout = to_canonical_string(&snap.scene.layout).expect("layout serializes");
    *state.snapshot.write().expect("snapshot lock poisoned") = snap;
    json_response(StatusCode::OK, layout)
}

fn layout_rejection(e: LayoutError) -> Response {
    let message = e.to_string();
    let body = match e {
        LayoutError::Collisions(violations) => json!({ "error": "collisions", "message": message, "violations": violations }),
        LayoutError::UnknownClasses(ids) => json!({ "error": "unknown-classes", "message": message, "classes": ids }),
        _ => json!({ "error": "invalid-arrangement", "message": message }),
    };
    error_response(StatusCode::UNPROCESSABLE_ENTITY, body)
}

/// Serve until ctrl-c.
pub async fn serve(listener: tokio::net::TcpListener, app: Router) -> std::io::Result<()> {
    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
