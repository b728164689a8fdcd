//! HTTP front end for floating-point Wachspress coordinates.
//!
//! | route | body | reply |
//! |---|---|---|
//! | `POST /v1/coordinates` | `{polygon, points}` | `{coords, warnings}` |
//! | `POST /v1/deform` | `{source, target, points}` | `{points, warnings}` |
//! | `GET`/`HEAD /v1/health` | | `{status, version}` |
//!
//! Points are `[x, y]` pairs. Errors are `{"error": "..."}` with status 400
//! (unparseable body), 404 (unknown route) or 422 (unusable polygon, length
//! mismatch). A row or point is `null` where the coordinate denominator
//! vanishes, with a matching warning.

use std::net::SocketAddr;

use axum::body::Bytes;
use axum::http::{StatusCode, Uri};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use tower_http::cors::CorsLayer;
use wachspress::coordinates::{check_float_polygon, CoordError, NumericCoordinates};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoordRequest {
    pub polygon: Vec<[f64; 2]>,
    pub points: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoordResponse {
    pub coords: Vec<Option<Vec<f64>>>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeformRequest {
    pub source: Vec<[f64; 2]>,
    pub target: Vec<[f64; 2]>,
    pub points: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeformResponse {
    pub points: Vec<Option<[f64; 2]>>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Health {
    pub status: String,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApiError {
    pub status: StatusCode,
    pub message: String,
}

impl ApiError {
    fn unprocessable(message: impl Into<String>) -> Self {
        ApiError {
            status: StatusCode::UNPROCESSABLE_ENTITY,
            message: message.into(),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (
            self.status,
            Json(serde_json::json!({ "error": self.message })),
        )
            .into_response()
    }
}

struct Evaluated {
    rows: Vec<Option<Vec<f64>>>,
    warnings: Vec<String>,
}

fn evaluate(polygon: &[[f64; 2]], points: &[[f64; 2]]) -> Result<Evaluated, ApiError> {
    let info = check_float_polygon(polygon).map_err(|e| ApiError::unprocessable(e.to_string()))?;
    if let Some(k) = points
        .iter()
        .position(|p| !p[0].is_finite() || !p[1].is_finite())
    {
        return Err(ApiError::unprocessable(format!("point {k} is not finite")));
    }
    let mut warnings = Vec::new();
    if !info.convex {
        warnings.push(
            "polygon is not convex; coordinates may be negative or undefined inside".to_string(),
        );
    }
    let coords = NumericCoordinates::new(polygon);
    let rows = points
        .iter()
        .enumerate()
        .map(|(k, &p)| match coords.eval(p) {
            Ok(beta) => {
                if info.convex && beta.iter().any(|&b| b < -1e-12) {
                    warnings.push(format!("point {k} lies outside the polygon"));
                }
                Some(beta)
            }
            Err(CoordError::DenominatorNearZero(..)) => {
                warnings.push(format!("point {k}: coordinate denominator vanishes"));
                None
            }
            Err(e) => {
                warnings.push(format!("point {k}: {e}"));
                None
            }
        })
        .collect();
    Ok(Evaluated { rows, warnings })
}

pub fn handle_coordinates(req: &CoordRequest) -> Result<CoordResponse, ApiError> {
    let Evaluated { rows, warnings } = evaluate(&req.polygon, &req.points)?;
    Ok(CoordResponse {
        coords: rows,
        warnings,
    })
}

pub fn handle_deform(req: &DeformRequest) -> Result<DeformResponse, ApiError> {
    if req.target.len() != req.source.len() {
        return Err(ApiError::unprocessable(
            CoordError::LengthMismatch {
                expected: req.source.len(),
                got: req.target.len(),
            }
            .to_string(),
        ));
    }
    if req.target.iter().flatten().any(|v| !v.is_finite()) {
        return Err(ApiError::unprocessable(
            "target has a non-finite coordinate",
        ));
    }
    let Evaluated { rows, warnings } = evaluate(&req.source, &req.points)?;
    let points = rows
        .into_iter()
        .map(|row| {
            row.map(|beta| {
                beta.iter()
                    .zip(&req.target)
                    .fold([0.0, 0.0], |acc, (w, t)| {
                        [acc[0] + w * t[0], acc[1] + w * t[1]]
                    })
            })
        })
        .collect();
    Ok(DeformResponse { points, warnings })
}

pub fn handle_health() -> Health {
    Health {
        status: "ok".into(),
        version: VERSION.into(),
    }
}

fn parse<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError {
        status: StatusCode::BAD_REQUEST,
        message: format!("malformed JSON: {e}"),
    })
}

async fn coordinates(body: Bytes) -> Result<Json<CoordResponse>, ApiError> {
    handle_coordinates(&parse(&body)?).map(Json)
}

async fn deform(body: Bytes) -> Result<Json<DeformResponse>, ApiError> {
    handle_deform(&parse(&body)?).map(Json)
}

async fn health() -> Json<Health> {
    Json(handle_health())
}

async fn not_found(uri: Uri) -> ApiError {
    ApiError {
        status: StatusCode::NOT_FOUND,
        message: format!("no route for {}", uri.path()),
    }
}

async fn method_not_allowed() -> ApiError {
    ApiError {
        status: StatusCode::METHOD_NOT_ALLOWED,
        message: "method not allowed".into(),
    }
}

/// The full API with permissive CORS.
pub fn router() -> Router {
    Router::new()
        .route("/v1/coordinates", post(coordinates))
        .route("/v1/deform", post(deform))
        .route("/v1/health", get(health))
        .fallback(not_found)
        .method_not_allowed_fallback(method_not_allowed)
        .layer(CorsLayer::permissive())
}

/// Serves [`router`] on `addr` until the process ends.
pub async fn serve(addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router()).await
}
