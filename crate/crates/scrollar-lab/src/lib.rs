//! Command implementations behind the `scrollar-lab` binary. Every command
//! returns a JSON document; the binary only parses arguments, prints and
//! maps errors to exit codes.

pub mod analyze;
pub mod curve;
pub mod gen;
pub mod predict;
pub mod verify;

use serde_json::{json, Value};
use thiserror::Error;

use scrollar::bhargava::BhargavaError;
use scrollar::exactalg::AlgError;
use scrollar::funfield::FunError;
use scrollar::predict::{PredictError, Rational, ScrollarProfile};
use scrollar::resolvent::ResolventError;
use scrollar::symrep::{Partition, SymError};

pub const SCHEMA: &str = "scrollar-lab/1";

#[derive(Debug, Error)]
pub enum LabError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Wild(String),
    #[error("{0}")]
    Reducible(String),
    #[error("{0}")]
    Failed(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl LabError {
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Usage(_) => 2,
            LabError::Wild(_) => 3,
            LabError::Reducible(_) => 4,
            LabError::Failed(_) | LabError::Io { .. } => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;

impl From<FunError> for LabError {
    fn from(e: FunError) -> Self {
        let msg = e.to_string();
        match e {
            FunError::WildCharacteristic { .. } | FunError::Wild => LabError::Wild(msg),
            FunError::Reducible | FunError::NotGeometricallyIrreducible(_) | FunError::Parity => {
                LabError::Reducible(msg)
            }
            FunError::DegreeTooSmall | FunError::NotMonic | FunError::Inseparable => LabError::Usage(msg),
            FunError::Alg(AlgError::Parse(_) | AlgError::BadModulus(_)) => LabError::Usage(msg),
            _ => LabError::Failed(msg),
        }
    }
}

impl From<ResolventError> for LabError {
    fn from(e: ResolventError) -> Self {
        match e {
            ResolventError::Fun(f) => f.into(),
            ResolventError::Sym(s) => s.into(),
            other => LabError::Failed(other.to_string()),
        }
    }
}

impl From<BhargavaError> for LabError {
    fn from(e: BhargavaError) -> Self {
        match e {
            BhargavaError::Fun(f) => f.into(),
            BhargavaError::Resolvent(r) => r.into(),
            BhargavaError::Degree { .. } | BhargavaError::Depth { .. } => LabError::Usage(e.to_string()),
            other => LabError::Failed(other.to_string()),
        }
    }
}

impl From<SymError> for LabError {
    fn from(e: SymError) -> Self {
        LabError::Usage(e.to_string())
    }
}

impl From<PredictError> for LabError {
    fn from(e: PredictError) -> Self {
        match e {
            PredictError::IndexOutOfRange { .. } | PredictError::Sym(_) => LabError::Usage(e.to_string()),
            other => LabError::Failed(other.to_string()),
        }
    }
}

impl From<AlgError> for LabError {
    fn from(e: AlgError) -> Self {
        match e {
            AlgError::Parse(_) | AlgError::BadModulus(_) => LabError::Usage(e.to_string()),
            other => LabError::Failed(other.to_string()),
        }
    }
}

/// a·g + b, rendered as "3g+15", "g+1", "-g", "7".
pub fn linear_in_g(a: i64, b: i64) -> String {
    let head = match a {
        0 => String::new(),
        1 => "g".to_string(),
        -1 => "-g".to_string(),
        _ => format!("{a}g"),
    };
    match (head.is_empty(), b) {
        (true, _) => b.to_string(),
        (false, 0) => head,
        (false, b) if b > 0 => format!("{head}+{b}"),
        (false, b) => format!("{head}{b}"),
    }
}

/// A quantity affine in g, sampled at g = 0 and g = 1.
pub fn affine_json<F: Fn(i64) -> std::result::Result<i64, LabError>>(f: F, g: Option<i64>) -> Result<Value> {
    let b = f(0)?;
    let a = f(1)? - b;
    let mut v = json!({ "coefficient": a, "constant": b, "formula": linear_in_g(a, b) });
    if let Some(g) = g {
        v["value"] = json!(f(g)?);
    }
    Ok(v)
}

pub fn rational_json(r: Rational) -> Value {
    json!(r.to_string())
}

pub fn profile_json(p: &ScrollarProfile) -> Value {
    json!(p.values())
}

pub fn partition_json(p: &Partition) -> Value {
    json!(p.to_string())
}

pub fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}
