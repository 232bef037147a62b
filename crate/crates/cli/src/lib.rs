//! Problem files in, certificate files out.
//!
//! A problem file is one JSON object with a `task` field and task-specific
//! payload fields; every mathematical value is a string in the expression
//! grammar of `dgal_core::expr`. [`run`] solves it and returns the
//! certificate, [`verify`] rechecks a certificate from its stored fields.
//!
//! Exit codes: 0 success, 1 malformed input, 2 domain error, 3 failed check.

mod schema;
mod tasks;

use std::io::Write;
use std::path::Path;

use serde_json::{json, Map, Value};

pub use tasks::TASKS;

pub const TOOL_VERSION: &str = concat!("dgal ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Domain(dgal_core::Error),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<dgal_core::Error> for CliError {
    fn from(e: dgal_core::Error) -> Self {
        if e.is_input_error() {
            CliError::Malformed(e.to_string())
        } else {
            CliError::Domain(e)
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Malformed(_) | CliError::Io(_) => 1,
            CliError::Domain(_) => 2,
            CliError::VerificationFailed(_) => 3,
        }
    }

    /// Machine-readable description of the failure.
    pub fn to_json(&self) -> Value {
        let (kind, details) = match self {
            CliError::Malformed(_) => ("MalformedInput", Value::Null),
            CliError::Io(_) => ("IoError", Value::Null),
            CliError::VerificationFailed(_) => ("VerificationFailed", Value::Null),
            CliError::Domain(e) => (e.kind(), schema::error_details(e)),
        };
        let mut obj = Map::new();
        obj.insert("kind".into(), kind.into());
        obj.insert("message".into(), self.to_string().into());
        if !details.is_null() {
            obj.insert("details".into(), details);
        }
        json!({ "error": Value::Object(obj) })
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Solves a problem given as JSON text and returns its verified certificate.
pub fn run(problem: &str) -> CliResult<Value> {
    let problem: Value =
        serde_json::from_str(problem).map_err(|e| CliError::Malformed(format!("invalid JSON: {e}")))?;
    let obj = schema::object(&problem, "problem")?;
    let task = schema::string(obj, "task")?;
    let cert = tasks::solve(task, obj)?;
    // every certificate must pass the same check `verify` applies later
    tasks::check(&cert)?;
    Ok(cert)
}

/// Rechecks a certificate given as JSON text.
pub fn verify(certificate: &str) -> CliResult<()> {
    let cert: Value = serde_json::from_str(certificate)
        .map_err(|e| CliError::Malformed(format!("invalid JSON: {e}")))?;
    tasks::check(&cert)
}

/// Output path named in the problem's `options.output`, if any.
pub fn output_option(problem: &str) -> Option<String> {
    let v: Value = serde_json::from_str(problem).ok()?;
    v.get("options")?.get("output")?.as_str().map(str::to_owned)
}

/// Deterministic text of a JSON value: fixed field order, two-space indent,
/// trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Writes through a temporary file in the same directory and renames it into
/// place, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
