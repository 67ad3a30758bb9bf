use std::fs;
use std::io::Write;
use std::path::Path;

use confplan_core::Error;
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Non-zero outcomes of a command.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    /// The report has already been printed.
    Collision,
    Uncovered(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Collision => 2,
            Failure::Uncovered(_) => 3,
        }
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            Failure::Usage(m) | Failure::Uncovered(m) => Some(m),
            Failure::Collision => None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Uncovered(m) => Failure::Uncovered(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable value")
}

pub fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let mut text = to_json(value);
    text.push('\n');
    write_text(path, &text)
}

/// Writes a line to stdout; a closed pipe is not an error.
pub fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}").and_then(|_| out.flush());
}

pub fn print_json<T: Serialize>(value: &T) {
    emit(&to_json(value));
}

/// `CONFPLAN_EPS` if set, else the default tolerance.
pub fn env_eps() -> Result<f64, Failure> {
    match std::env::var("CONFPLAN_EPS") {
        Ok(v) => parse_eps(&v).map_err(|e| Failure::Usage(format!("CONFPLAN_EPS: {e}"))),
        Err(_) => Ok(confplan_core::collision::DEFAULT_EPS),
    }
}

pub fn parse_eps(v: &str) -> Result<f64, String> {
    let eps: f64 = v.trim().parse().map_err(|e| format!("`{v}`: {e}"))?;
    check_eps(eps)
}

pub fn check_eps(eps: f64) -> Result<f64, String> {
    if eps.is_finite() && eps >= 0.0 {
        Ok(eps)
    } else {
        Err(format!("{eps} is not a non-negative tolerance"))
    }
}
