//! Input schemas: graphs, linear spaces, camera systems, and plain ideals.
//!
//! Everything arrives as JSON with exact integer entries; polynomials use
//! the text grammar of the core parser.  Loaders return position-carrying
//! errors so the driver can report malformed files precisely.

use csgin_core::closure::LinearSpace;
use csgin_core::edge::Graph;
use csgin_core::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use csgin_core::multiview::CameraSystem;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use sha2::{Digest, Sha256};
use std::fmt;
use std::fs;
use std::path::Path;

#[derive(Debug)]
pub enum InputError {
    Io {
        path: String,
        message: String,
    },
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    Invalid {
        message: String,
    },
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io { path, message } => write!(f, "{path}: {message}"),
            InputError::Json { path, line, column, message } => {
                write!(f, "{path}:{line}:{column}: {message}")
            }
            InputError::Invalid { message } => write!(f, "{message}"),
        }
    }
}

impl InputError {
    pub fn invalid(message: impl Into<String>) -> InputError {
        InputError::Invalid { message: message.into() }
    }
}

/// Coefficient field selector: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<FieldSpec, InputError> {
        if s == "Q" {
            return Ok(FieldSpec::Q);
        }
        if s == "Fp" {
            return Ok(FieldSpec::Fp(DEFAULT_PRIME));
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| InputError::invalid(format!("bad field modulus in {s:?}")))?;
            PrimeField::new(p)
                .map_err(|e| InputError::invalid(format!("{e}")))?;
            return Ok(FieldSpec::Fp(p));
        }
        Err(InputError::invalid(format!(
            "unknown field {s:?}; expected Q, Fp, or Fp:<prime>"
        )))
    }

    pub fn label(&self) -> String {
        match self {
            FieldSpec::Q => "Q".into(),
            FieldSpec::Fp(p) => format!("Fp:{p}"),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Fp(DEFAULT_PRIME)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphInput {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphInput {
    pub fn to_graph(&self) -> Result<Graph, InputError> {
        Graph::new(self.n, &self.edges).map_err(|e| InputError::invalid(format!("{e}")))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosureInput {
    pub blocks: Vec<u32>,
    pub basis: Vec<Vec<i64>>,
    #[serde(default)]
    pub field: Option<String>,
}

impl ClosureInput {
    pub fn field_spec(&self, flag: Option<FieldSpec>) -> Result<FieldSpec, InputError> {
        resolve_field(flag, self.field.as_deref())
    }

    pub fn space<F: Field>(&self, field: F) -> Result<LinearSpace<F>, InputError> {
        let rows: Vec<&[i64]> = self.basis.iter().map(|r| r.as_slice()).collect();
        LinearSpace::from_i64(field, &self.blocks, &rows)
            .map_err(|e| InputError::invalid(format!("{e}")))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiviewInput {
    pub n: usize,
    pub cameras: Vec<Vec<Vec<i64>>>,
}

impl MultiviewInput {
    pub fn system<F: Field>(&self, field: F) -> Result<CameraSystem<F>, InputError> {
        use csgin_core::matrix::Mat;
        let cameras: Vec<Mat<F>> = self
            .cameras
            .iter()
            .map(|rows| {
                let rows: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
                Mat::from_i64(field.clone(), &rows)
            })
            .collect();
        CameraSystem::new(field, self.n, cameras).map_err(|e| InputError::invalid(format!("{e}")))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealInput {
    pub blocks: Vec<u32>,
    pub generators: Vec<String>,
    #[serde(default)]
    pub field: Option<String>,
}

impl IdealInput {
    pub fn field_spec(&self, flag: Option<FieldSpec>) -> Result<FieldSpec, InputError> {
        resolve_field(flag, self.field.as_deref())
    }
}

/// An explicit --field wins over the file's own field; the default prime
/// field is used when neither is present.
fn resolve_field(flag: Option<FieldSpec>, file: Option<&str>) -> Result<FieldSpec, InputError> {
    match (flag, file) {
        (Some(f), _) => Ok(f),
        (None, Some(s)) => FieldSpec::parse(s),
        (None, None) => Ok(FieldSpec::default()),
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    let out = h.finalize();
    let mut s = String::with_capacity(64);
    for b in out {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

fn read_file(path: &Path) -> Result<Vec<u8>, InputError> {
    fs::read(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Loads and parses a JSON input, returning the value together with the
/// digest of the raw bytes.
pub fn load_json<T: DeserializeOwned>(path: &Path) -> Result<(T, String), InputError> {
    let bytes = read_file(path)?;
    let value: T = serde_json::from_slice(&bytes).map_err(|e| InputError::Json {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok((value, digest(&bytes)))
}

/// Graph files are either JSON or plain edge-list text with one `i j`
/// pair per line; the vertex count of a text graph is the largest label.
pub fn load_graph(path: &Path) -> Result<(Graph, String), InputError> {
    let bytes = read_file(path)?;
    let d = digest(&bytes);
    let text = String::from_utf8_lossy(&bytes);
    if text.trim_start().starts_with('{') {
        let input: GraphInput = serde_json::from_slice(&bytes).map_err(|e| InputError::Json {
            path: path.display().to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        return Ok((input.to_graph()?, d));
    }
    Ok((parse_edge_list(&text)?, d))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize, InputError> {
            tok.and_then(|t| t.parse().ok()).ok_or_else(|| {
                InputError::invalid(format!("line {}: expected \"i j\"", lineno + 1))
            })
        };
        let a = parse(it.next())?;
        let b = parse(it.next())?;
        if it.next().is_some() {
            return Err(InputError::invalid(format!(
                "line {}: expected \"i j\"",
                lineno + 1
            )));
        }
        n = n.max(a).max(b);
        edges.push((a, b));
    }
    Graph::new(n, &edges).map_err(|e| InputError::invalid(format!("{e}")))
}

/// Materialized coefficient fields for dispatching generic code.
pub enum AnyField {
    Q(Rationals),
    Fp(PrimeField),
}

impl FieldSpec {
    pub fn build(&self) -> AnyField {
        match self {
            FieldSpec::Q => AnyField::Q(Rationals),
            FieldSpec::Fp(p) => {
                AnyField::Fp(PrimeField::new(*p).expect("validated at parse time"))
            }
        }
    }
}
