//! JSON certificate files and the newline-delimited set sidecar format.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::ExponentRow;
use crate::verify::Verdict;

pub const SCHEMA_VERSION: &str = "1";

/// Sets larger than this go to a sidecar file instead of inline JSON.
pub const INLINE_LIMIT: usize = 10_000;

/// The on-disk artifact every CLI command emits. Round-trips bit-exactly
/// through [`CertificateFile::to_json`] / [`CertificateFile::from_json`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CertificateFile {
    pub schema_version: String,
    /// Echo of the invoking command line.
    pub command: String,
    /// Canonical rendering of the object the certificate is about.
    pub spec: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elements: Option<Vec<u64>>,
    /// Path to the sidecar set file when the elements are not inline.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub set_path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub set_digest: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub exponents: Vec<ExponentRow>,
    /// Stage name to elapsed milliseconds.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub timings_ms: BTreeMap<String, u64>,
    pub tool_version: String,
}

impl CertificateFile {
    pub fn new(command: impl Into<String>, spec: impl Into<String>) -> Self {
        CertificateFile {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            spec: spec.into(),
            elements: None,
            set_path: None,
            verdict: None,
            set_digest: None,
            exponents: Vec::new(),
            timings_ms: BTreeMap::new(),
            tool_version: crate::TOOL_VERSION.into(),
        }
    }

    /// Attach elements inline when small enough, otherwise record the
    /// sidecar path the caller wrote them to.
    pub fn with_elements(mut self, elements: &[u64], sidecar: Option<&Path>) -> Self {
        if elements.len() <= INLINE_LIMIT {
            self.elements = Some(elements.to_vec());
        } else {
            self.set_path = sidecar.map(|p| p.display().to_string());
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cert: CertificateFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if cert.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported certificate schema version {:?}",
                cert.schema_version
            )));
        }
        Ok(cert)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

/// Write a set file: a `#`-prefixed header carrying the canonical spec
/// rendering, then one decimal element per line, ascending.
pub fn write_set_file(path: &Path, header: &str, elements: &[u64]) -> Result<()> {
    let mut out = String::with_capacity(elements.len() * 8 + header.len() + 4);
    out.push_str("# ");
    out.push_str(header);
    out.push('\n');
    for &v in elements {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    std::fs::write(path, out).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Read a set file; returns the header (without the `#` marker) and the
/// elements, which must be ascending positive decimals.
pub fn read_set_file(path: &Path) -> Result<(String, Vec<u64>)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_set_file(&text)
}

pub fn parse_set_file(text: &str) -> Result<(String, Vec<u64>)> {
    let mut header = String::new();
    let mut elements = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if lineno == 0 {
                header = rest.trim().to_string();
            }
            continue;
        }
        let v: u64 = line
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: not a decimal integer: {line:?}", lineno + 1)))?;
        elements.push(v);
    }
    if elements.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parse("set file elements must be strictly ascending".into()));
    }
    if elements.first().is_some_and(|&v| v == 0) {
        return Err(Error::Parse("set file elements must be positive".into()));
    }
    Ok((header, elements))
}
