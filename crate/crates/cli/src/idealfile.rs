//! Ideal files: a `ring` header followed by one generator per line.
//!
//! ```text
//! # two skew lines
//! ring version=1 p=32003 vars=4
//! x0*x2
//! x0*x3
//! ```
//!
//! A hypersurface ring is given by a trailing `rel=<polynomial>` key, which
//! takes the rest of the header line.

use biliaison_core::modgb::Ideal;
use biliaison_core::ring::{Field, RingContext};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct IdealFile {
    pub ring: RingContext,
    pub generators: Vec<String>,
    pub ideal: Ideal,
    /// Hex SHA-256 of the file contents.
    pub digest: String,
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn header_value<'a>(key: &str, tokens: &[(&'a str, &'a str)]) -> Option<&'a str> {
    tokens.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
}

fn parse_header(line: &str, lineno: usize) -> CliResult<RingContext> {
    let err = |m: String| CliError::Parse(format!("line {lineno}: {m}"));
    let rest = line
        .strip_prefix("ring")
        .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
        .ok_or_else(|| err("expected a `ring` header".into()))?;
    let (keys, rel) = match rest.find("rel=") {
        Some(i) => (&rest[..i], Some(rest[i + 4..].trim())),
        None => (rest, None),
    };
    let mut tokens = Vec::new();
    for tok in keys.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| err(format!("malformed header token `{tok}`")))?;
        if !matches!(k, "version" | "p" | "vars") {
            return Err(err(format!("unknown header key `{k}`")));
        }
        tokens.push((k, v));
    }
    let version: u32 = header_value("version", &tokens)
        .ok_or_else(|| err("missing version tag".into()))?
        .parse()
        .map_err(|_| err("version is not an integer".into()))?;
    if version != FORMAT_VERSION {
        return Err(err(format!("unsupported format version {version}")));
    }
    let p: u32 = header_value("p", &tokens)
        .ok_or_else(|| err("missing p".into()))?
        .parse()
        .map_err(|_| err("p is not an integer".into()))?;
    let vars: usize = header_value("vars", &tokens)
        .ok_or_else(|| err("missing vars".into()))?
        .parse()
        .map_err(|_| err("vars is not an integer".into()))?;
    if !(1..=16).contains(&vars) {
        return Err(err(format!("vars={vars} is out of range")));
    }
    let field = Field::new(p).map_err(|e| err(e.to_string()))?;
    let ring = RingContext::polynomial(field, vars);
    match rel {
        None => Ok(ring),
        Some(text) => {
            let q = ring.parse_homogeneous(text).map_err(|e| err(format!("relation: {e}")))?;
            RingContext::hypersurface(ring.field, vars, q).map_err(|e| CliError::Invalid(e.to_string()))
        }
    }
}

impl IdealFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut ring = None;
        let mut generators = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match &ring {
                None => ring = Some(parse_header(line, i + 1)?),
                Some(r) => {
                    r.parse_homogeneous(line)
                        .map_err(|e| CliError::Parse(format!("line {}: {e}", i + 1)))?;
                    generators.push(line.to_string());
                }
            }
        }
        let ring = ring.ok_or_else(|| CliError::Parse("missing `ring` header".into()))?;
        if generators.is_empty() {
            return Err(CliError::Parse("no generators".into()));
        }
        let refs: Vec<&str> = generators.iter().map(String::as_str).collect();
        let ideal = Ideal::parse(&ring, &refs)?;
        Ok(IdealFile {
            ring,
            generators,
            ideal,
            digest: digest(text),
        })
    }

    pub fn read(path: &std::path::Path) -> CliResult<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

/// Writes `ideal` in the file format.
pub fn render(ideal: &Ideal) -> String {
    let ring = ideal.ring();
    let mut out = format!("ring version={FORMAT_VERSION} p={} vars={}", ring.field.characteristic(), ring.num_vars);
    if let Some(q) = &ring.relation {
        out.push_str(&format!(" rel={}", ring.print(q)));
    }
    out.push('\n');
    for g in ideal.to_strings() {
        out.push_str(&g);
        out.push('\n');
    }
    out
}
