//! Loading of system, certificate and polytope files.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use nsatz_core::infix::parse_polynomial;
use nsatz_core::io::{CertificateJson, PolynomialJson, PolytopeJson};
use nsatz_core::polytope::MAX_DIM;
use nsatz_core::{Certificate, Polytope, SparsePolynomial};

/// Error raised while reading or validating an input file; maps to exit code 1.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn input_error(path: &Path, msg: impl std::fmt::Display) -> anyhow::Error {
    anyhow!(InputError(format!("{}: {msg}", path.display())))
}

/// Reads and deserializes a JSON file, reporting the failing field path
/// together with line and column.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| input_error(path, e))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        if field == "." || field == "?" {
            input_error(path, inner)
        } else {
            input_error(path, format!("field `{field}`: {inner}"))
        }
    })
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PolyInput {
    Json(PolynomialJson),
    Infix(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFileJson {
    variables: Vec<String>,
    generators: Vec<PolyInput>,
    target: PolyInput,
    #[serde(default)]
    polytopes: BTreeMap<String, PolytopeJson>,
    #[serde(default)]
    generator_polytopes: Option<Vec<String>>,
}

/// A validated system file.
#[derive(Debug, Clone)]
pub struct System {
    pub variables: Vec<String>,
    pub generators: Vec<SparsePolynomial>,
    pub target: SparsePolynomial,
    pub polytopes: BTreeMap<String, Polytope>,
    pub generator_polytopes: Option<Vec<String>>,
}

impl System {
    pub fn load(path: &Path, parse_infix: bool) -> Result<System> {
        let raw: SystemFileJson = read_json(path)?;
        let err = |msg: String| input_error(path, msg);
        let n = raw.variables.len();
        if n == 0 || n > MAX_DIM {
            return Err(err(format!(
                "field `variables`: expected 1 to {MAX_DIM} names, got {n}"
            )));
        }
        let mut seen = BTreeSet::new();
        for (i, v) in raw.variables.iter().enumerate() {
            let valid = v
                .chars()
                .next()
                .is_some_and(|c| c.is_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !valid {
                return Err(err(format!(
                    "field `variables[{i}]`: invalid variable name {v:?}"
                )));
            }
            if !seen.insert(v) {
                return Err(err(format!(
                    "field `variables[{i}]`: duplicate variable name {v:?}"
                )));
            }
        }
        if raw.generators.is_empty() {
            return Err(err(
                "field `generators`: at least one generator is required".into(),
            ));
        }
        let load = |field: String, p: &PolyInput| -> Result<SparsePolynomial> {
            let poly = match p {
                PolyInput::Json(j) => j.to_polynomial(),
                PolyInput::Infix(s) if parse_infix => parse_polynomial(s, &raw.variables),
                PolyInput::Infix(_) => {
                    return Err(err(format!(
                        "field `{field}`: infix polynomials require --parse-infix"
                    )))
                }
            }
            .map_err(|e| err(format!("field `{field}`: {e}")))?;
            if poly.dim() != n {
                return Err(err(format!(
                    "field `{field}`: polynomial has dimension {}, expected {n}",
                    poly.dim()
                )));
            }
            Ok(poly)
        };
        let generators = raw
            .generators
            .iter()
            .enumerate()
            .map(|(j, g)| load(format!("generators[{j}]"), g))
            .collect::<Result<Vec<_>>>()?;
        let target = load("target".into(), &raw.target)?;
        let mut polytopes = BTreeMap::new();
        for (name, pj) in &raw.polytopes {
            let p = pj
                .to_polytope()
                .map_err(|e| err(format!("field `polytopes.{name}`: {e}")))?;
            if p.dim() != n {
                return Err(err(format!(
                    "field `polytopes.{name}`: dimension {}, expected {n}",
                    p.dim()
                )));
            }
            polytopes.insert(name.clone(), p);
        }
        if let Some(names) = &raw.generator_polytopes {
            if names.len() != generators.len() {
                return Err(err(format!(
                    "field `generator_polytopes`: {} names for {} generators",
                    names.len(),
                    generators.len()
                )));
            }
            if let Some(missing) = names.iter().find(|x| !polytopes.contains_key(*x)) {
                return Err(err(format!(
                    "field `generator_polytopes`: unknown polytope {missing:?}"
                )));
            }
        }
        Ok(System {
            variables: raw.variables,
            generators,
            target,
            polytopes,
            generator_polytopes: raw.generator_polytopes,
        })
    }

    pub fn dim(&self) -> usize {
        self.variables.len()
    }

    pub fn named_polytope(&self, name: &str) -> Result<&Polytope> {
        self.polytopes.get(name).ok_or_else(|| {
            anyhow!(InputError(format!(
                "no polytope named {name:?} in the system file"
            )))
        })
    }

    pub fn show(&self, p: &SparsePolynomial) -> String {
        p.display_with(&self.variables)
    }
}

pub fn load_certificate(path: &Path) -> Result<Certificate> {
    let raw: CertificateJson = read_json(path)?;
    raw.to_certificate().map_err(|e| input_error(path, e))
}

pub fn load_polytope(path: &Path) -> Result<Polytope> {
    let raw: PolytopeJson = read_json(path)?;
    raw.to_polytope().map_err(|e| input_error(path, e))
}

/// Writes pretty JSON followed by a newline.
pub fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn ensure(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        bail!(InputError(msg.into()))
    }
}
