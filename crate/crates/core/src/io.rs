//! Complex file formats.
//!
//! Text: the first non-comment line is the ground size, every further
//! nonempty line is one facet as space-separated labels; `#` starts a
//! comment. JSON: `{"vertices": n, "facets": [[...], ...]}`, with an optional
//! `"void": true` for the complex without faces.

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: u32,
    pub facets: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub void: bool,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(k: &SimplicialComplex) -> Self {
        ComplexJson {
            vertices: k.ground_size(),
            facets: k
                .facets()
                .iter()
                .filter(|f| !f.is_empty())
                .map(|f| f.vertices().to_vec())
                .collect(),
            void: k.is_void(),
        }
    }
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(j: ComplexJson) -> Result<Self> {
        if j.void {
            if !j.facets.is_empty() {
                return Err(Error::Parse { line: 1, message: "void complex with facets".into() });
            }
            return Ok(SimplicialComplex::void(j.vertices));
        }
        if j.vertices == 0 {
            return Err(Error::Parse { line: 1, message: "ground size must be positive".into() });
        }
        SimplicialComplex::from_facets(j.vertices, j.facets.into_iter().map(Face::new))
            .map_err(|e| Error::Parse { line: 1, message: e.to_string() })
    }
}

/// Parse either format; JSON is recognised by a leading `{`.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    if text.trim_start().starts_with('{') {
        let j: ComplexJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        return j.try_into();
    }
    parse_text(text)
}

fn parse_text(text: &str) -> Result<SimplicialComplex> {
    let mut ground: Option<u32> = None;
    let mut facets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let numbers = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| Error::Parse {
                    line,
                    message: format!("`{tok}` is not a vertex label"),
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        match ground {
            None => {
                if numbers.len() != 1 || numbers[0] == 0 {
                    return Err(Error::Parse {
                        line,
                        message: "expected a positive ground size".into(),
                    });
                }
                ground = Some(numbers[0]);
            }
            Some(n) => {
                if let Some(&v) = numbers.iter().find(|&&v| v == 0 || v > n) {
                    return Err(Error::Parse {
                        line,
                        message: format!("vertex {v} is outside 1..={n}"),
                    });
                }
                facets.push(Face::new(numbers));
            }
        }
    }
    let n = ground.ok_or(Error::Parse { line: 1, message: "missing ground size".into() })?;
    SimplicialComplex::from_facets(n, facets)
}

/// Canonical text form: ground size, then facets in lexicographic order.
/// The void complex has no text form; it is emitted like `{∅}`.
pub fn emit_text(k: &SimplicialComplex) -> String {
    let mut out = format!("{}\n", k.ground_size());
    for f in k.facets().iter().filter(|f| !f.is_empty()) {
        let labels: Vec<String> = f.vertices().iter().map(u32::to_string).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

pub fn emit_json(k: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexJson::from(k)).expect("complex serializes")
}

/// `emit(parse(text))`.
pub fn normalize(text: &str) -> Result<String> {
    Ok(emit_text(&parse_complex(text)?))
}
