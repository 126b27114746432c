//! File formats: ideal files, complex/graph JSON, sweep specs and the
//! provenance block embedded in every report.
//!
//! Ideal file:
//!
//! ```text
//! # twisted cubic
//! vars: 4
//! order: lex
//! field: QQ
//! X0*X2 - X1^2
//! X0*X3 - X1*X2
//! X1*X3 - X2^2
//! ```
//!
//! Complex file: `{"n": 3, "facets": [[0,1],[1,2],[2,3]]}` or
//! `{"n": 3, "edges": [[0,1],[1,2],[2,3]]}`, on the vertex set `0..=n`.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::collapse::Graph;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{max_variable_index, parse_polynomial_at_line, Field, MonomialOrder};
use crate::simplicial::SimplicialComplex;

/// Strip a trailing `#` comment.
fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Resolve a value that may come from a file header and from a flag.
pub(crate) fn reconcile<T: PartialEq + std::fmt::Display>(
    what: &str,
    header: Option<T>,
    flag: Option<T>,
    default: T,
) -> Result<T> {
    match (header, flag) {
        (Some(h), Some(f)) if h != f => {
            let (left, right) = (format!("file {what}: {h}"), format!("--{what} {f}"));
            Err(if what == "field" {
                Error::FieldMismatch { left, right }
            } else {
                Error::OrderViolation(format!("order mismatch: {left} vs {right}"))
            })
        }
        (Some(h), _) => Ok(h),
        (None, Some(f)) => Ok(f),
        (None, None) => Ok(default),
    }
}

/// A parsed ideal file together with the settings it was read under.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ideal: Ideal,
    pub order: MonomialOrder,
}

/// Parse an ideal file. Header values and flags must agree when both are
/// given; otherwise whichever is present wins, defaulting to `QQ` and `lex`.
/// Without a `vars:` header the variable count is one more than the largest
/// index mentioned.
pub fn parse_ideal_file(
    text: &str,
    source_name: &str,
    field_flag: Option<Field>,
    order_flag: Option<MonomialOrder>,
) -> Result<IdealFile> {
    let mut vars = None;
    let mut field = None;
    let mut order = None;
    let mut body = Vec::new();
    let wrap = |e: Error| e.in_source(source_name);
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = strip_comment(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let column = line.len() - line.trim_start().len() + 1;
        if let Some((key, value)) = trimmed.split_once(':') {
            let key = key.trim();
            if matches!(key, "vars" | "order" | "field") {
                if !body.is_empty() {
                    return Err(wrap(Error::parse(lineno, column, format!("header `{key}` after the first polynomial"))));
                }
                let bad = |msg: String| wrap(Error::parse(lineno, column, msg));
                match key {
                    "vars" => {
                        let v: usize = value.trim().parse().map_err(|_| bad(format!("bad variable count `{}`", value.trim())))?;
                        if v == 0 {
                            return Err(bad("variable count must be positive".into()));
                        }
                        vars = Some(v);
                    }
                    "order" => order = Some(value.parse::<MonomialOrder>().map_err(|e| bad(e.to_string()))?),
                    _ => field = Some(value.parse::<Field>().map_err(|e| bad(e.to_string()))?),
                }
                continue;
            }
        }
        body.push((lineno, line));
    }
    let field = reconcile("field", field, field_flag, Field::Rational)?;
    let order = reconcile("order", order, order_flag, MonomialOrder::Lex)?;
    let nvars = match vars {
        Some(v) => v,
        None => body.iter().filter_map(|(_, l)| max_variable_index(l)).max().map_or(1, |m| m + 1),
    };
    let gens = body
        .iter()
        .map(|(lineno, l)| parse_polynomial_at_line(l, field, nvars, *lineno).map_err(wrap))
        .collect::<Result<Vec<_>>>()?;
    if let MonomialOrder::Weighted(w) = &order {
        if w.len() != nvars {
            return Err(Error::Dimension { expected: nvars, found: w.len() });
        }
    }
    Ok(IdealFile {
        ideal: Ideal::new(field, nvars, gens)?,
        order,
    })
}

/// Render an ideal in the file format, headers included.
pub fn write_ideal_file(ideal: &Ideal, order: &MonomialOrder) -> String {
    let mut out = format!("vars: {}\norder: {}\nfield: {}\n", ideal.nvars(), order, ideal.field());
    for g in ideal.generators() {
        out.push_str(&g.to_string_ordered(order));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
}

/// A complex read from JSON, with its graph when it is one-dimensional.
#[derive(Debug, Clone)]
pub struct ComplexInput {
    pub complex: SimplicialComplex,
    pub graph: Option<Graph>,
}

fn json_error(e: serde_json::Error, source_name: &str) -> Error {
    Error::parse(e.line(), e.column(), e.to_string()).in_source(source_name)
}

impl ComplexJson {
    pub fn from_graph(g: &Graph) -> Self {
        ComplexJson {
            n: g.vertex_count().saturating_sub(1),
            facets: None,
            edges: Some(g.edges().map(|(a, b)| [a, b]).collect()),
        }
    }

    pub fn resolve(&self) -> Result<ComplexInput> {
        let nverts = self.n + 1;
        match (&self.facets, &self.edges) {
            (Some(_), Some(_)) => Err(Error::Domain("give either `facets` or `edges`, not both".into())),
            (None, None) => Err(Error::Domain("missing `facets` or `edges`".into())),
            (None, Some(edges)) => {
                let pairs: Vec<(usize, usize)> = edges.iter().map(|e| (e[0], e[1])).collect();
                let g = Graph::new(nverts, &pairs)?;
                Ok(ComplexInput {
                    complex: SimplicialComplex::from_graph(&g),
                    graph: Some(g),
                })
            }
            (Some(facets), None) => {
                let complex = SimplicialComplex::from_facets(nverts, facets)?;
                let graph = if complex.dimension() <= 1 { Some(complex.to_graph()?) } else { None };
                Ok(ComplexInput { complex, graph })
            }
        }
    }
}

/// Parse a complex file.
pub fn parse_complex_json(text: &str, source_name: &str) -> Result<ComplexInput> {
    let raw: ComplexJson = serde_json::from_str(text).map_err(|e| json_error(e, source_name))?;
    raw.resolve()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sampler {
    pub seed: u64,
    pub count: u64,
}

/// A sweep spec file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub complex: ComplexJson,
    #[serde(default)]
    pub order: Option<String>,
    #[serde(default)]
    pub field: Option<String>,
    /// Integer coefficients, mapped into the field. Over `Fp` the default is
    /// the whole field; over `QQ` it is `-2..=2`.
    #[serde(default)]
    pub coeff_grid: Option<Vec<i64>>,
    #[serde(default)]
    pub sampler: Option<Sampler>,
    #[serde(default)]
    pub degree_ceiling: Option<u32>,
    #[serde(default)]
    pub power_bound: Option<u32>,
    #[serde(default)]
    pub max_candidates: Option<u64>,
}

/// Parse a sweep spec file.
pub fn parse_sweep_spec(text: &str, source_name: &str) -> Result<SweepSpec> {
    serde_json::from_str(text).map_err(|e| json_error(e, source_name))
}

/// Settings a report was produced under.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub tool: String,
    pub input_sha256: String,
    pub order: String,
    pub field: String,
    pub seed: u64,
    pub degree_ceiling: u32,
    pub power_bound: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_candidates: Option<u64>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

impl Provenance {
    pub fn new(input: &[u8], order: &MonomialOrder, field: Field, seed: u64, degree_ceiling: u32, power_bound: u32) -> Self {
        Provenance {
            tool: format!("herzog {}", env!("CARGO_PKG_VERSION")),
            input_sha256: sha256_hex(input),
            order: order.to_string(),
            field: field.to_string(),
            seed,
            degree_ceiling,
            power_bound,
            max_candidates: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWISTED: &str = "# twisted cubic\nvars: 4\norder: lex\nfield: QQ\nX0*X2 - X1^2\nX0*X3 - X1*X2  # second\n\nX1*X3 - X2^2\n";

    #[test]
    fn ideal_file_round_trip() {
        let f = parse_ideal_file(TWISTED, "t.ideal", None, None).unwrap();
        assert_eq!(f.ideal.nvars(), 4);
        assert_eq!(f.ideal.generators().len(), 3);
        let again = parse_ideal_file(&write_ideal_file(&f.ideal, &f.order), "u", None, None).unwrap();
        assert_eq!(again.ideal.generators(), f.ideal.generators());
    }

    #[test]
    fn vars_inferred_without_header() {
        let f = parse_ideal_file("X0*X5 - X1^2\n", "x", Some(Field::Prime(3)), None).unwrap();
        assert_eq!(f.ideal.nvars(), 6);
        assert_eq!(f.ideal.field(), Field::Prime(3));
    }

    #[test]
    fn parse_errors_name_file_line_column() {
        let e = parse_ideal_file("vars: 3\nX0*X1\n  X0 + * X2\n", "bad.ideal", None, None).unwrap_err();
        match e {
            Error::Parse { source_name, line, .. } => {
                assert_eq!(source_name, "bad.ideal");
                assert_eq!(line, 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn header_flag_conflicts_name_both_sides() {
        let e = parse_ideal_file(TWISTED, "t", Some(Field::Prime(2)), None).unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("QQ") && msg.contains("Fp:2"), "{msg}");
        let e = parse_ideal_file(TWISTED, "t", None, Some(MonomialOrder::DegRevLex)).unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("lex") && msg.contains("degrevlex"), "{msg}");
    }

    #[test]
    fn complex_json_forms() {
        let c = parse_complex_json(r#"{"n": 3, "edges": [[0,1],[1,2],[2,3],[3,0]]}"#, "c").unwrap();
        assert_eq!(c.graph.unwrap().edge_count(), 4);
        let c = parse_complex_json(r#"{"n": 2, "facets": [[0,1,2]]}"#, "c").unwrap();
        assert!(c.graph.is_none());
        let e = parse_complex_json("{\"n\": 2,\n \"edges\": [[0,1]] ,}", "bad.json").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        assert!(parse_complex_json(r#"{"n": 2}"#, "c").is_err());
    }

    #[test]
    fn sweep_spec_parses() {
        let s = parse_sweep_spec(
            r#"{"complex": {"n": 2, "edges": [[0,1],[1,2],[0,2]]}, "order": "lex", "field": "Fp:2", "degree_ceiling": 12}"#,
            "s",
        )
        .unwrap();
        assert_eq!(s.field.as_deref(), Some("Fp:2"));
        assert!(s.sampler.is_none());
    }

    #[test]
    fn sha_is_stable() {
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
