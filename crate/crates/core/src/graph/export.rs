use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use super::{Family, Graph, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edges" => Ok(ExportFormat::EdgeList),
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::InvalidArgument(format!(
                "unknown format {other:?} (expected edges, dot or json)"
            ))),
        }
    }
}

/// The plain-text edge list: a `# family=.. n=.. vertices=.. edges=..`
/// header followed by one `u v` line per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub family: Family,
    pub generation: u32,
    pub num_vertices: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl EdgeListDocument {
    pub fn from_graph(g: &Graph) -> Self {
        EdgeListDocument {
            family: g.family(),
            generation: g.generation(),
            num_vertices: g.num_vertices(),
            edges: g.edges().to_vec(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 * self.edges.len() + 64);
        writeln!(
            out,
            "# family={} n={} vertices={} edges={}",
            self.family,
            self.generation,
            self.num_vertices,
            self.edges.len()
        )
        .unwrap();
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
        let fields = header
            .strip_prefix("# ")
            .ok_or_else(|| parse_err(1, "missing '# ' header"))?;

        let mut family = None;
        let mut generation = None;
        let mut num_vertices = None;
        let mut num_edges = None;
        for field in fields.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| parse_err(1, format!("header field {field:?} is not key=value")))?;
            let bad = |_| parse_err(1, format!("bad value for {key}"));
            match key {
                "family" => family = Some(value.parse::<Family>().map_err(|e| parse_err(1, e.to_string()))?),
                "n" => generation = Some(value.parse::<u32>().map_err(bad)?),
                "vertices" => num_vertices = Some(value.parse::<usize>().map_err(bad)?),
                "edges" => num_edges = Some(value.parse::<usize>().map_err(bad)?),
                other => return Err(parse_err(1, format!("unknown header key {other:?}"))),
            }
        }
        let missing = |k: &str| parse_err(1, format!("header is missing {k}"));
        let family = family.ok_or_else(|| missing("family"))?;
        let generation = generation.ok_or_else(|| missing("n"))?;
        let num_vertices = num_vertices.ok_or_else(|| missing("vertices"))?;
        let num_edges = num_edges.ok_or_else(|| missing("edges"))?;

        let mut edges = Vec::with_capacity(num_edges);
        for (idx, line) in lines {
            let lineno = idx + 1;
            let mut parts = line.split(' ');
            let (Some(u), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(parse_err(lineno, "expected two space-separated ids"));
            };
            let u: VertexId = u.parse().map_err(|_| parse_err(lineno, "bad vertex id"))?;
            let v: VertexId = v.parse().map_err(|_| parse_err(lineno, "bad vertex id"))?;
            if u >= v || v as usize >= num_vertices {
                return Err(parse_err(lineno, format!("edge {u} {v} violates u < v < vertices")));
            }
            edges.push((u, v));
        }
        if edges.len() != num_edges {
            return Err(parse_err(
                1,
                format!("header promises {num_edges} edges, found {}", edges.len()),
            ));
        }
        Ok(EdgeListDocument {
            family,
            generation,
            num_vertices,
            edges,
        })
    }
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

#[derive(Serialize)]
struct GraphJson<'a> {
    family: Family,
    n: u32,
    num_vertices: usize,
    boundary: [VertexId; 3],
    birth: &'a [u8],
    edges: &'a [(VertexId, VertexId)],
}

fn dot(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {}_{} {{", g.family(), g.generation()).unwrap();
    let boundary = g.boundary();
    for (v, b) in g.birth().iter().enumerate() {
        if boundary.contains(&(v as VertexId)) {
            writeln!(out, "  {v} [role=\"boundary\", birth={b}];").unwrap();
        } else {
            writeln!(out, "  {v} [birth={b}];").unwrap();
        }
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn export_graph(g: &Graph, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::EdgeList => EdgeListDocument::from_graph(g).to_text().into_bytes(),
        ExportFormat::Dot => dot(g).into_bytes(),
        ExportFormat::Json => {
            let doc = GraphJson {
                family: g.family(),
                n: g.generation(),
                num_vertices: g.num_vertices(),
                boundary: g.boundary(),
                birth: g.birth(),
                edges: g.edges(),
            };
            let mut bytes = serde_json::to_vec(&doc).expect("graph JSON is always serializable");
            bytes.push(b'\n');
            bytes
        }
    }
}

pub fn write_graph(g: &Graph, format: ExportFormat, path: &Path) -> Result<()> {
    std::fs::write(path, export_graph(g, format)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
