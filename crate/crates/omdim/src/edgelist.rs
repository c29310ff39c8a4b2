//! Plain-text edge lists (`n m` header, then one `u v` pair per line,
//! 0-based) and a write-only DOT export.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("edge list parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut tokens = text.split_whitespace();
    let mut next_number = |what: &str| -> Result<usize, EdgeListError> {
        let tok = tokens
            .next()
            .ok_or_else(|| EdgeListError::Parse(format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| EdgeListError::Parse(format!("invalid {what} {tok:?}")))
    };
    let n = next_number("vertex count")?;
    let m = next_number("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let u = next_number(&format!("endpoint of edge {i}"))?;
        let v = next_number(&format!("endpoint of edge {i}"))?;
        edges.push((u, v));
    }
    if let Some(extra) = tokens.next() {
        return Err(EdgeListError::Parse(format!(
            "unexpected trailing token {extra:?}"
        )));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn format_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
