use crate::error::{Error, Result};
use crate::hardness::Graph;

/// Parses `v <name>` and `e <name> <name>` lines; `#` starts a comment line.
/// Vertices keep file order.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["v", name] => vertices.push(name.to_string()),
            ["e", u, v] => edges.push((u.to_string(), v.to_string())),
            _ => return Err(Error::parse(i + 1, format!("expected 'v <name>' or 'e <u> <v>', found {line:?}"))),
        }
    }
    Graph::new(vertices, edges)
}

pub fn print_graph(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str(&format!("v {v}\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", g.vertex(u), g.vertex(v)));
    }
    out
}
