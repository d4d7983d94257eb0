use super::{Graph, GraphError};

/// Parses the line-oriented edge-list format.
///
/// The first non-comment line holds the vertex count; each following line
/// holds two distinct 0-based vertex indices. `#` starts a comment and blank
/// lines are ignored. Repeated edges are stored once.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| GraphError::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match graph.as_mut() {
            None => {
                if fields.len() != 1 {
                    return Err(err(format!("expected vertex count, got '{line}'")));
                }
                let n: usize = fields[0]
                    .parse()
                    .map_err(|_| err(format!("invalid vertex count '{}'", fields[0])))?;
                graph = Some(Graph::empty(n).map_err(|e| err(e.to_string()))?);
            }
            Some(g) => {
                if fields.len() != 2 {
                    return Err(err(format!("expected two vertex indices, got '{line}'")));
                }
                let mut ends = [0usize; 2];
                for (slot, f) in ends.iter_mut().zip(&fields) {
                    *slot = f
                        .parse()
                        .map_err(|_| err(format!("invalid vertex index '{f}'")))?;
                }
                g.add_edge(ends[0], ends[1]).map_err(|e| err(e.to_string()))?;
            }
        }
    }
    graph.ok_or(GraphError::Parse {
        line: text.lines().count().max(1),
        message: "missing vertex count".into(),
    })
}

/// Renders a graph in the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

impl Graph {
    pub fn to_edge_list(&self) -> String {
        to_edge_list(self)
    }
}
