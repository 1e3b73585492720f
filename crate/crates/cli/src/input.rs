//! Reading graphs and vertex maps from files.

use clawdec::formats::{parse_edge_list, parse_graph6};
use clawdec::graphfile::GraphFile;
use clawdec::Graph;

use crate::commands::CliError;

pub fn read_text(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
}

/// A graph file in any of the three formats: a `name` header selects the
/// graph file format, an `n m` first line the edge list, anything else is
/// graph6.
pub fn read_graph(path: &str) -> Result<Graph, CliError> {
    let text = read_text(path)?;
    let first = text.lines().next().unwrap_or("");
    let g = if first.starts_with("name ") {
        GraphFile::parse(&text)?.graph
    } else if first.split_whitespace().count() == 2 && first.split_whitespace().all(|t| t.parse::<usize>().is_ok()) {
        parse_edge_list(&text)?
    } else {
        parse_graph6(&text)?
    };
    Ok(g)
}

/// One non-negative integer per vertex, whitespace separated.
pub fn read_vertex_map(path: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let text = read_text(path)?;
    let values = text
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| CliError::Input(format!("{path}: bad value {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != n {
        return Err(CliError::Input(format!("{path}: {} values for {n} vertices", values.len())));
    }
    Ok(values)
}
