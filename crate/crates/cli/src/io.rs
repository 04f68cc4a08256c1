//! Reading graphs, digraphs and family files.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use rainbow_core::family::FamilyFile;
use rainbow_core::{ColoredFamily, Digraph, Graph};

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Graph::parse(&text).with_context(|| format!("{}", path.display()))
}

pub fn read_digraph(path: &Path) -> Result<Digraph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Digraph::parse(&text).with_context(|| format!("{}", path.display()))
}

/// Loads a family file. The host graph is `graph` when given, otherwise the
/// file's `graph` field: an inline edge list, or a path relative to the
/// family file.
pub fn read_family(path: &Path, graph: Option<Graph>) -> Result<ColoredFamily> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let file: FamilyFile = serde_json::from_str(&text).with_context(|| format!("{}: malformed family JSON", path.display()))?;
    let host = match graph {
        Some(g) => g,
        None if file.is_inline() => Graph::parse(&file.graph).with_context(|| format!("{}: inline graph", path.display()))?,
        None => {
            if file.graph.trim().is_empty() {
                bail!("{}: no graph given and the `graph` field is empty", path.display());
            }
            read_graph(&resolve(path, &file.graph))?
        }
    };
    ColoredFamily::new(host, file.vertex_sets()).with_context(|| format!("{}", path.display()))
}

fn resolve(family_path: &Path, graph: &str) -> PathBuf {
    let p = Path::new(graph);
    if p.is_absolute() {
        return p.to_path_buf();
    }
    family_path.parent().map_or_else(|| p.to_path_buf(), |dir| dir.join(p))
}

/// The serialised form of `family`, pointing at `graph` (a path or an inline
/// edge list).
pub fn family_file(family: &ColoredFamily, graph: String) -> FamilyFile {
    FamilyFile {
        graph,
        sets: family.set_lists(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_with_relative_graph_path() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("c4.graph"), Graph::cycle(4).unwrap().to_text()).unwrap();
        fs::write(dir.path().join("f.json"), r#"{"graph": "c4.graph", "sets": [[0, 2], [1, 3]]}"#).unwrap();
        let f = read_family(&dir.path().join("f.json"), None).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.host(), &Graph::cycle(4).unwrap());
    }

    #[test]
    fn inline_graph_and_errors() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("f.json");
        fs::write(&p, r#"{"graph": "p 3 1\ne 0 1\n", "sets": [[0, 2]]}"#).unwrap();
        assert_eq!(read_family(&p, None).unwrap().len(), 1);
        fs::write(&p, r#"{"graph": "p 3 1\ne 0 1\n", "sets": [[0, 1]]}"#).unwrap();
        let err = format!("{:#}", read_family(&p, None).unwrap_err());
        assert!(err.contains("not independent"), "{err}");
        let g = dir.path().join("bad.graph");
        fs::write(&g, "p 3 1\ne 0 7\n").unwrap();
        let err = format!("{:#}", read_graph(&g).unwrap_err());
        assert!(err.contains("line 2"), "{err}");
        assert!(read_graph(&dir.path().join("missing.graph")).is_err());
    }
}
