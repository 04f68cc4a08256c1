//! Named constructions for the `gen` command, and writing their files.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use rainbow_core::constructions::{
    blowup, bounded_degree_grid, circulant_power, colourable_disjoint_lower, colourable_lower, digraph_repeating,
    directed_cycle_repeating, doubled_family, drisko_cycle, even_matching_family, multipartite_copies,
    multipartite_repeating, ramsey_blowup, ramsey_witness, Check, ConstructionOutput,
};
use serde::Serialize;

use crate::io::{family_file, read_digraph, read_graph};

pub const CONSTRUCTIONS: &[&str] = &[
    "drisko",
    "even-matching",
    "doubled-even-matching",
    "circulant",
    "multipartite-copies",
    "colourable",
    "colourable-disjoint",
    "blowup",
    "ramsey-blowup",
    "multipartite-repeating",
    "grid",
    "digraph-repeating",
    "directed-cycle",
];

/// Parameters shared by the constructions; each uses a subset.
#[derive(Debug, Clone, Default)]
pub struct GenParams {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub t: Option<usize>,
    pub r: Option<usize>,
    pub copies: Option<usize>,
    /// Host graph file, for `blowup`.
    pub host: Option<PathBuf>,
    /// Base digraph file, for `digraph-repeating`.
    pub digraph: Option<PathBuf>,
    pub budget: u64,
}

fn need(value: Option<usize>, flag: &str, name: &str) -> Result<usize> {
    value.ok_or_else(|| anyhow!("`{name}` needs --{flag}"))
}

pub fn build(name: &str, p: &GenParams) -> Result<ConstructionOutput> {
    let n = || need(p.n, "n", name);
    let m = || need(p.m, "m", name);
    let k = || need(p.k, "k", name);
    let t = || need(p.t, "t", name);
    let r = || need(p.r, "r", name);
    let out = match name {
        "drisko" => drisko_cycle(n()?)?,
        "even-matching" => even_matching_family(n()?)?,
        "doubled-even-matching" => doubled_family(&even_matching_family(n()?)?)?,
        "circulant" => circulant_power(t()?, n()?)?,
        "multipartite-copies" => multipartite_copies(k()?, t()?, n()?)?,
        "colourable" => colourable_lower(k()?, n()?, m()?)?,
        "colourable-disjoint" => colourable_disjoint_lower(k()?, n()?, m()?)?,
        "blowup" => {
            let host = p.host.as_deref().ok_or_else(|| anyhow!("`blowup` needs --host"))?;
            blowup(&read_graph(host)?, n()?)?
        }
        "ramsey-blowup" => {
            let (r, m) = (r()?, m()?);
            ramsey_blowup(&ramsey_witness(r, m, p.budget)?, r, m, n()?)?
        }
        "multipartite-repeating" => multipartite_repeating(r()?, n()?)?,
        "grid" => bounded_degree_grid(k()?, n()?, m()?)?,
        "digraph-repeating" => {
            let path = p.digraph.as_deref().ok_or_else(|| anyhow!("`digraph-repeating` needs --digraph"))?;
            let d = read_digraph(path)?;
            let copies = p.copies.unwrap_or(1);
            digraph_repeating(&d, t()?, copies, m()?)?
        }
        "directed-cycle" => directed_cycle_repeating(n()?, t()?)?,
        other => bail!("unknown construction `{other}`; known: {}", CONSTRUCTIONS.join(", ")),
    };
    Ok(out)
}

#[derive(Debug, Serialize)]
struct Manifest<'a> {
    name: &'a str,
    vertices: usize,
    colors: usize,
    columns: Option<Vec<Vec<usize>>>,
    checks: &'a [Check],
}

pub struct Written {
    pub files: Vec<PathBuf>,
    pub checks: Vec<Check>,
}

/// Certifies `out` and, only if every manifest entry holds, writes
/// `<name>.graph`, `<name>.family.json` and `<name>.manifest.json`.
pub fn write(out: &ConstructionOutput, dir: &Path) -> Result<Written> {
    let checks = out.certify();
    if let Some(bad) = checks.iter().find(|c| !c.holds) {
        bail!("{}: manifest entry {:?} does not hold; nothing written", out.name, bad.property);
    }
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let graph_name = format!("{}.graph", out.name);
    let graph_path = dir.join(&graph_name);
    let family_path = dir.join(format!("{}.family.json", out.name));
    let manifest_path = dir.join(format!("{}.manifest.json", out.name));
    fs::write(&graph_path, out.graph().to_text())?;
    fs::write(&family_path, serde_json::to_string_pretty(&family_file(&out.family, graph_name))? + "\n")?;
    let manifest = Manifest {
        name: &out.name,
        vertices: out.graph().vertex_count(),
        colors: out.family.len(),
        columns: out.repeating.as_ref().map(|rg| rg.column_lists()),
        checks: &checks,
    };
    fs::write(&manifest_path, serde_json::to_string_pretty(&manifest)? + "\n")?;
    Ok(Written {
        files: vec![graph_path, family_path, manifest_path],
        checks,
    })
}
