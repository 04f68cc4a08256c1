//! Browser bindings: solve a family, compute f exactly, and build a
//! certified construction. Every export takes plain strings and numbers and
//! returns a JSON string, `{"error": ...}` on bad input.

use rainbow_core::constructions::{
    bounded_degree_grid, circulant_power, colourable_lower, directed_cycle_repeating, drisko_cycle,
    even_matching_family, multipartite_repeating, ConstructionOutput,
};
use rainbow_core::fcalc::{f_exact, FValue};
use rainbow_core::{find_rainbow, ColoredFamily, Graph, VertexSet};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn parse_sets(sets_json: &str) -> Result<Vec<VertexSet>, String> {
    let lists: Vec<Vec<usize>> = serde_json::from_str(sets_json).map_err(|e| format!("sets: {e}"))?;
    Ok(lists.into_iter().map(|l| l.into_iter().collect()).collect())
}

fn solve_value(graph_text: &str, sets_json: &str, m: usize) -> Result<Value, String> {
    let g = Graph::parse(graph_text).map_err(|e| e.to_string())?;
    let family = ColoredFamily::new(g, parse_sets(sets_json)?).map_err(|e| e.to_string())?;
    Ok(match find_rainbow(&family, m) {
        Some(sel) => json!({
            "found": true,
            "assignments": sel.assignments,
            "vertices": sel.image().to_vec(),
        }),
        None => json!({ "found": false }),
    })
}

/// Looks for a rainbow independent `m`-set. `graph_text` uses the `p`/`e`
/// edge-list format and `sets_json` is a list of vertex lists.
#[wasm_bindgen]
pub fn solve(graph_text: &str, sets_json: &str, m: usize) -> String {
    respond(solve_value(graph_text, sets_json, m))
}

fn f_value(graph_text: &str, n: usize, m: usize, budget: u64) -> Result<Value, String> {
    let g = Graph::parse(graph_text).map_err(|e| e.to_string())?;
    let r = f_exact(&g, n, m, (budget > 0).then_some(budget)).map_err(|e| e.to_string())?;
    let value = match r.value {
        FValue::Defined(v) => json!(v),
        FValue::Undefined => json!("undefined"),
    };
    Ok(json!({
        "value": value,
        "witness": r.witness.map(|w| w.set_lists()),
        "nodes_explored": r.nodes,
        "complete": r.complete,
    }))
}

/// `f_G(n, m)` with a largest bad family. A zero budget means unbounded.
#[wasm_bindgen]
pub fn f_exact_json(graph_text: &str, n: usize, m: usize, budget: u64) -> String {
    respond(f_value(graph_text, n, m, budget))
}

/// Names accepted by [`generate`].
pub const CONSTRUCTIONS: &[&str] = &[
    "drisko",
    "even-matching",
    "circulant",
    "colourable",
    "grid",
    "multipartite-repeating",
    "directed-cycle",
];

fn build(name: &str, n: usize, m: usize, k: usize, t: usize) -> Result<ConstructionOutput, String> {
    let out = match name {
        "drisko" => drisko_cycle(n),
        "even-matching" => even_matching_family(n),
        "circulant" => circulant_power(t, n),
        "colourable" => colourable_lower(k, n, m),
        "grid" => bounded_degree_grid(k, n, m),
        "multipartite-repeating" => multipartite_repeating(k, n),
        "directed-cycle" => directed_cycle_repeating(n, t),
        other => return Err(format!("unknown construction `{other}`; known: {}", CONSTRUCTIONS.join(", "))),
    };
    out.map_err(|e| e.to_string())
}

fn generate_value(name: &str, n: usize, m: usize, k: usize, t: usize) -> Result<Value, String> {
    let out = build(name, n, m, k, t)?;
    let checks = out.certify();
    Ok(json!({
        "name": out.name,
        "graph": out.graph().to_text(),
        "sets": out.family.set_lists(),
        "checks": checks,
        "certified": checks.iter().all(|c| c.holds),
    }))
}

/// Builds a construction and re-checks its manifest. Parameters a
/// construction does not use are ignored; `multipartite-repeating` reads
/// `r` from `k`.
#[wasm_bindgen]
pub fn generate(name: &str, n: usize, m: usize, k: usize, t: usize) -> String {
    respond(generate_value(name, n, m, k, t))
}
