//! Directed graphs with loops and digons (no parallel arcs).

use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("arc ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<VertexSet>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

impl Digraph {
    pub fn empty(vertex_count: usize) -> Result<Self, DigraphError> {
        if vertex_count > MAX_VERTICES {
            return Err(DigraphError::TooManyVertices(vertex_count));
        }
        Ok(Self {
            n: vertex_count,
            out: vec![VertexSet::EMPTY; vertex_count],
        })
    }

    pub fn new(vertex_count: usize, arcs: &[(usize, usize)]) -> Result<Self, DigraphError> {
        let mut d = Self::empty(vertex_count)?;
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> Result<Self, DigraphError> {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &arcs)
    }

    /// Every arc including all loops.
    pub fn complete_with_loops(n: usize) -> Result<Self, DigraphError> {
        let mut d = Self::empty(n)?;
        for row in d.out.iter_mut() {
            *row = VertexSet::full(n);
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<(), DigraphError> {
        if u >= self.n || v >= self.n {
            return Err(DigraphError::VertexOutOfRange { u, v, n: self.n });
        }
        self.out[u].insert(v);
        Ok(())
    }

    /// A copy with a loop added at every vertex.
    pub fn with_all_loops(&self) -> Self {
        let mut d = self.clone();
        for (v, row) in d.out.iter_mut().enumerate() {
            row.insert(v);
        }
        d
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_arc(v, v)
    }

    pub fn has_all_loops(&self) -> bool {
        (0..self.n).all(|v| self.has_loop(v))
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.out[u].iter().map(move |v| (u, v)))
            .collect()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(VertexSet::len).sum()
    }

    /// Whether the sub-digraph induced by `set` has no directed cycle
    /// (a loop counts as a directed cycle of length one).
    pub fn is_acyclic_in(&self, set: &VertexSet) -> bool {
        let mut remaining = *set;
        loop {
            if remaining.is_empty() {
                return true;
            }
            // Peel off sources of the remaining induced sub-digraph.
            let sources: VertexSet = remaining
                .iter()
                .filter(|&v| {
                    !remaining
                        .iter()
                        .any(|u| self.out[u].contains(v))
                })
                .collect();
            if sources.is_empty() {
                return false;
            }
            remaining = remaining.difference(&sources);
        }
    }

    /// Parses the `d <n> <arcs>` / `a <u> <v>` text format (loops `a v v` allowed).
    pub fn parse(text: &str) -> Result<Self, DigraphError> {
        let parse_err = |line: usize, message: String| DigraphError::Parse { line, message };
        let mut digraph: Option<Digraph> = None;
        let mut declared = 0;
        let mut seen = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(parse_err(line, "expected three fields".into()));
            }
            let num = |i: usize| {
                fields[i]
                    .parse::<usize>()
                    .map_err(|e| parse_err(line, format!("field {}: {e}", i + 1)))
            };
            match fields[0] {
                "d" => {
                    if digraph.is_some() {
                        return Err(parse_err(line, "duplicate header line".into()));
                    }
                    declared = num(2)?;
                    digraph = Some(Digraph::empty(num(1)?).map_err(|e| parse_err(line, e.to_string()))?);
                }
                "a" => {
                    let d = digraph
                        .as_mut()
                        .ok_or_else(|| parse_err(line, "arc before `d` header".into()))?;
                    let (u, v) = (num(1)?, num(2)?);
                    if d.has_arc(u, v) {
                        return Err(parse_err(line, format!("parallel arc ({u}, {v})")));
                    }
                    d.add_arc(u, v).map_err(|e| parse_err(line, e.to_string()))?;
                    seen += 1;
                }
                other => return Err(parse_err(line, format!("unknown line type `{other}`"))),
            }
        }
        let d = digraph.ok_or_else(|| parse_err(0, "missing `d` header".into()))?;
        if seen != declared {
            return Err(parse_err(0, format!("header declares {declared} arcs but {seen} were listed")));
        }
        Ok(d)
    }

    pub fn to_text(&self) -> String {
        let arcs = self.arcs();
        let mut out = format!("d {} {}\n", self.n, arcs.len());
        for (u, v) in arcs {
            let _ = writeln!(out, "a {u} {v}");
        }
        out
    }
}
