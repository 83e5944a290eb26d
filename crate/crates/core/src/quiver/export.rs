use std::fmt::Write;

use super::{Quiver, Vertex};
use crate::error::{Error, Result};

impl Quiver {
    /// Pretty-printed JSON with keys `vertices`, `arrows`, `nakayama`,
    /// `provenance` in that order, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("quiver serialization is infallible");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Quiver> {
        let q: Quiver = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let indexed = q.vertices.iter().enumerate().all(|(i, v)| v.index == i);
        if !indexed {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "vertex indices must be 0, 1, 2, ...".into(),
            });
        }
        let degrees: Vec<u32> = q.vertices.iter().map(|v: &Vertex| v.degree).collect();
        Quiver::new(&degrees, q.arrows, q.nakayama, q.provenance)
    }

    /// Graphviz digraph: one node per vertex, one edge per arrow, and the
    /// Nakayama permutation as dashed edges `i -> σ(i)`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph mckay {\n");
        if !self.provenance.is_empty() {
            writeln!(out, "  label=\"{}\";", escape(&self.provenance)).unwrap();
        }
        for v in &self.vertices {
            writeln!(
                out,
                "  {} [label=\"{} (d={})\"];",
                v.index, v.index, v.degree
            )
            .unwrap();
        }
        for (i, row) in self.arrows.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                for _ in 0..a {
                    writeln!(out, "  {i} -> {j};").unwrap();
                }
            }
        }
        if let Some(sigma) = &self.nakayama {
            for i in 0..sigma.len() {
                writeln!(
                    out,
                    "  {i} -> {} [style=dashed, color=gray, constraint=false];",
                    sigma.apply(i)
                )
                .unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
