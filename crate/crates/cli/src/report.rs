use std::fmt::Write;

use mckay_core::covers::CoveringMap;
use mckay_core::{Analysis, CoveringReport};

fn matrix_lines(out: &mut String, rows: &[Vec<u32>]) {
    let width = rows
        .iter()
        .flatten()
        .map(|a| a.to_string().len())
        .max()
        .unwrap_or(1);
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|a| format!("{a:>width$}")).collect();
        writeln!(out, "  {i:>3}: {}", cells.join(" ")).unwrap();
    }
}

pub fn quiver_summary(a: &Analysis) -> String {
    let g = &a.group;
    let q = &a.quiver;
    let mut out = String::new();
    writeln!(out, "group: {}", q.provenance).unwrap();
    writeln!(
        out,
        "order {}, dimension {}, conductor {}, {} classes",
        g.order(),
        g.dim(),
        g.conductor(),
        g.class_count()
    )
    .unwrap();
    let vertices: Vec<String> = q
        .vertices
        .iter()
        .map(|v| format!("{} (d={})", v.index, v.degree))
        .collect();
    writeln!(out, "vertices: {}", vertices.join(", ")).unwrap();
    writeln!(out, "arrows (row i lists the number of arrows i -> j):").unwrap();
    matrix_lines(&mut out, &q.arrows);
    if let Some(sigma) = &q.nakayama {
        writeln!(out, "nakayama: {sigma}").unwrap();
    }
    out
}

pub fn chartab(a: &Analysis) -> String {
    let g = &a.group;
    let t = &a.table;
    let join = |v: Vec<String>| v.join(" ");
    let mut out = String::new();
    writeln!(out, "group: {}", a.quiver.provenance).unwrap();
    writeln!(out, "order: {}", g.order()).unwrap();
    writeln!(out, "exponent: {}", g.exponent()).unwrap();
    writeln!(out, "prime: {} (generator {})", t.prime, t.generator).unwrap();
    writeln!(
        out,
        "class sizes: {}",
        join(g.class_sizes().iter().map(usize::to_string).collect())
    )
    .unwrap();
    let orders = g
        .classes()
        .iter()
        .map(|c| g.element_order(c.representative).to_string())
        .collect();
    writeln!(out, "class orders: {}", join(orders)).unwrap();
    writeln!(
        out,
        "degrees: {}",
        join(t.degrees.iter().map(u32::to_string).collect())
    )
    .unwrap();
    writeln!(out, "values (z = exp(2πi/{})):", t.conductor).unwrap();
    for (i, row) in t.rows.iter().enumerate() {
        let vals: Vec<String> = row
            .values
            .iter()
            .map(|v| v.lift(t.conductor).to_string())
            .collect();
        writeln!(out, "  chi_{i}: {}", vals.join(" | ")).unwrap();
    }
    out
}

pub fn cover(c: &CoveringMap, report: &CoveringReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "covering: {} vertices over {} vertices, deck order {}",
        c.source.vertex_count(),
        c.target.vertex_count(),
        c.deck_order
    )
    .unwrap();
    writeln!(out, "  vertex -> image").unwrap();
    for (v, w) in c.vertex_map.iter().enumerate() {
        writeln!(out, "  {v:>6} -> {w}").unwrap();
    }
    match c.deck_generator() {
        Some(g) => writeln!(out, "deck generator: {g}").unwrap(),
        None => writeln!(out, "deck generator: none (deck group is not cyclic)").unwrap(),
    }
    writeln!(out, "{}", report.to_string().trim_end()).unwrap();
    out
}
