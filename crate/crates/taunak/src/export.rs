//! Deterministic DOT, TikZ, and JSON emitters for the combinatorial data.

use crate::algebra::Indec;
use crate::arcs::{Arc, ArcOps, ArcPattern};
use crate::cluster::{ClusterCategory, CubeComplex};
use crate::lattice::TorsLattice;
use crate::AlgebraSpec;
use serde_json::{json, Value};
use std::fmt::Write as _;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// DOT digraph of the brick-labeled Hasse quiver of the torsion lattice.
pub fn lattice_dot(lat: &TorsLattice) -> String {
    let mut out = String::from("digraph tors {\n  rankdir=TB;\n  node [shape=box];\n");
    for (i, v) in lat.vertices().iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label={}];", quote(&v.pair.to_string()));
    }
    for a in lat.arrows() {
        let _ = writeln!(
            out,
            "  v{} -> v{} [label={}];",
            a.from,
            a.to,
            quote(&a.label.to_string())
        );
    }
    out.push_str("}\n");
    out
}

/// JSON census of the polygons: top vertex plus the two side label words.
pub fn polygons_json(lat: &TorsLattice) -> Value {
    Value::Array(
        lat.polygons()
            .into_iter()
            .map(|p| {
                json!({
                    "top": p.top,
                    "bottom": p.bottom,
                    "sides": [
                        p.left.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                        p.right.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    ],
                })
            })
            .collect(),
    )
}

/// JSON list of the maximal green sequences as label words.
pub fn mgs_json(lat: &TorsLattice) -> Value {
    Value::Array(
        lat.maximal_green_sequences()
            .into_iter()
            .map(|w| Value::Array(w.iter().map(|s| Value::from(s.to_string())).collect()))
            .collect(),
    )
}

/// DOT digraph of the exchange graph of support tau-tilting pairs.
pub fn stt_graph_dot(lat: &TorsLattice) -> String {
    lattice_dot(lat)
}

/// Arc pattern as the exchange JSON shape.
pub fn pattern_json(p: &ArcPattern) -> Value {
    let side = |arcs: &std::collections::BTreeSet<Arc>| -> Value {
        Value::Array(arcs.iter().map(|a| json!([a.source, a.len])).collect())
    };
    json!({ "green": side(&p.green), "red": side(&p.red) })
}

/// Pattern rendered as module tokens, green first.
pub fn pattern_text(p: &ArcPattern) -> String {
    let mut parts: Vec<String> = p.green.iter().map(|a| a.brick().to_string()).collect();
    parts.extend(p.red.iter().map(|a| format!("{}[1]", a.brick())));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn point(n: usize, i: usize, radius: f64) -> (f64, f64) {
    let theta = std::f64::consts::PI * (0.5 + 2.0 * (i as f64 - 1.0) / n as f64);
    (radius * theta.cos(), radius * theta.sin())
}

fn tikz_arc(out: &mut String, spec: &AlgebraSpec, a: Arc, style: &str) {
    let n = spec.n();
    let (x0, y0) = point(n, a.source, 2.0);
    if spec.is_loop(a) {
        // a loop around the puncture: two control points on either side
        let swing = |offset: f64| -> (f64, f64) {
            let theta = std::f64::consts::PI
                * (0.5 + 2.0 * (a.source as f64 - 1.0) / n as f64 + offset);
            (2.4 * theta.cos(), 2.4 * theta.sin())
        };
        let (c1x, c1y) = swing(0.65);
        let (c2x, c2y) = swing(-0.65);
        let _ = writeln!(
            out,
            "  \\draw[{style}] ({x0:.3},{y0:.3}) .. controls ({c1x:.3},{c1y:.3}) and ({c2x:.3},{c2y:.3}) .. ({x0:.3},{y0:.3});"
        );
    } else {
        let t = spec.target(a);
        let (x1, y1) = point(n, t, 2.0);
        // bow the chord toward the boundary it spans
        let pull = 1.0 - a.len as f64 / n as f64;
        let (mx, my) = ((x0 + x1) / 2.0 * pull, (y0 + y1) / 2.0 * pull);
        let _ = writeln!(
            out,
            "  \\draw[{style}] ({x0:.3},{y0:.3}) .. controls ({mx:.3},{my:.3}) .. ({x1:.3},{y1:.3});"
        );
    }
}

/// TikZ picture of a colored arc pattern on the punctured disk: marked
/// boundary points, a crossed puncture, green and red arcs.
pub fn pattern_tikz(spec: &AlgebraSpec, p: &ArcPattern) -> String {
    let n = spec.n();
    let mut out = String::from("\\begin{tikzpicture}\n  \\draw (0,0) circle (2);\n");
    out.push_str("  \\node at (0,0) {$\\times$};\n");
    for i in 1..=n {
        let (x, y) = point(n, i, 2.0);
        let (lx, ly) = point(n, i, 2.3);
        let _ = writeln!(out, "  \\fill ({x:.3},{y:.3}) circle (0.06);");
        let _ = writeln!(out, "  \\node at ({lx:.3},{ly:.3}) {{{i}}};");
    }
    for &a in &p.green {
        tikz_arc(&mut out, spec, a, "green!60!black, thick");
    }
    for &a in &p.red {
        tikz_arc(&mut out, spec, a, "red, thick");
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// TikZ picture of all arcs of the disk, uncolored.
pub fn all_arcs_tikz(spec: &AlgebraSpec) -> String {
    let n = spec.n();
    let mut out = String::from("\\begin{tikzpicture}\n  \\draw (0,0) circle (2);\n");
    out.push_str("  \\node at (0,0) {$\\times$};\n");
    for i in 1..=n {
        let (x, y) = point(n, i, 2.0);
        let (lx, ly) = point(n, i, 2.3);
        let _ = writeln!(out, "  \\fill ({x:.3},{y:.3}) circle (0.06);");
        let _ = writeln!(out, "  \\node at ({lx:.3},{ly:.3}) {{{i}}};");
    }
    for a in spec.arcs() {
        tikz_arc(&mut out, spec, a, "black");
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// DOT graph of the 1-skeleton of the classifying complex: objects as
/// nodes, rank-one morphisms as labeled edges; each square is recorded as
/// a comment so shaded renderings can be reconstructed.
pub fn complex_dot(cat: &ClusterCategory, complex: &CubeComplex) -> String {
    let mut out = String::from("digraph skeleton {\n  node [shape=ellipse];\n");
    for (i, w) in cat.wides().iter().enumerate() {
        let _ = writeln!(out, "  w{i} [label={}];", quote(&w.to_string()));
    }
    for &e in &complex.edges {
        let m = &cat.morphs()[e];
        let _ = writeln!(
            out,
            "  w{} -> w{} [label={}];",
            m.source,
            m.target,
            quote(&m.payload.to_string())
        );
    }
    for (m, morph) in cat.morphs().iter().enumerate() {
        if morph.rank() == 2 {
            let _ = writeln!(out, "  // square {}: {}", m, cat.describe(m));
        }
    }
    out.push_str("}\n");
    out
}

/// JSON list of bricks as module tokens.
pub fn bricks_json(spec: &AlgebraSpec) -> Value {
    Value::Array(spec.bricks().into_iter().map(|b| Value::from(b.to_string())).collect())
}

/// JSON list of arcs with their endpoints and loop flag.
pub fn arcs_json(spec: &AlgebraSpec) -> Value {
    Value::Array(
        spec.arcs()
            .into_iter()
            .map(|a| {
                json!({
                    "source": a.source,
                    "len": a.len,
                    "target": spec.target(a),
                    "loop": spec.is_loop(a),
                })
            })
            .collect(),
    )
}

/// Summary of the algebra: series, counts, and the collection census size.
pub fn info_json(spec: &AlgebraSpec) -> Value {
    use crate::smc::SmcOps;
    json!({
        "n": spec.n(),
        "kupisch": spec.kupisch(),
        "cyclic": spec.is_cyclic(),
        "indecomposables": spec.indecs().len(),
        "bricks": spec.bricks().len(),
        "collections": spec.all_two_smcs().len(),
    })
}

/// Labels of an indecomposable list as module tokens.
pub fn indec_tokens(ms: &[Indec]) -> Vec<String> {
    ms.iter().map(|m| m.to_string()).collect()
}
