//! Graphviz DOT output. One node per point, a directed edge Q -> P for each
//! immediate specialization, color keyed by conjugacy class.

use crate::render::FigureDocument;
use crate::spectrum::SpecSpace;

/// Palette cycled by class index.
const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

fn color_attr(class: usize, color: bool) -> String {
    if color {
        format!(", color=\"{}\"", PALETTE[class % PALETTE.len()])
    } else {
        String::new()
    }
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn render_figure(fig: &FigureDocument, name: &str, color: bool) -> String {
    let mut out = format!("digraph {name} {{\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str(&format!("  label=\"{}\";\n", escape(&fig.title)));
    out.push_str("  labelloc=\"t\";\n");
    for (i, node) in fig.nodes.iter().enumerate() {
        let tooltip = node
            .annotation
            .as_deref()
            .map(|a| format!(", tooltip=\"{}\"", escape(a)))
            .unwrap_or_default();
        out.push_str(&format!(
            "  n{i} [label=\"{}\"{}{}];\n",
            escape(&node.label),
            color_attr(node.class, color),
            tooltip,
        ));
    }
    for &(q, p) in &fig.edges {
        out.push_str(&format!("  n{q} -> n{p};\n"));
    }
    out.push_str("}\n");
    out
}

/// Side-by-side comparison: the source spectrum, its Burnside quotient, and
/// dashed rho arrows between them.
pub fn render_compare(
    source: &FigureDocument,
    quotient: &FigureDocument,
    links: &[(usize, usize)],
    color: bool,
) -> String {
    let mut out = String::from("digraph compare {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  subgraph cluster_source {\n");
    out.push_str(&format!("    label=\"{}\";\n", escape(&source.title)));
    for (i, node) in source.nodes.iter().enumerate() {
        out.push_str(&format!(
            "    s{i} [label=\"{}\"{}];\n",
            escape(&node.label),
            color_attr(node.class, color),
        ));
    }
    for &(q, p) in &source.edges {
        out.push_str(&format!("    s{q} -> s{p};\n"));
    }
    out.push_str("  }\n");
    out.push_str("  subgraph cluster_quotient {\n");
    out.push_str(&format!("    label=\"{}\";\n", escape(&quotient.title)));
    for (i, node) in quotient.nodes.iter().enumerate() {
        out.push_str(&format!(
            "    b{i} [label=\"{}\"{}];\n",
            escape(&node.label),
            color_attr(node.class, color),
        ));
    }
    for &(q, p) in &quotient.edges {
        out.push_str(&format!("    b{q} -> b{p};\n"));
    }
    out.push_str("  }\n");
    for &(pi, bi) in links {
        out.push_str(&format!(
            "  s{pi} -> b{bi} [style=dashed, constraint=false];\n"
        ));
    }
    out.push_str("}\n");
    out
}

/// The lattice of conjugacy classes of subgroups.
pub fn render_class_lattice(space: &SpecSpace, lattice: &[(usize, usize)], color: bool) -> String {
    let mut out = String::from("digraph subgroups {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str(&format!(
        "  label=\"subgroup classes of {}\";\n",
        escape(&space.group().display_name())
    ));
    out.push_str("  labelloc=\"t\";\n");
    for (i, c) in space.classes().iter().enumerate() {
        out.push_str(&format!(
            "  c{i} [label=\"{} ({}x)\"{}];\n",
            escape(space.label(i)),
            c.class_size(),
            color_attr(i, color),
        ));
    }
    for &(k, h) in lattice {
        out.push_str(&format!("  c{k} -> c{h};\n"));
    }
    out.push_str("}\n");
    out
}
