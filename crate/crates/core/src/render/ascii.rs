//! Plain-text diagrams: a slot × class grid plus the Hasse arc list.
//! Rows follow the slot order (Zero on top), columns the canonical class
//! order; glued points appear once, with their fiber as an annotation.

use crate::ideals::LocalEnumeration;
use crate::render::FigureDocument;
use crate::spectrum::SpecSpace;

pub fn render_figure(fig: &FigureDocument) -> String {
    let mut out = String::new();
    out.push_str(&fig.title);
    out.push('\n');
    out.push_str(&grid(fig));
    out.push_str("\nspecialization (immediate arcs, Q -> P means Q lies in the closure of P):\n");
    if fig.edges.is_empty() {
        out.push_str("  (none)\n");
    }
    for &(q, p) in &fig.edges {
        out.push_str(&format!(
            "  {} -> {}\n",
            fig.nodes[q].label, fig.nodes[p].label
        ));
    }
    let annotated: Vec<&super::FigureNode> = fig
        .nodes
        .iter()
        .filter(|n| n.annotation.is_some())
        .collect();
    if !annotated.is_empty() {
        out.push_str("\nannotations:\n");
        for node in annotated {
            out.push_str(&format!(
                "  {}: {}\n",
                node.label,
                node.annotation.as_deref().unwrap_or_default()
            ));
        }
    }
    out
}

pub fn render_compare(source: &FigureDocument, quotient: &FigureDocument) -> String {
    let mut out = render_figure(source);
    out.push_str(
        "\n        |\n     rho|  (glues prime-slot points with conjugate residuals)\n        v\n\n",
    );
    out.push_str(&render_figure(quotient));
    out
}

pub fn render_ideals(space: &SpecSpace, e: &LocalEnumeration, list: bool) -> String {
    let mut out = format!(
        "admissible sets in the {{{}}}-slice of {}: {}{}\n",
        space
            .slots()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", "),
        space.group().display_name(),
        e.count,
        if e.count_is_exact {
            ""
        } else {
            " (lower bound)"
        },
    );
    if list {
        match &e.sets {
            Some(sets) => {
                for set in sets {
                    let tokens: Vec<String> = set
                        .iter()
                        .map(|&i| {
                            let p = e.points[i];
                            format!("P({},{})", space.label(p.class), p.slot)
                        })
                        .collect();
                    out.push_str(&format!("  {{{}}}\n", tokens.join(", ")));
                }
            }
            None => out.push_str("  (too many sets to list; count-only mode)\n"),
        }
    }
    out
}

pub fn render_subgroups(space: &SpecSpace, lattice: &[(usize, usize)]) -> String {
    let group = space.group();
    let mut out = format!(
        "subgroup classes of {} (order {}): {} classes, {} subgroups\n",
        group.display_name(),
        group.order(),
        space.classes().len(),
        space
            .classes()
            .iter()
            .map(|c| c.class_size())
            .sum::<usize>(),
    );
    for (i, c) in space.classes().iter().enumerate() {
        out.push_str(&format!(
            "  [{i}] {:<8} order {:<4} class size {:<3} representative {{{}}}\n",
            space.label(i),
            c.order(),
            c.class_size(),
            c.representative()
                .members()
                .iter()
                .map(|&m| group.element(m).to_string())
                .collect::<Vec<_>>()
                .join(" "),
        ));
    }
    out.push_str("\nclass lattice (immediate subconjugacy, K -> H means K is conjugate to a subgroup of H):\n");
    if lattice.is_empty() {
        out.push_str("  (none)\n");
    }
    for &(k, h) in lattice {
        out.push_str(&format!("  {} -> {}\n", space.label(k), space.label(h)));
    }
    out
}

fn grid(fig: &FigureDocument) -> String {
    let rows = fig.slot_names.len();
    let cols = fig.class_labels.len();
    let mut cells: Vec<Vec<String>> = vec![vec![String::new(); cols + 1]; rows + 1];
    cells[0][0] = "slot".into();
    for (c, label) in fig.class_labels.iter().enumerate() {
        cells[0][c + 1] = label.clone();
    }
    for (r, name) in fig.slot_names.iter().enumerate() {
        cells[r + 1][0] = name.clone();
    }
    for node in &fig.nodes {
        let cell = &mut cells[node.slot_row + 1][node.class + 1];
        if !cell.is_empty() {
            cell.push(' ');
        }
        cell.push_str(&node.label);
    }
    let widths: Vec<usize> = (0..=cols)
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{:<width$}", cell, width = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
