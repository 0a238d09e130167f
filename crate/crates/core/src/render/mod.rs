//! Command-line documents: ASCII diagrams, DOT graphs, JSON, and the
//! golden-figure checks.

pub mod ascii;
pub mod dot;
pub mod golden;
pub mod hasse;
pub mod json;

use std::sync::Arc;

use crate::burnside::BurnsideSpace;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::ideals;
use crate::spectrum::{PrimeSlot, SpecSpace};

/// What to render.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Target {
    Spectrum,
    Burnside,
    Compare,
    Ideals,
    Subgroups,
}

/// Output format.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Ascii,
    Dot,
    Json,
}

/// A fully specified render request, as assembled by the CLI.
#[derive(Clone, Debug)]
pub struct RenderRequest {
    pub target: Target,
    pub group: String,
    pub local_prime: Option<u64>,
    pub format: Format,
    /// compare: annotate with chromatic heights
    pub shg: bool,
    /// ideals: list the sets rather than just counting
    pub list: bool,
    pub cap: usize,
    pub color: bool,
}

impl RenderRequest {
    pub fn new(target: Target, group: &str) -> RenderRequest {
        RenderRequest {
            target,
            group: group.to_string(),
            local_prime: None,
            format: Format::Ascii,
            shg: false,
            list: false,
            cap: PermGroup::DEFAULT_ORDER_CAP,
            color: true,
        }
    }
}

/// The rendered document plus any advisory warnings for stderr.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub document: String,
    pub warnings: Vec<String>,
}

/// One node of a figure: a labeled point placed on a (slot row, class
/// column) grid, with an optional annotation (ρ-fiber or chromatic height).
#[derive(Clone, Debug)]
pub struct FigureNode {
    pub label: String,
    pub class: usize,
    pub slot_row: usize,
    pub annotation: Option<String>,
}

/// A diagram: nodes on a slot × class grid and Hasse-reduced arcs
/// `(q, p)` with q immediately below p. Transitively closing the arcs
/// recovers the full specialization relation of the rendered space.
#[derive(Clone, Debug)]
pub struct FigureDocument {
    pub title: String,
    pub slot_names: Vec<String>,
    pub class_labels: Vec<String>,
    pub nodes: Vec<FigureNode>,
    pub edges: Vec<(usize, usize)>,
}

/// Figure of a spectrum space; optionally annotated with chromatic heights.
pub fn figure_of_space(space: &SpecSpace, chromatic: bool) -> FigureDocument {
    let slot_names: Vec<String> = space.slots().iter().map(|s| s.to_string()).collect();
    let nodes = space
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let annotation = chromatic.then(|| {
                let c = space.chromatic_image(*p).expect("own point");
                let height = match c.height {
                    crate::spectrum::ChromaticHeight::One => "1",
                    crate::spectrum::ChromaticHeight::Infinity => "inf",
                };
                format!("P({},{},{})", space.label(c.class), c.prime, height)
            });
            FigureNode {
                label: space.point_token(i),
                class: p.class,
                slot_row: space
                    .slots()
                    .iter()
                    .position(|&s| s == p.slot)
                    .expect("point slot is a space slot"),
                annotation,
            }
        })
        .collect();
    FigureDocument {
        title: format!(
            "spectrum of {} (order {}), slots {{{}}}",
            space.group().display_name(),
            space.group().order(),
            slot_names.join(", ")
        ),
        slot_names,
        class_labels: space.labels().to_vec(),
        nodes,
        edges: hasse::hasse_arcs(space.len(), |p, q| space.specializes_indices(q, p)),
    }
}

/// Figure of a Burnside spectrum: one node per glue class, placed at its
/// canonical member, annotated with the fiber when nontrivial.
pub fn figure_of_burnside(b: &BurnsideSpace) -> FigureDocument {
    let space = b.source();
    let slot_names: Vec<String> = space.slots().iter().map(|s| s.to_string()).collect();
    let nodes = b
        .points()
        .iter()
        .enumerate()
        .map(|(bi, bp)| {
            let canonical = space.points()[bp.canonical_member()];
            let annotation = (bp.len() > 1).then(|| {
                let fiber: Vec<String> = bp
                    .members()
                    .iter()
                    .map(|&pi| space.point_token(pi))
                    .collect();
                format!("fiber({}): {}", bp.len(), fiber.join(" "))
            });
            FigureNode {
                label: b.point_token(bi),
                class: canonical.class,
                slot_row: space
                    .slots()
                    .iter()
                    .position(|&s| s == canonical.slot)
                    .expect("point slot is a space slot"),
                annotation,
            }
        })
        .collect();
    FigureDocument {
        title: format!(
            "Burnside spectrum of {} (order {}), slots {{{}}}",
            space.group().display_name(),
            space.group().order(),
            slot_names.join(", ")
        ),
        slot_names,
        class_labels: space.labels().to_vec(),
        nodes,
        edges: hasse::hasse_arcs(b.len(), |p, q| b.specializes_indices(q, p)),
    }
}

/// Execute a render request and produce the document text.
pub fn run(request: &RenderRequest) -> Result<RunOutput> {
    if let Some(p) = request.local_prime {
        if !crate::arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    let group = Arc::new(PermGroup::from_descriptor_capped(
        &request.group,
        request.cap,
    )?);
    let mut warnings = Vec::new();
    if group.order() > 256 {
        warnings.push(format!(
            "group order {} is above 256; subgroup enumeration may be slow",
            group.order()
        ));
    }
    let space = match request.local_prime {
        Some(p) => SpecSpace::build_local(&group, p)?,
        None => SpecSpace::build(&group),
    };
    let document = match request.target {
        Target::Spectrum => {
            let fig = figure_of_space(&space, false);
            match request.format {
                Format::Ascii => ascii::render_figure(&fig),
                Format::Dot => dot::render_figure(&fig, "spectrum", request.color),
                Format::Json => json::to_string(&json::spectrum_document(&space)),
            }
        }
        Target::Burnside => {
            let b = BurnsideSpace::build(&Arc::new(space));
            match request.format {
                Format::Ascii => ascii::render_figure(&figure_of_burnside(&b)),
                Format::Dot => {
                    dot::render_figure(&figure_of_burnside(&b), "burnside", request.color)
                }
                Format::Json => json::to_string(&json::burnside_document(&b)),
            }
        }
        Target::Compare => {
            let space = Arc::new(space);
            let b = BurnsideSpace::build(&space);
            let source_fig = figure_of_space(&space, request.shg);
            let quotient_fig = figure_of_burnside(&b);
            let links: Vec<(usize, usize)> =
                (0..space.len()).map(|pi| (pi, b.rho_index(pi))).collect();
            match request.format {
                Format::Ascii => ascii::render_compare(&source_fig, &quotient_fig),
                Format::Dot => {
                    dot::render_compare(&source_fig, &quotient_fig, &links, request.color)
                }
                Format::Json => {
                    let mut doc = json::burnside_document(&b);
                    if request.shg {
                        doc.chromatic = Some(
                            space
                                .points()
                                .iter()
                                .map(|&p| {
                                    let c = space.chromatic_image(p).expect("own point");
                                    let height = match c.height {
                                        crate::spectrum::ChromaticHeight::One => "1",
                                        crate::spectrum::ChromaticHeight::Infinity => "inf",
                                    };
                                    format!("P({},{},{})", space.label(c.class), c.prime, height)
                                })
                                .collect(),
                        );
                    }
                    json::to_string(&doc)
                }
            }
        }
        Target::Ideals => {
            let p = request.local_prime.ok_or(Error::LocalPrimeRequired)?;
            debug_assert_eq!(space.slots(), [PrimeSlot::Zero, PrimeSlot::Prime(p)]);
            let local = space;
            // listing is materialized only on demand
            let cap = if request.list { ideals::LIST_CAP } else { 0 };
            let enumeration = ideals::enumerate_admissible_local_capped(&local, p, cap)?;
            if request.list && enumeration.sets.is_none() {
                warnings.push(format!(
                    "more than {} admissible sets; listing suppressed (count-only mode)",
                    ideals::LIST_CAP
                ));
            }
            match request.format {
                Format::Ascii => ascii::render_ideals(&local, &enumeration, request.list),
                Format::Dot => dot::render_figure(
                    &figure_of_space(&local, false),
                    "ideals_slice",
                    request.color,
                ),
                Format::Json => {
                    let mut doc = json::spectrum_document(&local);
                    doc.admissible_count = Some(enumeration.count);
                    doc.admissible_count_exact = Some(enumeration.count_is_exact);
                    if request.list {
                        doc.admissible_sets = enumeration
                            .sets
                            .as_ref()
                            .map(|sets| sets.iter().map(|s| s.iter().copied().collect()).collect());
                    }
                    json::to_string(&doc)
                }
            }
        }
        Target::Subgroups => {
            let k = space.classes().len();
            let lattice = hasse::hasse_arcs(k, |h, kk| space.class_subconjugate(kk, h));
            match request.format {
                Format::Ascii => ascii::render_subgroups(&space, &lattice),
                Format::Dot => dot::render_class_lattice(&space, &lattice, request.color),
                Format::Json => {
                    let mut doc = json::spectrum_document(&space);
                    doc.points = Vec::new();
                    doc.specialization = Vec::new();
                    doc.lattice = Some(lattice.into_iter().map(|(a, b)| [a, b]).collect());
                    json::to_string(&doc)
                }
            }
        }
    };
    Ok(RunOutput { document, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::render::hasse::close_arcs;

    fn request(target: Target, group: &str, format: Format) -> RenderRequest {
        let mut r = RenderRequest::new(target, group);
        r.format = format;
        r
    }

    #[test]
    fn figure_edges_close_to_the_full_relation() {
        let g = Arc::new(PermGroup::from_descriptor("D8").unwrap());
        let space = SpecSpace::build(&g);
        let fig = figure_of_space(&space, false);
        let closed = close_arcs(space.len(), &fig.edges);
        for (p, row) in closed.iter().enumerate() {
            for (q, &below) in row.iter().enumerate() {
                assert_eq!(below, space.specializes_indices(q, p));
            }
        }
    }

    #[test]
    fn d8_local_figure_has_16_nodes_19_arcs() {
        let g = Arc::new(PermGroup::from_descriptor("D8").unwrap());
        let local = SpecSpace::build_local(&g, 2).unwrap();
        let fig = figure_of_space(&local, false);
        assert_eq!(fig.nodes.len(), 16, "8 per row, two rows");
        // 11 cover arcs of the class lattice at the prime row plus
        // 8 vertical arcs into the zero row
        assert_eq!(fig.edges.len(), 19);
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        for (target, desc) in [
            (Target::Spectrum, "S3"),
            (Target::Burnside, "D8"),
            (Target::Compare, "C6"),
            (Target::Subgroups, "Q8"),
        ] {
            let out = run(&request(target, desc, Format::Json)).unwrap();
            let parsed: json::JsonDocument = serde_json::from_str(&out.document).unwrap();
            assert_eq!(json::to_string(&parsed), out.document, "{target:?}");
        }
    }

    #[test]
    fn deterministic_across_runs() {
        for format in [Format::Ascii, Format::Dot, Format::Json] {
            let a = run(&request(Target::Compare, "S3", format)).unwrap();
            let b = run(&request(Target::Compare, "S3", format)).unwrap();
            assert_eq!(a.document, b.document);
        }
    }

    #[test]
    fn ideals_requires_local_prime() {
        let r = request(Target::Ideals, "S3", Format::Json);
        assert!(matches!(run(&r), Err(Error::LocalPrimeRequired)));
        let mut r = request(Target::Ideals, "S3", Format::Json);
        r.local_prime = Some(3);
        let out = run(&r).unwrap();
        let doc: json::JsonDocument = serde_json::from_str(&out.document).unwrap();
        // one C_p-like 4-point block (7 down-sets) and two 2-chains (3 each)
        assert_eq!(doc.admissible_count, Some(63));
    }

    #[test]
    fn burnside_s3_3local_gluing_counts() {
        let mut r = request(Target::Burnside, "S3", Format::Json);
        r.local_prime = Some(3);
        let out = run(&r).unwrap();
        let doc: json::JsonDocument = serde_json::from_str(&out.document).unwrap();
        let gluing = doc.gluing.unwrap();
        assert_eq!(gluing.len(), 7, "3 glue classes at prime 3 plus 4 at zero");
        let sizes: Vec<usize> = gluing.iter().map(Vec::len).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 8);
    }

    #[test]
    fn trivial_group_json_is_two_slot_spec_z() {
        let out = run(&request(Target::Spectrum, "C1", Format::Json)).unwrap();
        let doc: json::JsonDocument = serde_json::from_str(&out.document).unwrap();
        assert_eq!(doc.points.len(), 2);
        let slots: Vec<&str> = doc.points.iter().map(|p| p.slot.as_str()).collect();
        assert_eq!(slots, vec!["0", "q*"]);
        assert_eq!(doc.specialization, vec![[1, 0]]);
    }

    #[test]
    fn invalid_local_prime_is_rejected() {
        let mut r = request(Target::Spectrum, "S3", Format::Json);
        r.local_prime = Some(6);
        assert!(matches!(run(&r), Err(Error::NotPrime(6))));
    }
}
