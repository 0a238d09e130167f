//! The versioned JSON document (schema 1).
//!
//! Field order is fixed by the struct definitions, so serialize → parse →
//! re-serialize is byte-identical. The `specialization` field carries the
//! Hasse arcs `[q, p]` (q immediately below p); the full relation is their
//! transitive closure.

use serde::{Deserialize, Serialize};

use crate::burnside::BurnsideSpace;
use crate::render::hasse::hasse_arcs;
use crate::spectrum::SpecSpace;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct JsonDocument {
    pub schema: u32,
    pub group: JsonGroup,
    pub points: Vec<JsonPoint>,
    pub specialization: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gluing: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub admissible_count: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub admissible_count_exact: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub admissible_sets: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chromatic: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct JsonGroup {
    pub name: String,
    pub order: usize,
    pub classes: Vec<JsonClass>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct JsonClass {
    pub label: String,
    pub order: usize,
    pub class_size: usize,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct JsonPoint {
    pub class: usize,
    pub slot: String,
}

pub fn group_part(space: &SpecSpace) -> JsonGroup {
    JsonGroup {
        name: space.group().display_name(),
        order: space.group().order(),
        classes: space
            .classes()
            .iter()
            .enumerate()
            .map(|(i, c)| JsonClass {
                label: space.label(i).to_string(),
                order: c.order(),
                class_size: c.class_size(),
            })
            .collect(),
    }
}

/// The plain spectrum document: points plus Hasse arcs.
pub fn spectrum_document(space: &SpecSpace) -> JsonDocument {
    JsonDocument {
        schema: SCHEMA_VERSION,
        group: group_part(space),
        points: space
            .points()
            .iter()
            .map(|p| JsonPoint {
                class: p.class,
                slot: p.slot.to_string(),
            })
            .collect(),
        specialization: hasse_arcs(space.len(), |p, q| space.specializes_indices(q, p))
            .into_iter()
            .map(|(q, p)| [q, p])
            .collect(),
        gluing: None,
        admissible_count: None,
        admissible_count_exact: None,
        admissible_sets: None,
        lattice: None,
        chromatic: None,
    }
}

/// The spectrum document extended with the ρ-fibers of the Burnside quotient.
pub fn burnside_document(b: &BurnsideSpace) -> JsonDocument {
    let mut doc = spectrum_document(b.source());
    doc.gluing = Some(b.points().iter().map(|bp| bp.members().to_vec()).collect());
    doc
}

pub fn to_string(doc: &JsonDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("document serializes");
    out.push('\n');
    out
}
