//! The group catalog swept by the verification suites and the `golden` verb.

use crate::group::PermGroup;

/// Descriptors of every catalog group (all of order <= 24): the cyclic and
/// dihedral families, the classical small groups, and a few direct products.
pub fn descriptors() -> Vec<String> {
    let mut out: Vec<String> = (1..=24).map(|n| format!("C{n}")).collect();
    out.extend((2..=12).map(|m| format!("D{}", 2 * m)));
    for extra in [
        "Q8",
        "S3",
        "S4",
        "A4",
        "C2 x C2 x C2",
        "C2 x C4",
        "C2 x C6",
        "C3 x C3",
        "C2 x D8",
        "C2 x A4",
    ] {
        out.push(extra.to_string());
    }
    out
}

/// Catalog groups with order at most `max_order`, built with the default cap.
pub fn groups_up_to(max_order: usize) -> Vec<PermGroup> {
    descriptors()
        .iter()
        .map(|d| PermGroup::from_descriptor(d).expect("catalog descriptors parse"))
        .filter(|g| g.order() <= max_order)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_builds_and_is_bounded() {
        let groups = groups_up_to(24);
        assert!(groups.len() > 40);
        assert!(groups.iter().all(|g| g.order() <= 24));
        assert!(groups.iter().any(|g| g.display_name() == "S4"));
        assert!(groups.iter().any(|g| g.display_name() == "C2 x A4"));
    }
}
