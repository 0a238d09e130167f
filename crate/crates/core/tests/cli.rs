//! End-to-end tests of the `mackeyspec` binary.

use std::process::{Command, Output};

fn mackeyspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mackeyspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = mackeyspec(args);
    assert!(out.status.success(), "{args:?}: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn golden_verbs_pass() {
    for (desc, prime) in [
        ("D8", "2"),
        ("S3", "3"),
        ("S3", "2"),
        ("C5", "5"),
        ("Q8", "2"),
    ] {
        let out = mackeyspec(&["golden", desc, prime]);
        assert!(out.status.success(), "golden {desc} {prime}: {out:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("result: PASS"), "{text}");
        assert!(!text.contains("[FAIL]"), "{text}");
    }
}

#[test]
fn spec_json_shape() {
    let text = stdout(&["spec", "D8", "--local", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["group"]["order"], 8);
    assert_eq!(doc["group"]["classes"].as_array().unwrap().len(), 8);
    assert_eq!(doc["points"].as_array().unwrap().len(), 16);
    assert_eq!(doc["specialization"].as_array().unwrap().len(), 19);
}

#[test]
fn burnside_s3_3local_gluing() {
    let text = stdout(&["burnside", "S3", "--local", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let gluing = doc["gluing"].as_array().unwrap();
    assert_eq!(gluing.len(), 7, "3 glue classes at prime 3 plus 4 at zero");
}

#[test]
fn ideals_list_and_count() {
    let text = stdout(&["ideals", "C3", "--local", "3", "--list"]);
    assert!(text.starts_with("admissible sets"));
    assert!(text.contains(": 7"));
    assert_eq!(text.lines().count(), 1 + 7, "count line plus seven sets");

    let text = stdout(&["ideals", "C3", "--local", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["admissible_count"], 7);
    assert!(
        doc.get("admissible_sets").is_none(),
        "not listed by default"
    );
}

#[test]
fn dot_output_is_well_formed() {
    let text = stdout(&["spec", "S3", "--format", "dot"]);
    assert!(text.starts_with("digraph spectrum {"));
    assert!(text.trim_end().ends_with('}'));
    let opens = text.matches('{').count();
    assert_eq!(opens, text.matches('}').count());
    // every edge endpoint is a declared node
    let declared: Vec<String> = text
        .lines()
        .filter_map(|l| l.trim().strip_suffix("];").map(|_| l.trim()))
        .filter_map(|l| l.split_whitespace().next().map(str::to_string))
        .collect();
    for line in text.lines().filter(|l| l.contains(" -> ")) {
        let edge = line.trim().trim_end_matches(';');
        let mut ends = edge.split(" -> ");
        let a = ends.next().unwrap();
        let b = ends.next().unwrap();
        assert!(declared.contains(&a.to_string()), "{a} declared");
        assert!(declared.contains(&b.to_string()), "{b} declared");
    }

    let colored = stdout(&["spec", "S3", "--format", "dot"]);
    assert!(colored.contains("color="));
    let plain = stdout(&["spec", "S3", "--format", "dot", "--no-color"]);
    assert!(!plain.contains("color="));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["compare", "D8", "--local", "2"],
        vec!["compare", "S3", "--shg", "--format", "json"],
        vec!["subgroups", "A4", "--format", "dot"],
        vec!["ideals", "D8", "--local", "2", "--list", "--format", "json"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
    }
}

#[test]
fn exit_codes_are_distinct() {
    // descriptor parse error -> 3
    let out = mackeyspec(&["spec", "Z99"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("error:"));

    // cap exceeded -> 4
    let out = mackeyspec(&["spec", "C3000"]);
    assert_eq!(out.status.code(), Some(4));
    let out = mackeyspec(&["spec", "C100", "--cap", "50"]);
    assert_eq!(out.status.code(), Some(4));

    // unknown flag -> 2 (usage)
    let out = mackeyspec(&["spec", "D8", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    // other domain errors -> 1
    let out = mackeyspec(&["spec", "D8", "--local", "6"]);
    assert_eq!(out.status.code(), Some(1));
    let out = mackeyspec(&["ideals", "D8"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compare_shows_both_spaces() {
    let text = stdout(&["compare", "D8", "--local", "2"]);
    assert!(text.contains("spectrum of D8"));
    assert!(text.contains("Burnside spectrum of D8"));
    assert!(text.contains("rho"));
    assert!(text.contains("fiber(8)"));
}

#[test]
fn shg_annotations_present() {
    let text = stdout(&["compare", "C3", "--shg"]);
    assert!(text.contains("P(C3,3,inf)"));
    assert!(text.contains("P(C3,0,1)"));
}

#[test]
fn subgroup_listing_counts() {
    let text = stdout(&["subgroups", "D8"]);
    assert!(text.contains("8 classes, 10 subgroups"));
}

#[test]
fn warning_above_256() {
    let out = mackeyspec(&["subgroups", "C257", "--format", "json"]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("warning"), "{err}");
}
