use std::path::{Path, PathBuf};
use std::process::Command;

use semihopf::structures::check_structure;
use semihopf::{example, Example};
use semihopf_cli::format::{emit_example, parse_document, Document};
use serde_json::{json, Value};
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn semihopf(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_semihopf")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, doc: &Value) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, serde_json::to_string_pretty(doc).unwrap()).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn automaton(dfa: Value) -> Value {
    json!({
        "format_version": 1,
        "kind": "automaton",
        "over": { "example": "words_grouplike", "alphabet": ["x", "y"], "semiring": "boolean" },
        "dfa": dfa,
    })
}

fn contains_x() -> Value {
    automaton(json!({
        "states": ["n", "s"],
        "alphabet": ["x", "y"],
        "transitions": { "n": { "x": "s", "y": "n" }, "s": { "x": "s", "y": "s" } },
        "initial": "n",
        "accepting": ["s"],
    }))
}

fn ends_in_y() -> Value {
    automaton(json!({
        "states": ["a", "b"],
        "alphabet": ["x", "y"],
        "transitions": { "a": { "x": "a", "y": "b" }, "b": { "x": "a", "y": "b" } },
        "initial": "a",
        "accepting": ["b"],
    }))
}

/// A hand-written boolean group Hopf semialgebra of Z/2.
fn z2_file() -> Value {
    json!({
        "format_version": 1,
        "name": "z2",
        "kind": "hopf",
        "semiring": "boolean",
        "basis": ["e", "g"],
        "maps": {
            "mu": [
                { "args": ["e", "e"], "to": [{ "coeff": "1", "basis": "e" }] },
                { "args": ["e", "g"], "to": [{ "coeff": "1", "basis": "g" }] },
                { "args": ["g", "e"], "to": [{ "coeff": "1", "basis": "g" }] },
                { "args": ["g", "g"], "to": [{ "coeff": "1", "basis": "e" }] }
            ],
            "eta": [{ "coeff": "1", "basis": "e" }],
            "delta": [
                { "from": "e", "to": [{ "coeff": "1", "basis": ["e", "e"] }] },
                { "from": "g", "to": [{ "coeff": "1", "basis": ["g", "g"] }] }
            ],
            "epsilon": [{ "from": "e", "value": "1" }, { "from": "g", "value": "1" }],
            "antipode": [
                { "from": "e", "to": [{ "coeff": "1", "basis": "e" }] },
                { "from": "g", "to": [{ "coeff": "1", "basis": "g" }] }
            ]
        }
    })
}

#[test]
fn haz_words_fails_with_the_two_letter_witness() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "haz.json", &json!({ "example": "haz_words", "alphabet": ["2", "3"], "semiring": "naturals" }));
    let r = semihopf(&["--json", "check", "--file", p(&f), "--degree", "2"]);
    assert_eq!(r.code, 1, "{}", r.stderr);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(doc["format_version"], 1);
    assert_eq!(doc["result"]["verdict"], "fail");
    let witnesses = doc["result"]["reports"][1]["witnesses"].as_array().unwrap();
    let w = witnesses.iter().find(|w| w["inputs"] == json!(["[2]", "[3]"])).expect("([2],[3]) witness");
    assert_eq!(w["law"], "comultiplication is multiplicative");
    assert_eq!(w["lhs"], "([] ⊗ [2,3]) + ([2] ⊗ [3]) + ([2,3] ⊗ [])");
    assert_eq!(w["rhs"], "([] ⊗ [2,3]) + ([2] ⊗ [3]) + ([2,3] ⊗ []) + ([3] ⊗ [2])");
}

#[test]
fn left_integrals_on_polynomials_over_booleans() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "gp.json", &json!({ "format_version": 1, "example": "poly_grouplike", "semiring": "boolean" }));
    let r = semihopf(&["search-integrals", "--file", p(&f), "--side", "left", "--degree", "5"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("2 found"), "{}", r.stdout);
    let lines: Vec<&str> = r.stdout.lines().map(str::trim).collect();
    assert!(lines.contains(&"0"));
    assert!(lines.iter().any(|l| l.starts_with("δ_1") && l.contains("[total]")), "{}", r.stdout);
}

#[test]
fn automaton_product_verifies_the_convolution() {
    let dir = TempDir::new().unwrap();
    let a1 = write(&dir, "containsx.json", &contains_x());
    let a2 = write(&dir, "endsy.json", &ends_in_y());
    let r = semihopf(&["automaton", "product", "--a1", p(&a1), "--a2", p(&a2), "--maxlen", "5", "--verify"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("ρ([x,y]) = 1"), "{}", r.stdout);
    assert!(r.stdout.contains("ρ([y,x]) = 0"), "{}", r.stdout);
    assert!(r.stdout.contains("PASS"), "{}", r.stdout);
}

#[test]
fn automaton_run_reads_one_word() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "containsx.json", &contains_x());
    let r = semihopf(&["automaton", "run", "--file", p(&a), "--word", "y,x,y"]);
    assert_eq!((r.code, r.stdout.trim()), (0, "ρ([y,x,y]) = 1"));
    let r = semihopf(&["automaton", "run", "--file", p(&a), "--word", "y,y"]);
    assert_eq!(r.stdout.trim(), "ρ([y,y]) = 0");
    let r = semihopf(&["automaton", "check", "--file", p(&a)]);
    assert_eq!(r.code, 2);
    let r = semihopf(&["check", "--file", p(&a)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
}

#[test]
fn builtin_reference_with_group_alias_passes() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "z2.json", &json!({ "example": "group_hopf", "group": "Z2", "semiring": "boolean" }));
    let r = semihopf(&["check", "--file", p(&f)]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.lines().all(|l| !l.starts_with("FAIL")));
}

#[test]
fn handwritten_hopf_file_passes() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "z2.json", &z2_file());
    let r = semihopf(&["check", "--file", p(&f), "--degree", "2"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
}

#[test]
fn coefficient_outside_the_carrier_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let mut doc = z2_file();
    doc["maps"]["mu"][0]["to"][0]["coeff"] = json!("2");
    let f = write(&dir, "bad.json", &doc);
    let r = semihopf(&["check", "--file", p(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("`2`") && r.stderr.contains("mu"), "{}", r.stderr);
}

#[test]
fn missing_counit_is_named() {
    let dir = TempDir::new().unwrap();
    let mut doc = z2_file();
    doc["maps"].as_object_mut().unwrap().remove("epsilon");
    let f = write(&dir, "noeps.json", &doc);
    let r = semihopf(&["check", "--file", p(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("missing the `epsilon` map"), "{}", r.stderr);
}

#[test]
fn undeclared_label_and_bad_version_are_rejected() {
    let dir = TempDir::new().unwrap();
    let mut doc = z2_file();
    doc["maps"]["antipode"][1]["to"][0]["basis"] = json!("h");
    let f = write(&dir, "label.json", &doc);
    let r = semihopf(&["check", "--file", p(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("`h`"), "{}", r.stderr);

    let mut doc = z2_file();
    doc["format_version"] = json!(2);
    let f = write(&dir, "v2.json", &doc);
    let r = semihopf(&["check", "--file", p(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("format_version 2"), "{}", r.stderr);

    let f = dir.path().join("broken.json");
    std::fs::write(&f, "{ \"format_version\": 1,\n  \"kind\": }").unwrap();
    let r = semihopf(&["check", "--file", p(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
}

#[test]
fn non_hopf_input_to_hopf_commands_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bi.json", &json!({ "example": "poly_binomial", "semiring": "naturals" }));
    let r = semihopf(&["search-separability", "--file", p(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not a Hopf semialgebra"), "{}", r.stderr);
}

#[test]
fn antipode_search_finds_the_inverse() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "z2.json", &z2_file());
    let r = semihopf(&["search-antipode", "--file", p(&f), "--degree", "2"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("1 found") && r.stdout.contains("g ↦ g"), "{}", r.stdout);
}

#[test]
fn separability_on_the_group_semialgebra() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "z2.json", &z2_file());
    let r = semihopf(&["--json", "search-separability", "--file", p(&f)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(doc["format_version"], 1);
    assert!(doc["result"].is_object());
    let text = semihopf(&["search-separability", "--file", p(&f)]).stdout;
    assert!(text.contains("(e ⊗ e) + (g ⊗ g)"), "{text}");
}

#[test]
fn integrals_in_the_group_semialgebra() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "z2.json", &z2_file());
    let r = semihopf(&["search-integrals-in", "--file", p(&f), "--side", "right"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("e + g  [normalized]"), "{}", r.stdout);
}

#[test]
fn dual_output_is_a_checkable_structure_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "z2.json", &z2_file());
    let r = semihopf(&["dual", "--file", p(&f)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let dual = dir.path().join("dual.json");
    std::fs::write(&dual, &r.stdout).unwrap();
    let r = semihopf(&["check", "--file", p(&dual), "--degree", "2"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
}

#[test]
fn convolution_of_identity_and_antipode_is_the_unit_counit() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "z2.json", &z2_file());
    let r = semihopf(&["convolve", "--file", p(&f), "--f", "id", "--g", "antipode"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("e ↦ e") && r.stdout.contains("g ↦ e"), "{}", r.stdout);

    let op = write(&dir, "t.json", &json!({ "format_version": 1, "functional": [{ "from": "e", "value": "1" }] }));
    let r = semihopf(&["convolve", "--file", p(&f), "--f", p(&op), "--g", "epsilon"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = semihopf(&["convolve", "--file", p(&f), "--f", "id", "--g", "epsilon"]);
    assert_eq!(r.code, 2);
}

#[test]
fn smash_product_of_the_group_datum() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "z2.json", &z2_file());
    let r = semihopf(&["smash", "--file", p(&f), "--degree", "2"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("(g ⊗ e*)·(g ⊗ g*) = e ⊗ e*"), "{}", r.stdout);
    assert!(r.stdout.contains("PASS algebra morphism"), "{}", r.stdout);
}

#[test]
fn examples_list_and_emit() {
    let r = semihopf(&["examples", "list"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("haz_words") && r.stdout.contains("negative control"));
    let r = semihopf(&["examples", "emit", "group_hopf"]);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!((doc["format_version"].clone(), doc["kind"].clone()), (json!(1), json!("hopf")));
    let r = semihopf(&["examples", "emit", "poly_binomial", "--semiring", "naturals"]);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(doc["example"], "poly_binomial");
    let r = semihopf(&["examples", "emit", "nonesuch"]);
    assert_eq!(r.code, 2);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "haz.json", &json!({ "example": "haz_words", "alphabet": ["2", "3"], "semiring": "naturals" }));
    let first = semihopf(&["--json", "check", "--file", p(&f), "--degree", "2"]);
    let second = semihopf(&["--json", "check", "--file", p(&f), "--degree", "2"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn emitted_gallery_round_trips() {
    for (ex, s) in Example::gallery() {
        let original = example(&ex, &s).unwrap();
        let emitted = emit_example(&ex, &s).unwrap();
        let text = serde_json::to_string(&emitted).unwrap();
        let Document::Structure { desc, .. } = parse_document(&text).unwrap() else {
            panic!("{} did not parse back as a structure", ex.name());
        };
        let (a, b) = (check_structure(&original, 2).unwrap(), check_structure(&desc, 2).unwrap());
        assert_eq!((a.checked, a.failures), (b.checked, b.failures), "{} over {}", ex.name(), s.name());
        let key = |r: &semihopf::CheckReport| {
            r.witnesses.first().map(|w| (w.law.clone(), w.inputs.clone(), w.lhs.clone(), w.rhs.clone()))
        };
        assert_eq!(key(&a), key(&b), "{} over {}", ex.name(), s.name());
    }
}
