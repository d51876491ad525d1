mod common;

use common::{fixture, fixture_names, fixture_text, mutate, weakhopf, write_temp};
use weakhopf::format::{write_documents, CocycleDoc, Document, MorphismDoc, QtDoc};
use weakhopf_core::category::HModule;
use weakhopf_core::linalg::{int, unit_vector};
use weakhopf_core::qt::WeakCocycle;
use weakhopf_core::zoo::{groupoid_function_algebra, v4, z2, GroupoidSpec};
use weakhopf_core::LinearMap;

#[test]
fn every_fixture_passes_every_command() {
    for name in fixture_names() {
        let path = fixture(&name);
        for cmd in ["check", "transmute", "quantize", "twist", "verify-iso"] {
            let run = weakhopf([cmd, path.to_str().unwrap()]);
            assert_eq!(run.code, 0, "{cmd} {name}\n{}{}", run.stdout, run.stderr);
        }
    }
}

#[test]
fn check_lists_every_axiom_with_pass() {
    let run = weakhopf(["check", fixture("N").to_str().unwrap()]);
    assert_eq!(run.code, 0);
    for name in ["associativity", "weak-unit-axiom", "weak-counit-axiom", "S*id=eps_s", "intertwiner", "cocycle"] {
        assert!(run.stdout.contains(&format!("  PASS {name}\n")), "{name}");
    }
    assert!(!run.stdout.contains("FAIL"));
}

#[test]
fn corrupted_counit_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let text = mutate(&fixture_text("N"), "N", "counit", 0, 0, "0");
    let path = write_temp(&dir, "broken.whf", &text);
    let run = weakhopf(["check", path.to_str().unwrap()]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("  FAIL counit-axiom at [0]"), "{}", run.stdout);
}

#[test]
fn verify_iso_ends_with_presentation_verdict() {
    let run = weakhopf(["verify-iso", fixture("N").to_str().unwrap()]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout.lines().last(), Some("presentations equal"));
    let run = weakhopf(["verify-iso", fixture("kD4-mixed").to_str().unwrap()]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout.lines().last(), Some("presentations differ"));
}

#[test]
fn parse_errors_name_file_line_and_field() {
    let dir = tempfile::tempdir().unwrap();
    let text = fixture_text("N").replacen("dim: 2\n", "dim: 2\ncolour: red\n", 1);
    let path = write_temp(&dir, "unknown.whf", &text);
    let run = weakhopf(["check", path.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("unknown.whf"), "{}", run.stderr);
    assert!(run.stderr.contains("line 4, field `colour`: unknown field"), "{}", run.stderr);
    assert!(run.stdout.is_empty());
}

#[test]
fn missing_file_is_an_input_error() {
    let run = weakhopf(["check", "/nonexistent/file.whf"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("/nonexistent/file.whf"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(weakhopf(["check"]).code, 2);
    assert_eq!(weakhopf(["frobnicate"]).code, 2);
}

#[test]
fn element2_of_wrong_dimension_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let text = fixture_text("N") + "---\nkind: qt-structure\nname: bad\nalgebra: N\ndim: 1\nelement2:\n  1\n";
    let path = write_temp(&dir, "dim.whf", &text);
    let run = weakhopf(["check", path.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("dimension mismatch"), "{}", run.stderr);
}

#[test]
fn verify_iso_rejects_a_non_canonical_r() {
    let dir = tempfile::tempdir().unwrap();
    let text = fixture_text("kZ2").replace(
        "name: kZ2.R\nalgebra: kZ2\ndim: 2\nelement2:\n  1 0\n  0 0\nelement2-inverse:\n  1 0\n  0 0\n",
        "name: kZ2.R\nalgebra: kZ2\ndim: 2\nelement2:\n  1/2 1/2\n  1/2 -1/2\n",
    );
    assert_ne!(text, fixture_text("kZ2"));
    let path = write_temp(&dir, "triangular.whf", &text);
    assert_eq!(weakhopf(["check", path.to_str().unwrap()]).code, 0);
    let run = weakhopf(["verify-iso", path.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("precondition unmet"), "{}", run.stderr);
}

#[test]
fn quantize_requires_cocommutative_input() {
    let dir = tempfile::tempdir().unwrap();
    let h = groupoid_function_algebra("fun", &GroupoidSpec::pair(2)).unwrap();
    let trivial = WeakCocycle::trivial(&h);
    let docs = [
        Document::QuantumGroupoid(h.clone()),
        Document::Cocycle(CocycleDoc {
            name: "fun.F".into(),
            algebra: "fun".into(),
            dim: 4,
            f: trivial.f().to_vec(),
            f_inv: Some(trivial.f_inv().to_vec()),
        }),
    ];
    let path = write_temp(&dir, "fun.whf", &write_documents(&docs));
    let run = weakhopf(["quantize", path.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("not cocommutative"), "{}", run.stderr);
}

#[test]
fn fail_fast_stops_at_the_first_failing_suite() {
    let dir = tempfile::tempdir().unwrap();
    let text = mutate(&fixture_text("N"), "N", "counit", 0, 0, "0");
    let path = write_temp(&dir, "broken.whf", &text);
    let full = weakhopf(["check", path.to_str().unwrap()]);
    let fast = weakhopf(["check", "--fail-fast", path.to_str().unwrap()]);
    assert_eq!(fast.code, 1);
    assert!(fast.stdout.len() < full.stdout.len());
    let headers: Vec<&str> = fast.stdout.lines().filter(|l| l.starts_with('[')).collect();
    assert_eq!(headers, ["[N] weak-bialgebra"]);
}

#[test]
fn structured_reports_are_deterministic_json() {
    let dir = tempfile::tempdir().unwrap();
    let text = mutate(&fixture_text("N"), "N", "counit", 0, 0, "0");
    let path = write_temp(&dir, "broken.whf", &text);
    let a = weakhopf(["check", "--format", "structured", path.to_str().unwrap()]);
    let b = weakhopf(["check", "--format", "structured", path.to_str().unwrap()]);
    assert_eq!(a.code, 1);
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(json["passed"], false);
    let failing: Vec<&serde_json::Value> =
        json["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert!(failing.iter().any(|c| c["name"] == "counit-axiom" && c["witness"]["indices"][0] == 0));
    assert!(failing.iter().all(|c| c["witness"].is_object() || c["suite"] != "weak-bialgebra"));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let run = weakhopf([
        "verify-iso",
        "--format",
        "structured",
        "--out",
        out.to_str().unwrap(),
        fixture("N").to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.is_empty());
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(json["presentations_equal"], true);
    assert_eq!(json["presentations"].as_array().unwrap().len(), 2);
}

#[test]
fn zoo_emits_the_fixture_files() {
    for name in fixture_names() {
        let run = weakhopf(["zoo", "emit", &name]);
        assert_eq!(run.code, 0);
        assert_eq!(run.stdout, fixture_text(&name), "{name}");
    }
    let list = weakhopf(["zoo", "list"]);
    assert_eq!(list.stdout.lines().count(), fixture_names().len());
    assert_eq!(weakhopf(["zoo", "emit", "nope"]).code, 2);
}

fn z2_into_v4(matrix: LinearMap) -> Document {
    Document::Morphism(MorphismDoc { name: "f".into(), source: "kZ2".into(), target: "kV4".into(), matrix })
}

#[test]
fn transmute_along_a_morphism() {
    let dir = tempfile::tempdir().unwrap();
    // g ↦ a
    let good = LinearMap::from_columns(4, &[unit_vector(4, 0), unit_vector(4, 1)]);
    let path = write_temp(&dir, "f.whf", &write_documents(&[z2_into_v4(good)]));
    let files = [fixture("kZ2"), fixture("kV4"), path];
    let args = |extra: &[&str]| {
        let mut a: Vec<String> = vec!["transmute".into(), "--qt".into(), "kZ2.R".into()];
        a.extend(extra.iter().map(|s| s.to_string()));
        a.extend(files.iter().map(|p| p.to_str().unwrap().to_string()));
        a
    };
    let run = weakhopf(args(&[]));
    assert_eq!(run.code, 0, "{}{}", run.stdout, run.stderr);
    assert!(run.stdout.contains("[f] morphism"));

    let bad = LinearMap::from_columns(4, &[unit_vector(4, 0), vec![int(0), int(1), int(1), int(0)]]);
    std::fs::write(&files[2], write_documents(&[z2_into_v4(bad)])).unwrap();
    let run = weakhopf(args(&[]));
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("  FAIL f-multiplicative at"), "{}", run.stdout);

    let ambiguous = weakhopf(["transmute", files[0].to_str().unwrap(), files[1].to_str().unwrap()]);
    assert_eq!(ambiguous.code, 2);
    assert!(ambiguous.stderr.contains("expected exactly one qt-structure"));
}

#[test]
fn modules_are_checked() {
    let dir = tempfile::tempdir().unwrap();
    let z = z2();
    let mut m = HModule::regular(&z);
    let doc = |m: &HModule| write_documents(&[Document::QuantumGroupoid(z.clone()), Document::Module(m.clone())]);
    let path = write_temp(&dir, "module.whf", &doc(&m));
    assert_eq!(weakhopf(["check", path.to_str().unwrap()]).code, 0);

    let mut actions = m.actions().to_vec();
    actions[1] = LinearMap::identity(2).scale(&int(2));
    m = HModule::new("regular", "kZ2", 2, actions).unwrap();
    std::fs::write(&path, doc(&m)).unwrap();
    let run = weakhopf(["check", path.to_str().unwrap()]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("  FAIL module-associativity at"), "{}", run.stdout);
}

#[test]
fn qt_documents_without_inverse_are_solved() {
    let dir = tempfile::tempdir().unwrap();
    let v = v4();
    let one_one = weakhopf_core::linalg::tensor::outer(v.unit(), v.unit());
    let docs = [
        Document::QuantumGroupoid(v),
        Document::QtStructure(QtDoc { name: "R".into(), algebra: "kV4".into(), dim: 4, r: one_one, r_inv: None }),
    ];
    let path = write_temp(&dir, "v4.whf", &write_documents(&docs));
    let run = weakhopf(["check", path.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stderr);
}
