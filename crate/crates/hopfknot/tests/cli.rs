use std::path::{Path, PathBuf};
use std::process::Command;

use hopfknot::format;
use hopfknot_core::chromatic;
use serde_json::{json, Value};

struct Run {
    code: i32,
    report: Value,
}

fn run_env(dir: &Path, args: &[&str], threads: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hopfknot"));
    cmd.current_dir(dir).args(args).arg("--json");
    match threads {
        Some(t) => cmd.env("HOPFKNOT_THREADS", t),
        None => cmd.env_remove("HOPFKNOT_THREADS"),
    };
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(stdout.trim()).unwrap_or(Value::Null);
    Run { code: out.status.code().expect("exited"), report }
}

fn run(dir: &Path, args: &[&str]) -> Run {
    run_env(dir, args, None)
}

fn write(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p
}

/// A directory holding the zoo algebras and the standard diagrams.
fn workspace() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for (name, file) in
        [("group-z2", "z2.json"), ("group-s3", "s3.json"), ("sweedler", "sweedler.json"), ("uq-sl2", "uq2.json")]
    {
        assert_eq!(run(d, &["zoo", name, "-o", file]).code, 0, "zoo {name}");
    }
    write(d, "genus2.json", &format::heegaard_to_json(&chromatic::genus_two_example()));
    write(d, "lens2.json", &format::heegaard_to_json(&chromatic::lens_space(2).unwrap()));
    write(d, "empty.json", &json!({"events": [], "basepoints": []}));
    write(
        d,
        "kink.json",
        &json!({"events": [
            {"t": "cup", "at": 0, "orient": "ccw"},
            {"t": "cross", "at": 0, "kind": "pp"},
            {"t": "cap", "at": 0, "orient": "cw"}
        ], "basepoints": [{"component": 0, "event": 0, "slot": 1}]}),
    );
    dir
}

#[test]
fn compare_genus_two_over_small_quantum_group() {
    let w = workspace();
    let r = run(w.path(), &["compare", "genus2.json", "--algebra", "uq2.json", "-o", "link.json"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["checks"]["equal"], json!(true));
    assert_eq!(r.report["results"]["chromatic"], r.report["results"]["hkr"]);
    assert_eq!(r.report["results"]["linking"]["matrix"], json!([[1, -1], [-1, -2]]));
    let link = std::fs::read_to_string(w.path().join("link.json")).unwrap();
    assert_eq!(format::link_from_json(&link).unwrap().n_crossings(), 5);
}

#[test]
fn integrals_of_sweedler() {
    let w = workspace();
    let r = run(w.path(), &["integrals", "sweedler.json"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["results"]["flags"]["unimodular"], json!(false));
    assert_eq!(r.report["results"]["flags"]["spherical"], json!(false));
    assert_eq!(r.report["results"]["mu"], Value::Null);
}

#[test]
fn hkr_of_empty_link_is_one() {
    let w = workspace();
    let r = run(w.path(), &["hkr", "empty.json", "--algebra", "z2.json", "--double"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["results"]["value"], json!("1"));
    assert_eq!(r.report["results"]["components"], json!(0));
}

#[test]
fn hkr_needs_an_r_matrix() {
    let w = workspace();
    assert_eq!(run(w.path(), &["hkr", "kink.json", "--algebra", "z2.json"]).code, 2);
}

#[test]
fn double_file_feeds_hkr_and_integrals() {
    let w = workspace();
    let r = run(w.path(), &["double", "s3.json", "-o", "ds3.json", "--check"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["results"]["dim"], json!(36));
    assert_eq!(r.report["results"]["delta"], json!("1"));
    assert_eq!(r.report["checks"]["double"], json!(true));
    assert_eq!(r.report["outputs"][0]["path"], json!("ds3.json"));

    let k = run(w.path(), &["hkr", "kink.json", "--algebra", "ds3.json"]);
    assert_eq!(k.code, 0);
    assert_eq!(k.report["results"]["value"], json!("1"));
    assert_eq!(k.report["results"]["linking"]["matrix"], json!([[1]]));

    let i = run(w.path(), &["integrals", "ds3.json", "--check"]);
    assert_eq!(i.code, 0);
    assert_eq!(i.report["results"]["flags"]["quasitriangular"], json!(true));
    assert_eq!(i.report["results"]["flags"]["ribbon"], json!(true));
}

#[test]
fn chromatic_counts_lens_space_homomorphisms() {
    let w = workspace();
    let r = run(w.path(), &["chromatic", "lens2.json", "--algebra", "s3.json"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["results"]["value"], json!("4"));
}

#[test]
fn verify_hopf_exit_codes() {
    let w = workspace();
    let ok = run(w.path(), &["verify-hopf", "uq2.json", "--check"]);
    assert_eq!(ok.code, 0);
    assert_eq!(ok.report["checks"]["spherical"], json!(true));
    assert_eq!(run(w.path(), &["verify-hopf", "sweedler.json"]).code, 0);
    let sw = run(w.path(), &["verify-hopf", "sweedler.json", "--check"]);
    assert_eq!(sw.code, 1);
    assert_eq!(sw.report["checks"]["spherical"], json!(false));

    // Break coassociativity-compatible data by scaling the counit.
    let mut bad: Value = serde_json::from_str(&std::fs::read_to_string(w.path().join("z2.json")).unwrap()).unwrap();
    bad["counit"] = json!(["2", "2"]);
    write(w.path(), "bad.json", &bad);
    let r = run(w.path(), &["verify-hopf", "bad.json"]);
    assert_eq!(r.code, 1);
    assert!(!r.report["results"]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn input_errors_exit_two() {
    let w = workspace();
    let d = w.path();
    std::fs::write(d.join("broken.json"), "{").unwrap();
    let r = run(d, &["integrals", "broken.json"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report["error"]["module"], json!("format"));
    assert_eq!(r.report["error"]["location"], json!("broken.json"));

    assert_eq!(run(d, &["integrals", "missing.json"]).code, 2);
    assert_eq!(run(d, &["zoo", "nonsense"]).code, 2);
    assert_eq!(run(d, &["frobnicate"]).code, 2);

    write(
        d,
        "dup.json",
        &json!({"genus": 1, "beta": [[{"t": "cross", "alpha": 0, "slot": 1, "d": 0}, {"t": "cross", "alpha": 0, "slot": 1, "d": 1}]], "basepoints": [0]}),
    );
    let r = run(d, &["chromatic", "dup.json", "--algebra", "z2.json"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report["error"]["module"], json!("chromatic"));

    write(
        d,
        "twisted.json",
        &json!({"events": [{"t": "cup", "at": 0, "orient": "ccw"}, {"t": "cap", "at": 0, "orient": "ccw"}]}),
    );
    let r = run(d, &["hkr", "twisted.json", "--algebra", "z2.json", "--double"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report["error"]["module"], json!("hkr"));

    // Not in normal form: the flat lens space has no handle passage left.
    write(d, "flat.json", &format::heegaard_to_json(&chromatic::lens_space(2).unwrap().flatten().unwrap()));
    assert_eq!(run(d, &["compare", "flat.json", "--algebra", "z2.json"]).code, 2);

    // Non-spherical algebra is a verification failure, not an input error.
    assert_eq!(run(d, &["chromatic", "lens2.json", "--algebra", "sweedler.json"]).code, 1);
}

#[test]
fn thread_cap_is_validated_and_results_are_deterministic() {
    let w = workspace();
    let d = w.path();
    let args = ["compare", "genus2.json", "--algebra", "s3.json"];
    assert_eq!(run_env(d, &args, Some("zero")).code, 2);
    let mut one = run_env(d, &args, Some("1"));
    let mut four = run_env(d, &args, Some("4"));
    assert_eq!(one.code, 0);
    assert_eq!(four.code, 0);
    assert_eq!(four.report["threads"], json!(4));
    for r in [&mut one, &mut four] {
        let o = r.report.as_object_mut().unwrap();
        o.remove("timing_ms");
        o.remove("threads");
    }
    assert_eq!(one.report, four.report);
}

#[test]
fn emitted_files_reparse() {
    let w = workspace();
    for f in ["z2.json", "s3.json", "sweedler.json", "uq2.json"] {
        let text = std::fs::read_to_string(w.path().join(f)).unwrap();
        let a = format::algebra_from_json(&text).unwrap();
        assert_eq!(format::algebra_to_json(&a.algebra), serde_json::from_str::<Value>(&text).unwrap());
    }
}
