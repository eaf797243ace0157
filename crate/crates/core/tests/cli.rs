use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_toric-dimers"))
}

fn instance(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("instances").join(name)
}

fn run(input: &Path, args: &[&str]) -> Output {
    bin().arg("--input").arg(input).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_exit_codes() {
    let ok = run(&instance("example1.json"), &["verify"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let not_ideal = run(&instance("grid4x4_sg2.json"), &["verify"]);
    assert_eq!(not_ideal.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&not_ideal.stderr).contains("NOT_IDEAL"));
}

#[test]
fn bundled_names_resolve() {
    let o = run(Path::new("example1.json"), &["measure"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/measure_example1.txt"));
}

#[test]
fn dangling_vertex_is_rejected() {
    let mut doc: serde_json::Value = serde_json::from_str(include_str!("../instances/example1.json")).unwrap();
    doc["vertices"].as_array_mut().unwrap().push(serde_json::json!({"id": 4, "color": "white", "pos": [1, 2, 1, 2]}));
    doc["edges"]
        .as_array_mut()
        .unwrap()
        .push(serde_json::json!({"id": 7, "tail": 0, "head": 4, "weight": "1", "lift": [1, 6, 1, 6]}));
    doc["orientation"].as_array_mut().unwrap().push(7.into());
    let path = std::env::temp_dir().join(format!("toric-dimers-dangling-{}.json", std::process::id()));
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = run(&path, &["validate"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("LEAFLESS_VIOLATION"), "{}", stdout(&o));
}

#[test]
fn missing_file_is_an_error() {
    let o = run(Path::new("no/such/file.json"), &["verify"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_report_has_schema() {
    let o = run(&instance("example1.json"), &["--format", "json", "verify"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], "THEOREM_HOLDS");
    assert_eq!(v["lhs"]["num"], "1 - 146*mu + 5005*mu^2");
}

#[test]
fn float_backend_agrees() {
    let o = run(&instance("example1.json"), &["--backend", "float", "verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("THEOREM_HOLDS"));
}

#[test]
fn golden_outputs() {
    let cases = [
        ("charpoly", "example1", include_str!("golden/charpoly_example1.txt")),
        ("charpoly", "example1_switched", include_str!("golden/charpoly_example1_switched.txt")),
        ("measure", "example1", include_str!("golden/measure_example1.txt")),
        ("measure", "example1_switched", include_str!("golden/measure_example1_switched.txt")),
        ("verify", "example1", include_str!("golden/verify_example1.txt")),
        ("verify", "example1_switched", include_str!("golden/verify_example1_switched.txt")),
    ];
    for (cmd, name, expect) in cases {
        let o = run(&instance(&format!("{name}.json")), &[cmd]);
        assert_eq!(o.status.code(), Some(0), "{cmd} {name}");
        assert_eq!(stdout(&o), expect, "{cmd} {name}");
    }
}
