use std::process::{Command, Output};

fn cayley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn poly_and_count() {
    let out = cayley(&["poly", "--family", "p", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "a*c + b*c + c^2\n");

    let out = cayley(&["poly", "--family", "parking", "--n", "2"]);
    assert_eq!(stdout(&out), "2*u^2 + u\n");

    let out = cayley(&["count", "--family", "forest", "--n", "4"]);
    assert_eq!(stdout(&out), "125\n");
    let out = cayley(&["count", "--family", "parking", "--n", "2", "--c", "2"]);
    assert_eq!(stdout(&out), "8\n");
}

#[test]
fn series_accepts_fractions() {
    let out = cayley(&["series", "--kind", "ode", "--order", "3", "--a", "2", "--b", "1", "--egf"]);
    assert_eq!(stdout(&out), "1, 1, 4, 30\n");
    let out = cayley(&["series", "--kind", "ode", "--order", "1", "--a", "1/2", "--b", "-3/4", "--u", "2/3"]);
    assert_eq!(stdout(&out), "1, 2/3\n");
    let out = cayley(&["series", "--kind", "ode", "--order", "1", "--a", "1/0", "--b", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn park_literal_and_order() {
    let out = cayley(&["park", "n=2 c=1 prefs=1,1"]);
    assert_eq!(stdout(&out), "{\"status\":\"parked\",\"assignment\":[1,2],\"lucky\":[1],\"empty\":[3]}\n");
    let out = cayley(&["park", "--prefs", "2,2"]);
    assert_eq!(stdout(&out), "{\"status\":\"failed\",\"car\":2}\n");
    let out = cayley(&["park", "n=3 c=1 prefs=2,1,1", "--order", "3,2,1"]);
    assert!(stdout(&out).contains("\"lucky\":[3]"));
    let out = cayley(&["park", "--prefs", "1,1", "--order", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_formats_and_exit_codes() {
    let out = cayley(&["verify", "--suite", "forests", "--n-max", "2", "--format", "json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 2);
    assert_eq!(json[1]["lhs"], "a*c + b*c + c^2");
    assert_eq!(json[1]["pass"], true);

    let dir = std::env::temp_dir().join(format!("cayley-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = cayley(&["verify", "--suite", "parking", "--n-max", "2", "--c", "1", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("\"suite\",\"check\""));
    assert!(csv.contains("\"2*u^2 + u\""));
    std::fs::remove_dir_all(&dir).unwrap();

    let out = cayley(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cayley(&["verify", "--suite", "forests", "--n-max", "1", "--format", "xml"]);
    assert_eq!(out.status.code(), Some(2));
}
