use std::process::{Command, Output};

fn hypodiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypodiv")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn divide_tricuspoid_json() {
    let out = hypodiv(&["divide", "--c", "3", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["points"][0]["r_squared"], "33/25");
    assert_eq!(v["points"][1]["r_squared"], "97/25");
    assert_eq!(v["total_arclength"], "16");
    assert_eq!(v["degenerate"], false);
}

#[test]
fn divide_single_point_csv() {
    let out = hypodiv(&["divide", "--c", "3", "--n", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().nth(1).unwrap().ends_with(",9,1"));
}

#[test]
fn divide_rational_shape() {
    let out = hypodiv(&["divide", "--c", "5/2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["shape"]["a"], 5);
    assert_eq!(v["shape"]["b"], 2);
    let pts = v["points"].as_array().unwrap();
    assert_eq!(pts[0]["r_squared"], "1/4");
    assert_eq!(pts[1]["r_squared"], "25/4");
    assert!((pts[0]["x"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert!((pts[1]["x"].as_f64().unwrap() - 2.5).abs() < 1e-12);
    assert!(pts[0]["y"].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn divide_degenerate_warns() {
    let out = hypodiv(&["divide", "--c", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate"));
    assert_eq!(json(&out)["degenerate"], true);
}

#[test]
fn divide_usage_errors() {
    for args in [
        &["divide", "--c", "1", "--n", "3"][..],
        &["divide", "--c", "3/0", "--n", "3"],
        &["divide", "--c", "3", "--n", "0"],
        &["divide", "--c", "abc", "--n", "3"],
        &["divide", "--c", "3"],
        &["nonsense"],
    ] {
        assert_eq!(hypodiv(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn polynomial_commands() {
    let out = hypodiv(&["polynomial", "--n", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["coefficients"], serde_json::json!(["-8667", "-37179", "0", "26244"]));
    assert_eq!(v["verdict"], "irreducible");
    assert_eq!(v["polynomial"], "26244x^3 - 37179x - 8667");

    let v = json(&hypodiv(&["polynomial", "--n", "3"]));
    assert_eq!(v["verdict"], "reducible");
    assert_eq!(v["rational_roots"], serde_json::json!(["-3/2", "-3/2", "3"]));

    let v = json(&hypodiv(&["polynomial", "--n", "4"]));
    assert_eq!(v["newton_polygon"]["segments"][0]["slope"], "-2/3");
    assert_eq!(v["dumas"], "irreducible");

    let out = hypodiv(&["polynomial", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n >= 3"));
}

#[test]
fn constructible_commands() {
    let out = hypodiv(&["constructible", "--n", "6", "--curve", "tricuspoid"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("constructible: true"));
    assert!(stdout(&out).contains("witness_checked: true"));

    let out = hypodiv(&["constructible", "--n", "7", "--curve", "circle"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("constructible: false"));

    let out = hypodiv(&["constructible", "--n", "17", "--curve", "circle"]);
    assert_eq!(out.status.code(), Some(0));

    let out = hypodiv(&["constructible", "--n", "12", "--curve", "tricuspoid"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("12 -> 4"));

    for curve in ["tricuspoid", "circle"] {
        assert_eq!(hypodiv(&["constructible", "--n", "0", "--curve", curve]).status.code(), Some(2));
    }
}

#[test]
fn verify_commands() {
    for (c, n) in [("3", "5"), ("3", "1"), ("8/3", "10"), ("2", "4")] {
        let out = hypodiv(&["verify", "--c", c, "--n", n]);
        assert_eq!(out.status.code(), Some(0), "c={c} n={n}");
        assert!(stdout(&out).contains("pass: true"));
    }
    assert_eq!(hypodiv(&["verify", "--c", "3", "--n", "5", "--tol", "-1"]).status.code(), Some(2));
}

fn dots(svg: &str) -> Vec<(f64, f64)> {
    let doc = roxmltree::Document::parse(svg).unwrap();
    doc.descendants()
        .filter(|n| n.attribute("class") == Some("division-point"))
        .map(|n| (n.attribute("cx").unwrap().parse().unwrap(), n.attribute("cy").unwrap().parse().unwrap()))
        .collect()
}

#[test]
fn render_commands() {
    let out = hypodiv(&["render", "--c", "3", "--n", "5", "--division-circles"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = stdout(&out);
    assert_eq!(dots(&svg).len(), 5);
    let scale = 600.0 / (2.4 * 3.0);
    assert!(svg.contains(&format!("r=\"{:.3}\"", 33f64.sqrt() / 5.0 * scale)));

    let svg = stdout(&hypodiv(&["render", "--c", "3"]));
    assert!(dots(&svg).is_empty());
    assert!(svg.contains("class=\"circumcircle\""));
    assert!(!stdout(&hypodiv(&["render", "--c", "3", "--no-circumcircle"])).contains("circumcircle"));

    // Quarter points of the astroid are its cusps on the axes.
    let mut pts = dots(&stdout(&hypodiv(&["render", "--c", "4", "--n", "4"])));
    assert_eq!(pts.len(), 4);
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let r = 4.0 * 600.0 / (2.4 * 4.0);
    let expected = [(-r, 0.0), (0.0, -r), (0.0, r), (r, 0.0)];
    for (p, q) in pts.iter().zip(expected) {
        assert!((p.0 - q.0).abs() < 2e-3 && (p.1 - q.1).abs() < 2e-3, "{p:?} vs {q:?}");
    }

    let out = hypodiv(&["render", "--c", "3", "--out", "/nonexistent-dir/figure.svg"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("hypodiv-{}.csv", std::process::id()));
    let out = hypodiv(&["divide", "--c", "3", "--n", "5", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn binary_output_matches_goldens() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for format in ["json", "csv", "svg"] {
        let out = hypodiv(&["divide", "--c", "3", "--n", "5", "--format", format]);
        assert_eq!(out.stdout, std::fs::read(dir.join(format!("tricuspoid_n5.{format}"))).unwrap(), "{format}");
    }
}
