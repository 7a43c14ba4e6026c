use std::process::{Command, Output};

use colorlab::scenario::Report;

fn colorlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_shows_the_catalog() {
    let o = colorlab(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for name in ["cluster-boundary-2d", "r3-transversality-16cell", "walls-72"] {
        assert!(text.contains(name), "{name}");
    }
}

#[test]
fn list_filters_by_tag() {
    let o = colorlab(&["list", "--tag", "braiding", "--format", "structured"]);
    assert!(o.status.success());
    let entries: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!entries.is_empty());
    for e in &entries {
        assert!(e["tags"].as_array().unwrap().iter().any(|t| t == "braiding"));
    }
    let none = colorlab(&["list", "--tag", "no-such-tag"]);
    assert!(none.status.success());
    assert!(stdout(&none).is_empty());
}

#[test]
fn passing_scenario_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("walls.json");
    let o = colorlab(&["run", "walls-72", "--format", "structured", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.passed);
    assert_eq!(report.scenario, "walls-72");
    assert!(report.expectations.iter().any(|e| e.name == "color code transparent walls"));
}

#[test]
fn structured_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("r{i}.json"));
        let o = colorlab(&["run", "three-loop-table", "--seed", "5", "--format", "structured", "--out", path.to_str().unwrap()]);
        assert!(o.status.success());
        let r = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
        bodies.push(r.without_timing().to_json());
    }
    assert_eq!(bodies[0], bodies[1]);
}

#[test]
fn failing_expectation_exits_one() {
    let o = colorlab(&["run", "excitation-spectrum"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let cube = colorlab(&["transversal-check", "--lattice", "cube", "--level", "3"]);
    assert_eq!(cube.status.code(), Some(1));
}

#[test]
fn usage_and_resource_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["run", "no-such-scenario"],
        vec!["run"],
        vec!["check-code", "--lattice", "klein-bottle"],
        vec!["braid", "e_A"],
        vec!["braid", "e_A", "m_BC", "--lattice", "cube"],
        vec!["excite", "--lattice", "16-cell", "--region", "Q:0"],
        vec!["transversal-check", "--lattice", "cube", "--level", "5"],
    ] {
        assert_eq!(colorlab(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn braid_reports_the_three_loop_sign() {
    let o = colorlab(&["braid", "m_AB", "s_BC", "m_CA", "--format", "structured"]);
    assert!(o.status.success());
    let r = Report::from_json(&stdout(&o)).unwrap();
    let sign = r.expectations.iter().find(|e| e.name == "sign").unwrap();
    assert_eq!(sign.computed, colorlab::scenario::Value::int(-1));
}

#[test]
fn lattice_commands_export_files() {
    let dir = tempfile::tempdir().unwrap();
    let lat = dir.path().join("hex.colex");
    let css = dir.path().join("hex.css");
    assert!(colorlab(&["build-lattice", "--lattice", "hex-torus:2,2", "--export", lat.to_str().unwrap()]).status.success());
    let colex = colorlab::colex::Colex::from_text(&std::fs::read_to_string(&lat).unwrap()).unwrap();
    assert_eq!(colex.n_qubits, 24);
    assert!(colorlab(&["check-code", "--lattice", "hex-torus:2,2", "--export", css.to_str().unwrap()]).status.success());
    assert!(std::fs::read_to_string(&css).unwrap().lines().any(|l| l.starts_with('X')));
}

#[test]
fn boundary_commands_pass_on_reference_regions() {
    for args in [
        vec!["excite", "--lattice", "octahedral-sphere:1", "--region", "C:0"],
        vec!["verify-spt", "--lattice", "octahedral-sphere:2"],
        vec!["verify-spt", "--lattice", "16-cell", "--region", "D:1"],
        vec!["enumerate-walls"],
    ] {
        let o = colorlab(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn jobs_do_not_change_results() {
    let one = colorlab(&["run", "--tag", "walls", "--jobs", "1", "--format", "structured"]);
    let four = colorlab(&["run", "--tag", "walls", "--jobs", "4", "--format", "structured"]);
    let strip = |o: &Output| -> Vec<String> {
        let reports: Vec<Report> = serde_json::from_str(&stdout(o)).unwrap();
        reports.iter().map(|r| r.without_timing().to_json()).collect()
    };
    assert_eq!(strip(&one), strip(&four));
}
