use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const FIGURE: &str =
    r#"{"dim":2,"points":[[0.4,0],[1.2,0],[2,0],[0.8,1],[1.8,1],[1.5,1.5],[1.5,2.5],[2.5,2.5]]}"#;

fn confplan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confplan"))
        .args(args)
        .env_remove("CONFPLAN_EPS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn swap_files(dir: &TempDir) -> (String, String) {
    (
        write(dir, "x.json", r#"{"dim":2,"points":[[0,0],[1,0]]}"#),
        write(dir, "y.json", r#"{"dim":2,"points":[[1,0],[0,0]]}"#),
    )
}

#[test]
fn tc_prints_the_formula_value() {
    let o = confplan(&["tc", "--dim", "3", "--k", "5", "--r", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "9");
    let o = confplan(&["tc", "--dim", "2", "--k", "5", "--r", "0"]);
    assert_eq!(stdout(&o).trim(), "8");
    let o = confplan(&["tc", "--dim", "3", "--k", "4", "--r", "0", "--order", "3"]);
    assert_eq!(stdout(&o).trim(), "10");
    let o = confplan(&["tc", "--dim", "3", "--k", "4", "--r", "2", "--cat"]);
    assert_eq!(stdout(&o).trim(), "5");
}

#[test]
fn uncovered_and_invalid_queries() {
    let o = confplan(&["tc", "--dim", "2", "--k", "3", "--r", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o).trim(), "uncovered");
    assert!(!o.stderr.is_empty());
    let o = confplan(&["tc", "--dim", "1", "--k", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(confplan(&[]).status.code(), Some(1));
    assert_eq!(confplan(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        confplan(&["tc", "--dim", "x", "--k", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        confplan(&["verify", "/nonexistent/path.json"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(confplan(&["--help"]).status.code(), Some(0));
    assert_eq!(confplan(&["--version"]).status.code(), Some(0));
}

#[test]
fn malformed_inputs_exit_one() {
    let dir = TempDir::new().unwrap();
    let dup = write(&dir, "dup.json", r#"{"dim":2,"points":[[0,0],[0,0]]}"#);
    let o = confplan(&["classify", &dup]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let bad = write(&dir, "bad.json", "{not json");
    assert_eq!(confplan(&["classify", &bad]).status.code(), Some(1));
    let path = write(
        &dir,
        "p.json",
        r#"{"breakpoints":[{"t":0.0,"config":{"dim":2,"points":[[0,0]]}},{"t":0.5,"config":{"dim":2,"points":[[1,0]]}}]}"#,
    );
    assert_eq!(confplan(&["verify", &path]).status.code(), Some(1));
}

#[test]
fn classify_the_figure() {
    let dir = TempDir::new().unwrap();
    let fig = write(&dir, "fig.json", FIGURE);
    let o = confplan(&["classify", &fig]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["partition"], serde_json::json!([3, 2, 1, 2]));
    assert_eq!(
        v["permutation"],
        serde_json::json!([1, 2, 3, 4, 5, 6, 7, 8])
    );
    assert_eq!(v["level_count"], 4);
    assert_eq!(v["heights"], serde_json::json!([0.0, 1.0, 1.5, 2.5]));
}

#[test]
fn verify_reports_the_swap_collision() {
    let dir = TempDir::new().unwrap();
    let (x, y) = swap_files(&dir);
    let out = dir.path().join("sim.json");
    let o = confplan(&[
        "plan",
        &x,
        &y,
        "--mode",
        "simultaneous",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = confplan(&["verify", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["colliding"], true);
    assert_eq!(v["min_clearance"], 0.0);
    let w = &v["witnesses"][0];
    assert_eq!(w["pair"], serde_json::json!([1, 2]));
    assert_eq!(w["path_t"], 0.5);

    let o = confplan(&["verify", "--csv", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "segment,i,j,t,path_t\n2,1,2,0.5,0.5\n");
}

#[test]
fn direct_swap_segment_collides() {
    let dir = TempDir::new().unwrap();
    let p = write(
        &dir,
        "swap.json",
        r#"{"breakpoints":[{"t":0.0,"config":{"dim":2,"points":[[0,0],[1,0]]}},{"t":1.0,"config":{"dim":2,"points":[[1,0],[0,0]]}}]}"#,
    );
    let o = confplan(&["verify", &p]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["witnesses"][0]["t"], 0.5);
}

#[test]
fn plan_then_verify_round_trips_exactly() {
    let dir = TempDir::new().unwrap();
    let x = write(
        &dir,
        "x.json",
        r#"{"dim":3,"points":[[0.1,0.2,0.3],[-1.7,0.2,0.3],[0.3333333333333333,2,1e-7],[5,-4,0.3]]}"#,
    );
    let y = write(
        &dir,
        "y.json",
        r#"{"dim":3,"points":[[1,1,1],[2,2,2],[0.1,0.7,-3],[9.3,0,0.000125]]}"#,
    );
    let o = confplan(&["plan", &x, &y]);
    assert_eq!(o.status.code(), Some(0));
    let first = stdout(&o);
    let path_file = write(&dir, "path.json", &first);

    let o = confplan(&["verify", &path_file]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["min_clearance"].as_f64().unwrap() > 0.0);

    let parsed: confplan_like::Path = serde_json::from_str(&first).unwrap();
    let reprinted = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(reprinted, first);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(
        v["breakpoints"][0]["config"]["points"][2][0]
            .as_f64()
            .unwrap()
            .to_bits(),
        (1.0f64 / 3.0).to_bits()
    );
}

/// Mirror of the path schema, to re-serialize without the library.
mod confplan_like {
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize)]
    pub struct Config {
        pub dim: usize,
        pub points: Vec<Vec<f64>>,
    }

    #[derive(Serialize, Deserialize)]
    pub struct Breakpoint {
        pub t: f64,
        pub config: Config,
    }

    #[derive(Serialize, Deserialize)]
    pub struct Path {
        pub breakpoints: Vec<Breakpoint>,
    }
}

#[test]
fn eps_from_environment_and_flag() {
    let dir = TempDir::new().unwrap();
    // Points pass within 1e-9 of each other.
    let p = write(
        &dir,
        "near.json",
        r#"{"breakpoints":[{"t":0.0,"config":{"dim":2,"points":[[0,0],[1,1e-9]]}},{"t":1.0,"config":{"dim":2,"points":[[1,0],[0,1e-9]]}}]}"#,
    );
    assert_eq!(confplan(&["verify", &p]).status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_confplan"))
        .args(["verify", &p])
        .env("CONFPLAN_EPS", "1e-8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["eps"], 1e-8);
    let o = Command::new(env!("CARGO_BIN_EXE_confplan"))
        .args(["verify", "--eps", "1e-12", &p])
        .env("CONFPLAN_EPS", "1e-8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_confplan"))
        .args(["verify", &p])
        .env("CONFPLAN_EPS", "-1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn plan_multi_through_waypoints() {
    let dir = TempDir::new().unwrap();
    let (x, y) = swap_files(&dir);
    let z = write(&dir, "z.json", r#"{"dim":2,"points":[[3,3],[-2,0.5]]}"#);
    let out = dir.path().join("multi.json");
    let o = confplan(&["plan-multi", &x, &y, &z, &x, "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["report"]["colliding"], false);
    assert_eq!(v["strata"].as_array().unwrap().len(), 4);
    assert_eq!(
        confplan(&["verify", out.to_str().unwrap()]).status.code(),
        Some(0)
    );
    assert_eq!(confplan(&["plan-multi", &x]).status.code(), Some(1));
}

#[test]
fn plan_writes_a_well_formed_svg() {
    let dir = TempDir::new().unwrap();
    let fig = write(&dir, "fig.json", FIGURE);
    let base = write(
        &dir,
        "base.json",
        r#"{"dim":2,"points":[[0,0],[0,1],[0,2],[0,3],[0,4],[0,5],[0,6],[0,7]]}"#,
    );
    let svg = dir.path().join("plan.svg");
    let o = confplan(&["plan", &fig, &base, "--svg", svg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&svg).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    assert_eq!(
        doc.descendants()
            .filter(|n| n.has_tag_name("polyline"))
            .count(),
        8
    );
}

#[test]
fn svg_in_three_dimensions_needs_a_projection() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", r#"{"dim":3,"points":[[0,0,0],[1,0,0]]}"#);
    let y = write(&dir, "y.json", r#"{"dim":3,"points":[[1,0,0],[0,0,0]]}"#);
    let svg = dir.path().join("p.svg");
    let s = svg.to_str().unwrap();
    assert_eq!(
        confplan(&["plan", &x, &y, "--svg", s]).status.code(),
        Some(1)
    );
    assert_eq!(
        confplan(&["plan", &x, &y, "--svg", s, "--projection", "0,5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        confplan(&["plan", &x, &y, "--svg", s, "--projection", "0,2"])
            .status
            .code(),
        Some(0)
    );
    assert!(roxmltree::Document::parse(&fs::read_to_string(&svg).unwrap()).is_ok());
}

#[test]
fn retract_both_directions() {
    let dir = TempDir::new().unwrap();
    let u = write(&dir, "u.json", r#"{"vectors":[[0.6,0.8],[0,-1],[1,0]]}"#);
    let o = confplan(&["retract", "--mode", "punctured", "--dim", "2", &u]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["input"], "unit_tuple");
    assert_eq!(v["round_trip_ok"], true);
    assert_eq!(v["orbit_distinct"], true);
    assert_eq!(v["image"]["points"].as_array().unwrap().len(), 3);

    let o = confplan(&["retract", "--mode", "plain", "--dim", "2", &u]);
    assert_eq!(
        json(&o)["image"]["points"][0],
        serde_json::json!([0.0, 0.0])
    );
    assert_eq!(json(&o)["image"]["points"].as_array().unwrap().len(), 4);

    let x = write(&dir, "x.json", r#"{"dim":2,"points":[[0,0],[3,4],[3,5]]}"#);
    let o = confplan(&["retract", "--mode", "plain", "--dim", "2", &x]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["input"], "configuration");
    assert_eq!(
        v["image"]["vectors"],
        serde_json::json!([[0.6, 0.8], [0.0, 1.0]])
    );
    assert_eq!(v["round_trip_ok"], true);

    assert_eq!(
        confplan(&["retract", "--mode", "plain", "--dim", "3", &x])
            .status
            .code(),
        Some(1)
    );
    let origin = write(&dir, "o.json", r#"{"dim":2,"points":[[0,0],[1,0]]}"#);
    assert_eq!(
        confplan(&["retract", "--mode", "punctured", "--dim", "2", &origin])
            .status
            .code(),
        Some(1)
    );
    let neither = write(&dir, "n.json", r#"{"foo":1}"#);
    assert_eq!(
        confplan(&["retract", "--mode", "plain", "--dim", "2", &neither])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn cover_emits_the_contraction() {
    let dir = TempDir::new().unwrap();
    let fig = write(&dir, "fig.json", FIGURE);
    let o = confplan(&["cover", &fig]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["cover_index"], 4);

    let out = dir.path().join("c.json");
    let o = confplan(&["cover", &fig, "--emit-path", out.to_str().unwrap()]);
    let v = json(&o);
    assert_eq!(v["report"]["colliding"], false);
    let path: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let last = path["breakpoints"].as_array().unwrap().last().unwrap();
    assert_eq!(last["t"], 1.0);
    assert_eq!(last["config"], v["base"]);
    assert_eq!(
        confplan(&["verify", out.to_str().unwrap()]).status.code(),
        Some(0)
    );
}

#[test]
fn demo_is_deterministic() {
    let a = confplan(&["demo", "--seed", "7"]);
    let b = confplan(&["demo", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = confplan(&["demo", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
    let v = json(&a);
    assert_eq!(v["swap"]["simultaneous"]["colliding"], true);
    assert_eq!(v["swap"]["sequential"]["colliding"], false);
    assert_eq!(v["figure"]["classification"]["level_count"], 4);
    assert_eq!(
        v["figure"]["approach_targets"],
        serde_json::json!([-1.6, -0.8, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5])
    );
}

#[test]
fn demo_writes_traces() {
    let dir = TempDir::new().unwrap();
    let o = confplan(&["demo", "--svg-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for name in [
        "figure_approach",
        "figure_plan",
        "swap_sequential",
        "swap_simultaneous",
        "random",
    ] {
        let text = fs::read_to_string(dir.path().join(format!("{name}.svg"))).unwrap();
        roxmltree::Document::parse(&text).unwrap();
    }
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let fig = write(&dir, "fig.json", FIGURE);
    let base = write(
        &dir,
        "b.json",
        r#"{"dim":2,"points":[[5,5],[5,6],[6,5],[7,7],[0,-3],[1,-3],[2,-3],[3,-3]]}"#,
    );
    let a = confplan(&["plan", &fig, &base]);
    let b = confplan(&["plan", &fig, &base]);
    assert_eq!(a.stdout, b.stdout);
    let a = confplan(&["cover", &fig]);
    let b = confplan(&["cover", &fig]);
    assert_eq!(a.stdout, b.stdout);
}
