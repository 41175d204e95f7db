use std::path::PathBuf;
use std::process::Command;

use crtc_cli::{
    cmd_deform, cmd_dessin, cmd_enumerate, parse_spec, render_dessin, render_locus, CliError,
    DessinReport, EnumerateMode, RenderStyle, RunOptions,
};

const LINEAR: &str = r#"{"y1":[[0,0],[1,0]],"y2":[[0,0],[-1,0]],"y3":[[1,0]]}"#;
const CUBIC: &str = r#"{"y1":[[0,0],[0,0],[0,0],[1,0]],"y2":[[0,0],[0,0],[-1,0]],"y3":[[1,0]]}"#;
const QUARTIC: &str = r#"{"y1":[[0,0],[0,0],[0,0],[0,0],[1,0]],"y2":[[-1,0],[0,0],[1,0]],"y3":[[-16,0],[0,0],[8,0]]}"#;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn count(svg: &str, class: &str) -> usize {
    svg.matches(&format!(r#"class="{class}""#)).count()
}

#[test]
fn linear_report() {
    let spec = parse_spec(LINEAR).unwrap();
    let (r, _) = cmd_dessin(&spec, &RunOptions::default(), false).unwrap();
    assert_eq!(r.combinatorial_type, vec![2, 2, 2]);
    assert!(r.maximal);
    assert!(r.is_simple);
    assert!(r.structural_report.iter().all(|c| c.passed));
}

#[test]
fn cubic_and_quartic_reports() {
    let (r, _) = cmd_dessin(&parse_spec(CUBIC).unwrap(), &RunOptions::default(), false).unwrap();
    assert_eq!(r.combinatorial_type, vec![6, 6, 2, 2, 2]);
    let (r, _) = cmd_dessin(&parse_spec(QUARTIC).unwrap(), &RunOptions::default(), false).unwrap();
    assert_eq!(r.edges, 24);
}

#[test]
fn report_round_trip() {
    let (r, _) = cmd_dessin(&parse_spec(CUBIC).unwrap(), &RunOptions::default(), false).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    let back: DessinReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back.vertices.len(), r.vertices.len());
    assert_eq!(back.edge_list.len(), r.edge_list.len());
    assert_eq!(back.regions.len(), r.regions.len());
    assert_eq!(back, r);
}

#[test]
fn svg_markers_of_linear_curve() {
    let spec = parse_spec(LINEAR).unwrap();
    let (_, svg) = cmd_dessin(&spec, &RunOptions::default(), true).unwrap();
    let svg = svg.unwrap();
    assert_eq!(count(&svg, "black"), 2);
    assert_eq!(count(&svg, "white"), 3);
    assert_eq!(count(&svg, "cross"), 3);
}

#[test]
fn svg_is_deterministic_and_matches_golden() {
    let spec = parse_spec(&std::fs::read_to_string(golden("linear.json")).unwrap()).unwrap();
    let a = crtc_cli::cmd_render(&spec, &RunOptions::default()).unwrap();
    let b = crtc_cli::cmd_render(&spec, &RunOptions::default()).unwrap();
    assert_eq!(a, b);
    let expected = std::fs::read_to_string(golden("linear.svg")).unwrap();
    assert_eq!(a.trim_end(), expected.trim_end());
}

#[test]
fn bivalent_whites_can_be_hidden() {
    let spec = parse_spec(CUBIC).unwrap();
    let d = crtc_cli::commands::build(&spec, &RunOptions::default()).unwrap();
    let all = render_dessin(&d, &RenderStyle::default()).unwrap();
    let style = RenderStyle {
        suppress_bivalent: true,
        ..RenderStyle::default()
    };
    let hidden = render_dessin(&d, &style).unwrap();
    let bivalent = d
        .vertices
        .iter()
        .filter(|v| v.kind.is_white() && v.degree == 2)
        .count();
    assert!(bivalent > 0);
    assert_eq!(count(&all, "white") - count(&hidden, "white"), bivalent);
}

#[test]
fn projection_centre_avoids_vertices() {
    // the linear curve has a cross at 0, the default centre
    let spec = parse_spec(LINEAR).unwrap();
    let d = crtc_cli::commands::build(&spec, &RunOptions::default()).unwrap();
    assert!(d
        .vertices
        .iter()
        .any(|v| v.position.x().is_some_and(|x| x.norm() < 1e-12)));
    let svg = render_dessin(&d, &RenderStyle::default()).unwrap();
    // a marker at the canvas centre would start at (295, 295)
    assert!(!svg.contains(r#"d="M295.00 295.00"#));
    assert!(!svg.contains(r#"cx="300.00" cy="300.00" r="5.00""#));
}

#[test]
fn empty_locus_has_axes_only() {
    let svg = render_locus(&[], &RenderStyle::default());
    assert_eq!(count(&svg, "axis"), 2);
    assert_eq!(count(&svg, "flagged"), 0);
}

#[test]
fn parse_errors_are_located() {
    match parse_spec(r#"{"y1":[[0,0],[1,0]],"y2":[[0,0],[-1,0]]}"#) {
        Err(e @ CliError::Parse { .. }) => {
            assert_eq!(e.code(), "parse_error");
            assert!(e.to_string().contains("y3"));
        }
        other => panic!("{other:?}"),
    }
    match parse_spec(r#"{"y1":[[0,0]],"y2":[[0,0]],"y3":[[1,0]]}"#)
        .unwrap()
        .curve()
    {
        Err(e) => assert_eq!(e.code(), "validation_error"),
        Ok(_) => panic!("coincident components accepted"),
    }
}

#[test]
fn enumerate_tables() {
    let b = cmd_enumerate(3, EnumerateMode::Bound).unwrap();
    assert_eq!(b["formula"], 8);
    assert_eq!(b["oracle"], 8);
    let p = cmd_enumerate(4, EnumerateMode::Pretypes).unwrap();
    assert_eq!(p["count"], 23);
    let rows = p["rows"].as_array().unwrap();
    let bad: Vec<&serde_json::Value> = rows.iter().filter(|r| r["realizable"] == false).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0]["type"], serde_json::json!([6, 4, 4, 4, 4, 2]));
    let s = cmd_enumerate(5, EnumerateMode::SimpleCount).unwrap();
    assert_eq!(s["count"], 31);
    match cmd_enumerate(40, EnumerateMode::SimpleCount) {
        Err(e) => assert_eq!(e.code(), "size_guard"),
        Ok(_) => panic!("size guard not enforced"),
    }
}

#[test]
fn deform_quadratic_family() {
    let spec =
        parse_spec(&std::fs::read_to_string(golden("quadratic_family.json")).unwrap()).unwrap();
    let (r, svg) = cmd_deform(&spec, &RunOptions::default()).unwrap();
    assert!(r.locus.iter().any(|p| p.flagged));
    assert_eq!(r.events.len(), 1);
    assert_eq!(r.events[0].kind, "merge_white");
    assert!(count(&svg, "flagged") > 0);
}

#[test]
fn constant_family_has_no_events() {
    let spec = parse_spec(
        r#"{"family":{"y1":[[2,0],[0,0],[1,0]],"y2":[[1,0],[2,0]],"y3":[[1,0],[-1,0]],
            "path":{"from":[0,0],"to":[1,0],"count":5}}}"#,
    )
    .unwrap();
    let (r, _) = cmd_deform(&spec, &RunOptions::default()).unwrap();
    assert!(r.events.is_empty());
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_crtc");
    let ok = Command::new(exe)
        .args(["dessin", golden("linear.json").to_str().unwrap()])
        .output()
        .unwrap();
    assert!(ok.status.success());
    let report: DessinReport = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(report.combinatorial_type, vec![2, 2, 2]);

    let bad = Command::new(exe)
        .args([
            "dessin",
            "--resolution",
            "4",
            golden("linear.json").to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(!bad.status.success());
    let err: serde_json::Value = serde_json::from_slice(&bad.stderr).unwrap();
    assert_eq!(err["error"]["code"], "invalid_resolution");

    let guard = Command::new(exe)
        .args(["enumerate", "simple-count", "40"])
        .output()
        .unwrap();
    assert!(!guard.status.success());
    let err: serde_json::Value = serde_json::from_slice(&guard.stderr).unwrap();
    assert_eq!(err["error"]["code"], "size_guard");
}
