use std::path::PathBuf;

use projcurve_cli::{run, CurveDocument};
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn projcurve(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("projcurve").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const TWO_POINT: &str = r#"{"ambientDim":3,"coords":[[1],[0,0,1],[0,0,0,1],[0,0,0,0,0,1]]}"#;

#[test]
fn analyze_reports_ramification_and_plucker() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.json", TWO_POINT);
    let r = projcurve(&["--json", "analyze", f.to_str().unwrap(), "--place", "0", "--place", "inf"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    let rep = &v[0];
    assert_eq!(rep["degree"], 5);
    assert_eq!(rep["ramificationDegrees"], serde_json::json!([2, 0, 2]));
    let r1 = &rep["ramification"][0];
    assert_eq!(r1.as_array().unwrap().len(), 2);
    assert_eq!(r1[0]["place"], "0");
    assert_eq!(r1[1]["place"], "inf");
    assert_eq!(rep["plucker"]["holds"], true);
    assert_eq!(rep["vanishingSequences"][0]["sequence"], serde_json::json!([0, 2, 3, 5]));
}

#[test]
fn analyze_reports_malformed_number_position() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.json", r#"{"ambientDim":2,"coords":[[1],[0,"2/x"],[0,0,1]]}"#);
    let r = projcurve(&["analyze", f.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("coords[1][1]"), "{}", r.err);
}

#[test]
fn analyze_keeps_going_past_a_bad_file() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "good.json", TWO_POINT);
    let bad = write(&dir, "short.json", r#"{"ambientDim":3,"coords":[[1],[0,1]]}"#);
    let r = projcurve(&["--json", "analyze", good.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v[0]["degree"], 5);
    assert_eq!(v[1]["kind"], "input");
}

#[test]
fn missing_file_and_bad_place_are_input_errors() {
    assert_eq!(projcurve(&["analyze", "/nonexistent/curve.json"]).code, 2);
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.json", TWO_POINT);
    assert_eq!(projcurve(&["analyze", f.to_str().unwrap(), "--place", "[1,0,1,1"]).code, 2);
    assert_eq!(projcurve(&["analyze", f.to_str().unwrap(), "--place", "[1,0,1]"]).code, 0);
}

#[test]
fn contact_recovers_and_rejects_forms() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.json", TWO_POINT);
    let r = projcurve(&["--json", "contact", f.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!((v["r1"].as_i64(), v["r2"].as_i64(), v["nullDegree"].as_i64()), (Some(2), Some(0), Some(6)));

    let r = projcurve(&["contact", f.to_str().unwrap(), "--beta", "1,0,0,0,0,1"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("contact: false"));

    let r = projcurve(&["contact", f.to_str().unwrap(), "--beta", "1,2,3"]);
    assert_eq!(r.code, 2);
}

#[test]
fn klein_output_feeds_klein_inv() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.json", TWO_POINT);
    for extra in [&[][..], &["--standard"][..]] {
        let mut args = vec!["--json", "klein", f.to_str().unwrap()];
        args.extend_from_slice(extra);
        let r = projcurve(&args);
        assert_eq!(r.code, 0, "{}", r.err);
        let v: Value = serde_json::from_str(&r.out).unwrap();
        assert_eq!(v["degree"], 6);
        assert_eq!(v["nullIdentities"]["allZero"], true);
        let g = write(&dir, "g.json", &r.out);
        let back = projcurve(&["--json", "klein-inv", g.to_str().unwrap()]);
        assert_eq!(back.code, 0, "{}", back.err);
        let doc: CurveDocument = serde_json::from_str(&back.out).unwrap();
        let back_curve = doc.curve().unwrap();
        assert!(doc.beta.is_some());
        if extra.is_empty() {
            let original = CurveDocument::from_json(TWO_POINT).unwrap();
            assert_eq!(back_curve, original.curve().unwrap());
        } else {
            // the standard model only fixes the curve up to a symplectic change of frame
            assert_eq!(back_curve.degree(), 5);
        }
    }
}

#[test]
fn klein_inv_needs_a_model() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.json", r#"{"ambientDim":4,"coords":[[1],[0,1],[0,0,1],[0],[0]]}"#);
    assert_eq!(projcurve(&["klein-inv", g.to_str().unwrap()]).code, 2);
}

#[test]
fn klein_inv_rejects_a_curve_off_the_quadric() {
    let dir = TempDir::new().unwrap();
    let g = write(
        &dir,
        "g.json",
        r#"{"ambientDim":4,"model":"standardQuadric","coords":[[1],[0,1],[0,0,1],[0],[0]]}"#,
    );
    assert_eq!(projcurve(&["klein-inv", g.to_str().unwrap()]).code, 1);
}

#[test]
fn null_complete_with_a_finite_pole() {
    let dir = TempDir::new().unwrap();
    // derivative (s^-4 - s^-2, i(s^-4 + s^-2), 2 s^-3), null with a pole at 0
    let g = write(
        &dir,
        "gamma.json",
        r#"{"gamma":[
            {"num":[-1,0,3],"den":[0,0,0,3]},
            {"num":["-i",0,"-3*i"],"den":[0,0,0,3]},
            {"num":[-1],"den":[0,0,1]}]}"#,
    );
    let r = projcurve(&["--json", "null-complete", g.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["model"], "standardQuadric");
    assert_eq!(v["nullIdentities"]["allZero"], true);

    let not_null = write(&dir, "n.json", r#"{"gamma":[{"num":[0,1]},{"num":[0,0,1]},{"num":[0,"i"]}]}"#);
    assert_eq!(projcurve(&["null-complete", not_null.to_str().unwrap()]).code, 1);

    let zero_den = write(&dir, "z.json", r#"{"gamma":[{"num":[1],"den":[0]},{"num":[1]},{"num":[1]}]}"#);
    assert_eq!(projcurve(&["null-complete", zero_den.to_str().unwrap()]).code, 2);
}

#[test]
fn verify_degree_seven_unbranched_prints_minors() {
    let r = projcurve(&["verify", "deg7-unbranched"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("PASS deg7-unbranched"));
    assert!(r.out.contains("8640"), "{}", r.out);
}

#[test]
fn verify_all_passes() {
    let r = projcurve(&["--json", "verify", "all"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["results"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_unknown_name_is_input_error() {
    let r = projcurve(&["verify", "deg9"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("deg4-uniqueness"));
}

#[test]
fn profiles_for_degree_six() {
    let r = projcurve(&["--json", "profiles", "6"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(
        v["solutions"],
        serde_json::json!([{"r1": 0, "r2": 2, "degF": 4}, {"r1": 2, "r2": 0, "degF": 5}])
    );
    assert_eq!(projcurve(&["profiles", "1"]).code, 2);
    assert_eq!(projcurve(&["profiles", "3"]).out.trim_end().lines().last(), Some("  no profiles"));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(projcurve(&["frobnicate"]).code, 2);
    assert_eq!(projcurve(&["analyze"]).code, 2);
    let h = projcurve(&["--help"]);
    assert_eq!(h.code, 0);
    assert!(h.out.contains("null-complete"));
}
