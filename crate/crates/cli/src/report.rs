//! One function per subcommand. Each returns the report text (JSON or
//! human-readable) and the failure, if any, that decides the exit code.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use projcurve::classification::{enumerate_profiles, verify_by_name, VerificationReport, VERIFIERS};
use projcurve::klein::{null_identities, pole_divisor, NullIdentities};
use projcurve::{
    complete_null, contact_ramification_report, is_contact, klein_forward, klein_inverse, model_change,
    recover_beta, Divisor, FieldElem, NullCurve, Place, ProjectiveCurve, SymplecticForm, UniPoly,
};
use serde_json::{json, Value};

use crate::document::{poly_numbers, CurveDocument, GammaDocument};
use crate::Failure;

pub struct Output {
    pub text: String,
    pub failure: Option<Failure>,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failure: None }
    }
}

fn render(json_mode: bool, value: &Value, text: String) -> String {
    if json_mode {
        let mut s = serde_json::to_string_pretty(value).expect("values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_curve(path: &Path) -> Result<(CurveDocument, ProjectiveCurve), Failure> {
    let doc = CurveDocument::from_json(&read(path)?).map_err(|f| prefix(path, f))?;
    let curve = doc.curve().map_err(|f| prefix(path, f))?;
    Ok((doc, curve))
}

fn prefix(path: &Path, f: Failure) -> Failure {
    let p = path.display();
    match f {
        Failure::Input(m) => Failure::Input(format!("{p}: {m}")),
        Failure::Math(m) => Failure::Math(format!("{p}: {m}")),
    }
}

fn poly_json(p: &UniPoly) -> Value {
    serde_json::to_value(poly_numbers(p)).unwrap()
}

pub fn place_json(p: &Place) -> Value {
    match p {
        Place::Infinity => json!("inf"),
        Place::FinitePoint(c) => json!(c.to_string()),
        Place::AlgebraicLocus(q) => poly_json(q),
    }
}

pub fn divisor_json(d: &Divisor) -> Value {
    Value::Array(
        d.terms()
            .map(|(p, m)| json!({"place": place_json(p), "multiplicity": m}))
            .collect(),
    )
}

/// `inf`, a field element, or a locus polynomial as `[c0,c1,...]`.
pub fn parse_place(s: &str) -> Result<Place, Failure> {
    let t = s.trim();
    if t == "inf" || t == "infinity" {
        return Ok(Place::Infinity);
    }
    let bad = |m: String| Failure::Input(format!("--place {s}: {m}"));
    if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let coeffs = inner
            .split(',')
            .map(|c| c.trim().parse::<FieldElem>().map_err(|e| bad(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let q = UniPoly::new(coeffs);
        if q.degree().unwrap_or(0) == 0 {
            return Err(bad("locus polynomial must be nonconstant".into()));
        }
        if q.squarefree_part().degree() != q.degree() {
            return Err(bad("locus polynomial must be squarefree".into()));
        }
        return Ok(Place::from_locus(&q));
    }
    t.parse::<FieldElem>()
        .map(Place::FinitePoint)
        .map_err(|e| bad(e.to_string()))
}

fn parse_beta_arg(s: &str) -> Result<SymplecticForm, Failure> {
    s.parse().map_err(|e| Failure::Input(format!("--beta: {e}")))
}

fn curve_text(f: &ProjectiveCurve) -> String {
    f.coords().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn identities_json(ids: &NullIdentities) -> Value {
    json!({
        "gg": ids.gg.to_string(),
        "gdg": ids.gdg.to_string(),
        "dgdg": ids.dgdg.to_string(),
        "allZero": ids.all_zero(),
    })
}

struct Analysis {
    value: Value,
    text: String,
    failure: Option<Failure>,
}

fn analyze_one(path: &Path, places: &[Place]) -> Result<Analysis, Failure> {
    let (_, f) = read_curve(path)?;
    let n = f.ambient_dim();
    let mut text = String::new();
    let _ = writeln!(text, "{}:", path.display());
    let _ = writeln!(text, "  curve: [{}]", curve_text(&f));
    let _ = writeln!(text, "  ambient dimension: {n}");
    let _ = writeln!(text, "  degree: {}", f.degree());
    let _ = writeln!(text, "  nondegenerate: {}", f.is_nondegenerate());
    let mut value = json!({
        "file": path.display().to_string(),
        "ambientDim": n,
        "degree": f.degree(),
        "rank": f.rank(),
        "nondegenerate": f.is_nondegenerate(),
    });
    if !f.is_nondegenerate() {
        if f.rank() >= 2 {
            let b = f.branch_divisor()?;
            let _ = writeln!(text, "  branch divisor: {b}");
            value["branchDivisor"] = divisor_json(&b);
        }
        return Ok(Analysis { value, text, failure: None });
    }
    let mut seqs = Vec::new();
    for p in places {
        let s = f.vanishing_sequence(p)?;
        let _ = writeln!(text, "  vanishing sequence at {p}: {s:?}");
        seqs.push(json!({"place": place_json(p), "sequence": s}));
    }
    value["vanishingSequences"] = Value::Array(seqs);
    let rep = f.plucker_report()?;
    for (i, d) in rep.ramification.iter().enumerate() {
        let _ = writeln!(text, "  R_{}: {d}", i + 1);
    }
    let holds = rep.lhs == rep.rhs && rep.associated_degrees == rep.predicted_degrees;
    let _ = writeln!(text, "  ramification degrees: {:?}", rep.totals);
    let _ = writeln!(
        text,
        "  Plücker: (n+1)d - n(n+1) = {}, sum (n+1-i) r_i = {}: {}",
        rep.lhs,
        rep.rhs,
        if rep.lhs == rep.rhs { "holds" } else { "FAILS" }
    );
    let _ = writeln!(
        text,
        "  associated curve degrees: {:?} (predicted {:?})",
        rep.associated_degrees, rep.predicted_degrees
    );
    value["ramification"] = Value::Array(rep.ramification.iter().map(divisor_json).collect());
    value["ramificationDegrees"] = json!(rep.totals);
    value["plucker"] = json!({
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "associatedDegrees": rep.associated_degrees,
        "predictedDegrees": rep.predicted_degrees,
        "holds": holds,
    });
    let failure = (!holds).then(|| Failure::Math(format!("{}: Plücker identity fails", path.display())));
    Ok(Analysis { value, text, failure })
}

pub fn analyze(files: &[PathBuf], places: &[String], json_mode: bool) -> Result<Output, Failure> {
    let places = places.iter().map(|s| parse_place(s)).collect::<Result<Vec<_>, _>>()?;
    let results: Vec<Result<Analysis, Failure>> = std::thread::scope(|s| {
        let handles: Vec<_> = files
            .iter()
            .map(|path| {
                let places = &places;
                s.spawn(move || analyze_one(path, places).map_err(|f| prefix_once(path, f)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("analysis thread panicked")).collect()
    });
    let mut values = Vec::new();
    let mut text = String::new();
    let mut failure: Option<Failure> = None;
    for (path, r) in files.iter().zip(results) {
        let f = match r {
            Ok(a) => {
                values.push(a.value);
                text.push_str(&a.text);
                a.failure
            }
            Err(f) => {
                let kind = if f.exit_code() == 2 { "input" } else { "math" };
                values.push(json!({"file": path.display().to_string(), "error": f.message(), "kind": kind}));
                let _ = writeln!(text, "error: {}", f.message());
                Some(f)
            }
        };
        if let Some(f) = f {
            // input errors outrank mathematical failures
            if failure.as_ref().map_or(true, |old| f.exit_code() > old.exit_code()) {
                failure = Some(f);
            }
        }
    }
    Ok(Output {
        text: render(json_mode, &Value::Array(values), text),
        failure,
    })
}

fn prefix_once(path: &Path, f: Failure) -> Failure {
    let p = path.display().to_string();
    if f.message().starts_with(&p) {
        f
    } else {
        prefix(path, f)
    }
}

fn chosen_beta(arg: Option<&str>, doc: &CurveDocument) -> Result<Option<SymplecticForm>, Failure> {
    match arg {
        Some(s) => parse_beta_arg(s).map(Some),
        None => doc.beta(),
    }
}

pub fn contact(path: &Path, beta_arg: Option<&str>, json_mode: bool) -> Result<Output, Failure> {
    let (doc, f) = read_curve(path)?;
    let mut text = String::new();
    let mut value = json!({"file": path.display().to_string(), "degree": f.degree()});
    let beta = match chosen_beta(beta_arg, &doc)? {
        Some(beta) => {
            let ok = is_contact(&f, &beta)?;
            let _ = writeln!(text, "beta: {beta}");
            let _ = writeln!(text, "contact: {ok}");
            value["beta"] = beta_json(&beta);
            value["isContact"] = json!(ok);
            if !ok {
                return Ok(Output {
                    text: render(json_mode, &value, text),
                    failure: Some(Failure::Math("curve is not contact for the given beta".into())),
                });
            }
            beta
        }
        None => {
            let beta = recover_beta(&f)?;
            let _ = writeln!(text, "recovered beta: {beta}");
            value["beta"] = beta_json(&beta);
            value["isContact"] = json!(true);
            beta
        }
    };
    let _ = beta;
    let rep = contact_ramification_report(&f)?;
    for (i, d) in rep.ramification.iter().enumerate() {
        let _ = writeln!(text, "R_{}: {d}", i + 1);
    }
    let _ = writeln!(text, "r1 = {}, r2 = {}", rep.r1(), rep.r2());
    let _ = writeln!(text, "deg f = {}, deg f_2 = {}", rep.degree, rep.null_degree);
    let _ = writeln!(text, "transfer laws and contact Plücker formulas: hold");
    value["ramification"] = Value::Array(rep.ramification.iter().map(divisor_json).collect());
    value["r1"] = json!(rep.r1());
    value["r2"] = json!(rep.r2());
    value["nullDegree"] = json!(rep.null_degree);
    value["nullRamification"] = Value::Array(rep.null_ramification.iter().map(divisor_json).collect());
    value["identitiesHold"] = json!(true);
    Ok(Output::ok(render(json_mode, &value, text)))
}

fn beta_json(beta: &SymplecticForm) -> Value {
    Value::Array(beta.coeffs().iter().map(|c| json!(c.to_string())).collect())
}

fn null_document(g: &NullCurve) -> Result<Value, Failure> {
    let mut value = serde_json::to_value(CurveDocument::from_null(g)).unwrap();
    let ids = null_identities(g.curve(), &g.model().gram());
    value["degree"] = json!(g.curve().degree());
    value["branchDivisor"] = divisor_json(&g.curve().branch_divisor()?);
    value["nullIdentities"] = identities_json(&ids);
    Ok(value)
}

fn null_text(g: &NullCurve) -> Result<String, Failure> {
    let mut text = String::new();
    let model = match g.model() {
        projcurve::NullModel::W(w) => format!("W for beta = {}", w.beta()),
        projcurve::NullModel::StandardQuadric => "standard quadric X0 X4 - X1^2 - X2^2 - X3^2".into(),
    };
    let ids = null_identities(g.curve(), &g.model().gram());
    let _ = writeln!(text, "null curve: [{}]", curve_text(g.curve()));
    let _ = writeln!(text, "model: {model}");
    let _ = writeln!(text, "degree: {}", g.curve().degree());
    let _ = writeln!(text, "branch divisor: {}", g.curve().branch_divisor()?);
    let _ = writeln!(
        text,
        "<G,G> = {}, <G,G'> = {}, <G',G'> = {}",
        ids.gg, ids.gdg, ids.dgdg
    );
    Ok(text)
}

pub fn klein(path: &Path, beta_arg: Option<&str>, standard: bool, json_mode: bool) -> Result<Output, Failure> {
    let (doc, f) = read_curve(path)?;
    let beta = match chosen_beta(beta_arg, &doc)? {
        Some(b) => b,
        None => recover_beta(&f)?,
    };
    let mut g = klein_forward(&f, &beta)?;
    if standard {
        g = model_change(&g)?;
    }
    let value = null_document(&g)?;
    Ok(Output::ok(render(json_mode, &value, null_text(&g)?)))
}

pub fn klein_inv(path: &Path, json_mode: bool) -> Result<Output, Failure> {
    let doc = CurveDocument::from_json(&read(path)?).map_err(|f| prefix(path, f))?;
    let g = doc.null_curve().map_err(|f| prefix(path, f))?;
    let f = klein_inverse(&g)?;
    let beta = recover_beta(&f)?;
    let mut value = serde_json::to_value(CurveDocument::from_curve(&f).with_beta(&beta)).unwrap();
    value["degree"] = json!(f.degree());
    let text = format!(
        "contact curve: [{}]\nbeta: {beta}\ndegree: {}\n",
        curve_text(&f),
        f.degree()
    );
    Ok(Output::ok(render(json_mode, &value, text)))
}

pub fn null_complete(path: &Path, json_mode: bool) -> Result<Output, Failure> {
    let doc = GammaDocument::from_json(&read(path)?).map_err(|f| prefix(path, f))?;
    let gamma = doc.gamma().map_err(|f| prefix(path, f))?;
    let poles = pole_divisor(&gamma)?;
    let g = complete_null(&gamma)?;
    let mut value = null_document(&g)?;
    value["poles"] = divisor_json(&poles);
    let mut text = null_text(&g)?;
    let _ = writeln!(text, "poles of gamma: {poles}");
    Ok(Output::ok(render(json_mode, &value, text)))
}

fn report_json(name: &str, r: &Result<VerificationReport, projcurve::Error>) -> Value {
    match r {
        Ok(rep) => json!({
            "name": name,
            "passed": true,
            "checks": rep.checks.iter().map(|c| json!({"name": c.name, "value": c.value})).collect::<Vec<_>>(),
        }),
        Err(e) => json!({"name": name, "passed": false, "error": e.to_string()}),
    }
}

pub fn verify(name: &str, json_mode: bool) -> Result<Output, Failure> {
    let names: Vec<&str> = if name == "all" {
        VERIFIERS.to_vec()
    } else if VERIFIERS.contains(&name) {
        vec![name]
    } else {
        return Err(Failure::Input(format!(
            "unknown verifier `{name}`; expected one of {} or all",
            VERIFIERS.join(", ")
        )));
    };
    let results: Vec<Result<VerificationReport, projcurve::Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = names
            .iter()
            .map(|&n| s.spawn(move || verify_by_name(n).expect("known verifier")))
            .collect();
        handles.into_iter().map(|h| h.join().expect("verifier thread panicked")).collect()
    });
    let mut text = String::new();
    let mut failure = None;
    for (n, r) in names.iter().zip(&results) {
        match r {
            Ok(rep) => {
                text.push_str(&rep.to_string());
                let _ = writeln!(text, "PASS {n}");
            }
            Err(e) => {
                let _ = writeln!(text, "FAIL {n}: {e}");
                failure.get_or_insert_with(|| Failure::Math(format!("{n}: {e}")));
            }
        }
    }
    let passed = failure.is_none();
    let value = json!({
        "results": names.iter().zip(&results).map(|(n, r)| report_json(n, r)).collect::<Vec<_>>(),
        "passed": passed,
    });
    Ok(Output {
        text: render(json_mode, &value, text),
        failure,
    })
}

pub fn profiles(deg_g: i64, json_mode: bool) -> Result<Output, Failure> {
    if deg_g < 2 {
        return Err(Failure::Input(format!("degG must be at least 2, got {deg_g}")));
    }
    let p = enumerate_profiles(deg_g);
    let mut text = format!("deg g = {deg_g}:\n");
    if p.solutions.is_empty() {
        text.push_str("  no profiles\n");
    }
    for s in &p.solutions {
        let _ = writeln!(text, "  (r1, r2) = ({}, {}), deg f = {}", s.r1, s.r2, s.deg_f);
    }
    let value = json!({
        "degG": deg_g,
        "solutions": p.solutions.iter().map(|s| json!({"r1": s.r1, "r2": s.r2, "degF": s.deg_f})).collect::<Vec<_>>(),
    });
    Ok(Output::ok(render(json_mode, &value, text)))
}
