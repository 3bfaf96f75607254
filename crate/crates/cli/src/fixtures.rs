//! Golden-value replay. Each fixture file is one group of pinned
//! assertions: an operation name, its arguments, and the expected result.
//! Groups run on their own threads with buffered output so the report
//! order is deterministic; any mismatch is drift, reported with both
//! values.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::thread;

use anyhow::{anyhow, bail, Context, Result};
use curveclass_core::bounds::{pi, pi_1};
use curveclass_core::cohomology::{h0_restricted, h_hirzebruch, h_quadric, scrollar_invariant};
use curveclass_core::hilbert::analyze;
use curveclass_core::lattice::{DivisorClass, SurfaceModel};
use curveclass_core::surfaces::{
    contraction_obstruction, del_pezzo_classes, elliptic_cone_classes, fixed_part,
    multisecant_fiber_check, rational_cone_classes, scroll_classes, ObstructionStatus,
};
use curveclass_core::zeroscheme::{
    collinearity_h1_criterion, h_ideal, plane_model_genus, singular_point_pencils, FatPoint,
    PlanePoint, ZeroScheme,
};
use serde_json::{json, Value};

/// The shipped corpus, one entry per fixture file.
const EMBEDDED: &[(&str, &str)] = &[
    ("class-censuses", include_str!("../fixtures/class-censuses.json")),
    (
        "classification-rows",
        include_str!("../fixtures/classification-rows.json"),
    ),
    ("genus-bounds", include_str!("../fixtures/genus-bounds.json")),
    (
        "obstruction-verdicts",
        include_str!("../fixtures/obstruction-verdicts.json"),
    ),
    ("plane-models", include_str!("../fixtures/plane-models.json")),
    (
        "ruled-cohomology",
        include_str!("../fixtures/ruled-cohomology.json"),
    ),
    (
        "ruling-sections",
        include_str!("../fixtures/ruling-sections.json"),
    ),
    ("second-bound", include_str!("../fixtures/second-bound.json")),
];

pub struct Outcome {
    pub assertions: usize,
    pub failures: usize,
    pub report: String,
}

/// Run every group, either from the embedded corpus or from `*.json` files
/// under an override directory.
pub fn run(dir: Option<&Path>) -> Result<Outcome> {
    let owned: Vec<(String, String)> = match dir {
        None => EMBEDDED
            .iter()
            .map(|(n, s)| (n.to_string(), s.to_string()))
            .collect(),
        Some(d) => {
            let mut out = Vec::new();
            for entry in
                fs::read_dir(d).with_context(|| format!("cannot read fixture dir {d:?}"))?
            {
                let path = entry?.path();
                if path.extension().and_then(|e| e.to_str()) == Some("json") {
                    let name = path
                        .file_stem()
                        .and_then(|s| s.to_str())
                        .unwrap_or("fixture")
                        .to_string();
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("cannot read {path:?}"))?;
                    out.push((name, text));
                }
            }
            out.sort();
            out
        }
    };

    let results: Vec<(usize, usize, String)> = thread::scope(|scope| {
        let handles: Vec<_> = owned
            .iter()
            .map(|(name, text)| scope.spawn(move || run_group(name, text)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("fixture thread panicked"))
            .collect()
    });

    let mut outcome = Outcome {
        assertions: 0,
        failures: 0,
        report: String::new(),
    };
    for (passed, failed, text) in results {
        outcome.assertions += passed + failed;
        outcome.failures += failed;
        outcome.report.push_str(&text);
    }
    let _ = writeln!(
        outcome.report,
        "selftest: {} assertions, {} failures",
        outcome.assertions, outcome.failures
    );
    Ok(outcome)
}

fn run_group(name: &str, text: &str) -> (usize, usize, String) {
    let mut passed = 0;
    let mut failed = 0;
    let mut report = String::new();
    let parsed: Result<Value, _> = serde_json::from_str(text);
    let group = match parsed {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(report, "group {name}: unreadable fixture file: {e}");
            return (0, 1, report);
        }
    };
    let cases = group
        .get("cases")
        .and_then(Value::as_array)
        .cloned()
        .unwrap_or_default();
    for case in &cases {
        let anchor = case
            .get("anchor")
            .and_then(Value::as_str)
            .unwrap_or("(unnamed)");
        let op = case.get("op").and_then(Value::as_str).unwrap_or("");
        let args = case.get("args").cloned().unwrap_or(Value::Null);
        let expect = case.get("expect").cloned().unwrap_or(Value::Null);
        match execute(op, &args) {
            Ok(got) if got == expect => passed += 1,
            Ok(got) => {
                failed += 1;
                let _ = writeln!(
                    report,
                    "group {name}: {anchor}: drift\n  expected {expect}\n  got      {got}"
                );
            }
            Err(e) => {
                failed += 1;
                let _ = writeln!(report, "group {name}: {anchor}: error: {e}");
            }
        }
    }
    let _ = writeln!(report, "group {name}: {passed} ok, {failed} failed");
    (passed, failed, report)
}

fn int(args: &Value, key: &str) -> Result<i64> {
    args.get(key)
        .and_then(Value::as_i64)
        .ok_or_else(|| anyhow!("argument {key} missing or not an integer"))
}

fn ints(args: &Value, key: &str) -> Result<Vec<i64>> {
    args.get(key)
        .and_then(Value::as_array)
        .map(|a| a.iter().filter_map(Value::as_i64).collect())
        .ok_or_else(|| anyhow!("argument {key} missing or not an array"))
}

fn class(args: &Value, key: &str) -> Result<DivisorClass> {
    let s = args
        .get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| anyhow!("argument {key} missing or not a class string"))?;
    Ok(s.parse::<DivisorClass>()?)
}

/// The natural surface model for a parsed class: `F[e]` forms live on the
/// Hirzebruch surface, `Q` forms on the quadric.
fn model_for(c: &DivisorClass) -> Result<SurfaceModel> {
    match c {
        DivisorClass::Hirzebruch { e, .. } => Ok(SurfaceModel::hirzebruch(*e)?),
        DivisorClass::Quadric { .. } => Ok(SurfaceModel::quadric()),
        _ => bail!("no full cohomology model for {c}"),
    }
}

fn status_token(status: ObstructionStatus) -> &'static str {
    match status {
        ObstructionStatus::VeryAmpleCandidate => "very-ample-candidate",
        ObstructionStatus::FixedComponent => "fixed-component",
        ObstructionStatus::ContractedCurve => "contracted-curve",
        ObstructionStatus::MultisecantFiber => "multisecant-fiber",
    }
}

/// Fat-point scheme from rows `[x, y, z, m]` of integers.
fn scheme(args: &Value, key: &str) -> Result<ZeroScheme> {
    let rows = args
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("argument {key} missing or not an array"))?;
    let mut fat = Vec::new();
    for row in rows {
        let nums: Vec<i64> = row
            .as_array()
            .map(|a| a.iter().filter_map(Value::as_i64).collect())
            .unwrap_or_default();
        if nums.len() != 4 {
            bail!("each point row must be [x, y, z, m]");
        }
        let p = PlanePoint::from_ints(nums[0], nums[1], nums[2])?;
        fat.push(FatPoint::new(p, nums[3])?);
    }
    Ok(ZeroScheme::new(fat)?)
}

fn execute(op: &str, args: &Value) -> Result<Value> {
    match op {
        "pi" => Ok(json!(pi(int(args, "d")?, int(args, "r")?)?)),
        "pi1" => {
            let sb = pi_1(int(args, "d")?, int(args, "r")?)?;
            let classes: Vec<String> =
                sb.attained_by.iter().map(|s| s.class.compact()).collect();
            Ok(json!({ "value": sb.value, "classes": classes }))
        }
        "h-hirzebruch" => {
            let h = h_hirzebruch(int(args, "e")?, int(args, "a")?, int(args, "b")?);
            Ok(json!([h.h0, h.h1, h.h2]))
        }
        "h-quadric" => {
            let h = h_quadric(int(args, "a")?, int(args, "b")?);
            Ok(json!([h.h0, h.h1, h.h2]))
        }
        "h0-restricted" => {
            let m = class(args, "m")?;
            let c = class(args, "c")?;
            let model = model_for(&m)?;
            Ok(json!(h0_restricted(&model, &m, &c)?))
        }
        "scrollar" => {
            let (t, h0) = scrollar_invariant(int(args, "e")?, &class(args, "class")?)?;
            Ok(json!([t, h0]))
        }
        "scroll-classes" => {
            let sols = scroll_classes(int(args, "d")?, int(args, "g")?, int(args, "r")?)?;
            let pairs: Vec<Vec<i64>> = sols
                .iter()
                .map(|s| match s.class {
                    DivisorClass::Scroll { a, b, .. } => vec![a, b],
                    _ => vec![],
                })
                .collect();
            Ok(json!(pairs))
        }
        "cone-classes" => {
            let sols = rational_cone_classes(int(args, "d")?, int(args, "r")?)?;
            let triples: Vec<Vec<i64>> = sols
                .iter()
                .map(|s| {
                    let k = match s.class {
                        DivisorClass::Hirzebruch { a, .. } => a,
                        _ => 0,
                    };
                    vec![k, s.vertex_multiplicity.unwrap_or(-1), s.genus]
                })
                .collect();
            Ok(json!(triples))
        }
        "elliptic-classes" => {
            let sols = elliptic_cone_classes(int(args, "d")?, int(args, "r")?)?;
            let triples: Vec<Vec<i64>> = sols
                .iter()
                .map(|s| {
                    let k = match s.class {
                        DivisorClass::Hirzebruch { a, .. } => a,
                        _ => 0,
                    };
                    vec![k, s.vertex_multiplicity.unwrap_or(-1), s.genus]
                })
                .collect();
            Ok(json!(triples))
        }
        "delpezzo-classes" => {
            let g = int(args, "g")?;
            let sols = del_pezzo_classes(int(args, "d")?, g, g, int(args, "r")?)?;
            let names: Vec<String> = sols.iter().map(|s| s.class.compact()).collect();
            Ok(json!(names))
        }
        "contraction" => {
            let verdict = contraction_obstruction(
                int(args, "s")? as usize,
                &class(args, "c")?,
                &class(args, "m")?,
            )?;
            Ok(json!({
                "status": status_token(verdict.status),
                "witness": verdict.witness.as_ref().map(|w| w.compact()),
            }))
        }
        "multisecant" => {
            let verdict =
                multisecant_fiber_check(int(args, "e")?, &class(args, "c")?, &class(args, "m")?)?;
            Ok(json!({
                "status": status_token(verdict.status),
                "witness": verdict.witness.as_ref().map(|w| w.to_string()),
            }))
        }
        "fixed-part" => {
            let (fixed, moving) = fixed_part(int(args, "e")?, &class(args, "class")?)?;
            Ok(json!({ "fixed": fixed.to_string(), "moving": moving.to_string() }))
        }
        "analyze" => {
            let row = analyze(int(args, "d")?, int(args, "g")?, int(args, "r")?)?;
            let dims: Vec<i64> = row.component_dims();
            let moduli: Vec<Value> = row
                .components
                .iter()
                .map(|c| json!(c.moduli_image_dim.as_ref().map(|m| m.value)))
                .collect();
            let gonality: Vec<Value> = row
                .components
                .iter()
                .map(|c| {
                    json!(c
                        .gonality
                        .as_ref()
                        .map(|g| json!([g.value, g.source.to_string()])))
                })
                .collect();
            Ok(json!({
                "verdict": row.verdict.to_string(),
                "verdict_source": row.verdict_source.to_string(),
                "dims": dims,
                "chi": row.bounds.chi,
                "moduli": moduli,
                "gonality": gonality,
            }))
        }
        "moduli-strata" => {
            let row = analyze(int(args, "d")?, int(args, "g")?, int(args, "r")?)?;
            let label = args
                .get("component")
                .and_then(Value::as_str)
                .ok_or_else(|| anyhow!("argument component missing"))?;
            let comp = row
                .components
                .iter()
                .find(|c| c.label == label)
                .ok_or_else(|| anyhow!("no component labeled {label}"))?;
            let strata: Vec<Vec<Value>> = comp
                .moduli_strata
                .iter()
                .map(|s| vec![json!(s.dim), json!(s.source.to_string())])
                .collect();
            Ok(json!(strata))
        }
        "plane-genus" => Ok(json!(plane_model_genus(
            int(args, "d")?,
            &ints(args, "mults")?
        )?)),
        "pencils" => Ok(json!(singular_point_pencils(
            int(args, "d")?,
            &ints(args, "mults")?
        )?)),
        "h-ideal" => {
            let z = scheme(args, "points")?;
            let (h0, h1) = h_ideal(&z, int(args, "t")?);
            Ok(json!([h0, h1]))
        }
        "collinearity" => Ok(json!(collinearity_h1_criterion(&scheme(args, "points")?)?)),
        other => bail!("unknown fixture op {other:?}"),
    }
}
