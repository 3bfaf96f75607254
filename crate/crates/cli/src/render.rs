//! Report serialization: canonical JSON (keys sorted, integers and strings
//! only, no floats) and the Markdown layouts.

use curveclass_core::bounds::BoundsReport;
use curveclass_core::cohomology::Cohomology;
use curveclass_core::hilbert::{
    AbsorbedFamily, ClassificationTable, ComponentReport, SourcedValue, Stratum, TableRow,
};
use curveclass_core::surfaces::ClassSolution;
use serde_json::{json, Value};

/// Version stamp for the analyze/table JSON layout.
pub const SCHEMA: i64 = 1;

pub fn cohomology_json(h: &Cohomology) -> Value {
    json!({ "h0": h.h0, "h1": h.h1, "h2": h.h2, "chi": h.chi() })
}

pub fn bounds_json(rep: &BoundsReport) -> Value {
    json!({
        "d": rep.d,
        "g": rep.g,
        "r": rep.r,
        "pi": rep.pi,
        "pi1": rep.pi1,
        "rho": rep.rho,
        "lambda": rep.lambda,
        "chi": rep.chi,
        "alpha": rep.alpha,
    })
}

/// Bounds report without a genus: the genus-dependent quantities are null.
pub fn bounds_without_genus_json(d: i64, r: i64, pi: i64, pi1: Option<i64>) -> Value {
    json!({
        "d": d,
        "g": Value::Null,
        "r": r,
        "pi": pi,
        "pi1": pi1,
        "rho": Value::Null,
        "lambda": Value::Null,
        "chi": Value::Null,
        "alpha": Value::Null,
    })
}

pub fn zscheme_json(deg: i64, h0: i64, h1: i64, rank: i64) -> Value {
    json!({ "deg": deg, "h0": h0, "h1": h1, "rank": rank })
}

pub fn zscheme_md(deg: i64, h0: i64, h1: i64, rank: i64) -> String {
    two_column_md(&[
        ("deg", deg.to_string()),
        ("h0", h0.to_string()),
        ("h1", h1.to_string()),
        ("rank", rank.to_string()),
    ])
}

pub fn solution_json(s: &ClassSolution) -> Value {
    json!({
        "surface": s.surface.kind.to_string(),
        "class": s.class.to_string(),
        "compact": s.class.compact(),
        "degree": s.degree,
        "genus": s.genus,
        "ruling_degree": s.ruling_degree(),
        "vertex_multiplicity": s.vertex_multiplicity,
        "smooth_at_vertex": s.smooth_at_vertex(),
    })
}

fn sourced_json(v: &SourcedValue) -> Value {
    json!({ "value": v.value, "source": v.source.to_string() })
}

fn stratum_json(s: &Stratum) -> Value {
    json!({ "label": s.label, "dim": s.dim, "source": s.source.to_string() })
}

fn component_json(c: &ComponentReport) -> Value {
    json!({
        "label": c.label,
        "surface": c.surface.as_ref().map(|k| k.to_string()),
        "class": c.class.as_ref().map(|cl| cl.to_string()),
        "family_dim": c.family_dim,
        "expected_dim": c.expected_dim,
        "gonality": c.gonality.as_ref().map(sourced_json),
        "linearly_normal": c.linearly_normal,
        "acm": c.acm,
        "moduli_image_dim": c.moduli_image_dim.as_ref().map(sourced_json),
        "moduli_strata": c.moduli_strata.iter().map(stratum_json).collect::<Vec<_>>(),
        "notes": c.notes,
    })
}

fn absorbed_json(a: &AbsorbedFamily) -> Value {
    json!({ "label": a.label, "family_dim": a.family_dim, "notes": a.notes })
}

pub fn row_json(row: &TableRow) -> Value {
    json!({
        "d": row.d,
        "g": row.g,
        "r": row.r,
        "verdict": row.verdict.to_string(),
        "verdict_source": row.verdict_source.to_string(),
        "bounds": bounds_json(&row.bounds),
        "components": row.components.iter().map(component_json).collect::<Vec<_>>(),
        "absorbed": row.absorbed.iter().map(absorbed_json).collect::<Vec<_>>(),
        "notes": row.notes,
        "warnings": row.warnings,
    })
}

pub fn analyze_json(row: &TableRow) -> Value {
    let mut v = row_json(row);
    v["schema"] = json!(SCHEMA);
    v
}

pub fn table_json(table: &ClassificationTable) -> Value {
    json!({
        "schema": SCHEMA,
        "d": table.d,
        "r": table.r,
        "rows": table.rows.iter().map(row_json).collect::<Vec<_>>(),
    })
}

fn two_column_md(rows: &[(&str, String)]) -> String {
    let mut out = String::from("| quantity | value |\n| --- | --- |\n");
    for (k, v) in rows {
        out.push_str(&format!("| {k} | {v} |\n"));
    }
    out
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn cohomology_md(h: &Cohomology) -> String {
    two_column_md(&[
        ("h0", h.h0.to_string()),
        ("h1", h.h1.to_string()),
        ("h2", h.h2.to_string()),
        ("chi", h.chi().to_string()),
    ])
}

pub fn bounds_md(rep: &BoundsReport) -> String {
    two_column_md(&[
        ("d", rep.d.to_string()),
        ("g", rep.g.to_string()),
        ("r", rep.r.to_string()),
        ("pi", rep.pi.to_string()),
        ("pi1", opt(rep.pi1)),
        ("rho", rep.rho.to_string()),
        ("lambda", rep.lambda.to_string()),
        ("chi", rep.chi.to_string()),
        ("alpha", rep.alpha.to_string()),
    ])
}

pub fn bounds_without_genus_md(d: i64, r: i64, pi: i64, pi1: Option<i64>) -> String {
    two_column_md(&[
        ("d", d.to_string()),
        ("r", r.to_string()),
        ("pi", pi.to_string()),
        ("pi1", opt(pi1)),
    ])
}

pub fn classes_md(solutions: &[ClassSolution]) -> String {
    let mut out = String::from(
        "| class | degree | genus | ruling | vertex multiplicity |\n| --- | --- | --- | --- | --- |\n",
    );
    for s in solutions {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            s.class.compact(),
            s.degree,
            s.genus,
            opt(s.ruling_degree()),
            opt(s.vertex_multiplicity),
        ));
    }
    out
}

fn sourced_md(v: &Option<SourcedValue>) -> String {
    match v {
        Some(v) => format!("{} ({})", v.value, v.source),
        None => "-".to_string(),
    }
}

pub fn analyze_md(row: &TableRow) -> String {
    let mut out = format!(
        "## d = {}, g = {} in P^{}: {}\n\nverdict source: {}\n\n",
        row.d, row.g, row.r, row.verdict, row.verdict_source
    );
    out.push_str(&format!(
        "bounds: pi = {}, pi1 = {}, rho = {}, lambda = {}, chi = {}\n\n",
        row.bounds.pi,
        row.bounds.pi1.map_or_else(|| "-".to_string(), |v| v.to_string()),
        row.bounds.rho,
        row.bounds.lambda,
        row.bounds.chi
    ));
    if !row.components.is_empty() {
        out.push_str(
            "| component | surface | class | dim | expected | gonality | moduli image |\n\
             | --- | --- | --- | --- | --- | --- | --- |\n",
        );
        for c in &row.components {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} |\n",
                c.label,
                c.surface.as_ref().map_or_else(|| "-".to_string(), |k| k.to_string()),
                c.class.as_ref().map_or_else(|| "-".to_string(), |cl| cl.compact()),
                c.family_dim,
                c.expected_dim,
                sourced_md(&c.gonality),
                sourced_md(&c.moduli_image_dim),
            ));
        }
        out.push('\n');
    }
    for a in &row.absorbed {
        out.push_str(&format!(
            "absorbed: {} (dim {}, inside a listed component)\n",
            a.label, a.family_dim
        ));
    }
    if !row.notes.is_empty() {
        out.push('\n');
        for n in &row.notes {
            out.push_str(&format!("- {n}\n"));
        }
    }
    if !row.warnings.is_empty() {
        out.push('\n');
        for w in &row.warnings {
            out.push_str(&format!("- warning: {w}\n"));
        }
    }
    out
}

pub fn table_md(table: &ClassificationTable) -> String {
    let mut out = format!(
        "## Degree {} curves in P^{}\n\n\
         | g | verdict | components | dimensions | expected | source |\n\
         | --- | --- | --- | --- | --- | --- |\n",
        table.d, table.r
    );
    for row in &table.rows {
        let labels: Vec<&str> = row.components.iter().map(|c| c.label.as_str()).collect();
        let dims: Vec<String> = row
            .components
            .iter()
            .map(|c| c.family_dim.to_string())
            .collect();
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |\n",
            row.g,
            row.verdict,
            if labels.is_empty() { "-".to_string() } else { labels.join(", ") },
            if dims.is_empty() { "-".to_string() } else { dims.join(", ") },
            row.bounds.chi,
            row.verdict_source,
        ));
    }
    out
}
