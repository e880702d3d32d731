//! JSON and text renderings of analysis results. Keys come out sorted
//! (serde_json's default map), arrays keep the library's order, so equal
//! input gives byte-identical output.

use std::fmt::Write as _;

use revsym_core::classifier::{AnalysisReport, ConditionMatch, NormalForm, Params, Witness, WitnessKind};
use revsym_core::map_algebra::{DiagonalAffine, PlanarPolyMap, StandardWord};
use revsym_core::poly::{BiPoly, PolyPair, Rational};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// Always `num/den`, integers included, so consumers never have to guess.
pub fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn params_json(p: &Params) -> Value {
    let mut m = Map::new();
    for (k, v) in p.entries() {
        m.insert(k.to_string(), Value::String(fraction(v)));
    }
    Value::Object(m)
}

fn kind_name(symmetry: bool) -> &'static str {
    if symmetry {
        "symmetry"
    } else {
        "reversing"
    }
}

fn condition_json(m: &ConditionMatch) -> Value {
    json!({
        "id": m.id.name(),
        "row": m.id.row(),
        "kind": kind_name(m.id.is_symmetry()),
        "params": params_json(&m.params),
        "alternatives": m.alternatives.iter().map(params_json).collect::<Vec<_>>(),
        "transposed": m.transposed,
    })
}

fn planar_json(f: &PlanarPolyMap) -> Value {
    json!({
        "map": f.forward().to_string(),
        "inverse": f.inverse_pair().to_string(),
    })
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "condition": w.condition.name(),
        "kind": kind_name(w.kind == WitnessKind::Symmetry),
        "map": w.map.forward().to_string(),
        "inverse": w.map.inverse_pair().to_string(),
        "order": w.order.to_string(),
        "companion": w.companion.as_ref().map(planar_json),
    })
}

/// `x -> αx + β, y -> γy + δ` as a printable pair.
pub fn change_pair(t: &DiagonalAffine) -> PolyPair {
    PolyPair::new(
        BiPoly::from_terms([((1, 0), t.alpha.clone()), ((0, 0), t.beta.clone())]),
        BiPoly::from_terms([((0, 1), t.gamma.clone()), ((0, 0), t.delta.clone())]),
    )
}

pub fn normal_form_json(nf: &NormalForm) -> Value {
    json!({
        "row": nf.row.name(),
        "change": {
            "map": change_pair(&nf.change).to_string(),
            "alpha": fraction(&nf.change.alpha),
            "beta": fraction(&nf.change.beta),
            "gamma": fraction(&nf.change.gamma),
            "delta": fraction(&nf.change.delta),
        },
        "map": nf.map.to_source(),
    })
}

pub fn report_json(r: &AnalysisReport) -> Value {
    let s = &r.structure;
    json!({
        "schema_version": SCHEMA_VERSION,
        "input": r.map.to_source(),
        "word_type": r.word_type.to_string(),
        "reversible": r.reversible(),
        "conditions": r.matches.iter().map(condition_json).collect::<Vec<_>>(),
        "witnesses": r.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
        "group_structure": {
            "tag": s.tag.name(),
            "symmetry_tag": s.symmetry_tag.name(),
            "presentation": s.presentation(),
            "symmetry_generators": s.symmetry_generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "reversing_generator": s.reversing_generator.map(|g| g.to_string()),
        },
        "normal_form": r.normal_form.as_ref().map(normal_form_json),
        "caveats": r.caveats,
    })
}

pub fn report_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "map:        {}", r.map.to_source());
    let _ = writeln!(out, "word type:  {}", r.word_type);
    let _ = writeln!(out, "reversible: {}", if r.reversible() { "yes" } else { "no" });
    let _ = writeln!(
        out,
        "group:      {}  {}",
        r.structure.tag,
        r.structure.presentation()
    );
    if r.matches.is_empty() {
        let _ = writeln!(out, "conditions: none");
    } else {
        let _ = writeln!(out, "conditions:");
        for m in &r.matches {
            let t = if m.transposed { "  (transposed)" } else { "" };
            let _ = writeln!(out, "  {}  {}{t}", m.id, m.params);
        }
    }
    for w in &r.witnesses {
        let _ = writeln!(out, "witness {} [{}]: {}", w.condition.row(), w.order, w.map);
        if let Some(c) = &w.companion {
            let _ = writeln!(out, "  companion L∘{}: {}", w.condition.row(), c);
        }
    }
    match &r.normal_form {
        Some(nf) => {
            let _ = writeln!(out, "normal form ({}): {}", nf.row.row(), nf.map.to_source());
            let _ = writeln!(out, "  via {}", change_pair(&nf.change));
        }
        None => {
            let _ = writeln!(out, "normal form: none");
        }
    }
    for c in &r.caveats {
        let _ = writeln!(out, "note: {c}");
    }
    out
}

pub fn word_json(w: &StandardWord) -> Value {
    let letters: Vec<Value> = w
        .labels
        .iter()
        .zip(w.word.letters())
        .map(|(label, g)| {
            json!({
                "label": label,
                "class": g.class().to_string(),
                "map": g.to_poly_pair().to_string(),
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "word_type": w.word_type.to_string(),
        "word": w.to_string(),
        "pattern": w.word.to_string(),
        "reduced": w.word.is_reduced(),
        "letters": letters,
    })
}

pub fn word_text(w: &StandardWord) -> String {
    let mut out = format!("{w}\n");
    let _ = writeln!(out, "classes: {}", w.word);
    for (label, g) in w.labels.iter().zip(w.word.letters()) {
        let _ = writeln!(out, "  {label:<3} {}  {}", g.class(), g.to_poly_pair());
    }
    out
}
