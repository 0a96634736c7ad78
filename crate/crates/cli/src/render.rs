use serde_json::{json, Value};

use spherical_core::monoid::{self, WeightMonoid};
use spherical_core::verify::{self, Variant, VerificationReport};
use spherical_core::{catalog, ClassDescriptor, Error, IntMatrix, SmithDecomposition, Weight};

use crate::Format;

fn joined(ws: &[Weight]) -> String {
    if ws.is_empty() {
        return "(none)".to_string();
    }
    ws.iter().map(Weight::to_string).collect::<Vec<_>>().join(", ")
}

fn rule(m: &WeightMonoid) -> &'static str {
    if m.is_constrained() {
        "constrained"
    } else if m.pieces().is_some() {
        "union"
    } else {
        "generated"
    }
}

fn monoid_json(variant: &Variant, m: &WeightMonoid) -> Value {
    json!({
        "variant": variant.to_string(),
        "rule": rule(m),
        "generators": m.generators.iter().map(|g| g.coords()).collect::<Vec<_>>(),
        "display": m.generators.iter().map(Weight::to_string).collect::<Vec<_>>(),
    })
}

fn class_json(c: &ClassDescriptor) -> Value {
    json!({
        "group": c.group.to_string(),
        "label": c.label,
        "aliases": c.aliases,
        "kind": c.kind.to_string(),
        "J": c.j,
        "dimension": monoid::class_dimension(c),
        "normal_closure": c.normal_closure,
        "component_group_order": catalog::centralizer_component_order(c),
        "model": monoid::is_model(c),
        "isogenies": c.isogeny.iter().map(|e| json!({"tag": e.tag, "note": e.note})).collect::<Vec<_>>(),
    })
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json serializes"))
}

fn latex_label(label: &str) -> String {
    format!("\\texttt{{{}}}", label.replace('_', "\\_").replace('~', "\\~{}"))
}

fn latex_weight(w: &Weight) -> String {
    w.to_string()
        .split_inclusive(['+', '-'])
        .map(|t| {
            let (body, sign) = match t.strip_suffix(['+', '-']) {
                Some(b) => (b, &t[b.len()..]),
                None => (t, ""),
            };
            let body = match body.split_once('w') {
                Some((k, i)) => format!("{k}\\omega_{{{i}}}"),
                None => body.to_string(),
            };
            format!("{body}{sign}")
        })
        .collect()
}

fn latex_monoid(m: &WeightMonoid) -> String {
    let gens: Vec<String> = m.generators.iter().map(latex_weight).collect();
    format!("$\\langle {} \\rangle$", gens.join(", "))
}

pub fn list(classes: &[ClassDescriptor], format: Format) -> String {
    match format {
        Format::Json => pretty(&Value::Array(classes.iter().map(class_json).collect())),
        _ => classes
            .iter()
            .map(|c| {
                format!(
                    "{}\t{}\tJ={:?}\tdim={}{}\n",
                    c.label,
                    c.kind,
                    c.j,
                    monoid::class_dimension(c),
                    if c.aliases.is_empty() {
                        String::new()
                    } else {
                        format!("\taliases={}", c.aliases.join(","))
                    }
                )
            })
            .collect(),
    }
}

pub fn show(c: &ClassDescriptor, variant: &Variant, m: &WeightMonoid, format: Format) -> String {
    match format {
        Format::Json => {
            let mut v = class_json(c);
            v["monoid"] = monoid_json(variant, m);
            pretty(&v)
        }
        Format::Latex => format!("{} & {} \\\\\n", latex_label(&c.label), latex_monoid(m)),
        Format::Text => {
            let mut out = format!("class: {}\nvariant: {variant}\nrule: {}\n", c.id(), rule(m));
            if let Some(pieces) = m.pieces() {
                for (i, p) in pieces.iter().enumerate() {
                    out += &format!(
                        "piece {}: basis {}, at least {}\n",
                        i + 1,
                        joined(&p.basis),
                        Weight(p.min.clone())
                    );
                }
            }
            out += &format!("generators: {}\n", joined(&m.generators));
            out
        }
    }
}

pub fn table(classes: &[ClassDescriptor], format: Format) -> Result<String, Error> {
    let mut rows = Vec::new();
    for c in classes {
        let monoids = verify::variants(c)
            .into_iter()
            .map(|v| verify::engine_monoid(c, &v).map(|m| (v, m)))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((c, monoids));
    }
    Ok(match format {
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|(c, ms)| {
                    let mut v = class_json(c);
                    v["monoids"] = ms.iter().map(|(var, m)| monoid_json(var, m)).collect();
                    v
                })
                .collect(),
        )),
        Format::Latex => {
            let mut out = String::from(
                "\\begin{tabular}{lll}\n\\hline\nclass & $\\lambda(\\mathcal{O})$ & $\\lambda(\\hat{\\mathcal{O}})$ \\\\\n\\hline\n",
            );
            for (c, ms) in &rows {
                out += &format!("{} & {} & {} \\\\\n", latex_label(&c.label), latex_monoid(&ms[0].1), latex_monoid(&ms[1].1));
            }
            out += "\\hline\n\\end{tabular}\n";
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (c, ms) in &rows {
                out += &format!("{}\n", c.label);
                for (v, m) in ms {
                    out += &format!("  {v}: {}\n", joined(&m.generators));
                }
            }
            out
        }
    })
}

pub fn verify_text(oracle: &[VerificationReport], tables: &[VerificationReport], minima: &VerificationReport) -> String {
    let mut out = String::new();
    for (name, reports) in [("oracle", oracle), ("tables", tables)] {
        let failed: Vec<&VerificationReport> = reports.iter().filter(|r| !r.passed()).collect();
        out += &format!("{name}: {} classes, {} failing\n", reports.len(), failed.len());
        for r in failed {
            out += &format!("  {}: {} mismatches {:?}\n", r.class, r.mismatches.len(), r.errors);
        }
    }
    out += &format!(
        "minima: {} roots, {}\n",
        minima.checked,
        if minima.passed() { "ok" } else { "failing" }
    );
    out
}

pub fn snf(m: &IntMatrix, s: &SmithDecomposition, format: Format) -> String {
    let rows = |x: &IntMatrix| -> Vec<Vec<String>> {
        (0..x.rows())
            .map(|i| (0..x.cols()).map(|j| x[(i, j)].to_string()).collect())
            .collect()
    };
    match format {
        Format::Json => pretty(&json!({
            "matrix": rows(m),
            "diagonal": s.diagonal().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "D": rows(&s.d),
            "U": rows(&s.u),
            "V": rows(&s.v),
        })),
        _ => {
            let diag: Vec<String> = s.diagonal().iter().map(ToString::to_string).collect();
            let block = |x: &IntMatrix| x.to_string().trim_end().to_string();
            format!(
                "diagonal: {}\nD =\n{}\nU =\n{}\nV =\n{}\n",
                diag.join(", "),
                block(&s.d),
                block(&s.u),
                block(&s.v)
            )
        }
    }
}
