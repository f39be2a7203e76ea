//! Text, JSON and DOT rendering of the core objects.

use norbit_core::infchar::{InfChar, RecipeTrace, TracePiece};
use norbit_core::orbit::Orbit;
use norbit_core::{ClassicalType, Rat, VeryEvenLabel};
use serde_json::{json, Value};

use crate::verify::CaseReport;

pub fn rat_string(x: &Rat) -> String {
    x.to_string()
}

pub fn weight_strings(w: &[Rat]) -> Vec<String> {
    w.iter().map(rat_string).collect()
}

/// Orbit descriptors serialize as
/// `{"type":"B","rank":2,"partition":[3,1,1],"label":null}`.
pub fn orbit_json(o: &Orbit) -> Value {
    json!({
        "type": o.ty().to_string(),
        "rank": o.rank(),
        "partition": o.partition().parts(),
        "label": o.label().map(|l| l.to_string()),
    })
}

/// Infinitesimal characters serialize with exact entry strings.
pub fn infchar_json(ic: &InfChar) -> Value {
    json!({
        "lambda": weight_strings(ic.entries()),
        "d_sign_parity": ic.d_sign_parity(),
    })
}

pub fn trace_json(trace: &RecipeTrace) -> Value {
    let pieces: Vec<Value> = trace.pieces.iter().map(trace_piece_json).collect();
    json!({
        "columns": trace.columns,
        "padded": trace.padded,
        "pieces": pieces,
    })
}

fn trace_piece_json(piece: &TracePiece) -> Value {
    match piece {
        TracePiece::Removed {
            value,
            contribution,
        } => json!({
            "kind": "removed-pair",
            "value": value,
            "contribution": weight_strings(contribution),
        }),
        TracePiece::HeadSingleton {
            value,
            contribution,
        } => json!({
            "kind": "head-singleton",
            "value": value,
            "contribution": weight_strings(contribution),
        }),
        TracePiece::TailSingleton {
            value,
            contribution,
        } => json!({
            "kind": "tail-singleton",
            "value": value,
            "contribution": weight_strings(contribution),
        }),
        TracePiece::Wrap { a, b, contribution } => json!({
            "kind": "wrap-pair",
            "columns": [a, b],
            "contribution": weight_strings(contribution),
        }),
        TracePiece::Pair {
            a,
            b,
            used_rho_gl,
            contribution,
        } => json!({
            "kind": "pair",
            "columns": [a, b],
            "used_rho_gl": used_rho_gl,
            "contribution": weight_strings(contribution),
        }),
        TracePiece::Column {
            value,
            contribution,
        } => json!({
            "kind": "column",
            "value": value,
            "contribution": weight_strings(contribution),
        }),
    }
}

pub fn trace_text(trace: &RecipeTrace) -> String {
    let mut out = String::new();
    out.push_str(&format!("columns: [{}]\n", join_u32(&trace.columns)));
    out.push_str(&format!("padded:  [{}]\n", join_u32(&trace.padded)));
    for piece in &trace.pieces {
        let line = match piece {
            TracePiece::Removed {
                value,
                contribution,
            } => format!(
                "removed pair ({value},{value}) -> rho_gl: ({})",
                weight_strings(contribution).join(",")
            ),
            TracePiece::HeadSingleton {
                value,
                contribution,
            } => format!(
                "head singleton ({value}) -> ({})",
                weight_strings(contribution).join(",")
            ),
            TracePiece::TailSingleton {
                value,
                contribution,
            } => format!(
                "tail singleton ({value}) -> ({})",
                weight_strings(contribution).join(",")
            ),
            TracePiece::Wrap { a, b, contribution } => format!(
                "wrap pair ({a},{b}) -> ({})",
                weight_strings(contribution).join(",")
            ),
            TracePiece::Pair {
                a,
                b,
                used_rho_gl,
                contribution,
            } => format!(
                "pair ({a},{b}) -> {}({})",
                if *used_rho_gl { "rho_gl " } else { "" },
                weight_strings(contribution).join(",")
            ),
            TracePiece::Column {
                value,
                contribution,
            } => format!(
                "column {value} -> rho_gl: ({})",
                weight_strings(contribution).join(",")
            ),
        };
        out.push_str("  ");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn join_u32(v: &[u32]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn node_name(o: &Orbit) -> String {
    match o.label() {
        Some(l) => format!("({}) {}", o.partition(), l),
        None => format!("({})", o.partition()),
    }
}

/// Hasse diagrams export to DOT with orbits as nodes and covering
/// relations as edges.
pub fn hasse_dot(ty: ClassicalType, rank: u32, edges: &[(Orbit, Orbit)]) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{ty}{rank}\" {{\n"));
    let mut nodes: Vec<String> = Vec::new();
    for (a, b) in edges {
        for o in [a, b] {
            let name = node_name(o);
            if !nodes.contains(&name) {
                nodes.push(name);
            }
        }
    }
    for n in &nodes {
        out.push_str(&format!("  \"{n}\";\n"));
    }
    for (a, b) in edges {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            node_name(a),
            node_name(b)
        ));
    }
    out.push_str("}\n");
    out
}

/// Verification reports serialize as `{case, status, witness}`.
pub fn case_json(report: &CaseReport) -> Value {
    json!({
        "case": report.case,
        "status": report.status.to_string(),
        "witness": report.witness,
    })
}

pub fn parse_label(s: &str) -> Result<VeryEvenLabel, String> {
    match s {
        "I" | "i" | "1" => Ok(VeryEvenLabel::I),
        "II" | "ii" | "2" => Ok(VeryEvenLabel::II),
        other => Err(format!("unknown very-even label {other:?}")),
    }
}

/// Reads an orbit back from its documented JSON schema.
pub fn orbit_from_json(v: &Value) -> Result<Orbit, String> {
    let ty: ClassicalType = v["type"]
        .as_str()
        .ok_or("missing type")?
        .parse()
        .map_err(|e| format!("{e}"))?;
    let rank = v["rank"].as_u64().ok_or("missing rank")? as u32;
    let parts: Vec<u32> = v["partition"]
        .as_array()
        .ok_or("missing partition")?
        .iter()
        .map(|x| x.as_u64().map(|p| p as u32).ok_or("bad part"))
        .collect::<Result<_, _>>()?;
    let partition = norbit_core::Partition::new(parts).map_err(|e| format!("{e}"))?;
    let label = match &v["label"] {
        Value::Null => None,
        Value::String(s) => Some(parse_label(s)?),
        _ => return Err("bad label".into()),
    };
    Orbit::new(ty, rank, partition, label).map_err(|e| format!("{e}"))
}
