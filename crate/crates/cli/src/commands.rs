use crate::error::{CliError, EXIT_PARSE};
use crate::format::{cell, round_json};
use crate::{Common, OutputFormat, Source};
use exlab_core::clique::{independence_number, WeightVector};
use exlab_core::corner::{qstab, stab, Behavior, CornerError};
use exlab_core::ep::{post_quantum_witness, verify_corollary1, verify_remark2_sampled, yan_construct};
use exlab_core::graph::{named_graph, parse_edge_list, parse_graph6, Graph};
use exlab_core::linprog::fractional_packing;
use exlab_core::rational::{format_rational, parse_rational, to_f64, Rational};
use exlab_core::sdp::{lovasz_theta, Tolerances};
use num_traits::Signed;
use serde_json::{json, Value};
use std::fs;
use std::io::Write;
use std::path::Path;

pub const SCHEMA_VERSION: &str = "1";
/// Slack for the sandwich verdict α <= ϑ <= α*.
pub const SANDWICH_TOL: f64 = 1e-6;

#[derive(Clone, Debug)]
pub enum Task {
    Invariants,
    Duality(Option<usize>),
    Witness(String),
    Yan,
}

impl Task {
    fn name(&self) -> &'static str {
        match self {
            Task::Invariants => "invariants",
            Task::Duality(_) => "duality",
            Task::Witness(_) => "witness",
            Task::Yan => "yan",
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

fn load_graph(source: &Source) -> Result<Graph, CliError> {
    if let Some(path) = &source.edge_list {
        return Ok(parse_edge_list(&read_file(path)?)?);
    }
    if let Some(s) = &source.graph6 {
        return Ok(parse_graph6(s)?);
    }
    if let Some(name) = &source.catalog {
        return Ok(named_graph(name)?);
    }
    Err(CliError::parse("no graph source given"))
}

/// Inline list or the contents of a file: comma/whitespace separated
/// rationals, or a JSON array.
fn parse_number_list(spec: &str) -> Result<Vec<Rational>, CliError> {
    let text = if Path::new(spec).is_file() {
        read_file(Path::new(spec))?
    } else {
        spec.to_string()
    };
    let text = text.trim();
    if text.starts_with('[') {
        let items: Vec<Value> =
            serde_json::from_str(text).map_err(|e| CliError::parse(format!("invalid JSON list: {e}")))?;
        return items
            .iter()
            .map(|v| match v {
                Value::String(s) => parse_rational(s),
                Value::Number(n) => parse_rational(&n.to_string()),
                _ => None,
            }
            .ok_or_else(|| CliError::parse(format!("invalid number {v}"))))
            .collect();
    }
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).ok_or_else(|| CliError::parse(format!("invalid number '{t}'"))))
        .collect()
}

fn load_weights(spec: Option<&str>, n: usize) -> Result<WeightVector, CliError> {
    let Some(spec) = spec else {
        return Ok(WeightVector::ones(n));
    };
    let w = parse_number_list(spec)?;
    if w.len() != n {
        return Err(CliError::parse(format!("{} weights given for {n} vertices", w.len())));
    }
    if w.iter().any(|x| x.is_negative()) {
        return Err(CliError::parse("weights must be nonnegative"));
    }
    Ok(WeightVector::new(w)?)
}

fn parse_behavior(spec: &str, n: usize) -> Result<Behavior, CliError> {
    let values: Vec<f64> = if let Some(p) = spec.trim().strip_prefix("uniform:") {
        let p = parse_rational(p.trim()).ok_or_else(|| CliError::parse(format!("invalid probability '{p}'")))?;
        vec![to_f64(&p); n]
    } else {
        parse_number_list(spec)?.iter().map(to_f64).collect()
    };
    if values.len() != n {
        return Err(CliError::parse(format!("behavior has {} entries for {n} vertices", values.len())));
    }
    Ok(Behavior::new(values)?)
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "graph6": g.to_graph6().ok(),
    })
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn invariants(g: &Graph, common: &Common, tols: &Tolerances) -> Result<Value, CliError> {
    let w = load_weights(common.weights.as_deref(), g.vertex_count())?;
    let (alpha, witness) = independence_number(g, &w)?;
    let theta = lovasz_theta(g, &w.to_f64(), tols)?;
    let (alpha_star, optimizer) = fractional_packing(g, &w)?;
    let (a, s) = (to_f64(&alpha), to_f64(&alpha_star));
    let holds = a - SANDWICH_TOL <= theta.value && theta.value <= s + SANDWICH_TOL;
    Ok(json!({
        "graph": graph_json(g),
        "weights": rationals(w.as_slice()),
        "alpha": { "value": format_rational(&alpha), "approx": a, "witness": witness.members() },
        "theta": {
            "value": theta.value,
            "duality_gap": theta.solution.duality_gap,
            "max_constraint_residual": theta.solution.max_constraint_residual,
            "iterations": theta.solution.iterations,
            "behavior": theta.behavior,
        },
        "alpha_star": { "value": format_rational(&alpha_star), "approx": s, "optimizer": rationals(&optimizer) },
        "sandwich": {
            "holds": holds,
            "tolerance": SANDWICH_TOL,
            "verdict": if holds { "sandwich OK" } else { "sandwich VIOLATED" },
        },
    }))
}

/// Whether NC(G) = E₁(G); `None` when the exact comparison exceeds the
/// vertex-enumeration budget.
fn sets_coincide(g: &Graph) -> Result<Option<bool>, CliError> {
    let ones = WeightVector::ones(g.vertex_count());
    let (alpha, _) = independence_number(g, &ones)?;
    let (alpha_star, _) = fractional_packing(g, &ones)?;
    if alpha != alpha_star {
        return Ok(Some(false));
    }
    match stab(g)?.equal(&qstab(g)?) {
        Ok(b) => Ok(Some(b)),
        Err(CornerError::TooLarge) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn verdict(name: &str, holds: bool) -> String {
    format!("{name}: {}", if holds { "PASS" } else { "FAIL" })
}

fn duality(g: &Graph, sampled: Option<usize>, common: &Common, tols: &Tolerances) -> Result<Value, CliError> {
    let cor = verify_corollary1(g)?;
    let mut verdicts = vec![
        verdict("abl E1(Gc)=NC(G)", cor.nc_from_e1.holds),
        verdict("abl NC(Gc)=E1(G)", cor.e1_from_nc.holds),
    ];
    let quantum = match sampled {
        Some(n_dirs) => {
            let r = verify_remark2_sampled(g, n_dirs, common.seed, tols)?;
            verdicts.push(verdict("quantum cross-EP <= 1 (sampled)", r.passed));
            serde_json::to_value(r).expect("report serializes")
        }
        None => Value::Null,
    };
    Ok(json!({
        "graph": graph_json(g),
        "seed": common.seed,
        "classical_duality": serde_json::to_value(&cor).expect("report serializes"),
        "sets_coincide": sets_coincide(g)?,
        "quantum_sampled": quantum,
        "verdicts": verdicts,
    }))
}

fn witness(g: &Graph, spec: &str, tols: &Tolerances) -> Result<Value, CliError> {
    let target = parse_behavior(spec, g.vertex_count())?;
    let report = post_quantum_witness(g, &target, tols)?;
    let mut v = serde_json::to_value(&report).expect("report serializes");
    v["graph"] = graph_json(g);
    v["witness_graph"] = graph_json(&g.complement());
    Ok(v)
}

fn yan(g: &Graph) -> Result<Value, CliError> {
    let y = yan_construct(g)?;
    let pairs: Vec<(usize, usize)> = y.diagonal.members().iter().map(|&i| y.index_map.pair(i)).collect();
    Ok(json!({
        "graph": graph_json(g),
        "product": {
            "vertices": y.product.vertex_count(),
            "edges": y.product.edge_count(),
            "graph6": y.product.to_graph6().ok(),
            "edge_list": y.product.to_edge_list(),
        },
        "index_rule": "index(i, j) = i * n + j",
        "diagonal": y.diagonal.members(),
        "diagonal_pairs": pairs,
        "diagonal_is_clique": true,
    }))
}

fn report_for(g: &Graph, common: &Common, task: &Task, tols: &Tolerances) -> Result<Value, CliError> {
    match task {
        Task::Invariants => invariants(g, common, tols),
        Task::Duality(n) => duality(g, *n, common, tols),
        Task::Witness(spec) => witness(g, spec, tols),
        Task::Yan => yan(g),
    }
}

fn row(out: &mut Vec<String>, label: &str, v: &Value, pointer: &str) {
    out.push(format!("{label:<28} {}", cell(v.pointer(pointer).unwrap_or(&Value::Null))));
}

fn table(task: &Task, v: &Value) -> Vec<String> {
    let mut out = Vec::new();
    row(&mut out, "vertices", v, "/graph/vertices");
    row(&mut out, "edges", v, "/graph/edges");
    row(&mut out, "graph6", v, "/graph/graph6");
    match task {
        Task::Invariants => {
            row(&mut out, "alpha", v, "/alpha/value");
            row(&mut out, "alpha witness", v, "/alpha/witness");
            row(&mut out, "theta", v, "/theta/value");
            row(&mut out, "theta duality gap", v, "/theta/duality_gap");
            row(&mut out, "alpha*", v, "/alpha_star/value");
            row(&mut out, "alpha* optimizer", v, "/alpha_star/optimizer");
            out.push(cell(&v["sandwich"]["verdict"]));
        }
        Task::Duality(_) => {
            row(&mut out, "NC = E1 (sets coincide)", v, "/sets_coincide");
            if !v["quantum_sampled"].is_null() {
                row(&mut out, "directions", v, "/quantum_sampled/n_dirs");
                row(&mut out, "seed", v, "/seed");
                row(&mut out, "max cross-EP", v, "/quantum_sampled/max_cross_ep");
                row(&mut out, "uniform tightness", v, "/quantum_sampled/uniform_tightness");
                row(&mut out, "max tightness deviation", v, "/quantum_sampled/max_tightness_deviation");
                row(&mut out, "solver failures", v, "/quantum_sampled/failures");
            }
            for check in ["nc_from_e1", "e1_from_nc"] {
                if let Some(sep) = v["classical_duality"][check]["separating"].as_array() {
                    out.push(format!("{:<28} {}", format!("{check} separating"), cell(&Value::Array(sep.clone()))));
                }
            }
            if let Some(list) = v["verdicts"].as_array() {
                out.extend(list.iter().map(cell));
            }
        }
        Task::Witness(_) => {
            row(&mut out, "target w'", v, "/target");
            row(&mut out, "theta(G, w')", v, "/theta_value");
            row(&mut out, "witness p", v, "/witness");
            row(&mut out, "<p, w'>", v, "/inner_product");
            row(&mut out, "p post-classical", v, "/witness_is_post_classical");
            row(&mut out, "NC certificate", v, "/stab_certificate");
            row(&mut out, "certificate verified", v, "/certificate_verified");
            row(&mut out, "realization source", v, "/realization_source");
            row(&mut out, "max edge overlap", v, "/witness_realization/max_edge_overlap");
            row(&mut out, "max behavior error", v, "/witness_realization/max_behavior_error");
            for claim in v["narrative"].as_array().into_iter().flatten() {
                out.push(format!(
                    "[{}] {}: {} (bound {}, residual {})",
                    if claim["holds"] == Value::Bool(true) { "ok" } else { "FAILED" },
                    cell(&claim["claim"]),
                    cell(&claim["value"]),
                    cell(&claim["bound"]),
                    cell(&claim["residual"]),
                ));
            }
        }
        Task::Yan => {
            row(&mut out, "product vertices", v, "/product/vertices");
            row(&mut out, "product edges", v, "/product/edges");
            row(&mut out, "product graph6", v, "/product/graph6");
            row(&mut out, "diagonal", v, "/diagonal");
            row(&mut out, "diagonal is a clique", v, "/diagonal_is_clique");
            out.push("product edge list:".to_string());
            out.extend(cell(&v["product"]["edge_list"]).lines().map(|l| format!("  {l}")));
        }
    }
    out
}

fn emit(common: &Common, task: &Task, doc: &Value, tables: Vec<String>) -> Result<(), CliError> {
    let pretty = serde_json::to_string_pretty(doc).expect("JSON serializes");
    let text = match common.format {
        OutputFormat::Json => pretty.clone(),
        OutputFormat::Table => {
            let mut lines = vec![format!("exlab {} (schema {SCHEMA_VERSION})", task.name())];
            lines.extend(tables);
            lines.join("\n")
        }
    };
    // A closed pipe (e.g. `| head`) is not an error for a report printer.
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}").and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            return Err(CliError::parse(format!("stdout: {e}")));
        }
    }
    if let Some(path) = &common.json {
        fs::write(path, format!("{pretty}\n"))
            .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

/// Runs one command; returns the exit code for batch runs whose entries failed.
pub fn run(common: &Common, task: &Task) -> Result<i32, CliError> {
    let tols = common.tolerances();
    let header = |body: Value| -> Value {
        let mut doc = json!({ "schema": SCHEMA_VERSION, "command": task.name() });
        if let Value::Object(m) = body {
            doc.as_object_mut().expect("object").extend(m);
        }
        round_json(doc)
    };

    let Some(batch) = &common.source.each else {
        let g = load_graph(&common.source)?;
        let doc = header(report_for(&g, common, task, &tols)?);
        let tables = table(task, &doc);
        emit(common, task, &doc, tables)?;
        return Ok(0);
    };

    let text = read_file(batch)?;
    let mut results = Vec::new();
    let mut tables = Vec::new();
    let mut worst = 0;
    let lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    for (index, line) in lines.enumerate() {
        let outcome = parse_graph6(line)
            .map_err(CliError::from)
            .and_then(|g| report_for(&g, common, task, &tols));
        tables.push(format!("== graph {index}: {line}"));
        match outcome {
            Ok(report) => {
                let report = round_json(report);
                tables.extend(table(task, &report));
                results.push(json!({ "index": index, "input": line, "report": report }));
            }
            Err(e) => {
                worst = worst.max(e.code);
                tables.push(e.to_string());
                results.push(json!({ "index": index, "input": line, "error": e.to_json() }));
            }
        }
    }
    if results.is_empty() {
        return Err(CliError {
            code: EXIT_PARSE,
            message: format!("{}: no graph6 lines", batch.display()),
        });
    }
    let doc = header(json!({ "results": results }));
    emit(common, task, &doc, tables)?;
    Ok(worst)
}
