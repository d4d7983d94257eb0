//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p exlab --test acceptance`.

use exlab_core::clique::{independence_number, maximal_independent_sets, WeightVector};
use exlab_core::corner::{qstab, stab};
use exlab_core::ep::{verify_corollary1, verify_remark2_sampled, yan_construct};
use exlab_core::graph::{
    all_graphs_up_to_iso, disjunctive_product, named_graph, parse_graph6, random_bipartite, random_chordal,
    random_gnp, Graph,
};
use exlab_core::linprog::fractional_packing;
use exlab_core::rational::{dot, int, parse_rational, ratio, to_f64, Rational};
use exlab_core::sdp::{lovasz_theta, Tolerances};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: false,
        detail: detail.into(),
    }
}

fn within(limit: Duration, start: Instant, mut o: Outcome) -> Outcome {
    let took = start.elapsed();
    o.detail = format!("{} [{:.2}s, limit {}s]", o.detail, took.as_secs_f64(), limit.as_secs());
    if took > limit {
        o.passed = false;
    }
    o
}

fn odd_cycle_theta(n: usize) -> f64 {
    let c = (PI / n as f64).cos();
    n as f64 * c / (1.0 + c)
}

/// All graphs on at most five vertices up to isomorphism, plus C7 and Petersen.
fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for (i, g) in all_graphs_up_to_iso(n).into_iter().enumerate() {
            out.push((format!("n{n}#{i}"), g));
        }
    }
    for name in ["C7", "petersen"] {
        out.push((name.to_string(), named_graph(name).unwrap()));
    }
    out
}

fn pentagon_numbers() -> Outcome {
    let start = Instant::now();
    let c5 = named_graph("C5").unwrap();
    let ones = WeightVector::ones(5);
    let alpha = independence_number(&c5, &ones).unwrap().0;
    let astar = fractional_packing(&c5, &ones).unwrap().0;
    let theta = lovasz_theta(&c5, &[1.0; 5], &Tolerances::default()).unwrap().value;
    let ok = alpha == int(2) && astar == ratio(5, 2) && (theta - 2.2360680).abs() <= 1e-5;
    let o = if ok { pass } else { fail };
    within(
        Duration::from_secs(1),
        start,
        o(format!("alpha={alpha} alpha*={astar} theta={theta:.9}")),
    )
}

fn sandwich_suite() -> Outcome {
    let start = Instant::now();
    let tols = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = f64::NEG_INFINITY;
    let mut cases = 0;
    for k in 0..50u64 {
        let n = rng.gen_range(3..=9);
        let g = random_gnp(n, rng.gen_range(0.2..0.8), 1000 + k);
        let weights = [
            WeightVector::ones(n),
            WeightVector::from_integers(&(0..n).map(|_| rng.gen_range(0..6)).collect::<Vec<i64>>()).unwrap(),
            WeightVector::new((0..n).map(|_| ratio(rng.gen_range(1..20), rng.gen_range(1..8))).collect()).unwrap(),
        ];
        for w in &weights {
            let a = to_f64(&independence_number(&g, w).unwrap().0);
            let s = to_f64(&fractional_packing(&g, w).unwrap().0);
            let t = lovasz_theta(&g, &w.to_f64(), &tols).unwrap().value;
            worst = worst.max(a - t).max(t - s);
            cases += 1;
        }
    }
    let o = if worst <= 1e-6 { pass } else { fail };
    within(
        Duration::from_secs(60),
        start,
        o(format!("{cases} cases, worst sandwich excess {worst:.3e}")),
    )
}

fn dualities_exact(corpus: &[(String, Graph)]) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (name, g) in corpus {
        if !verify_corollary1(g).unwrap().passed() {
            failures.push(name.clone());
        }
    }
    let o = if failures.is_empty() { pass } else { fail };
    within(
        Duration::from_secs(120),
        start,
        o(format!("{} graphs, failures {failures:?}", corpus.len())),
    )
}

fn involution(corpus: &[(String, Graph)]) -> Outcome {
    let mut failures = Vec::new();
    for (name, g) in corpus {
        for c in [stab(g).unwrap(), qstab(g).unwrap()] {
            if !c.antiblocker().antiblocker().equal(&c).unwrap() {
                failures.push(name.clone());
            }
        }
    }
    let o = if failures.is_empty() { pass } else { fail };
    o(format!("{} graphs x {{STAB, QSTAB}}, failures {failures:?}", corpus.len()))
}

fn quantum_self_duality() -> Outcome {
    let tols = Tolerances::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for name in ["C5", "C7", "petersen"] {
        let g = named_graph(name).unwrap();
        let r = verify_remark2_sampled(&g, 100, 7, &tols).unwrap();
        let tight = (r.uniform_tightness - 1.0).abs() <= 1e-4;
        ok &= r.passed && r.max_cross_ep <= 1.0 + 1e-6 && tight && r.failures == 0;
        parts.push(format!(
            "{name}: max cross-EP {:.9}, theta(Gc, p*) {:.9}",
            r.max_cross_ep, r.uniform_tightness
        ));
    }
    let o = if ok { pass } else { fail };
    o(parts.join("; "))
}

fn exlab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_exlab"))
        .args(args)
        .env_remove("EXLAB_SEED")
        .output()
        .expect("exlab runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

/// Checks one `witness` report; returns the theta value on success.
fn check_witness(catalog: &str, expected: f64, tol: f64) -> Result<f64, String> {
    let (code, out) = exlab(&["witness", "--catalog", catalog, "--behavior", "uniform:0.5", "--format", "json"]);
    if code != 0 {
        return Err(format!("exit {code}"));
    }
    let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let theta = v["theta_value"].as_f64().unwrap();
    let inner = v["inner_product"].as_f64().unwrap();
    let overlap = v["witness_realization"]["max_edge_overlap"].as_f64().unwrap();

    // Re-verify the separating certificate exactly against every classical vertex.
    let g = named_graph(catalog).unwrap().complement();
    let h: Vec<Rational> = v["stab_certificate"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| parse_rational(x.as_str().unwrap()).unwrap())
        .collect();
    let p: Vec<Rational> = v["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| parse_rational(&x.to_string()).unwrap())
        .collect();
    let n = g.vertex_count();
    let cert_ok = h.len() == n
        && dot(&p, &h) > Rational::one()
        && maximal_independent_sets(&g)
            .unwrap()
            .iter()
            .all(|s| dot(&s.indicator(n), &h) <= Rational::one());

    let mut problems = Vec::new();
    if (theta - expected).abs() > tol {
        problems.push(format!("theta {theta:.9} vs expected {expected:.9} (tol {tol:e})"));
    }
    if inner <= 1.0 {
        problems.push(format!("inner product {inner}"));
    }
    if !(cert_ok && v["witness_is_post_classical"] == Value::Bool(true)) {
        problems.push("NC certificate did not verify".to_string());
    }
    if overlap >= 1e-5 {
        problems.push(format!("edge overlap {overlap:e}"));
    }
    if problems.is_empty() {
        Ok(theta)
    } else {
        Err(problems.join(", "))
    }
}

fn main_result_demo() -> Outcome {
    let c5 = check_witness("C5", 5f64.sqrt() / 2.0, 1e-5);
    let c7 = check_witness("C7", odd_cycle_theta(7) / 2.0, 1e-4);
    let describe = |r: &Result<f64, String>| match r {
        Ok(t) => format!("theta {t:.9} ok"),
        Err(e) => e.clone(),
    };
    let o = if c5.is_ok() && c7.is_ok() { pass } else { fail };
    o(format!("C5: {}; C7: {}", describe(&c5), describe(&c7)))
}

fn perfect_collapse() -> Outcome {
    let tols = Tolerances::default();
    let mut graphs = Vec::new();
    for seed in 0..10u64 {
        graphs.push((format!("bipartite#{seed}"), random_bipartite(3 + (seed as usize % 6), 0.5, seed)));
    }
    for seed in 0..5u64 {
        graphs.push((format!("chordal#{seed}"), random_chordal(4 + (seed as usize % 5), seed)));
    }
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for (name, g) in &graphs {
        let n = g.vertex_count();
        let w = WeightVector::ones(n);
        let alpha = independence_number(g, &w).unwrap().0;
        let astar = fractional_packing(g, &w).unwrap().0;
        let theta = lovasz_theta(g, &vec![1.0; n], &tols).unwrap().value;
        let dev = (theta - to_f64(&alpha)).abs();
        worst = worst.max(dev);
        if alpha != astar || dev > 1e-6 || n > 8 {
            failures.push(name.clone());
        }
    }
    let o = if failures.is_empty() { pass } else { fail };
    o(format!("{} graphs, max |theta - alpha| {worst:.3e}, failures {failures:?}", graphs.len()))
}

fn brute_force_product(g: &Graph, h: &Graph) -> Vec<(usize, usize)> {
    let m = h.vertex_count();
    let total = g.vertex_count() * m;
    let mut edges = Vec::new();
    for a in 0..total {
        for b in a + 1..total {
            let (i, j, k, l) = (a / m, a % m, b / m, b % m);
            if g.adjacent(i, k) || h.adjacent(j, l) {
                edges.push((a, b));
            }
        }
    }
    edges
}

fn yan_and_products(corpus: &[(String, Graph)]) -> Outcome {
    let mut failures = Vec::new();
    for (name, g) in corpus {
        if yan_construct(g).is_err() {
            failures.push(format!("yan {name}"));
        }
    }
    let small: Vec<&(String, Graph)> = corpus.iter().filter(|(_, g)| g.vertex_count() <= 5).collect();
    let mut pairs = 0;
    for (a, g) in &small {
        for (b, h) in &small {
            pairs += 1;
            let (p, _) = disjunctive_product(g, h).unwrap();
            if p.edges() != brute_force_product(g, h) {
                failures.push(format!("{a} * {b}"));
            }
        }
    }
    let o = if failures.is_empty() { pass } else { fail };
    o(format!("{} diagonals, {pairs} factor pairs, failures {failures:?}", corpus.len()))
}

fn graph6_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = 0;
    for seed in 0..200u64 {
        let n = rng.gen_range(1..=62);
        let g = random_gnp(n, rng.gen(), seed);
        let s = g.to_graph6().unwrap();
        let back = parse_graph6(&s).unwrap();
        if back != g || back.to_graph6().unwrap().as_bytes() != s.as_bytes() {
            failures += 1;
        }
    }
    let o = if failures == 0 { pass } else { fail };
    o(format!("200 graphs, {failures} mismatches"))
}

fn determinism() -> Outcome {
    let commands: [&[&str]; 6] = [
        &["invariants", "--catalog", "C5"],
        &["invariants", "--catalog", "petersen", "--weights", "1,2,3,1,2,3,1,2,3,1"],
        &["duality", "--catalog", "C5", "--quantum-sampled", "10", "--seed", "9"],
        &["witness", "--catalog", "C5", "--behavior", "0.5,0.5,0.5,0.5,0.5"],
        &["yan", "--catalog", "C5"],
        &["yan", "--catalog", "K1"],
    ];
    let mut failures = Vec::new();
    for args in commands {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let (c1, a) = exlab(&full);
        let (c2, b) = exlab(&full);
        if c1 != 0 || c2 != 0 || a != b || a.is_empty() {
            failures.push(args.join(" "));
        }
    }
    let o = if failures.is_empty() { pass } else { fail };
    o(format!("{} commands run twice, failures {failures:?}", commands.len()))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let results = [
        ("1 pentagon headline numbers", pentagon_numbers()),
        ("2 sandwich suite", sandwich_suite()),
        ("3 NC/E1 dualities exact", dualities_exact(&corpus)),
        ("4 antiblocker involution", involution(&corpus)),
        ("5 quantum self-duality sampled", quantum_self_duality()),
        ("6 post-quantum witness", main_result_demo()),
        ("7 perfect-graph collapse", perfect_collapse()),
        ("8 Yan diagonal and products", yan_and_products(&corpus)),
        ("9 graph6 round trip", graph6_round_trip()),
        ("10 CLI determinism", determinism()),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!("[{}] {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
