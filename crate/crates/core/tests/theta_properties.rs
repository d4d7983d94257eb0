use exlab_core::clique::{independence_number, WeightVector};
use exlab_core::graph::{named_graph, Graph};
use exlab_core::linprog::fractional_packing;
use exlab_core::rational::to_f64;
use exlab_core::sdp::{lovasz_theta, th_membership, ThMembership, Tolerances};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn theta_is_sandwiched(g in arb_graph(8), w in proptest::collection::vec(0i64..4, 8)) {
        let n = g.vertex_count();
        let w = WeightVector::from_integers(&w[..n]).unwrap();
        let tols = Tolerances::default();
        let t = lovasz_theta(&g, &w.to_f64(), &tols).unwrap().value;
        let alpha = to_f64(&independence_number(&g, &w).unwrap().0);
        let astar = to_f64(&fractional_packing(&g, &w).unwrap().0);
        prop_assert!(alpha - 1e-6 <= t && t <= astar + 1e-6, "{alpha} {t} {astar}");
    }

    #[test]
    fn theta_is_homogeneous(g in arb_graph(7), w in proptest::collection::vec(0.0f64..1.0, 7), c in 0.5f64..3.0) {
        let n = g.vertex_count();
        let tols = Tolerances::default();
        let t = lovasz_theta(&g, &w[..n], &tols).unwrap().value;
        let scaled: Vec<f64> = w[..n].iter().map(|x| x * c).collect();
        let ts = lovasz_theta(&g, &scaled, &tols).unwrap().value;
        prop_assert!((ts - c * t).abs() <= 1e-6 * (1.0 + ts.abs()));
    }

    /// Lovász: ϑ(G) ϑ(Ḡ) >= n.
    #[test]
    fn theta_product_bound(g in arb_graph(8)) {
        let n = g.vertex_count();
        let tols = Tolerances::default();
        let ones = vec![1.0; n];
        let a = lovasz_theta(&g, &ones, &tols).unwrap().value;
        let b = lovasz_theta(&g.complement(), &ones, &tols).unwrap().value;
        prop_assert!(a * b >= n as f64 - 1e-6);
    }

    #[test]
    fn optimizers_are_quantum(g in arb_graph(7), w in proptest::collection::vec(0.0f64..1.0, 7)) {
        let n = g.vertex_count();
        let tols = Tolerances::default();
        let p = lovasz_theta(&g, &w[..n], &tols).unwrap().behavior;
        let m = th_membership(&g, &p, &tols).unwrap();
        prop_assert!(!matches!(m, ThMembership::Outside { .. }), "{m:?}");
    }
}

#[test]
fn vertex_transitive_values() {
    let tols = Tolerances::default();
    // Petersen: ϑ = 4 (Lovász), K_n: 1, empty graph: n.
    let pet = named_graph("petersen").unwrap();
    assert!((lovasz_theta(&pet, &[1.0; 10], &tols).unwrap().value - 4.0).abs() < 1e-6);
    let e4 = named_graph("E4").unwrap();
    assert!((lovasz_theta(&e4, &[1.0; 4], &tols).unwrap().value - 4.0).abs() < 1e-6);
    for n in [5usize, 7, 9] {
        let c = (std::f64::consts::PI / n as f64).cos();
        let expected = n as f64 * c / (1.0 + c);
        let g = named_graph(&format!("C{n}")).unwrap();
        let t = lovasz_theta(&g, &vec![1.0; n], &tols).unwrap().value;
        assert!((t - expected).abs() < 1e-6, "C{n}: {t} vs {expected}");
        let tc = lovasz_theta(&g.complement(), &vec![1.0; n], &tols).unwrap().value;
        assert!((t * tc - n as f64).abs() < 1e-5, "vertex-transitive product for C{n}");
    }
}
