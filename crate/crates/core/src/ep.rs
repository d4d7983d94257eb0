//! Consequences of the exclusivity principle (EP) for an experiment `G` and
//! its complement `Ḡ`: Yan's composite experiment, the largest theory EP
//! allows given a theory for `Ḡ`, the classical/single-copy dualities, the
//! sampled quantum self-duality, and post-quantum witnesses.

use crate::clique::{is_clique, maximal_cliques, maximal_independent_sets, CliqueError, VertexSet};
use crate::corner::{h_polytope_vertices, qstab, stab, Behavior, ConvexCorner, CornerError, Membership, Representation};
use crate::graph::{disjunctive_product, Graph, GraphError, ProductIndexMap};
use crate::linprog::{solve_lp, LpProblem, LpStatus};
use crate::rational::{dot, format_rational, to_f64, Rational};
use crate::sdp::{
    extract_realization, lovasz_theta, realization_from_gram, th_membership, QuantumRealization, SdpError,
    ThMembership, Tolerances,
};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Slack allowed when checking that a target satisfies every clique inequality.
pub const QSTAB_TOL: f64 = 1e-8;
/// Slack allowed on cross-EP inner products of quantum behaviors.
pub const CROSS_EP_TOL: f64 = 1e-6;
/// Slack allowed when classical behaviors are tested against EP half-spaces.
pub const NC_SPOT_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EpError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Corner(#[from] CornerError),
    #[error(transparent)]
    Clique(#[from] CliqueError),
    #[error(transparent)]
    Sdp(#[from] SdpError),
    #[error("behavior has {got} entries, graph has {expected} vertices")]
    Length { expected: usize, got: usize },
    #[error("diagonal of the composite experiment is not a clique")]
    DiagonalNotClique,
    #[error("target violates the clique inequality on {clique} (sum {sum})")]
    NotInQstab { clique: VertexSet, sum: f64 },
    #[error("target is not post-quantum: theta(G, w') = {theta} ({status})")]
    NotPostQuantum { theta: f64, status: &'static str },
    #[error("inner product {0} does not exceed 1")]
    NoViolation(f64),
    #[error("augmented theory has no extra generators")]
    NoGenerators,
}

/// Yan's composite experiment: `G` and `Ḡ` performed independently, with
/// event `f_ij = e_i ∧ e_j'` at product index `index_map.index(i, j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct YanConstruction {
    pub base: Graph,
    pub complement: Graph,
    pub product: Graph,
    pub index_map: ProductIndexMap,
    pub diagonal: VertexSet,
}

pub fn yan_construct(g: &Graph) -> Result<YanConstruction, EpError> {
    let complement = g.complement();
    let (product, index_map) = disjunctive_product(g, &complement)?;
    let diagonal = VertexSet::new((0..g.vertex_count()).map(|i| index_map.index(i, i)).collect());
    if !is_clique(&product, &diagonal) {
        return Err(EpError::DiagonalNotClique);
    }
    Ok(YanConstruction {
        base: g.clone(),
        complement,
        product,
        index_map,
        diagonal,
    })
}

/// `Σ p_i p'_i`, the left side of the EP inequality for the diagonal events
/// of independent copies. Computed exactly from the binary values.
pub fn ep_lhs(p: &Behavior, p_prime: &Behavior) -> Result<f64, EpError> {
    if p.len() != p_prime.len() {
        return Err(EpError::Length {
            expected: p.len(),
            got: p_prime.len(),
        });
    }
    Ok(to_f64(&dot(&p.to_exact(), &p_prime.to_exact())))
}

/// Largest theory for `G` compatible with EP given the theory `x_complement`
/// for `Ḡ`.
pub fn largest_theory(x_complement: &ConvexCorner) -> ConvexCorner {
    x_complement.antiblocker()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DualityCheck {
    pub identity: &'static str,
    pub holds: bool,
    /// A point of one side outside the other, present only on failure.
    pub separating: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DualityReport {
    pub nc_from_e1: DualityCheck,
    pub e1_from_nc: DualityCheck,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.nc_from_e1.holds && self.e1_from_nc.holds
    }
}

/// Point of `a` outside `b`, if one can be exhibited.
fn point_outside(a: &ConvexCorner, b: &ConvexCorner) -> Result<Option<Vec<Rational>>, EpError> {
    match a.representation() {
        Representation::V(gens) => {
            for g in gens {
                if !b.contains(g)? {
                    return Ok(Some(g.clone()));
                }
            }
            Ok(None)
        }
        Representation::H(normals) => {
            let others = match b.representation() {
                Representation::H(others) => others,
                Representation::V(_) => {
                    let Some(vertices) = h_polytope_vertices(a.dim(), normals)? else {
                        return Ok(None);
                    };
                    for v in vertices {
                        if !b.contains(&v)? {
                            return Ok(Some(v));
                        }
                    }
                    return Ok(None);
                }
            };
            for c in others {
                let mut lp = LpProblem::new(c.clone());
                for n in normals {
                    lp = lp.constraint(n.clone(), Rational::one());
                }
                let sol = solve_lp(&lp).map_err(CornerError::from)?;
                if sol.status == LpStatus::Optimal && sol.value > Rational::one() {
                    return Ok(Some(sol.primal));
                }
            }
            Ok(None)
        }
    }
}

fn duality_check(identity: &'static str, a: &ConvexCorner, b: &ConvexCorner) -> Result<DualityCheck, EpError> {
    if a.equal(b)? {
        return Ok(DualityCheck {
            identity,
            holds: true,
            separating: None,
        });
    }
    let sep = match point_outside(a, b)? {
        Some(p) => Some(p),
        None => point_outside(b, a)?,
    };
    Ok(DualityCheck {
        identity,
        holds: false,
        separating: sep.map(|p| p.iter().map(format_rational).collect()),
    })
}

/// Exact check of `abl E₁(Ḡ) = NC(G)` and `abl NC(Ḡ) = E₁(G)`.
pub fn verify_corollary1(g: &Graph) -> Result<DualityReport, EpError> {
    let gc = g.complement();
    Ok(DualityReport {
        nc_from_e1: duality_check("abl E1(Gc) = NC(G)", &largest_theory(&qstab(&gc)?), &stab(g)?)?,
        e1_from_nc: duality_check("abl NC(Gc) = E1(G)", &largest_theory(&stab(&gc)?), &qstab(g)?)?,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectionRecord {
    pub index: usize,
    pub weights: Vec<f64>,
    pub weights_complement: Vec<f64>,
    /// `ep_lhs(p, q)` for the optimizers `p ∈ TH(G)`, `q ∈ TH(Ḡ)`.
    pub cross_ep: Option<f64>,
    /// ϑ(Ḡ, p); equals 1 when `p` lies on the boundary of TH(G).
    pub tightness: Option<f64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuantumSampleReport {
    pub n_dirs: usize,
    pub seed: u64,
    pub max_cross_ep: f64,
    pub passed: bool,
    /// Largest `|ϑ(Ḡ, p) − 1|` over all directions.
    pub max_tightness_deviation: f64,
    /// ϑ(Ḡ, p*) for the optimizer `p*` of the all-ones weights.
    pub uniform_tightness: f64,
    pub failures: usize,
    pub records: Vec<DirectionRecord>,
}

/// Samples quantum behaviors of `G` and `Ḡ` along seeded random directions
/// and checks that none violates EP against another.
pub fn verify_remark2_sampled(
    g: &Graph,
    n_dirs: usize,
    seed: u64,
    tols: &Tolerances,
) -> Result<QuantumSampleReport, EpError> {
    let n = g.vertex_count();
    let gc = g.complement();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let star = lovasz_theta(g, &vec![1.0; n], tols)?;
    let uniform_tightness = lovasz_theta(&gc, star.behavior.as_slice(), tols)?.value;

    let mut records = Vec::with_capacity(n_dirs);
    for index in 0..n_dirs {
        let weights: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
        let weights_complement: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
        let run = || -> Result<(f64, f64), EpError> {
            let p = lovasz_theta(g, &weights, tols)?.behavior;
            let q = lovasz_theta(&gc, &weights_complement, tols)?.behavior;
            let tight = lovasz_theta(&gc, p.as_slice(), tols)?.value;
            Ok((ep_lhs(&p, &q)?, tight))
        };
        let (cross_ep, tightness, error) = match run() {
            Ok((c, t)) => (Some(c), Some(t), None),
            Err(e) => (None, None, Some(e.to_string())),
        };
        records.push(DirectionRecord {
            index,
            weights,
            weights_complement,
            cross_ep,
            tightness,
            error,
        });
    }
    let max_cross_ep = records.iter().filter_map(|r| r.cross_ep).fold(0.0, f64::max);
    let max_tightness_deviation = records
        .iter()
        .filter_map(|r| r.tightness)
        .map(|t| (t - 1.0).abs())
        .fold(0.0, f64::max);
    let failures = records.iter().filter(|r| r.error.is_some()).count();
    Ok(QuantumSampleReport {
        n_dirs,
        seed,
        max_cross_ep,
        passed: failures == 0 && max_cross_ep <= 1.0 + CROSS_EP_TOL,
        max_tightness_deviation,
        uniform_tightness,
        failures,
        records,
    })
}

/// Largest clique-inequality violation of `w` in `g`, with the clique.
fn worst_clique(g: &Graph, w: &Behavior) -> Result<Option<(VertexSet, f64)>, EpError> {
    let mut worst: Option<(VertexSet, f64)> = None;
    for c in maximal_cliques(g)? {
        let sum: f64 = c.members().iter().map(|&i| w.as_slice()[i]).sum();
        if worst.as_ref().is_none_or(|(_, s)| sum > *s) {
            worst = Some((c, sum));
        }
    }
    Ok(worst)
}

/// A theory for `Ḡ`: the quantum set TH(Ḡ) enlarged by finitely many extra
/// behaviors of QSTAB(Ḡ).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AugmentedTheory {
    pub label: String,
    pub extra_generators: Vec<Behavior>,
    /// Whether each generator was classified outside TH(Ḡ).
    pub post_quantum: Vec<bool>,
}

impl AugmentedTheory {
    pub fn new(g_complement: &Graph, extra_generators: Vec<Behavior>, tols: &Tolerances) -> Result<Self, EpError> {
        let n = g_complement.vertex_count();
        let mut post_quantum = Vec::with_capacity(extra_generators.len());
        for w in &extra_generators {
            if w.len() != n {
                return Err(EpError::Length {
                    expected: n,
                    got: w.len(),
                });
            }
            if let Some((clique, sum)) = worst_clique(g_complement, w)? {
                if sum > 1.0 + QSTAB_TOL {
                    return Err(EpError::NotInQstab { clique, sum });
                }
            }
            let m = th_membership(g_complement, w, tols)?;
            post_quantum.push(matches!(m, ThMembership::Outside { .. }));
        }
        Ok(AugmentedTheory {
            label: format!("Q ∪ W ({} extra)", extra_generators.len()),
            extra_generators,
            post_quantum,
        })
    }
}

/// One verified step of a witness argument.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub claim: String,
    pub value: f64,
    pub bound: f64,
    pub residual: f64,
    pub holds: bool,
}

impl Claim {
    fn at_most(claim: &str, value: f64, bound: f64) -> Claim {
        Claim {
            claim: claim.to_string(),
            value,
            bound,
            residual: value - bound,
            holds: value <= bound,
        }
    }

    fn above(claim: &str, value: f64, bound: f64) -> Claim {
        Claim {
            claim: claim.to_string(),
            value,
            bound,
            residual: value - bound,
            holds: value > bound,
        }
    }

    fn close(claim: &str, value: f64, target: f64, tol: f64) -> Claim {
        Claim {
            claim: claim.to_string(),
            value,
            bound: target,
            residual: (value - target).abs(),
            holds: (value - target).abs() <= tol,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessReport {
    /// Post-quantum behavior `w'` of `Ḡ`.
    pub target: Behavior,
    /// ϑ(G, w').
    pub theta_value: f64,
    /// Quantum behavior `p` of `G` attaining ϑ(G, w').
    pub witness: Behavior,
    /// `<p, w'>`.
    pub inner_product: f64,
    pub witness_is_post_classical: bool,
    /// Normal `h` with `s·h <= 1` on STAB(G) and `p·h > 1`, exact.
    pub stab_certificate: Vec<String>,
    pub certificate_verified: bool,
    pub witness_realization: QuantumRealization,
    /// "feasibility_sdp" or "theta_gram".
    pub realization_source: &'static str,
    pub narrative: Vec<Claim>,
}

/// Given a post-quantum behavior `w'` of `Ḡ`, finds a quantum behavior `p`
/// of `G` with `<p, w'> > 1`: the composite experiment would then violate EP,
/// so `w'` is excluded. The witness `p` is also shown to be post-classical.
pub fn post_quantum_witness(
    g_complement: &Graph,
    w_prime: &Behavior,
    tols: &Tolerances,
) -> Result<WitnessReport, EpError> {
    let n = g_complement.vertex_count();
    if w_prime.len() != n {
        return Err(EpError::Length {
            expected: n,
            got: w_prime.len(),
        });
    }
    let mut narrative = Vec::new();
    if let Some((clique, sum)) = worst_clique(g_complement, w_prime)? {
        if sum > 1.0 + QSTAB_TOL {
            return Err(EpError::NotInQstab { clique, sum });
        }
        narrative.push(Claim::at_most("target satisfies every clique inequality of Gc", sum, 1.0 + QSTAB_TOL));
    }
    let membership = th_membership(g_complement, w_prime, tols)?;
    match membership {
        ThMembership::Outside { theta, .. } => {
            narrative.push(Claim::above("target lies outside TH(Gc): theta(G, w') > 1", theta, 1.0 + tols.mem_tol))
        }
        other => {
            return Err(EpError::NotPostQuantum {
                theta: other.theta(),
                status: other.label(),
            })
        }
    }

    let g = g_complement.complement();
    let theta = lovasz_theta(&g, w_prime.as_slice(), tols)?;
    let p = theta.behavior.clone();
    let inner_product = p.dot(w_prime);
    if inner_product <= 1.0 {
        return Err(EpError::NoViolation(inner_product));
    }
    narrative.push(Claim::close("<p, w'> equals theta(G, w')", inner_product, theta.value, 1e-6));
    narrative.push(Claim::above("<p, w'> exceeds the EP bound", inner_product, 1.0));

    let nc = stab(&g)?;
    let p_exact = p.to_exact();
    let (post_classical, certificate) = match nc.membership(&p_exact)? {
        Membership::Inside => (false, Vec::new()),
        Membership::Outside { certificate } => (true, certificate),
    };
    let certificate_verified = post_classical
        && dot(&p_exact, &certificate) > Rational::one()
        && nc.vectors().iter().all(|s| dot(s, &certificate) <= Rational::one());
    if post_classical {
        narrative.push(Claim::above(
            "p violates a valid inequality of NC(G)",
            to_f64(&dot(&p_exact, &certificate)),
            1.0,
        ));
    }

    let (witness_realization, realization_source) = match extract_realization(&g, &p, tols) {
        Ok(r) => (r, "feasibility_sdp"),
        Err(_) => (
            realization_from_gram(&g, &p, &theta.solution.primal_matrix, tols)?,
            "theta_gram",
        ),
    };
    narrative.push(Claim::at_most(
        "event vectors are orthogonal along edges of G",
        witness_realization.max_edge_overlap,
        tols.orth_tol,
    ));
    let realized: f64 = witness_realization
        .realized_behavior
        .iter()
        .zip(w_prime.as_slice())
        .map(|(r, w)| r * w)
        .sum();
    narrative.push(Claim::close(
        "realized sum of w'_i <psi|v_i>^2 equals theta(G, w')",
        realized,
        theta.value,
        1e-5,
    ));

    Ok(WitnessReport {
        target: w_prime.clone(),
        theta_value: theta.value,
        witness: p,
        inner_product,
        witness_is_post_classical: post_classical,
        stab_certificate: certificate.iter().map(format_rational).collect(),
        certificate_verified,
        witness_realization,
        realization_source,
        narrative,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorOutcome {
    pub target: Behavior,
    pub witness: Option<WitnessReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MainResultReport {
    pub theory: String,
    pub outcomes: Vec<GeneratorOutcome>,
    /// Quantum behaviors of `G` excluded by some EP half-space `<p, w'> <= 1`.
    pub excluded_quantum_behaviors: usize,
    /// Y(G) is a proper subset of Q(G).
    pub strict_inclusion: bool,
    pub all_excluded_post_classical: bool,
    /// Largest `<s, w'>` over classical vertices `s` of NC(G) and all `w'`.
    pub nc_spot_check_max: f64,
    pub nc_survives: bool,
}

/// Runs [`post_quantum_witness`] for every extra generator of `theory` and
/// checks that no classical behavior of `G` is excluded along the way.
pub fn demo_main_result(
    g_complement: &Graph,
    theory: &AugmentedTheory,
    tols: &Tolerances,
) -> Result<MainResultReport, EpError> {
    if theory.extra_generators.is_empty() {
        return Err(EpError::NoGenerators);
    }
    let g = g_complement.complement();
    let classical = maximal_independent_sets(&g)?;
    let mut nc_spot_check_max: f64 = 0.0;
    let mut outcomes = Vec::new();
    for w in &theory.extra_generators {
        for s in &classical {
            let v: f64 = s.members().iter().map(|&i| w.as_slice()[i]).sum();
            nc_spot_check_max = nc_spot_check_max.max(v);
        }
        let outcome = match post_quantum_witness(g_complement, w, tols) {
            Ok(r) => GeneratorOutcome {
                target: w.clone(),
                witness: Some(r),
                error: None,
            },
            Err(e) => GeneratorOutcome {
                target: w.clone(),
                witness: None,
                error: Some(e.to_string()),
            },
        };
        outcomes.push(outcome);
    }
    let witnesses: Vec<&WitnessReport> = outcomes.iter().filter_map(|o| o.witness.as_ref()).collect();
    Ok(MainResultReport {
        theory: theory.label.clone(),
        excluded_quantum_behaviors: witnesses.len(),
        strict_inclusion: !witnesses.is_empty(),
        all_excluded_post_classical: witnesses.iter().all(|w| w.witness_is_post_classical && w.certificate_verified),
        nc_survives: nc_spot_check_max <= 1.0 + NC_SPOT_TOL,
        nc_spot_check_max,
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_graphs_up_to_iso, named_graph};

    fn tols() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn yan_examples() {
        let y = yan_construct(&named_graph("C5").unwrap()).unwrap();
        assert_eq!(y.product.vertex_count(), 25);
        assert_eq!(y.diagonal.len(), 5);

        let k2 = yan_construct(&named_graph("K2").unwrap()).unwrap();
        assert_eq!(k2.product.vertex_count(), 4);
        assert_eq!(k2.diagonal.members(), &[0, 3]);
        assert!(k2.product.adjacent(0, 3));

        let k1 = yan_construct(&named_graph("K1").unwrap()).unwrap();
        assert_eq!(k1.product.vertex_count(), 1);
        assert_eq!(k1.diagonal.members(), &[0]);
    }

    #[test]
    fn ep_lhs_examples() {
        let s = Behavior::uniform(5, 1.0 / 5f64.sqrt()).unwrap();
        assert!((ep_lhs(&s, &s).unwrap() - 1.0).abs() < 1e-9);
        let z = Behavior::uniform(5, 0.0).unwrap();
        assert_eq!(ep_lhs(&z, &s).unwrap(), 0.0);
        let h = Behavior::uniform(5, 0.5).unwrap();
        assert_eq!(ep_lhs(&h, &h).unwrap(), 1.25);
        assert!(matches!(
            ep_lhs(&h, &Behavior::uniform(4, 0.5).unwrap()),
            Err(EpError::Length { .. })
        ));
    }

    #[test]
    fn dualities_on_small_graphs() {
        for name in ["C5", "petersen"] {
            assert!(verify_corollary1(&named_graph(name).unwrap()).unwrap().passed(), "{name}");
        }
        let four = all_graphs_up_to_iso(4);
        assert_eq!(four.len(), 11);
        for g in &four {
            assert!(verify_corollary1(g).unwrap().passed());
        }
    }

    #[test]
    fn separating_point_on_mismatch() {
        let c5 = named_graph("C5").unwrap();
        let check = duality_check("stab vs qstab", &stab(&c5).unwrap(), &qstab(&c5).unwrap()).unwrap();
        assert!(!check.holds);
        let sep = check.separating.unwrap();
        assert_eq!(sep, vec!["1/2"; 5]);
    }

    #[test]
    fn largest_theory_of_double_antiblocker() {
        let c5 = named_graph("C5").unwrap();
        let s = stab(&c5).unwrap();
        assert!(largest_theory(&s.antiblocker()).equal(&s).unwrap());
    }

    #[test]
    fn quantum_self_duality_on_triangle_and_pentagon() {
        let k3 = named_graph("K3").unwrap();
        let r = verify_remark2_sampled(&k3, 10, 1, &tols()).unwrap();
        assert!(r.passed);
        let c5 = named_graph("C5").unwrap();
        let r = verify_remark2_sampled(&c5, 20, 7, &tols()).unwrap();
        assert!(r.passed, "{}", r.max_cross_ep);
        assert!((r.uniform_tightness - 1.0).abs() < 1e-4);
    }

    #[test]
    fn pentagon_witness() {
        let c5 = named_graph("C5").unwrap();
        let r = post_quantum_witness(&c5, &Behavior::uniform(5, 0.5).unwrap(), &tols()).unwrap();
        assert!((r.theta_value - 5f64.sqrt() / 2.0).abs() < 1e-6);
        assert!(r.inner_product > 1.0);
        assert!(r.witness_is_post_classical && r.certificate_verified);
        assert!(r.narrative.iter().all(|c| c.holds), "{:?}", r.narrative);
        for &q in r.witness.as_slice() {
            assert!((q - 1.0 / 5f64.sqrt()).abs() < 1e-5);
        }
    }

    #[test]
    fn heptagon_witness_uses_complement_theta() {
        // ϑ(C̄_n) = n / ϑ(C_n) for odd cycles, with the odd-cycle closed form.
        let c = (std::f64::consts::PI / 7.0).cos();
        let theta_c7 = 7.0 * c / (1.0 + c);
        let expected = 7.0 / theta_c7 / 2.0;
        let c7 = named_graph("C7").unwrap();
        let r = post_quantum_witness(&c7, &Behavior::uniform(7, 0.5).unwrap(), &tols()).unwrap();
        assert!((r.theta_value - expected).abs() < 1e-6, "{} vs {expected}", r.theta_value);
        assert!(r.witness_is_post_classical && r.certificate_verified);
        assert!(r.narrative.iter().all(|c| c.holds), "{:?}", r.narrative);
    }

    #[test]
    fn quantum_target_is_rejected() {
        let c5 = named_graph("C5").unwrap();
        let err = post_quantum_witness(&c5, &Behavior::uniform(5, 0.4).unwrap(), &tols()).unwrap_err();
        assert!(matches!(err, EpError::NotPostQuantum { status: "inside", .. }), "{err:?}");
        let err = post_quantum_witness(&c5, &Behavior::uniform(5, 0.6).unwrap(), &tols()).unwrap_err();
        assert!(matches!(err, EpError::NotInQstab { .. }));
    }

    #[test]
    fn main_result_demo() {
        let c5 = named_graph("C5").unwrap();
        let gens = vec![
            Behavior::uniform(5, 0.5).unwrap(),
            Behavior::uniform(5, 1.0 / 5f64.sqrt()).unwrap(),
        ];
        let theory = AugmentedTheory::new(&c5, gens, &tols()).unwrap();
        assert_eq!(theory.post_quantum, vec![true, false]);
        let rep = demo_main_result(&c5, &theory, &tols()).unwrap();
        assert_eq!(rep.excluded_quantum_behaviors, 1);
        assert!(rep.strict_inclusion && rep.all_excluded_post_classical && rep.nc_survives);
        assert!(rep.outcomes[1].error.as_ref().unwrap().contains("not post-quantum"));

        let empty = AugmentedTheory::new(&c5, vec![], &tols()).unwrap();
        assert_eq!(demo_main_result(&c5, &empty, &tols()), Err(EpError::NoGenerators));
    }
}
