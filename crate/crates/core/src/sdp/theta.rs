use super::{solve_sdp, SdpError, SdpProblem, SdpSolution, SdpStatus, SymMatrix, Tolerances};
use crate::corner::Behavior;
use crate::graph::Graph;

/// Theta-body program for weighted ϑ over the bordered Gram matrix `M`
/// (index 0 is the border, `i + 1` is vertex `i`):
///
/// maximize `Σ w_i M_ii` subject to `M_00 = 1`, `M_0i = M_ii`, `M_ij = 0`
/// for every edge, `M ⪰ 0`. The optimal diagonal is a point of TH(G).
pub fn theta_problem(g: &Graph, w: &[f64]) -> SdpProblem {
    let n = g.vertex_count();
    let mut objective = SymMatrix::new();
    for (i, &wi) in w.iter().enumerate() {
        if wi != 0.0 {
            objective.push(i + 1, i + 1, wi);
        }
    }
    let mut constraints = vec![(SymMatrix::new().entry(0, 0, 1.0), 1.0)];
    for i in 0..n {
        constraints.push((
            SymMatrix::new().entry(0, i + 1, 0.5).entry(i + 1, i + 1, -1.0),
            0.0,
        ));
    }
    for (i, j) in g.edges() {
        constraints.push((SymMatrix::new().entry(i + 1, j + 1, 0.5), 0.0));
    }
    SdpProblem {
        dim: n + 1,
        objective,
        constraints,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaResult {
    pub value: f64,
    /// Optimal diagonal, a quantum behavior attaining `value`.
    pub behavior: Behavior,
    pub solution: SdpSolution,
}

/// Weighted Lovász number ϑ(G, w) with an optimal quantum behavior.
pub fn lovasz_theta(g: &Graph, w: &[f64], tols: &Tolerances) -> Result<ThetaResult, SdpError> {
    let n = g.vertex_count();
    if w.len() != n {
        return Err(SdpError::Length {
            expected: n,
            got: w.len(),
        });
    }
    if w.iter().any(|&x| !x.is_finite() || x < 0.0) {
        return Err(SdpError::InvalidWeights);
    }
    let solution = solve_sdp(&theta_problem(g, w), tols)?;
    if solution.status != SdpStatus::Optimal {
        return Err(SdpError::NotOptimal(solution.status));
    }
    let probs = (0..n)
        .map(|i| solution.primal_matrix[(i + 1, i + 1)].clamp(0.0, 1.0))
        .collect();
    Ok(ThetaResult {
        value: solution.value,
        behavior: Behavior::new(probs).expect("clamped into [0, 1]"),
        solution,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum ThMembership {
    Inside { theta: f64 },
    /// Within `mem_tol` of the boundary; not classified.
    Boundary { theta: f64 },
    /// `witness` lies in TH(Ḡ) and `<witness, p> = theta > 1`.
    Outside { theta: f64, witness: Behavior },
}

impl ThMembership {
    pub fn theta(&self) -> f64 {
        match self {
            ThMembership::Inside { theta }
            | ThMembership::Boundary { theta }
            | ThMembership::Outside { theta, .. } => *theta,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ThMembership::Inside { .. } => "inside",
            ThMembership::Boundary { .. } => "boundary",
            ThMembership::Outside { .. } => "outside",
        }
    }
}

/// Decides `p ∈ TH(G)` through `TH(G) = abl TH(Ḡ)`: `p` is inside exactly
/// when ϑ(Ḡ, p) <= 1.
pub fn th_membership(g: &Graph, p: &Behavior, tols: &Tolerances) -> Result<ThMembership, SdpError> {
    let res = lovasz_theta(&g.complement(), p.as_slice(), tols)?;
    let t = res.value;
    Ok(if t <= 1.0 - tols.mem_tol {
        ThMembership::Inside { theta: t }
    } else if t >= 1.0 + tols.mem_tol {
        ThMembership::Outside {
            theta: t,
            witness: res.behavior,
        }
    } else {
        ThMembership::Boundary { theta: t }
    })
}
