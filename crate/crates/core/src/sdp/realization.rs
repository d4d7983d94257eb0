use super::{solve_sdp, th_membership, SdpError, SdpProblem, SdpStatus, SymMatrix, ThMembership, Tolerances};
use crate::corner::Behavior;
use crate::graph::Graph;
use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

/// Pure state and rank-one projectors reproducing a behavior:
/// `p_i = <ψ, v_i>²` with `<v_i, v_j> = 0` whenever `i ~ j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuantumRealization {
    pub state: Vec<f64>,
    pub event_vectors: Vec<Vec<f64>>,
    pub realized_behavior: Vec<f64>,
    /// Events whose target probability was at most `degenerate_tol`; they
    /// carry a fresh basis vector orthogonal to everything else.
    pub degenerate: Vec<usize>,
    pub max_edge_overlap: f64,
    pub max_behavior_error: f64,
    pub max_norm_error: f64,
}

impl QuantumRealization {
    pub fn dimension(&self) -> usize {
        self.state.len()
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalized(v: Vec<f64>) -> Vec<f64> {
    let n = dot(&v, &v).sqrt();
    v.into_iter().map(|x| x / n).collect()
}

/// Builds a realization from a bordered Gram matrix `M` of dimension `n + 1`
/// whose diagonal approximates `target`.
pub fn realization_from_gram(
    g: &Graph,
    target: &Behavior,
    gram: &DMatrix<f64>,
    tols: &Tolerances,
) -> Result<QuantumRealization, SdpError> {
    let n = g.vertex_count();
    if target.len() != n || gram.nrows() != n + 1 {
        return Err(SdpError::Length {
            expected: n,
            got: target.len(),
        });
    }
    let p = target.as_slice();
    let degenerate: Vec<usize> = (0..n).filter(|&i| p[i] <= tols.degenerate_tol).collect();
    let kept: Vec<usize> = (0..n).filter(|&i| p[i] > tols.degenerate_tol).collect();

    // Gram factorization of the submatrix on {0} ∪ kept.
    let idx: Vec<usize> = std::iter::once(0).chain(kept.iter().map(|&i| i + 1)).collect();
    let sub = DMatrix::from_fn(idx.len(), idx.len(), |a, b| {
        0.5 * (gram[(idx[a], idx[b])] + gram[(idx[b], idx[a])])
    });
    let eig = SymmetricEigen::new(sub);
    let top = eig.eigenvalues.max().max(1.0);
    let factors: Vec<(f64, usize)> = eig
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, &l)| l > tols.eig_tol * top)
        .map(|(k, &l)| (l.sqrt(), k))
        .collect();
    let rank = factors.len();
    let dim = rank + degenerate.len();
    let column = |a: usize| -> Vec<f64> {
        let mut v: Vec<f64> = factors
            .iter()
            .map(|&(s, k)| s * eig.eigenvectors[(a, k)])
            .collect();
        v.resize(dim, 0.0);
        v
    };

    let state = normalized(column(0));
    let mut event_vectors = vec![Vec::new(); n];
    for (a, &i) in kept.iter().enumerate() {
        event_vectors[i] = normalized(column(a + 1));
    }
    for (k, &i) in degenerate.iter().enumerate() {
        let mut e = vec![0.0; dim];
        e[rank + k] = 1.0;
        event_vectors[i] = e;
    }

    let realized: Vec<f64> = event_vectors.iter().map(|v| dot(&state, v).powi(2)).collect();
    let max_behavior_error = realized
        .iter()
        .zip(p)
        .map(|(r, t)| (r - t).abs())
        .fold(0.0, f64::max);
    let max_edge_overlap = g
        .edges()
        .iter()
        .map(|&(i, j)| dot(&event_vectors[i], &event_vectors[j]).abs())
        .fold(0.0, f64::max);
    let max_norm_error = std::iter::once(&state)
        .chain(event_vectors.iter())
        .map(|v| (dot(v, v).sqrt() - 1.0).abs())
        .fold(0.0, f64::max);

    let real = QuantumRealization {
        state,
        event_vectors,
        realized_behavior: realized,
        degenerate,
        max_edge_overlap,
        max_behavior_error,
        max_norm_error,
    };
    if max_norm_error > tols.eig_tol.max(1e-9) * 1e3
        || max_edge_overlap > tols.orth_tol
        || max_behavior_error > tols.realization_tol
    {
        return Err(SdpError::RealizationFailed(format!(
            "edge overlap {max_edge_overlap:.3e}, behavior error {max_behavior_error:.3e}, norm error {max_norm_error:.3e}"
        )));
    }
    Ok(real)
}

/// Finds a state and projectors realizing a quantum behavior `p`.
///
/// Vertices with `p_i <= degenerate_tol` are removed, the bordered Gram
/// matrix with diagonal and border fixed to `p` is found by a feasibility
/// SDP, and its eigendecomposition gives the vectors.
pub fn extract_realization(
    g: &Graph,
    p: &Behavior,
    tols: &Tolerances,
) -> Result<QuantumRealization, SdpError> {
    let n = g.vertex_count();
    if p.len() != n {
        return Err(SdpError::Length {
            expected: n,
            got: p.len(),
        });
    }
    if let ThMembership::Outside { theta, .. } = th_membership(g, p, tols)? {
        return Err(SdpError::NotQuantum(theta));
    }
    let probs = p.as_slice();
    let kept: Vec<usize> = (0..n).filter(|&i| probs[i] > tols.degenerate_tol).collect();
    let sub = g.induced(&kept);
    let k = kept.len();

    let mut constraints = vec![(SymMatrix::new().entry(0, 0, 1.0), 1.0)];
    for (a, &i) in kept.iter().enumerate() {
        constraints.push((SymMatrix::new().entry(0, a + 1, 0.5), probs[i]));
        constraints.push((SymMatrix::new().entry(a + 1, a + 1, 1.0), probs[i]));
    }
    for (a, b) in sub.edges() {
        constraints.push((SymMatrix::new().entry(a + 1, b + 1, 0.5), 0.0));
    }
    let sol = solve_sdp(
        &SdpProblem {
            dim: k + 1,
            objective: SymMatrix::new(),
            constraints,
        },
        tols,
    )?;
    if sol.status == SdpStatus::Infeasible {
        return Err(SdpError::NotQuantum(f64::NAN));
    }
    if sol.status != SdpStatus::Optimal && sol.max_constraint_residual > tols.realization_tol * 1e-2 {
        return Err(SdpError::NotOptimal(sol.status));
    }

    // Re-embed into the full (n + 1)-index Gram layout.
    let mut gram = DMatrix::zeros(n + 1, n + 1);
    let pos: Vec<usize> = std::iter::once(0).chain(kept.iter().map(|&i| i + 1)).collect();
    for (a, &pa) in pos.iter().enumerate() {
        for (b, &pb) in pos.iter().enumerate() {
            gram[(pa, pb)] = sol.primal_matrix[(a, b)];
        }
    }
    realization_from_gram(g, p, &gram, tols)
}
