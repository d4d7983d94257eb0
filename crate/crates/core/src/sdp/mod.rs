//! Dense semidefinite programming and the theta-body machinery built on it.
//!
//! [`solve_sdp`] is an infeasible-start primal–dual interior-point method
//! with Nesterov–Todd scaling and Mehrotra predictor–corrector steps. All
//! linear algebra is dense; problem sizes stay small (dimension <= 64).

mod realization;
mod theta;

pub use realization::{extract_realization, realization_from_gram, QuantumRealization};
pub use theta::{lovasz_theta, th_membership, theta_problem, ThMembership, ThetaResult};

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::Serialize;
use thiserror::Error;

pub const MAX_SDP_DIMENSION: usize = 64;
pub const MAX_SDP_CONSTRAINTS: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Relative duality gap at termination.
    pub gap_tol: f64,
    /// Relative primal and dual residual at termination.
    pub feas_tol: f64,
    /// Half-width of the undecided band around 1 in theta-body membership.
    pub mem_tol: f64,
    /// Largest allowed overlap of event vectors joined by an edge.
    pub orth_tol: f64,
    /// Eigenvalues below this (relative to the largest) are treated as zero.
    pub eig_tol: f64,
    /// Largest allowed error between realized and target probabilities.
    pub realization_tol: f64,
    /// Events with probability at or below this get a placeholder vector.
    pub degenerate_tol: f64,
    pub max_iterations: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            gap_tol: 1e-9,
            feas_tol: 1e-9,
            mem_tol: 1e-5,
            orth_tol: 1e-5,
            eig_tol: 1e-9,
            realization_tol: 1e-5,
            degenerate_tol: 1e-6,
            max_iterations: 200,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SdpError {
    #[error("matrix dimension {0} exceeds {MAX_SDP_DIMENSION}")]
    DimensionTooLarge(usize),
    #[error("{0} constraints exceed {MAX_SDP_CONSTRAINTS}")]
    TooManyConstraints(usize),
    #[error("matrix entry ({0}, {1}) outside dimension {2}")]
    EntryOutOfRange(usize, usize, usize),
    #[error("solver finished with status {0:?}")]
    NotOptimal(SdpStatus),
    #[error("Schur complement system is singular; constraints are linearly dependent")]
    Singular,
    #[error("weight or behavior has length {got}, graph has {expected} vertices")]
    Length { expected: usize, got: usize },
    #[error("weights must be finite and nonnegative")]
    InvalidWeights,
    #[error("behavior is not quantum: theta of the complement is {0}")]
    NotQuantum(f64),
    #[error("realization check failed: {0}")]
    RealizationFailed(String),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

/// Symmetric matrix given by its upper-triangle entries; `(i, j, v)` with
/// `i < j` sets both `(i, j)` and `(j, i)` to `v`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SymMatrix {
    entries: Vec<(usize, usize, f64)>,
}

impl SymMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entry(mut self, i: usize, j: usize, v: f64) -> Self {
        self.push(i, j, v);
        self
    }

    pub fn push(&mut self, i: usize, j: usize, v: f64) {
        let (a, b) = (i.min(j), i.max(j));
        self.entries.push((a, b, v));
    }

    pub fn identity(n: usize) -> Self {
        SymMatrix {
            entries: (0..n).map(|i| (i, i, 1.0)).collect(),
        }
    }

    pub fn entries(&self) -> &[(usize, usize, f64)] {
        &self.entries
    }

    /// `<A, X> = tr(A X)`.
    pub fn inner(&self, x: &DMatrix<f64>) -> f64 {
        self.entries
            .iter()
            .map(|&(i, j, v)| if i == j { v * x[(i, i)] } else { 2.0 * v * x[(i, j)] })
            .sum()
    }

    pub fn to_dense(&self, n: usize) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(n, n);
        self.add_scaled_to(&mut m, 1.0);
        m
    }

    fn add_scaled_to(&self, m: &mut DMatrix<f64>, s: f64) {
        for &(i, j, v) in &self.entries {
            m[(i, j)] += s * v;
            if i != j {
                m[(j, i)] += s * v;
            }
        }
    }

    /// `W A W` for symmetric `W`.
    fn congruence(&self, w: &DMatrix<f64>) -> DMatrix<f64> {
        let n = w.nrows();
        let mut out = DMatrix::zeros(n, n);
        for &(i, j, v) in &self.entries {
            let ci = w.column(i);
            let cj = w.column(j);
            if i == j {
                out.ger(v, &ci, &ci, 1.0);
            } else {
                out.ger(v, &ci, &cj, 1.0);
                out.ger(v, &cj, &ci, 1.0);
            }
        }
        out
    }

    fn frobenius(&self, n: usize) -> f64 {
        self.to_dense(n).norm()
    }
}

/// `maximize <C, X> subject to <A_k, X> = b_k, X ⪰ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SdpProblem {
    pub dim: usize,
    pub objective: SymMatrix,
    pub constraints: Vec<(SymMatrix, f64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SdpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    MaxIterations,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SdpSolution {
    pub status: SdpStatus,
    /// Primal objective `<C, X>` of the returned iterate.
    pub value: f64,
    pub primal_matrix: DMatrix<f64>,
    pub dual_vector: Vec<f64>,
    /// `|primal − dual| / (1 + |primal| + |dual|)`.
    pub duality_gap: f64,
    /// Largest absolute violation of `<A_k, X> = b_k`.
    pub max_constraint_residual: f64,
    pub min_eigenvalue: f64,
    pub iterations: usize,
}

impl SdpSolution {
    pub fn primal_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<f64>> = (0..self.primal_matrix.nrows())
            .map(|i| self.primal_matrix.row(i).iter().copied().collect())
            .collect();
        serde_json::json!(rows)
    }
}

fn sym(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

fn min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    SymmetricEigen::new(sym(m)).eigenvalues.min()
}

fn max_eigenvalue(m: &DMatrix<f64>) -> f64 {
    SymmetricEigen::new(sym(m)).eigenvalues.max()
}

struct Model<'a> {
    n: usize,
    /// objective of the internal minimization form (negated input)
    c: DMatrix<f64>,
    a: Vec<&'a SymMatrix>,
    b: DVector<f64>,
}

impl Model<'_> {
    fn apply(&self, x: &DMatrix<f64>) -> DVector<f64> {
        DVector::from_iterator(self.a.len(), self.a.iter().map(|a| a.inner(x)))
    }

    fn adjoint(&self, y: &DVector<f64>) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.n, self.n);
        for (a, &yk) in self.a.iter().zip(y.iter()) {
            a.add_scaled_to(&mut m, yk);
        }
        m
    }
}

/// NT scaling point: `W = G Gᵀ` with `Gᵀ Z G = G⁻¹ X G⁻ᵀ = diag(λ)`.
struct Scaling {
    g: DMatrix<f64>,
    g_inv: DMatrix<f64>,
    w: DMatrix<f64>,
    lambda: DVector<f64>,
}

fn nt_scaling(x: &DMatrix<f64>, z: &DMatrix<f64>) -> Option<Scaling> {
    let l = x.clone().cholesky()?.l();
    let r = z.clone().cholesky()?.l();
    let svd = (r.transpose() * &l).svd(true, true);
    let v = svd.v_t?.transpose();
    let lambda = svd.singular_values;
    if lambda.iter().any(|&s| s <= 0.0 || !s.is_finite()) {
        return None;
    }
    let inv_sqrt = DMatrix::from_diagonal(&lambda.map(|s| 1.0 / s.sqrt()));
    let sqrt = DMatrix::from_diagonal(&lambda.map(f64::sqrt));
    let g = &l * &v * inv_sqrt;
    let l_inv = l.solve_lower_triangular(&DMatrix::identity(x.nrows(), x.nrows()))?;
    let g_inv = sqrt * v.transpose() * l_inv;
    let w = &g * g.transpose();
    Some(Scaling { g, g_inv, w, lambda })
}

/// Solves `diag(λ)∘S = R` (Jordan product) in the scaled space.
fn lyapunov(lambda: &DVector<f64>, r: &DMatrix<f64>) -> DMatrix<f64> {
    DMatrix::from_fn(r.nrows(), r.ncols(), |i, j| 2.0 * r[(i, j)] / (lambda[i] + lambda[j]))
}

/// Largest `α <= 1` keeping `diag(λ) + α D ⪰ 0`, damped by `gamma`.
fn step_length(lambda: &DVector<f64>, d: &DMatrix<f64>, gamma: f64) -> f64 {
    let s = lambda.map(|l| 1.0 / l.sqrt());
    let scaled = DMatrix::from_fn(d.nrows(), d.ncols(), |i, j| s[i] * d[(i, j)] * s[j]);
    let m = min_eigenvalue(&scaled);
    if m >= 0.0 {
        1.0
    } else {
        (-gamma / m).min(1.0)
    }
}

struct Direction {
    dx: DMatrix<f64>,
    dy: DVector<f64>,
    dz: DMatrix<f64>,
    dx_s: DMatrix<f64>,
    dz_s: DMatrix<f64>,
}

pub fn solve_sdp(p: &SdpProblem, tols: &Tolerances) -> Result<SdpSolution, SdpError> {
    let n = p.dim;
    let m = p.constraints.len();
    if n > MAX_SDP_DIMENSION {
        return Err(SdpError::DimensionTooLarge(n));
    }
    if m > MAX_SDP_CONSTRAINTS {
        return Err(SdpError::TooManyConstraints(m));
    }
    for mat in std::iter::once(&p.objective).chain(p.constraints.iter().map(|(a, _)| a)) {
        if let Some(&(i, j, _)) = mat.entries().iter().find(|&&(i, j, _)| i >= n || j >= n) {
            return Err(SdpError::EntryOutOfRange(i, j, n));
        }
    }
    let model = Model {
        n,
        c: -p.objective.to_dense(n),
        a: p.constraints.iter().map(|(a, _)| a).collect(),
        b: DVector::from_iterator(m, p.constraints.iter().map(|&(_, b)| b)),
    };

    let norm_c = model.c.norm();
    let norm_b = model.b.norm();
    let nf = n as f64;
    let a_norms: Vec<f64> = p.constraints.iter().map(|(a, _)| a.frobenius(n)).collect();
    let xi = p
        .constraints
        .iter()
        .zip(&a_norms)
        .map(|(&(_, b), an)| nf * (1.0 + b.abs()) / (1.0 + an))
        .fold(10f64.max(nf.sqrt()), f64::max);
    let eta = a_norms
        .iter()
        .copied()
        .fold(norm_c, f64::max)
        .max(10.0)
        .max(nf.sqrt());
    let mut x = DMatrix::identity(n, n) * xi;
    let mut z = DMatrix::identity(n, n) * eta;
    let mut y = DVector::zeros(m);

    let mut status = SdpStatus::MaxIterations;
    let mut iterations = 0;
    loop {
        let rp = &model.b - model.apply(&x);
        let rd = &model.c - &z - model.adjoint(&y);
        let pobj = model.c.dot(&x);
        let dobj = model.b.dot(&y);
        let mu = x.dot(&z) / nf;
        let denom = 1.0 + pobj.abs() + dobj.abs();
        let gap = ((pobj - dobj).abs()).max(x.dot(&z)) / denom;
        let pinf = rp.norm() / (1.0 + norm_b);
        let dinf = rd.norm() / (1.0 + norm_c);
        if gap <= tols.gap_tol && pinf <= tols.feas_tol && dinf <= tols.feas_tol {
            status = SdpStatus::Optimal;
            break;
        }
        // Farkas certificates for infeasibility of either side.
        if m > 0 && dobj > 1e-8 * (1.0 + y.norm()) && max_eigenvalue(&model.adjoint(&y)) <= 0.0 {
            status = SdpStatus::Infeasible;
            break;
        }
        let tr = x.trace();
        if tr > 1e8 * (1.0 + norm_b) {
            let xh = &x / tr;
            if model.apply(&xh).norm() <= 1e-8 && model.c.dot(&xh) < -1e-8 {
                status = SdpStatus::Unbounded;
                break;
            }
        }
        if iterations >= tols.max_iterations {
            break;
        }
        iterations += 1;

        let Some(sc) = nt_scaling(&x, &z) else {
            break;
        };
        let schur = DMatrix::from_fn(m, m, |_, _| 0.0);
        let mut schur = schur;
        for l in 0..m {
            let wal = model.a[l].congruence(&sc.w);
            for k in l..m {
                let v = model.a[k].inner(&wal);
                schur[(k, l)] = v;
                schur[(l, k)] = v;
            }
        }
        let chol = schur.clone().cholesky();
        let lu = if chol.is_none() { Some(schur.clone().lu()) } else { None };
        let solve = |rhs: &DVector<f64>| -> Option<DVector<f64>> {
            match (&chol, &lu) {
                (Some(c), _) => Some(c.solve(rhs)),
                (None, Some(f)) => f.solve(rhs),
                _ => None,
            }
        };
        let wrdw = &sc.w * &rd * &sc.w;
        let a_wrdw = model.apply(&wrdw);
        let direction = |rc: &DMatrix<f64>| -> Option<Direction> {
            let s = lyapunov(&sc.lambda, rc);
            let h = &sc.g * &s * sc.g.transpose();
            let rhs = &rp - model.apply(&h) + &a_wrdw;
            let dy = solve(&rhs)?;
            if dy.iter().any(|v| !v.is_finite()) {
                return None;
            }
            let dz = sym(&(&rd - model.adjoint(&dy)));
            let dx = sym(&(h - &sc.w * &dz * &sc.w));
            let dx_s = sym(&(&sc.g_inv * &dx * sc.g_inv.transpose()));
            let dz_s = sym(&(sc.g.transpose() * &dz * &sc.g));
            Some(Direction { dx, dy, dz, dx_s, dz_s })
        };

        let lam2 = DMatrix::from_diagonal(&sc.lambda.map(|l| l * l));
        let Some(aff) = direction(&(-&lam2)) else {
            if schur.clone().cholesky().is_none() && lu.as_ref().is_some_and(|f| !f.is_invertible()) {
                return Err(SdpError::Singular);
            }
            break;
        };
        let ap = step_length(&sc.lambda, &aff.dx_s, 1.0);
        let ad = step_length(&sc.lambda, &aff.dz_s, 1.0);
        let lam = DMatrix::from_diagonal(&sc.lambda);
        let mu_aff = (&lam + &aff.dx_s * ap).dot(&(&lam + &aff.dz_s * ad)) / nf;
        let sigma = (mu_aff / mu).clamp(0.0, 1.0).powi(3);
        let cross = sym(&(&aff.dx_s * &aff.dz_s));
        let rc = DMatrix::identity(n, n) * (sigma * mu) - &lam2 - cross;
        let Some(dir) = direction(&rc) else {
            break;
        };
        let gamma = 0.9 + 0.09 * ap.min(ad);
        let ap = step_length(&sc.lambda, &dir.dx_s, gamma);
        let ad = step_length(&sc.lambda, &dir.dz_s, gamma);
        x = sym(&(&x + &dir.dx * ap));
        y += &dir.dy * ad;
        z = sym(&(&z + &dir.dz * ad));
    }

    let residual = (&model.b - model.apply(&x)).amax();
    let pobj = model.c.dot(&x);
    let dobj = model.b.dot(&y);
    Ok(SdpSolution {
        status,
        value: -pobj,
        min_eigenvalue: min_eigenvalue(&x),
        primal_matrix: x,
        dual_vector: y.iter().copied().collect(),
        duality_gap: (pobj - dobj).abs() / (1.0 + pobj.abs() + dobj.abs()),
        max_constraint_residual: if m > 0 { residual } else { 0.0 },
        iterations,
    })
}
