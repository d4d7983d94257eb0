//! Exact rational linear programming.
//!
//! Problems are in the form `maximize c·x subject to A x <= b, x >= 0` and
//! are solved with a dense two-phase simplex tableau under Bland's rule, so
//! the solver cannot cycle and every reported quantity is exact.

use crate::clique::{maximal_cliques, CliqueError, WeightVector};
use crate::graph::Graph;
use crate::rational::{dot, Rational};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub const MAX_LP_ROWS: usize = 10_000;
pub const MAX_LP_VARIABLES: usize = 100;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error("row {row} has {got} coefficients, objective has {expected}")]
    DimensionMismatch {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("problem of {rows} rows x {vars} variables exceeds the desk-scale limits")]
    TooLarge { rows: usize, vars: usize },
    #[error(transparent)]
    Clique(#[from] CliqueError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpProblem {
    pub objective: Vec<Rational>,
    pub rows: Vec<(Vec<Rational>, Rational)>,
}

impl LpProblem {
    pub fn new(objective: Vec<Rational>) -> Self {
        LpProblem {
            objective,
            rows: Vec::new(),
        }
    }

    pub fn constraint(mut self, coeffs: Vec<Rational>, rhs: Rational) -> Self {
        self.rows.push((coeffs, rhs));
        self
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Optimal value; zero unless `status` is `Optimal`.
    pub value: Rational,
    pub primal: Vec<Rational>,
    /// One multiplier per constraint row; empty unless optimal.
    pub dual: Vec<Rational>,
    /// Improving direction `r >= 0` with `A r <= 0` and `c·r > 0` when unbounded.
    pub ray: Option<Vec<Rational>>,
}

impl LpSolution {
    fn without_optimum(status: LpStatus, n: usize) -> Self {
        LpSolution {
            status,
            value: Rational::zero(),
            primal: vec![Rational::zero(); n],
            dual: Vec::new(),
            ray: None,
        }
    }
}

struct Tableau {
    /// rows: coefficients over all columns, last entry is the rhs
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
}

enum Outcome {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.t[r][self.cols]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.t[row][col].clone();
        for v in self.t[row].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.t[row].clone();
        for (r, line) in self.t.iter_mut().enumerate() {
            if r == row || line[col].is_zero() {
                continue;
            }
            let f = line[col].clone();
            for (v, pv) in line.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[row] = col;
    }

    fn reduced_cost(&self, cost: &[Rational], j: usize) -> Rational {
        let z = self
            .t
            .iter()
            .zip(&self.basis)
            .filter(|(line, _)| !line[j].is_zero())
            .fold(Rational::zero(), |acc, (line, &b)| acc + &cost[b] * &line[j]);
        &cost[j] - z
    }

    /// Maximizes `cost` over the current basic feasible solution using
    /// Bland's smallest-index rule.
    fn run(&mut self, cost: &[Rational], allowed: impl Fn(usize) -> bool) -> Outcome {
        loop {
            let entering = (0..self.cols)
                .filter(|&j| allowed(j) && !self.basis.contains(&j))
                .find(|&j| self.reduced_cost(cost, j).is_positive());
            let Some(col) = entering else {
                return Outcome::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.t.len() {
                let a = &self.t[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, col),
                None => return Outcome::Unbounded(col),
            }
        }
    }

    fn basic_values(&self, n: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); n];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rhs(r).clone();
            }
        }
        x
    }
}

pub fn solve_lp(p: &LpProblem) -> Result<LpSolution, LpError> {
    let n = p.num_vars();
    let m = p.rows.len();
    if m > MAX_LP_ROWS || n > MAX_LP_VARIABLES {
        return Err(LpError::TooLarge { rows: m, vars: n });
    }
    for (row, (coeffs, _)) in p.rows.iter().enumerate() {
        if coeffs.len() != n {
            return Err(LpError::DimensionMismatch {
                row,
                expected: n,
                got: coeffs.len(),
            });
        }
    }

    // Columns: originals [0, n), slacks [n, n+m), artificials [n+m, n+m+k).
    let negated: Vec<bool> = p.rows.iter().map(|(_, b)| b.is_negative()).collect();
    let k = negated.iter().filter(|&&x| x).count();
    let cols = n + m + k;
    let mut t = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut next_art = n + m;
    for (i, (coeffs, b)) in p.rows.iter().enumerate() {
        let sign = if negated[i] { -Rational::one() } else { Rational::one() };
        let mut line = vec![Rational::zero(); cols + 1];
        for (j, a) in coeffs.iter().enumerate() {
            line[j] = a * &sign;
        }
        line[n + i] = sign.clone();
        line[cols] = b * &sign;
        if negated[i] {
            line[next_art] = Rational::one();
            basis.push(next_art);
            next_art += 1;
        } else {
            basis.push(n + i);
        }
        t.push(line);
    }
    let mut tab = Tableau { t, basis, cols };

    if k > 0 {
        let mut phase1 = vec![Rational::zero(); cols];
        for c in phase1.iter_mut().skip(n + m) {
            *c = -Rational::one();
        }
        // Phase I is bounded by zero, so it always reaches optimality.
        let _ = tab.run(&phase1, |_| true);
        let infeas: Rational = tab
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= n + m)
            .map(|(r, _)| tab.rhs(r).clone())
            .sum();
        if infeas.is_positive() {
            return Ok(LpSolution::without_optimum(LpStatus::Infeasible, n));
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut r = 0;
        while r < tab.t.len() {
            if tab.basis[r] >= n + m {
                match (0..n + m).find(|&j| !tab.t[r][j].is_zero()) {
                    Some(j) => {
                        tab.pivot(r, j);
                        r += 1;
                    }
                    None => {
                        tab.t.remove(r);
                        tab.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }
    }

    let mut cost = vec![Rational::zero(); cols];
    cost[..n].clone_from_slice(&p.objective);
    match tab.run(&cost, |j| j < n + m) {
        Outcome::Unbounded(col) => {
            let mut ray = vec![Rational::zero(); n];
            if col < n {
                ray[col] = Rational::one();
            }
            for (r, &b) in tab.basis.iter().enumerate() {
                if b < n {
                    ray[b] = -tab.t[r][col].clone();
                }
            }
            let mut sol = LpSolution::without_optimum(LpStatus::Unbounded, n);
            sol.primal = tab.basic_values(n);
            sol.ray = Some(ray);
            Ok(sol)
        }
        Outcome::Optimal => {
            let primal = tab.basic_values(n);
            let value = dot(&p.objective, &primal);
            // y_i = c_B B^{-1} applied to slack column i; sign conventions of
            // negated rows cancel because the slack column was negated too.
            let dual = (0..m).map(|i| &cost[n + i] - tab.reduced_cost(&cost, n + i)).collect();
            Ok(LpSolution {
                status: LpStatus::Optimal,
                value,
                primal,
                dual,
                ray: None,
            })
        }
    }
}

/// α*(G, ω): maximum of `w·x` over `x >= 0` with `Σ_{i∈C} x_i <= 1` for
/// every maximal clique `C`.
pub fn fractional_packing(
    g: &Graph,
    w: &WeightVector,
) -> Result<(Rational, Vec<Rational>), LpError> {
    let n = g.vertex_count();
    if w.len() != n {
        return Err(CliqueError::WeightLength {
            expected: n,
            got: w.len(),
        }
        .into());
    }
    let mut lp = LpProblem::new(w.as_slice().to_vec());
    for c in maximal_cliques(g)? {
        lp = lp.constraint(c.indicator(n), Rational::one());
    }
    let sol = solve_lp(&lp)?;
    debug_assert_eq!(sol.status, LpStatus::Optimal, "clique LP is feasible and bounded");
    Ok((sol.value, sol.primal))
}
