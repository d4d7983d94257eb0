//! Convex corners (down-closed convex sets of nonnegative vectors) in finite
//! representations, and the anti-blocking operation between them.
//!
//! A V-representation `{g_k}` denotes the down-closure of `conv({g_k} ∪ {0})`;
//! an H-representation `{a_j}` denotes `{x >= 0 : a_j·x <= 1 for all j}`.
//! The anti-blocker of one is the other with the same vector list, so `abl`
//! is a representation swap and never requires facet enumeration.

use crate::clique::{maximal_cliques, maximal_independent_sets, CliqueError, WeightVector};
use crate::graph::Graph;
use crate::linprog::{solve_lp, LpError, LpProblem, LpStatus};
use crate::rational::{dot, format_rational, from_f64_exact, int, is_nonnegative, parse_rational, Rational};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeSet;
use thiserror::Error;

/// Upper bound on linear systems tried when enumerating H-polytope vertices.
pub const MAX_VERTEX_SYSTEMS: usize = 500_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CornerError {
    #[error("vector has length {got}, corner dimension is {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("corner vectors and query points must be nonnegative")]
    Negative,
    #[error("support function is unbounded in this direction")]
    Unbounded,
    #[error("vertex enumeration would exceed {MAX_VERTEX_SYSTEMS} linear systems")]
    TooLarge,
    #[error("invalid corner JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error(transparent)]
    Clique(#[from] CliqueError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BehaviorError {
    #[error("probability {value} at event {index} is outside [0, 1]")]
    OutOfRange { index: usize, value: f64 },
}

/// Probability assignment to the events (vertices) of an experiment.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
#[serde(transparent)]
pub struct Behavior(Vec<f64>);

impl Behavior {
    pub fn new(probabilities: Vec<f64>) -> Result<Self, BehaviorError> {
        for (index, &value) in probabilities.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(BehaviorError::OutOfRange { index, value });
            }
        }
        Ok(Behavior(probabilities))
    }

    pub fn uniform(n: usize, value: f64) -> Result<Self, BehaviorError> {
        Self::new(vec![value; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exact binary reading of every entry.
    pub fn to_exact(&self) -> Vec<Rational> {
        self.0
            .iter()
            .map(|&p| from_f64_exact(p).expect("behaviour entries are finite"))
            .collect()
    }

    pub fn dot(&self, other: &Behavior) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    /// Generators of the down-closed hull.
    V(Vec<Vec<Rational>>),
    /// Normals `a` of the inequalities `a·x <= 1`.
    H(Vec<Vec<Rational>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexCorner {
    dim: usize,
    rep: Representation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Inside,
    /// `certificate·p > 1` while `certificate·x <= 1` on the whole corner.
    Outside { certificate: Vec<Rational> },
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside)
    }
}

impl ConvexCorner {
    pub fn new(dim: usize, rep: Representation) -> Result<Self, CornerError> {
        let vectors = match &rep {
            Representation::V(v) | Representation::H(v) => v,
        };
        for v in vectors {
            if v.len() != dim {
                return Err(CornerError::Dimension {
                    expected: dim,
                    got: v.len(),
                });
            }
            if !is_nonnegative(v) {
                return Err(CornerError::Negative);
            }
        }
        Ok(ConvexCorner { dim, rep })
    }

    pub fn from_generators(dim: usize, generators: Vec<Vec<Rational>>) -> Result<Self, CornerError> {
        Self::new(dim, Representation::V(generators))
    }

    pub fn from_normals(dim: usize, normals: Vec<Vec<Rational>>) -> Result<Self, CornerError> {
        Self::new(dim, Representation::H(normals))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        match &self.rep {
            Representation::V(v) | Representation::H(v) => v,
        }
    }

    pub fn is_vrep(&self) -> bool {
        matches!(self.rep, Representation::V(_))
    }

    fn check_point(&self, p: &[Rational]) -> Result<(), CornerError> {
        if p.len() != self.dim {
            return Err(CornerError::Dimension {
                expected: self.dim,
                got: p.len(),
            });
        }
        if !is_nonnegative(p) {
            return Err(CornerError::Negative);
        }
        Ok(())
    }

    /// `abl C = {b >= 0 : a·b <= 1 for all a in C}`.
    pub fn antiblocker(&self) -> ConvexCorner {
        let rep = match &self.rep {
            Representation::V(g) => Representation::H(g.clone()),
            Representation::H(a) => Representation::V(a.clone()),
        };
        ConvexCorner { dim: self.dim, rep }
    }

    /// Exact membership test with a separating certificate on failure.
    pub fn membership(&self, p: &[Rational]) -> Result<Membership, CornerError> {
        self.check_point(p)?;
        match &self.rep {
            Representation::H(normals) => Ok(normals
                .iter()
                .find(|a| dot(a, p) > Rational::one())
                .map_or(Membership::Inside, |a| Membership::Outside {
                    certificate: a.clone(),
                })),
            Representation::V(gens) => {
                // p is in the down-closed hull iff max{h·p : h in abl C} <= 1,
                // the LP dual of the convex-combination feasibility problem.
                let mut lp = LpProblem::new(p.to_vec());
                for g in gens {
                    lp = lp.constraint(g.clone(), Rational::one());
                }
                let sol = solve_lp(&lp)?;
                match sol.status {
                    LpStatus::Optimal if sol.value <= Rational::one() => Ok(Membership::Inside),
                    LpStatus::Optimal => Ok(Membership::Outside {
                        certificate: sol.primal,
                    }),
                    LpStatus::Unbounded => {
                        let ray = sol.ray.expect("unbounded LP carries a ray");
                        let scale = int(2) / dot(&ray, p);
                        Ok(Membership::Outside {
                            certificate: ray.iter().map(|r| r * &scale).collect(),
                        })
                    }
                    LpStatus::Infeasible => unreachable!("h = 0 is always feasible"),
                }
            }
        }
    }

    pub fn contains(&self, p: &[Rational]) -> Result<bool, CornerError> {
        Ok(self.membership(p)?.is_inside())
    }

    /// `max{w·x : x in C}`.
    pub fn support(&self, w: &[Rational]) -> Result<Rational, CornerError> {
        self.check_point(w)?;
        match &self.rep {
            Representation::V(gens) => Ok(gens
                .iter()
                .map(|g| dot(g, w))
                .fold(Rational::zero(), |a, b| if b > a { b } else { a })),
            Representation::H(normals) => {
                let mut lp = LpProblem::new(w.to_vec());
                for a in normals {
                    lp = lp.constraint(a.clone(), Rational::one());
                }
                let sol = solve_lp(&lp)?;
                match sol.status {
                    LpStatus::Optimal => Ok(sol.value),
                    _ => Err(CornerError::Unbounded),
                }
            }
        }
    }

    pub fn support_weights(&self, w: &WeightVector) -> Result<Rational, CornerError> {
        self.support(w.as_slice())
    }

    /// Exact inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &ConvexCorner) -> Result<bool, CornerError> {
        if self.dim != other.dim {
            return Err(CornerError::Dimension {
                expected: other.dim,
                got: self.dim,
            });
        }
        match (&self.rep, &other.rep) {
            (Representation::V(gens), _) => {
                for g in gens {
                    if !other.contains(g)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            (Representation::H(_), Representation::H(normals)) => {
                for a in normals {
                    match self.support(a) {
                        Ok(s) if s <= Rational::one() => {}
                        Ok(_) | Err(CornerError::Unbounded) => return Ok(false),
                        Err(e) => return Err(e),
                    }
                }
                Ok(true)
            }
            (Representation::H(normals), Representation::V(gens)) => {
                // Either enumerate the vertices of self, or use
                // self ⊆ other <=> abl other ⊆ abl self and enumerate the
                // vertices of abl other; pick the cheaper one.
                let direct = vertex_system_count(self.dim, normals.len());
                let dual = vertex_system_count(self.dim, gens.len());
                if direct <= dual {
                    let Some(vertices) = h_polytope_vertices(self.dim, normals)? else {
                        return Ok(false);
                    };
                    for v in &vertices {
                        if !other.contains(v)? {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                } else {
                    let abl_self = self.antiblocker();
                    let Some(vertices) = h_polytope_vertices(self.dim, gens)? else {
                        return Ok(false);
                    };
                    for v in &vertices {
                        if !abl_self.contains(v)? {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                }
            }
        }
    }

    pub fn equal(&self, other: &ConvexCorner) -> Result<bool, CornerError> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Corner with coordinate `i` moved to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> ConvexCorner {
        let move_vec = |v: &Vec<Rational>| {
            let mut out = vec![Rational::zero(); v.len()];
            for (i, x) in v.iter().enumerate() {
                out[perm[i]] = x.clone();
            }
            out
        };
        let rep = match &self.rep {
            Representation::V(g) => Representation::V(g.iter().map(move_vec).collect()),
            Representation::H(a) => Representation::H(a.iter().map(move_vec).collect()),
        };
        ConvexCorner { dim: self.dim, rep }
    }

    pub fn to_json(&self) -> Value {
        let enc = |vs: &[Vec<Rational>]| -> Vec<Vec<String>> {
            vs.iter()
                .map(|v| v.iter().map(format_rational).collect())
                .collect()
        };
        match &self.rep {
            Representation::V(g) => json!({ "dim": self.dim, "vrep": enc(g) }),
            Representation::H(a) => json!({ "dim": self.dim, "hrep": enc(a) }),
        }
    }

    pub fn from_json(value: &Value) -> Result<Self, CornerError> {
        let bad = |m: &str| CornerError::Json(m.to_string());
        let dim = value
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing integer 'dim'"))? as usize;
        let decode = |v: &Value| -> Result<Vec<Vec<Rational>>, CornerError> {
            v.as_array()
                .ok_or_else(|| bad("vector list must be an array"))?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| bad("vector must be an array"))?
                        .iter()
                        .map(|x| {
                            x.as_str()
                                .and_then(parse_rational)
                                .ok_or_else(|| bad("entries must be \"p/q\" strings"))
                        })
                        .collect()
                })
                .collect()
        };
        match (value.get("vrep"), value.get("hrep")) {
            (Some(v), None) => Self::from_generators(dim, decode(v)?),
            (None, Some(h)) => Self::from_normals(dim, decode(h)?),
            _ => Err(bad("exactly one of 'vrep' and 'hrep' is required")),
        }
    }
}

/// NC(G) = STAB(G): down-closed hull of the maximal independent set indicators.
pub fn stab(g: &Graph) -> Result<ConvexCorner, CornerError> {
    let n = g.vertex_count();
    let gens = maximal_independent_sets(g)?
        .iter()
        .map(|s| s.indicator(n))
        .collect();
    ConvexCorner::from_generators(n, gens)
}

/// E₁(G) = QSTAB(G): clique inequalities over all maximal cliques.
pub fn qstab(g: &Graph) -> Result<ConvexCorner, CornerError> {
    let n = g.vertex_count();
    let normals = maximal_cliques(g)?.iter().map(|c| c.indicator(n)).collect();
    ConvexCorner::from_normals(n, normals)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn vertex_system_count(dim: usize, rows: usize) -> usize {
    (1..=dim)
        .map(|k| binomial(dim, k).saturating_mul(binomial(rows, k)))
        .fold(0usize, usize::saturating_add)
}

/// Vertices of `{x >= 0 : a·x <= 1}`, or `None` when the set is unbounded.
///
/// A vertex with support `S` solves `A[R, S] x_S = 1` for some nonsingular
/// row subset `R` with `|R| = |S|`; every such system is tried.
pub fn h_polytope_vertices(
    dim: usize,
    normals: &[Vec<Rational>],
) -> Result<Option<Vec<Vec<Rational>>>, CornerError> {
    if (0..dim).any(|j| normals.iter().all(|a| a[j].is_zero())) {
        return Ok(None);
    }
    if vertex_system_count(dim, normals.len()) > MAX_VERTEX_SYSTEMS {
        return Err(CornerError::TooLarge);
    }
    let mut found: BTreeSet<Vec<Rational>> = BTreeSet::new();
    found.insert(vec![Rational::zero(); dim]);
    for k in 1..=dim {
        for support in combinations(dim, k) {
            let useful: Vec<usize> = (0..normals.len())
                .filter(|&r| support.iter().any(|&j| !normals[r][j].is_zero()))
                .collect();
            for rows in combinations(useful.len(), k) {
                let mat: Vec<Vec<Rational>> = rows
                    .iter()
                    .map(|&r| support.iter().map(|&j| normals[useful[r]][j].clone()).collect())
                    .collect();
                let Some(xs) = solve_square(mat, vec![Rational::one(); k]) else {
                    continue;
                };
                if xs.iter().any(Signed::is_negative) {
                    continue;
                }
                let mut x = vec![Rational::zero(); dim];
                for (&j, v) in support.iter().zip(xs) {
                    x[j] = v;
                }
                if normals.iter().all(|a| dot(a, &x) <= Rational::one()) {
                    found.insert(x);
                }
            }
        }
    }
    Ok(Some(found.into_iter().collect()))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Exact Gaussian elimination; `None` if singular.
fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let k = b.len();
    for col in 0..k {
        let piv = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for c in col..k {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..k).map(|i| &b[i] / &a[i][i]).collect())
}
