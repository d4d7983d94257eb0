//! Maximal clique / independent set enumeration and the exact weighted
//! independence number.

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::rational::{from_f64_exact, int, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

pub const MAX_MAXIMAL_CLIQUES: usize = 1_000_000;
pub const MAX_INDEPENDENCE_VERTICES: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliqueError {
    #[error("more than {MAX_MAXIMAL_CLIQUES} maximal cliques")]
    TooManyCliques,
    #[error("independence number limited to {MAX_INDEPENDENCE_VERTICES} vertices, got {0}")]
    TooLarge(usize),
    #[error("weight vector has length {got}, graph has {expected} vertices")]
    WeightLength { expected: usize, got: usize },
    #[error("weights must be nonnegative")]
    NegativeWeight,
    #[error("weight {0} is not a finite number")]
    NonFinite(String),
}

/// Sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// 0/1 indicator vector of length `n`.
    pub fn indicator(&self, n: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        for &i in &self.0 {
            v[i] = Rational::one();
        }
        v
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Nonnegative exact weights, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self, CliqueError> {
        if weights.iter().any(Signed::is_negative) {
            return Err(CliqueError::NegativeWeight);
        }
        Ok(WeightVector(weights))
    }

    pub fn ones(n: usize) -> Self {
        WeightVector(vec![Rational::one(); n])
    }

    /// Reads each float exactly as the binary value it holds.
    pub fn from_f64(weights: &[f64]) -> Result<Self, CliqueError> {
        let exact = weights
            .iter()
            .map(|&w| from_f64_exact(w).ok_or_else(|| CliqueError::NonFinite(w.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(exact)
    }

    pub fn from_integers(weights: &[i64]) -> Result<Self, CliqueError> {
        Self::new(weights.iter().map(|&w| int(w)).collect())
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, c: &Rational) -> Result<Self, CliqueError> {
        Self::new(self.0.iter().map(|w| w * c).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(crate::rational::to_f64).collect()
    }

    fn check_len(&self, n: usize) -> Result<(), CliqueError> {
        if self.len() != n {
            return Err(CliqueError::WeightLength {
                expected: n,
                got: self.len(),
            });
        }
        Ok(())
    }
}

pub fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    let m = s.members();
    m.iter()
        .enumerate()
        .all(|(k, &i)| m[k + 1..].iter().all(|&j| g.adjacent(i, j)))
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    let m = s.members();
    m.iter()
        .enumerate()
        .all(|(k, &i)| m[k + 1..].iter().all(|&j| !g.adjacent(i, j)))
}

/// All maximal cliques, lexicographically ordered by sorted members.
///
/// Bron–Kerbosch with Tomita pivoting over bit-set candidate sets.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>, CliqueError> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut current = Vec::new();
    bron_kerbosch(g, &mut current, BitSet::full(n), BitSet::new(n), &mut out)?;
    let mut sets: Vec<VertexSet> = out.into_iter().map(VertexSet::new).collect();
    sets.sort();
    Ok(sets)
}

fn bron_kerbosch(
    g: &Graph,
    current: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    out: &mut Vec<Vec<usize>>,
) -> Result<(), CliqueError> {
    if p.is_empty() {
        if x.is_empty() {
            if out.len() == MAX_MAXIMAL_CLIQUES {
                return Err(CliqueError::TooManyCliques);
            }
            out.push(current.clone());
        }
        return Ok(());
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (p.intersection_len(g.neighbors(u)), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    let branch: Vec<usize> = p.difference(g.neighbors(pivot)).iter().collect();
    for v in branch {
        current.push(v);
        bron_kerbosch(
            g,
            current,
            p.intersection(g.neighbors(v)),
            x.intersection(g.neighbors(v)),
            out,
        )?;
        current.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>, CliqueError> {
    maximal_cliques(&g.complement())
}

/// Exact weighted independence number with a witness set.
///
/// Branch and bound: vertices are branched in descending degree order
/// (lowest index first on ties), including before excluding; the bound is
/// the sum of per-class maximum weights over a greedy clique cover of the
/// remaining candidates.
pub fn independence_number(
    g: &Graph,
    w: &WeightVector,
) -> Result<(Rational, VertexSet), CliqueError> {
    let n = g.vertex_count();
    if n > MAX_INDEPENDENCE_VERTICES {
        return Err(CliqueError::TooLarge(n));
    }
    w.check_len(n)?;

    // Scale to integers so the search compares BigInts only.
    let den = w
        .as_slice()
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let iw: Vec<BigInt> = w
        .as_slice()
        .iter()
        .map(|r| (r * Rational::from_integer(den.clone())).to_integer())
        .collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));

    let mut search = Search {
        g,
        weights: &iw,
        order: &order,
        best: None,
        current: Vec::new(),
    };
    search.expand(BigInt::zero(), BitSet::full(n));
    let (value, witness) = search.best.expect("at least one leaf is visited");
    Ok((
        Rational::new(value, den),
        VertexSet::new(witness),
    ))
}

struct Search<'a> {
    g: &'a Graph,
    weights: &'a [BigInt],
    order: &'a [usize],
    best: Option<(BigInt, Vec<usize>)>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, weight: BigInt, cand: BitSet) {
        if cand.is_empty() {
            if self.best.as_ref().is_none_or(|(b, _)| weight > *b) {
                self.best = Some((weight, self.current.clone()));
            }
            return;
        }
        if let Some((best, _)) = &self.best {
            if &weight + self.cover_bound(&cand) <= *best {
                return;
            }
        }
        let v = *self
            .order
            .iter()
            .find(|&&u| cand.contains(u))
            .expect("cand is nonempty");

        let mut with_v = cand.difference(self.g.neighbors(v));
        with_v.remove(v);
        self.current.push(v);
        self.expand(&weight + &self.weights[v], with_v);
        self.current.pop();

        let mut without_v = cand;
        without_v.remove(v);
        self.expand(weight, without_v);
    }

    /// Greedy partition of `cand` into cliques; an independent set meets each
    /// clique at most once.
    fn cover_bound(&self, cand: &BitSet) -> BigInt {
        let mut classes: Vec<(Vec<usize>, BigInt)> = Vec::new();
        for &v in self.order.iter().filter(|&&u| cand.contains(u)) {
            let wv = &self.weights[v];
            match classes
                .iter_mut()
                .find(|(members, _)| members.iter().all(|&u| self.g.adjacent(u, v)))
            {
                Some((members, max)) => {
                    members.push(v);
                    if wv > max {
                        *max = wv.clone();
                    }
                }
                None => classes.push((vec![v], wv.clone())),
            }
        }
        classes.into_iter().map(|(_, m)| m).sum()
    }
}
