//! Seeded random graph families used by the test corpus.

use super::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi G(n, p).
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n).expect("n >= 1");
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// Random bipartite graph: vertices split into two random sides, each
/// cross pair joined with probability `p`.
pub fn random_bipartite(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut g = Graph::empty(n).expect("n >= 1");
    for j in 1..n {
        for i in 0..j {
            if side[i] != side[j] && rng.gen_bool(p) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// Random chordal graph. Each new vertex is joined to a clique grown around
/// a random earlier vertex, so the reverse insertion order is a perfect
/// elimination ordering.
pub fn random_chordal(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n).expect("n >= 1");
    for v in 1..n {
        if rng.gen_bool(0.15) {
            continue;
        }
        let anchor = rng.gen_range(0..v);
        let mut clique = vec![anchor];
        let mut pool: Vec<usize> = g.neighbors(anchor).iter().filter(|&u| u < v).collect();
        pool.shuffle(&mut rng);
        for u in pool {
            if rng.gen_bool(0.6) && clique.iter().all(|&c| g.adjacent(c, u)) {
                clique.push(u);
            }
        }
        for u in clique {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Later neighbours of each vertex must form a clique when vertices are
    /// eliminated from highest index down.
    fn has_perfect_elimination_order(g: &Graph) -> bool {
        (0..g.vertex_count()).all(|v| {
            let earlier: Vec<usize> = g.neighbors(v).iter().filter(|&u| u < v).collect();
            earlier
                .iter()
                .all(|&a| earlier.iter().all(|&b| a == b || g.adjacent(a, b)))
        })
    }

    #[test]
    fn chordal_generator_produces_chordal_graphs() {
        for seed in 0..40 {
            let g = random_chordal(8, seed);
            assert!(has_perfect_elimination_order(&g), "seed {seed}");
        }
    }

    #[test]
    fn bipartite_generator_has_no_odd_cycles() {
        for seed in 0..40 {
            let g = random_bipartite(8, 0.6, seed);
            let mut colour = [None; 8];
            for s in 0..8 {
                if colour[s].is_some() {
                    continue;
                }
                colour[s] = Some(false);
                let mut stack = vec![s];
                while let Some(v) = stack.pop() {
                    for u in g.neighbors(v).iter() {
                        match colour[u] {
                            None => {
                                colour[u] = Some(!colour[v].unwrap());
                                stack.push(u);
                            }
                            Some(c) => assert_ne!(c, colour[v].unwrap()),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn seeded_generation_is_deterministic() {
        assert_eq!(random_gnp(9, 0.4, 7), random_gnp(9, 0.4, 7));
    }
}
