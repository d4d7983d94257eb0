use super::{Graph, GraphError};

pub const MAX_ISO_VERTICES: usize = 12;

/// Vertex invariant used for pruning: degree, then sorted neighbour degrees.
fn signature(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Backtracking isomorphism test. On success returns `perm` with
/// `g.adjacent(i, j) == h.adjacent(perm[i], perm[j])` for all `i, j`.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>, GraphError> {
    let n = g.vertex_count();
    for size in [n, h.vertex_count()] {
        if size > MAX_ISO_VERTICES {
            return Err(GraphError::TooLargeForIsomorphism(size));
        }
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let sig_g: Vec<_> = (0..n).map(|v| signature(g, v)).collect();
    let sig_h: Vec<_> = (0..n).map(|v| signature(h, v)).collect();
    let mut sorted_g = sig_g.clone();
    let mut sorted_h = sig_h.clone();
    sorted_g.sort();
    sorted_h.sort();
    if sorted_g != sorted_h {
        return Ok(None);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));

    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = extend(g, h, &order, 0, &sig_g, &sig_h, &mut perm, &mut used);
    Ok(found.then_some(perm))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    sig_g: &[(usize, Vec<usize>)],
    sig_h: &[(usize, Vec<usize>)],
    perm: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for cand in 0..h.vertex_count() {
        if used[cand] || sig_g[v] != sig_h[cand] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.adjacent(u, v) == h.adjacent(perm[u], cand));
        if !consistent {
            continue;
        }
        perm[v] = cand;
        used[cand] = true;
        if extend(g, h, order, depth + 1, sig_g, sig_h, perm, used) {
            return true;
        }
        used[cand] = false;
        perm[v] = usize::MAX;
    }
    false
}

pub fn is_self_complementary(g: &Graph) -> Result<bool, GraphError> {
    Ok(is_isomorphic(g, &g.complement())?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, random_gnp};

    fn verify_witness(g: &Graph, h: &Graph, perm: &[usize]) {
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(!seen[p]);
            seen[p] = true;
        }
        for i in 0..g.vertex_count() {
            for j in 0..g.vertex_count() {
                assert_eq!(g.adjacent(i, j), h.adjacent(perm[i], perm[j]));
            }
        }
    }

    // Exhaustive oracle over all permutations.
    fn brute_force(g: &Graph, h: &Graph) -> bool {
        fn rec(g: &Graph, h: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let n = g.vertex_count();
            if perm.len() == n {
                return g.permuted(perm) == *h;
            }
            for c in 0..n {
                if !used[c] {
                    used[c] = true;
                    perm.push(c);
                    if rec(g, h, perm, used) {
                        return true;
                    }
                    perm.pop();
                    used[c] = false;
                }
            }
            false
        }
        g.vertex_count() == h.vertex_count()
            && rec(g, h, &mut Vec::new(), &mut vec![false; g.vertex_count()])
    }

    #[test]
    fn pentagon_is_self_complementary() {
        let c5 = named_graph("C5").unwrap();
        let perm = is_isomorphic(&c5, &c5.complement()).unwrap().unwrap();
        verify_witness(&c5, &c5.complement(), &perm);
        assert!(is_self_complementary(&c5).unwrap());
    }

    #[test]
    fn negative_cases() {
        let k3 = named_graph("K3").unwrap();
        let p3 = named_graph("path3").unwrap();
        assert!(is_isomorphic(&k3, &p3).unwrap().is_none());
        let c6 = named_graph("C6").unwrap();
        assert!(!brute_force(&c6, &c6.complement()));
        assert!(is_isomorphic(&c6, &c6.complement()).unwrap().is_none());
        assert!(!is_self_complementary(&named_graph("K4").unwrap()).unwrap());
    }

    #[test]
    fn path4_is_self_complementary() {
        let p4 = named_graph("path4").unwrap();
        assert!(brute_force(&p4, &p4.complement()));
        assert!(is_self_complementary(&p4).unwrap());
    }

    #[test]
    fn size_cap() {
        let g = Graph::empty(13).unwrap();
        assert_eq!(
            is_isomorphic(&g, &g),
            Err(GraphError::TooLargeForIsomorphism(13))
        );
    }

    #[test]
    fn agrees_with_brute_force_on_random_pairs() {
        for seed in 0..60 {
            let n = 3 + (seed as usize % 4);
            let g = random_gnp(n, 0.5, seed);
            let h = if seed % 2 == 0 {
                let perm: Vec<usize> = (0..n).map(|i| (i + seed as usize) % n).collect();
                g.permuted(&perm)
            } else {
                random_gnp(n, 0.5, seed + 1000)
            };
            let res = is_isomorphic(&g, &h).unwrap();
            assert_eq!(res.is_some(), brute_force(&g, &h), "seed {seed}");
            if let Some(perm) = res {
                verify_witness(&g, &h, &perm);
                let back = is_isomorphic(&h, &g).unwrap().unwrap();
                verify_witness(&h, &g, &back);
            }
            assert!(is_isomorphic(&g, &g).unwrap().is_some());
        }
    }
}
