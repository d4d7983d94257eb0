use super::{Graph, GraphError};
use std::collections::BTreeSet;

/// Looks up a standard graph by key: `C<n>` (n >= 3), `K<n>`, `empty<n>`
/// (also `empty_<n>`), `path<n>` (also `P<n>`), or `petersen`.
pub fn named_graph(name: &str) -> Result<Graph, GraphError> {
    let unknown = || GraphError::UnknownName(name.to_string());
    let key = name.trim();
    if key.eq_ignore_ascii_case("petersen") {
        return petersen();
    }
    let split = key
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(unknown)?;
    let (prefix, digits) = key.split_at(split);
    let n: usize = digits.parse().map_err(|_| unknown())?;
    if n == 0 {
        return Err(unknown());
    }
    match prefix {
        "C" if n >= 3 => cycle(n),
        "K" => {
            let edges: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            Graph::from_edges(n, &edges)
        }
        "empty" | "empty_" | "E" => Graph::empty(n),
        "path" | "path_" | "P" => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        _ => Err(unknown()),
    }
}

fn cycle(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order,
/// adjacent when disjoint.
fn petersen() -> Result<Graph, GraphError> {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for (x, &(a, b)) in pairs.iter().enumerate() {
        for (y, &(c, d)) in pairs.iter().enumerate().skip(x + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(10, &edges)
}

/// One representative of every isomorphism class on `n` vertices (n <= 7),
/// in increasing order of the canonical code. The representative is the
/// relabelling whose upper-triangle bit string is smallest.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "exhaustive enumeration limited to n <= 7");
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let canon = perms
            .iter()
            .map(|p| {
                let mut code = 0u64;
                for (bit, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                        let pos = b * (b - 1) / 2 + a;
                        code |= 1 << pos;
                    }
                }
                code
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.into_iter()
        .map(|code| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(bit, _)| code >> bit & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).expect("valid edges")
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut cur, &mut out);
    out
}

fn heap_permute(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}
