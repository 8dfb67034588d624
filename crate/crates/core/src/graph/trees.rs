use std::collections::{BTreeMap, HashMap};

use super::color::MAX_POLYNOMIAL_EDGES;
use super::Graph;
use crate::error::{Error, Result};

type Multiset = BTreeMap<(usize, usize), u128>;

/// Number of spanning trees, counting parallel edges as distinct.
///
/// Uses `τ(G) = τ(G − uv) + k·τ(G / uv)` where all `k` copies of `uv` are
/// removed at once and loops are dropped, which equals the single-edge
/// recursion applied `k` times.
pub fn spanning_tree_count(g: &Graph) -> Result<u128> {
    let mut edges = Multiset::new();
    for &(u, v) in g.edges() {
        if u != v {
            *edges.entry((u, v)).or_insert(0) += 1;
        }
    }
    if edges.len() > MAX_POLYNOMIAL_EDGES {
        return Err(Error::TooLarge {
            what: "distinct edge count for spanning-tree recursion",
            actual: edges.len(),
            limit: MAX_POLYNOMIAL_EDGES,
        });
    }
    let mut memo = HashMap::new();
    Ok(count(g.vertex_count(), edges, &mut memo))
}

fn count(n: usize, edges: Multiset, memo: &mut HashMap<(usize, Multiset), u128>) -> u128 {
    if n <= 1 {
        return 1;
    }
    if edges.len() + 1 < n {
        return 0;
    }
    let key = (n, edges);
    if let Some(&t) = memo.get(&key) {
        return t;
    }
    let (n, edges) = key;
    let mut degree = vec![0usize; n];
    for &(u, v) in edges.keys() {
        degree[u] += 1;
        degree[v] += 1;
    }
    let result = if degree.contains(&0) {
        0
    } else if let Some(leaf) = degree.iter().position(|&d| d == 1) {
        // A vertex with one neighbour: its edge bundle is in every tree.
        let (&(u, v), &k) = edges.iter().find(|&(&(u, v), _)| u == leaf || v == leaf).expect("leaf edge");
        let mut rest = edges.clone();
        rest.remove(&(u, v));
        k * count(n - 1, relabel_without(&rest, leaf), memo)
    } else {
        let (&(u, v), &k) = edges.iter().next_back().expect("nonempty");
        let mut deleted = edges.clone();
        deleted.remove(&(u, v));
        let mut contracted = Multiset::new();
        for (&(a, b), &m) in &deleted {
            let map = |x: usize| {
                let x = if x == v { u } else { x };
                if x > v {
                    x - 1
                } else {
                    x
                }
            };
            let (a, b) = (map(a), map(b));
            if a != b {
                *contracted.entry((a.min(b), a.max(b))).or_insert(0) += m;
            }
        }
        count(n, deleted, memo) + k * count(n - 1, contracted, memo)
    };
    memo.insert((n, edges), result);
    result
}

fn relabel_without(edges: &Multiset, gone: usize) -> Multiset {
    let shift = |x: usize| if x > gone { x - 1 } else { x };
    edges.iter().map(|(&(a, b), &m)| ((shift(a), shift(b)), m)).collect()
}
