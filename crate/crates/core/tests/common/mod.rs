#![allow(dead_code)]
//! Independent reference computations for the integration tests. Nothing
//! here touches bitsets or the incremental update paths.

use tdsearch::{Graph, SearchRng};

/// G(n, p) with `p = num / 1000`.
pub fn random_graph(n: usize, per_mille: usize, rng: &mut SearchRng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(1000) < per_mille {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn dense_matrix(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(g.has_edge(i, j))).collect())
        .collect()
}

fn matmul(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

/// Half the diagonal of A^3, by naive cubic multiplication.
pub fn half_diag_a3(g: &Graph) -> Vec<u32> {
    let a = dense_matrix(g);
    let a3 = matmul(&matmul(&a, &a), &a);
    (0..g.order()).map(|i| (a3[i][i] / 2) as u32).collect()
}

/// Triangles through each vertex, over all vertex triples.
pub fn brute_triangle_degrees(g: &Graph) -> (Vec<u32>, u64) {
    let n = g.order();
    let mut t = vec![0u32; n];
    let mut total = 0;
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    t[a] += 1;
                    t[b] += 1;
                    t[c] += 1;
                    total += 1;
                }
            }
        }
    }
    (t, total)
}

/// Ordered quadruples (u, s, v, t) of distinct vertices with us, vt edges
/// and ut, vs non-edges.
pub fn brute_ordered_switchings(g: &Graph) -> Vec<(usize, usize, usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for s in 0..n {
            for v in 0..n {
                for t in 0..n {
                    let distinct = u != s && u != v && u != t && s != v && s != t && v != t;
                    if distinct
                        && g.has_edge(u, s)
                        && g.has_edge(v, t)
                        && !g.has_edge(u, t)
                        && !g.has_edge(v, s)
                    {
                        out.push((u, s, v, t));
                    }
                }
            }
        }
    }
    out
}

/// Edge-set application of a switching, without the library's move code.
pub fn brute_apply(g: &Graph, (u, s, v, t): (usize, usize, usize, usize)) -> Graph {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&e| e != (u.min(s), u.max(s)) && e != (v.min(t), v.max(t)))
        .collect();
    edges.push((u, t));
    edges.push((v, s));
    Graph::from_edges(g.order(), &edges).unwrap()
}

/// Equal-value pairs by direct pair enumeration.
pub fn brute_f2(t: &[u32]) -> u64 {
    let mut k = 0;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if t[i] == t[j] {
                k += 1;
            }
        }
    }
    k
}

pub fn binom2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}
