//! Shared oracles and corpus generators for the integration suites.
//!
//! Everything here is deliberately independent of the library's own
//! computation paths: distances come from Floyd–Warshall instead of BFS,
//! bipartiteness from a parity-doubled walk search instead of 2-coloring,
//! and trees from Prüfer-sequence enumeration.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use szw_core::{Graph, SplitMix64};

pub const INF: u32 = u32::MAX / 2;

// ---------------------------------------------------------------------------
// named small graphs

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (0..n as u32 - 1).map(|i| (i, i + 1))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let mut e: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
    e.push((0, n as u32 - 1));
    Graph::from_edges(n, e).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            e.push((u, v));
        }
    }
    Graph::from_edges(n, e).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves as u32).map(|v| (0, v))).unwrap()
}

// ---------------------------------------------------------------------------
// independent distance / index oracles

/// Floyd–Warshall all-pairs distances; `INF` marks unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u as usize][v as usize] = 1;
        d[v as usize][u as usize] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Classical Wiener index straight off a distance matrix.
pub fn brute_wiener(d: &[Vec<u32>]) -> u64 {
    let n = d.len();
    let mut w = 0u64;
    for u in 0..n {
        for v in u + 1..n {
            w += u64::from(d[u][v]);
        }
    }
    w
}

/// Per-edge Szeged terms from the definition, aligned with `g.edges()`.
pub fn brute_szeged_terms(g: &Graph, d: &[Vec<u32>]) -> Vec<u64> {
    let n = g.vertex_count();
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let mut closer_u = 0u64;
            let mut closer_v = 0u64;
            for w in 0..n {
                if d[w][u as usize] < d[w][v as usize] {
                    closer_u += 1;
                } else if d[w][v as usize] < d[w][u as usize] {
                    closer_v += 1;
                }
            }
            closer_u * closer_v
        })
        .collect()
}

pub fn brute_szeged(g: &Graph, d: &[Vec<u32>]) -> u64 {
    brute_szeged_terms(g, d).iter().sum()
}

/// Odd-closed-walk detection on the parity-doubled graph: a connected graph
/// is non-bipartite iff some vertex is reachable from vertex 0 at both
/// parities.
pub fn has_odd_closed_walk(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    let mut seen = vec![[false; 2]; n];
    let mut queue = std::collections::VecDeque::new();
    seen[0][0] = true;
    queue.push_back((0u32, 0usize));
    while let Some((u, parity)) = queue.pop_front() {
        for &w in g.neighbors(u) {
            let flipped = 1 - parity;
            if !seen[w as usize][flipped] {
                seen[w as usize][flipped] = true;
                queue.push_back((w, flipped));
            }
        }
    }
    (0..n).any(|v| seen[v][0] && seen[v][1])
}

/// Diameter-equals-2 predicate via adjacency bitsets: every non-adjacent
/// pair must share a neighbor, and at least one pair must be non-adjacent.
pub fn has_diameter_two(g: &Graph) -> bool {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; n];
    for &(u, v) in g.edges() {
        rows[u as usize][v as usize / 64] |= 1 << (v % 64);
        rows[v as usize][u as usize / 64] |= 1 << (u % 64);
    }
    let mut some_nonadjacent = false;
    for u in 0..n {
        for v in u + 1..n {
            if rows[u][v / 64] & (1 << (v % 64)) != 0 {
                continue;
            }
            some_nonadjacent = true;
            let share = (0..words).any(|w| rows[u][w] & rows[v][w] != 0);
            if !share {
                return false;
            }
        }
    }
    some_nonadjacent
}

// ---------------------------------------------------------------------------
// exhaustive tree enumeration (Prüfer + AHU interning)

/// All non-isomorphic trees with exactly `n` vertices.
///
/// Every labeled tree arises from a Prüfer sequence; isomorphism classes
/// are collapsed with an interned AHU canonical form rooted at the tree
/// center(s). Counts follow 1, 1, 1, 2, 3, 6, 11, 23, 47, … which
/// `acceptance` cross-checks.
pub fn all_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    if n == 1 {
        return vec![Graph::from_edges(1, []).unwrap()];
    }
    if n == 2 {
        return vec![Graph::from_edges(2, [(0, 1)]).unwrap()];
    }
    let mut interner: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    let mut out = Vec::new();
    let mut prufer = vec![0u32; n - 2];
    loop {
        let edges = prufer_decode(n, &prufer);
        let key = canonical_tree_id(n, &edges, &mut interner);
        if seen.insert(key) {
            out.push(Graph::from_edges(n, edges.iter().copied()).unwrap());
        }
        // odometer over the n^(n-2) sequences
        let mut pos = 0;
        loop {
            if pos == prufer.len() {
                return out;
            }
            prufer[pos] += 1;
            if (prufer[pos] as usize) < n {
                break;
            }
            prufer[pos] = 0;
            pos += 1;
        }
    }
}

fn prufer_decode(n: usize, seq: &[u32]) -> Vec<(u32, u32)> {
    let mut degree = vec![1u32; n];
    for &s in seq {
        degree[s as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1 && !used[v]).unwrap();
        edges.push((leaf as u32, s));
        used[leaf] = true;
        degree[s as usize] -= 1;
    }
    let mut last = (0..n).filter(|&v| !used[v] && degree[v] >= 1).collect::<Vec<_>>();
    assert_eq!(last.len(), 2);
    edges.push((last.remove(0) as u32, last[0] as u32));
    edges
}

/// Interned AHU id of the tree rooted at its center (minimum over the one
/// or two centers). Ids are only meaningful within one interner.
fn canonical_tree_id(
    n: usize,
    edges: &[(u32, u32)],
    interner: &mut HashMap<Vec<u32>, u32>,
) -> u32 {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    let centers = tree_centers(&adj);
    centers
        .into_iter()
        .map(|c| rooted_ahu_id(&adj, c, u32::MAX, interner))
        .min()
        .unwrap()
}

fn tree_centers(adj: &[Vec<u32>]) -> Vec<u32> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<u32> = (0..n as u32).filter(|&v| degree[v as usize] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v as usize] = true;
            remaining -= 1;
            for &w in &adj[v as usize] {
                if !removed[w as usize] {
                    degree[w as usize] -= 1;
                    if degree[w as usize] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n as u32).filter(|&v| !removed[v as usize]).collect()
}

fn rooted_ahu_id(
    adj: &[Vec<u32>],
    v: u32,
    parent: u32,
    interner: &mut HashMap<Vec<u32>, u32>,
) -> u32 {
    let mut child_ids: Vec<u32> = adj[v as usize]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_ahu_id(adj, w, v, interner))
        .collect();
    child_ids.sort_unstable();
    let next = interner.len() as u32;
    *interner.entry(child_ids).or_insert(next)
}

// ---------------------------------------------------------------------------
// seeded corpora

/// Random block graph on exactly `n_target` vertices: cliques of 2–4
/// vertices glued one after another at random existing vertices.
pub fn random_block_graph(rng: &mut SplitMix64, n_target: usize) -> Graph {
    assert!(n_target >= 1);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut n = 1usize;
    while n < n_target {
        let room = (n_target - n).min(3) as u64;
        let fresh = 1 + rng.next_below(room) as usize;
        let attach = rng.next_below(n as u64) as u32;
        let mut verts = vec![attach];
        verts.extend((0..fresh).map(|j| (n + j) as u32));
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                edges.push((verts[i], verts[j]));
            }
        }
        n += fresh;
    }
    Graph::from_edges(n_target, edges).unwrap()
}

/// Seeded random connected graph with exactly `m` edges: a random
/// recursive tree plus uniformly drawn extra edges. Connected by
/// construction, so it works at densities where uniform rejection sampling
/// cannot reach a connected graph.
pub fn sparse_connected(n: usize, m: usize, seed: u64) -> Graph {
    assert!(n >= 1 && m >= n - 1 && m <= n * (n - 1) / 2);
    let mut rng = SplitMix64::new(seed);
    let mut chosen: BTreeSet<(u32, u32)> = BTreeSet::new();
    for v in 1..n as u32 {
        let anchor = rng.next_below(u64::from(v)) as u32;
        chosen.insert((anchor.min(v), anchor.max(v)));
    }
    while chosen.len() < m {
        let u = rng.next_below(n as u64) as u32;
        let v = rng.next_below(n as u64) as u32;
        if u != v {
            chosen.insert((u.min(v), u.max(v)));
        }
    }
    let g = Graph::from_edges(n, chosen).unwrap();
    debug_assert!(g.is_connected());
    g
}

/// Corpus of uniform random connected graphs with `2 <= n <= n_max` and a
/// uniformly chosen feasible edge count, using the library's own rejection
/// sampler.
pub fn random_connected_corpus(seed: u64, count: usize, n_max: usize) -> Vec<Graph> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempt = 0u64;
    while out.len() < count {
        let n = 2 + rng.next_below((n_max - 1) as u64) as usize;
        let lo = n - 1;
        let hi = n * (n - 1) / 2;
        let m = lo + rng.next_below((hi - lo + 1) as u64) as usize;
        attempt += 1;
        if let Ok(g) = szw_core::randgen::random_gnm_connected(n, m, seed ^ (attempt << 20)) {
            out.push(g);
        }
    }
    out
}
