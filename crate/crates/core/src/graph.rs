//! Simple undirected graphs, edge-list parsing, and BFS distance machinery.
//!
//! Vertices are contiguous `0..n-1` ids. Graphs are immutable after
//! construction, so every query below is safe to run concurrently.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Sentinel distance for unreachable vertices in a single-source row.
pub const UNREACHABLE: u32 = u32::MAX;

/// Errors from graph construction, parsing, and distance queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A line of edge-list text that is not two nonnegative integers.
    Malformed { line: usize },
    /// Loop edge `v v`. `line` is set when the edge came from text.
    Loop { vertex: u32, line: Option<usize> },
    /// The same unordered pair appeared twice.
    Duplicate { u: u32, v: u32, line: Option<usize> },
    /// No edges at all in the input text.
    Empty,
    /// Edge endpoint outside `0..n` in `from_edges`.
    OutOfRange { vertex: u32, vertex_count: usize },
    /// BFS source outside `0..n`.
    SourceOutOfRange { source: u32, vertex_count: usize },
    /// Operation defined only for connected graphs.
    Disconnected,
    /// Operation needs at least two vertices (diameter).
    TooFewVertices,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Malformed { line } => {
                write!(f, "line {line}: expected two nonnegative integers")
            }
            GraphError::Loop { vertex, line: Some(line) } => {
                write!(f, "line {line}: loop edge at vertex {vertex}")
            }
            GraphError::Loop { vertex, line: None } => write!(f, "loop edge at vertex {vertex}"),
            GraphError::Duplicate { u, v, line: Some(line) } => {
                write!(f, "line {line}: duplicate edge {u} {v}")
            }
            GraphError::Duplicate { u, v, line: None } => write!(f, "duplicate edge {u} {v}"),
            GraphError::Empty => write!(f, "empty edge list"),
            GraphError::OutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range for n={vertex_count}")
            }
            GraphError::SourceOutOfRange { source, vertex_count } => {
                write!(f, "BFS source {source} out of range for n={vertex_count}")
            }
            GraphError::Disconnected => write!(f, "graph not connected"),
            GraphError::TooFewVertices => write!(f, "needs at least two vertices"),
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Builds a graph with `n` vertices from unordered edge pairs.
    /// Rejects loops, duplicates (in either orientation) and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop { vertex: u, line: None });
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::OutOfRange { vertex: w, vertex_count: n });
                }
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::Duplicate { u: key.0, v: key.1, line: None });
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
            list.push(key);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        list.sort_unstable();
        Ok(Graph { adj, edges: list })
    }

    /// Parses whitespace-separated edge-list text: one `u v` pair per line,
    /// `#`-prefixed and blank lines ignored. The vertex count is
    /// `1 + max id`; ids never mentioned stay as isolated vertices and make
    /// connectivity checks fail naturally.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut raw: Vec<(u32, u32, usize)> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut it = trimmed.split_whitespace();
            let u = it.next().and_then(|t| t.parse::<u32>().ok());
            let v = it.next().and_then(|t| t.parse::<u32>().ok());
            match (u, v, it.next()) {
                (Some(u), Some(v), None) => raw.push((u, v, lineno)),
                _ => return Err(GraphError::Malformed { line: lineno }),
            }
        }
        if raw.is_empty() {
            return Err(GraphError::Empty);
        }
        let n = 1 + raw.iter().map(|&(u, v, _)| u.max(v)).max().unwrap() as usize;
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        let mut seen = BTreeSet::new();
        for (u, v, lineno) in raw {
            if u == v {
                return Err(GraphError::Loop { vertex: u, line: Some(lineno) });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::Duplicate { u: key.0, v: key.1, line: Some(lineno) });
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
            list.push(key);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        list.sort_unstable();
        Ok(Graph { adj, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `N = n(n-1)/2`, the number of unordered vertex pairs.
    pub fn pair_count(&self) -> usize {
        let n = self.adj.len();
        n * n.saturating_sub(1) / 2
    }

    /// Edges as normalized `(min, max)` pairs in sorted order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// True iff every vertex is reachable from vertex 0 (true for n <= 1).
    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0u32);
        let mut count = 1usize;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Hop distances from `source`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: u32) -> Result<Vec<u32>, GraphError> {
        let n = self.adj.len();
        if source as usize >= n {
            return Err(GraphError::SourceOutOfRange { source, vertex_count: n });
        }
        let mut dist = vec![UNREACHABLE; n];
        let mut queue = VecDeque::new();
        dist[source as usize] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &w in &self.adj[u as usize] {
                if dist[w as usize] == UNREACHABLE {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// One BFS per source assembled into a full matrix.
    /// Errors on disconnected input rather than storing infinities.
    pub fn all_pairs_distances(&self) -> Result<DistanceMatrix, GraphError> {
        let n = self.adj.len();
        let mut data = Vec::with_capacity(n * n);
        for s in 0..n {
            let row = self.bfs_distances(s as u32)?;
            if row.contains(&UNREACHABLE) {
                return Err(GraphError::Disconnected);
            }
            data.extend_from_slice(&row);
        }
        Ok(DistanceMatrix { n, data })
    }

    /// Largest pairwise distance. Needs a connected graph on >= 2 vertices.
    pub fn diameter(&self) -> Result<u32, GraphError> {
        if self.adj.len() < 2 {
            return Err(GraphError::TooFewVertices);
        }
        let mut best = 0u32;
        for s in 0..self.adj.len() {
            let row = self.bfs_distances(s as u32)?;
            for &d in &row {
                if d == UNREACHABLE {
                    return Err(GraphError::Disconnected);
                }
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// BFS 2-coloring over every component.
    pub fn is_bipartite(&self) -> bool {
        let n = self.adj.len();
        let mut color = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n as u32 {
            if color[start as usize] != u8::MAX {
                continue;
            }
            color[start as usize] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u as usize];
                for &w in &self.adj[u as usize] {
                    if color[w as usize] == u8::MAX {
                        color[w as usize] = 1 - cu;
                        queue.push_back(w);
                    } else if color[w as usize] == cu {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff every biconnected component induces a complete subgraph.
    ///
    /// Blocks come from an iterative articulation-point DFS with an edge
    /// stack; a block on `k` vertices is complete iff it carries exactly
    /// `k(k-1)/2` edges, so no adjacency probing is needed.
    pub fn is_block_graph(&self) -> bool {
        let n = self.adj.len();
        if n == 0 {
            return true;
        }
        let mut disc = vec![0u32; n]; // 0 = unvisited, else discovery time + 1
        let mut low = vec![0u32; n];
        let mut parent = vec![u32::MAX; n];
        let mut next_child = vec![0usize; n];
        let mut timer = 0u32;
        let mut edge_stack: Vec<(u32, u32)> = Vec::new();
        let mut dfs_stack: Vec<u32> = Vec::new();

        for root in 0..n as u32 {
            if disc[root as usize] != 0 {
                continue;
            }
            timer += 1;
            disc[root as usize] = timer;
            low[root as usize] = timer;
            dfs_stack.push(root);
            while let Some(&u) = dfs_stack.last() {
                let ui = u as usize;
                if next_child[ui] < self.adj[ui].len() {
                    let w = self.adj[ui][next_child[ui]];
                    next_child[ui] += 1;
                    let wi = w as usize;
                    if disc[wi] == 0 {
                        parent[wi] = u;
                        timer += 1;
                        disc[wi] = timer;
                        low[wi] = timer;
                        edge_stack.push((u, w));
                        dfs_stack.push(w);
                    } else if w != parent[ui] && disc[wi] < disc[ui] {
                        // back edge
                        edge_stack.push((u, w));
                        low[ui] = low[ui].min(disc[wi]);
                    }
                } else {
                    dfs_stack.pop();
                    if let Some(&p) = dfs_stack.last() {
                        let pi = p as usize;
                        low[pi] = low[pi].min(low[ui]);
                        if low[ui] >= disc[pi] {
                            // pop one block and test completeness
                            let mut verts = BTreeSet::new();
                            let mut edge_count = 0u64;
                            while let Some(&(a, b)) = edge_stack.last() {
                                edge_stack.pop();
                                edge_count += 1;
                                verts.insert(a);
                                verts.insert(b);
                                if (a, b) == (p, u) {
                                    break;
                                }
                            }
                            let k = verts.len() as u64;
                            if edge_count != k * (k - 1) / 2 {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// True iff `m = n(n-1)/2`.
    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.pair_count()
    }
}

/// Flat row-major matrix of exact hop distances for a connected graph.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: u32, v: u32) -> u32 {
        self.data[u as usize * self.n + v as usize]
    }

    /// All distances from `u`, indexable by target vertex.
    #[inline]
    pub fn row(&self, u: u32) -> &[u32] {
        let base = u as usize * self.n;
        &self.data[base..base + self.n]
    }

    pub fn max_entry(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}

/// Small named graphs used across the test suites.
#[cfg(test)]
pub(crate) mod fixtures {
    use super::Graph;
    use alloc::vec::Vec;

    pub(crate) fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n as u32 - 1).map(|i| (i, i + 1))).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        let mut e: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        e.push((0, n as u32 - 1));
        Graph::from_edges(n, e).unwrap()
    }

    pub(crate) fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, e).unwrap()
    }

    pub(crate) fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves as u32).map(|v| (0, v))).unwrap()
    }
}
