//! Undirected simple graphs with bitset adjacency rows, plus the metric and
//! connectivity primitives the rest of the crate is built on.
//!
//! Graphs are immutable after construction, so every operation here is a pure
//! function and safe to call from concurrent workers.

use crate::bits::Bits;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
}

/// A graph metric value that may be unbounded (acyclic girth, disconnected
/// diameter). `Finite(_) < Infinite` under the derived ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Extent {
    Finite(usize),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extent::Finite(v) => Some(v),
            Extent::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Extent::Finite(_))
    }
}

impl std::fmt::Display for Extent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Extent::Finite(v) => write!(f, "{v}"),
            Extent::Infinite => write!(f, "infinite"),
        }
    }
}

/// Undirected simple graph on vertices `0..n`. Adjacency is kept both as
/// bitset rows (fast intersection tests) and as a sorted edge list
/// (deterministic iteration).
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<Bits>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            rows: vec![Bits::new(n); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.rows[u].set(v);
            g.rows[v].set(u);
        }
        g.rebuild_edge_list();
        Ok(g)
    }

    fn from_rows(rows: Vec<Bits>) -> Graph {
        let mut g = Graph {
            n: rows.len(),
            rows,
            edges: Vec::new(),
        };
        g.rebuild_edge_list();
        g
    }

    fn rebuild_edge_list(&mut self) {
        self.edges.clear();
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    self.edges.push((u, v));
                }
            }
        }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u].get(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    /// Neighbor bitset row of `v`.
    pub fn row(&self, v: usize) -> &Bits {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = Bits::new(self.n);
        self.bfs_collect(0, None, &mut seen) == self.n
    }

    /// BFS from `start`, skipping vertices in `removed`; marks reached
    /// vertices in `seen` and returns how many were reached.
    fn bfs_collect(&self, start: usize, removed: Option<&Bits>, seen: &mut Bits) -> usize {
        let mut queue = std::collections::VecDeque::new();
        seen.set(start);
        queue.push_back(start);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.rows[u].iter() {
                if seen.get(v) || removed.is_some_and(|r| r.get(v)) {
                    continue;
                }
                seen.set(v);
                count += 1;
                queue.push_back(v);
            }
        }
        count
    }

    /// Partition of the vertex set into connected components, each sorted,
    /// ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_without(&Bits::new(self.n))
    }

    /// Connected components of the graph with `removed` vertices deleted.
    pub fn components_without(&self, removed: &Bits) -> Vec<Vec<usize>> {
        let mut seen = removed.clone();
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.get(v) {
                continue;
            }
            let before = seen.clone();
            self.bfs_collect(v, None, &mut seen);
            let mut comp: Vec<usize> = Vec::new();
            for u in v..self.n {
                if seen.get(u) && !before.get(u) {
                    comp.push(u);
                }
            }
            out.push(comp);
        }
        out
    }

    /// True if deleting `removed` leaves at least two components.
    pub fn disconnects(&self, removed: &Bits) -> bool {
        let mut first = None;
        for v in 0..self.n {
            if !removed.get(v) {
                first = Some(v);
                break;
            }
        }
        let Some(start) = first else {
            return false; // nothing left
        };
        let mut seen = removed.clone();
        let reached = self.bfs_collect(start, None, &mut seen);
        reached < self.n - removed.count()
    }

    /// Length of a shortest cycle, or `Infinite` for forests.
    ///
    /// BFS from every root; for each non-tree edge (u, w) with both endpoints
    /// reached, `dist[u] + dist[w] + 1` bounds a cycle through the root, and
    /// the minimum over all roots is exact. Expansion is capped once a bound
    /// is known, since deeper vertices cannot improve it.
    pub fn girth(&self) -> Extent {
        let mut best: Option<usize> = None;
        // generation stamps avoid refilling the distance array per root
        let mut dist = vec![0usize; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut stamp = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            queue.clear();
            stamp[root] = root;
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // Candidates that could beat `best` need both endpoints at
                // depth <= (best - 2) / 2, so expansion stops beyond that.
                if let Some(b) = best {
                    if dist[u] > (b - 2) / 2 {
                        continue;
                    }
                }
                for w in self.rows[u].iter() {
                    if stamp[w] != root {
                        stamp[w] = root;
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u {
                        let cand = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        match best {
            Some(b) => Extent::Finite(b),
            None => Extent::Infinite,
        }
    }

    /// Distances from `src` (`usize::MAX` for unreachable vertices).
    pub fn distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for v in self.rows[u].iter() {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    fn eccentricities(&self) -> Option<Vec<usize>> {
        let mut out = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let dist = self.distances(v);
            let mut ecc = 0;
            for &d in &dist {
                if d == usize::MAX {
                    return None;
                }
                ecc = ecc.max(d);
            }
            out.push(ecc);
        }
        Some(out)
    }

    /// Maximum shortest-path distance; `Infinite` when disconnected.
    pub fn diameter(&self) -> Extent {
        if self.n == 0 {
            return Extent::Finite(0);
        }
        match self.eccentricities() {
            Some(ecc) => Extent::Finite(ecc.into_iter().max().unwrap()),
            None => Extent::Infinite,
        }
    }

    /// Minimum eccentricity; `Infinite` when disconnected.
    pub fn radius(&self) -> Extent {
        if self.n == 0 {
            return Extent::Finite(0);
        }
        match self.eccentricities() {
            Some(ecc) => Extent::Finite(ecc.into_iter().min().unwrap()),
            None => Extent::Infinite,
        }
    }

    /// The square: same vertices, an edge wherever the distance here is 1 or 2.
    pub fn square(&self) -> Graph {
        let mut rows = self.rows.clone();
        for (v, row) in rows.iter_mut().enumerate() {
            for u in self.rows[v].iter() {
                row.union_with(&self.rows[u]);
            }
            row.clear(v);
        }
        Graph::from_rows(rows)
    }

    pub fn complement(&self) -> Graph {
        let mut rows = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = Bits::new(self.n);
            for u in 0..self.n {
                if u != v && !self.rows[v].get(u) {
                    row.set(u);
                }
            }
            rows.push(row);
        }
        Graph::from_rows(rows)
    }

    /// Subgraph induced by `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            for u in self.rows[v].iter() {
                let j = index[u];
                if j != usize::MAX && j > i {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(verts.len(), &edges).unwrap()
    }

    /// True when no set of fewer than `k` vertices disconnects the graph and
    /// the graph has more than `k` vertices. Decided by exhaustive removal of
    /// all subsets of size below `k`; errors on disconnected input.
    pub fn vertex_connectivity_at_least(&self, k: usize) -> Result<bool, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.n <= k {
            return Ok(false);
        }
        let mut subset = Vec::new();
        Ok(!self.some_small_cutset(0, k.saturating_sub(1), &mut subset))
    }

    fn some_small_cutset(&self, from: usize, budget: usize, subset: &mut Vec<usize>) -> bool {
        if !subset.is_empty() {
            let removed = Bits::from_indices(self.n, subset);
            if self.disconnects(&removed) {
                return true;
            }
        }
        if budget == 0 {
            return false;
        }
        for v in from..self.n {
            subset.push(v);
            if self.some_small_cutset(v + 1, budget - 1, subset) {
                subset.pop();
                return true;
            }
            subset.pop();
        }
        false
    }

    /// Two-coloring by BFS parity, or `None` when an odd cycle exists.
    /// Component roots are colored `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.rows[u].iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// DOT rendering; `labels`, when given, must have one entry per vertex.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        use std::fmt::Write;
        let mut out = String::from("graph g {\n");
        for v in 0..self.n {
            match labels {
                Some(ls) => {
                    let _ = writeln!(out, "  {} [label=\"{}\"];", v, ls[v]);
                }
                None => {
                    let _ = writeln!(out, "  {};", v);
                }
            }
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {} -- {};", u, v);
        }
        out.push_str("}\n");
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, {:?})",
            self.n,
            self.edges.len(),
            self.edges
        )
    }
}
