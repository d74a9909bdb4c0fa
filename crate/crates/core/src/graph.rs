//! Finite simple undirected graphs.
//!
//! Vertices are `0..n` inside the library. The edge-list text format and every
//! user-facing rendering use labels `1..=n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph. Edges are stored as `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 0-based edges, rejecting loops, duplicates (in either
    /// orientation) and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v + 1, n });
                }
            }
            if i == j {
                return Err(Error::LoopEdge(i + 1));
            }
            let e = (i.min(j), i.max(j));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0 + 1, e.1 + 1));
            }
        }
        Ok(Self { n, edges: set })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn adjacency_matrix(&self) -> AdjacencyMatrix {
        let mut entries = vec![0u8; self.n * self.n];
        for &(i, j) in &self.edges {
            entries[i * self.n + j] = 1;
            entries[j * self.n + i] = 1;
        }
        AdjacencyMatrix { n: self.n, entries }
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn component_vertices(&self) -> Vec<Vec<usize>> {
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components as induced subgraphs, relabeled in increasing
    /// order of their original vertices.
    pub fn components(&self) -> Vec<Graph> {
        self.component_vertices()
            .iter()
            .map(|vs| self.induced_subgraph(vs))
            .collect()
    }

    /// Induced subgraph on `vertices` (which must be distinct and in range);
    /// vertex `vertices[k]` becomes `k`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let edges: BTreeSet<_> = self
            .edges
            .iter()
            .filter(|&&(i, j)| index[i] != usize::MAX && index[j] != usize::MAX)
            .map(|&(i, j)| {
                let (a, b) = (index[i], index[j]);
                (a.min(b), a.max(b))
            })
            .collect();
        Graph {
            n: vertices.len(),
            edges,
        }
    }

    /// Same graph with vertex `v` renamed to `perm[v]`; `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let edges = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (perm[i], perm[j]);
                (a.min(b), a.max(b))
            })
            .collect();
        Graph { n: self.n, edges }
    }

    pub fn is_connected(&self) -> bool {
        self.component_vertices().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3
            && self.edges.len() == self.n
            && self.degrees().iter().all(|&d| d == 2)
            && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.neighbors();
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Parses the edge-list text format.
    ///
    /// ```text
    /// # optional comments
    /// n 5
    /// 1 2
    /// 2 3
    /// ```
    ///
    /// The `n <count>` header is only recognized as the first non-comment
    /// line. Without it the vertex count is the largest label seen.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut header: Option<usize> = None;
        let mut edges = Vec::new();
        let mut seen_content = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            if fields[0] == "n" {
                if seen_content {
                    return Err(parse_err("`n` header must come first".into()));
                }
                seen_content = true;
                if fields.len() != 2 {
                    return Err(parse_err("expected `n <count>`".into()));
                }
                let n: usize = fields[1]
                    .parse()
                    .map_err(|_| parse_err(format!("invalid vertex count {:?}", fields[1])))?;
                if n == 0 {
                    return Err(Error::EmptyGraph);
                }
                header = Some(n);
                continue;
            }
            seen_content = true;
            if fields.len() != 2 {
                return Err(parse_err(format!("expected `i j`, got {line:?}")));
            }
            let mut ends = [0usize; 2];
            for (slot, f) in ends.iter_mut().zip(&fields) {
                let v: usize = f
                    .parse()
                    .map_err(|_| parse_err(format!("invalid vertex label {f:?}")))?;
                if v == 0 {
                    return Err(parse_err("vertex labels start at 1".into()));
                }
                *slot = v;
            }
            edges.push((ends[0], ends[1]));
        }

        let max_label = edges.iter().map(|&(i, j)| i.max(j)).max().unwrap_or(0);
        let n = match header {
            Some(n) if max_label > n => {
                return Err(Error::VertexOutOfRange {
                    vertex: max_label,
                    n,
                })
            }
            Some(n) => n,
            None if max_label == 0 => return Err(Error::EmptyGraph),
            None => max_label,
        };
        Graph::new(n, edges.into_iter().map(|(i, j)| (i - 1, j - 1)))
    }

    /// Renders the edge-list text format, header included.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (i, j) in self.edges() {
            s.push_str(&format!("{} {}\n", i + 1, j + 1));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (i, j)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", i + 1, j + 1)?;
        }
        write!(f, "])")
    }
}

/// Dense 0/1 adjacency matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl AdjacencyMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.entries
            .chunks(self.n)
            .map(|row| row.iter().map(|&a| a as usize).sum())
            .collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.entries.chunks(self.n).map(<[u8]>::to_vec).collect()
    }
}
