//! Undirected simple graphs over vertices `0..n` and the PACE `.gr` reader.

use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::VertexSet;

/// Undirected simple graph with bitset adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: edge before `p tdp` header")]
    MissingHeader { line: usize },
    #[error("input contains no `p tdp <n> <m>` header")]
    NoHeader,
    #[error("line {line}: malformed header `{text}`")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: expected `<u> <v>`, found `{text}`")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: `{token}` is not a non-negative integer")]
    NotAnInteger { line: usize, token: String },
    #[error("line {line}: endpoint {vertex} outside [1, {n}]")]
    EndpointOutOfRange { line: usize, vertex: u64, n: usize },
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a graph from 0-based edges. Self-loops are dropped and
    /// repeated edges collapse.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    /// `N(S)`: vertices outside `set` adjacent to some member of it.
    pub fn neighbourhood_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(set);
        out
    }

    /// Vertices of the component of `G[within]` containing `start`.
    pub fn component_of(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = self.empty_set();
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Connected components of `G[set]`, ordered by smallest member.
    pub fn components_within(&self, set: &VertexSet) -> Vec<VertexSet> {
        let mut rest = set.clone();
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let comp = self.component_of(start, &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Whether `G[set]` is connected. `set` must be non-empty.
    pub fn is_connected_within(&self, set: &VertexSet) -> bool {
        let start = set
            .first()
            .expect("is_connected_within called on an empty set");
        self.component_of(start, set).len() == set.len()
    }

    /// Induced subgraph on `set`, relabelled to `0..|set|` in ascending order.
    /// Returns the subgraph and the map from new labels to original vertices.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = set.iter().collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut sub = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].intersection(set).iter() {
                sub.adj[i].insert(local[w]);
            }
        }
        (sub, map)
    }

    /// Serializes to PACE `.gr` with 1-based endpoints.
    pub fn to_gr(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p tdp {} {}", self.n, self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }
}

fn parse_int(token: &str, line: usize) -> Result<u64, ParseError> {
    token.parse::<u64>().map_err(|_| ParseError::NotAnInteger {
        line,
        token: token.to_string(),
    })
}

/// Parses a PACE `.gr` graph: `c` comment lines, one `p tdp <n> <m>`
/// header, then one `<u> <v>` line per edge with 1-based endpoints.
pub fn parse_gr(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens[0] == "p" {
            if graph.is_some() {
                return Err(ParseError::DuplicateHeader { line });
            }
            if tokens.len() != 4 || tokens[1] != "tdp" {
                return Err(ParseError::MalformedHeader {
                    line,
                    text: trimmed.to_string(),
                });
            }
            let n = parse_int(tokens[2], line)? as usize;
            // edge count is informational; duplicates may make it disagree
            parse_int(tokens[3], line)?;
            graph = Some(Graph::empty(n));
            continue;
        }
        let g = graph.as_mut().ok_or(ParseError::MissingHeader { line })?;
        if tokens.len() != 2 {
            return Err(ParseError::MalformedEdge {
                line,
                text: trimmed.to_string(),
            });
        }
        let n = g.n();
        let mut ends = [0usize; 2];
        for (slot, token) in ends.iter_mut().zip(&tokens) {
            let vertex = parse_int(token, line)?;
            if vertex == 0 || vertex > n as u64 {
                return Err(ParseError::EndpointOutOfRange { line, vertex, n });
            }
            *slot = vertex as usize - 1;
        }
        g.add_edge(ends[0], ends[1]);
    }
    graph.ok_or(ParseError::NoHeader)
}
