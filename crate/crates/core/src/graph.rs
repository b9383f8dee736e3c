//! Simple undirected loop-free graphs and the `p edge` text format.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors raised while building or parsing a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// Loop on the given (1-based in files, 0-based otherwise) vertex.
    #[error("loop edge on vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed line {0}")]
    MalformedLine(usize),
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
}

/// Undirected graph without loops or parallel edges over vertices `0..n`.
///
/// Edges are stored as ordered pairs `(i, j)` with `i < j`, together with a
/// dense adjacency matrix so that adjacency queries are O(1).
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicates (in either orientation)
    /// are merged; loops are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let mut adj = vec![false; n * n];
        let mut neighbors = vec![Vec::new(); n];
        for &(a, b) in &set {
            adj[a * n + b] = true;
            adj[b * n + a] = true;
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
            neighbors,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a * self.n + b]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("edgeless graph needs n >= 1")
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::new(n, edges).expect("K_n needs n >= 1")
    }

    /// Cycle `C_n` on vertices `0..n` in order. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "C_n needs n >= 3");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Path on `n` vertices (`P_3` has two edges).
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("P_n needs n >= 1")
    }

    /// Complete bipartite graph `K_{a,b}`; the first `a` vertices form one side.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
        Graph::new(a + b, edges).expect("K_{a,b} needs a + b >= 1")
    }

    /// Star with centre 0 and `leaves` leaves, i.e. `K_{1,leaves}`.
    pub fn star(leaves: usize) -> Self {
        Graph::complete_bipartite(1, leaves)
    }

    /// Wheel: hub 0 joined to every vertex of a rim cycle `C_rim` on `1..=rim`.
    pub fn wheel(rim: usize) -> Self {
        assert!(rim >= 3, "wheel rim needs at least 3 vertices");
        let rim_edges = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
        let spokes = (1..=rim).map(|i| (0, i));
        Graph::new(rim + 1, rim_edges.chain(spokes)).unwrap()
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// Resolves a built-in graph name: `K<n>`, `C<n>`, `P<n>`, `S<n>` (star
    /// with n leaves), `W<n>` (wheel with an n-cycle rim), `E<n>` (edgeless),
    /// `K<a>,<b>` and `PETERSEN`. Case-insensitive.
    pub fn by_name(name: &str) -> Result<Self, GraphError> {
        let unknown = || GraphError::UnknownName(name.to_string());
        let upper = name.trim().to_ascii_uppercase();
        if upper == "PETERSEN" {
            return Ok(Graph::petersen());
        }
        let mut chars = upper.chars();
        let kind = chars.next().ok_or_else(unknown)?;
        let rest = chars.as_str();
        if kind == 'K' {
            if let Some((a, b)) = rest.split_once([',', '_']) {
                let a: usize = a.parse().map_err(|_| unknown())?;
                let b: usize = b.parse().map_err(|_| unknown())?;
                if a + b == 0 {
                    return Err(unknown());
                }
                return Ok(Graph::complete_bipartite(a, b));
            }
        }
        let n: usize = rest.parse().map_err(|_| unknown())?;
        match kind {
            'K' if n >= 1 => Ok(Graph::complete(n)),
            'C' if n >= 3 => Ok(Graph::cycle(n)),
            'P' if n >= 1 => Ok(Graph::path(n)),
            'S' => Ok(Graph::star(n)),
            'W' if n >= 3 => Ok(Graph::wheel(n)),
            'E' if n >= 1 => Ok(Graph::edgeless(n)),
            _ => Err(unknown()),
        }
    }

    /// Parses the `p edge <n> <m>` / `e <i> <j>` format (1-based vertices,
    /// `c` comment lines, blank lines ignored).
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["p", "edge", nv, m] => {
                    if n.is_some() {
                        return Err(GraphError::MalformedLine(lineno));
                    }
                    let nv: usize = nv.parse().map_err(|_| GraphError::MalformedLine(lineno))?;
                    if nv == 0 {
                        return Err(GraphError::NoVertices);
                    }
                    m.parse::<usize>()
                        .map_err(|_| GraphError::MalformedLine(lineno))?;
                    n = Some(nv);
                }
                ["e", a, b] => {
                    let nv = n.ok_or(GraphError::MissingHeader)?;
                    let a: usize = a.parse().map_err(|_| GraphError::MalformedLine(lineno))?;
                    let b: usize = b.parse().map_err(|_| GraphError::MalformedLine(lineno))?;
                    for v in [a, b] {
                        if v == 0 || v > nv {
                            return Err(GraphError::VertexOutOfRange { vertex: v, n: nv });
                        }
                    }
                    if a == b {
                        return Err(GraphError::LoopEdge(a));
                    }
                    edges.push((a - 1, b - 1));
                }
                _ => return Err(GraphError::MalformedLine(lineno)),
            }
        }
        let n = n.ok_or(GraphError::MissingHeader)?;
        Graph::new(n, edges)
    }

    /// Writes the graph in the `p edge` format, edges sorted lexicographically.
    pub fn to_text(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.edges.len());
        for &(a, b) in &self.edges {
            out.push_str(&format!("e {} {}\n", a + 1, b + 1));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}
