//! Bipartiteness decision with constructive witnesses on both sides.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("bipartition has {got} entries, graph has {expected} vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("edge {{{0}, {1}}} has both endpoints on the same side")]
    MonochromaticEdge(usize, usize),
    #[error("walk has even length {0}")]
    EvenLength(usize),
    #[error("walk is shorter than 3")]
    TooShort,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("walk positions {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
}

/// Two-sided split of a graph's vertices with every edge crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    /// Wraps a side array without checking it against any graph.
    pub fn new(side: Vec<Side>) -> Self {
        Bipartition { side }
    }

    /// Natural split of `K_{a,b}`-style graphs: the first `left` vertices on
    /// the left, the rest on the right.
    pub fn split_at(n: usize, left: usize) -> Self {
        Bipartition {
            side: (0..n)
                .map(|v| if v < left { Side::Left } else { Side::Right })
                .collect(),
        }
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    /// Vertices on the given side, ascending.
    pub fn members(&self, side: Side) -> Vec<usize> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == side)
            .collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), WitnessError> {
        if self.side.len() != g.num_vertices() {
            return Err(WitnessError::WrongLength {
                expected: g.num_vertices(),
                got: self.side.len(),
            });
        }
        for &(a, b) in g.edges() {
            if self.side[a] == self.side[b] {
                return Err(WitnessError::MonochromaticEdge(a, b));
            }
        }
        Ok(())
    }
}

/// Closed walk `c_0, ..., c_{k-1}` of odd length `k >= 3`; consecutive
/// vertices (cyclically) are adjacent. Vertices may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddClosedWalk {
    verts: Vec<usize>,
}

impl OddClosedWalk {
    pub fn new(verts: Vec<usize>) -> Self {
        OddClosedWalk { verts }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), WitnessError> {
        let k = self.verts.len();
        if k < 3 {
            return Err(WitnessError::TooShort);
        }
        if k % 2 == 0 {
            return Err(WitnessError::EvenLength(k));
        }
        if let Some(&v) = self.verts.iter().find(|&&v| v >= g.num_vertices()) {
            return Err(WitnessError::UnknownVertex(v));
        }
        for i in 0..k {
            let j = (i + 1) % k;
            if !g.adjacent(self.verts[i], self.verts[j]) {
                return Err(WitnessError::NotAdjacent(i, j));
            }
        }
        Ok(())
    }
}

/// Outcome of [`is_bipartite`]: exactly one of the two witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteWitness {
    Bipartite(Bipartition),
    OddWalk(OddClosedWalk),
}

impl BipartiteWitness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartiteWitness::Bipartite(_))
    }
}

/// Decides bipartiteness by BFS layering, component by component from the
/// lowest unvisited root.
///
/// Vertices at even depth go to [`Side::Left`]. The first edge found inside a
/// layer closes an odd cycle through the lowest common BFS ancestor of its
/// endpoints; that cycle is returned as the odd walk.
pub fn is_bipartite(g: &Graph) -> BipartiteWitness {
    let n = g.num_vertices();
    let mut depth: Vec<Option<usize>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if depth[root].is_some() {
            continue;
        }
        depth[root] = Some(0);
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            let dx = depth[x].unwrap();
            for &y in g.neighbors(x) {
                match depth[y] {
                    None => {
                        depth[y] = Some(dx + 1);
                        parent[y] = x;
                        queue.push_back(y);
                    }
                    Some(dy) if dy % 2 == dx % 2 => {
                        return BipartiteWitness::OddWalk(close_odd_cycle(&parent, x, y));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let side = depth
        .into_iter()
        .map(|d| match d {
            Some(d) if d % 2 == 1 => Side::Right,
            _ => Side::Left,
        })
        .collect();
    BipartiteWitness::Bipartite(Bipartition { side })
}

/// `x` and `y` are adjacent and at equal BFS depth (an edge between layers of
/// equal parity in BFS always joins the same layer).
fn close_odd_cycle(parent: &[usize], x: usize, y: usize) -> OddClosedWalk {
    let mut up_x = vec![x];
    let mut up_y = vec![y];
    let (mut a, mut b) = (x, y);
    while a != b {
        a = parent[a];
        b = parent[b];
        up_x.push(a);
        up_y.push(b);
    }
    // up_x and up_y now both end at the common ancestor.
    up_y.pop();
    let mut verts: Vec<usize> = up_x.into_iter().rev().collect();
    verts.extend(up_y);
    OddClosedWalk { verts }
}
