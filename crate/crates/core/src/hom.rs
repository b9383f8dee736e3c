//! Graph homomorphisms: checking, exhaustive search, composition and the
//! homomorphism into `K_2` induced by a bipartition.

use thiserror::Error;

use crate::bipartite::{Bipartition, Side, WitnessError};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("search space {size} exceeds budget {limit}")]
    BudgetExceeded { size: String, limit: u128 },
    #[error("invalid witness: {0}")]
    InvalidWitness(#[from] WitnessError),
}

/// Total vertex map from a source graph into a target graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(map: Vec<usize>) -> Self {
        Homomorphism { map }
    }

    pub fn identity(n: usize) -> Self {
        Homomorphism {
            map: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, target: usize) -> Self {
        Homomorphism {
            map: vec![target; n],
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `h <v> <u>` lines, 1-based.
    pub fn to_text(&self) -> String {
        self.map
            .iter()
            .enumerate()
            .map(|(v, u)| format!("h {} {}\n", v + 1, u + 1))
            .collect()
    }
}

/// True iff `h` maps every edge of `g` onto an edge of `h_graph`.
pub fn check_homomorphism(g: &Graph, target: &Graph, h: &Homomorphism) -> Result<bool, HomError> {
    if h.len() != g.num_vertices() {
        return Err(HomError::DimensionMismatch {
            expected: g.num_vertices(),
            got: h.len(),
        });
    }
    if let Some(&u) = h.map.iter().find(|&&u| u >= target.num_vertices()) {
        return Err(HomError::DimensionMismatch {
            expected: target.num_vertices(),
            got: u + 1,
        });
    }
    Ok(g
        .edges()
        .iter()
        .all(|&(a, b)| target.adjacent(h.map[a], h.map[b])))
}

/// Exhaustive backtracking search for a homomorphism `g -> target`, trying
/// images in ascending order for vertices in ascending order.
///
/// The search is refused when `target.n ^ g.n` exceeds `limit`.
pub fn find_homomorphism(
    g: &Graph,
    target: &Graph,
    limit: u128,
) -> Result<Option<Homomorphism>, HomError> {
    let n = g.num_vertices();
    let m = target.num_vertices();
    let size = u32::try_from(n)
        .ok()
        .and_then(|e| (m as u128).checked_pow(e));
    match size {
        Some(s) if s <= limit => {}
        Some(s) => {
            return Err(HomError::BudgetExceeded {
                size: s.to_string(),
                limit,
            })
        }
        None => {
            return Err(HomError::BudgetExceeded {
                size: format!("{m}^{n}"),
                limit,
            })
        }
    }

    let mut map = vec![0usize; n];
    if extend(g, target, &mut map, 0) {
        Ok(Some(Homomorphism { map }))
    } else {
        Ok(None)
    }
}

fn extend(g: &Graph, target: &Graph, map: &mut [usize], v: usize) -> bool {
    if v == map.len() {
        return true;
    }
    for u in 0..target.num_vertices() {
        let consistent = g
            .neighbors(v)
            .iter()
            .take_while(|&&w| w < v)
            .all(|&w| target.adjacent(map[w], u));
        if consistent {
            map[v] = u;
            if extend(g, target, map, v + 1) {
                return true;
            }
        }
    }
    false
}

/// `i -> second(first(i))`.
pub fn compose(first: &Homomorphism, second: &Homomorphism) -> Result<Homomorphism, HomError> {
    if let Some(&u) = first.map.iter().find(|&&u| u >= second.len()) {
        return Err(HomError::DimensionMismatch {
            expected: second.len(),
            got: u + 1,
        });
    }
    Ok(Homomorphism {
        map: first.map.iter().map(|&u| second.map[u]).collect(),
    })
}

/// Homomorphism `g -> K_2` sending the left side to 0 and the right side to 1.
pub fn hom_from_bipartition(g: &Graph, b: &Bipartition) -> Result<Homomorphism, HomError> {
    b.validate(g)?;
    Ok(Homomorphism {
        map: b
            .sides()
            .iter()
            .map(|s| match s {
                Side::Left => 0,
                Side::Right => 1,
            })
            .collect(),
    })
}
