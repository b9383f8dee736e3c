//! Clause encodings of H-coloring and of general relational CSP instances.
//!
//! Variable `x(v, u)` is true iff source vertex `v` is mapped to target `u`.
//! The clause set has three families, emitted in this order:
//!
//! * (a) one at-least-one clause `x(v, 0) ∨ … ∨ x(v, m-1)` per source vertex;
//! * (b) one at-most-one clause `¬x(v, u1) ∨ ¬x(v, u2)` per vertex and pair
//!   `u1 < u2`;
//! * (c) one conflict clause `¬x(v1, u1) ∨ ¬x(v2, u2)` per related source
//!   tuple and unrelated target tuple (for graphs: per edge and ordered pair of
//!   non-adjacent targets, including `u1 = u2`).
//!
//! Duplicates (as literal sets) are dropped, keeping the first occurrence.

use std::collections::{BTreeMap, HashSet};

use thiserror::Error;

use crate::cnf::{Clause, CnfInstance, VarMap};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("target has no vertices")]
    EmptyTarget,
    #[error("vocabulary mismatch: {0}")]
    VocabularyMismatch(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
}

/// Encodes "there is a homomorphism `g -> h`" as CNF.
pub fn encode(g: &Graph, h: &Graph) -> Result<(CnfInstance, VarMap), EncodeError> {
    let m = h.num_vertices();
    if m == 0 {
        return Err(EncodeError::EmptyTarget);
    }
    let vm = VarMap::new(g.num_vertices(), m);
    let mut cnf = CnfInstance::empty(vm.num_vars());
    push_domain_clauses(&mut cnf, &vm);
    for &(v1, v2) in g.edges() {
        for u1 in 0..m {
            for u2 in 0..m {
                if !h.adjacent(u1, u2) {
                    cnf.push_dedup(Clause::new([vm.var(v1, u1).neg(), vm.var(v2, u2).neg()]));
                }
            }
        }
    }
    Ok((cnf, vm))
}

fn push_domain_clauses(cnf: &mut CnfInstance, vm: &VarMap) {
    for v in 0..vm.n_source {
        cnf.push_dedup(Clause::new((0..vm.n_target).map(|u| vm.var(v, u).pos())));
    }
    for v in 0..vm.n_source {
        for u1 in 0..vm.n_target {
            for u2 in u1 + 1..vm.n_target {
                cnf.push_dedup(Clause::new([vm.var(v, u1).neg(), vm.var(v, u2).neg()]));
            }
        }
    }
}

/// Finite relational structure: a universe `0..size` with named relations of
/// fixed arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelStructure {
    size: usize,
    relations: BTreeMap<String, Relation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Relation {
    arity: usize,
    tuples: Vec<Vec<usize>>,
    members: HashSet<Vec<usize>>,
}

impl RelStructure {
    pub fn new(size: usize) -> Self {
        RelStructure {
            size,
            relations: BTreeMap::new(),
        }
    }

    /// Adds (or extends) relation `name`. Tuples are kept in insertion order
    /// without duplicates.
    pub fn add_relation<I>(&mut self, name: &str, arity: usize, tuples: I) -> Result<(), EncodeError>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let rel = self
            .relations
            .entry(name.to_string())
            .or_insert_with(|| Relation {
                arity,
                tuples: Vec::new(),
                members: HashSet::new(),
            });
        if rel.arity != arity {
            return Err(EncodeError::InvalidStructure(format!(
                "relation {name} declared with arity {} and {arity}",
                rel.arity
            )));
        }
        for t in tuples {
            if t.len() != arity {
                return Err(EncodeError::InvalidStructure(format!(
                    "tuple {t:?} does not have arity {arity}"
                )));
            }
            if let Some(&x) = t.iter().find(|&&x| x >= self.size) {
                return Err(EncodeError::InvalidStructure(format!(
                    "element {x} outside universe of size {}",
                    self.size
                )));
            }
            if rel.members.insert(t.clone()) {
                rel.tuples.push(t);
            }
        }
        Ok(())
    }

    /// Graph as a structure with one symmetric binary relation `E`, tuples in
    /// the order `(i, j), (j, i)` for each sorted edge.
    pub fn from_graph(g: &Graph) -> Self {
        let mut s = RelStructure::new(g.num_vertices());
        let tuples = g
            .edges()
            .iter()
            .flat_map(|&(a, b)| [vec![a, b], vec![b, a]]);
        s.add_relation("E", 2, tuples)
            .expect("graph edges are in range");
        s
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn relation_names(&self) -> impl Iterator<Item = &str> {
        self.relations.keys().map(String::as_str)
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.relations.get(name).map(|r| r.arity)
    }

    pub fn tuples(&self, name: &str) -> Option<&[Vec<usize>]> {
        self.relations.get(name).map(|r| r.tuples.as_slice())
    }

    pub fn holds(&self, name: &str, tuple: &[usize]) -> bool {
        self.relations
            .get(name)
            .is_some_and(|r| r.members.contains(tuple))
    }
}

/// CSP encoding over relational structures with the same vocabulary.
///
/// For relation `R` of arity `r`, every tuple of `R` in `source` and every
/// tuple of the target universe outside `R` (enumerated lexicographically)
/// contributes the clause `¬x(v_1, u_1) ∨ … ∨ ¬x(v_r, u_r)`.
pub fn encode_csp(
    source: &RelStructure,
    target: &RelStructure,
) -> Result<(CnfInstance, VarMap), EncodeError> {
    if target.size == 0 {
        return Err(EncodeError::EmptyTarget);
    }
    let src_names: Vec<_> = source.relations.iter().map(|(n, r)| (n, r.arity)).collect();
    let tgt_names: Vec<_> = target.relations.iter().map(|(n, r)| (n, r.arity)).collect();
    if src_names != tgt_names {
        return Err(EncodeError::VocabularyMismatch(format!(
            "{src_names:?} vs {tgt_names:?}"
        )));
    }

    let vm = VarMap::new(source.size, target.size);
    let mut cnf = CnfInstance::empty(vm.num_vars());
    push_domain_clauses(&mut cnf, &vm);
    for (name, rel) in &source.relations {
        let trel = &target.relations[name];
        let outside: Vec<Vec<usize>> = tuples_of(target.size, rel.arity)
            .filter(|t| !trel.members.contains(t))
            .collect();
        for s in &rel.tuples {
            for t in &outside {
                let clause = Clause::new(s.iter().zip(t).map(|(&v, &u)| vm.var(v, u).neg()));
                // a repeated source element with two different targets can
                // only produce a negative clause, never a tautology
                cnf.push_dedup(clause);
            }
        }
    }
    Ok((cnf, vm))
}

/// All tuples over `0..size` of the given arity, lexicographically.
fn tuples_of(size: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = size.checked_pow(arity as u32).expect("tuple space overflows");
    (0..total).map(move |mut code| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = code % size;
            code /= size;
        }
        t
    })
}
