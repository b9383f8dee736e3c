//! Bounded resolution saturation that returns checkable refutations.
//!
//! Given-clause loop: clauses are processed shortest first; a clause
//! subsumed by an active clause is dropped and active clauses it subsumes are
//! retired. Subsumption only prunes the search. Every clause ever derived
//! keeps its antecedents, so a refutation is rebuilt from the full derivation
//! record.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::cnf::{Clause, CnfInstance, Var};
use crate::proof::{clashing_vars, resolve, ResolutionProof};

pub const DEFAULT_VAR_BUDGET: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SaturateError {
    #[error("{num_vars} variables exceed saturation budget {budget}")]
    BudgetExceeded { num_vars: u32, budget: u32 },
}

struct Node {
    clause: Clause,
    parents: Option<(usize, usize, Var)>,
}

/// Saturates `cnf` under resolution. Returns a refutation if the empty
/// clause is derivable, `None` if the instance is satisfiable.
pub fn saturate(cnf: &CnfInstance, var_budget: u32) -> Result<Option<ResolutionProof>, SaturateError> {
    if cnf.num_vars() > var_budget {
        return Err(SaturateError::BudgetExceeded {
            num_vars: cnf.num_vars(),
            budget: var_budget,
        });
    }

    let mut nodes: Vec<Node> = Vec::new();
    let mut seen: HashMap<Clause, usize> = HashMap::new();
    // (len, node) ordering makes the passive queue shortest-first and
    // deterministic.
    let mut passive: BTreeSet<(usize, usize)> = BTreeSet::new();
    for c in cnf.clauses() {
        let id = nodes.len();
        seen.insert(c.clone(), id);
        nodes.push(Node {
            clause: c.clone(),
            parents: None,
        });
        passive.insert((c.len(), id));
    }

    let mut active: Vec<usize> = Vec::new();
    while let Some((_, given)) = passive.pop_first() {
        let clause = nodes[given].clause.clone();
        if clause.is_empty() {
            return Ok(Some(extract(&nodes, given)));
        }
        if active.iter().any(|&a| nodes[a].clause.subsumes(&clause)) {
            continue;
        }
        active.retain(|&a| !clause.subsumes(&nodes[a].clause));
        for &other in &active {
            let clashes = clashing_vars(&clause, &nodes[other].clause);
            let [pivot] = clashes.as_slice() else {
                continue;
            };
            let resolvent = resolve(&clause, &nodes[other].clause, *pivot)
                .expect("pivot clashes by construction");
            if seen.contains_key(&resolvent) {
                continue;
            }
            let id = nodes.len();
            seen.insert(resolvent.clone(), id);
            passive.insert((resolvent.len(), id));
            nodes.push(Node {
                clause: resolvent,
                parents: Some((given, other, *pivot)),
            });
        }
        active.push(given);
    }
    Ok(None)
}

/// Rebuilds the derivation of `root` as a proof with contiguous ids.
fn extract(nodes: &[Node], root: usize) -> ResolutionProof {
    let mut needed = BTreeSet::new();
    let mut stack = vec![root];
    while let Some(n) = stack.pop() {
        if needed.insert(n) {
            if let Some((a, b, _)) = nodes[n].parents {
                stack.push(a);
                stack.push(b);
            }
        }
    }
    // parents always have smaller node ids, so ascending order is topological
    let mut proof = ResolutionProof::new();
    let mut renumber = HashMap::new();
    for n in needed {
        let id = match nodes[n].parents {
            None => proof.push_input(nodes[n].clause.clone()),
            Some((a, b, pivot)) => proof
                .push_resolvent(renumber[&a], renumber[&b], pivot)
                .expect("recorded inference is valid"),
        };
        renumber.insert(n, id);
    }
    proof
}
