//! Explicit resolution refutations of `CNF(G, H)` for bipartite targets, and
//! the decision pipeline producing positive or negative certificates.
//!
//! For a non-bipartite `G` with odd closed walk `c_0, …, c_{k-1}` and a
//! bipartite `H` with sides `W | U`, the refutation walks around the cycle
//! keeping track of which side of `H` the current walk vertex must be mapped
//! to:
//!
//! 1. Transfer clauses `T_i(u) = ¬x(c_i, u) ∨ ⋁_{u' ∈ opp(u)} x(c_{i+1}, u')`:
//!    the neighbour of a vertex coloured `u` must take a colour on the other
//!    side.
//! 2. Chains `R_j(u)`: starting from `T_0(u)`, the positive literals at `c_j`
//!    are replaced through `T_j`, flipping side each step. After `k - 2`
//!    steps the positive part sits at `c_{k-1}` on `u`'s own side.
//! 3. The closing edge `{c_{k-1}, c_0}` removes those literals, leaving the
//!    unit `¬x(c_0, u)`.
//! 4. All units against the at-least-one clause of `c_0` give the empty
//!    clause.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::bipartite::{is_bipartite, BipartiteWitness, Bipartition, OddClosedWalk, Side, WitnessError};
use crate::cnf::{Clause, Var, VarMap};
use crate::graph::Graph;
use crate::hom::{check_homomorphism, compose, hom_from_bipartition, Homomorphism};
use crate::proof::ResolutionProof;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RefuteError {
    #[error("invalid witness: {0}")]
    InvalidWitness(#[from] WitnessError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("target graph is not bipartite (odd walk {0:?})")]
    TargetNotBipartite(OddClosedWalk),
}

/// Upper bound on the number of steps emitted by [`refute`] for a walk of
/// length `k` and a target with `m` vertices.
pub fn step_bound(k: usize, m: usize) -> usize {
    4 * k * m * m + 4 * m + 4
}

/// Proof under construction; identical clauses share one step.
struct Builder {
    proof: ResolutionProof,
    ids: HashMap<Clause, usize>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            proof: ResolutionProof::new(),
            ids: HashMap::new(),
        }
    }

    fn input(&mut self, clause: Clause) -> usize {
        if let Some(&id) = self.ids.get(&clause) {
            return id;
        }
        let id = self.proof.push_input(clause.clone());
        self.ids.insert(clause, id);
        id
    }

    fn resolve(&mut self, left: usize, right: usize, pivot: Var) -> usize {
        let clause = crate::proof::resolve(self.proof.clause(left), self.proof.clause(right), pivot)
            .expect("planned inference has a complementary pivot");
        debug_assert!(!clause.is_tautology(), "planned resolvent is tautological");
        if let Some(&id) = self.ids.get(&clause) {
            return id;
        }
        let id = self
            .proof
            .push_resolvent(left, right, pivot)
            .expect("planned inference has a complementary pivot");
        self.ids.insert(clause, id);
        id
    }
}

/// Refutation of `encode(g, h)` together with the ids of its landmark steps.
#[derive(Debug, Clone)]
pub struct RefutationPlan {
    /// Walk actually used (the supplied walk, possibly shortened so that
    /// `c_0` does not recur at an even position).
    pub walk: OddClosedWalk,
    pub partition: Bipartition,
    /// `(i, u) -> id` of transfer clause `T_i(u)`.
    pub transfers: BTreeMap<(usize, usize), usize>,
    /// `chains[u][j]` is the id of `R_j(u)`, `j` in `0..=k-2`.
    pub chains: Vec<Vec<usize>>,
    /// `units[u]` is the id of `¬x(c_0, u)`.
    pub units: Vec<usize>,
    pub proof: ResolutionProof,
}

/// Shortens the walk while its first vertex reappears at an even position
/// `p > 0`; the suffix from `p` is again an odd closed walk through `c_0`.
fn normalize_walk(walk: &OddClosedWalk) -> OddClosedWalk {
    let mut verts = walk.vertices().to_vec();
    while let Some(p) = (2..verts.len())
        .step_by(2)
        .find(|&p| verts[p] == verts[0])
    {
        verts.drain(..p);
    }
    OddClosedWalk::new(verts)
}

/// Builds the refutation of `encode(g, h)` from an odd closed walk in `g` and
/// a bipartition of `h`.
pub fn plan_refutation(
    g: &Graph,
    h: &Graph,
    walk: &OddClosedWalk,
    partition: &Bipartition,
) -> Result<RefutationPlan, RefuteError> {
    walk.validate(g)?;
    partition.validate(h)?;
    let walk = normalize_walk(walk);
    let c = walk.vertices();
    let k = c.len();
    let m = h.num_vertices();
    let vm = VarMap::new(g.num_vertices(), m);
    let x = |v: usize, u: usize| vm.var(v, u);
    let members = |s: Side| partition.members(s);
    let alo = |v: usize| Clause::new((0..m).map(|u| x(v, u).pos()));
    let conflict = |a: usize, ua: usize, b: usize, ub: usize| Clause::new([x(a, ua).neg(), x(b, ub).neg()]);

    let mut b = Builder::new();
    let mut transfers = BTreeMap::new();

    let mut transfer = |b: &mut Builder, i: usize, u: usize| -> usize {
        *transfers.entry((i, u)).or_insert_with(|| {
            let next = c[i + 1];
            let mut cur = b.input(alo(next));
            for w in members(partition.side(u)) {
                let e = b.input(conflict(c[i], u, next, w));
                cur = b.resolve(cur, e, x(next, w));
            }
            cur
        })
    };

    let mut chains = Vec::with_capacity(m);
    let mut units = Vec::with_capacity(m);
    for u in 0..m {
        let mut chain = Vec::with_capacity(k - 1);
        let mut cur = transfer(&mut b, 0, u);
        chain.push(cur);
        // positives of R_{j-1}(u) sit at c_j on this side
        let mut side = partition.side(u).flip();
        for j in 1..=k - 2 {
            for w in members(side) {
                let t = transfer(&mut b, j, w);
                cur = b.resolve(cur, t, x(c[j], w));
            }
            side = side.flip();
            chain.push(cur);
        }
        debug_assert_eq!(side, partition.side(u));
        for w in members(side) {
            let e = b.input(conflict(c[0], u, c[k - 1], w));
            cur = b.resolve(cur, e, x(c[k - 1], w));
        }
        chains.push(chain);
        units.push(cur);
    }
    let mut cur = b.input(alo(c[0]));
    for (u, &unit) in units.iter().enumerate() {
        cur = b.resolve(cur, unit, x(c[0], u));
    }
    debug_assert!(b.proof.clause(cur).is_empty());

    Ok(RefutationPlan {
        walk: walk.clone(),
        partition: partition.clone(),
        transfers,
        chains,
        units,
        proof: b.proof,
    })
}

/// Refutation of `encode(g, h)` for a non-bipartite `g` (witnessed by `walk`)
/// and bipartite `h` (witnessed by `partition`). At most
/// [`step_bound`]`(walk.len(), h.n)` steps.
pub fn refute(
    g: &Graph,
    h: &Graph,
    walk: &OddClosedWalk,
    partition: &Bipartition,
) -> Result<ResolutionProof, RefuteError> {
    plan_refutation(g, h, walk, partition).map(|p| p.proof)
}

/// Refutation of `encode(g, h)` when `h` has no edges and `{v1, v2}` is an
/// edge of `g`.
pub fn refute_edgeless(g: &Graph, h: &Graph, edge: (usize, usize)) -> Result<ResolutionProof, RefuteError> {
    if !h.is_edgeless() {
        return Err(RefuteError::PreconditionViolated("target has an edge"));
    }
    let (v1, v2) = edge;
    if !g.adjacent(v1, v2) {
        return Err(RefuteError::PreconditionViolated("supplied pair is not an edge of the source"));
    }
    let m = h.num_vertices();
    let vm = VarMap::new(g.num_vertices(), m);
    let alo = |v: usize| Clause::new((0..m).map(|u| vm.var(v, u).pos()));
    let mut b = Builder::new();
    let mut units = Vec::with_capacity(m);
    for u1 in 0..m {
        let mut cur = b.input(alo(v2));
        for u2 in 0..m {
            let e = b.input(Clause::new([vm.var(v1, u1).neg(), vm.var(v2, u2).neg()]));
            cur = b.resolve(cur, e, vm.var(v2, u2));
        }
        units.push(cur);
    }
    let mut cur = b.input(alo(v1));
    for (u1, &unit) in units.iter().enumerate() {
        cur = b.resolve(cur, unit, vm.var(v1, u1));
    }
    debug_assert!(b.proof.clause(cur).is_empty());
    Ok(b.proof)
}

/// Machine-checkable answer to "is there a homomorphism `G -> H`?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Positive(Homomorphism),
    Negative(ResolutionProof),
}

impl Certificate {
    pub fn is_positive(&self) -> bool {
        matches!(self, Certificate::Positive(_))
    }

    /// Witness map (`h <v> <u>` lines) or proof trace.
    pub fn to_text(&self) -> String {
        match self {
            Certificate::Positive(h) => h.to_text(),
            Certificate::Negative(p) => p.to_trace(),
        }
    }
}

/// Decides H-colorability of `g` for a bipartite target `h` and returns a
/// certificate for the answer.
pub fn pipeline(g: &Graph, h: &Graph) -> Result<Certificate, RefuteError> {
    let partition = match is_bipartite(h) {
        BipartiteWitness::Bipartite(b) => b,
        BipartiteWitness::OddWalk(w) => return Err(RefuteError::TargetNotBipartite(w)),
    };
    if g.is_edgeless() {
        return Ok(Certificate::Positive(Homomorphism::constant(g.num_vertices(), 0)));
    }
    let Some(&(a, b)) = h.edges().first() else {
        let edge = g.edges()[0];
        return refute_edgeless(g, h, edge).map(Certificate::Negative);
    };
    match is_bipartite(g) {
        BipartiteWitness::Bipartite(split) => {
            let to_k2 = hom_from_bipartition(g, &split).expect("bipartition from is_bipartite is valid");
            let hom = compose(&to_k2, &Homomorphism::new(vec![a, b])).expect("K_2 images are in range");
            debug_assert!(check_homomorphism(g, h, &hom).unwrap_or(false));
            Ok(Certificate::Positive(hom))
        }
        BipartiteWitness::OddWalk(walk) => refute(g, h, &walk, &partition).map(Certificate::Negative),
    }
}
