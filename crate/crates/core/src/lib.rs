//! H-coloring as a constraint satisfaction problem.
//!
//! * [`graph`], [`bipartite`], [`hom`]: graphs, bipartiteness with witnesses
//!   on both sides, homomorphism checking, search and composition.
//! * [`cnf`], [`encode`]: clause sets, DIMACS I/O and the encoding of
//!   `G -> H` (and general relational CSP) instances.
//! * [`proof`]: resolution proofs, the refutation checker and trace I/O.
//! * [`refute`]: polynomial-size refutations for non-bipartite sources and
//!   bipartite targets, and the certificate-producing decision pipeline.
//! * [`solver`], [`saturate`]: DPLL and resolution-saturation oracles.
//! * [`interpolate`]: interpolating circuits from split refutations.
//! * [`php`]: pigeonhole formulas and the DPLL benchmark.

pub mod bipartite;
pub mod cnf;
pub mod encode;
pub mod graph;
pub mod hom;
pub mod interpolate;
pub mod php;
pub mod proof;
pub mod refute;
pub mod saturate;
pub mod solver;

pub use bipartite::{is_bipartite, BipartiteWitness, Bipartition, OddClosedWalk, Side};
pub use cnf::{Clause, CnfInstance, Lit, Var, VarMap};
pub use encode::{encode, encode_csp, RelStructure};
pub use graph::Graph;
pub use hom::{check_homomorphism, compose, find_homomorphism, hom_from_bipartition, Homomorphism};
pub use interpolate::{eval_circuit, interpolate, validate_split, Circuit, Gate, SplitInstance};
pub use php::{bench_php, gen_php, BenchRow};
pub use proof::{check_refutation, is_tree_like, resolve, ResolutionProof};
pub use refute::{pipeline, refute, refute_edgeless, Certificate};
pub use saturate::saturate;
pub use solver::{dpll_solve, SolveResult, SolveStats};
