//! Interpolating circuits from resolution refutations of split clause sets.
//!
//! The clauses of a refuted CNF are split into an `A` part over shared
//! variables `p` and `A`-local variables `q`, and a `B` part over `p` and
//! `B`-local variables `r`. Walking the refutation, every step gets a gate:
//!
//! * `A` input clause: constant 0; `B` input clause: constant 1;
//! * pivot in `q`: `left OR right`; pivot in `r`: `left AND right`;
//! * pivot `x` in `p`: `(x AND neg) OR (NOT x AND pos)`, where `pos` / `neg`
//!   are the gates of the antecedents containing `x` / `¬x`.
//!
//! The gate of the empty clause computes `I(p)`: `I = 1` whenever `A` is
//! satisfiable under the `p` assignment, and `B` is unsatisfiable whenever
//! `I = 1`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::cnf::{CnfInstance, Var};
use crate::proof::{check_refutation, CheckError, ResolutionProof};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpolationError {
    /// Clause (0-based index into the CNF) uses a local variable of the
    /// other side.
    #[error("clause {0} mixes A-local and B-local variables")]
    MixedClause(usize),
    #[error("clause {0} is not assigned to exactly one of A and B")]
    NotAPartition(usize),
    #[error("split is invalid: {0}")]
    SplitInvalid(Box<InterpolationError>),
    #[error("proof is not a refutation: {0}")]
    NotARefutation(CheckError),
    #[error("input {0:?} has no value")]
    UnboundInput(Var),
    #[error("malformed {what} at line {line}")]
    Malformed { what: &'static str, line: usize },
}

/// A refutable CNF whose clauses are partitioned into `A` and `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitInstance {
    pub cnf: CnfInstance,
    pub p_vars: BTreeSet<Var>,
    /// 0-based clause indices.
    pub a_clauses: Vec<usize>,
    pub b_clauses: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Part {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VarClass {
    Shared,
    LocalA,
    LocalB,
}

impl SplitInstance {
    pub fn new(cnf: CnfInstance, p_vars: BTreeSet<Var>, a_clauses: Vec<usize>, b_clauses: Vec<usize>) -> Self {
        SplitInstance {
            cnf,
            p_vars,
            a_clauses,
            b_clauses,
        }
    }

    fn parts(&self) -> Result<Vec<Part>, InterpolationError> {
        let n = self.cnf.num_clauses();
        let mut parts = vec![None; n];
        for (list, part) in [(&self.a_clauses, Part::A), (&self.b_clauses, Part::B)] {
            for &i in list {
                match parts.get_mut(i) {
                    Some(slot @ None) => *slot = Some(part),
                    _ => return Err(InterpolationError::NotAPartition(i)),
                }
            }
        }
        parts
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or(InterpolationError::NotAPartition(i)))
            .collect()
    }

    /// Checks the variable scoping of every clause. Clauses are scanned in
    /// index order; a non-shared variable belongs to the side that uses it
    /// first, and a later clause of the other side using it is reported.
    pub fn validate(&self) -> Result<(), InterpolationError> {
        self.classify().map(|_| ())
    }

    /// Effective shared variables: the declared `p` plus variables that occur
    /// in no clause.
    pub fn shared_vars(&self) -> BTreeSet<Var> {
        let used: BTreeSet<Var> = self
            .cnf
            .clauses()
            .iter()
            .flat_map(|c| c.lits().iter().map(|l| l.var()))
            .collect();
        (1..=self.cnf.num_vars())
            .map(Var)
            .filter(|v| self.p_vars.contains(v) || !used.contains(v))
            .collect()
    }

    fn classify(&self) -> Result<(Vec<Part>, HashMap<Var, VarClass>), InterpolationError> {
        let parts = self.parts()?;
        let mut class: HashMap<Var, VarClass> = self
            .shared_vars()
            .into_iter()
            .map(|v| (v, VarClass::Shared))
            .collect();
        for (i, c) in self.cnf.clauses().iter().enumerate() {
            let mine = match parts[i] {
                Part::A => VarClass::LocalA,
                Part::B => VarClass::LocalB,
            };
            for l in c.lits() {
                match *class.entry(l.var()).or_insert(mine) {
                    VarClass::Shared => {}
                    cls if cls == mine => {}
                    _ => return Err(InterpolationError::MixedClause(i)),
                }
            }
        }
        Ok((parts, class))
    }

    /// Split file: `p-vars: <ids>`, `a: <clause indices>`, `b: <clause
    /// indices>`, all 1-based. Empty lists are allowed.
    pub fn to_split_text(&self) -> String {
        let join = |it: &mut dyn Iterator<Item = usize>| {
            it.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        };
        format!(
            "p-vars: {}\na: {}\nb: {}\n",
            join(&mut self.p_vars.iter().map(|v| v.index())),
            join(&mut self.a_clauses.iter().map(|i| i + 1)),
            join(&mut self.b_clauses.iter().map(|i| i + 1)),
        )
    }

    pub fn parse_split(text: &str, cnf: CnfInstance) -> Result<Self, InterpolationError> {
        let mut p_vars = None;
        let mut a = None;
        let mut b = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let bad = || InterpolationError::Malformed { what: "split", line: idx + 1 };
            let (key, rest) = line.split_once(':').ok_or_else(bad)?;
            let nums: Vec<usize> = rest
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?;
            if nums.contains(&0) {
                return Err(bad());
            }
            let slot = match key.trim() {
                "p-vars" => &mut p_vars,
                "a" => &mut a,
                "b" => &mut b,
                _ => return Err(bad()),
            };
            if slot.replace(nums).is_some() {
                return Err(bad());
            }
        }
        let missing = |_| InterpolationError::Malformed { what: "split", line: text.lines().count() };
        let p_vars: Vec<usize> = p_vars.ok_or(()).map_err(missing)?;
        let a: Vec<usize> = a.ok_or(()).map_err(missing)?;
        let b: Vec<usize> = b.ok_or(()).map_err(missing)?;
        Ok(SplitInstance {
            p_vars: p_vars.into_iter().map(|v| Var(v as u32)).collect(),
            a_clauses: a.into_iter().map(|i| i - 1).collect(),
            b_clauses: b.into_iter().map(|i| i - 1).collect(),
            cnf,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    Input(Var),
    Const(bool),
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
}

/// Boolean circuit as a gate list in topological order (inputs of gate `i`
/// have ids `< i`) with a single output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    gates: Vec<Gate>,
    output: usize,
}

impl Circuit {
    /// Checks acyclicity (inputs precede each gate) and the output id.
    pub fn new(gates: Vec<Gate>, output: usize) -> Result<Self, InterpolationError> {
        let bad = |line| InterpolationError::Malformed { what: "circuit", line };
        for (i, g) in gates.iter().enumerate() {
            let ok = match *g {
                Gate::Input(_) | Gate::Const(_) => true,
                Gate::Not(a) => a < i,
                Gate::And(a, b) | Gate::Or(a, b) => a < i && b < i,
            };
            if !ok {
                return Err(bad(i + 1));
            }
        }
        if output >= gates.len() {
            return Err(bad(gates.len() + 1));
        }
        Ok(Circuit { gates, output })
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    pub fn size(&self) -> usize {
        self.gates.len()
    }

    pub fn inputs(&self) -> BTreeSet<Var> {
        self.gates
            .iter()
            .filter_map(|g| match g {
                Gate::Input(v) => Some(*v),
                _ => None,
            })
            .collect()
    }

    /// Evaluates gates in order under `alpha`.
    pub fn eval(&self, alpha: &BTreeMap<Var, bool>) -> Result<bool, InterpolationError> {
        let mut values: Vec<bool> = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            let v = match *g {
                Gate::Input(x) => *alpha.get(&x).ok_or(InterpolationError::UnboundInput(x))?,
                Gate::Const(b) => b,
                Gate::Not(a) => !values[a],
                Gate::And(a, b) => values[a] && values[b],
                Gate::Or(a, b) => values[a] || values[b],
            };
            values.push(v);
        }
        Ok(values[self.output])
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, g) in self.gates.iter().enumerate() {
            let line = match *g {
                Gate::Input(v) => format!("g {i} INPUT {}", v.0),
                Gate::Const(b) => format!("g {i} CONST {}", b as u8),
                Gate::Not(a) => format!("g {i} NOT {a}"),
                Gate::And(a, b) => format!("g {i} AND {a} {b}"),
                Gate::Or(a, b) => format!("g {i} OR {a} {b}"),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!("out {}\n", self.output));
        out
    }

    pub fn parse(text: &str) -> Result<Self, InterpolationError> {
        let mut gates = Vec::new();
        let mut output = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let bad = || InterpolationError::Malformed { what: "circuit", line: idx + 1 };
            let f: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
            match f.as_slice() {
                ["out", id] if output.is_none() => output = Some(num(id)?),
                ["g", id, kind, args @ ..] if output.is_none() && num(id)? == gates.len() => {
                    let gate = match (*kind, args) {
                        ("INPUT", [v]) => Gate::Input(Var(num(v)? as u32)),
                        ("CONST", ["0"]) => Gate::Const(false),
                        ("CONST", ["1"]) => Gate::Const(true),
                        ("NOT", [a]) => Gate::Not(num(a)?),
                        ("AND", [a, b]) => Gate::And(num(a)?, num(b)?),
                        ("OR", [a, b]) => Gate::Or(num(a)?, num(b)?),
                        _ => return Err(bad()),
                    };
                    gates.push(gate);
                }
                _ => return Err(bad()),
            }
        }
        let output = output.ok_or(InterpolationError::Malformed {
            what: "circuit",
            line: text.lines().count(),
        })?;
        Circuit::new(gates, output)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn validate_split(s: &SplitInstance) -> Result<(), InterpolationError> {
    s.validate()
}

pub fn eval_circuit(c: &Circuit, alpha: &BTreeMap<Var, bool>) -> Result<bool, InterpolationError> {
    c.eval(alpha)
}

/// Gate-count bound for a proof with `steps` steps over `shared` shared
/// variables.
pub fn gate_bound(steps: usize, shared: usize) -> usize {
    4 * steps + 2 * shared + 2
}

/// Extracts an interpolant from a refutation of `s.cnf`.
pub fn interpolate(s: &SplitInstance, proof: &ResolutionProof) -> Result<Circuit, InterpolationError> {
    let (parts, class) = s
        .classify()
        .map_err(|e| InterpolationError::SplitInvalid(Box::new(e)))?;
    check_refutation(&s.cnf, proof).map_err(InterpolationError::NotARefutation)?;

    let mut gates = vec![Gate::Const(false), Gate::Const(true)];
    let mut input_gate: BTreeMap<Var, usize> = BTreeMap::new();
    let mut not_gate: BTreeMap<Var, usize> = BTreeMap::new();
    let mut step_gate: Vec<usize> = Vec::with_capacity(proof.len());
    for step in proof.steps() {
        let gate = match step.inference {
            None => {
                let idx = s.cnf.position(&step.clause).expect("checked input clause");
                match parts[idx] {
                    Part::A => 0,
                    Part::B => 1,
                }
            }
            Some(inf) => {
                let left = step_gate[inf.left - 1];
                let right = step_gate[inf.right - 1];
                match class.get(&inf.pivot).copied().unwrap_or(VarClass::Shared) {
                    VarClass::LocalA => push(&mut gates, Gate::Or(left, right)),
                    VarClass::LocalB => push(&mut gates, Gate::And(left, right)),
                    VarClass::Shared => {
                        let x = inf.pivot;
                        let (pos, neg) = if proof.clause(inf.left).contains(x.pos()) {
                            (left, right)
                        } else {
                            (right, left)
                        };
                        let xi = *input_gate
                            .entry(x)
                            .or_insert_with(|| push(&mut gates, Gate::Input(x)));
                        let nx = *not_gate
                            .entry(x)
                            .or_insert_with(|| push(&mut gates, Gate::Not(xi)));
                        let with_x = push(&mut gates, Gate::And(xi, neg));
                        let without_x = push(&mut gates, Gate::And(nx, pos));
                        push(&mut gates, Gate::Or(with_x, without_x))
                    }
                }
            }
        };
        step_gate.push(gate);
    }
    let output = *step_gate.last().expect("checked refutation is non-empty");
    Ok(Circuit { gates, output })
}

fn push(gates: &mut Vec<Gate>, g: Gate) -> usize {
    gates.push(g);
    gates.len() - 1
}
