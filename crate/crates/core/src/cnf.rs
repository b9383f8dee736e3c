//! Literals, canonical clauses, clause sets and DIMACS I/O.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Propositional variable, numbered from 1 as in DIMACS.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub u32);

impl Var {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn pos(self) -> Lit {
        Lit(self.0 as i32)
    }

    pub fn neg(self) -> Lit {
        Lit(-(self.0 as i32))
    }
}

/// Signed DIMACS literal; never zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lit(i32);

impl Lit {
    pub fn from_dimacs(value: i32) -> Option<Lit> {
        (value != 0).then_some(Lit(value))
    }

    pub fn to_dimacs(self) -> i32 {
        self.0
    }

    pub fn var(self) -> Var {
        Var(self.0.unsigned_abs())
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn negate(self) -> Lit {
        Lit(-self.0)
    }
}

impl Ord for Lit {
    /// Ascending by variable, negative before positive.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.unsigned_abs(), self.0 > 0).cmp(&(other.0.unsigned_abs(), other.0 > 0))
    }
}

impl PartialOrd for Lit {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Clause as a sorted, duplicate-free literal sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Clause(Vec<Lit>);

impl Clause {
    pub fn new<I: IntoIterator<Item = Lit>>(lits: I) -> Self {
        let mut lits: Vec<Lit> = lits.into_iter().collect();
        lits.sort_unstable();
        lits.dedup();
        Clause(lits)
    }

    /// Builds a clause from DIMACS integers; panics on 0.
    pub fn from_dimacs(lits: &[i32]) -> Self {
        Clause::new(lits.iter().map(|&l| Lit::from_dimacs(l).expect("literal 0")))
    }

    pub fn empty() -> Self {
        Clause(Vec::new())
    }

    pub fn lits(&self) -> &[Lit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, lit: Lit) -> bool {
        self.0.binary_search(&lit).is_ok()
    }

    pub fn is_tautology(&self) -> bool {
        self.0.windows(2).any(|w| w[0].var() == w[1].var())
    }

    pub fn max_var(&self) -> u32 {
        self.0.iter().map(|l| l.var().0).max().unwrap_or(0)
    }

    /// Every literal of `self` also occurs in `other`.
    pub fn subsumes(&self, other: &Clause) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for l in &self.0 {
            for o in it.by_ref() {
                if o == l {
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    pub fn to_dimacs(&self) -> Vec<i32> {
        self.0.iter().map(|l| l.0).collect()
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Lit> for Clause {
    fn from_iter<T: IntoIterator<Item = Lit>>(iter: T) -> Self {
        Clause::new(iter)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("malformed DIMACS at line {0}")]
    MalformedDimacs(usize),
    #[error("literal {lit} exceeds declared variable count {num_vars}")]
    VariableOutOfRange { lit: i32, num_vars: u32 },
    #[error("clause {0:?} is tautological")]
    Tautology(Clause),
    #[error("duplicate clause {0:?}")]
    DuplicateClause(Clause),
}

/// Duplicate-free list of canonical, non-tautological clauses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    num_vars: u32,
    clauses: Vec<Clause>,
    index: HashSet<Clause>,
}

impl CnfInstance {
    pub fn empty(num_vars: u32) -> Self {
        CnfInstance {
            num_vars,
            clauses: Vec::new(),
            index: HashSet::new(),
        }
    }

    /// Validates every clause against the instance invariants.
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<Self, CnfError> {
        let mut cnf = CnfInstance::empty(num_vars);
        for c in clauses {
            cnf.try_push(c)?;
        }
        Ok(cnf)
    }

    /// Appends a clause, rejecting tautologies, duplicates and out-of-range
    /// variables.
    pub fn try_push(&mut self, clause: Clause) -> Result<(), CnfError> {
        if let Some(l) = clause.lits().iter().find(|l| l.var().0 > self.num_vars) {
            return Err(CnfError::VariableOutOfRange {
                lit: l.to_dimacs(),
                num_vars: self.num_vars,
            });
        }
        if clause.is_tautology() {
            return Err(CnfError::Tautology(clause));
        }
        if self.index.contains(&clause) {
            return Err(CnfError::DuplicateClause(clause));
        }
        self.index.insert(clause.clone());
        self.clauses.push(clause);
        Ok(())
    }

    /// Appends a clause unless an equal one is already present. Returns
    /// whether it was added.
    pub(crate) fn push_dedup(&mut self, clause: Clause) -> bool {
        debug_assert!(!clause.is_tautology());
        debug_assert!(clause.max_var() <= self.num_vars);
        if self.index.contains(&clause) {
            return false;
        }
        self.index.insert(clause.clone());
        self.clauses.push(clause);
        true
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn contains(&self, clause: &Clause) -> bool {
        self.index.contains(clause)
    }

    /// Position of `clause` in the clause list.
    pub fn position(&self, clause: &Clause) -> Option<usize> {
        if !self.contains(clause) {
            return None;
        }
        self.clauses.iter().position(|c| c == clause)
    }

    /// Clause set view, ignoring order.
    pub fn clause_set(&self) -> &HashSet<Clause> {
        &self.index
    }

    /// Same clauses sorted canonically.
    pub fn canonical(&self) -> CnfInstance {
        let mut clauses = self.clauses.clone();
        clauses.sort();
        CnfInstance {
            num_vars: self.num_vars,
            clauses,
            index: self.index.clone(),
        }
    }

    /// True iff `assignment[v]` (indexed by variable, slot 0 unused)
    /// satisfies every clause.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.lits()
                .iter()
                .any(|l| assignment[l.var().index()] == l.is_positive())
        })
    }

    /// DIMACS text: header, one clause per line, terminating 0, trailing
    /// newline.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c.lits() {
                out.push_str(&l.0.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }

    /// Parses DIMACS cnf with one clause per line. `c` lines are comments.
    /// A `0` anywhere but at the end of a clause line is rejected, as are
    /// out-of-range variables, tautologies, duplicates and a clause count
    /// disagreeing with the header.
    pub fn parse_dimacs(text: &str) -> Result<Self, CnfError> {
        let mut cnf: Option<CnfInstance> = None;
        let mut declared = 0usize;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            last_line = lineno;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let bad = || CnfError::MalformedDimacs(lineno);
            if line.starts_with('p') {
                let fields: Vec<&str> = line.split_whitespace().collect();
                match (cnf.is_some(), fields.as_slice()) {
                    (false, ["p", "cnf", v, c]) => {
                        let v: u32 = v.parse().map_err(|_| bad())?;
                        declared = c.parse().map_err(|_| bad())?;
                        cnf = Some(CnfInstance::empty(v));
                    }
                    _ => return Err(bad()),
                }
                continue;
            }
            let inst = cnf.as_mut().ok_or_else(bad)?;
            let nums: Vec<i32> = line
                .split_whitespace()
                .map(|t| t.parse::<i32>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?;
            match nums.split_last() {
                Some((0, body)) if !body.contains(&0) => {
                    let clause = Clause::from_dimacs(body);
                    inst.try_push(clause).map_err(|_| bad())?;
                }
                _ => return Err(bad()),
            }
        }
        let cnf = cnf.ok_or(CnfError::MalformedDimacs(last_line.max(1)))?;
        if cnf.num_clauses() != declared {
            return Err(CnfError::MalformedDimacs(last_line.max(1)));
        }
        Ok(cnf)
    }
}

/// Bijection between pairs `(v, u)` and DIMACS variables `v * n_target + u + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarMap {
    pub n_source: usize,
    pub n_target: usize,
}

impl VarMap {
    pub fn new(n_source: usize, n_target: usize) -> Self {
        VarMap { n_source, n_target }
    }

    pub fn num_vars(&self) -> u32 {
        (self.n_source * self.n_target) as u32
    }

    pub fn var(&self, v: usize, u: usize) -> Var {
        debug_assert!(v < self.n_source && u < self.n_target);
        Var((v * self.n_target + u + 1) as u32)
    }

    pub fn decode(&self, var: Var) -> Option<(usize, usize)> {
        let i = var.index().checked_sub(1)?;
        let v = i / self.n_target;
        (v < self.n_source).then_some((v, i % self.n_target))
    }

    /// Reads a vertex map off a satisfying assignment (slot 0 unused). Each
    /// source vertex takes the lowest target set true, if any.
    pub fn decode_assignment(&self, assignment: &[bool]) -> Option<Vec<usize>> {
        (0..self.n_source)
            .map(|v| (0..self.n_target).find(|&u| assignment[self.var(v, u).index()]))
            .collect()
    }
}
