//! Instrumented DPLL without clause learning.
//!
//! Branching is fixed: the lowest-numbered unassigned variable, true first.
//! Unit propagation (two watched literals) runs to fixpoint before every
//! decision, and conflicts backtrack chronologically by flipping the most
//! recent decision not yet flipped.

use std::time::Instant;

use crate::cnf::{CnfInstance, Lit};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SolveStats {
    pub decisions: u64,
    pub conflicts: u64,
    pub propagations: u64,
    pub time_ms: f64,
}

impl SolveStats {
    /// Counters only; timing differs between runs.
    pub fn counters(&self) -> (u64, u64, u64) {
        (self.decisions, self.conflicts, self.propagations)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    /// Total assignment indexed by variable; slot 0 is unused.
    Sat(Vec<bool>),
    Unsat,
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveResult::Sat(_))
    }
}

pub fn dpll_solve(cnf: &CnfInstance) -> (SolveResult, SolveStats) {
    dpll_solve_with(cnf, &[])
}

/// Solves `cnf` with `assumptions` fixed as top-level units.
pub fn dpll_solve_with(cnf: &CnfInstance, assumptions: &[Lit]) -> (SolveResult, SolveStats) {
    let start = Instant::now();
    let mut solver = Dpll::new(cnf.num_vars() as usize);
    let ok = solver.load(cnf, assumptions);
    let result = if ok { solver.search() } else { SolveResult::Unsat };
    if let SolveResult::Sat(assignment) = &result {
        assert!(
            cnf.is_satisfied_by(assignment)
                && assumptions
                    .iter()
                    .all(|l| assignment[l.var().index()] == l.is_positive()),
            "DPLL produced a non-satisfying assignment"
        );
    }
    solver.stats.time_ms = start.elapsed().as_secs_f64() * 1e3;
    (result, solver.stats)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Value {
    Unassigned,
    True,
    False,
}

struct Decision {
    trail_pos: usize,
    flipped: bool,
}

struct Dpll {
    num_vars: usize,
    values: Vec<Value>,
    clauses: Vec<Vec<Lit>>,
    /// Indexed by literal code; clauses watching that literal.
    watches: Vec<Vec<usize>>,
    trail: Vec<Lit>,
    qhead: usize,
    decisions: Vec<Decision>,
    stats: SolveStats,
}

fn code(l: Lit) -> usize {
    2 * l.var().index() + l.is_negative() as usize
}

impl Dpll {
    fn new(num_vars: usize) -> Self {
        Dpll {
            num_vars,
            values: vec![Value::Unassigned; num_vars + 1],
            clauses: Vec::new(),
            watches: vec![Vec::new(); 2 * (num_vars + 1)],
            trail: Vec::new(),
            qhead: 0,
            decisions: Vec::new(),
            stats: SolveStats::default(),
        }
    }

    fn value(&self, l: Lit) -> Value {
        match (self.values[l.var().index()], l.is_positive()) {
            (Value::Unassigned, _) => Value::Unassigned,
            (Value::True, true) | (Value::False, false) => Value::True,
            _ => Value::False,
        }
    }

    fn assign(&mut self, l: Lit) {
        self.values[l.var().index()] = if l.is_positive() { Value::True } else { Value::False };
        self.trail.push(l);
    }

    /// Returns false if the instance is trivially unsatisfiable.
    fn load(&mut self, cnf: &CnfInstance, assumptions: &[Lit]) -> bool {
        let units = assumptions
            .iter()
            .copied()
            .chain(cnf.clauses().iter().filter(|c| c.len() == 1).map(|c| c.lits()[0]));
        for l in units.collect::<Vec<_>>() {
            match self.value(l) {
                Value::False => return false,
                Value::True => {}
                Value::Unassigned => self.assign(l),
            }
        }
        for c in cnf.clauses() {
            match c.len() {
                0 => return false,
                1 => {}
                _ => {
                    let idx = self.clauses.len();
                    self.watches[code(c.lits()[0])].push(idx);
                    self.watches[code(c.lits()[1])].push(idx);
                    self.clauses.push(c.lits().to_vec());
                }
            }
        }
        true
    }

    /// Unit propagation to fixpoint; returns whether a conflict occurred.
    fn propagate(&mut self) -> bool {
        while self.qhead < self.trail.len() {
            let falsified = self.trail[self.qhead].negate();
            self.qhead += 1;
            let mut watchers = std::mem::take(&mut self.watches[code(falsified)]);
            let mut i = 0;
            let mut conflict = false;
            while i < watchers.len() {
                let ci = watchers[i];
                if self.clauses[ci][0] == falsified {
                    self.clauses[ci].swap(0, 1);
                }
                let first = self.clauses[ci][0];
                if self.value(first) == Value::True {
                    i += 1;
                    continue;
                }
                let replacement = (2..self.clauses[ci].len())
                    .find(|&k| self.value(self.clauses[ci][k]) != Value::False);
                if let Some(k) = replacement {
                    self.clauses[ci].swap(1, k);
                    let new_watch = self.clauses[ci][1];
                    self.watches[code(new_watch)].push(ci);
                    watchers.swap_remove(i);
                    continue;
                }
                if self.value(first) == Value::False {
                    conflict = true;
                    break;
                }
                self.assign(first);
                self.stats.propagations += 1;
                i += 1;
            }
            self.watches[code(falsified)] = watchers;
            if conflict {
                return true;
            }
        }
        false
    }

    fn undo_to(&mut self, pos: usize) {
        for l in self.trail.drain(pos..) {
            self.values[l.var().index()] = Value::Unassigned;
        }
        self.qhead = pos;
    }

    fn search(&mut self) -> SolveResult {
        let mut next_var = 1;
        loop {
            if self.propagate() {
                self.stats.conflicts += 1;
                loop {
                    match self.decisions.pop() {
                        None => return SolveResult::Unsat,
                        Some(d) if d.flipped => {}
                        Some(d) => {
                            let lit = self.trail[d.trail_pos];
                            self.undo_to(d.trail_pos);
                            self.decisions.push(Decision {
                                trail_pos: d.trail_pos,
                                flipped: true,
                            });
                            self.assign(lit.negate());
                            next_var = 1;
                            break;
                        }
                    }
                }
                continue;
            }
            while next_var <= self.num_vars && self.values[next_var] != Value::Unassigned {
                next_var += 1;
            }
            if next_var > self.num_vars {
                let assignment = self.values.iter().map(|&v| v == Value::True).collect();
                return SolveResult::Sat(assignment);
            }
            self.stats.decisions += 1;
            self.decisions.push(Decision {
                trail_pos: self.trail.len(),
                flipped: false,
            });
            self.assign(crate::cnf::Var(next_var as u32).pos());
        }
    }
}
