//! Pigeonhole formulas and the DPLL benchmark over `PHP^{n+1}_n`.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::cnf::{Clause, CnfInstance, Var};
use crate::solver::{dpll_solve, SolveResult};

/// `m` pigeons, `n` holes; atom `p(i, j)` ("pigeon i sits in hole j") is
/// variable `i * n + j + 1`.
///
/// Clauses: every pigeon sits somewhere, no pigeon sits in two holes, no hole
/// holds two pigeons.
pub fn gen_php(pigeons: usize, holes: usize) -> CnfInstance {
    assert!(pigeons >= 1 && holes >= 1, "PHP needs at least one pigeon and one hole");
    let atom = |i: usize, j: usize| Var((i * holes + j + 1) as u32);
    let mut clauses = Vec::new();
    for i in 0..pigeons {
        clauses.push(Clause::new((0..holes).map(|j| atom(i, j).pos())));
    }
    for i in 0..pigeons {
        for j in 0..holes {
            for j2 in j + 1..holes {
                clauses.push(Clause::new([atom(i, j).neg(), atom(i, j2).neg()]));
            }
        }
    }
    for j in 0..holes {
        for i in 0..pigeons {
            for i2 in i + 1..pigeons {
                clauses.push(Clause::new([atom(i, j).neg(), atom(i2, j).neg()]));
            }
        }
    }
    CnfInstance::new((pigeons * holes) as u32, clauses).expect("pigeonhole clauses are distinct")
}

pub const CSV_HEADER: &str = "pigeons,holes,vars,clauses,result,decisions,conflicts,propagations,time_ms";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub pigeons: usize,
    pub holes: usize,
    pub num_vars: u32,
    pub num_clauses: usize,
    pub sat: bool,
    pub decisions: u64,
    pub conflicts: u64,
    pub propagations: u64,
    pub time_ms: f64,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{:.3}",
            self.pigeons,
            self.holes,
            self.num_vars,
            self.num_clauses,
            if self.sat { "SAT" } else { "UNSAT" },
            self.decisions,
            self.conflicts,
            self.propagations,
            self.time_ms
        )
    }
}

pub fn solve_php(pigeons: usize, holes: usize) -> BenchRow {
    let cnf = gen_php(pigeons, holes);
    let (result, stats) = dpll_solve(&cnf);
    BenchRow {
        pigeons,
        holes,
        num_vars: cnf.num_vars(),
        num_clauses: cnf.num_clauses(),
        sat: matches!(result, SolveResult::Sat(_)),
        decisions: stats.decisions,
        conflicts: stats.conflicts,
        propagations: stats.propagations,
        time_ms: stats.time_ms,
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BenchError {
    /// The budget ran out before hole count `n` was solved; `rows` holds
    /// every completed row.
    #[error("time budget exhausted before n = {n}")]
    BudgetExceeded { n: usize, rows: Vec<BenchRow> },
    #[error("empty range {0}..={1}")]
    EmptyRange(usize, usize),
}

/// Solves `PHP^{n+1}_n` for `n` in `n_min..=n_max` in ascending order.
///
/// With a budget, the run stops after the first row that finishes past it
/// and reports the rows completed so far.
pub fn bench_php(n_min: usize, n_max: usize, budget: Option<Duration>) -> Result<Vec<BenchRow>, BenchError> {
    if n_min == 0 || n_min > n_max {
        return Err(BenchError::EmptyRange(n_min, n_max));
    }
    let start = Instant::now();
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        rows.push(solve_php(n + 1, n));
        if n < n_max && budget.is_some_and(|b| start.elapsed() > b) {
            return Err(BenchError::BudgetExceeded { n: n + 1, rows });
        }
    }
    Ok(rows)
}

/// Header plus one line per row, newline-terminated.
pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(out, "{}", r.to_csv()).unwrap();
    }
    out
}
