//! Resolution proofs: the resolution rule, an independent refutation checker,
//! tree-likeness and the trace text format.
//!
//! Trace lines (ids ascending from 1, single spaces):
//!
//! ```text
//! <id> <lits...> 0 0                 input clause
//! <id> <lits...> 0 <ant1> <ant2> 0   resolvent of two earlier steps
//! ```

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::cnf::{Clause, CnfInstance, Lit, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("pivot {0:?} missing from an antecedent")]
    PivotMissing(Var),
    #[error("pivot {0:?} occurs with the same sign in both antecedents")]
    PivotSameSign(Var),
}

/// Resolves `c1` and `c2` on `pivot`, which must occur positively in one and
/// negatively in the other. The resolvent may be tautological.
pub fn resolve(c1: &Clause, c2: &Clause, pivot: Var) -> Result<Clause, ResolveError> {
    let sign = |c: &Clause| (c.contains(pivot.pos()), c.contains(pivot.neg()));
    let (p1, n1) = sign(c1);
    let (p2, n2) = sign(c2);
    if !(p1 || n1) || !(p2 || n2) {
        return Err(ResolveError::PivotMissing(pivot));
    }
    if !((p1 && n2) || (n1 && p2)) {
        return Err(ResolveError::PivotSameSign(pivot));
    }
    Ok(c1
        .lits()
        .iter()
        .chain(c2.lits())
        .copied()
        .filter(|l| l.var() != pivot)
        .collect())
}

/// Variables occurring positively in one clause and negatively in the other.
pub fn clashing_vars(c1: &Clause, c2: &Clause) -> Vec<Var> {
    let mut out: Vec<Var> = c1
        .lits()
        .iter()
        .filter(|l| c2.contains(l.negate()))
        .map(|l| l.var())
        .collect();
    out.dedup();
    out
}

/// Antecedent pair with the pivot variable they are resolved on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inference {
    pub left: usize,
    pub right: usize,
    pub pivot: Var,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep {
    pub id: usize,
    pub clause: Clause,
    /// `None` for input clauses.
    pub inference: Option<Inference>,
}

impl ProofStep {
    pub fn is_input(&self) -> bool {
        self.inference.is_none()
    }
}

/// Id-ordered sequence of proof steps; ids run `1..=len`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ResolutionProof {
    steps: Vec<ProofStep>,
}

impl ResolutionProof {
    pub fn new() -> Self {
        ResolutionProof::default()
    }

    /// Takes steps as given; the checker reports any id or antecedent defect.
    pub fn from_steps(steps: Vec<ProofStep>) -> Self {
        ResolutionProof { steps }
    }

    pub fn push_input(&mut self, clause: Clause) -> usize {
        let id = self.steps.len() + 1;
        self.steps.push(ProofStep {
            id,
            clause,
            inference: None,
        });
        id
    }

    /// Appends the resolvent of two existing steps.
    pub fn push_resolvent(&mut self, left: usize, right: usize, pivot: Var) -> Result<usize, ResolveError> {
        let clause = resolve(self.clause(left), self.clause(right), pivot)?;
        let id = self.steps.len() + 1;
        self.steps.push(ProofStep {
            id,
            clause,
            inference: Some(Inference { left, right, pivot }),
        });
        Ok(id)
    }

    pub fn steps(&self) -> &[ProofStep] {
        &self.steps
    }

    pub fn steps_mut(&mut self) -> &mut [ProofStep] {
        &mut self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Clause of step `id` (1-based). Panics on an unknown id.
    pub fn clause(&self, id: usize) -> &Clause {
        &self.steps[id - 1].clause
    }

    pub fn num_inputs(&self) -> usize {
        self.steps.iter().filter(|s| s.is_input()).count()
    }

    pub fn num_derived(&self) -> usize {
        self.len() - self.num_inputs()
    }

    pub fn last_clause(&self) -> Option<&Clause> {
        self.steps.last().map(|s| &s.clause)
    }

    pub fn to_trace(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&s.id.to_string());
            for l in s.clause.lits() {
                out.push(' ');
                out.push_str(&l.to_string());
            }
            match s.inference {
                Some(inf) => out.push_str(&format!(" 0 {} {} 0\n", inf.left, inf.right)),
                None => out.push_str(" 0 0\n"),
            }
        }
        out
    }

    /// Parses a trace. Structure is checked here (ids contiguous from 1,
    /// antecedents earlier than their step, variables within `cnf`); the
    /// pivot is recomputed from the antecedent clauses. Semantic validity is
    /// left to [`check_refutation`].
    pub fn parse_trace(text: &str, cnf: &CnfInstance) -> Result<Self, TraceError> {
        let mut proof = ResolutionProof::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let bad = || TraceError::MalformedTrace(lineno);
            let nums: Vec<i64> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?;
            let (&id, rest) = nums.split_first().ok_or_else(bad)?;
            if id != proof.len() as i64 + 1 {
                return Err(bad());
            }
            let zero = rest.iter().position(|&x| x == 0).ok_or_else(bad)?;
            let (lits, tail) = (&rest[..zero], &rest[zero + 1..]);
            let mut clause_lits = Vec::with_capacity(lits.len());
            for &l in lits {
                if l.unsigned_abs() > cnf.num_vars() as u64 {
                    return Err(bad());
                }
                clause_lits.push(Lit::from_dimacs(l as i32).ok_or_else(bad)?);
            }
            let clause = Clause::new(clause_lits);
            let inference = match tail {
                [0] => None,
                [a, b, 0] => {
                    if *a < 1 || *b < 1 || *a >= id || *b >= id {
                        return Err(bad());
                    }
                    let (a, b) = (*a as usize, *b as usize);
                    let clashes = clashing_vars(proof.clause(a), proof.clause(b));
                    let pivot = clashes
                        .iter()
                        .copied()
                        .find(|&v| !clause.contains(v.pos()) && !clause.contains(v.neg()))
                        .or_else(|| clashes.first().copied())
                        .ok_or_else(bad)?;
                    Some(Inference { left: a, right: b, pivot })
                }
                _ => return Err(bad()),
            };
            proof.steps.push(ProofStep {
                id: id as usize,
                clause,
                inference,
            });
        }
        Ok(proof)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("malformed trace at line {0}")]
    MalformedTrace(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    NotAnInputClause,
    BadResolvent,
    NoEmptyClause,
    DanglingAntecedent,
    /// Step id does not equal its 1-based position.
    IdOutOfOrder,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RejectReason::NotAnInputClause => "not an input clause",
            RejectReason::BadResolvent => "bad resolvent",
            RejectReason::NoEmptyClause => "no empty clause",
            RejectReason::DanglingAntecedent => "dangling antecedent",
            RejectReason::IdOutOfOrder => "id out of order",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("step {step}: {reason}")]
pub struct CheckError {
    /// Offending step id; for `NoEmptyClause` the last step (0 if none).
    pub step: usize,
    pub reason: RejectReason,
}

/// Summary of an accepted refutation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub steps: usize,
    pub derived: usize,
    /// Ids of derived steps whose clause is tautological (legal, but a
    /// generator should never emit them).
    pub tautologies: Vec<usize>,
}

/// Verifies `proof` as a resolution refutation of `cnf`.
///
/// Input steps must be clauses of `cnf` exactly. A derived step must name two
/// earlier steps, its pivot must occur positively in one and negatively in
/// the other, no other variable may clash between them, and its clause must
/// equal their union minus the pivot literals. The last step must be empty.
pub fn check_refutation(cnf: &CnfInstance, proof: &ResolutionProof) -> Result<CheckReport, CheckError> {
    let steps = proof.steps();
    let mut report = CheckReport {
        steps: steps.len(),
        ..CheckReport::default()
    };
    for (pos, step) in steps.iter().enumerate() {
        let id = pos + 1;
        let fail = |reason| Err(CheckError { step: id, reason });
        if step.id != id {
            return fail(RejectReason::IdOutOfOrder);
        }
        let Some(inf) = step.inference else {
            if !cnf.contains(&step.clause) {
                return fail(RejectReason::NotAnInputClause);
            }
            continue;
        };
        report.derived += 1;
        if inf.left == 0 || inf.right == 0 || inf.left >= id || inf.right >= id {
            return fail(RejectReason::DanglingAntecedent);
        }
        let a = &steps[inf.left - 1].clause;
        let b = &steps[inf.right - 1].clause;
        let clashes = clashing_vars(a, b);
        if clashes != [inf.pivot] {
            return fail(RejectReason::BadResolvent);
        }
        match resolve(a, b, inf.pivot) {
            Ok(r) if r == step.clause => {}
            _ => return fail(RejectReason::BadResolvent),
        }
        if step.clause.is_tautology() {
            report.tautologies.push(id);
        }
    }
    match proof.last_clause() {
        Some(c) if c.is_empty() => Ok(report),
        _ => Err(CheckError {
            step: steps.len(),
            reason: RejectReason::NoEmptyClause,
        }),
    }
}

/// True iff no step is used as an antecedent more than once.
pub fn is_tree_like(proof: &ResolutionProof) -> bool {
    let mut uses: HashMap<usize, usize> = HashMap::new();
    for inf in proof.steps().iter().filter_map(|s| s.inference) {
        for ant in [inf.left, inf.right] {
            let count = uses.entry(ant).or_default();
            *count += 1;
            if *count > 1 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(lits: &[i32]) -> Clause {
        Clause::from_dimacs(lits)
    }

    fn unit_pair() -> (CnfInstance, ResolutionProof) {
        let cnf = CnfInstance::new(1, vec![cl(&[1]), cl(&[-1])]).unwrap();
        let mut p = ResolutionProof::new();
        let a = p.push_input(cl(&[1]));
        let b = p.push_input(cl(&[-1]));
        p.push_resolvent(a, b, Var(1)).unwrap();
        (cnf, p)
    }

    #[test]
    fn resolve_examples() {
        assert_eq!(resolve(&cl(&[1, 2]), &cl(&[-1, 3]), Var(1)), Ok(cl(&[2, 3])));
        assert_eq!(resolve(&cl(&[1]), &cl(&[-1]), Var(1)), Ok(Clause::empty()));
        assert_eq!(
            resolve(&cl(&[1, 2]), &cl(&[1, 3]), Var(1)),
            Err(ResolveError::PivotSameSign(Var(1)))
        );
        assert_eq!(
            resolve(&cl(&[1, 2]), &cl(&[3]), Var(1)),
            Err(ResolveError::PivotMissing(Var(1)))
        );
        // tautological resolvents are produced, not refused
        assert_eq!(resolve(&cl(&[1, 2]), &cl(&[-1, -2]), Var(1)), Ok(cl(&[-2, 2])));
    }

    #[test]
    fn accepts_unit_refutation() {
        let (cnf, p) = unit_pair();
        let report = check_refutation(&cnf, &p).unwrap();
        assert_eq!(report.steps, 3);
        assert!(report.tautologies.is_empty());
        assert!(is_tree_like(&p));
    }

    #[test]
    fn missing_empty_clause() {
        let cnf = CnfInstance::new(2, vec![cl(&[1, 2]), cl(&[-1])]).unwrap();
        let mut p = ResolutionProof::new();
        let a = p.push_input(cl(&[1, 2]));
        let b = p.push_input(cl(&[-1]));
        p.push_resolvent(a, b, Var(1)).unwrap();
        assert_eq!(
            check_refutation(&cnf, &p),
            Err(CheckError { step: 3, reason: RejectReason::NoEmptyClause })
        );
        assert_eq!(
            check_refutation(&cnf, &ResolutionProof::new()).unwrap_err().reason,
            RejectReason::NoEmptyClause
        );
    }

    #[test]
    fn rejects_foreign_input() {
        let (cnf, mut p) = unit_pair();
        p.steps_mut()[0].clause = cl(&[1, 2]);
        assert_eq!(check_refutation(&cnf, &p).unwrap_err().reason, RejectReason::NotAnInputClause);
    }

    #[test]
    fn rejects_dangling_and_bad_ids() {
        let (cnf, mut p) = unit_pair();
        p.steps_mut()[2].inference = Some(Inference { left: 1, right: 3, pivot: Var(1) });
        assert_eq!(check_refutation(&cnf, &p).unwrap_err().reason, RejectReason::DanglingAntecedent);
        let (cnf, mut p) = unit_pair();
        p.steps_mut()[1].id = 7;
        assert_eq!(check_refutation(&cnf, &p).unwrap_err().reason, RejectReason::IdOutOfOrder);
    }

    #[test]
    fn rejects_double_clash() {
        // {1,2} and {-1,-2} clash on two variables; their "resolvent" on 1 is
        // a tautology and must be refused.
        let cnf = CnfInstance::new(2, vec![cl(&[1, 2]), cl(&[-1, -2])]).unwrap();
        let mut p = ResolutionProof::new();
        let a = p.push_input(cl(&[1, 2]));
        let b = p.push_input(cl(&[-1, -2]));
        p.push_resolvent(a, b, Var(1)).unwrap();
        assert_eq!(
            check_refutation(&cnf, &p).unwrap_err(),
            CheckError { step: 3, reason: RejectReason::BadResolvent }
        );
    }

    #[test]
    fn rejects_wrong_pivot_or_clause() {
        let (cnf, mut p) = unit_pair();
        p.steps_mut()[2].inference = Some(Inference { left: 1, right: 2, pivot: Var(2) });
        assert_eq!(check_refutation(&cnf, &p).unwrap_err().reason, RejectReason::BadResolvent);
        let (cnf, mut p) = unit_pair();
        p.steps_mut()[2].clause = cl(&[1]);
        assert_eq!(check_refutation(&cnf, &p).unwrap_err().reason, RejectReason::BadResolvent);
    }

    #[test]
    fn tree_like_detection() {
        let cnf = CnfInstance::new(2, vec![cl(&[1, 2]), cl(&[-1, 2]), cl(&[-2])]).unwrap();
        let mut p = ResolutionProof::new();
        let a = p.push_input(cl(&[1, 2]));
        let b = p.push_input(cl(&[-1, 2]));
        let c = p.push_input(cl(&[-2]));
        let d = p.push_resolvent(a, c, Var(2)).unwrap(); // {1}
        let e = p.push_resolvent(b, c, Var(2)).unwrap(); // {-1}, reuses c
        p.push_resolvent(d, e, Var(1)).unwrap();
        check_refutation(&cnf, &p).unwrap();
        assert!(!is_tree_like(&p));
    }

    #[test]
    fn trace_round_trip() {
        let (cnf, p) = unit_pair();
        let text = p.to_trace();
        assert_eq!(text, "1 1 0 0\n2 -1 0 0\n3 0 1 2 0\n");
        let back = ResolutionProof::parse_trace(&text, &cnf).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_trace(), text);
    }

    #[test]
    fn trace_rejections() {
        let (cnf, _) = unit_pair();
        let bad = |t: &str| ResolutionProof::parse_trace(t, &cnf).unwrap_err();
        assert_eq!(bad("1 1 0 0\n2 -1 0 0\n3 0 1 3 0\n"), TraceError::MalformedTrace(3));
        assert_eq!(bad("1 1 0 0\n3 -1 0 0\n"), TraceError::MalformedTrace(2));
        assert_eq!(bad("1 5 0 0\n"), TraceError::MalformedTrace(1));
        assert_eq!(bad("1 1 0\n"), TraceError::MalformedTrace(1));
        assert_eq!(bad("1 1 0 0\n2 1 0 0\n3 1 1 2 0\n"), TraceError::MalformedTrace(3));
        assert_eq!(bad("1 1 0 0\n2 -1 0 0\n3 0 1 2\n"), TraceError::MalformedTrace(3));
    }

    #[test]
    fn trace_without_empty_clause_parses() {
        let cnf = CnfInstance::new(2, vec![cl(&[1, 2]), cl(&[-1])]).unwrap();
        let p = ResolutionProof::parse_trace("1 1 2 0 0\n2 -1 0 0\n3 2 0 1 2 0\n", &cnf).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(check_refutation(&cnf, &p).unwrap_err().reason, RejectReason::NoEmptyClause);
    }
}
