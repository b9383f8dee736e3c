//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hcolor::bipartite::{is_bipartite, BipartiteWitness};
use hcolor::cnf::{Clause, CnfInstance, Lit, Var};
use hcolor::interpolate::{gate_bound, interpolate, SplitInstance};
use hcolor::php::{bench_php, gen_php, to_csv};
use hcolor::proof::{check_refutation, ResolutionProof};
use hcolor::refute::{pipeline, step_bound, Certificate};
use hcolor::saturate::{saturate, DEFAULT_VAR_BUDGET};
use hcolor::solver::{dpll_solve, dpll_solve_with, SolveResult};
use hcolor::{check_homomorphism, encode, find_homomorphism, Graph, Homomorphism};

use common::{all_graphs, bipartite_targets, graphs_up_to, named_non_bipartite};

const SEARCH_LIMIT: u128 = 1 << 20;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// 1. Witness dichotomy over all graphs on 5 labeled vertices, agreeing with
/// exhaustive search for a homomorphism into K_2.
fn witness_dichotomy() -> Outcome {
    let k2 = Graph::complete(2);
    let (mut bip, mut odd) = (0, 0);
    for g in all_graphs(5) {
        let found = find_homomorphism(&g, &k2, SEARCH_LIMIT).map_err(|e| e.to_string())?;
        match is_bipartite(&g) {
            BipartiteWitness::Bipartite(b) => {
                b.validate(&g).map_err(|e| format!("{g:?}: {e}"))?;
                ensure(found.is_some(), || format!("{g:?}: bipartite but no K_2 map"))?;
                bip += 1;
            }
            BipartiteWitness::OddWalk(w) => {
                w.validate(&g).map_err(|e| format!("{g:?}: {e}"))?;
                ensure(found.is_none(), || format!("{g:?}: odd walk but K_2 map found"))?;
                odd += 1;
            }
        }
    }
    ensure(bip + odd == 1024, || format!("enumerated {} graphs", bip + odd))?;
    Ok(format!("1024 graphs: {bip} bipartite, {odd} with odd walks"))
}

fn negative_instances() -> Vec<(String, Graph)> {
    let mut sources: Vec<(String, Graph)> = graphs_up_to(5)
        .filter(|g| !common::is_bip(g))
        .enumerate()
        .map(|(i, g)| (format!("small#{i}"), g))
        .collect();
    sources.extend(named_non_bipartite().into_iter().map(|(n, g)| (n.to_string(), g)));
    sources
}

/// 2. Certified refutations for every non-bipartite source and bipartite
/// target in the suite, within the step bound.
fn certified_refutations() -> Outcome {
    let targets = bipartite_targets();
    let sources = negative_instances();
    let mut count = 0;
    let mut max_ratio = 0f64;
    for (gname, g) in &sources {
        let BipartiteWitness::OddWalk(walk) = is_bipartite(g) else {
            return Err(format!("{gname} unexpectedly bipartite"));
        };
        for (hname, h) in &targets {
            let cert = pipeline(g, h).map_err(|e| format!("{gname}->{hname}: {e}"))?;
            let Certificate::Negative(proof) = cert else {
                return Err(format!("{gname}->{hname}: positive certificate"));
            };
            let (cnf, _) = encode(g, h).unwrap();
            check_refutation(&cnf, &proof).map_err(|e| format!("{gname}->{hname}: {e}"))?;
            let bound = step_bound(walk.len(), h.num_vertices());
            ensure(proof.len() <= bound, || {
                format!("{gname}->{hname}: {} steps > bound {bound}", proof.len())
            })?;
            max_ratio = max_ratio.max(proof.len() as f64 / bound as f64);
            count += 1;
        }
    }
    Ok(format!(
        "{} sources x {} targets = {count} refutations accepted; max steps/bound = {max_ratio:.3}",
        sources.len(),
        targets.len()
    ))
}

/// 3. DPLL on the encoding agrees with homomorphism search; SAT assignments
/// decode to homomorphisms.
fn encoding_correctness() -> Outcome {
    let targets: Vec<Graph> = graphs_up_to(3).collect();
    let mut pairs = 0;
    let mut sat = 0;
    for g in graphs_up_to(4) {
        for h in &targets {
            let (cnf, vm) = encode(&g, h).unwrap();
            let found = find_homomorphism(&g, h, SEARCH_LIMIT).unwrap();
            let (result, _) = dpll_solve(&cnf);
            ensure(result.is_sat() == found.is_some(), || format!("{g:?} -> {h:?}: disagreement"))?;
            if let SolveResult::Sat(a) = result {
                let map = vm
                    .decode_assignment(&a)
                    .ok_or_else(|| format!("{g:?} -> {h:?}: undecodable assignment"))?;
                let ok = check_homomorphism(&g, h, &Homomorphism::new(map)).unwrap();
                ensure(ok, || format!("{g:?} -> {h:?}: decoded map is not a homomorphism"))?;
                sat += 1;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, {sat} satisfiable, all agree"))
}

/// 4. PHP clause sets equal the K_m -> K_n encoding; DPLL conflicts grow
/// strictly with n.
fn php_identity_and_trend() -> Outcome {
    let mut checked = 0;
    for m in 3..=6 {
        for n in 2..m {
            let (enc, _) = encode(&Graph::complete(m), &Graph::complete(n)).unwrap();
            let php = gen_php(m, n);
            ensure(php.clause_set() == enc.clause_set() && php.num_vars() == enc.num_vars(), || {
                format!("PHP^{m}_{n} differs from CNF(K_{m}, K_{n})")
            })?;
            checked += 1;
        }
    }
    let rows = bench_php(4, 9, None).map_err(|e| e.to_string())?;
    ensure(rows.iter().all(|r| !r.sat), || "a PHP row is SAT".into())?;
    for w in rows.windows(2).filter(|w| w[0].holes >= 5) {
        ensure(w[1].conflicts > w[0].conflicts, || {
            format!("conflicts not increasing at n = {}", w[1].holes)
        })?;
    }
    let csv = to_csv(&rows);
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("php_bench.csv");
    std::fs::write(&path, &csv).map_err(|e| e.to_string())?;
    for line in csv.lines() {
        println!("    {line}");
    }
    Ok(format!("{checked} (m, n) identities; growth table written to {}", path.display()))
}

fn random_split(rng: &mut ChaCha8Rng) -> Option<SplitInstance> {
    let np = rng.gen_range(1..=4u32);
    let nq = rng.gen_range(0..=3u32);
    let nr = rng.gen_range(0..=3u32);
    let p: Vec<u32> = (1..=np).collect();
    let q: Vec<u32> = (np + 1..=np + nq).collect();
    let r: Vec<u32> = (np + nq + 1..=np + nq + nr).collect();
    let num_vars = np + nq + nr;

    let side = |rng: &mut ChaCha8Rng, local: &[u32]| -> Vec<Clause> {
        let pool: Vec<u32> = p.iter().chain(local).copied().collect();
        let count = rng.gen_range(1..=5);
        (0..count)
            .map(|_| {
                let width = rng.gen_range(1..=3.min(pool.len()));
                let vars: Vec<u32> = pool.choose_multiple(rng, width).copied().collect();
                Clause::new(vars.into_iter().map(|v| if rng.gen_bool(0.5) { Var(v).pos() } else { Var(v).neg() }))
            })
            .collect()
    };
    let a = side(rng, &q);
    let b = side(rng, &r);

    let mut cnf = CnfInstance::empty(num_vars);
    let (mut ai, mut bi) = (Vec::new(), Vec::new());
    for (clauses, idx) in [(a, &mut ai), (b, &mut bi)] {
        for c in clauses {
            if cnf.try_push(c).is_ok() {
                idx.push(cnf.num_clauses() - 1);
            }
        }
    }
    let s = SplitInstance::new(cnf, p.iter().map(|&v| Var(v)).collect(), ai, bi);
    s.validate().ok()?;
    Some(s)
}

fn side_cnf(s: &SplitInstance, idx: &[usize]) -> CnfInstance {
    let clauses = idx.iter().map(|&i| s.cnf.clauses()[i].clone()).collect();
    CnfInstance::new(s.cnf.num_vars(), clauses).unwrap()
}

/// Exhaustively checks both interpolant implications; returns the gate count.
fn check_interpolant(s: &SplitInstance, proof: &ResolutionProof) -> Result<usize, String> {
    let circuit = interpolate(s, proof).map_err(|e| e.to_string())?;
    let shared: Vec<Var> = s.shared_vars().into_iter().collect();
    ensure(shared.len() <= 12, || "too many shared variables".into())?;
    let a = side_cnf(s, &s.a_clauses);
    let b = side_cnf(s, &s.b_clauses);
    for bits in 0u32..(1 << shared.len()) {
        let alpha: BTreeMap<Var, bool> = shared
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, bits >> i & 1 == 1))
            .collect();
        let units: Vec<Lit> = alpha.iter().map(|(&v, &t)| if t { v.pos() } else { v.neg() }).collect();
        let value = circuit.eval(&alpha).map_err(|e| e.to_string())?;
        let a_sat = dpll_solve_with(&a, &units).0.is_sat();
        let b_sat = dpll_solve_with(&b, &units).0.is_sat();
        ensure(!a_sat || value, || format!("A satisfiable but I = 0 at {alpha:?}"))?;
        ensure(!value || !b_sat, || format!("I = 1 but B satisfiable at {alpha:?}"))?;
    }
    let bound = gate_bound(proof.len(), shared.len());
    ensure(circuit.size() <= bound, || format!("{} gates > bound {bound}", circuit.size()))?;
    Ok(circuit.size())
}

fn hand_splits() -> Vec<(SplitInstance, ResolutionProof)> {
    // A = {q}, {¬q, p}; B = {¬p, r}, {¬r} with p = 1, q = 2, r = 3
    let chain = CnfInstance::new(
        3,
        vec![
            Clause::from_dimacs(&[2]),
            Clause::from_dimacs(&[-2, 1]),
            Clause::from_dimacs(&[-1, 3]),
            Clause::from_dimacs(&[-3]),
        ],
    )
    .unwrap();
    let mut chain_proof = ResolutionProof::new();
    let c1 = chain_proof.push_input(Clause::from_dimacs(&[2]));
    let c2 = chain_proof.push_input(Clause::from_dimacs(&[-2, 1]));
    let c3 = chain_proof.push_input(Clause::from_dimacs(&[-1, 3]));
    let c4 = chain_proof.push_input(Clause::from_dimacs(&[-3]));
    let d1 = chain_proof.push_resolvent(c1, c2, Var(2)).unwrap();
    let d2 = chain_proof.push_resolvent(c3, c4, Var(3)).unwrap();
    chain_proof.push_resolvent(d1, d2, Var(1)).unwrap();

    let pair = CnfInstance::new(1, vec![Clause::from_dimacs(&[1]), Clause::from_dimacs(&[-1])]).unwrap();
    let mut pair_proof = ResolutionProof::new();
    let a = pair_proof.push_input(Clause::from_dimacs(&[1]));
    let b = pair_proof.push_input(Clause::from_dimacs(&[-1]));
    pair_proof.push_resolvent(a, b, Var(1)).unwrap();

    vec![
        (SplitInstance::new(chain, [Var(1)].into(), vec![0, 1], vec![2, 3]), chain_proof),
        (SplitInstance::new(pair, [Var(1)].into(), vec![0], vec![1]), pair_proof),
    ]
}

/// 5. Interpolant contract on hand examples and 100+ random split
/// instances refuted by saturation.
fn interpolation_contract() -> Outcome {
    for (i, (s, proof)) in hand_splits().iter().enumerate() {
        check_interpolant(s, proof).map_err(|e| format!("hand example {i}: {e}"))?;
        let circuit = interpolate(s, proof).unwrap();
        for p in [false, true] {
            let value = circuit.eval(&[(Var(1), p)].into()).unwrap();
            ensure(value == p, || format!("hand example {i}: I({p}) = {value}, expected I = p"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1e57);
    let mut done = 0;
    let mut attempts = 0;
    let mut max_gates = 0;
    while done < 120 {
        attempts += 1;
        ensure(attempts < 100_000, || format!("only {done} refutable instances found"))?;
        let Some(s) = random_split(&mut rng) else { continue };
        if dpll_solve(&s.cnf).0.is_sat() {
            continue;
        }
        let proof = saturate(&s.cnf, DEFAULT_VAR_BUDGET)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| "saturation missed an UNSAT instance".to_string())?;
        let gates = check_interpolant(&s, &proof).map_err(|e| format!("random #{done}: {e}\n{}", s.to_split_text()))?;
        max_gates = max_gates.max(gates);
        done += 1;
    }
    Ok(format!("2 hand + {done} random instances ({attempts} drawn); largest circuit {max_gates} gates"))
}

/// 6. Mutated proofs are rejected; DIMACS and trace text round-trips are
/// byte-identical.
fn kernel_robustness() -> Outcome {
    let mut corpus: Vec<(CnfInstance, ResolutionProof)> = Vec::new();
    for (g, h) in [
        (Graph::complete(3), Graph::complete(2)),
        (Graph::cycle(5), Graph::complete_bipartite(3, 3)),
        (Graph::petersen(), Graph::cycle(6)),
        (Graph::wheel(5), Graph::path(3)),
        (Graph::complete(4), Graph::edgeless(3)),
    ] {
        let Certificate::Negative(p) = pipeline(&g, &h).unwrap() else { unreachable!() };
        corpus.push((encode(&g, &h).unwrap().0, p));
    }
    for (m, n) in [(3, 2), (4, 2)] {
        let cnf = gen_php(m, n);
        let p = saturate(&cnf, DEFAULT_VAR_BUDGET).unwrap().unwrap();
        corpus.push((cnf, p));
    }
    for (cnf, p) in &corpus {
        check_refutation(cnf, p).map_err(|e| format!("corpus proof rejected: {e}"))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut rejected = 0;
    for _ in 0..1000 {
        let (cnf, proof) = corpus.choose(&mut rng).unwrap();
        let candidates: Vec<usize> = proof
            .steps()
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_input() && !s.clause.is_empty())
            .map(|(i, _)| i)
            .collect();
        let pos = *candidates.choose(&mut rng).unwrap();
        let mut mutated = proof.clone();
        let step = &mut mutated.steps_mut()[pos];
        let lits = step.clause.lits().to_vec();
        let flip = rng.gen_range(0..lits.len());
        step.clause = Clause::new(lits.iter().enumerate().map(|(i, &l)| if i == flip { l.negate() } else { l }));
        ensure(check_refutation(cnf, &mutated).is_err(), || format!("mutation at step {} accepted", pos + 1))?;
        rejected += 1;
    }

    for (cnf, proof) in &corpus {
        let canonical = cnf.canonical();
        for inst in [cnf, &canonical] {
            let text = inst.to_dimacs();
            let back = CnfInstance::parse_dimacs(&text).map_err(|e| e.to_string())?;
            ensure(back.to_dimacs() == text, || "DIMACS round-trip differs".into())?;
        }
        let trace = proof.to_trace();
        let back = ResolutionProof::parse_trace(&trace, cnf).map_err(|e| e.to_string())?;
        ensure(back.to_trace() == trace && &back == proof, || "trace round-trip differs".into())?;
    }
    Ok(format!("{rejected}/1000 mutations rejected; {} DIMACS/trace round-trips identical", corpus.len()))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 6] = [
        ("AC1 witness dichotomy (5 vertices, exhaustive)", Duration::from_secs(10), witness_dichotomy),
        ("AC2 certified refutation suite", Duration::from_secs(300), certified_refutations),
        ("AC3 encoding correctness (G<=4, H<=3)", Duration::from_secs(60), encoding_correctness),
        ("AC4 PHP identity and hardness trend", Duration::from_secs(600), php_identity_and_trend),
        ("AC5 interpolation contract", Duration::from_secs(120), interpolation_contract),
        ("AC6 kernel robustness", Duration::from_secs(30), kernel_robustness),
    ];
    let mut failures = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= limit {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS {name} [{elapsed:.2?}]: {msg}"),
            Err(msg) => {
                failures += 1;
                println!("FAIL {name} [{elapsed:.2?}]: {msg}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
