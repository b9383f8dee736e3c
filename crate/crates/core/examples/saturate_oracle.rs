// Compares the DPLL and saturation oracles on small formulas.

use std::error::Error;

use hcolor::saturate::DEFAULT_VAR_BUDGET;
use hcolor::{check_refutation, dpll_solve, gen_php, saturate, Clause, CnfInstance};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let xor_core = CnfInstance::new(
        2,
        vec![
            Clause::from_dimacs(&[1, 2]),
            Clause::from_dimacs(&[-1, 2]),
            Clause::from_dimacs(&[1, -2]),
            Clause::from_dimacs(&[-1, -2]),
        ],
    )?;
    let satisfiable = CnfInstance::new(3, vec![Clause::from_dimacs(&[1, 2]), Clause::from_dimacs(&[-1, 3])])?;

    for (name, cnf) in [("xor", xor_core), ("php(3,2)", gen_php(3, 2)), ("sat", satisfiable)] {
        let (result, stats) = dpll_solve(&cnf);
        print!(
            "{name}: dpll {} ({} decisions, {} conflicts)",
            if result.is_sat() { "SAT" } else { "UNSAT" },
            stats.decisions,
            stats.conflicts
        );
        match saturate(&cnf, DEFAULT_VAR_BUDGET)? {
            Some(proof) => {
                check_refutation(&cnf, &proof)?;
                println!(", saturation refutes in {} steps", proof.len());
            }
            None => println!(", saturation finds no empty clause"),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
