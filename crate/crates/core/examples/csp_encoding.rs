// Encodes a general relational CSP: a ternary "not all equal" constraint
// over a two-element domain.

use std::error::Error;

use hcolor::{dpll_solve, encode_csp, RelStructure, SolveResult};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut domain = RelStructure::new(2);
    let nae = (0..8usize)
        .map(|bits| vec![bits & 1, bits >> 1 & 1, bits >> 2 & 1])
        .filter(|t| !(t[0] == t[1] && t[1] == t[2]));
    domain.add_relation("NAE", 3, nae)?;

    let mut instance = RelStructure::new(4);
    instance.add_relation("NAE", 3, [vec![0, 1, 2], vec![1, 2, 3], vec![0, 2, 3]])?;

    let (cnf, vars) = encode_csp(&instance, &domain)?;
    println!("{} variables, {} clauses", cnf.num_vars(), cnf.num_clauses());
    match dpll_solve(&cnf).0 {
        SolveResult::Sat(model) => {
            let values = vars.decode_assignment(&model).ok_or("model does not decode")?;
            for t in instance.tuples("NAE").unwrap_or_default() {
                let image: Vec<usize> = t.iter().map(|&v| values[v]).collect();
                assert!(domain.holds("NAE", &image));
            }
            println!("solution {values:?}");
        }
        SolveResult::Unsat => println!("no solution"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
