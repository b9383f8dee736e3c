// Encodes `C5 -> K3` as CNF, prints the DIMACS text and decodes a model
// back into a 3-coloring.

use std::error::Error;

use hcolor::{check_homomorphism, dpll_solve, encode, CnfInstance, Graph, Homomorphism, SolveResult};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Graph::cycle(5);
    let h = Graph::complete(3);
    let (cnf, vars) = encode(&g, &h)?;
    let text = cnf.to_dimacs();
    print!("{text}");

    let reparsed = CnfInstance::parse_dimacs(&text)?;
    assert_eq!(reparsed.to_dimacs(), text);

    let SolveResult::Sat(model) = dpll_solve(&cnf).0 else {
        return Err("C5 should be 3-colorable".into());
    };
    let coloring = vars.decode_assignment(&model).ok_or("model does not decode")?;
    assert!(check_homomorphism(&g, &h, &Homomorphism::new(coloring.clone()))?);
    println!("c coloring {coloring:?}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
