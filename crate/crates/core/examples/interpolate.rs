// Splits an unsatisfiable formula into A and B parts, extracts an
// interpolating circuit and evaluates it on every shared assignment.

use std::collections::BTreeMap;
use std::error::Error;

use hcolor::{interpolate, saturate, Circuit, Clause, CnfInstance, SplitInstance, Var};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // A says x1 and x2 are both forced by x3; B says one of them is false.
    let cnf = CnfInstance::new(
        3,
        vec![
            Clause::from_dimacs(&[3]),
            Clause::from_dimacs(&[-3, 1]),
            Clause::from_dimacs(&[-3, 2]),
            Clause::from_dimacs(&[-1, -2]),
        ],
    )?;
    let split = SplitInstance::new(cnf, [Var(1), Var(2)].into(), vec![0, 1, 2], vec![3]);
    split.validate()?;
    let proof = saturate(&split.cnf, 12)?.ok_or("formula is satisfiable")?;
    let circuit = interpolate(&split, &proof)?;
    print!("{}", circuit.to_text());
    assert_eq!(Circuit::parse(&circuit.to_text())?, circuit);

    for bits in 0..4u8 {
        let alpha: BTreeMap<Var, bool> = [(Var(1), bits & 1 == 1), (Var(2), bits & 2 == 2)].into();
        println!("I(x1={}, x2={}) = {}", alpha[&Var(1)], alpha[&Var(2)], circuit.eval(&alpha)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
