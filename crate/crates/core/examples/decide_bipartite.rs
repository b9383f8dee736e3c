// Decides `G -> H` for a few bipartite targets and prints the certificate
// that backs each answer.

use std::error::Error;

use hcolor::{check_homomorphism, check_refutation, encode, pipeline, Certificate, Graph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cases = [
        ("C6", Graph::cycle(6), "K2", Graph::complete(2)),
        ("C5", Graph::cycle(5), "C4", Graph::cycle(4)),
        ("PETERSEN", Graph::petersen(), "K3,3", Graph::complete_bipartite(3, 3)),
        ("E4", Graph::edgeless(4), "E2", Graph::edgeless(2)),
        ("P4", Graph::path(4), "E3", Graph::edgeless(3)),
    ];
    for (gname, g, hname, h) in cases {
        match pipeline(&g, &h)? {
            Certificate::Positive(f) => {
                assert!(check_homomorphism(&g, &h, &f)?);
                println!("{gname} -> {hname}: yes, map {:?}", f.map());
            }
            Certificate::Negative(proof) => {
                let (cnf, _) = encode(&g, &h)?;
                let report = check_refutation(&cnf, &proof)?;
                println!(
                    "{gname} -> {hname}: no, refutation with {} steps ({} derived)",
                    report.steps, report.derived
                );
            }
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
